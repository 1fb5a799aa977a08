#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ornlat/digraph.hpp"
#include "ornlat/poset.hpp"

namespace ornlat {

// Assignment of an ornament to every vertex of an ambient digraph on [n]:
// v is in at[v], every member of at[v] reaches v inside at[v], and
// u in at[v] implies at[u] subset of at[v].
struct Ornamentation {
  int n = 0;
  std::vector<Vset> at;  // 1-based, at[0] unused

  Vset operator()(int v) const { return at[v]; }
  bool operator==(const Ornamentation& o) const { return n == o.n && at == o.at; }
  bool operator<(const Ornamentation& o) const { return at < o.at; }
};

std::vector<Vset> ornaments_at(const Digraph& d, int v);
// Largest ornament at v contained in `within` (which must contain v).
Vset largest_ornament_within(const Digraph& d, int v, Vset within);

bool is_ornamentation(const Digraph& d, const Ornamentation& o);
void validate_ornamentation(const Digraph& d, const Ornamentation& o);

Ornamentation minimal_ornamentation(const Digraph& d);
Ornamentation maximal_ornamentation(const Digraph& d);

std::vector<Ornamentation> enumerate_ornamentations(const Digraph& d,
                                                    std::size_t guard = 2'000'000);

bool orn_leq(const Ornamentation& a, const Ornamentation& b);
Ornamentation orn_meet(const Digraph& d, const Ornamentation& a, const Ornamentation& b);
Ornamentation orn_join(const Digraph& d, const Ornamentation& a, const Ornamentation& b);

struct OrnCover {
  Ornamentation lo, hi;
  Edge witness;  // the pair (u,v) with hi(v) = lo(u) | lo(v)
};
// Cover relations of Orn(d) by the local criterion (unique witness on trees).
std::vector<OrnCover> cover_relations(const Digraph& d, std::size_t guard = 2'000'000);

// Join and meet irreducible ornamentations of a directed tree, indexed by a
// directed path given as its vertex sequence.
Ornamentation jp(const Digraph& t, const std::vector<int>& path);
Ornamentation mp(const Digraph& t, const std::vector<int>& path);

// Ornamentation induced by a set of reversed pairs: each vertex gets the largest
// ornament inside the set of vertices with a directed path to it in `rev`.
Ornamentation orn_from_reversed_pairs(const Digraph& d, const std::vector<Edge>& rev);

// All acyclic ornamentations of an increasing digraph (images of the acyclic
// reorientations of tc(d)); guard bounds the n! permutation sweep.
std::vector<Ornamentation> acyclic_ornamentations(const Digraph& d, int guard_n = 9);
bool is_acyclic_ornamentation(const Digraph& d, const Ornamentation& o, int guard_n = 9);

FinitePoset orn_poset(const Digraph& d, std::size_t guard = 2'000'000);
FinitePoset aorn_poset(const Digraph& d, int guard_n = 9);

std::string orn_key(const Ornamentation& o);
std::string orn_to_json(const Ornamentation& o);
Ornamentation orn_from_json(const std::string& text);

}  // namespace ornlat
