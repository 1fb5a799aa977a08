#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ornlat/digraph.hpp"
#include "ornlat/ornament.hpp"
#include "ornlat/poset.hpp"

namespace ornlat {

using EdgeMask = std::uint64_t;  // bit i <-> ambient.edges()[i] reversed

// Reorientation of a transitively closed increasing digraph: the ambient plus
// the set of reversed edges. The oriented view sends (u,v) to v->u when reversed.
struct Reorientation {
  Digraph ambient;
  EdgeMask rev = 0;

  bool reversed(int u, int v) const;
  std::vector<Edge> rev_edges() const;
  bool operator==(const Reorientation& o) const { return ambient == o.ambient && rev == o.rev; }
};

Reorientation make_reorientation(const Digraph& ambient, const std::vector<Edge>& rev);

bool is_acyclic_reorientation(const Reorientation& r);
// Deterministic directed cycle of the oriented view, when one exists.
std::optional<std::vector<int>> reorientation_cycle(const Reorientation& r);

bool is_transitively_closed(const Reorientation& r);
bool is_transitively_coclosed(const Reorientation& r);
bool is_transitively_biclosed(const Reorientation& r);

Ornamentation orn_of_reorientation(const Digraph& d, const Reorientation& r);
Reorientation reori_of_ornamentation(const Digraph& d, const Ornamentation& o);
// Maximum of the whole fiber of o under R -> orn{R}; tree ambient required.
Reorientation maxreori_of_ornamentation(const Digraph& t, const Ornamentation& o);

Reorientation areori_of_permutation(const Digraph& e, const std::vector<int>& perm);
std::vector<std::vector<int>> linear_extensions(const Reorientation& r);

std::vector<EdgeMask> enumerate_reorientations(const Digraph& e);
std::vector<EdgeMask> enumerate_acyclic_reorientations(const Digraph& e);

FinitePoset areori_poset(const Digraph& e);
// Lattice criterion (transitive reduction of every induced subgraph is a forest),
// cross-checked against the order-theoretic verdict.
bool areori_is_lattice(const Digraph& e);
Reorientation areori_join(const Reorientation& r1, const Reorientation& r2);
Reorientation areori_meet(const Reorientation& r1, const Reorientation& r2);

std::vector<EdgeMask> enumerate_closure_masks(const Digraph& e, bool need_closed,
                                              bool need_coclosed);
FinitePoset rcl_poset(const Digraph& e);
FinitePoset rco_poset(const Digraph& e);
FinitePoset rbi_poset(const Digraph& e);

struct QuotientReport {
  bool passed = true;
  long long pairs_checked = 0;
  std::string failure;  // first counterexample, empty when passed
};
// For an unstarred tree: R -> orn{R} preserves every meet and join of the
// acyclic reorientation lattice; also re-checks the meet-morphism property on
// transitively closed reorientations.
QuotientReport quotient_check_unstarred(const Digraph& t);
// Meet-morphism of R -> orn{R} on transitively closed reorientations, any digraph.
QuotientReport rcl_meet_morphism_check(const Digraph& d);

std::string reorientation_key(const Reorientation& r);
std::string reorientation_to_json(const Reorientation& r);
Reorientation reorientation_from_json(const std::string& text);
std::string reorientation_to_dot(const Reorientation& r);

}  // namespace ornlat
