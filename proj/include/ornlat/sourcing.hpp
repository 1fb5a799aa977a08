#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ornlat/digraph.hpp"
#include "ornlat/ornament.hpp"
#include "ornlat/poset.hpp"
#include "ornlat/reorient.hpp"

namespace ornlat {

// One source vertex per hyperedge, aligned with the hypergraph's canonical
// hyperedge order.
struct Sourcing {
  std::vector<int> source;

  int operator()(int i) const { return source[i]; }
  bool operator==(const Sourcing& o) const { return source == o.source; }
  bool operator<(const Sourcing& o) const { return source < o.source; }
};

void validate_sourcing(const Hypergraph& h, const Sourcing& s);

// Acyclicity via the hyperedge-level digraph (arc H -> H' iff S(H) in H'\{S(H')}),
// cross-checked against the vertex-level digraph with arcs (h, S(H)).
bool is_acyclic_sourcing(const Hypergraph& h, const Sourcing& s);
// Shortest hyperedge-level cycle (as hyperedge indices), when one exists.
std::optional<std::vector<int>> sourcing_cycle(const Hypergraph& h, const Sourcing& s);

std::vector<Sourcing> enumerate_sourcings(const Hypergraph& h,
                                          std::size_t guard = 1'000'000);
std::vector<Sourcing> enumerate_acyclic_sourcings(const Hypergraph& h,
                                                  std::size_t guard = 1'000'000);

FinitePoset sour_poset(const Hypergraph& h, std::size_t guard = 1'000'000);
FinitePoset asour_poset(const Hypergraph& h, std::size_t guard = 1'000'000);

bool sour_leq(const Sourcing& a, const Sourcing& b);

// rev(S): pairs (u,v) such that some path from u to v is sourced at v.
std::vector<Edge> rev_of_sourcing(const Digraph& d, const Sourcing& s);
Reorientation reori_of_sourcing(const Digraph& d, const Sourcing& s);

Ornamentation orn_of_sourcing(const Digraph& d, const Sourcing& s);
Sourcing sour_of_ornamentation(const Digraph& d, const Ornamentation& o);

Sourcing asour_of_reorientation(const Digraph& d, const Reorientation& r);
Reorientation areori_of_sourcing(const Digraph& d, const Sourcing& s);
// arr(S): pairs (u, S(P)) over paths P containing u, u != S(P).
std::vector<Edge> arr_of_sourcing(const Digraph& d, const Sourcing& s);

// Each hyperedge sourced at its earliest member in one-line order; always acyclic.
Sourcing asour_of_permutation(const Hypergraph& h, const std::vector<int>& perm);

struct IsomorphismReport {
  bool passed = true;
  std::string failure;
};
// S -> orn{S} restricted to acyclic sourcings is an order isomorphism onto AOrn(d).
IsomorphismReport asour_aorn_isomorphism_check(const Digraph& d,
                                               std::size_t guard = 1'000'000);

std::string sourcing_key(const Sourcing& s);
std::string sourcing_to_json(const Hypergraph& h, const Sourcing& s);
Sourcing sourcing_from_json(const Hypergraph& h, const std::string& text);

}  // namespace ornlat
