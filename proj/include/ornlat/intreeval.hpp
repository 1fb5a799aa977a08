#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ornlat/digraph.hpp"
#include "ornlat/ornament.hpp"
#include "ornlat/sourcing.hpp"

namespace ornlat {

// Subhypergraph of the path hypergraph of an increasing tree.
struct IntreevalHypergraph {
  Digraph tree;
  Hypergraph hyper;
};

IntreevalHypergraph make_intreeval(const Digraph& tree,
                                   std::vector<std::vector<int>> hyperedges);

struct PicResult {
  bool ok = true;
  int i = -1, j = -1;  // counterexample hyperedge indices when !ok
};
PicResult is_path_intersection_closed(const IntreevalHypergraph& ii);
bool is_intersection_closed(const IntreevalHypergraph& ii);

// Undirected graph on the in-neighbors of u and out-neighbors of v, joined
// when some hyperedge contains both.
struct StarGraph {
  int u = 0, v = 0;
  std::vector<int> in_nodes, out_nodes;
  std::vector<Edge> edges;
};
StarGraph star_graph(const IntreevalHypergraph& ii, int u, int v);

struct StarSparseResult {
  bool ok = true;
  int u = 0, v = 0;
  std::vector<int> cycle;  // alternating u_1, v_1, ..., u_p, v_p when !ok
};
StarSparseResult is_star_sparse(const IntreevalHypergraph& ii);

// Lengths of the inclusion-minimal hyperedge cycles of s, sorted.
std::vector<int> minimal_cycle_lengths(const IntreevalHypergraph& ii, const Sourcing& s);

// Restriction of sour{O} to the hyperedges of ii.
Sourcing sour_restricted(const IntreevalHypergraph& ii, const Ornamentation& o);

// Fiber endpoints of O -> sour_restricted(ii, O) over an acyclic sourcing.
Ornamentation minorn(const IntreevalHypergraph& ii, const Sourcing& s);
Ornamentation maxorn(const IntreevalHypergraph& ii, const Sourcing& s);

// Explicit join/meet of acyclic sourcings; requires ii path intersection
// closed and star sparse.
Sourcing asour_join(const IntreevalHypergraph& ii, const std::vector<Sourcing>& sourcings);
Sourcing asour_meet(const IntreevalHypergraph& ii, const std::vector<Sourcing>& sourcings);

struct CharacterizationReport {
  bool passed = true;
  long long hypergraphs = 0;
  long long lattices = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::vector<std::string> discrepancies;
};
// Sweeps subhypergraphs of P(t) and checks: ASour(ii) lattice <=> PIC and star
// sparse; when a lattice, the join/meet formulas match the order-theoretic
// bounds on every pair. sample = 0 means exhaustive (refused when |P(t)| > 16).
CharacterizationReport characterization_check(const Digraph& t, std::size_t sample = 0,
                                              std::uint64_t seed = 0);

}  // namespace ornlat
