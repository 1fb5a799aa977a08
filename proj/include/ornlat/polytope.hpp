#pragma once

#include <string>
#include <vector>

#include "ornlat/digraph.hpp"
#include "ornlat/poset.hpp"
#include "ornlat/sourcing.hpp"

namespace ornlat {

using LatticePoint = std::vector<int>;

struct VertexCloud {
  std::vector<Sourcing> sourcings;  // aligned with points
  std::vector<LatticePoint> points;
};

// One point per acyclic sourcing of h; coordinate v counts the hyperedges
// sourced at v. The point map must be injective.
VertexCloud hypergraphic_vertices(const Hypergraph& h, std::size_t guard = 1'000'000);

// Skeleton of the convex hull of points in convex position: (p,q) is an edge
// iff the midpoint is not a convex combination of the remaining points,
// decided by exact rational feasibility with Bland's rule.
std::vector<std::pair<int, int>> skeleton(const std::vector<LatticePoint>& points);

// Orients each skeleton edge from the endpoint with larger <omega, .> to the
// smaller one (omega = (n-1, n-3, ..., 1-n)), so the componentwise-minimal
// sourcing becomes the unique source. Returns the transitive closure as a
// poset on the sourcings. A zero scalar product on an edge is an error.
FinitePoset oriented_skeleton_poset(const Hypergraph& h, std::size_t guard = 1'000'000);

struct RealizationReport {
  bool passed = true;
  std::vector<std::string> failures;
};
// For an unstarred increasing tree: the oriented skeleton poset of the path
// hypergraphic polytope is isomorphic to the ornamentation lattice, and the
// graphical zonotope skeleton of tc(t) matches the Hasse diagram of the
// acyclic reorientation poset (the latter for every increasing tree).
RealizationReport realization_check(const Digraph& t);

std::string point_cloud_to_json(const VertexCloud& cloud);
std::string oriented_skeleton_to_dot(const Hypergraph& h, std::size_t guard = 1'000'000);

}  // namespace ornlat
