#include <doctest.h>

#include <algorithm>
#include <set>

#include "ornlat/enumerate.hpp"
#include "ornlat/fixtures.hpp"
#include "ornlat/ornament.hpp"
#include "ornlat/polytope.hpp"

using namespace ornlat;

TEST_CASE("vertex cloud of a single segment") {
  Hypergraph h(2, {{1, 2}});
  VertexCloud cloud = hypergraphic_vertices(h);
  CHECK(cloud.points.size() == 2);
  CHECK(skeleton(cloud.points).size() == 1);
}

TEST_CASE("skeleton of a square has no diagonals") {
  std::vector<LatticePoint> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto edges = skeleton(square);
  CHECK(edges.size() == 4);
  for (auto [a, b] : edges) CHECK(square[a] != square[b]);
  std::set<std::pair<int, int>> got(edges.begin(), edges.end());
  CHECK(!got.count({0, 3}));  // (0,0)-(1,1)
  CHECK(!got.count({1, 2}));  // (1,0)-(0,1)
  CHECK_THROWS_AS(skeleton({{0, 0}, {0, 0}}), DegenerateInputError);
}

TEST_CASE("pentagon skeleton of the 3-path hypergraphic polytope") {
  VertexCloud cloud = hypergraphic_vertices(path_hypergraph(fixtures::increasing_path(3)));
  CHECK(cloud.points.size() == 5);
  auto edges = skeleton(cloud.points);
  CHECK(edges.size() == 5);
  // each vertex has degree 2
  std::vector<int> degree(5, 0);
  for (auto [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  for (int d : degree) CHECK(d == 2);
}

TEST_CASE("permutahedron cloud from the complete graph") {
  // pairs of [n] as a hypergraph; acyclic sourcings <-> permutations
  for (int n = 3; n <= 4; ++n) {
    std::vector<std::vector<int>> pairs;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    Hypergraph h(n, pairs);
    VertexCloud cloud = hypergraphic_vertices(h);
    CHECK(BigInt(cloud.points.size()) == factorial(n));
    auto edges = skeleton(cloud.points);
    std::vector<int> degree(cloud.points.size(), 0);
    for (auto [a, b] : edges) {
      ++degree[a];
      ++degree[b];
    }
    for (int d : degree) CHECK(d == n - 1);  // adjacent transpositions
  }
}

TEST_CASE("oriented skeleton of a segment is a 2-chain") {
  FinitePoset p = oriented_skeleton_poset(Hypergraph(2, {{1, 2}}));
  CHECK(p.size() == 2);
  CHECK(p.covers().size() == 1);
}

TEST_CASE("oriented skeleton of the 3-path matches the ornamentation lattice") {
  FinitePoset skel = oriented_skeleton_poset(path_hypergraph(fixtures::increasing_path(3)));
  CHECK(poset_isomorphic(skel, orn_poset(fixtures::increasing_path(3))));
}

TEST_CASE("oriented zonotope skeleton of the 3-path is the weak order") {
  // tc(I_3) as a pair hypergraph: the hexagon
  Digraph e = transitive_closure(fixtures::increasing_path(3));
  std::vector<std::vector<int>> pairs;
  for (auto [u, v] : e.edges()) pairs.push_back({u, v});
  FinitePoset skel = oriented_skeleton_poset(Hypergraph(3, pairs));
  CHECK(skel.size() == 6);
  FinitePoset areori = asour_poset(Hypergraph(3, pairs));
  CHECK(poset_isomorphic(skel, areori));
}

TEST_CASE("oriented skeletons have the extreme sourcings as source and sink") {
  for (const auto& t : {fixtures::increasing_path(4), broom(2, 1), comb(2)}) {
    Hypergraph h = path_hypergraph(t);
    FinitePoset skel = oriented_skeleton_poset(h);
    REQUIRE(skel.bottom().has_value());
    REQUIRE(skel.top().has_value());
    Sourcing lo{{}}, hi{{}};
    for (int i = 0; i < h.size(); ++i) {
      lo.source.push_back(h.hyperedge(i).front());
      hi.source.push_back(h.hyperedge(i).back());
    }
    CHECK(skel.key(*skel.bottom()) == sourcing_key(lo));
    CHECK(skel.key(*skel.top()) == sourcing_key(hi));
  }
}

TEST_CASE("realization checks on the pinned unstarred instances") {
  CHECK(realization_check(fixtures::increasing_path(3)).passed);
  CHECK(realization_check(broom(2, 1)).passed);
  auto c2 = realization_check(comb(2));
  CHECK(c2.passed);
  CHECK(orn_poset(comb(2)).size() == 10);
}

TEST_CASE("point cloud json and skeleton dot") {
  Hypergraph h = path_hypergraph(fixtures::increasing_path(3));
  CHECK(point_cloud_to_json(hypergraphic_vertices(h)).find("\"points\"") != std::string::npos);
  CHECK(oriented_skeleton_to_dot(h).find("->") != std::string::npos);
}
