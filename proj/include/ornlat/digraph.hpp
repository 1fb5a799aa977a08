#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ornlat/bitset.hpp"
#include "ornlat/errors.hpp"

namespace ornlat {

using Edge = std::pair<int, int>;

// Directed graph on vertices [n] (1-based), at most 64 vertices.
// Edges are stored sorted lexicographically, without duplicates or loops.
class Digraph {
public:
  Digraph() = default;
  Digraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return vhas(out_[u], v); }
  Vset out(int v) const { return out_[v]; }
  Vset in(int v) const { return in_[v]; }
  int edge_index(int u, int v) const;  // position in edges(), -1 if absent

  // All vertices with a directed path to v (v included), restricted to mask.
  Vset reach_to(int v, Vset within) const;
  Vset reach_to(int v) const;
  // All vertices reachable from u (u included).
  Vset reach_from(int u) const;

  bool operator==(const Digraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vset> out_, in_;  // 1-based, index 0 unused
};

// Hypergraph on [n]: hyperedges of size >= 2, each sorted, list sorted, no duplicates.
class Hypergraph {
public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<std::vector<int>> hyperedges);

  int n() const { return n_; }
  int size() const { return int(sets_.size()); }
  const std::vector<std::vector<int>>& hyperedges() const { return lists_; }
  const std::vector<int>& hyperedge(int i) const { return lists_[i]; }
  Vset hyperedge_set(int i) const { return sets_[i]; }
  int index_of(Vset h) const;  // -1 if absent

  bool operator==(const Hypergraph& o) const { return n_ == o.n_ && lists_ == o.lists_; }

private:
  int n_ = 0;
  std::vector<std::vector<int>> lists_;
  std::vector<Vset> sets_;
};

Digraph transitive_closure(const Digraph& d);
Hypergraph path_hypergraph(const Digraph& d);

bool is_increasing(const Digraph& d);
bool is_tree(const Digraph& d);         // underlying undirected graph is a tree
bool is_rooted_tree(const Digraph& d);  // tree with all out-degrees <= 1

struct TreeOrder {
  enum Relation { Leq, Geq, Incomparable } relation;
  std::vector<int> path;  // directed path between the two, empty if incomparable
};
// Comparability of u and v in the tree order of t; throws NotATreeError.
TreeOrder tree_order(const Digraph& t, int u, int v);

Vset down_set(const Digraph& d, int v);  // {u : u has a directed path to v}, v included

struct TreeClass {
  bool starred;
  Edge witness;  // (u,v) with indeg(u)>=2, outdeg(v)>=2, u <=_T v; (0,0) if unstarred
};
TreeClass classify_tree(const Digraph& t);

// Whether e contains an induced alternating cycle (u_1,v_1,...,u_k,v_k), k >= 2:
// the only edges among those 2k vertices are (u_i,v_i) and (u_{i+1},v_i).
bool has_induced_alternating_cycle(const Digraph& e);

// Five-vertex configuration equivalent to starredness on tree closures:
// distinct a,b,c,d,e with (a,c),(b,c),(c,d),(c,e) edges and a,b as well as
// d,e mutually non-adjacent.
bool has_bowtie_configuration(const Digraph& e);

std::string digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const std::string& text);
std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

}  // namespace ornlat
