#include "ornlat/digraph.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace ornlat {

Digraph::Digraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > 64) throw SizeGuardError("digraph: vertex count must be in [0,64]");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u < 1 || u > n || v < 1 || v > n) throw Error("digraph: edge endpoint out of range");
    if (u == v) throw Error("digraph: self-loop forbidden");
    if (i > 0 && edges_[i] == edges_[i - 1]) throw Error("digraph: duplicate edge");
  }
  out_.assign(n + 1, 0);
  in_.assign(n + 1, 0);
  for (auto [u, v] : edges_) {
    out_[u] |= vbit(v);
    in_[v] |= vbit(u);
  }
}

int Digraph::edge_index(int u, int v) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return int(it - edges_.begin());
}

Vset Digraph::reach_to(int v, Vset within) const {
  Vset seen = vbit(v) & within;
  if (!seen) return 0;
  Vset frontier = seen;
  while (frontier) {
    Vset next = 0;
    vfor_each(frontier, [&](int w) { next |= in_[w] & within; });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

Vset Digraph::reach_to(int v) const { return reach_to(v, n_ ? (~Vset{0} >> (64 - n_)) : 0); }

Vset Digraph::reach_from(int u) const {
  Vset seen = vbit(u);
  Vset frontier = seen;
  while (frontier) {
    Vset next = 0;
    vfor_each(frontier, [&](int w) { next |= out_[w]; });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> hyperedges)
    : n_(n), lists_(std::move(hyperedges)) {
  if (n < 0 || n > 64) throw SizeGuardError("hypergraph: vertex count must be in [0,64]");
  for (auto& h : lists_) {
    std::sort(h.begin(), h.end());
    if (h.size() < 2) throw Error("hypergraph: hyperedge of size < 2");
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] < 1 || h[i] > n) throw Error("hypergraph: vertex out of range");
      if (i > 0 && h[i] == h[i - 1]) throw Error("hypergraph: repeated vertex in hyperedge");
    }
  }
  std::sort(lists_.begin(), lists_.end());
  for (std::size_t i = 1; i < lists_.size(); ++i)
    if (lists_[i] == lists_[i - 1]) throw Error("hypergraph: duplicate hyperedge");
  sets_.reserve(lists_.size());
  for (auto& h : lists_) {
    Vset s = 0;
    for (int v : h) s |= vbit(v);
    sets_.push_back(s);
  }
}

int Hypergraph::index_of(Vset h) const {
  for (int i = 0; i < size(); ++i)
    if (sets_[i] == h) return i;
  return -1;
}

Digraph transitive_closure(const Digraph& d) {
  std::vector<Edge> closure;
  for (int u = 1; u <= d.n(); ++u) {
    Vset r = d.reach_from(u) & ~vbit(u);
    vfor_each(r, [&](int v) { closure.push_back({u, v}); });
  }
  return Digraph(d.n(), std::move(closure));
}

Hypergraph path_hypergraph(const Digraph& d) {
  // Collect vertex sets of all directed paths with >= 2 vertices.
  std::vector<Vset> found;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int v, Vset used) -> void {
    if (vcount(used) >= 2) found.push_back(used);
    vfor_each(d.out(v) & ~used, [&](int w) { self(self, w, used | vbit(w)); });
  };
  for (int u = 1; u <= d.n(); ++u) dfs(dfs, u, vbit(u));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::vector<int>> lists;
  for (Vset s : found) {
    std::vector<int> h;
    vfor_each(s, [&](int v) { h.push_back(v); });
    lists.push_back(std::move(h));
  }
  return Hypergraph(d.n(), std::move(lists));
}

bool is_increasing(const Digraph& d) {
  for (auto [u, v] : d.edges())
    if (u >= v) return false;
  return true;
}

bool is_tree(const Digraph& d) {
  int n = d.n();
  if (n == 0) return false;
  if (int(d.edges().size()) != n - 1) return false;
  // connectivity of the underlying undirected graph
  Vset seen = vbit(1), frontier = seen;
  while (frontier) {
    Vset next = 0;
    vfor_each(frontier, [&](int v) { next |= d.out(v) | d.in(v); });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return vcount(seen) == n;
}

bool is_rooted_tree(const Digraph& d) {
  if (!is_tree(d)) return false;
  for (int v = 1; v <= d.n(); ++v)
    if (vcount(d.out(v)) > 1) return false;
  return true;
}

TreeOrder tree_order(const Digraph& t, int u, int v) {
  if (!is_tree(t)) throw NotATreeError("tree_order: input is not a directed tree");
  auto directed_path = [&](int a, int b) -> std::optional<std::vector<int>> {
    // unique directed path a -> b in a tree, if any
    std::vector<int> parent(t.n() + 1, 0);
    std::vector<int> queue{a};
    Vset seen = vbit(a);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int w = queue[q];
      if (w == b) {
        std::vector<int> path;
        for (int x = b; x != a; x = parent[x]) path.push_back(x);
        path.push_back(a);
        std::reverse(path.begin(), path.end());
        return path;
      }
      vfor_each(t.out(w) & ~seen, [&](int x) {
        parent[x] = w;
        seen |= vbit(x);
        queue.push_back(x);
      });
    }
    return std::nullopt;
  };
  if (u == v) return {TreeOrder::Leq, {u}};
  if (auto p = directed_path(u, v)) return {TreeOrder::Leq, *p};
  if (auto p = directed_path(v, u)) return {TreeOrder::Geq, *p};
  return {TreeOrder::Incomparable, {}};
}

Vset down_set(const Digraph& d, int v) { return d.reach_to(v); }

TreeClass classify_tree(const Digraph& t) {
  if (!is_tree(t)) throw NotATreeError("classify_tree: input is not a directed tree");
  for (int u = 1; u <= t.n(); ++u) {
    if (vcount(t.in(u)) < 2) continue;
    Vset below = t.reach_from(u);
    for (int v = 1; v <= t.n(); ++v)
      if (vhas(below, v) && vcount(t.out(v)) >= 2) return {true, {u, v}};
  }
  return {false, {0, 0}};
}

bool has_induced_alternating_cycle(const Digraph& e) {
  int n = e.n();
  if (n > 24) throw SizeGuardError("has_induced_alternating_cycle: n > 24");
  // A subset induces an alternating cycle iff inside it every vertex has degree
  // pattern (in,out) = (0,2) or (2,0), the edge count matches, and it is connected.
  for (Vset s = 0; s < (Vset{1} << n); ++s) {
    int size = vcount(s);
    if (size < 4 || size % 2) continue;
    int edge_count = 0;
    bool ok = true;
    vfor_each(s, [&](int v) {
      int din = vcount(e.in(v) & s), dout = vcount(e.out(v) & s);
      edge_count += dout;
      if (!((din == 0 && dout == 2) || (din == 2 && dout == 0))) ok = false;
    });
    if (!ok || edge_count != size) continue;
    Vset seen = vbit(vmin(s)), frontier = seen;
    while (frontier) {
      Vset next = 0;
      vfor_each(frontier, [&](int v) { next |= (e.out(v) | e.in(v)) & s; });
      frontier = next & ~seen;
      seen |= frontier;
    }
    if (seen == s) return true;
  }
  return false;
}

bool has_bowtie_configuration(const Digraph& e) {
  int n = e.n();
  auto adj = [&](int x, int y) { return e.has_edge(x, y) || e.has_edge(y, x); };
  for (int c = 1; c <= n; ++c)
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        if (!e.has_edge(a, c) || !e.has_edge(b, c) || adj(a, b)) continue;
        for (int d = 1; d <= n; ++d)
          for (int f = d + 1; f <= n; ++f) {
            if (d == a || d == b || f == a || f == b) continue;
            if (e.has_edge(c, d) && e.has_edge(c, f) && !adj(d, f)) return true;
          }
      }
  return false;
}

std::string digraph_to_json(const Digraph& d) {
  nlohmann::json j;
  j["n"] = d.n();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : d.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

Digraph digraph_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Edge> edges;
  for (auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return Digraph(j.at("n").get<int>(), std::move(edges));
}

std::string hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["n"] = h.n();
  j["hyperedges"] = h.hyperedges();
  return j.dump();
}

Hypergraph hypergraph_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return Hypergraph(j.at("n").get<int>(),
                    j.at("hyperedges").get<std::vector<std::vector<int>>>());
}

}  // namespace ornlat
