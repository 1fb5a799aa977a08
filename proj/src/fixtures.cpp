#include "ornlat/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ornlat/enumerate.hpp"

namespace ornlat {
namespace fixtures {

Digraph increasing_path(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Digraph(n, std::move(edges));
}

Digraph x_graph() { return Digraph(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}}); }
Digraph diamond() { return Digraph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }
Digraph r_graph() { return Digraph(5, {{1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 4}}); }

std::vector<std::string> names() {
  return {"I2", "I3", "I4", "I5", "I6", "X", "diamond", "R", "broom(m,n)", "comb(n)"};
}

Digraph by_name(const std::string& name) {
  if (name == "X") return x_graph();
  if (name == "diamond") return diamond();
  if (name == "R") return r_graph();
  if (name.size() >= 2 && name[0] == 'I') return increasing_path(std::stoi(name.substr(1)));
  if (name.rfind("broom(", 0) == 0) {
    auto comma = name.find(',');
    int m = std::stoi(name.substr(6, comma - 6));
    int n = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
    return broom(m, n);
  }
  if (name.rfind("comb(", 0) == 0)
    return comb(std::stoi(name.substr(5, name.size() - 6)));
  throw Error("unknown fixture: " + name);
}

std::vector<Digraph> increasing_trees(int n) {
  if (n <= 0) return {Digraph(std::max(n, 0), {})};
  if (n == 1) return {Digraph(1, {})};
  if (n == 2) return {Digraph(2, {{1, 2}})};
  // Labeled trees from Pruefer sequences, oriented small -> large.
  std::vector<Digraph> out;
  std::vector<int> seq(n - 2, 1);
  while (true) {
    std::vector<int> degree(n + 1, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    std::vector<int> code = seq;
    std::vector<bool> used(n + 1, false);
    for (int x : code) {
      int leaf = -1;
      for (int v = 1; v <= n; ++v)
        if (degree[v] == 1 && !used[v]) {
          leaf = v;
          break;
        }
      used[leaf] = true;
      edges.push_back({std::min(leaf, x), std::max(leaf, x)});
      --degree[x];
    }
    std::vector<int> last;
    for (int v = 1; v <= n; ++v)
      if (!used[v] && degree[v] == 1) last.push_back(v);
    edges.push_back({std::min(last[0], last[1]), std::max(last[0], last[1])});
    out.push_back(Digraph(n, std::move(edges)));
    // next sequence
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n) {
      seq[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

bool digraph_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.n() != b.n() || a.edges().size() != b.edges().size()) return false;
  int n = a.n();
  // degree-sequence filter
  auto profile = [](const Digraph& d) {
    std::vector<std::pair<int, int>> p;
    for (int v = 1; v <= d.n(); ++v) p.push_back({vcount(d.in(v)), vcount(d.out(v))});
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(a) != profile(b)) return false;
  std::vector<int> map(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  auto dfs = [&](auto&& self, int v) -> bool {
    if (v > n) return true;
    for (int w = 1; w <= n; ++w) {
      if (used[w]) continue;
      if (vcount(a.in(v)) != vcount(b.in(w)) || vcount(a.out(v)) != vcount(b.out(w))) continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u) {
        if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
        if (a.has_edge(v, u) != b.has_edge(w, map[u])) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return dfs(dfs, 1);
}

std::vector<Digraph> increasing_trees_up_to_iso(int n) {
  std::vector<Digraph> reps;
  for (const auto& t : increasing_trees(n)) {
    bool fresh = true;
    for (const auto& r : reps)
      if (digraph_isomorphic(t, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(t);
  }
  return reps;
}

}  // namespace fixtures
}  // namespace ornlat
