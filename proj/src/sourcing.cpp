#include "ornlat/sourcing.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>

namespace ornlat {

void validate_sourcing(const Hypergraph& h, const Sourcing& s) {
  if (int(s.source.size()) != h.size())
    throw AmbientMismatchError("sourcing: length does not match hyperedge count");
  for (int i = 0; i < h.size(); ++i)
    if (!vhas(h.hyperedge_set(i), s.source[i]))
      throw AmbientMismatchError("sourcing: source not a member of its hyperedge");
}

namespace {

// Hyperedge-level digraph: arc i -> j iff S(i) in H_j \ {S(j)}.
std::vector<std::vector<int>> hyperedge_digraph(const Hypergraph& h, const Sourcing& s) {
  std::vector<std::vector<int>> adj(h.size());
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j) {
      if (i == j) continue;
      if (vhas(h.hyperedge_set(j), s.source[i]) && s.source[i] != s.source[j])
        adj[i].push_back(j);
    }
  return adj;
}

bool vertex_level_acyclic(const Hypergraph& h, const Sourcing& s) {
  // arcs (x, S(H)) for x in H \ {S(H)}
  std::vector<Vset> out(h.n() + 1, 0);
  for (int i = 0; i < h.size(); ++i)
    vfor_each(h.hyperedge_set(i) & ~vbit(s.source[i]),
              [&](int x) { out[x] |= vbit(s.source[i]); });
  std::vector<int> state(h.n() + 1, 0);  // 0 new, 1 on stack, 2 done
  bool cyclic = false;
  auto dfs = [&](auto&& self, int v) -> void {
    state[v] = 1;
    vfor_each(out[v], [&](int w) {
      if (cyclic) return;
      if (state[w] == 1) cyclic = true;
      if (state[w] == 0) self(self, w);
    });
    state[v] = 2;
  };
  for (int v = 1; v <= h.n() && !cyclic; ++v)
    if (state[v] == 0) dfs(dfs, v);
  return !cyclic;
}

}  // namespace

std::optional<std::vector<int>> sourcing_cycle(const Hypergraph& h, const Sourcing& s) {
  validate_sourcing(h, s);
  auto adj = hyperedge_digraph(h, s);
  // Shortest-first: BFS from each hyperedge back to itself.
  std::optional<std::vector<int>> best;
  for (int start = 0; start < h.size(); ++start) {
    std::vector<int> parent(h.size(), -2);
    std::vector<int> queue{start};
    parent[start] = -1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (int j : adj[queue[q]]) {
        if (j == start) {
          std::vector<int> cycle;
          for (int x = queue[q]; x >= 0; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin(), cycle.end());
          if (!best || cycle.size() < best->size()) best = cycle;
          goto next_start;
        }
        if (parent[j] == -2) {
          parent[j] = queue[q];
          queue.push_back(j);
        }
      }
    }
  next_start:;
  }
  return best;
}

namespace {

bool hyperedge_level_acyclic(const Hypergraph& h, const Sourcing& s) {
  auto adj = hyperedge_digraph(h, s);
  std::vector<int> state(h.size(), 0);
  bool cyclic = false;
  auto dfs = [&](auto&& self, int v) -> void {
    state[v] = 1;
    for (int w : adj[v]) {
      if (cyclic) return;
      if (state[w] == 1) cyclic = true;
      if (state[w] == 0) self(self, w);
    }
    state[v] = 2;
  };
  for (int v = 0; v < h.size() && !cyclic; ++v)
    if (state[v] == 0) dfs(dfs, v);
  return !cyclic;
}

}  // namespace

bool is_acyclic_sourcing(const Hypergraph& h, const Sourcing& s) {
  validate_sourcing(h, s);
  bool hyperedge_level = hyperedge_level_acyclic(h, s);
  bool vertex_level = vertex_level_acyclic(h, s);
  if (hyperedge_level != vertex_level)
    throw Error("is_acyclic_sourcing: hyperedge and vertex formulations disagree");
  return hyperedge_level;
}

std::vector<Sourcing> enumerate_sourcings(const Hypergraph& h, std::size_t guard) {
  unsigned long long total = 1;
  for (int i = 0; i < h.size(); ++i) {
    total *= h.hyperedge(i).size();
    if (total > guard)
      throw SizeGuardError("enumerate_sourcings: product of hyperedge sizes exceeds " +
                           std::to_string(guard));
  }
  std::vector<Sourcing> out;
  out.reserve(total);
  Sourcing cur{std::vector<int>(h.size(), 0)};
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == h.size()) {
      out.push_back(cur);
      return;
    }
    for (int v : h.hyperedge(i)) {
      cur.source[i] = v;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<Sourcing> enumerate_acyclic_sourcings(const Hypergraph& h, std::size_t guard) {
  unsigned long long total = 1;
  bool product_feasible = true;
  for (int i = 0; i < h.size(); ++i) {
    total *= h.hyperedge(i).size();
    if (total > guard) {
      product_feasible = false;
      break;
    }
  }
  std::vector<Sourcing> out;
  if (product_feasible) {
    // product sweep with a lean vertex-level cycle test at the leaves
    Sourcing cur{std::vector<int>(h.size(), 0)};
    std::vector<Vset> in(h.n() + 1, 0);
    auto acyclic = [&]() {
      std::fill(in.begin(), in.end(), 0);
      for (int i = 0; i < h.size(); ++i)
        in[cur.source[i]] |= h.hyperedge_set(i) & ~vbit(cur.source[i]);
      Vset alive = h.n() ? (~Vset{0} >> (64 - h.n())) : 0;
      while (alive) {
        Vset next = alive;
        vfor_each(alive, [&](int v) {
          if (!(in[v] & next)) next &= ~vbit(v);
        });
        if (next == alive) return false;  // every survivor has an incoming arc
        alive = next;
      }
      return true;
    };
    auto dfs = [&](auto&& self, int i) -> void {
      if (i == h.size()) {
        if (acyclic()) out.push_back(cur);
        return;
      }
      for (int v : h.hyperedge(i)) {
        cur.source[i] = v;
        self(self, i + 1);
      }
    };
    dfs(dfs, 0);
  } else {
    // image-of-permutations route (every acyclic sourcing is the
    // earliest-member sourcing of a topological order of its vertex digraph)
    if (h.n() > 10)
      throw SizeGuardError("enumerate_acyclic_sourcings: n! sweep refused beyond n = 10");
    std::vector<int> perm(h.n());
    std::iota(perm.begin(), perm.end(), 1);
    std::set<Sourcing> seen;
    do {
      seen.insert(asour_of_permutation(h, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.assign(seen.begin(), seen.end());
  }
  return out;
}

namespace {

FinitePoset poset_of_sourcings(const std::vector<Sourcing>& elems) {
  std::vector<std::string> keys;
  keys.reserve(elems.size());
  for (const auto& s : elems) keys.push_back(sourcing_key(s));
  return FinitePoset::from_relation(keys,
                                    [&](int i, int j) { return sour_leq(elems[i], elems[j]); });
}

}  // namespace

FinitePoset sour_poset(const Hypergraph& h, std::size_t guard) {
  return poset_of_sourcings(enumerate_sourcings(h, guard));
}

FinitePoset asour_poset(const Hypergraph& h, std::size_t guard) {
  return poset_of_sourcings(enumerate_acyclic_sourcings(h, guard));
}

bool sour_leq(const Sourcing& a, const Sourcing& b) {
  if (a.source.size() != b.source.size()) throw AmbientMismatchError("sour_leq: size mismatch");
  for (std::size_t i = 0; i < a.source.size(); ++i)
    if (a.source[i] > b.source[i]) return false;
  return true;
}

std::vector<Edge> rev_of_sourcing(const Digraph& d, const Sourcing& s) {
  if (!is_increasing(d)) throw Error("rev_of_sourcing: digraph must be increasing");
  Hypergraph paths = path_hypergraph(d);
  validate_sourcing(paths, s);
  // In an increasing digraph a path runs from min to max of its vertex set.
  std::set<Edge> rev;
  for (int i = 0; i < paths.size(); ++i) {
    Vset p = paths.hyperedge_set(i);
    if (s.source[i] == vmax(p)) rev.insert({vmin(p), vmax(p)});
  }
  return std::vector<Edge>(rev.begin(), rev.end());
}

Reorientation reori_of_sourcing(const Digraph& d, const Sourcing& s) {
  return make_reorientation(transitive_closure(d), rev_of_sourcing(d, s));
}

Ornamentation orn_of_sourcing(const Digraph& d, const Sourcing& s) {
  return orn_from_reversed_pairs(d, rev_of_sourcing(d, s));
}

Sourcing sour_of_ornamentation(const Digraph& d, const Ornamentation& o) {
  if (!is_increasing(d)) throw Error("sour_of_ornamentation: digraph must be increasing");
  validate_ornamentation(d, o);
  Hypergraph paths = path_hypergraph(d);
  Sourcing s{std::vector<int>(paths.size(), 0)};
  for (int i = 0; i < paths.size(); ++i) {
    Vset p = paths.hyperedge_set(i);
    int u = vmin(p), best = u;
    vfor_each(p, [&](int w) {
      if (vhas(o.at[w], u)) best = w;  // members scanned in increasing order
    });
    s.source[i] = best;
  }
  return s;
}

Sourcing asour_of_reorientation(const Digraph& d, const Reorientation& r) {
  Digraph closure = transitive_closure(d);
  if (!(r.ambient == closure))
    throw AmbientMismatchError("asour_of_reorientation: ambient is not tc(d)");
  if (!is_acyclic_reorientation(r))
    throw AcyclicityError("asour_of_reorientation: reorientation is cyclic");
  Hypergraph paths = path_hypergraph(d);
  Sourcing s{std::vector<int>(paths.size(), 0)};
  for (int i = 0; i < paths.size(); ++i) {
    Vset p = paths.hyperedge_set(i);
    // source of the path in r: the member that beats all others
    int src = -1;
    vfor_each(p, [&](int u) {
      bool wins = true;
      vfor_each(p & ~vbit(u), [&](int w) {
        int a = std::min(u, w), b = std::max(u, w);
        bool reversed = r.reversed(a, b);
        int head = reversed ? b : a;  // oriented head -> tail is (head, other)
        if (head != u) wins = false;
      });
      if (wins) src = u;
    });
    if (src < 0) throw Error("asour_of_reorientation: path without a source");
    s.source[i] = src;
  }
  return s;
}

std::vector<Edge> arr_of_sourcing(const Digraph& d, const Sourcing& s) {
  Hypergraph paths = path_hypergraph(d);
  validate_sourcing(paths, s);
  std::set<Edge> arr;
  for (int i = 0; i < paths.size(); ++i)
    vfor_each(paths.hyperedge_set(i) & ~vbit(s.source[i]),
              [&](int u) { arr.insert({u, s.source[i]}); });
  return std::vector<Edge>(arr.begin(), arr.end());
}

Reorientation areori_of_sourcing(const Digraph& d, const Sourcing& s) {
  Hypergraph paths = path_hypergraph(d);
  if (!is_acyclic_sourcing(paths, s))
    throw AcyclicityError("areori_of_sourcing: sourcing is cyclic");
  Digraph closure = transitive_closure(d);
  // rev(areori S) = tc(arr(S)) & tc(D)
  std::vector<Edge> arr = arr_of_sourcing(d, s);
  std::sort(arr.begin(), arr.end());
  Digraph arr_closure = transitive_closure(Digraph(d.n(), arr));
  std::vector<Edge> rev;
  for (auto [u, v] : arr_closure.edges())
    if (closure.edge_index(u, v) >= 0) rev.push_back({u, v});
  return make_reorientation(closure, rev);
}

Sourcing asour_of_permutation(const Hypergraph& h, const std::vector<int>& perm) {
  if (int(perm.size()) != h.n()) throw Error("asour_of_permutation: permutation size mismatch");
  std::vector<int> pos(h.n() + 1, 0);
  for (int i = 0; i < h.n(); ++i) pos[perm[i]] = i;
  Sourcing s{std::vector<int>(h.size(), 0)};
  for (int i = 0; i < h.size(); ++i) {
    int best = -1;
    vfor_each(h.hyperedge_set(i), [&](int v) {
      if (best < 0 || pos[v] < pos[best]) best = v;
    });
    s.source[i] = best;
  }
  return s;
}

IsomorphismReport asour_aorn_isomorphism_check(const Digraph& d, std::size_t guard) {
  Hypergraph paths = path_hypergraph(d);
  auto sourcings = enumerate_acyclic_sourcings(paths, guard);
  auto ornamentations = acyclic_ornamentations(d);
  IsomorphismReport report;
  if (sourcings.size() != ornamentations.size()) {
    report.passed = false;
    report.failure = "cardinality mismatch: " + std::to_string(sourcings.size()) +
                     " acyclic sourcings vs " + std::to_string(ornamentations.size()) +
                     " acyclic ornamentations";
    return report;
  }
  std::vector<Ornamentation> images;
  for (auto& s : sourcings) images.push_back(orn_of_sourcing(d, s));
  // injectivity + surjectivity
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    report.passed = false;
    report.failure = "orn{S} not injective on acyclic sourcings";
    return report;
  }
  for (auto& o : ornamentations)
    if (!std::binary_search(sorted.begin(), sorted.end(), o)) {
      report.passed = false;
      report.failure = "acyclic ornamentation not in the image: " + orn_key(o);
      return report;
    }
  // order preserving and reflecting
  for (std::size_t a = 0; a < sourcings.size(); ++a)
    for (std::size_t b = 0; b < sourcings.size(); ++b)
      if (sour_leq(sourcings[a], sourcings[b]) != orn_leq(images[a], images[b])) {
        report.passed = false;
        report.failure = "order not matched at (" + sourcing_key(sourcings[a]) + ", " +
                         sourcing_key(sourcings[b]) + ")";
        return report;
      }
  return report;
}

std::string sourcing_key(const Sourcing& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.source.size(); ++i) {
    if (i) os << ",";
    os << s.source[i];
  }
  return os.str();
}

std::string sourcing_to_json(const Hypergraph& h, const Sourcing& s) {
  validate_sourcing(h, s);
  nlohmann::json j;
  j["hyperedges"] = h.hyperedges();
  j["sources"] = s.source;
  return j.dump();
}

Sourcing sourcing_from_json(const Hypergraph& h, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  auto lists = j.at("hyperedges").get<std::vector<std::vector<int>>>();
  if (lists != h.hyperedges())
    throw AmbientMismatchError("sourcing json: hyperedges do not match the ambient hypergraph");
  Sourcing s{j.at("sources").get<std::vector<int>>()};
  validate_sourcing(h, s);
  return s;
}

}  // namespace ornlat
