#include "ornlat/intreeval.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace ornlat {

IntreevalHypergraph make_intreeval(const Digraph& tree,
                                   std::vector<std::vector<int>> hyperedges) {
  if (!is_tree(tree) || !is_increasing(tree))
    throw NotATreeError("intreeval: expected an increasing directed tree");
  Hypergraph paths = path_hypergraph(tree);
  Hypergraph hyper(tree.n(), std::move(hyperedges));
  for (int i = 0; i < hyper.size(); ++i)
    if (paths.index_of(hyper.hyperedge_set(i)) < 0)
      throw Error("intreeval: hyperedge is not the vertex set of a directed path");
  return {tree, std::move(hyper)};
}

namespace {

int path_min(const Hypergraph& h, int i) { return vmin(h.hyperedge_set(i)); }
int path_max(const Hypergraph& h, int i) { return vmax(h.hyperedge_set(i)); }

}  // namespace

PicResult is_path_intersection_closed(const IntreevalHypergraph& ii) {
  const auto& h = ii.hyper;
  const Digraph& t = ii.tree;
  for (int a = 0; a < h.size(); ++a)
    for (int b = 0; b < h.size(); ++b) {
      if (a == b) continue;
      Vset inter = h.hyperedge_set(a) & h.hyperedge_set(b);
      if (vcount(inter) <= 1) continue;
      // strict tree-order conditions on the endpoints
      if (path_min(h, a) == vmin(inter) || path_max(h, b) == vmax(inter)) continue;
      Vset window = t.reach_from(path_min(h, b)) & t.reach_to(path_max(h, a));
      bool found = false;
      for (int k = 0; k < h.size() && !found; ++k)
        if ((inter & ~h.hyperedge_set(k)) == 0 && (h.hyperedge_set(k) & ~window) == 0)
          found = true;
      if (!found) return {false, a, b};
    }
  return {};
}

bool is_intersection_closed(const IntreevalHypergraph& ii) {
  const auto& h = ii.hyper;
  for (int a = 0; a < h.size(); ++a)
    for (int b = a + 1; b < h.size(); ++b) {
      Vset inter = h.hyperedge_set(a) & h.hyperedge_set(b);
      if (vcount(inter) > 1 && h.index_of(inter) < 0) return false;
    }
  return true;
}

StarGraph star_graph(const IntreevalHypergraph& ii, int u, int v) {
  const Digraph& t = ii.tree;
  if (!vhas(t.reach_from(u), v))
    throw Error("star_graph: vertices not connected by a directed path");
  StarGraph g;
  g.u = u;
  g.v = v;
  vfor_each(t.in(u), [&](int x) { g.in_nodes.push_back(x); });
  vfor_each(t.out(v), [&](int y) { g.out_nodes.push_back(y); });
  for (int x : g.in_nodes)
    for (int y : g.out_nodes)
      for (int i = 0; i < ii.hyper.size(); ++i)
        if (vhas(ii.hyper.hyperedge_set(i), x) && vhas(ii.hyper.hyperedge_set(i), y)) {
          g.edges.push_back({x, y});
          break;
        }
  return g;
}

namespace {

// Cycle in the (bipartite) star graph, as an alternating in/out vertex list
// rotated to start at its smallest vertex; empty when acyclic.
std::vector<int> star_cycle(const StarGraph& g) {
  std::map<int, std::vector<int>> adj;
  for (auto [x, y] : g.edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
  std::map<int, int> parent;  // DFS tree, roots map to 0
  std::vector<int> found;
  auto dfs = [&](auto&& self, int x) -> void {
    for (int y : adj[x]) {
      if (!found.empty()) return;
      if (y == parent[x]) continue;
      if (parent.count(y)) {
        // ancestors of x and of y meet at their lowest common ancestor
        std::vector<int> px{x}, py{y};
        for (int w = x; parent[w]; w = parent[w]) px.push_back(parent[w]);
        for (int w = y; parent[w]; w = parent[w]) py.push_back(parent[w]);
        while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
          px.pop_back();
          py.pop_back();
        }
        found = px;  // x .. lca
        for (std::size_t k = py.size() - 1; k-- > 0;) found.push_back(py[k]);  // .. back to y
        auto mn = std::min_element(found.begin(), found.end());
        std::rotate(found.begin(), mn, found.end());
        if (found.size() > 2 && found[1] > found.back())
          std::reverse(found.begin() + 1, found.end());
        return;
      }
      parent[y] = x;
      self(self, y);
    }
  };
  for (auto& [v, nb] : adj) {
    (void)nb;
    if (!parent.count(v)) {
      parent[v] = 0;
      dfs(dfs, v);
      if (!found.empty()) return found;
    }
  }
  return {};
}

}  // namespace

StarSparseResult is_star_sparse(const IntreevalHypergraph& ii) {
  const Digraph& t = ii.tree;
  for (int u = 1; u <= t.n(); ++u) {
    Vset above = t.reach_from(u);
    for (int v = 1; v <= t.n(); ++v) {
      if (!vhas(above, v)) continue;
      auto cycle = star_cycle(star_graph(ii, u, v));
      if (!cycle.empty()) return {false, u, v, cycle};
    }
  }
  return {};
}

std::vector<int> minimal_cycle_lengths(const IntreevalHypergraph& ii, const Sourcing& s) {
  const auto& h = ii.hyper;
  validate_sourcing(h, s);
  // hyperedge digraph arcs
  std::vector<std::vector<int>> adj(h.size());
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j)
      if (i != j && vhas(h.hyperedge_set(j), s.source[i]) && s.source[i] != s.source[j])
        adj[i].push_back(j);
  // all simple cycles, canonicalized to start at their smallest hyperedge index
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(h.size(), false);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    if (cycles.size() > 100000) throw SizeGuardError("minimal_cycle_lengths: too many cycles");
    for (int w : adj[v]) {
      if (w == start) cycles.push_back(path);
      if (w > start && !on_path[w]) {
        path.push_back(w);
        on_path[w] = true;
        self(self, start, w);
        on_path[w] = false;
        path.pop_back();
      }
    }
  };
  for (int start = 0; start < h.size(); ++start) {
    path = {start};
    on_path.assign(h.size(), false);
    on_path[start] = true;
    dfs(dfs, start, start);
  }
  // inclusion-minimal by hyperedge set
  std::vector<std::set<int>> sets;
  for (auto& c : cycles) sets.emplace_back(c.begin(), c.end());
  std::vector<int> lengths;
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < cycles.size() && minimal; ++b)
      if (b != a && sets[b] != sets[a] &&
          std::includes(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end()))
        minimal = false;
    if (minimal) lengths.push_back(int(cycles[a].size()));
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Sourcing sour_restricted(const IntreevalHypergraph& ii, const Ornamentation& o) {
  validate_ornamentation(ii.tree, o);
  const auto& h = ii.hyper;
  Sourcing s{std::vector<int>(h.size(), 0)};
  for (int i = 0; i < h.size(); ++i) {
    int u = path_min(h, i), best = u;
    vfor_each(h.hyperedge_set(i), [&](int w) {
      if (vhas(o.at[w], u)) best = w;
    });
    s.source[i] = best;
  }
  return s;
}

namespace {

void require_acyclic(const IntreevalHypergraph& ii, const Sourcing& s) {
  if (!is_acyclic_sourcing(ii.hyper, s))
    throw AcyclicityError("intreeval: sourcing must be acyclic");
}

}  // namespace

Ornamentation minorn(const IntreevalHypergraph& ii, const Sourcing& s) {
  require_acyclic(ii, s);
  const Digraph& t = ii.tree;
  Ornamentation acc = minimal_ornamentation(t);
  for (int i = 0; i < ii.hyper.size(); ++i) {
    Ornamentation part = minimal_ornamentation(t);
    int v = s.source[i];
    part.at[v] = ii.hyper.hyperedge_set(i) & t.reach_to(v);
    acc = orn_join(t, acc, part);
  }
  return acc;
}

Ornamentation maxorn(const IntreevalHypergraph& ii, const Sourcing& s) {
  require_acyclic(ii, s);
  const Digraph& t = ii.tree;
  // Componentwise intersection of the per-hyperedge upper bounds, then the
  // largest ornament inside each component (the meet in the ornamentation
  // lattice; the raw intersection need not itself be an ornament).
  std::vector<Vset> bound(t.n() + 1, 0);
  for (int v = 1; v <= t.n(); ++v) bound[v] = t.reach_to(v);
  for (int i = 0; i < ii.hyper.size(); ++i) {
    Vset he = ii.hyper.hyperedge_set(i);
    int src = s.source[i];
    Vset low_part = he & t.reach_to(src);
    vfor_each(he, [&](int v) {
      if (v > src) bound[v] &= ~low_part;
    });
  }
  Ornamentation o{t.n(), std::vector<Vset>(t.n() + 1, 0)};
  for (int v = 1; v <= t.n(); ++v) o.at[v] = largest_ornament_within(t, v, bound[v]);
  validate_ornamentation(t, o);
  return o;
}

namespace {

void require_hypotheses(const IntreevalHypergraph& ii) {
  if (!is_path_intersection_closed(ii).ok)
    throw HypothesisError("intreeval join/meet: hypergraph is not path intersection closed");
  if (!is_star_sparse(ii).ok)
    throw HypothesisError("intreeval join/meet: hypergraph is not star sparse");
}

Sourcing formula_join(const Hypergraph& h, const std::vector<Sourcing>& sourcings) {
  Sourcing out{std::vector<int>(h.size(), 0)};
  for (int a = 0; a < h.size(); ++a) {
    Vset members = h.hyperedge_set(a);
    Vset forbidden = 0;
    for (const auto& s : sourcings)
      for (int j = 0; j < h.size(); ++j)
        if (vhas(members, s.source[j]))
          forbidden |= h.hyperedge_set(j) & (vbit(s.source[j]) - 1);  // strictly below source
    Vset rest = members & ~forbidden;
    if (!rest) throw Error("asour_join: formula left no candidate source");
    out.source[a] = vmin(rest);
  }
  return out;
}

Sourcing formula_meet(const Hypergraph& h, const std::vector<Sourcing>& sourcings) {
  Sourcing out{std::vector<int>(h.size(), 0)};
  for (int a = 0; a < h.size(); ++a) {
    Vset members = h.hyperedge_set(a);
    Vset forbidden = 0;
    for (const auto& s : sourcings)
      for (int j = 0; j < h.size(); ++j)
        if (vhas(members, s.source[j]))
          forbidden |= h.hyperedge_set(j) & ~(vbit(s.source[j]) * 2 - 1);  // strictly above
    Vset rest = members & ~forbidden;
    if (!rest) throw Error("asour_meet: formula left no candidate source");
    out.source[a] = vmax(rest);
  }
  return out;
}

}  // namespace

Sourcing asour_join(const IntreevalHypergraph& ii, const std::vector<Sourcing>& sourcings) {
  require_hypotheses(ii);
  if (sourcings.empty()) throw Error("asour_join: empty argument list");
  for (const auto& s : sourcings) require_acyclic(ii, s);
  return formula_join(ii.hyper, sourcings);
}

Sourcing asour_meet(const IntreevalHypergraph& ii, const std::vector<Sourcing>& sourcings) {
  require_hypotheses(ii);
  if (sourcings.empty()) throw Error("asour_meet: empty argument list");
  for (const auto& s : sourcings) require_acyclic(ii, s);
  return formula_meet(ii.hyper, sourcings);
}

CharacterizationReport characterization_check(const Digraph& t, std::size_t sample,
                                              std::uint64_t seed) {
  if (!is_tree(t) || !is_increasing(t))
    throw NotATreeError("characterization_check: expected an increasing directed tree");
  Hypergraph paths = path_hypergraph(t);
  int m = paths.size();
  CharacterizationReport report;
  report.seed = seed;

  std::vector<std::uint64_t> masks;
  if (sample == 0) {
    if (m > 16)
      throw SizeGuardError("characterization_check: 2^" + std::to_string(m) +
                           " subhypergraphs; rerun with a sample size");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) masks.push_back(mask);
  } else {
    report.sampled = true;
    std::mt19937_64 rng(seed);
    std::set<std::uint64_t> chosen;
    std::uint64_t space = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    while (chosen.size() < sample) chosen.insert(rng() & space);
    masks.assign(chosen.begin(), chosen.end());
  }

  for (std::uint64_t mask : masks) {
    std::vector<std::vector<int>> lists;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) lists.push_back(paths.hyperedge(i));
    IntreevalHypergraph ii = make_intreeval(t, lists);
    ++report.hypergraphs;

    bool predicted = is_path_intersection_closed(ii).ok && is_star_sparse(ii).ok;
    auto sourcings = enumerate_acyclic_sourcings(ii.hyper);
    std::vector<std::string> keys;
    keys.reserve(sourcings.size());
    for (const auto& s : sourcings) keys.push_back(sourcing_key(s));
    FinitePoset poset = FinitePoset::from_relation(
        keys, [&](int i, int j) { return sour_leq(sourcings[i], sourcings[j]); });
    bool lattice = poset.is_lattice();
    if (lattice != predicted) {
      report.passed = false;
      std::ostringstream os;
      os << "mask " << mask << ": lattice=" << lattice << " but PIC&star-sparse=" << predicted;
      report.discrepancies.push_back(os.str());
      continue;
    }
    if (!lattice) continue;
    ++report.lattices;

    // Formula joins/meets against the order-theoretic ones on every pair.
    std::vector<int> poset_pos(sourcings.size());
    for (std::size_t i = 0; i < sourcings.size(); ++i)
      poset_pos[i] = poset.index_of_original(int(i));
    for (std::size_t a = 0; a < sourcings.size(); ++a)
      for (std::size_t b = a; b < sourcings.size(); ++b) {
        Sourcing fj = formula_join(ii.hyper, {sourcings[a], sourcings[b]});
        Sourcing fm = formula_meet(ii.hyper, {sourcings[a], sourcings[b]});
        int pj = poset.original_of(*poset.join(poset_pos[a], poset_pos[b]));
        int pm = poset.original_of(*poset.meet(poset_pos[a], poset_pos[b]));
        if (!(fj == sourcings[pj]) || !(fm == sourcings[pm])) {
          report.passed = false;
          std::ostringstream os;
          os << "mask " << mask << ": formula join/meet mismatch at pair (" << a << "," << b << ")";
          report.discrepancies.push_back(os.str());
          break;
        }
      }
  }
  return report;
}

}  // namespace ornlat
