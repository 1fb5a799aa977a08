#include "ornlat/reorient.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>

namespace ornlat {

namespace {

void check_ambient(const Digraph& e) {
  if (e.edges().size() > 63) throw SizeGuardError("reorientation: ambient has more than 63 edges");
}

// Oriented out-adjacency of the reorientation view.
std::vector<Vset> oriented_out(const Reorientation& r) {
  std::vector<Vset> out(r.ambient.n() + 1, 0);
  const auto& es = r.ambient.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [u, v] = es[i];
    if ((r.rev >> i) & 1)
      out[v] |= vbit(u);
    else
      out[u] |= vbit(v);
  }
  return out;
}

// Index triples (i,j,k) with edges (u,v),(v,w),(u,w) all in the ambient.
std::vector<std::array<int, 3>> composable_triples(const Digraph& e) {
  std::vector<std::array<int, 3>> t;
  const auto& es = e.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (es[i].second != es[j].first) continue;
      int k = e.edge_index(es[i].first, es[j].second);
      if (k >= 0) t.push_back({int(i), int(j), k});
    }
  return t;
}

}  // namespace

bool Reorientation::reversed(int u, int v) const {
  int i = ambient.edge_index(u, v);
  if (i < 0) throw AmbientMismatchError("reversed: not an ambient edge");
  return (rev >> i) & 1;
}

std::vector<Edge> Reorientation::rev_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < ambient.edges().size(); ++i)
    if ((rev >> i) & 1) out.push_back(ambient.edges()[i]);
  return out;
}

Reorientation make_reorientation(const Digraph& ambient, const std::vector<Edge>& rev) {
  check_ambient(ambient);
  Reorientation r{ambient, 0};
  for (auto [u, v] : rev) {
    int i = ambient.edge_index(u, v);
    if (i < 0) throw AmbientMismatchError("make_reorientation: reversed pair is not an ambient edge");
    r.rev |= EdgeMask{1} << i;
  }
  return r;
}

std::optional<std::vector<int>> reorientation_cycle(const Reorientation& r) {
  int n = r.ambient.n();
  auto out = oriented_out(r);
  // Repeatedly strip vertices with no incoming or no outgoing edge among the
  // survivors; what remains has in- and out-degree >= 1, so a greedy walk cycles.
  Vset alive = n ? (~Vset{0} >> (64 - n)) : 0;
  while (true) {
    Vset keep = 0;
    std::vector<Vset> in(n + 1, 0);
    for (int v = 1; v <= n; ++v)
      if (vhas(alive, v)) vfor_each(out[v] & alive, [&](int w) { in[w] |= vbit(v); });
    vfor_each(alive, [&](int v) {
      if ((out[v] & alive) && in[v]) keep |= vbit(v);
    });
    if (keep == alive) break;
    alive = keep;
  }
  if (!alive) return std::nullopt;
  std::vector<int> seen_at(n + 1, -1);
  std::vector<int> walk;
  int v = vmin(alive);
  while (seen_at[v] < 0) {
    seen_at[v] = int(walk.size());
    walk.push_back(v);
    v = vmin(out[v] & alive);
  }
  return std::vector<int>(walk.begin() + seen_at[v], walk.end());
}

bool is_acyclic_reorientation(const Reorientation& r) { return !reorientation_cycle(r); }

bool is_transitively_closed(const Reorientation& r) {
  for (auto [i, j, k] : composable_triples(r.ambient))
    if (((r.rev >> i) & 1) && ((r.rev >> j) & 1) && !((r.rev >> k) & 1)) return false;
  return true;
}

bool is_transitively_coclosed(const Reorientation& r) {
  for (auto [i, j, k] : composable_triples(r.ambient))
    if (!((r.rev >> i) & 1) && !((r.rev >> j) & 1) && ((r.rev >> k) & 1)) return false;
  return true;
}

bool is_transitively_biclosed(const Reorientation& r) {
  return is_transitively_closed(r) && is_transitively_coclosed(r);
}

Ornamentation orn_of_reorientation(const Digraph& d, const Reorientation& r) {
  if (!(r.ambient == transitive_closure(d)))
    throw AmbientMismatchError("orn_of_reorientation: ambient is not tc(d)");
  return orn_from_reversed_pairs(d, r.rev_edges());
}

Reorientation reori_of_ornamentation(const Digraph& d, const Ornamentation& o) {
  validate_ornamentation(d, o);
  Digraph closure = transitive_closure(d);
  std::vector<Edge> rev;
  for (auto [u, v] : closure.edges())
    if (vhas(o.at[v], u)) rev.push_back({u, v});
  return make_reorientation(closure, rev);
}

Reorientation maxreori_of_ornamentation(const Digraph& t, const Ornamentation& o) {
  if (!is_tree(t)) throw NotATreeError("maxreori_of_ornamentation: ambient is not a tree");
  validate_ornamentation(t, o);
  Digraph closure = transitive_closure(t);
  std::vector<Edge> rev;
  for (auto [u, v] : closure.edges()) {
    int next = tree_order(t, u, v).path[1];  // first vertex after u toward v
    bool blocked = false;
    for (int w = 1; w <= t.n() && !blocked; ++w)
      if (!vhas(o.at[w], u) && vhas(o.at[w], next) && vhas(o.at[w], v)) blocked = true;
    if (!blocked) rev.push_back({u, v});
  }
  return make_reorientation(closure, rev);
}

Reorientation areori_of_permutation(const Digraph& e, const std::vector<int>& perm) {
  if (!is_increasing(e)) throw Error("areori_of_permutation: ambient must be increasing");
  check_ambient(e);
  if (int(perm.size()) != e.n()) throw Error("areori_of_permutation: permutation size mismatch");
  std::vector<int> pos(e.n() + 1, -1);
  for (int i = 0; i < e.n(); ++i) pos[perm[i]] = i;
  Reorientation r{e, 0};
  const auto& es = e.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    if (pos[es[i].first] > pos[es[i].second]) r.rev |= EdgeMask{1} << i;
  return r;
}

std::vector<std::vector<int>> linear_extensions(const Reorientation& r) {
  auto out = oriented_out(r);
  int n = r.ambient.n();
  std::vector<Vset> in(n + 1, 0);
  for (int v = 1; v <= n; ++v) vfor_each(out[v], [&](int w) { in[w] |= vbit(v); });
  std::vector<std::vector<int>> exts;
  std::vector<int> cur;
  Vset placed = 0;
  auto dfs = [&](auto&& self) -> void {
    if (int(cur.size()) == n) {
      exts.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (vhas(placed, v) || (in[v] & ~placed)) continue;
      placed |= vbit(v);
      cur.push_back(v);
      self(self);
      cur.pop_back();
      placed &= ~vbit(v);
    }
  };
  dfs(dfs);
  return exts;
}

std::vector<EdgeMask> enumerate_reorientations(const Digraph& e) {
  check_ambient(e);
  if (e.edges().size() > 24)
    throw SizeGuardError("enumerate_reorientations: 2^|E| sweep refused beyond 24 edges");
  std::vector<EdgeMask> out;
  out.reserve(std::size_t{1} << e.edges().size());
  for (EdgeMask m = 0; m < (EdgeMask{1} << e.edges().size()); ++m) out.push_back(m);
  return out;
}

std::vector<EdgeMask> enumerate_acyclic_reorientations(const Digraph& e) {
  check_ambient(e);
  std::vector<EdgeMask> out;
  if (e.edges().size() <= 20) {
    for (EdgeMask m = 0; m < (EdgeMask{1} << e.edges().size()); ++m)
      if (is_acyclic_reorientation({e, m})) out.push_back(m);
    return out;
  }
  if (!is_increasing(e))
    throw SizeGuardError("enumerate_acyclic_reorientations: too many edges for sweep");
  if (e.n() > 10)
    throw SizeGuardError("enumerate_acyclic_reorientations: n! sweep refused beyond n = 10");
  std::vector<int> perm(e.n());
  std::iota(perm.begin(), perm.end(), 1);
  std::set<EdgeMask> seen;
  do {
    seen.insert(areori_of_permutation(e, perm).rev);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::vector<EdgeMask>(seen.begin(), seen.end());
}

namespace {

std::string mask_key(const Digraph& e, EdgeMask m) {
  std::ostringstream os;
  os << "rev{";
  bool first = true;
  for (std::size_t i = 0; i < e.edges().size(); ++i)
    if ((m >> i) & 1) {
      if (!first) os << ",";
      os << e.edges()[i].first << ">" << e.edges()[i].second;
      first = false;
    }
  os << "}";
  return os.str();
}

FinitePoset poset_of_masks(const Digraph& e, const std::vector<EdgeMask>& masks) {
  std::vector<std::string> keys;
  keys.reserve(masks.size());
  for (EdgeMask m : masks) keys.push_back(mask_key(e, m));
  return FinitePoset::from_relation(
      keys, [&](int i, int j) { return (masks[i] & ~masks[j]) == 0; });
}

}  // namespace

FinitePoset areori_poset(const Digraph& e) {
  return poset_of_masks(e, enumerate_acyclic_reorientations(e));
}

bool areori_is_lattice(const Digraph& e) {
  // Forest criterion on transitive reductions of induced subgraphs.
  bool criterion = true;
  int n = e.n();
  for (Vset sub = 0; sub < (Vset{1} << n) && criterion; ++sub) {
    std::vector<Edge> reduction;
    for (auto [u, v] : e.edges()) {
      if (!vhas(sub, u) || !vhas(sub, v)) continue;
      bool redundant = false;
      vfor_each(e.out(u) & sub & ~vbit(v), [&](int w) {
        if (redundant) return;
        // path w ->* v inside sub
        Vset seen = vbit(w), frontier = seen;
        while (frontier && !vhas(seen, v)) {
          Vset next = 0;
          vfor_each(frontier, [&](int x) { next |= e.out(x) & sub; });
          frontier = next & ~seen;
          seen |= frontier;
        }
        if (vhas(seen, v)) redundant = true;
      });
      if (!redundant) reduction.push_back({u, v});
    }
    // forest test: union-find over undirected reduction edges
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [u, v] : reduction) {
      int a = find(u), b = find(v);
      if (a == b) {
        criterion = false;
        break;
      }
      parent[a] = b;
    }
  }
  bool order_theoretic = areori_poset(e).is_lattice();
  if (criterion != order_theoretic)
    throw Error("areori_is_lattice: forest criterion disagrees with the order-theoretic check");
  return criterion;
}

namespace {

// Closure of the arrow set selected by `mask`, then re-read along the ambient edges.
EdgeMask closure_within(const Digraph& e, EdgeMask mask) {
  std::vector<Vset> out(e.n() + 1, 0);
  const auto& es = e.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    if ((mask >> i) & 1) out[es[i].first] |= vbit(es[i].second);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= e.n(); ++v) {
      Vset grown = out[v];
      vfor_each(out[v], [&](int w) { grown |= out[w]; });
      if (grown != out[v]) {
        out[v] = grown;
        changed = true;
      }
    }
  }
  EdgeMask result = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (vhas(out[es[i].first], es[i].second)) result |= EdgeMask{1} << i;
  return result;
}

// rev(R1 v R2) = E & tc(rev(R1) | rev(R2))
EdgeMask join_mask(const Digraph& e, EdgeMask a, EdgeMask b) {
  return closure_within(e, a | b);
}

// E \ rev(R1 ^ R2) = E & tc(E \ (rev(R1) & rev(R2)))
EdgeMask meet_mask(const Digraph& e, EdgeMask a, EdgeMask b) {
  EdgeMask all = e.edges().empty() ? 0 : (~EdgeMask{0} >> (64 - e.edges().size()));
  return all & ~closure_within(e, all & ~(a & b));
}

}  // namespace

Reorientation areori_join(const Reorientation& r1, const Reorientation& r2) {
  if (!(r1.ambient == r2.ambient)) throw AmbientMismatchError("areori_join: different ambients");
  if (!areori_is_lattice(r1.ambient))
    throw NotALatticeError("areori_join: acyclic reorientation poset is not a lattice");
  return {r1.ambient, join_mask(r1.ambient, r1.rev, r2.rev)};
}

Reorientation areori_meet(const Reorientation& r1, const Reorientation& r2) {
  if (!(r1.ambient == r2.ambient)) throw AmbientMismatchError("areori_meet: different ambients");
  if (!areori_is_lattice(r1.ambient))
    throw NotALatticeError("areori_meet: acyclic reorientation poset is not a lattice");
  return {r1.ambient, meet_mask(r1.ambient, r1.rev, r2.rev)};
}

std::vector<EdgeMask> enumerate_closure_masks(const Digraph& e, bool need_closed,
                                              bool need_coclosed) {
  check_ambient(e);
  int m = int(e.edges().size());
  auto triples = composable_triples(e);
  // Group triples by their largest edge index so a depth-first sweep can prune
  // as soon as all three edges of a violated triple are decided.
  std::vector<std::vector<std::array<int, 3>>> by_max(m);
  for (auto t : triples) by_max[std::max({t[0], t[1], t[2]})].push_back(t);

  std::vector<EdgeMask> out;
  auto dfs = [&](auto&& self, int depth, EdgeMask mask) -> void {
    if (depth == m) {
      out.push_back(mask);
      return;
    }
    for (int bit = 0; bit <= 1; ++bit) {
      EdgeMask next = mask | (EdgeMask(bit) << depth);
      bool ok = true;
      for (auto [i, j, k] : by_max[depth]) {
        bool ri = (next >> i) & 1, rj = (next >> j) & 1, rk = (next >> k) & 1;
        if (need_closed && ri && rj && !rk) ok = false;
        if (need_coclosed && !ri && !rj && rk) ok = false;
        if (!ok) break;
      }
      if (ok) self(self, depth + 1, next);
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

namespace {

const Digraph& require_closed_increasing(const Digraph& e) {
  if (!is_increasing(e)) throw Error("reorientation poset: ambient must be increasing");
  if (!(transitive_closure(e) == e))
    throw Error("reorientation poset: ambient must be transitively closed");
  return e;
}

}  // namespace

FinitePoset rcl_poset(const Digraph& e) {
  return poset_of_masks(require_closed_increasing(e), enumerate_closure_masks(e, true, false));
}

FinitePoset rco_poset(const Digraph& e) {
  return poset_of_masks(require_closed_increasing(e), enumerate_closure_masks(e, false, true));
}

FinitePoset rbi_poset(const Digraph& e) {
  return poset_of_masks(require_closed_increasing(e), enumerate_closure_masks(e, true, true));
}

QuotientReport rcl_meet_morphism_check(const Digraph& d) {
  Digraph e = transitive_closure(d);
  auto masks = enumerate_closure_masks(e, true, false);
  std::map<EdgeMask, Ornamentation> orn;
  for (EdgeMask m : masks) orn.emplace(m, orn_of_reorientation(d, {e, m}));
  QuotientReport report;
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = a; b < masks.size(); ++b) {
      EdgeMask meet_mask = masks[a] & masks[b];  // Rcl is an intersection-closed family
      Ornamentation lhs = orn.at(meet_mask);
      Ornamentation rhs = orn_meet(d, orn.at(masks[a]), orn.at(masks[b]));
      ++report.pairs_checked;
      if (!(lhs == rhs)) {
        report.passed = false;
        report.failure = "meet not preserved at (" + mask_key(e, masks[a]) + ", " +
                         mask_key(e, masks[b]) + ")";
        return report;
      }
    }
  return report;
}

QuotientReport quotient_check_unstarred(const Digraph& t) {
  if (!is_tree(t)) throw NotATreeError("quotient_check_unstarred: input is not a tree");
  if (classify_tree(t).starred)
    throw Error("quotient_check_unstarred: tree is starred");
  Digraph e = transitive_closure(t);
  auto masks = enumerate_acyclic_reorientations(e);
  std::map<EdgeMask, Ornamentation> orn;
  for (EdgeMask m : masks) orn.emplace(m, orn_of_reorientation(t, {e, m}));

  if (!areori_is_lattice(e))
    throw NotALatticeError("quotient_check_unstarred: acyclic reorientation poset is not a lattice");
  QuotientReport report;
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = a; b < masks.size(); ++b) {
      EdgeMask jm = join_mask(e, masks[a], masks[b]);
      EdgeMask mm = meet_mask(e, masks[a], masks[b]);
      ++report.pairs_checked;
      if (!(orn.at(jm) == orn_join(t, orn.at(masks[a]), orn.at(masks[b]))) ||
          !(orn.at(mm) == orn_meet(t, orn.at(masks[a]), orn.at(masks[b])))) {
        report.passed = false;
        report.failure = "lattice map fails at (" + mask_key(e, masks[a]) + ", " +
                         mask_key(e, masks[b]) + ")";
        return report;
      }
    }
  auto rcl = rcl_meet_morphism_check(t);
  report.pairs_checked += rcl.pairs_checked;
  if (!rcl.passed) return rcl;
  return report;
}

std::string reorientation_key(const Reorientation& r) { return mask_key(r.ambient, r.rev); }

std::string reorientation_to_json(const Reorientation& r) {
  nlohmann::json j;
  j["ambient"] = nlohmann::json::parse(digraph_to_json(r.ambient));
  j["rev"] = nlohmann::json::array();
  for (auto [u, v] : r.rev_edges()) j["rev"].push_back({u, v});
  return j.dump();
}

Reorientation reorientation_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Digraph ambient = digraph_from_json(j.at("ambient").dump());
  std::vector<Edge> rev;
  for (auto& e : j.at("rev")) rev.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return make_reorientation(ambient, rev);
}

std::string reorientation_to_dot(const Reorientation& r) {
  std::ostringstream os;
  os << "digraph reorientation {\n";
  const auto& es = r.ambient.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [u, v] = es[i];
    if ((r.rev >> i) & 1)
      os << "  " << v << " -> " << u << " [color=red];\n";
    else
      os << "  " << u << " -> " << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ornlat
