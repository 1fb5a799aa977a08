#include "ornlat/polytope.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "ornlat/ornament.hpp"
#include "ornlat/reorient.hpp"

namespace ornlat {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Exact-arithmetic tableau simplex with Bland's rule for
//   min c.x  s.t.  A x = b, x >= 0,
// solved in two phases. Deterministic: Bland's entering rule (smallest index)
// plus smallest-basis-variable tie-breaking in the ratio test.
class ExactSimplex {
public:
  ExactSimplex(std::vector<std::vector<Rational>> columns, std::vector<Rational> rhs)
      : rows_(int(rhs.size())), k_(int(columns.size())) {
    t_.assign(rows_, std::vector<Rational>(k_ + rows_ + 1, 0));
    basis_.resize(rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < k_; ++j) t_[i][j] = columns[j][i];
      t_[i][k_ + rows_] = rhs[i];
      if (t_[i][k_ + rows_] < 0)
        for (auto& x : t_[i]) x = -x;
      t_[i][k_ + i] = 1;
      basis_[i] = k_ + i;
    }
  }

  // Minimum of the artificial sum; 0 means the system is feasible.
  Rational phase1() {
    std::vector<Rational> cost(k_ + rows_, 0);
    for (int i = 0; i < rows_; ++i) cost[k_ + i] = 1;
    return optimize(cost, /*allow_artificials=*/true);
  }

  // Requires a feasible basis from phase1. Basic artificials are first pivoted
  // out (rows with no structural entry are inert), then excluded from entering.
  Rational phase2(std::vector<Rational> structural_cost) {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < k_) continue;
      for (int j = 0; j < k_; ++j)
        if (t_[i][j] != 0) {
          std::vector<Rational> no_cost(k_ + rows_ + 1, 0);
          pivot(i, j, no_cost);  // degenerate: the row's value is zero
          break;
        }
    }
    structural_cost.resize(k_ + rows_, 0);
    return optimize(structural_cost, /*allow_artificials=*/false);
  }

private:
  Rational optimize(const std::vector<Rational>& cost, bool allow_artificials) {
    int limit = allow_artificials ? k_ + rows_ : k_;
    // reduced costs r_j = c_j - c_B B^-1 A_j against the current basis
    std::vector<Rational> reduced(k_ + rows_ + 1, 0);
    for (int j = 0; j <= k_ + rows_; ++j) {
      Rational r = j < k_ + rows_ ? cost[j] : 0;
      for (int i = 0; i < rows_; ++i) r -= cost[basis_[i]] * t_[i][j];
      reduced[j] = r;
    }
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j)
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) break;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][k_ + rows_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) throw Error("simplex: unbounded objective");
      pivot(leave, enter, reduced);
    }
    Rational value = 0;
    for (int i = 0; i < rows_; ++i) value += cost[basis_[i]] * t_[i][k_ + rows_];
    return value;
  }

  void pivot(int leave, int enter, std::vector<Rational>& reduced) {
    Rational p = t_[leave][enter];
    for (auto& x : t_[leave]) x /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == leave || t_[i][enter] == 0) continue;
      Rational f = t_[i][enter];
      for (int j = 0; j <= k_ + rows_; ++j) t_[i][j] -= f * t_[leave][j];
    }
    Rational f = reduced[enter];
    if (f != 0)
      for (int j = 0; j <= k_ + rows_; ++j) reduced[j] -= f * t_[leave][j];
    basis_[leave] = enter;
  }

  int rows_, k_;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
};

// Adjacency test for vertices in convex position: a and b span an edge iff
// every convex combination representing their midpoint puts all its weight on
// a and b, i.e. min(lambda_a + lambda_b) over representations equals 1.
// (Testing the midpoint against the remaining points alone is not sound: the
// hypergraphic pentagon of the 3-path has a diagonal whose midpoint avoids
// the hull of the other three vertices.)
bool skeleton_edge(const std::vector<LatticePoint>& points, int a, int b) {
  int count = int(points.size());
  int dim = int(points[0].size());
  std::vector<std::vector<Rational>> columns;
  columns.reserve(count);
  for (int c = 0; c < count; ++c) {
    std::vector<Rational> col(dim + 1);
    for (int i = 0; i < dim; ++i) col[i] = points[c][i];
    col[dim] = 1;
    columns.push_back(std::move(col));
  }
  std::vector<Rational> rhs(dim + 1);
  for (int i = 0; i < dim; ++i) rhs[i] = Rational(points[a][i] + points[b][i]) / 2;
  rhs[dim] = 1;
  ExactSimplex lp(std::move(columns), std::move(rhs));
  if (lp.phase1() != 0) throw Error("skeleton: midpoint outside the hull");
  std::vector<Rational> cost(count, 0);
  cost[a] = cost[b] = 1;
  return lp.phase2(std::move(cost)) == 1;
}

long long omega_dot(const LatticePoint& p) {
  long long s = 0;
  int n = int(p.size());
  for (int v = 1; v <= n; ++v) s += (long long)(n + 1 - 2 * v) * p[v - 1];
  return s;
}

}  // namespace

VertexCloud hypergraphic_vertices(const Hypergraph& h, std::size_t guard) {
  VertexCloud cloud;
  cloud.sourcings = enumerate_acyclic_sourcings(h, guard);
  for (const auto& s : cloud.sourcings) {
    LatticePoint p(h.n(), 0);
    for (int v : s.source) ++p[v - 1];
    cloud.points.push_back(p);
  }
  auto sorted = cloud.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("hypergraphic_vertices: point map is not injective");
  return cloud;
}

std::vector<std::pair<int, int>> skeleton(const std::vector<LatticePoint>& points) {
  int count = int(points.size());
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DegenerateInputError("skeleton: duplicate points");
  }
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if (skeleton_edge(points, a, b)) edges.push_back({a, b});
  return edges;
}

FinitePoset oriented_skeleton_poset(const Hypergraph& h, std::size_t guard) {
  VertexCloud cloud = hypergraphic_vertices(h, guard);
  auto edges = skeleton(cloud.points);
  int count = int(cloud.points.size());
  std::vector<std::vector<int>> out(count);
  for (auto [a, b] : edges) {
    long long da = omega_dot(cloud.points[a]), db = omega_dot(cloud.points[b]);
    if (da == db)
      throw Error("oriented_skeleton_poset: omega is orthogonal to a skeleton edge");
    if (da > db)
      out[a].push_back(b);  // toward smaller <omega,.>; all-min sourcing is the source
    else
      out[b].push_back(a);
  }
  // reachability closure
  std::vector<Bitset> reach(count, Bitset(count));
  for (int v = 0; v < count; ++v) {
    std::vector<int> stack{v};
    reach[v].set(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : out[x])
        if (!reach[v].test(w)) {
          reach[v].set(w);
          stack.push_back(w);
        }
    }
  }
  std::vector<std::string> keys;
  for (const auto& s : cloud.sourcings) keys.push_back(sourcing_key(s));
  return FinitePoset::from_relation(keys,
                                    [&](int i, int j) { return reach[i].test(j); });
}

RealizationReport realization_check(const Digraph& t) {
  if (!is_tree(t) || !is_increasing(t))
    throw NotATreeError("realization_check: expected an increasing directed tree");
  RealizationReport report;
  Hypergraph paths = path_hypergraph(t);

  bool unstarred = !classify_tree(t).starred;
  FinitePoset skel = oriented_skeleton_poset(paths);
  if (unstarred) {
    if (!poset_isomorphic(skel, orn_poset(t))) {
      report.passed = false;
      report.failures.push_back("oriented skeleton poset differs from the ornamentation lattice");
    }
  }
  // bottom/top of the oriented skeleton are the all-min and all-max sourcings
  {
    auto bottom = skel.bottom();
    auto top = skel.top();
    Sourcing all_min{{}}, all_max{{}};
    for (int i = 0; i < paths.size(); ++i) {
      all_min.source.push_back(vmin(paths.hyperedge_set(i)));
      all_max.source.push_back(vmax(paths.hyperedge_set(i)));
    }
    if (!bottom || skel.key(*bottom) != sourcing_key(all_min) || !top ||
        skel.key(*top) != sourcing_key(all_max)) {
      report.passed = false;
      report.failures.push_back("skeleton source/sink are not the extreme sourcings");
    }
  }
  // Hasse diagram of ASour is a subgraph of the oriented skeleton.
  {
    VertexCloud cloud = hypergraphic_vertices(paths);
    auto edges = skeleton(cloud.points);
    std::set<std::pair<std::string, std::string>> oriented;
    for (auto [a, b] : edges) {
      bool a_low = omega_dot(cloud.points[a]) > omega_dot(cloud.points[b]);
      oriented.insert({sourcing_key(cloud.sourcings[a_low ? a : b]),
                       sourcing_key(cloud.sourcings[a_low ? b : a])});
    }
    FinitePoset asour = asour_poset(paths);
    for (auto [lo, hi] : asour.covers())
      if (!oriented.count({asour.key(lo), asour.key(hi)})) {
        report.passed = false;
        report.failures.push_back("a cover of the acyclic sourcing poset is missing from the skeleton");
        break;
      }
  }
  // Graphical zonotope of tc(t): oriented skeleton = Hasse diagram of AReori.
  {
    Digraph closure = transitive_closure(t);
    std::vector<std::vector<int>> pair_edges;
    for (auto [u, v] : closure.edges()) pair_edges.push_back({u, v});
    Hypergraph graph_hyper(t.n(), pair_edges);
    VertexCloud cloud = hypergraphic_vertices(graph_hyper);
    auto edges = skeleton(cloud.points);
    std::set<std::pair<std::string, std::string>> oriented;
    for (auto [a, b] : edges) {
      bool a_low = omega_dot(cloud.points[a]) > omega_dot(cloud.points[b]);
      oriented.insert({sourcing_key(cloud.sourcings[a_low ? a : b]),
                       sourcing_key(cloud.sourcings[a_low ? b : a])});
    }
    // acyclic sourcings of the pair hypergraph <-> acyclic reorientations
    FinitePoset areori = asour_poset(graph_hyper);
    std::set<std::pair<std::string, std::string>> covers;
    for (auto [lo, hi] : areori.covers()) covers.insert({areori.key(lo), areori.key(hi)});
    if (covers != oriented) {
      report.passed = false;
      report.failures.push_back("zonotope skeleton differs from the Hasse diagram of AReori");
    }
  }
  return report;
}

std::string point_cloud_to_json(const VertexCloud& cloud) {
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    nlohmann::json entry;
    entry["sourcing"] = cloud.sourcings[i].source;
    entry["point"] = cloud.points[i];
    j["points"].push_back(entry);
  }
  return j.dump();
}

std::string oriented_skeleton_to_dot(const Hypergraph& h, std::size_t guard) {
  VertexCloud cloud = hypergraphic_vertices(h, guard);
  auto edges = skeleton(cloud.points);
  std::ostringstream os;
  os << "digraph skeleton {\n";
  for (std::size_t i = 0; i < cloud.sourcings.size(); ++i)
    os << "  n" << i << " [label=\"" << sourcing_key(cloud.sourcings[i]) << "\"];\n";
  for (auto [a, b] : edges) {
    bool a_low = omega_dot(cloud.points[a]) > omega_dot(cloud.points[b]);
    os << "  n" << (a_low ? a : b) << " -> n" << (a_low ? b : a) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ornlat
