#include "ornlat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ornlat/reorient.hpp"
#include "ornlat/sourcing.hpp"

namespace ornlat {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

BigInt catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

BigInt odd_double_factorial(int k) { return factorial(2 * k) / (pow(BigInt(2), k) * factorial(k)); }

BigIntSeries catalan_series(int order) {
  BigIntSeries c(order);
  for (int k = 0; k <= order; ++k) c[k] = catalan_number(k);
  return c;
}

Digraph broom(int m, int n) {
  if (m < 0 || n < 0) throw Error("broom: negative parameter");
  std::vector<Edge> edges;
  if (n > 0)
    for (int i = 1; i <= m; ++i) edges.push_back({i, m + 1});
  for (int j = 1; j < n; ++j) edges.push_back({m + j, m + j + 1});
  return Digraph(m + n, std::move(edges));
}

Digraph comb(int n) {
  if (n < 0) throw Error("comb: negative parameter");
  std::vector<Edge> edges;
  for (int i = 1; i < 2 * n; i += 2) edges.push_back({i, i + 1});
  for (int i = 2; i + 2 <= 2 * n; i += 2) edges.push_back({i, i + 2});
  return Digraph(2 * n, std::move(edges));
}

BigInt broom_count(int m, int n) {
  if (m < 0 || n < 0) throw Error("broom_count: negative parameter");
  // B[k][l] filled by the double-sum recurrence, B[k][0] = 1.
  std::vector<std::vector<BigInt>> b(m + 1, std::vector<BigInt>(n + 1, 0));
  for (int k = 0; k <= m; ++k) b[k][0] = 1;
  for (int nn = 1; nn <= n; ++nn)
    for (int mm = 0; mm <= m; ++mm) {
      BigInt total = 0;
      for (int k = 0; k <= mm; ++k)
        for (int l = 1; l <= nn; ++l)
          total += binomial(mm, k) * catalan_number(nn - l) * b[k][l - 1];
      b[mm][nn] = total;
    }
  return b[m][n];
}

BigInt comb_count(int n) {
  if (n < 0) throw Error("comb_count: negative parameter");
  std::vector<BigInt> e(n + 1);
  e[0] = 1;
  for (int nn = 1; nn <= n; ++nn) {
    BigInt total = odd_double_factorial(nn + 1);  // (2n+1)!!
    for (int k = 1; k <= nn; ++k) total -= odd_double_factorial(k) * e[nn - k];
    e[nn] = total;
  }
  return e[n];
}

SeriesCheckReport broom_series_checks(int order_x, int order_y) {
  if (order_x > 16 || order_y > 64)
    throw SizeGuardError("broom_series_checks: truncation order too large");
  SeriesCheckReport report{true, {}, order_x, order_y};
  BigIntSeries c = catalan_series(order_y);
  std::vector<BigIntSeries> b;  // B_m(y) from the recurrence
  for (int m = 0; m <= order_x; ++m) {
    BigIntSeries bm(order_y);
    for (int n = 0; n <= order_y; ++n) bm[n] = broom_count(m, n);
    b.push_back(bm);
  }
  auto one = BigIntSeries::constant(order_y, 1);
  for (int m = 0; m <= order_x; ++m) {
    BigIntSeries sum(order_y);
    for (int k = 0; k <= m; ++k) sum = sum + binomial(m, k) * b[k];
    if (!(b[m] == one + (c * sum).shift_up())) {
      report.passed = false;
      report.failures.push_back("product identity fails at x^" + std::to_string(m));
    }
    BigIntSeries alt(order_y);
    for (int k = 0; k <= m; ++k) {
      BigInt sign = (m - k) % 2 ? -1 : 1;
      alt = alt + (sign * binomial(m, k)) * b[k];
    }
    // At m = 0 the binomial inversion keeps the constant term, so the
    // alternating sum overshoots y B_0 C by exactly 1.
    if (m == 0) alt = alt - one;
    if (!((b[m] * c).shift_up() == alt)) {
      report.passed = false;
      report.failures.push_back("signed binomial identity fails at m = " + std::to_string(m));
    }
  }
  if (order_x >= 2) {
    BigIntSeries b2 = c * c * c * (one + c.shift_up());
    if (!(b[2] == b2)) {
      report.passed = false;
      report.failures.push_back("B_2 = C^3 (1 + yC) fails");
    }
  }
  return report;
}

bool is_valid_labeled_dyck_path(const LabeledDyckPath& p) {
  int h = 0;
  std::size_t li = 0;
  for (bool up : p.up) {
    if (up) {
      ++h;
    } else {
      if (h <= 0 || li >= p.labels.size()) return false;
      if (p.labels[li] < 0 || p.labels[li] > h) return false;
      ++li;
      --h;
    }
  }
  return h == 0 && li == p.labels.size();
}

bool is_indecomposable(const PerfectMatching& m) {
  int two_m = int(m.partner.size()) - 1;
  for (int k = 2; k < two_m; k += 2) {
    bool closed = true;
    for (int p = 1; p <= k && closed; ++p)
      if (m.partner[p] > k) closed = false;
    if (closed) return false;
  }
  return true;
}

std::vector<LabeledDyckPath> enumerate_labeled_dyck_paths(int n) {
  std::vector<LabeledDyckPath> out;
  LabeledDyckPath cur;
  auto rec = [&](auto&& self, int ups, int downs, int h) -> void {
    if (ups == n && downs == n) {
      out.push_back(cur);
      return;
    }
    if (ups < n) {
      cur.up.push_back(true);
      self(self, ups + 1, downs, h + 1);
      cur.up.pop_back();
    }
    if (h > 0) {
      cur.up.push_back(false);
      for (int label = 0; label <= h; ++label) {
        cur.labels.push_back(label);
        self(self, ups, downs + 1, h - 1);
        cur.labels.pop_back();
      }
      cur.up.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(int two_m) {
  if (two_m % 2) throw Error("enumerate_perfect_matchings: odd ground set");
  if (two_m > 14) throw SizeGuardError("enumerate_perfect_matchings: ground set too large");
  std::vector<PerfectMatching> out;
  PerfectMatching cur{std::vector<int>(two_m + 1, 0)};
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    for (int p = 1; p <= two_m; ++p)
      if (!cur.partner[p]) {
        first = p;
        break;
      }
    if (!first) {
      out.push_back(cur);
      return;
    }
    for (int q = first + 1; q <= two_m; ++q) {
      if (cur.partner[q]) continue;
      cur.partner[first] = q;
      cur.partner[q] = first;
      self(self);
      cur.partner[first] = 0;
      cur.partner[q] = 0;
    }
  };
  rec(rec);
  return out;
}

LabeledDyckPath comb_ornamentation_to_dyck(int n, const Ornamentation& o) {
  Digraph t = comb(n);
  validate_ornamentation(t, o);
  LabeledDyckPath path;
  int h = 0;
  for (int i = 1; i <= n; ++i) {
    int a = 0, l = 0;
    for (int j = 1; j <= n; ++j) {
      if (vhas(o.at[2 * j], 2 * i)) ++a;          // handle node 2i inside bubble of 2j
      if (vhas(o.at[2 * j], 2 * i - 1)) ++l;      // tooth 2i-1 inside bubble of 2j
    }
    if (a < h || a < 1) throw Error("comb_ornamentation_to_dyck: inconsistent heights");
    for (; h < a; ++h) path.up.push_back(true);
    path.up.push_back(false);
    path.labels.push_back(l);
    --h;
  }
  if (h != 0) throw Error("comb_ornamentation_to_dyck: path does not close");
  if (!is_valid_labeled_dyck_path(path)) throw Error("comb_ornamentation_to_dyck: invalid path");
  return path;
}

Ornamentation dyck_to_comb_ornamentation(int n, const LabeledDyckPath& p) {
  if (!is_valid_labeled_dyck_path(p) || int(p.labels.size()) != n)
    throw Error("dyck_to_comb_ornamentation: not a labeled Dyck path of semilength n");
  Digraph t = comb(n);
  // Bubble intervals behave like a stack: the j-th down step closes the most
  // recently opened interval, whose left end is the index of the down step
  // that was pending when it opened.
  std::vector<int> stack, match_down(n + 1, 0);
  int down_seen = 0;
  for (bool up : p.up) {
    if (up) {
      stack.push_back(down_seen + 1);
    } else {
      ++down_seen;
      match_down[down_seen] = stack.back();
      stack.pop_back();
    }
  }
  Ornamentation o{2 * n, std::vector<Vset>(2 * n + 1, 0)};
  for (int v = 1; v <= 2 * n; ++v) o.at[v] = vbit(v);
  for (int j = 1; j <= n; ++j)
    for (int k = match_down[j]; k <= j; ++k) o.at[2 * j] |= vbit(2 * k);
  // Tooth i goes into the labels[i-1] largest bubbles that contain handle node 2i.
  for (int i = 1; i <= n; ++i) {
    std::vector<int> containing;
    for (int j = 1; j <= n; ++j)
      if (match_down[j] <= i && i <= j) containing.push_back(j);
    int take = p.labels[i - 1];
    if (take > int(containing.size()))
      throw Error("dyck_to_comb_ornamentation: label exceeds bubble chain");
    for (std::size_t k = containing.size() - take; k < containing.size(); ++k)
      o.at[2 * containing[k]] |= vbit(2 * i - 1);
  }
  validate_ornamentation(t, o);
  return o;
}

PerfectMatching dyck_to_matching(const LabeledDyckPath& p) {
  if (!is_valid_labeled_dyck_path(p)) throw Error("dyck_to_matching: invalid labeled Dyck path");
  int n = int(p.labels.size());
  PerfectMatching m{std::vector<int>(2 * n + 3, 0)};
  std::vector<int> free_points{1};
  int next_point = 1;
  std::size_t li = 0;
  for (bool up : p.up) {
    ++next_point;
    if (up) {
      free_points.push_back(next_point);
    } else {
      int label = p.labels[li++];
      int idx = int(free_points.size()) - 1 - label;  // (label+1)-st from the right
      int partner = free_points[idx];
      free_points.erase(free_points.begin() + idx);
      m.partner[next_point] = partner;
      m.partner[partner] = next_point;
    }
  }
  ++next_point;  // the closing point pairs with the last free point
  m.partner[next_point] = free_points[0];
  m.partner[free_points[0]] = next_point;
  return m;
}

LabeledDyckPath matching_to_dyck(const PerfectMatching& m) {
  int two_m = int(m.partner.size()) - 1;
  LabeledDyckPath p;
  std::vector<int> free_points{1};
  for (int point = 2; point < two_m; ++point) {
    if (m.partner[point] > point) {
      p.up.push_back(true);
      free_points.push_back(point);
    } else {
      p.up.push_back(false);
      auto it = std::find(free_points.begin(), free_points.end(), m.partner[point]);
      if (it == free_points.end()) throw Error("matching_to_dyck: partner not free");
      p.labels.push_back(int(free_points.end() - it) - 1);
      free_points.erase(it);
    }
  }
  if (free_points.size() != 1 || m.partner[two_m] != free_points[0])
    throw Error("matching_to_dyck: closing point mismatch");
  if (!is_valid_labeled_dyck_path(p))
    throw Error("matching_to_dyck: matching is decomposable");
  return p;
}

BijectionReport comb_bijections(int n) {
  if (n > 5) throw SizeGuardError("comb_bijections: bound exceeded");
  BijectionReport report;
  auto orns = enumerate_ornamentations(comb(n));
  auto dycks = enumerate_labeled_dyck_paths(n);
  std::vector<PerfectMatching> matchings;
  for (auto& m : enumerate_perfect_matchings(2 * n + 2))
    if (is_indecomposable(m)) matchings.push_back(m);
  report.ornamentations = (long long)orns.size();
  report.dyck_paths = (long long)dycks.size();
  report.matchings = (long long)matchings.size();

  BigInt expected = comb_count(n);
  if (BigInt(report.ornamentations) != expected || BigInt(report.dyck_paths) != expected ||
      BigInt(report.matchings) != expected) {
    report.passed = false;
    report.failures.push_back("cardinalities disagree with the comb count");
  }

  std::set<LabeledDyckPath> dyck_set(dycks.begin(), dycks.end());
  std::set<LabeledDyckPath> seen_paths;
  for (auto& o : orns) {
    LabeledDyckPath p = comb_ornamentation_to_dyck(n, o);
    if (!dyck_set.count(p) || !seen_paths.insert(p).second) {
      report.passed = false;
      report.failures.push_back("ornamentation -> path not a bijection");
      break;
    }
    if (!(dyck_to_comb_ornamentation(n, p) == o)) {
      report.passed = false;
      report.failures.push_back("ornamentation roundtrip differs");
      break;
    }
  }
  std::set<PerfectMatching> matching_set(matchings.begin(), matchings.end());
  std::set<PerfectMatching> seen_matchings;
  for (auto& p : dycks) {
    PerfectMatching m = dyck_to_matching(p);
    if (!matching_set.count(m) || !seen_matchings.insert(m).second) {
      report.passed = false;
      report.failures.push_back("path -> matching not a bijection");
      break;
    }
    if (!(matching_to_dyck(m) == p)) {
      report.passed = false;
      report.failures.push_back("path roundtrip differs");
      break;
    }
  }
  return report;
}

namespace {

ClosedFormReport closed_forms(const Digraph& t, const BigInt& reori_formula,
                              const BigInt& areori_formula, const BigInt& sour_formula) {
  ClosedFormReport report;
  report.reorientations = reori_formula;
  report.acyclic_reorientations = areori_formula;
  report.sourcings = sour_formula;
  Digraph closure = transitive_closure(t);
  if (BigInt(enumerate_reorientations(closure).size()) != reori_formula) {
    report.passed = false;
    report.failures.push_back("reorientation count differs from closed form");
  }
  if (BigInt(enumerate_acyclic_reorientations(closure).size()) != areori_formula) {
    report.passed = false;
    report.failures.push_back("acyclic reorientation count differs from closed form");
  }
  if (BigInt(enumerate_sourcings(path_hypergraph(t)).size()) != sour_formula) {
    report.passed = false;
    report.failures.push_back("sourcing count differs from closed form");
  }
  return report;
}

}  // namespace

ClosedFormReport closed_form_counts_broom(int m, int n) {
  if (m + n > 7) throw SizeGuardError("closed_form_counts_broom: bound exceeded");
  BigInt reori = pow(BigInt(2), n * (2 * m + n - 1) / 2);
  BigInt areori = factorial(n) * pow(BigInt(n + 1), m);
  BigInt sour = pow(factorial(n + 1), m);
  for (int k = 1; k <= n; ++k) sour *= pow(BigInt(k), n + 1 - k);
  return closed_forms(broom(m, n), reori, areori, sour);
}

ClosedFormReport closed_form_counts_comb(int n) {
  if (n > 3) throw SizeGuardError("closed_form_counts_comb: bound exceeded");
  BigInt reori = pow(BigInt(2), n * n);
  BigInt areori = factorial(n) * factorial(n + 1);
  BigInt sour = 1;
  for (int k = 1; k <= n; ++k) sour *= pow(BigInt(k), n + 1 - k) * factorial(k + 1);
  return closed_forms(comb(n), reori, areori, sour);
}

std::string broom_table_csv(int max_m, int max_n) {
  std::ostringstream os;
  os << "m\\n";
  for (int n = 0; n <= max_n; ++n) os << "," << n;
  os << "\n";
  for (int m = 0; m <= max_m; ++m) {
    os << m;
    for (int n = 0; n <= max_n; ++n) os << "," << broom_count(m, n);
    os << "\n";
  }
  return os.str();
}

}  // namespace ornlat
