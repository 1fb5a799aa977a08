#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "ornlat/digraph.hpp"
#include "ornlat/ornament.hpp"
#include "ornlat/series.hpp"

namespace ornlat {

// Rooted tree with m leaves attached to the start of an n-vertex path:
// bristles 1..m, handle m+1..m+n.
Digraph broom(int m, int n);
// Teeth 1,3,...,2n-1 and handle 2,4,...,2n; the parent of i is i+1 for odd i
// and i+2 for even i < 2n.
Digraph comb(int n);

BigInt broom_count(int m, int n);
BigInt comb_count(int n);

struct SeriesCheckReport {
  bool passed = true;
  std::vector<std::string> failures;
  int order_x = 0, order_y = 0;
};
// Coefficientwise verification of the broom generating-function identities:
// (a) B_m = 1 + yC * sum_k binom(m,k) B_k for m <= order_x (the product
//     identity B(x,y)(1 - e^x y C(y)) = e^x read per x-coefficient),
// (b) y B_m C = sum_k (-1)^(m-k) binom(m,k) B_k,
// (c) B_2 = C^3 (1 + yC),
// with every B_m coefficient coming from the recurrence.
SeriesCheckReport broom_series_checks(int order_x, int order_y);

// Dyck path with each down step labeled by an integer in [0, h] where h is
// the height of the step's top endpoint.
struct LabeledDyckPath {
  std::vector<bool> up;     // step sequence, true = up
  std::vector<int> labels;  // one per down step, in path order
  bool operator==(const LabeledDyckPath& o) const = default;
  bool operator<(const LabeledDyckPath& o) const {
    return std::tie(up, labels) < std::tie(o.up, o.labels);
  }
};

struct PerfectMatching {
  std::vector<int> partner;  // 1-based over [2m], partner[0] unused
  bool operator==(const PerfectMatching& o) const = default;
  bool operator<(const PerfectMatching& o) const { return partner < o.partner; }
};

bool is_valid_labeled_dyck_path(const LabeledDyckPath& p);
// No proper balanced prefix [2k] is a union of pairs.
bool is_indecomposable(const PerfectMatching& m);

std::vector<LabeledDyckPath> enumerate_labeled_dyck_paths(int n);
std::vector<PerfectMatching> enumerate_perfect_matchings(int two_m);

// The three bijections between comb ornamentations, labeled Dyck paths of
// semilength n, and indecomposable perfect matchings of [2n+2].
LabeledDyckPath comb_ornamentation_to_dyck(int n, const Ornamentation& o);
Ornamentation dyck_to_comb_ornamentation(int n, const LabeledDyckPath& p);
PerfectMatching dyck_to_matching(const LabeledDyckPath& p);
LabeledDyckPath matching_to_dyck(const PerfectMatching& m);

struct BijectionReport {
  bool passed = true;
  long long ornamentations = 0, dyck_paths = 0, matchings = 0;
  std::vector<std::string> failures;
};
BijectionReport comb_bijections(int n);

struct ClosedFormReport {
  bool passed = true;
  std::vector<std::string> failures;
  BigInt reorientations, acyclic_reorientations, sourcings;
};
// Compares |Reori(tc(t))|, |AReori(tc(t))|, |Sour(P(t))| for a broom or comb
// against the closed forms, with the brute-force counts as the other side.
ClosedFormReport closed_form_counts_broom(int m, int n);
ClosedFormReport closed_form_counts_comb(int n);

std::string broom_table_csv(int max_m, int max_n);

}  // namespace ornlat
