#include "ornlat/poset.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>

namespace ornlat {

namespace {
constexpr int kMaxLatticeSize = 1 << 16;
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> keys,
                                       const std::function<bool(int, int)>& leq) {
  int n = int(keys.size());
  {
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("poset: duplicate element keys");
  }
  std::vector<Bitset> below_orig(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    if (!leq(i, i)) throw RelationError("poset: reflexivity fails at '" + keys[i] + "'");
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) below_orig[j].set(i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (below_orig[j].test(i) && below_orig[i].test(j))
        throw RelationError("poset: antisymmetry fails at ('" + keys[i] + "','" + keys[j] + "')");
  for (int j = 0; j < n; ++j) {
    below_orig[j].for_each([&](int i) {
      if (!below_orig[i].subset_of(below_orig[j])) {
        int k = -1;
        below_orig[i].for_each([&](int x) {
          if (k < 0 && !below_orig[j].test(x)) k = x;
        });
        throw RelationError("poset: transitivity fails at ('" + keys[k] + "' <= '" + keys[i] +
                            "' <= '" + keys[j] + "')");
      }
    });
  }

  // Deterministic linear extension: repeatedly take the minimal element with
  // the smallest original index.
  std::vector<int> order;
  std::vector<bool> used(n, false);
  std::vector<int> down_left(n);
  for (int i = 0; i < n; ++i) down_left[i] = below_orig[i].count() - 1;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i] && down_left[i] == 0) {
        pick = i;
        break;
      }
    used[pick] = true;
    order.push_back(pick);
    for (int j = 0; j < n; ++j)
      if (!used[j] && below_orig[j].test(pick)) --down_left[j];
  }

  FinitePoset p;
  p.keys_.resize(n);
  p.new_index_.assign(n, -1);
  p.orig_index_ = order;
  for (int pos = 0; pos < n; ++pos) {
    p.keys_[pos] = keys[order[pos]];
    p.new_index_[order[pos]] = pos;
  }
  p.below_.assign(n, Bitset(n));
  p.above_.assign(n, Bitset(n));
  for (int j = 0; j < n; ++j)
    below_orig[order[j]].for_each([&](int i) {
      p.below_[j].set(p.new_index_[i]);
      p.above_[p.new_index_[i]].set(j);
    });

  // Hasse diagram = transitive reduction.
  p.cov_up_.assign(n, Bitset(n));
  p.cov_down_.assign(n, Bitset(n));
  for (int j = 0; j < n; ++j) {
    Bitset strict = p.below_[j];
    strict.reset(j);
    Bitset lower = strict;
    strict.for_each([&](int i) {
      Bitset mid = p.above_[i] & lower;
      mid.reset(i);
      if (mid.none()) {
        p.covers_.push_back({i, j});
        p.cov_up_[i].set(j);
        p.cov_down_[j].set(i);
      }
    });
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

int FinitePoset::index_of(const std::string& key) const {
  for (int i = 0; i < size(); ++i)
    if (keys_[i] == key) return i;
  return -1;
}

std::optional<int> FinitePoset::bottom() const {
  if (size() == 0) return std::nullopt;
  if (above_[0].count() == size()) return 0;
  return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
  if (size() == 0) return std::nullopt;
  int t = size() - 1;
  if (below_[t].count() == size()) return t;
  return std::nullopt;
}

std::optional<int> FinitePoset::meet(int i, int j) const {
  Bitset lower = below_[i] & below_[j];
  int m = lower.find_last();
  if (m < 0) return std::nullopt;
  if (!lower.subset_of(below_[m])) return std::nullopt;
  return m;
}

std::optional<int> FinitePoset::join(int i, int j) const {
  Bitset upper = above_[i] & above_[j];
  int m = upper.find_first();
  if (m < 0) return std::nullopt;
  if (!upper.subset_of(above_[m])) return std::nullopt;
  return m;
}

LatticeCheck FinitePoset::lattice_check() const {
  if (size() > kMaxLatticeSize) throw SizeGuardError("lattice_check: poset larger than 2^16");
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      if (leq(i, j) || leq(j, i)) continue;
      bool no_meet = !meet(i, j).has_value();
      bool no_join = !join(i, j).has_value();
      if (no_meet || no_join) return {false, i, j, no_meet, no_join};
    }
  return {true};
}

std::vector<int> FinitePoset::join_irreducibles() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cov_down_[i].count() == 1) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::meet_irreducibles() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cov_up_[i].count() == 1) out.push_back(i);
  return out;
}

int FinitePoset::lower_cover(int i) const {
  if (cov_down_[i].count() != 1)
    throw NonUniqueCoverError("lower_cover: '" + keys_[i] + "' is not join irreducible");
  return cov_down_[i].find_first();
}

int FinitePoset::upper_cover(int i) const {
  if (cov_up_[i].count() != 1)
    throw NonUniqueCoverError("upper_cover: '" + keys_[i] + "' is not meet irreducible");
  return cov_up_[i].find_first();
}

std::optional<int> FinitePoset::k_join(int x, int y) const {
  Bitset k = below_[y];
  k.subtract(below_[x]);
  int m = k.find_first();
  if (m < 0) return std::nullopt;
  if (!k.subset_of(above_[m])) return std::nullopt;
  return m;
}

std::optional<int> FinitePoset::k_meet(int x, int y) const {
  Bitset k = above_[x];
  k.subtract(above_[y]);
  int m = k.find_last();
  if (m < 0) return std::nullopt;
  if (!k.subset_of(below_[m])) return std::nullopt;
  return m;
}

bool FinitePoset::is_join_semidistributive() const {
  if (!is_lattice()) throw NotALatticeError("is_join_semidistributive: not a lattice");
  bool cover_condition = true;
  for (auto [x, y] : covers_)
    if (!k_join(x, y)) {
      cover_condition = false;
      break;
    }
  // Cross-check against the implication x v y = x v z => x v (y ^ z) = x v y.
  bool triple_condition = true;
  for (int x = 0; x < size() && triple_condition; ++x)
    for (int y = 0; y < size() && triple_condition; ++y)
      for (int z = y + 1; z < size(); ++z) {
        int xy = *join(x, y);
        if (xy != *join(x, z)) continue;
        if (*join(x, *meet(y, z)) != xy) {
          triple_condition = false;
          break;
        }
      }
  if (cover_condition != triple_condition)
    throw Error("is_join_semidistributive: cover and triple criteria disagree");
  return cover_condition;
}

bool FinitePoset::is_meet_semidistributive() const {
  if (!is_lattice()) throw NotALatticeError("is_meet_semidistributive: not a lattice");
  bool cover_condition = true;
  for (auto [x, y] : covers_)
    if (!k_meet(x, y)) {
      cover_condition = false;
      break;
    }
  bool triple_condition = true;
  for (int x = 0; x < size() && triple_condition; ++x)
    for (int y = 0; y < size() && triple_condition; ++y)
      for (int z = y + 1; z < size(); ++z) {
        int xy = *meet(x, y);
        if (xy != *meet(x, z)) continue;
        if (*meet(x, *join(y, z)) != xy) {
          triple_condition = false;
          break;
        }
      }
  if (cover_condition != triple_condition)
    throw Error("is_meet_semidistributive: cover and triple criteria disagree");
  return cover_condition;
}

JoinRepresentation FinitePoset::canonical_join_representation(int x) const {
  if (!is_join_semidistributive())
    throw SemidistributivityError("canonical_join_representation: lattice not join semidistributive");
  std::vector<int> parts;
  cov_down_[x].for_each([&](int w) {
    auto k = k_join(w, x);
    if (!k) throw SemidistributivityError("canonical_join_representation: k_join not unique");
    parts.push_back(*k);
  });
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return {x, parts};
}

JoinRepresentation FinitePoset::canonical_meet_representation(int x) const {
  if (!is_meet_semidistributive())
    throw SemidistributivityError("canonical_meet_representation: lattice not meet semidistributive");
  std::vector<int> parts;
  cov_up_[x].for_each([&](int w) {
    auto k = k_meet(x, w);
    if (!k) throw SemidistributivityError("canonical_meet_representation: k_meet not unique");
    parts.push_back(*k);
  });
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return {x, parts};
}

int FinitePoset::kappa_join(int m) const {
  int up = upper_cover(m);
  auto k = k_join(m, up);
  if (!k) throw SemidistributivityError("kappa_join: no unique minimal complement");
  return *k;
}

int FinitePoset::kappa_meet(int j) const {
  int down = lower_cover(j);
  auto k = k_meet(down, j);
  if (!k) throw SemidistributivityError("kappa_meet: no unique maximal complement");
  return *k;
}

std::string FinitePoset::to_json() const {
  nlohmann::json j;
  j["elements"] = keys_;
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : covers_) j["covers"].push_back({a, b});
  return j.dump();
}

std::string FinitePoset::to_dot() const {
  // Rank hint: elements of equal height share a rank group.
  std::vector<int> rank(size(), 0);
  int max_rank = 0;
  for (int i = 0; i < size(); ++i) {
    cov_down_[i].for_each([&](int d) { rank[i] = std::max(rank[i], rank[d] + 1); });
    max_rank = std::max(max_rank, rank[i]);
  }
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < size(); ++i) os << "  n" << i << " [label=\"" << keys_[i] << "\"];\n";
  for (int r = 0; r <= max_rank; ++r) {
    os << "  { rank=same;";
    for (int i = 0; i < size(); ++i)
      if (rank[i] == r) os << " n" << i << ";";
    os << " }\n";
  }
  for (auto [a, b] : covers_) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

MacNeille macneille_completion(const FinitePoset& p) {
  int n = p.size();
  // Cuts are exactly the intersections of principal ideals, plus the full set.
  std::vector<Bitset> cuts;
  std::set<Bitset> seen;
  Bitset full(n);
  for (int i = 0; i < n; ++i) full.set(i);
  cuts.push_back(full);
  seen.insert(full);
  for (int x = 0; x < n; ++x) {
    std::size_t sz = cuts.size();
    for (std::size_t c = 0; c < sz; ++c) {
      Bitset inter = cuts[c] & p.below(x);
      if (seen.insert(inter).second) cuts.push_back(inter);
    }
  }
  std::sort(cuts.begin(), cuts.end(), [n](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    for (int i = 0; i < n; ++i) {
      bool ai = a.test(i), bi = b.test(i);
      if (ai != bi) return bi;
    }
    return false;
  });

  std::vector<std::string> keys;
  std::vector<int> principal_of(cuts.size(), -1);
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    int m = cuts[c].find_last();
    if (m >= 0 && cuts[c] == p.below(m)) {
      principal_of[c] = m;
      keys.push_back(p.key(m));
    } else {
      // Synthesized element, keyed by the maximal members of the cut.
      std::string k = "{";
      bool first = true;
      cuts[c].for_each([&](int z) {
        Bitset up = p.above(z) & cuts[c];
        up.reset(z);
        if (up.none()) {
          if (!first) k += "|";
          k += p.key(z);
          first = false;
        }
      });
      k += "}";
      keys.push_back(k);
    }
  }

  FinitePoset lattice = FinitePoset::from_relation(
      keys, [&](int a, int b) { return cuts[a].subset_of(cuts[b]); });
  std::vector<int> embedding(n, -1);
  for (std::size_t c = 0; c < cuts.size(); ++c)
    if (principal_of[c] >= 0) embedding[principal_of[c]] = lattice.index_of_original(int(c));
  return {std::move(lattice), std::move(embedding)};
}

namespace {

bool extend_isomorphism(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& cp,
                        const std::vector<int>& cq, std::vector<int>& map,
                        std::vector<bool>& used, int depth,
                        const std::vector<int>& order) {
  if (depth == p.size()) return true;
  int v = order[depth];
  // Candidate targets in key-lexicographic order for a deterministic witness.
  std::vector<int> cands;
  for (int w = 0; w < q.size(); ++w)
    if (!used[w] && cq[w] == cp[v]) cands.push_back(w);
  std::sort(cands.begin(), cands.end(),
            [&](int a, int b) { return q.key(a) < q.key(b); });
  for (int w : cands) {
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d) {
      int u = order[d];
      if (p.leq(u, v) != q.leq(map[u], w) || p.leq(v, u) != q.leq(w, map[u])) ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_isomorphism(p, q, cp, cq, map, used, depth + 1, order)) return true;
    used[w] = false;
    map[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  int n = p.size();
  if (n == 0) return std::vector<int>{};

  auto histogram = [](const std::vector<int>& c) {
    std::map<int, int> h;
    for (int x : c) ++h[x];
    return h;
  };
  // Joint colour refinement on the disjoint union, seeded by
  // (|below|, |above|, up-degree, down-degree).
  std::vector<int> cp(n), cq(n);
  {
    std::map<std::tuple<int, int, int, int>, int> table;
    std::vector<std::tuple<int, int, int, int>> sp(n), sq(n);
    for (int i = 0; i < n; ++i) {
      sp[i] = std::make_tuple(p.below(i).count(), p.above(i).count(), p.covers_up(i).count(),
                              p.covers_down(i).count());
      sq[i] = std::make_tuple(q.below(i).count(), q.above(i).count(), q.covers_up(i).count(),
                              q.covers_down(i).count());
    }
    for (int i = 0; i < n; ++i) {
      if (table.find(sp[i]) == table.end()) table.emplace(sp[i], int(table.size()));
      if (table.find(sq[i]) == table.end()) table.emplace(sq[i], int(table.size()));
    }
    for (int i = 0; i < n; ++i) {
      cp[i] = table[sp[i]];
      cq[i] = table[sq[i]];
    }
    for (int round = 0; round < n; ++round) {
      std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> t2;
      auto sig_of = [&](const FinitePoset& r, const std::vector<int>& c, int i) {
        std::vector<int> up, down;
        r.covers_up(i).for_each([&](int j) { up.push_back(c[j]); });
        r.covers_down(i).for_each([&](int j) { down.push_back(c[j]); });
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        return std::make_tuple(c[i], std::move(up), std::move(down));
      };
      std::vector<int> np(n), nq(n);
      for (int i = 0; i < n; ++i) {
        auto s = sig_of(p, cp, i);
        auto it = t2.find(s);
        if (it == t2.end()) it = t2.emplace(std::move(s), int(t2.size())).first;
        np[i] = it->second;
      }
      for (int i = 0; i < n; ++i) {
        auto s = sig_of(q, cq, i);
        auto it = t2.find(s);
        if (it == t2.end()) it = t2.emplace(std::move(s), int(t2.size())).first;
        nq[i] = it->second;
      }
      if (np == cp && nq == cq) break;
      cp = np;
      cq = nq;
    }
  }
  if (histogram(cp) != histogram(cq)) return std::nullopt;

  // Process rarest colour classes first.
  auto hist = histogram(cp);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (hist[cp[a]] != hist[cp[b]]) return hist[cp[a]] < hist[cp[b]];
    if (cp[a] != cp[b]) return cp[a] < cp[b];
    return p.key(a) < p.key(b);
  });

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  if (extend_isomorphism(p, q, cp, cq, map, used, 0, order)) return map;
  return std::nullopt;
}

}  // namespace ornlat
