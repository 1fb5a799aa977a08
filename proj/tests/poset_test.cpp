#include <doctest.h>

#include <algorithm>
#include <set>

#include "ornlat/poset.hpp"

using namespace ornlat;

namespace {

// Boolean lattice on `bits` atoms: subsets ordered by inclusion.
FinitePoset boolean_lattice(int bits) {
  std::vector<std::string> keys;
  for (int s = 0; s < (1 << bits); ++s) keys.push_back("s" + std::to_string(s));
  return FinitePoset::from_relation(keys, [](int a, int b) { return (a & ~b) == 0; });
}

FinitePoset chain(int k) {
  std::vector<std::string> keys;
  for (int i = 0; i < k; ++i) keys.push_back("c" + std::to_string(i));
  return FinitePoset::from_relation(keys, [](int a, int b) { return a <= b; });
}

FinitePoset antichain(int k) {
  std::vector<std::string> keys;
  for (int i = 0; i < k; ++i) keys.push_back("a" + std::to_string(i));
  return FinitePoset::from_relation(keys, [](int a, int b) { return a == b; });
}

// Exhaustive lattice-axiom check straight from the definitions.
void check_lattice_axioms(const FinitePoset& p) {
  REQUIRE(p.is_lattice());
  int n = p.size();
  for (int x = 0; x < n; ++x) {
    CHECK(*p.meet(x, x) == x);
    CHECK(*p.join(x, x) == x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CHECK(*p.meet(x, y) == *p.meet(y, x));
      CHECK(*p.join(x, y) == *p.join(y, x));
      CHECK(*p.meet(x, *p.join(x, y)) == x);
      CHECK(*p.join(x, *p.meet(x, y)) == x);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        CHECK(*p.meet(x, *p.meet(y, z)) == *p.meet(*p.meet(x, y), z));
        CHECK(*p.join(x, *p.join(y, z)) == *p.join(*p.join(x, y), z));
      }
}

}  // namespace

TEST_CASE("trivial and small posets") {
  FinitePoset one = FinitePoset::from_relation({"x"}, [](int, int) { return true; });
  CHECK(one.size() == 1);
  CHECK(one.is_lattice());

  FinitePoset b2 = boolean_lattice(2);
  CHECK(b2.size() == 4);
  CHECK(b2.covers().size() == 4);
  CHECK(b2.is_lattice());
}

TEST_CASE("relation validation names the axiom") {
  CHECK_THROWS_AS(FinitePoset::from_relation({"a", "b"}, [](int, int) { return true; }),
                  RelationError);
  CHECK_THROWS_AS(FinitePoset::from_relation({"a"}, [](int, int) { return false; }),
                  RelationError);
  // a <= b, b <= c, but not a <= c
  CHECK_THROWS_AS(
      FinitePoset::from_relation(
          {"a", "b", "c"},
          [](int i, int j) { return i == j || (i == 0 && j == 1) || (i == 1 && j == 2); }),
      RelationError);
}

TEST_CASE("boolean lattice meet is intersection") {
  FinitePoset p = boolean_lattice(3);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int m = *p.meet(p.index_of("s" + std::to_string(a)), p.index_of("s" + std::to_string(b)));
      CHECK(p.key(m) == "s" + std::to_string(a & b));
    }
  check_lattice_axioms(p);
}

TEST_CASE("antichain is not a lattice") {
  FinitePoset p = antichain(2);
  auto verdict = p.lattice_check();
  CHECK(!verdict.is_lattice);
  CHECK(verdict.missing_meet);
  CHECK(verdict.missing_join);
}

TEST_CASE("join irreducibles of small lattices") {
  CHECK(boolean_lattice(2).join_irreducibles().size() == 2);
  FinitePoset c = chain(5);
  CHECK(c.join_irreducibles().size() == 4);  // all non-bottom elements
  CHECK(c.meet_irreducibles().size() == 4);
  FinitePoset b2 = boolean_lattice(2);
  CHECK_THROWS_AS(b2.lower_cover(b2.size() - 1), NonUniqueCoverError);
}

TEST_CASE("semidistributivity verdicts") {
  CHECK(boolean_lattice(3).is_join_semidistributive());
  CHECK(boolean_lattice(3).is_meet_semidistributive());
  CHECK(chain(4).is_join_semidistributive());
  // M3: bottom, three incomparable middles, top; fails both conditions
  FinitePoset m3 = FinitePoset::from_relation(
      {"bot", "x", "y", "z", "top"},
      [](int i, int j) { return i == j || i == 0 || j == 4; });
  CHECK(m3.is_lattice());
  CHECK(!m3.is_join_semidistributive());
  CHECK(!m3.is_meet_semidistributive());
  CHECK_THROWS_AS(antichain(2).is_join_semidistributive(), NotALatticeError);
}

TEST_CASE("canonical join representations in a boolean lattice") {
  FinitePoset p = boolean_lattice(3);
  int bottom = *p.bottom();
  CHECK(p.canonical_join_representation(bottom).parts.empty());
  for (int j : p.join_irreducibles()) {
    auto rep = p.canonical_join_representation(j);
    CHECK(rep.parts == std::vector<int>{j});
  }
  auto rep = p.canonical_join_representation(*p.top());
  CHECK(rep.parts.size() == 3);  // the three atoms
}

TEST_CASE("kappa maps are inverse bijections on semidistributive lattices") {
  for (FinitePoset p : {boolean_lattice(3), chain(5)}) {
    auto ji = p.join_irreducibles();
    auto mi = p.meet_irreducibles();
    std::set<int> ji_set(ji.begin(), ji.end()), mi_set(mi.begin(), mi.end());
    for (int m : mi) {
      int j = p.kappa_join(m);
      CHECK(ji_set.count(j));
      CHECK(p.kappa_meet(j) == m);
    }
    for (int j : ji) {
      int m = p.kappa_meet(j);
      CHECK(mi_set.count(m));
      CHECK(p.kappa_join(m) == j);
    }
  }
}

TEST_CASE("macneille completion of a chain is the chain") {
  auto mac = macneille_completion(chain(4));
  CHECK(mac.lattice.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(mac.embedding[i] >= 0);
  CHECK(poset_isomorphic(mac.lattice, chain(4)));
}

TEST_CASE("macneille completion of an antichain adds bottom and top") {
  auto mac = macneille_completion(antichain(2));
  CHECK(mac.lattice.size() == 4);
  CHECK(mac.lattice.is_lattice());
}

TEST_CASE("macneille completion embedding preserves and reflects order") {
  // fence: a < b > c < d
  FinitePoset fence = FinitePoset::from_relation(
      {"a", "b", "c", "d"}, [](int i, int j) {
        if (i == j) return true;
        return (i == 0 && j == 1) || (i == 2 && j == 1) || (i == 2 && j == 3);
      });
  auto mac = macneille_completion(fence);
  CHECK(mac.lattice.is_lattice());
  for (int i = 0; i < fence.size(); ++i)
    for (int j = 0; j < fence.size(); ++j)
      CHECK(fence.leq(i, j) == mac.lattice.leq(mac.embedding[i], mac.embedding[j]));
  // every completion element is a join and a meet of embedded elements
  for (int c = 0; c < mac.lattice.size(); ++c) {
    int join_acc = -1, meet_acc = -1;
    for (int i = 0; i < fence.size(); ++i) {
      int e = mac.embedding[i];
      if (mac.lattice.leq(e, c)) join_acc = join_acc < 0 ? e : *mac.lattice.join(join_acc, e);
      if (mac.lattice.leq(c, e)) meet_acc = meet_acc < 0 ? e : *mac.lattice.meet(meet_acc, e);
    }
    if (join_acc >= 0) CHECK(join_acc == c);
    if (meet_acc >= 0) CHECK(meet_acc == c);
  }
}

TEST_CASE("macneille completion of a lattice is the lattice itself") {
  for (FinitePoset p : {boolean_lattice(3), chain(6)}) {
    auto mac = macneille_completion(p);
    CHECK(poset_isomorphic(mac.lattice, p));
  }
}

TEST_CASE("lattice is the completion of its irreducibles") {
  FinitePoset p = boolean_lattice(3);
  auto ji = p.join_irreducibles();
  auto mi = p.meet_irreducibles();
  std::set<int> keep(ji.begin(), ji.end());
  keep.insert(mi.begin(), mi.end());
  std::vector<int> elems(keep.begin(), keep.end());
  std::vector<std::string> keys;
  for (int e : elems) keys.push_back(p.key(e));
  FinitePoset sub = FinitePoset::from_relation(
      keys, [&](int a, int b) { return p.leq(elems[a], elems[b]); });
  CHECK(poset_isomorphic(macneille_completion(sub).lattice, p));
}

TEST_CASE("poset isomorphism basics") {
  FinitePoset c3 = chain(3);
  auto witness = poset_isomorphism(c3, c3);
  REQUIRE(witness.has_value());
  for (int i = 0; i < 3; ++i) CHECK((*witness)[i] == i);
  CHECK(!poset_isomorphic(chain(3), antichain(3)));
  CHECK(!poset_isomorphic(chain(3), chain(4)));
  // relabeled boolean lattices are isomorphic
  FinitePoset b = boolean_lattice(2);
  FinitePoset b2 = FinitePoset::from_relation(
      {"w", "x", "y", "z"}, [](int a, int b_) {
        int map[4] = {3, 1, 2, 0};  // different element order
        return (map[a] & ~map[b_]) == 0;
      });
  auto iso = poset_isomorphism(b, b2);
  REQUIRE(iso.has_value());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(b.leq(i, j) == b2.leq((*iso)[i], (*iso)[j]));
}

TEST_CASE("poset json and dot emission") {
  FinitePoset p = boolean_lattice(2);
  CHECK(p.to_json().find("\"covers\"") != std::string::npos);
  CHECK(p.to_dot().find("->") != std::string::npos);
}
