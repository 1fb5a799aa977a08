#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ornlat/enumerate.hpp"
#include "ornlat/fixtures.hpp"
#include "ornlat/ornament.hpp"

using namespace ornlat;

namespace {

Vset vs(std::initializer_list<int> members) {
  Vset s = 0;
  for (int v : members) s |= vbit(v);
  return s;
}

Ornamentation orn_of(const Digraph& d, std::map<int, std::vector<int>> sets) {
  Ornamentation o = minimal_ornamentation(d);
  for (auto& [v, members] : sets) {
    o.at[v] = 0;
    for (int u : members) o.at[v] |= vbit(u);
  }
  return o;
}

}  // namespace

TEST_CASE("ornaments at a vertex of a path") {
  Digraph d = fixtures::increasing_path(3);
  CHECK(ornaments_at(d, 2) == std::vector<Vset>{vs({2}), vs({1, 2})});
  CHECK(ornaments_at(d, 1) == std::vector<Vset>{vs({1})});  // source vertex
}

TEST_CASE("ornaments at the sink of the diamond") {
  // brute-force derivation: subsets containing 4 whose members all reach 4 inside
  auto got = ornaments_at(fixtures::diamond(), 4);
  std::vector<Vset> want{vs({4}),       vs({2, 4}),    vs({3, 4}),      vs({1, 2, 4}),
                         vs({2, 3, 4}), vs({1, 3, 4}), vs({1, 2, 3, 4})};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("small ornamentation counts") {
  CHECK(enumerate_ornamentations(Digraph(2, {{1, 2}})).size() == 2);
  CHECK(enumerate_ornamentations(fixtures::increasing_path(3)).size() == 5);
  CHECK(enumerate_ornamentations(broom(2, 2)).size() == 13);  // count table entry
}

TEST_CASE("catalan many ornamentations of a path") {
  for (int n = 1; n <= 7; ++n)
    CHECK(BigInt(enumerate_ornamentations(fixtures::increasing_path(n)).size()) ==
          catalan_number(n));
}

TEST_CASE("minimal and maximal ornamentations") {
  Digraph x = fixtures::x_graph();
  auto all = enumerate_ornamentations(x);
  Ornamentation lo = minimal_ornamentation(x), hi = maximal_ornamentation(x);
  for (const auto& o : all) {
    CHECK(orn_leq(lo, o));
    CHECK(orn_leq(o, hi));
  }
  CHECK(hi.at[4] == down_set(x, 4));
}

TEST_CASE("every enumerated ornamentation is valid") {
  for (const auto& d : {fixtures::x_graph(), fixtures::diamond(), fixtures::r_graph()})
    for (const auto& o : enumerate_ornamentations(d)) CHECK(is_ornamentation(d, o));
}

TEST_CASE("meet and join on the diamond at the sink") {
  Digraph d = fixtures::diamond();
  Ornamentation o1 = orn_of(d, {{4, {1, 2, 4}}});  // singletons elsewhere
  Ornamentation o2 = orn_of(d, {{4, {1, 3, 4}}});
  // largest ornament inside {1,4} is {4}
  CHECK(orn_meet(d, o1, o2).at[4] == vs({4}));
  CHECK(orn_meet(d, o1, o1).at == o1.at);
  CHECK(orn_join(d, o2, o2).at == o2.at);
}

TEST_CASE("meet and join agree with the enumerated lattice order") {
  for (const auto& d : {fixtures::x_graph(), fixtures::diamond(), broom(2, 2),
                        fixtures::increasing_path(4)}) {
    auto all = enumerate_ornamentations(d);
    FinitePoset p = orn_poset(d);
    REQUIRE(p.is_lattice());
    std::map<std::string, int> at;
    for (std::size_t i = 0; i < all.size(); ++i) at[orn_key(all[i])] = int(i);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a; b < all.size(); ++b) {
        int ia = p.index_of(orn_key(all[a])), ib = p.index_of(orn_key(all[b]));
        CHECK(p.key(*p.meet(ia, ib)) == orn_key(orn_meet(d, all[a], all[b])));
        CHECK(p.key(*p.join(ia, ib)) == orn_key(orn_join(d, all[a], all[b])));
      }
  }
}

TEST_CASE("tree meet is the componentwise intersection") {
  for (const auto& t : {fixtures::x_graph(), broom(2, 2), fixtures::increasing_path(4)}) {
    auto all = enumerate_ornamentations(t);
    for (const auto& a : all)
      for (const auto& b : all) {
        Ornamentation m = orn_meet(t, a, b);
        for (int v = 1; v <= t.n(); ++v) CHECK(m.at[v] == (a.at[v] & b.at[v]));
      }
  }
}

TEST_CASE("orn lattice for every digraph on at most 4 vertices") {
  // Thm-level invariant: the ornamentation poset is always a lattice.
  for (int n = 1; n <= 4; ++n) {
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) edges.push_back(pairs[i]);
      CHECK(orn_poset(Digraph(n, edges)).is_lattice());
    }
  }
}

TEST_CASE("cover criterion matches hasse covers") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) edges.push_back(pairs[i]);
      Digraph d(n, edges);
      FinitePoset p = orn_poset(d);
      std::set<std::pair<std::string, std::string>> hasse;
      for (auto [a, b] : p.covers()) hasse.insert({p.key(a), p.key(b)});
      std::set<std::pair<std::string, std::string>> crit;
      for (const auto& c : cover_relations(d)) crit.insert({orn_key(c.lo), orn_key(c.hi)});
      CHECK(hasse == crit);
    }
  }
}

TEST_CASE("cover criterion matches hasse covers on all 5-vertex digraphs") {
  std::vector<Edge> pairs;
  for (int u = 1; u <= 5; ++u)
    for (int v = u + 1; v <= 5; ++v) pairs.push_back({u, v});
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    Digraph d(5, edges);
    FinitePoset p = orn_poset(d);
    std::set<std::pair<std::string, std::string>> hasse;
    for (auto [a, b] : p.covers()) hasse.insert({p.key(a), p.key(b)});
    std::set<std::pair<std::string, std::string>> crit;
    for (const auto& c : cover_relations(d)) crit.insert({orn_key(c.lo), orn_key(c.hi)});
    CHECK(hasse == crit);
  }
}

TEST_CASE("cover counts on small fixtures") {
  CHECK(cover_relations(Digraph(2, {{1, 2}})).size() == 1);
  CHECK(cover_relations(fixtures::increasing_path(3)).size() == 5);  // pentagon
  CHECK(cover_relations(broom(2, 1)).size() == 4);  // boolean lattice on 2 atoms
  // unique witness on trees
  for (const auto& c : cover_relations(fixtures::x_graph())) {
    auto [u, v] = c.witness;
    CHECK(c.hi.at[v] == (c.lo.at[u] | c.lo.at[v]));
  }
}

TEST_CASE("irreducible ornamentations of a path") {
  Digraph t = fixtures::increasing_path(3);
  Ornamentation j13 = jp(t, {1, 2, 3});
  CHECK(j13.at[3] == vs({1, 2, 3}));
  CHECK(j13.at[1] == vs({1}));
  CHECK(j13.at[2] == vs({2}));
  Ornamentation j_edge = jp(t, {1, 2});
  CHECK(j_edge.at[2] == vs({1, 2}));
  Ornamentation m13 = mp(t, {1, 2, 3});
  CHECK(m13.at[1] == vs({1}));
  CHECK(m13.at[2] == vs({2}));      // strip everything below 1
  CHECK(m13.at[3] == vs({2, 3}));
  CHECK_THROWS_AS(jp(t, {1, 3}), NotAPathError);
  CHECK_THROWS_AS(jp(fixtures::diamond(), {1, 2}), NotATreeError);
}

TEST_CASE("join irreducibles of the path lattice are the J_P") {
  Digraph t = fixtures::increasing_path(3);
  FinitePoset p = orn_poset(t);
  auto ji = p.join_irreducibles();
  CHECK(ji.size() == 3);  // one per directed path of I_3
  std::set<std::string> keys;
  for (int i : ji) keys.insert(p.key(i));
  std::set<std::string> want{orn_key(jp(t, {1, 2})), orn_key(jp(t, {2, 3})),
                             orn_key(jp(t, {1, 2, 3}))};
  CHECK(keys == want);
}

TEST_CASE("canonical join representation of the path lattice top") {
  Digraph t = fixtures::increasing_path(3);
  FinitePoset p = orn_poset(t);
  auto rep = p.canonical_join_representation(*p.top());
  // brute-force: minimal irredundant join representations of the top
  std::set<int> got(rep.parts.begin(), rep.parts.end());
  // the top covers two elements, so the canonical representation has <= 2 parts
  CHECK(got.size() == 2);
  int joined = -1;
  for (int part : got) joined = joined < 0 ? part : *p.join(joined, part);
  CHECK(joined == *p.top());
  // irredundant and minimal against every other representation of the top
  for (int sub : got) {
    int other = -1;
    for (int part : got)
      if (part != sub) other = other < 0 ? part : *p.join(other, part);
    if (other >= 0) CHECK(other != *p.top());
  }
}

TEST_CASE("acyclicity of ornamentations on the fixtures") {
  Digraph x = fixtures::x_graph();
  CHECK(is_acyclic_ornamentation(x, minimal_ornamentation(x)));
  auto all_x = enumerate_ornamentations(x);
  auto acyclic_x = acyclic_ornamentations(x);
  CHECK(all_x.size() - acyclic_x.size() == 2);  // two cyclic ornamentations

  Digraph d = fixtures::diamond();
  auto all_d = enumerate_ornamentations(d);
  auto acyclic_d = acyclic_ornamentations(d);
  CHECK(all_d.size() - acyclic_d.size() == 4);  // four cyclic ornamentations
}

TEST_CASE("aorn poset of X is not a lattice") {
  CHECK(!aorn_poset(fixtures::x_graph()).is_lattice());
  CHECK(orn_poset(fixtures::x_graph()).is_lattice());
}

TEST_CASE("lattice axioms hold exhaustively on a mid-size ornamentation lattice") {
  FinitePoset p = orn_poset(fixtures::increasing_path(5));  // 42 elements
  REQUIRE(p.is_lattice());
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CHECK(*p.meet(x, y) == *p.meet(y, x));
      CHECK(*p.join(x, *p.meet(x, y)) == x);
      CHECK(*p.meet(x, *p.join(x, y)) == x);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        CHECK(*p.meet(x, *p.meet(y, z)) == *p.meet(*p.meet(x, y), z));
        CHECK(*p.join(x, *p.join(y, z)) == *p.join(*p.join(x, y), z));
      }
}

TEST_CASE("two cyclic ornamentations complete the diamond's acyclic poset") {
  Digraph d = fixtures::diamond();
  auto all = enumerate_ornamentations(d);
  auto acyclic = acyclic_ornamentations(d);
  std::vector<Ornamentation> cyclic;
  for (const auto& o : all)
    if (std::find(acyclic.begin(), acyclic.end(), o) == acyclic.end()) cyclic.push_back(o);
  REQUIRE(cyclic.size() == 4);
  auto mac = macneille_completion(aorn_poset(d));
  CHECK(mac.lattice.size() == int(acyclic.size()) + 2);
  // some pair of cyclic ornamentations extends AOrn to that completion
  bool witnessed = false;
  for (std::size_t a = 0; a < cyclic.size() && !witnessed; ++a)
    for (std::size_t b = a + 1; b < cyclic.size() && !witnessed; ++b) {
      std::vector<Ornamentation> extended = acyclic;
      extended.push_back(cyclic[a]);
      extended.push_back(cyclic[b]);
      std::sort(extended.begin(), extended.end());
      std::vector<std::string> keys;
      for (const auto& o : extended) keys.push_back(orn_key(o));
      FinitePoset sub = FinitePoset::from_relation(
          keys, [&](int i, int j) { return orn_leq(extended[i], extended[j]); });
      if (sub.is_lattice() && poset_isomorphic(sub, mac.lattice)) witnessed = true;
    }
  CHECK(witnessed);
}

TEST_CASE("ornamentation lattice of a tree completes its acyclic subposet") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : fixtures::increasing_trees_up_to_iso(n)) {
      auto mac = macneille_completion(aorn_poset(t));
      CHECK(poset_isomorphic(mac.lattice, orn_poset(t)));
    }
}

TEST_CASE("ornamentation json roundtrip") {
  Digraph d = fixtures::diamond();
  for (const auto& o : enumerate_ornamentations(d)) {
    Ornamentation back = orn_from_json(orn_to_json(o));
    CHECK(back == o);
  }
}

TEST_CASE("ambient mismatch is rejected") {
  Digraph d = fixtures::diamond();
  Ornamentation bad = minimal_ornamentation(d);
  bad.at[2] = vs({1, 2});
  bad.at[4] = vs({2, 4});
  // nesting violated: 2 in O(4) but O(2) not inside O(4)
  CHECK(!is_ornamentation(d, bad));
  CHECK_THROWS_AS(orn_meet(d, bad, bad), AmbientMismatchError);
}
