#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "strayt/cayley.hpp"
#include "strayt/errors.hpp"
#include "strayt/notation.hpp"

using namespace strayt;

TEST_CASE("semigroup orders") {
  auto g1 = enumerate(fixtures::ex1());
  CHECK(g1.order() == 3);
  CHECK_FALSE(g1.contains_identity());
  CHECK(g1.size() == 4);

  auto g2 = enumerate(fixtures::ex2());
  CHECK(g2.order() == 3);
  CHECK(g2.contains_identity());
  CHECK(g2.size() == 3);

  CHECK(enumerate(fixtures::ex3()).order() == 2);
  CHECK(enumerate(fixtures::ex4()).order() == 21);
}

TEST_CASE("enumeration matches brute-force closure") {
  for (auto p : {fixtures::ex1(), fixtures::ex2(), fixtures::ex3(),
                 fixtures::ex4()}) {
    auto g = enumerate(p);
    auto closure = oracle::closure(fixtures::maps(p));
    CHECK(closure.size() == g.order());
    for (const auto& m : closure) {
      Transformation t(std::span<const State>(m.data() + 1, m.size() - 1));
      CHECK(g.find(t).has_value());
    }
    // Edges are total and land on the right product.
    for (ElementIndex e = 0; e < g.size(); ++e) {
      for (Letter a = 0; a < p.size(); ++a) {
        REQUIRE(g.element(g.successor(e, a)) ==
                compose(g.element(e), p[a].transform));
      }
    }
  }
}

TEST_CASE("element table") {
  auto g = enumerate(fixtures::ex1());
  CHECK(g.element(kIdentity) == identity(4));
  CHECK(g.element_index(identity(4)) == kIdentity);
  auto t2 = g.element_index(Transformation{4, 2, 2, 4});
  CHECK(g.first_word(t2) == Word{0, 0});
  CHECK_THROWS_AS(g.element_index(Transformation{1, 1, 1, 1}), NotInSemigroup);
  CHECK_THROWS_AS(g.first_word(kIdentity), NotInSemigroup);

  auto g2 = enumerate(fixtures::ex2());
  CHECK(g2.first_word(kIdentity) == Word{0, 0, 0});
}

TEST_CASE("first words are shortest and least among shortest") {
  for (auto p : {fixtures::ex1(), fixtures::ex2(), fixtures::ex3(),
                 fixtures::ex4()}) {
    auto g = enumerate(p);
    auto gens = fixtures::maps(p);
    // Words enumerated by length, then lexicographically: the first hit per
    // element is the expected first word.
    std::map<oracle::Map, std::vector<unsigned>> first;
    std::vector<std::vector<unsigned>> level{{}};
    for (std::size_t len = 1; len <= g.order(); ++len) {
      std::vector<std::vector<unsigned>> next;
      for (const auto& w : level) {
        for (unsigned a = 0; a < p.size(); ++a) {
          auto v = w;
          v.push_back(a);
          first.emplace(oracle::realize(gens, v), v);
          next.push_back(std::move(v));
        }
      }
      level = std::move(next);
      if (first.size() == g.order() || level.size() > 200000) break;
    }
    REQUIRE(first.size() == g.order());
    for (ElementIndex e = 0; e < g.size(); ++e) {
      if (e == kIdentity && !g.contains_identity()) continue;
      auto w = g.first_word(e);
      CHECK(fixtures::letters(w) == first.at(fixtures::to_map(g.element(e))));
      CHECK(is_straight(g, w));
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  auto p = fixtures::ex4();
  auto a = enumerate(p);
  auto b = enumerate(p);
  REQUIRE(a.size() == b.size());
  for (ElementIndex e = 0; e < a.size(); ++e) {
    CHECK(a.element(e) == b.element(e));
    if (e != kIdentity) CHECK(a.first_word(e) == b.first_word(e));
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate(fixtures::ex4(), {.max_elements = 10}),
                  EnumerationLimit);
  CHECK(enumerate(fixtures::ex4(), {.max_elements = 22}).order() == 21);
}

TEST_CASE("trajectories") {
  auto p1 = fixtures::ex1();
  auto g1 = enumerate(p1);
  auto t = trajectory(g1, Word{0, 0, 0, 0});
  REQUIRE(t.nodes.size() == 5);
  CHECK(t.nodes[0] == kIdentity);
  CHECK(g1.element(t.nodes[1]) == Transformation{2, 4, 1, 2});
  CHECK(g1.element(t.nodes[2]) == Transformation{4, 2, 2, 4});
  CHECK(g1.element(t.nodes[3]) == Transformation{2, 4, 4, 2});
  CHECK(t.nodes[4] == t.nodes[2]);

  auto g2 = enumerate(fixtures::ex2());
  auto c = trajectory(g2, Word{0, 0, 0});
  CHECK(c.nodes.front() == kIdentity);
  CHECK(c.nodes.back() == kIdentity);
  CHECK(c.nodes[1] != c.nodes[2]);

  auto g4 = enumerate(fixtures::ex4());
  for (Letter a = 0; a < 3; ++a) {
    auto s = trajectory(g4, Word{a});
    CHECK(s.nodes.size() == 2);
    CHECK(g4.element(s.nodes[1]) == g4.presentation()[a].transform);
  }
  CHECK_THROWS_AS(trajectory(g4, Word{3}), std::out_of_range);
}

TEST_CASE("is_straight") {
  auto g1 = enumerate(fixtures::ex1());
  CHECK(is_straight(g1, Word{0}));
  CHECK(is_straight(g1, Word{0, 0, 0}));
  CHECK_FALSE(is_straight(g1, Word{0, 0, 0, 0}));

  auto g2 = enumerate(fixtures::ex2());
  CHECK(is_straight(g2, Word{0, 0, 0}));
  CHECK_FALSE(is_straight(g2, Word{0, 0, 0, 0}));
}

TEST_CASE("is_straight agrees with the prefix definition") {
  for (auto p : {fixtures::ex1(), fixtures::ex2(), fixtures::ex3(),
                 fixtures::ex4()}) {
    auto g = enumerate(p);
    auto gens = fixtures::maps(p);
    oracle::for_each_word(static_cast<unsigned>(p.size()), 7,
                          [&](const std::vector<unsigned>& w) {
                            Word word(std::vector<Letter>(w.begin(), w.end()));
                            REQUIRE(is_straight(g, word) ==
                                    oracle::straight(gens, w));
                          });
  }
}

TEST_CASE("minimal-length realizers are straight") {
  auto p = fixtures::ex4();
  auto g = enumerate(p);
  auto gens = fixtures::maps(p);
  std::map<oracle::Map, std::size_t> shortest;
  oracle::for_each_word(3, 9, [&](const std::vector<unsigned>& w) {
    auto [it, fresh] = shortest.emplace(oracle::realize(gens, w), w.size());
    if (!fresh) it->second = std::min(it->second, w.size());
  });
  REQUIRE(shortest.size() == 21);
  std::size_t checked = 0;
  oracle::for_each_word(3, 9, [&](const std::vector<unsigned>& w) {
    if (shortest.at(oracle::realize(gens, w)) != w.size()) return;
    ++checked;
    REQUIRE(is_straight(g, Word(std::vector<Letter>(w.begin(), w.end()))));
  });
  CHECK(checked >= 21);
}
