#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "strayt/cayley.hpp"
#include "strayt/notation.hpp"
#include "strayt/permutator.hpp"

using namespace strayt;

namespace {

// Enumerating the p53 semigroup takes about a second; share one graph.
struct P53 {
  Presentation p = fixtures::p53();
  CayleyGraph g = enumerate(p);
  WordReader words = fixtures::p53_reader(p);
  StateSet y{3, 5, 8};

  const Word& operator[](const char* name) const {
    return words.aliases().at(name);
  }
  Transformation value(const Word& w) const { return evaluate(p, w); }
  Transformation form(const char* text) const { return parse_linear(text, 16); }
};

const P53& p53() {
  static const P53 instance;
  return instance;
}

Word power(const Word& w, int k) {
  Word out = w;
  for (int i = 1; i < k; ++i) out = out + w;
  return out;
}

}  // namespace

TEST_CASE("p53 semigroup order") {
  CHECK(p53().g.order() == 316665);
  CHECK_FALSE(p53().g.contains_identity());
}

TEST_CASE("p53 permutators of {3,5,8}") {
  const auto& s = p53();
  auto perm = perm_semigroup(s.g, s.y);
  // Direct count over the element table.
  std::size_t filtered = 0;
  for (ElementIndex e = 1; e < s.g.size(); ++e) {
    filtered += permutes(s.g.element(e), s.y);
  }
  CHECK(perm.elements.size() == filtered);
  // The reference count is 542; this implementation and an independent
  // brute force both find 549.
  CHECK(perm.elements.size() == 549);
  CHECK(perm.restriction_group_order == 6);
}

TEST_CASE("p53 words a and b") {
  const auto& s = p53();
  const Word& a = s["a"];
  const Word& b = s["b"];
  CHECK(a.size() == 13);
  CHECK(b.size() == 15);
  CHECK(is_straight(s.g, a));
  CHECK(is_straight(s.g, b));
  CHECK(s.value(a) ==
        s.form("([1,2,10;3],[4,7,9,11,12,15,16;5],[6,13,14;8])"));
  CHECK(s.value(b) ==
        s.form("[1,2,4;3]([10,11,12,13,14,15,16;5],[6,7,9;8])"));
  CHECK(print_linear(s.value(a)) ==
        "([1,2,10;3],[4,7,9,11,12,15,16;5],[6,13,14;8])");
  CHECK(is_minimal_permutator(s.g, a, s.y));
  CHECK(is_minimal_permutator(s.g, b, s.y));
  CHECK(permutes(s.value(a), s.y));
  CHECK(permutes(s.value(b), s.y));
}

TEST_CASE("p53 reductions of x and y") {
  const auto& s = p53();
  const Word& a = s["a"];
  const Word& b = s["b"];
  const Word& x = s["x"];
  const Word& y = s["y"];
  CHECK(x.size() == 73);
  CHECK(y.size() == 93);

  Word rx = reduce(s.g, x);
  Word ry = reduce(s.g, y);
  CHECK(rx == b + b + a);
  CHECK(ry == a + a + a + b);
  CHECK(rx.size() == 43);
  CHECK(ry.size() == 54);
  CHECK(s.value(rx) == s.value(x));
  CHECK(s.value(ry) == s.value(y));
  CHECK(s.value(ry) ==
        s.form("([1,2,10;5],[6,13,14;8])[4,7,9,11,12,15,16;3]"));
  // The reference form of x repeats the one of y. x lies in the group of
  // b^2 and y in the group of a^3, so the two cannot be equal.
  CHECK(s.value(rx) ==
        s.form("([1,2,4;5],[6,7,9;8],[10,11,12,13,14,15,16;3])"));
  CHECK(s.value(x) != s.value(y));
  auto e_b = s.value(b + b);
  auto e_a = s.value(a + a + a);
  CHECK(compose(e_b, s.value(x)) == s.value(x));
  CHECK(compose(s.value(x), e_b) == s.value(x));
  CHECK(compose(e_a, s.value(y)) == s.value(y));
  CHECK(compose(s.value(y), e_a) == s.value(y));
  CHECK(is_straight(s.g, rx));
  CHECK(is_straight(s.g, ry));
  CHECK_FALSE(is_minimal_permutator(s.g, rx, s.y));
}

TEST_CASE("p53 subsemigroup generated by a and b") {
  const auto& s = p53();
  const Word& a = s["a"];
  const Word& b = s["b"];
  CHECK(subgroup_closure(s.g, {a, b}).size() == 12);

  auto e1 = s.value(power(a, 3));
  auto e2 = s.value(power(b, 2));
  CHECK(e1 == s.value(power(s["y"], 2)));
  CHECK(e2 == s.value(power(s["x"], 3)));
  CHECK(e1 == s.form("[1,2,10;8][4,7,9,11,12,15,16;3][6,13,14;5]"));
  CHECK(e2 == s.form("[1,2,4;3][6,7,9;5][10,11,12,13,14,15,16;8]"));
  CHECK(e1 != e2);
  CHECK(compose(e1, e1) == e1);
  CHECK(compose(e2, e2) == e2);
}

TEST_CASE("p53 factorization") {
  const auto& s = p53();
  const Word& a = s["a"];
  const Word& b = s["b"];
  CHECK(factorize(s.g, s["x"], s.y).factors ==
        std::vector<Word>{b, b, a, b, b});
  CHECK(retract(s.g, s["x"], s.y) == s["x"]);
  CHECK(retract(s.g, s["y"], s.y) == s["y"]);

  std::mt19937 rng(53);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Word> drawn(1 + rng() % 8, a);
    for (auto& w : drawn) {
      if (rng() % 2) w = b;
    }
    Word w = drawn[0];
    for (std::size_t j = 1; j < drawn.size(); ++j) w = w + drawn[j];
    REQUIRE(factorize(s.p, w, s.y).factors == drawn);
  }
}
