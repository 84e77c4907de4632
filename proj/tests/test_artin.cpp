#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/artin.hpp"

using namespace twistkit;

namespace {
Word x(std::initializer_list<Letter> l) { return Word(l); }
}  // namespace

TEST_CASE("generator automorphisms") {
  const FreeAuto s = artin_generator(2, 1, 1);
  CHECK(s.image(1) == x({{1, 1}, {2, 1}, {1, -1}}));
  CHECK(s.image(2) == x({{1, 1}}));

  const FreeAuto t = artin_generator(2, 1, -1);
  CHECK(t.image(1) == x({{2, 1}}));
  CHECK(t.image(2) == x({{2, -1}, {1, 1}, {2, 1}}));
  // The inverse images really invert the generator map.
  CHECK(compose(s, t).is_identity());
  CHECK(compose(t, s).is_identity());

  const FreeAuto u = artin_generator(3, 2, 1);
  CHECK(u.image(1) == x({{1, 1}}));
}

TEST_CASE("evaluate") {
  CHECK(evaluate(BraidWord(3)).is_identity());
  CHECK(evaluate(BraidWord(2, parse_word("s1 s1^-1"))).is_identity());
  CHECK(evaluate(BraidWord(3, parse_word("s1 s2 s1"))) == evaluate(BraidWord(3, parse_word("s2 s1 s2"))));

  // evaluate agrees with explicit composition of generator maps, rightmost first.
  const BraidWord b(4, parse_word("s1 s3^-1 s2 s2 s1^-1"));
  FreeAuto f = FreeAuto::identity(4);
  for (const auto& l : b.word()) f = compose(f, artin_generator(4, l.index, l.sign));
  CHECK(evaluate(b) == f);
}

TEST_CASE("apply") {
  const FreeAuto s = artin_generator(3, 1, 1);
  // sigma_1(x1 x2) = x1 x2 x1^-1 x1 = x1 x2.
  CHECK(s.apply(x({{1, 1}, {2, 1}})) == x({{1, 1}, {2, 1}}));
  CHECK(s.apply(x({{3, -1}})) == x({{3, -1}}));
}

TEST_CASE("braid_equal") {
  CHECK(braid_equal(BraidWord(4, parse_word("s1 s3")), BraidWord(4, parse_word("s3 s1"))));
  CHECK_FALSE(braid_equal(BraidWord(3, parse_word("s1")), BraidWord(3, parse_word("s2"))));
  for (int g = 0; g <= 5; ++g) {
    const auto sides = theorem3_sides(g);
    CHECK(braid_equal(sides.lhs, sides.rhs));
  }
  // Same permutation, different braid: s1^2 versus the identity.
  CHECK_FALSE(braid_equal(BraidWord(2, parse_word("s1 s1")), BraidWord(2)));
}

TEST_CASE("first_difference and ceiling") {
  const FreeAuto a = evaluate(BraidWord(3, parse_word("s1")));
  const FreeAuto b = evaluate(BraidWord(3, parse_word("s2")));
  CHECK(first_difference(a, b) == 1);
  CHECK_FALSE(first_difference(a, a).has_value());
  CHECK_THROWS_AS(evaluate(BraidWord(3, parse_word("s1 s2^-1")).pow(40), 1000), ImageGrowthError);
}
