#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/word.hpp"

using namespace twistkit;

namespace {
Word s(int i, int sign = 1) { return Word::generator(i, sign); }
}  // namespace

TEST_CASE("free reduction") {
  CHECK(Word::reduce(std::vector<Letter>{}).empty());
  CHECK(Word::reduce(std::vector<Letter>{{1, 1}, {1, -1}}).empty());
  CHECK(Word::reduce(std::vector<Letter>{{1, 1}, {2, 1}, {2, -1}, {1, 1}}) == Word{{1, 1}, {1, 1}});
  CHECK(Word{{3, -1}, {2, 1}, {2, -1}, {3, 1}}.empty());
}

TEST_CASE("multiply, invert, conjugate, power") {
  CHECK(multiply(s(1), s(1, -1)).empty());
  CHECK(multiply(s(1) * s(2), s(2, -1) * s(3)) == s(1) * s(3));
  CHECK(multiply(s(1) * s(2), s(3)) == Word{{1, 1}, {2, 1}, {3, 1}});
  CHECK(invert(s(1) * s(2)) == Word{{2, -1}, {1, -1}});
  CHECK(conjugate(s(2), s(1)) == Word{{1, 1}, {2, 1}, {1, -1}});
  CHECK(power(s(1), 3) == Word{{1, 1}, {1, 1}, {1, 1}});
  CHECK(power(s(1), -2) == Word{{1, -1}, {1, -1}});
  CHECK(power(s(1) * s(2), 0).empty());
}

TEST_CASE("word queries") {
  const Word w{{1, 1}, {3, -1}, {1, 1}};
  CHECK(w.max_index() == 3);
  CHECK(w.exponent_sum(1) == 2);
  CHECK(w.exponent_sum(3) == -1);
  CHECK(Word{}.max_index() == 0);
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclic_reduce(Word{{1, 1}, {2, 1}, {1, -1}}) == s(2));
  CHECK(cyclic_reduce(Word{{1, 1}, {2, 1}, {3, 1}, {1, -1}}) == Word{{2, 1}, {3, 1}});
  CHECK(cyclic_reduce(Word{{1, 1}, {2, 1}}) == Word{{1, 1}, {2, 1}});
}

TEST_CASE("parse and format") {
  CHECK(parse_word("").empty());
  CHECK(parse_word("  ").empty());
  CHECK(parse_word("s1 s2^-1 s10") == Word{{1, 1}, {2, -1}, {10, 1}});
  CHECK(parse_word("s1 s1^-1").empty());
  CHECK(format_word(parse_word("s3^-1 s12")) == "s3^-1 s12");
  CHECK(format_word(Word{}) == "");
  CHECK(format_word(Word{{2, 1}}, "x") == "x2");

  auto position_of = [](const char* text) -> long {
    try {
      parse_word(text);
    } catch (const WordParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("s1 t2") == 3);
  CHECK(position_of("s0") == 0);
  CHECK(position_of("s1 s2^2") == 3);
  CHECK(position_of("s") == 0);
  CHECK(position_of("s1 s2") == -1);
}
