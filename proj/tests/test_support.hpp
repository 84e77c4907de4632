#pragma once

// Fixed-seed generators shared by the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "twistkit/braid.hpp"
#include "twistkit/smith.hpp"
#include "twistkit/word.hpp"

namespace twistkit::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x7157'4b17ULL);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Unreduced letter sequence over generators 1..rank.
inline std::vector<Letter> random_letters(int rank, int max_len) {
  std::vector<Letter> raw(static_cast<std::size_t>(uniform(0, max_len)));
  for (auto& l : raw) l = {uniform(1, rank), uniform(0, 1) ? 1 : -1};
  return raw;
}

inline Word random_word(int rank, int max_len) {
  const auto raw = random_letters(rank, max_len);
  return Word::reduce(raw);
}

inline BraidWord random_braid(int strands, int max_len) {
  return BraidWord(strands, strands > 1 ? random_word(strands - 1, max_len) : Word{});
}

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

}  // namespace twistkit::testing
