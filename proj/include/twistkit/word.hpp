#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistkit {

/// One letter of a word: a 1-based generator index and an exponent sign.
struct Letter {
  int index = 1;
  int sign = 1;

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over indexed generators and their formal inverses.
///
/// Every value of this type is kept in canonical (freely reduced) form, so
/// word equality in the free group is plain structural equality. When a word
/// stands for a composite map the rightmost letter acts first.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word generator(int index, int sign = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index used, 0 for the identity.
  int max_index() const;

  /// Sum of exponents of generator `index`.
  long exponent_sum(int index) const;

  /// Right-multiplies in place, cancelling across the seam.
  Word& operator*=(const Word& rhs);
  Word& append(Letter l);

  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

 private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// f u f^-1.
Word conjugate(const Word& u, const Word& f);
/// u^k, negative k allowed.
Word power(const Word& u, long k);

/// Product of the words in order.
Word product(std::span<const Word> factors);

/// Cyclically reduced core of `u` (for relator handling in presentations).
Word cyclic_reduce(const Word& u);

/// Thrown by parse_word; `position` is the 0-based byte offset of the bad token.
class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses whitespace separated tokens `<prefix><k>` and `<prefix><k>^-1`,
/// e.g. "s1 s2 s1^-1". The empty string is the identity. Index 0 is rejected.
Word parse_word(std::string_view text, std::string_view prefix = "s");

/// Inverse of parse_word; the identity formats as the empty string.
std::string format_word(const Word& w, std::string_view prefix = "s");

}  // namespace twistkit
