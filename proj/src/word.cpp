#include "twistkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace twistkit {

namespace {

bool cancels(const Letter& a, const Letter& b) {
  return a.index == b.index && a.sign == -b.sign;
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) append(l);
}

Word Word::reduce(std::span<const Letter> raw) {
  Word out;
  out.letters_.reserve(raw.size());
  for (const auto& l : raw) out.append(l);
  return out;
}

Word Word::generator(int index, int sign) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  Word w;
  w.letters_.push_back({index, sign});
  return w;
}

int Word::max_index() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.index);
  return m;
}

long Word::exponent_sum(int index) const {
  long s = 0;
  for (const auto& l : letters_)
    if (l.index == index) s += l.sign;
  return s;
}

Word& Word::append(Letter l) {
  if (l.index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  if (!letters_.empty() && cancels(letters_.back(), l))
    letters_.pop_back();
  else
    letters_.push_back(l);
  return *this;
}

Word& Word::operator*=(const Word& rhs) {
  // Both operands are reduced, so cancellation only happens across the seam.
  std::size_t k = 0;
  const std::size_t n = letters_.size();
  while (k < n && k < rhs.size() && cancels(letters_[n - 1 - k], rhs.letters_[k])) ++k;
  letters_.resize(n - k);
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                  rhs.letters_.end());
  return *this;
}

Word multiply(const Word& u, const Word& v) { return u * v; }

Word invert(const Word& u) {
  Word out;
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) out.append(it->inverse());
  return out;
}

Word conjugate(const Word& u, const Word& f) { return f * u * invert(f); }

Word power(const Word& u, long k) {
  const Word base = k < 0 ? invert(u) : u;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

Word product(std::span<const Word> factors) {
  Word out;
  for (const auto& f : factors) out *= f;
  return out;
}

Word cyclic_reduce(const Word& u) {
  const auto l = u.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && cancels(l[lo], l[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word::reduce(l.subspan(lo, hi - lo));
}

Word parse_word(std::string_view text, std::string_view prefix) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);

    auto fail = [&](const std::string& why) -> WordParseError {
      return WordParseError("malformed token '" + std::string(tok) + "' at position " +
                                std::to_string(start) + ": " + why,
                            start);
    };

    if (tok.substr(0, prefix.size()) != prefix) throw fail("expected prefix '" + std::string(prefix) + "'");
    tok.remove_prefix(prefix.size());
    int sign = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      if (tok.substr(caret) != "^-1") throw fail("only the exponent ^-1 is allowed");
      sign = -1;
      tok = tok.substr(0, caret);
    }
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw fail("expected a decimal generator index");
    int index = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), index);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw fail("generator index out of range");
    if (index == 0) throw fail("generator indices start at 1");
    raw.push_back({index, sign});
  }
  return Word::reduce(raw);
}

std::string format_word(const Word& w, std::string_view prefix) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += prefix;
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace twistkit
