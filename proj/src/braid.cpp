#include "twistkit/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistkit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

void check_genus(int g) { require(g >= 0, "genus must be >= 0"); }

}  // namespace

// ---------------------------------------------------------------- BraidWord

BraidWord::BraidWord(int strands, Word word) : strands_(strands), word_(std::move(word)) {
  if (strands_ < 2) throw std::invalid_argument("a braid needs at least 2 strands");
  if (word_.max_index() > strands_ - 1)
    throw std::invalid_argument("generator index exceeds strands - 1");
}

BraidWord::BraidWord(int strands) : BraidWord(strands, Word{}) {}

BraidWord BraidWord::widen(int strands) const {
  if (strands < strands_) throw std::invalid_argument("widen() cannot drop strands");
  return BraidWord(strands, word_);
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.strands_ != strands_) throw std::invalid_argument("strand count mismatch");
  word_ *= rhs.word_;
  return *this;
}

BraidWord BraidWord::inverse() const { return BraidWord(strands_, invert(word_)); }

BraidWord BraidWord::pow(long k) const { return BraidWord(strands_, power(word_, k)); }

BraidWord sigma(int strands, int i, int sign) {
  require(i >= 1 && i <= strands - 1, "sigma index out of range");
  return BraidWord(strands, Word::generator(i, sign));
}

// ------------------------------------------------------------- named words

BraidWord delta(int g, int k) {
  check_genus(g);
  require(k >= 0 && k <= 2 * g + 1, "Delta_k needs 0 <= k <= 2g+1");
  const int n = strands_for_genus(g);
  BraidWord w(n);
  for (int i = 1; i <= k; ++i) w *= sigma(n, i);
  return w;
}

BraidWord bar_delta(int g, int k) {
  check_genus(g);
  require(k >= 0 && k <= 2 * g + 1, "bar_delta_k needs 0 <= k <= 2g+1");
  const int n = strands_for_genus(g);
  BraidWord w(n);
  for (int i = k; i >= 1; --i) w *= sigma(n, i);
  return w;
}

BraidWord beta_k(int g, int k) {
  check_genus(g);
  require(k >= 0 && k <= g, "beta_k needs 0 <= k <= g");
  const BraidWord bd = bar_delta(g, k);
  return bd * delta(g, 2 * g + 1 - k) * delta(g, 2 * g - k).inverse() * bd.inverse();
}

BraidWord beta(int g) {
  check_genus(g);
  return bar_delta(g, g).pow(g + 1);
}

BraidWord gamma_k(int g, int k) {
  check_genus(g);
  require(k >= 0 && k <= g, "gamma_k needs 0 <= k <= g");
  if (k == g) return BraidWord(strands_for_genus(g));
  const BraidWord bd = bar_delta(g, k);
  return bd * delta(g, 2 * g - 1 - k) * delta(g, 2 * g - 2 - k).inverse() * bd.inverse();
}

BraidWord gamma(int g) {
  require(g >= 1, "gamma needs g >= 1");
  return bar_delta(g, g - 1).pow(g);
}

BraidWord half_twist(int g) {
  check_genus(g);
  BraidWord w(strands_for_genus(g));
  for (int k = 2 * g + 1; k >= 1; --k) w *= delta(g, k);
  return w;
}

IdentitySides theorem3_sides(int g) {
  check_genus(g);
  BraidWord lhs(strands_for_genus(g));
  for (int k = 0; k <= g; ++k) lhs *= beta_k(g, k);
  lhs *= beta(g).pow(2);
  return {lhs, half_twist(g)};
}

// ------------------------------------------------------------------ lemmas

std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::L1a: return "L1a";
    case LemmaId::L1b: return "L1b";
    case LemmaId::L1c: return "L1c";
    case LemmaId::L1d: return "L1d";
    case LemmaId::L2a: return "L2a";
    case LemmaId::L2b: return "L2b";
    case LemmaId::L3: return "L3";
    case LemmaId::T3: return "T3";
  }
  return "?";
}

std::vector<LemmaId> all_lemma_ids() {
  return {LemmaId::L1a, LemmaId::L1b, LemmaId::L1c, LemmaId::L1d,
          LemmaId::L2a, LemmaId::L2b, LemmaId::L3,  LemmaId::T3};
}

std::optional<LemmaId> parse_lemma_id(std::string_view name) {
  for (auto id : all_lemma_ids())
    if (lemma_name(id) == name) return id;
  return std::nullopt;
}

std::string describe(LemmaId id, const LemmaParams& p) {
  std::ostringstream os;
  switch (id) {
    case LemmaId::L1a:
    case LemmaId::L1b:
      os << "k=" << p.k << " m=" << p.m << " sign=" << (p.sign > 0 ? "+" : "-");
      break;
    case LemmaId::L1c:
      os << "k=" << p.k << " m=" << p.m << (p.variant == 0 ? " Delta" : " barDelta");
      break;
    case LemmaId::L1d:
      os << "k=" << p.k << (p.variant == 0 ? " Delta" : " barDelta");
      break;
    case LemmaId::L2b:
      if (p.variant == 0)
        os << "sigma_" << p.k;
      else
        os << "barDelta_{g-1}^g";
      break;
    case LemmaId::L3:
      os << "k=" << p.k;
      break;
    case LemmaId::L2a:
    case LemmaId::T3:
      break;
  }
  return os.str();
}

IdentitySides lemma_identity_sides(LemmaId id, int g, const LemmaParams& p) {
  check_genus(g);
  const int n = strands_for_genus(g);
  const int top = 2 * g + 1;
  switch (id) {
    case LemmaId::L1a: {
      require(1 < p.k && p.k <= p.m && p.m <= top, "L1a needs 1 < k <= m <= 2g+1");
      require(p.sign == 1 || p.sign == -1, "sign must be +/-1");
      return {sigma(n, p.k, p.sign) * delta(g, p.m), delta(g, p.m) * sigma(n, p.k - 1, p.sign)};
    }
    case LemmaId::L1b: {
      require(1 <= p.k && p.k < p.m && p.m <= top, "L1b needs 1 <= k < m <= 2g+1");
      require(p.sign == 1 || p.sign == -1, "sign must be +/-1");
      return {sigma(n, p.k, p.sign) * bar_delta(g, p.m),
              bar_delta(g, p.m) * sigma(n, p.k + 1, p.sign)};
    }
    case LemmaId::L1c: {
      require(p.m >= 0 && p.k > p.m + 1 && p.k <= top, "L1c needs 0 <= m, m+1 < k <= 2g+1");
      require(p.variant == 0 || p.variant == 1, "L1c variant must be 0 or 1");
      const BraidWord x = p.variant == 0 ? delta(g, p.m) : bar_delta(g, p.m);
      return {sigma(n, p.k) * x, x * sigma(n, p.k)};
    }
    case LemmaId::L1d: {
      require(1 <= p.k && p.k <= g, "L1d needs 1 <= k <= g");
      require(p.variant == 0 || p.variant == 1, "L1d variant must be 0 or 1");
      if (p.variant == 0)
        return {delta(g, g).pow(p.k),
                delta(g, g - 1) * delta(g, g).pow(p.k - 1) * sigma(n, g - p.k + 1)};
      return {bar_delta(g, g).pow(p.k),
              sigma(n, g - p.k + 1) * bar_delta(g, g).pow(p.k - 1) * bar_delta(g, g - 1)};
    }
    case LemmaId::L2a: {
      require(g >= 1, "L2a needs g >= 1");
      return {beta(g), bar_delta(g, g) * delta(g, g) * bar_delta(g, g - 1).pow(g)};
    }
    case LemmaId::L2b: {
      require(g >= 1, "L2b needs g >= 1");
      const BraidWord c = bar_delta(g, g) * delta(g, g);
      BraidWord x(n);
      if (p.variant == 0) {
        require(1 <= p.k && p.k < g, "L2b needs 1 <= k < g");
        x = sigma(n, p.k);
      } else {
        require(p.variant == 1, "L2b variant must be 0 or 1");
        x = bar_delta(g, g - 1).pow(g);
      }
      return {c * x, x * c};
    }
    case LemmaId::L3: {
      require(0 <= p.k && p.k <= g - 1, "L3 needs 0 <= k <= g-1");
      const int k = p.k;
      BraidWord lhs = delta(g, 2 * g - k).inverse() * bar_delta(g, k).inverse() *
                      bar_delta(g, k + 1) * delta(g, 2 * g - k) * bar_delta(g, k + 1) *
                      delta(g, 2 * g - k - 1);
      BraidWord rhs = bar_delta(g, k) * delta(g, 2 * g - k) * gamma_k(g, k);
      return {lhs, rhs};
    }
    case LemmaId::T3:
      return theorem3_sides(g);
  }
  throw std::invalid_argument("unknown lemma id");
}

std::vector<LemmaParams> lemma_instances(LemmaId id, int g) {
  check_genus(g);
  const int top = 2 * g + 1;
  std::vector<LemmaParams> out;
  switch (id) {
    case LemmaId::L1a:
      for (int m = 2; m <= top; ++m)
        for (int k = 2; k <= m; ++k)
          for (int s : {1, -1}) out.push_back({k, m, s, 0});
      break;
    case LemmaId::L1b:
      for (int m = 2; m <= top; ++m)
        for (int k = 1; k < m; ++k)
          for (int s : {1, -1}) out.push_back({k, m, s, 0});
      break;
    case LemmaId::L1c:
      for (int m = 0; m <= top; ++m)
        for (int k = m + 2; k <= top; ++k)
          for (int v : {0, 1}) out.push_back({k, m, 1, v});
      break;
    case LemmaId::L1d:
      for (int k = 1; k <= g; ++k)
        for (int v : {0, 1}) out.push_back({k, 0, 1, v});
      break;
    case LemmaId::L2a:
      if (g >= 1) out.push_back({});
      break;
    case LemmaId::L2b:
      if (g >= 1) {
        for (int k = 1; k < g; ++k) out.push_back({k, 0, 1, 0});
        out.push_back({0, 0, 1, 1});
      }
      break;
    case LemmaId::L3:
      for (int k = 0; k <= g - 1; ++k) out.push_back({k, 0, 1, 0});
      break;
    case LemmaId::T3:
      out.push_back({});
      break;
  }
  return out;
}

// ------------------------------------------------------------- permutations

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  for (int j = 0; j < n; ++j) images_[static_cast<std::size_t>(j)] = j + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= size(); ++j)
    if ((*this)(j) != j) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int j = 1; j <= size(); ++j) {
    if (done[static_cast<std::size_t>(j - 1)] || (*this)(j) == j) continue;
    out += '(';
    int x = j;
    bool first = true;
    while (!done[static_cast<std::size_t>(x - 1)]) {
      done[static_cast<std::size_t>(x - 1)] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = (*this)(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(static_cast<std::size_t>(p.size()));
  for (int j = 1; j <= p.size(); ++j) img[static_cast<std::size_t>(j - 1)] = p(q(j));
  return Permutation(std::move(img));
}

Permutation to_permutation(const BraidWord& w) {
  // Rightmost letter acts first: track where each point goes by scanning right to left.
  std::vector<int> img(static_cast<std::size_t>(w.strands()));
  const auto letters = w.word().letters();
  for (int j = 1; j <= w.strands(); ++j) {
    int x = j;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (x == it->index)
        x = it->index + 1;
      else if (x == it->index + 1)
        x = it->index;
    }
    img[static_cast<std::size_t>(j - 1)] = x;
  }
  return Permutation(std::move(img));
}

}  // namespace twistkit
