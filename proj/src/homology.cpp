#include "twistkit/homology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "twistkit/smith.hpp"

namespace twistkit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in homology arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in homology arithmetic");
  return r;
}

void require_same_genus(int g, int h) {
  if (g != h) throw std::invalid_argument("genus mismatch");
}

void require_genus(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
}

}  // namespace

// ------------------------------------------------------------------- HClass

HClass::HClass(int genus, std::vector<std::int64_t> coords) : genus_(genus), coords_(std::move(coords)) {
  require_genus(genus_);
  if (coords_.size() != static_cast<std::size_t>(2 * genus_))
    throw std::invalid_argument("homology class needs 2g coordinates");
}

HClass HClass::zero(int genus) {
  require_genus(genus);
  return HClass(genus, std::vector<std::int64_t>(static_cast<std::size_t>(2 * genus), 0));
}

HClass HClass::a(int genus, int i) {
  if (i < 1 || i > genus) throw std::out_of_range("a_i index out of range");
  HClass x = zero(genus);
  x.coords_[static_cast<std::size_t>(i - 1)] = 1;
  return x;
}

HClass HClass::b(int genus, int i) {
  if (i < 1 || i > genus) throw std::out_of_range("b_i index out of range");
  HClass x = zero(genus);
  x.coords_[static_cast<std::size_t>(genus + i - 1)] = 1;
  return x;
}

bool HClass::is_zero() const {
  for (auto v : coords_)
    if (v != 0) return false;
  return true;
}

HClass HClass::sign_normalized() const {
  for (auto v : coords_) {
    if (v > 0) return *this;
    if (v < 0) return -*this;
  }
  return *this;
}

HClass HClass::operator-() const { return -1 * *this; }

HClass operator+(const HClass& x, const HClass& y) {
  require_same_genus(x.genus_, y.genus_);
  HClass z = x;
  for (std::size_t i = 0; i < z.coords_.size(); ++i) z.coords_[i] = checked_add(z.coords_[i], y.coords_[i]);
  return z;
}

HClass operator-(const HClass& x, const HClass& y) { return x + (-y); }

HClass operator*(std::int64_t k, const HClass& x) {
  HClass z = x;
  for (auto& v : z.coords_) v = checked_mul(k, v);
  return z;
}

std::string HClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    const std::int64_t v = coords_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    const std::string name = (i < genus_ ? "a" : "b") + std::to_string(i < genus_ ? i + 1 : i - genus_ + 1);
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    const std::int64_t mag = v < 0 ? -v : v;
    if (mag != 1) os << mag << ' ';
    os << name;
    first = false;
  }
  return first ? "0" : os.str();
}

std::int64_t intersection(const HClass& x, const HClass& y) {
  require_same_genus(x.genus(), y.genus());
  const auto g = static_cast<std::size_t>(x.genus());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g; ++i) {
    s = checked_add(s, checked_mul(x[i], y[g + i]));
    s = checked_add(s, -checked_mul(x[g + i], y[i]));
  }
  return s;
}

// ----------------------------------------------------------------- SpMatrix

SpMatrix::SpMatrix(int genus) : genus_(genus), data_(static_cast<std::size_t>(4 * genus * genus), 0) {
  require_genus(genus);
}

SpMatrix SpMatrix::identity(int genus) {
  SpMatrix m(genus);
  for (int i = 0; i < m.dim(); ++i) m(i, i) = 1;
  return m;
}

SpMatrix SpMatrix::minus_identity(int genus) {
  SpMatrix m(genus);
  for (int i = 0; i < m.dim(); ++i) m(i, i) = -1;
  return m;
}

bool SpMatrix::is_identity() const { return *this == identity(genus_); }

bool SpMatrix::is_symplectic() const {
  // <Mx, My> == <x, y> on all basis pairs.
  const int n = dim();
  std::vector<HClass> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    cols.emplace_back(genus_, std::move(c));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::int64_t want = (j == i + genus_) ? 1 : (i == j + genus_) ? -1 : 0;
      if (intersection(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]) != want)
        return false;
    }
  return true;
}

HClass SpMatrix::apply(const HClass& x) const {
  require_same_genus(genus_, x.genus());
  const int n = dim();
  std::vector<std::int64_t> y(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s = checked_add(s, checked_mul((*this)(i, j), x[static_cast<std::size_t>(j)]));
    y[static_cast<std::size_t>(i)] = s;
  }
  return HClass(genus_, std::move(y));
}

void SpMatrix::right_multiply_transvection(const HClass& gamma, std::int64_t e) {
  require_same_genus(genus_, gamma.genus());
  if (e == 0 || gamma.is_zero()) return;
  // T = I + e * gamma * w^T with w^T x = <x, gamma>, i.e. w = (gamma_b, -gamma_a).
  // M T = M + e * (M gamma) w^T.
  const int n = dim();
  const int g = genus_;
  const HClass mg = apply(gamma);
  for (int c = 0; c < n; ++c) {
    const std::int64_t wc = c < g ? gamma[static_cast<std::size_t>(c + g)] : -gamma[static_cast<std::size_t>(c - g)];
    if (wc == 0) continue;
    const std::int64_t f = checked_mul(e, wc);
    for (int r = 0; r < n; ++r) (*this)(r, c) = checked_add((*this)(r, c), checked_mul(f, mg[static_cast<std::size_t>(r)]));
  }
}

SpMatrix operator*(const SpMatrix& x, const SpMatrix& y) {
  require_same_genus(x.genus_, y.genus_);
  SpMatrix p(x.genus_);
  const int n = x.dim();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::int64_t xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j) p(i, j) = checked_add(p(i, j), checked_mul(xik, y(k, j)));
    }
  return p;
}

std::string SpMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

SpMatrix transvection(const HClass& gamma, std::int64_t e) {
  SpMatrix m = SpMatrix::identity(gamma.genus());
  m.right_multiply_transvection(gamma, e);
  return m;
}

SpMatrix hyperelliptic_matrix(int g) {
  require_genus(g);
  return SpMatrix::minus_identity(g);
}

// -------------------------------------------------------------- chain curves

HClass chain_class(int g, int i) {
  require_genus(g);
  if (i < 1 || i > 2 * g + 1) throw std::out_of_range("chain curve index must be in 1..2g+1");
  if (i == 1) return HClass::a(g, 1);
  if (i == 2 * g + 1) return HClass::a(g, g);
  if (i % 2 == 0) return HClass::b(g, i / 2);
  const int j = (i - 1) / 2;
  return HClass::a(g, j) - HClass::a(g, j + 1);
}

SpMatrix evaluate_chain_word(const BraidWord& w, int g) {
  if (w.strands() > strands_for_genus(g)) throw std::invalid_argument("braid has more strands than 2g+2");
  SpMatrix m = SpMatrix::identity(g);
  for (const auto& l : w.word()) m.right_multiply_transvection(chain_class(g, l.index), l.sign);
  return m;
}

namespace {

SpMatrix chain_power_matrix(int g, int power) {
  SpMatrix step = SpMatrix::identity(g);
  for (int i = g; i >= 1; --i) step.right_multiply_transvection(chain_class(g, i), 1);
  SpMatrix m = SpMatrix::identity(g);
  for (int k = 0; k < power; ++k) m = m * step;
  return m;
}

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in int64");
  return static_cast<std::int64_t>(v);
}

std::int64_t isqrt_exact(const BigInt& v, bool& ok) {
  ok = false;
  if (v < 0) return 0;
  const std::int64_t n = to_i64(v);
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  ok = r * r == n;
  return r;
}

// All x2 with x2 x2^T == R for a symmetric r x r matrix R (r <= 2), up to sign.
bool rank_one_root(const std::vector<std::vector<BigInt>>& rm, std::vector<std::int64_t>& out) {
  const std::size_t r = rm.size();
  out.assign(r, 0);
  bool ok = false;
  for (std::size_t i = 0; i < r; ++i) {
    out[i] = isqrt_exact(rm[i][i], ok);
    if (!ok) return false;
  }
  // Fix signs against the first nonzero entry.
  std::size_t lead = r;
  for (std::size_t i = 0; i < r; ++i)
    if (out[i] != 0) {
      lead = i;
      break;
    }
  for (std::size_t i = 0; i < r; ++i) {
    if (lead == r || i == lead) continue;
    if (rm[lead][i] < 0) out[i] = -out[i];
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (BigInt(out[i]) * out[j] != rm[i][j]) return false;
  return true;
}

}  // namespace

ChainBoundary chain_boundary_classes(int g) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("chain boundary classes need odd g >= 3");
  const SpMatrix m = chain_power_matrix(g, g + 1);
  const int n = 2 * g;

  // M - I = S J^T with S = alpha alpha^T + beta beta^T; recover S = (M - I) J.
  IntMatrix s(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const auto nm = [&](int rr, int cc) { return m(rr, cc) - (rr == cc ? 1 : 0); };
      s(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = c >= g ? nm(r, c - g) : -nm(r, c + g);
    }
  if (!s.is_symmetric())
    throw ChainExtractionError("(M - I) J is not symmetric; M is not a product of commuting transvections");

  const SmithForm snf = smith_normal_form(s);
  const std::size_t rank = snf.rank();
  if (rank > 2)
    throw ChainExtractionError("M - I has rank " + std::to_string(rank) + " > 2");

  // Saturated basis P of the column lattice (first columns of U^-1) and its
  // left inverse L (first rows of U); S = P G P^T with G = L S L^T.
  std::vector<std::vector<std::int64_t>> p(rank, std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (std::size_t k = 0; k < rank; ++k)
    for (int i = 0; i < n; ++i) p[k][static_cast<std::size_t>(i)] = to_i64(snf.u_inv(static_cast<std::size_t>(i), k));
  std::vector<std::vector<BigInt>> gram(rank, std::vector<BigInt>(rank));
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t b = 0; b < rank; ++b) {
      BigInt acc = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc += snf.u(a, static_cast<std::size_t>(i)) * s(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                 snf.u(b, static_cast<std::size_t>(j));
      gram[a][b] = acc;
    }

  auto lift = [&](const std::vector<std::int64_t>& x) {
    HClass h = HClass::zero(g);
    for (std::size_t k = 0; k < x.size(); ++k) h = h + x[k] * HClass(g, p[k]);
    return h;
  };

  auto try_pair = [&](const std::vector<std::int64_t>& x1) -> std::optional<ChainBoundary> {
    std::vector<std::vector<BigInt>> rest = gram;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) rest[i][j] -= BigInt(x1[i]) * x1[j];
    std::vector<std::int64_t> x2;
    if (!rank_one_root(rest, x2)) return std::nullopt;
    const HClass alpha = lift(x1).sign_normalized();
    const HClass beta = lift(x2).sign_normalized();
    if (intersection(alpha, beta) != 0) return std::nullopt;
    SpMatrix rebuilt = transvection(alpha, 1);
    rebuilt.right_multiply_transvection(beta, 1);
    if (rebuilt != m) return std::nullopt;
    return ChainBoundary{alpha, beta, m};
  };

  // Enumerate x1 in the box |x1_i| <= sqrt(G_ii), nonzero candidates first.
  std::vector<std::int64_t> bound(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    bool exact = false;
    bound[i] = isqrt_exact(gram[i][i], exact);
  }
  std::vector<std::int64_t> x1(rank);
  for (int pass = 0; pass < 2; ++pass) {
    std::fill(x1.begin(), x1.end(), 0);
    for (std::size_t i = 0; i < rank; ++i) x1[i] = -bound[i];
    for (;;) {
      const bool nonzero = std::any_of(x1.begin(), x1.end(), [](std::int64_t v) { return v != 0; });
      if (nonzero == (pass == 0))
        if (auto found = try_pair(x1)) return *found;
      std::size_t i = 0;
      while (i < rank && x1[i] == bound[i]) x1[i] = -bound[i], ++i;
      if (i == rank) break;
      ++x1[i];
    }
  }
  throw ChainExtractionError("no integral split of M as a product of two commuting transvections");
}

// --------------------------------------------------------------- curve table

CurveTable::CurveTable(int g) : genus_(g) {
  require_genus(g);
  for (int i = 1; i <= g; ++i) {
    classes_.emplace("a" + std::to_string(i), HClass::a(g, i));
    classes_.emplace("b" + std::to_string(i), HClass::b(g, i));
  }
  for (int i = 1; i <= 2 * g + 1; ++i) classes_.emplace("A" + std::to_string(i), chain_class(g, i));
  for (int k = 0; k <= g; ++k) {
    const SpMatrix f = evaluate_chain_word(bar_delta(g, k) * delta(g, 2 * g - k), g);
    classes_.emplace("B" + std::to_string(k), f.apply(chain_class(g, 2 * g + 1 - k)).sign_normalized());
  }
  if (g % 2 == 0) {
    classes_.emplace("c", HClass::zero(g));
  } else if (g >= 3) {
    const ChainBoundary cb = chain_boundary_classes(g);
    classes_.emplace("bd1", cb.alpha);
    classes_.emplace("bd2", cb.beta);
    classes_.emplace("a", cb.alpha);
    classes_.emplace("b", cb.beta);
  }
}

bool CurveTable::contains(std::string_view label) const { return classes_.find(label) != classes_.end(); }

const HClass& CurveTable::at(std::string_view label) const {
  auto it = classes_.find(label);
  if (it == classes_.end())
    throw CurveLabelError("unknown curve label '" + std::string(label) + "' for genus " + std::to_string(genus_));
  return it->second;
}

std::vector<std::string> CurveTable::labels() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : classes_) out.push_back(k);
  return out;
}

HClass curve_class(std::string_view label, int g) {
  require_genus(g);
  if (label == "c" && g % 2 == 1) throw CurveLabelError("curve c exists only for even genus");
  if ((label == "a" || label == "b" || label == "bd1" || label == "bd2") && g % 2 == 0)
    throw CurveLabelError("curves a/b exist only for odd genus");
  return CurveTable(g).at(label);
}

// -------------------------------------------------------------- twist words

long TwistWord::twist_count() const {
  long n = 0;
  for (const auto& l : letters) {
    if (l.exponent < 0) throw std::invalid_argument("twist_count needs nonnegative exponents");
    n += l.exponent;
  }
  return n;
}

TwistWord& TwistWord::operator*=(const TwistWord& rhs) {
  require_same_genus(genus, rhs.genus);
  letters.insert(letters.end(), rhs.letters.begin(), rhs.letters.end());
  return *this;
}

std::string TwistWord::to_string() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += "t_" + l.label;
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

TwistWord twist_power(const TwistWord& w, int k) {
  if (k < 0) throw std::invalid_argument("twist_power needs k >= 0");
  TwistWord out{w.genus, {}};
  for (int i = 0; i < k; ++i) out *= w;
  return out;
}

TwistWord relation_word(int g) {
  if (g < 2) throw std::invalid_argument("relation word needs g >= 2");
  TwistWord half{g, {}};
  for (int k = 0; k <= g; ++k) half.letters.push_back({"B" + std::to_string(k), 1});
  if (g % 2 == 0) {
    half.letters.push_back({"c", 1});
  } else {
    half.letters.push_back({"bd1", 2});
    half.letters.push_back({"bd2", 2});
  }
  return twist_power(half, 2);
}

TwistWord chain_power_word(int g, int power) {
  require_genus(g);
  TwistWord step{g, {}};
  for (int i = g; i >= 1; --i) step.letters.push_back({"A" + std::to_string(i), 1});
  return twist_power(step, power);
}

SpMatrix evaluate_twistword(const TwistWord& w, const CurveTable& table) {
  require_same_genus(w.genus, table.genus());
  SpMatrix m = SpMatrix::identity(w.genus);
  for (const auto& l : w.letters) m.right_multiply_transvection(table.at(l.label), l.exponent);
  return m;
}

SpMatrix evaluate_twistword(const TwistWord& w) { return evaluate_twistword(w, CurveTable(w.genus)); }

}  // namespace twistkit
