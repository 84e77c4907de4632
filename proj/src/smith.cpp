#include "twistkit/smith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistkit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) ++r;
  return r;
}

std::vector<BigInt> SmithForm::invariant_factors() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

namespace {

// Elementary operations applied to D while keeping U, V and their inverses in step.
struct Reducer {
  SmithForm s;

  void swap_rows(std::size_t a, std::size_t b) {
    s.d.swap_rows(a, b);
    s.u.swap_rows(a, b);
    s.u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    s.d.swap_cols(a, b);
    s.v.swap_cols(a, b);
    s.v_inv.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    s.d.add_row_multiple(dst, src, k);
    s.u.add_row_multiple(dst, src, k);
    s.u_inv.add_col_multiple(src, dst, -k);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    s.d.add_col_multiple(dst, src, k);
    s.v.add_col_multiple(dst, src, k);
    s.v_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    s.d.negate_row(r);
    s.u.negate_row(r);
    for (std::size_t i = 0; i < s.u_inv.rows(); ++i) s.u_inv(i, r) = -s.u_inv(i, r);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    const IntMatrix& d = s.d;
    bool found = false;
    std::size_t pr = t, pc = t;
    BigInt best;
    for (std::size_t r = t; r < d.rows(); ++r)
      for (std::size_t c = t; c < d.cols(); ++c) {
        if (d(r, c) == 0) continue;
        BigInt a = abs(d(r, c));
        if (!found || a < best) {
          found = true;
          best = a;
          pr = r;
          pc = c;
        }
      }
    if (!found) return false;
    swap_rows(t, pr);
    swap_cols(t, pc);
    return true;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer red{{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
               IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())}};
  IntMatrix& d = red.s.d;
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    if (!red.place_pivot(t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        red.add_row(i, t, -BigInt(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        red.add_col(j, t, -BigInt(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; it becomes the new pivot.
        red.place_pivot(t);
        continue;
      }
      // Row and column are clear; enforce d_t | every trailing entry.
      std::size_t bad_row = d.rows();
      for (std::size_t i = t + 1; i < d.rows() && bad_row == d.rows(); ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == d.rows()) break;
      red.add_row(t, bad_row, 1);
    }
    if (d(t, t) < 0) red.negate_row(t);
  }
  return std::move(red.s);
}

}  // namespace twistkit
