#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twistkit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense r x c matrix of arbitrary-precision integers, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;      ///< diagonal, nonnegative, d_i | d_{i+1}
  IntMatrix u;      ///< unimodular, rows x rows
  IntMatrix v;      ///< unimodular, cols x cols
  IntMatrix u_inv;  ///< u^-1, tracked alongside u
  IntMatrix v_inv;  ///< v^-1

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  /// The nonzero diagonal entries in order.
  std::vector<BigInt> invariant_factors() const;
};

/// D = U * M * V with D in Smith normal form.
///
/// Pivots are chosen by minimal absolute value among the remaining nonzero
/// entries, which keeps intermediate coefficients small without any
/// modular or probabilistic machinery.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace twistkit
