#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistkit/braid.hpp"

namespace twistkit {

/// Integer homology class on the closed genus-g surface, in the ordered basis
/// (a_1, ..., a_g, b_1, ..., b_g) with <a_i, b_i> = +1.
class HClass {
 public:
  HClass(int genus, std::vector<std::int64_t> coords);
  static HClass zero(int genus);
  static HClass a(int genus, int i);
  static HClass b(int genus, int i);

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  /// Flips the sign so the first nonzero coordinate is positive. Curves are
  /// unoriented, and a twist only sees the class up to sign.
  HClass sign_normalized() const;

  HClass operator-() const;
  friend HClass operator+(const HClass& x, const HClass& y);
  friend HClass operator-(const HClass& x, const HClass& y);
  friend HClass operator*(std::int64_t k, const HClass& x);
  friend bool operator==(const HClass&, const HClass&) = default;

  /// e.g. "a1 + b1 - 2 a3"; the zero class prints as "0".
  std::string to_string() const;

 private:
  int genus_;
  std::vector<std::int64_t> coords_;
};

/// Algebraic intersection pairing; throws std::invalid_argument on genus mismatch.
std::int64_t intersection(const HClass& x, const HClass& y);

/// 2g x 2g integer matrix acting on H_1; column j is the image of basis vector j.
/// All arithmetic is overflow-checked (std::overflow_error).
class SpMatrix {
 public:
  static SpMatrix identity(int genus);
  static SpMatrix minus_identity(int genus);

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * dim() + c)]; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * dim() + c)]; }

  bool is_identity() const;
  /// M^T J M == J for the standard form J.
  bool is_symplectic() const;

  HClass apply(const HClass& x) const;

  /// this <- this * transvection(gamma, e), in O(dim^2).
  void right_multiply_transvection(const HClass& gamma, std::int64_t e);

  friend SpMatrix operator*(const SpMatrix& x, const SpMatrix& y);
  friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

  std::string to_string() const;

 private:
  explicit SpMatrix(int genus);
  int genus_;
  std::vector<std::int64_t> data_;
};

/// x -> x + e <x, gamma> gamma, the H_1 action of the e-th power of a right twist.
SpMatrix transvection(const HClass& gamma, std::int64_t e);

/// -I on H_1 of the genus-g surface, the action of the hyperelliptic involution.
SpMatrix hyperelliptic_matrix(int g);

/// Product of the chain twists t_i = transvection([A_i], 1), one per letter of
/// a braid word on 2g+2 strands (sigma_i -> t_i), rightmost acting first.
SpMatrix evaluate_chain_word(const BraidWord& w, int g);

/// Raised when the two-class extraction behind the odd-genus chain relation fails.
class ChainExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChainBoundary {
  HClass alpha;
  HClass beta;
  SpMatrix monodromy;  ///< (t_g ... t_1)^{g+1}
};

/// For odd g >= 3: splits M = (t_g ... t_1)^{g+1} as transvection(alpha, 1) *
/// transvection(beta, 1) with <alpha, beta> = 0, both sign-normalized.
ChainBoundary chain_boundary_classes(int g);

class CurveLabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Homology classes of every named curve for one genus.
///
/// Labels: a1..ag, b1..bg, A1..A{2g+1}, B0..Bg, c (even g), bd1/bd2 (odd g;
/// aliases a/b). The chain uses [A_1] = a_1, [A_2j] = b_j,
/// [A_2j+1] = a_j - a_{j+1}, [A_2g+1] = a_g. [B_k] is computed as the image of
/// [A_{2g+1-k}] under bar_delta_k Delta_{2g-k} in the chain twists, then
/// sign-normalized. [c] is zero.
class CurveTable {
 public:
  explicit CurveTable(int g);

  int genus() const { return genus_; }
  const HClass& at(std::string_view label) const;
  bool contains(std::string_view label) const;
  std::vector<std::string> labels() const;

 private:
  int genus_;
  std::map<std::string, HClass, std::less<>> classes_;
};

HClass curve_class(std::string_view label, int g);

/// [A_i], 1 <= i <= 2g+1, without building a whole table.
HClass chain_class(int g, int i);

struct TwistLetter {
  std::string label;
  long exponent = 1;
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Product of Dehn twist powers, leftmost factor applied last.
struct TwistWord {
  int genus = 1;
  std::vector<TwistLetter> letters;

  /// Total number of right twists (sum of exponents; all exponents must be >= 0).
  long twist_count() const;
  TwistWord& operator*=(const TwistWord& rhs);
  std::string to_string() const;
};

TwistWord twist_power(const TwistWord& w, int k);

/// (t_B0 ... t_Bg t_c)^2 for even g, (t_B0 ... t_Bg t_a^2 t_b^2)^2 for odd g.
TwistWord relation_word(int g);

/// (t_g ... t_2 t_1)^power over the chain curves A_1..A_g.
TwistWord chain_power_word(int g, int power);

SpMatrix evaluate_twistword(const TwistWord& w, const CurveTable& table);
SpMatrix evaluate_twistword(const TwistWord& w);

}  // namespace twistkit
