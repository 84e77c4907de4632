#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/homology.hpp"
#include "twistkit/smith.hpp"

namespace twistkit {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... and every d_i >= 2 (trivial factors are dropped, so
/// Z + Z_1 compares equal to Z).
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroup from_smith(const SmithForm& snf, std::size_t generators);

  /// Z + Z_n with the Z_1 factor normalized away.
  static AbelianGroup z_plus_zn(long n);

  /// "Z^2 + Z_3", "0" for the trivial group.
  std::string to_string() const;
  /// {"free_rank": r, "torsion": [d_1, ...]}
  std::string to_json() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Which monodromy word's vanishing cycles to list.
struct Monodromy {
  enum class Kind { W, Wn } kind = Kind::W;
  long n = 1;

  static Monodromy w() { return {Kind::W, 1}; }
  static Monodromy wn(long n) { return {Kind::Wn, n}; }
};

/// One conjugating factor f of W^f inside W_n, as a twist power.
struct ConjugatingTwist {
  std::string label;  ///< empty for the unconjugated copy of W
  long exponent = 0;
};

/// The g conjugating twists of W_n in order (the first is the identity).
std::vector<ConjugatingTwist> wn_conjugators(int g, long n);

/// Vanishing-cycle homology classes of W or W_n, in monodromy order. For W^f
/// each class is M_f [gamma] for the curves gamma of W.
std::vector<HClass> vanishing_cycle_classes(int g, Monodromy which);

/// Cokernel of the class matrix, i.e. Z^{2g} modulo the classes.
AbelianGroup abelianization(const std::vector<HClass>& classes);

/// Opaque commutator product prod [x_i, y_i]; factors name their generator
/// pairs and may keep naming generators that a Tietze move has eliminated.
struct CommutatorSymbol {
  std::string name;
  std::vector<std::pair<std::string, std::string>> factors;
};

/// Group presentation. Letters with index <= generators.size() are
/// generators; index generators.size() + j is commutator symbol j (1-based).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<CommutatorSymbol> symbols;
  std::vector<Word> relators;

  int generator_count() const { return static_cast<int>(generators.size()); }
  bool is_symbol(int index) const { return index > generator_count(); }

  /// Throws std::invalid_argument if a relator uses an undeclared letter.
  void validate() const;

  /// Exponent-sum matrix over the generators; symbols abelianize to zero.
  IntMatrix relation_matrix() const;
  AbelianGroup abelianization() const;

  std::string to_string() const;
};

/// Presentation of pi_1(X_n) for even g = 2r read off the W_n vanishing cycles:
/// generators a_1, b_1, ..., a_g, b_g (ids 2i-1, 2i) and relators
///   prod [a_k, b_k];  B_0, ..., B_g, c;  a_1, ..., a_{r-1}, a_r^n, b_{r+2}, ..., b_g.
/// The c_j inside the B-words are opaque commutator symbols c_j = prod_{i<=j} [a_i, b_i].
/// Throws std::invalid_argument for odd g.
Presentation fiber_sum_presentation(int g, long n);

/// Repeated Tietze elimination: a generator occurring exactly once in some
/// cyclically reduced relator is solved for and substituted away. A symbol
/// factor [x, y] disappears once x or y has been eliminated to the identity,
/// and a symbol with no factors left is the identity. Generators are never
/// introduced, so this terminates.
Presentation tietze_eliminate(const Presentation& p);

}  // namespace twistkit
