#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistkit/word.hpp"

namespace twistkit {

/// A word in the Artin generators sigma_1..sigma_{n-1} of the braid group B_n.
///
/// The strand count travels with the word, so embedding B_{h+1} into B_n is an
/// explicit widen() rather than an implicit reinterpretation.
class BraidWord {
 public:
  BraidWord(int strands, Word word);
  /// Identity braid on `strands` strands.
  explicit BraidWord(int strands);

  int strands() const { return strands_; }
  const Word& word() const { return word_; }

  BraidWord widen(int strands) const;

  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  BraidWord inverse() const;
  BraidWord pow(long k) const;

 private:
  int strands_;
  Word word_;
};

BraidWord sigma(int strands, int i, int sign = 1);

/// Number of strands of the braid group hosting genus g: 2g + 2.
inline int strands_for_genus(int g) { return 2 * g + 2; }

// Named words on 2g+2 strands. The overlined Delta of the literature is called
// bar_delta here: bar_delta(g, k) = sigma_k ... sigma_2 sigma_1, while
// delta(g, k) = sigma_1 sigma_2 ... sigma_k. Both are the identity for k = 0.
BraidWord delta(int g, int k);
BraidWord bar_delta(int g, int k);

/// bar_delta_k Delta_{2g+1-k} Delta_{2g-k}^-1 bar_delta_k^-1, 0 <= k <= g.
BraidWord beta_k(int g, int k);
/// bar_delta_g^{g+1}.
BraidWord beta(int g);
/// bar_delta_k Delta_{2g-1-k} Delta_{2g-2-k}^-1 bar_delta_k^-1 for 0 <= k < g;
/// gamma_k(g, g) is the identity.
BraidWord gamma_k(int g, int k);
/// bar_delta_{g-1}^g, g >= 1.
BraidWord gamma(int g);

/// Delta_{2g+1} Delta_{2g} ... Delta_1, the half twist on 2g+2 strands.
BraidWord half_twist(int g);

struct IdentitySides {
  BraidWord lhs;
  BraidWord rhs;
};

/// (beta_0 ... beta_g beta^2, Delta_{2g+1} ... Delta_1).
IdentitySides theorem3_sides(int g);

enum class LemmaId { L1a, L1b, L1c, L1d, L2a, L2b, L3, T3 };

std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view name);
std::vector<LemmaId> all_lemma_ids();

/// Index parameters of one lemma instance. Meaning of the fields per lemma:
///   L1a  sigma_k^s Delta_m = Delta_m sigma_{k-1}^s,      1 < k <= m,   s = +/-1
///   L1b  sigma_k^s bDelta_m = bDelta_m sigma_{k+1}^s,    1 <= k < m,   s = +/-1
///   L1c  sigma_k X_m = X_m sigma_k,  k > m+1; variant 0: X = Delta, 1: X = bDelta
///   L1d  k in 1..g; variant 0: Delta_g^k form, 1: bDelta_g^k form
///   L2a  no parameters
///   L2b  variant 0: commutes with sigma_k (1 <= k < g); variant 1: with bDelta_{g-1}^g
///   L3   0 <= k <= g-1
///   T3   no parameters
struct LemmaParams {
  int k = 0;
  int m = 0;
  int sign = 1;
  int variant = 0;

  friend bool operator==(const LemmaParams&, const LemmaParams&) = default;
};

std::string describe(LemmaId id, const LemmaParams& p);

/// Both sides of a lemma instance inside B_{2g+2}. Throws std::out_of_range when
/// the parameters violate the lemma's index range.
IdentitySides lemma_identity_sides(LemmaId id, int g, const LemmaParams& p);

/// Every valid parameter tuple of the lemma for genus g, in a fixed order.
std::vector<LemmaParams> lemma_instances(LemmaId id, int g);

/// Permutation of {1..n}; images[j-1] is the image of j.
class Permutation {
 public:
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  /// Cycle notation, e.g. "(1 3)"; the identity prints as "()".
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p compose q)(j) = p(q(j)): q acts first.
Permutation compose(const Permutation& p, const Permutation& q);

/// Image under B_n -> S_n, sigma_i -> (i i+1), rightmost letter acting first.
Permutation to_permutation(const BraidWord& w);

}  // namespace twistkit
