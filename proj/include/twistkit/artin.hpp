#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twistkit/braid.hpp"
#include "twistkit/word.hpp"

namespace twistkit {

/// Raised when automorphism images outgrow the configured letter ceiling.
class ImageGrowthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default total-letter ceiling for automorphism images.
inline constexpr std::size_t kDefaultImageCeiling = 1'000'000;

/// Automorphism of the free group F_n on x_1..x_n, stored as the images of
/// the basis letters.
///
/// Braid generators act by the Artin convention
///   sigma_i:      x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
///   sigma_i^-1:   x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
/// and fix every other x_j. The action is faithful, so equality of images
/// decides equality in B_n.
class FreeAuto {
 public:
  static FreeAuto identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const Word& image(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Word>& images() const { return images_; }
  std::size_t total_length() const;
  bool is_identity() const;

  /// Image of an arbitrary word over x_1..x_n.
  Word apply(const Word& w) const;

  /// this <- this o sigma_i^sign. Only the images of x_i and x_{i+1} change.
  void compose_generator(int i, int sign);

  friend bool operator==(const FreeAuto&, const FreeAuto&) = default;

 private:
  explicit FreeAuto(std::vector<Word> images) : images_(std::move(images)) {}
  std::vector<Word> images_;

  friend FreeAuto compose(const FreeAuto&, const FreeAuto&);
};

/// (f o h)(x) = f(h(x)): h acts first.
FreeAuto compose(const FreeAuto& f, const FreeAuto& h);

FreeAuto artin_generator(int n, int i, int sign);

/// Composition of the generator automorphisms of `w`, rightmost letter first.
FreeAuto evaluate(const BraidWord& w, std::size_t ceiling = kDefaultImageCeiling);

/// Exact equality in B_n via the Artin action (all n basis images compared).
bool braid_equal(const BraidWord& u, const BraidWord& v,
                 std::size_t ceiling = kDefaultImageCeiling);

/// First basis index whose images differ, or nullopt if the automorphisms agree.
std::optional<int> first_difference(const FreeAuto& f, const FreeAuto& h);

}  // namespace twistkit
