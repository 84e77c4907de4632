#include "twistkit/artin.hpp"

#include <string>

namespace twistkit {

FreeAuto FreeAuto::identity(int rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int j = 1; j <= rank; ++j) images.push_back(Word::generator(j));
  return FreeAuto(std::move(images));
}

std::size_t FreeAuto::total_length() const {
  std::size_t n = 0;
  for (const auto& w : images_) n += w.size();
  return n;
}

bool FreeAuto::is_identity() const {
  for (int j = 1; j <= rank(); ++j)
    if (image(j) != Word::generator(j)) return false;
  return true;
}

Word FreeAuto::apply(const Word& w) const {
  Word out;
  for (const auto& l : w) {
    if (l.index > rank()) throw std::invalid_argument("letter outside the free basis");
    const Word& img = images_[static_cast<std::size_t>(l.index - 1)];
    out *= l.sign > 0 ? img : invert(img);
  }
  return out;
}

void FreeAuto::compose_generator(int i, int sign) {
  if (i < 1 || i >= rank()) throw std::out_of_range("Artin generator index out of range");
  Word& xi = images_[static_cast<std::size_t>(i - 1)];
  Word& xj = images_[static_cast<std::size_t>(i)];
  if (sign > 0) {
    // (psi o sigma)(x_i) = psi(x_i) psi(x_{i+1}) psi(x_i)^-1, (psi o sigma)(x_{i+1}) = psi(x_i)
    Word next = xi * xj * invert(xi);
    xj = std::move(xi);
    xi = std::move(next);
  } else {
    Word next = invert(xj) * xi * xj;
    xi = std::move(xj);
    xj = std::move(next);
  }
}

FreeAuto compose(const FreeAuto& f, const FreeAuto& h) {
  if (f.rank() != h.rank()) throw std::invalid_argument("rank mismatch in composition");
  std::vector<Word> images;
  images.reserve(h.images_.size());
  for (const auto& w : h.images_) images.push_back(f.apply(w));
  return FreeAuto(std::move(images));
}

FreeAuto artin_generator(int n, int i, int sign) {
  if (i < 1 || i > n - 1) throw std::out_of_range("Artin generator index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +/-1");
  FreeAuto f = FreeAuto::identity(n);
  f.compose_generator(i, sign);
  return f;
}

FreeAuto evaluate(const BraidWord& w, std::size_t ceiling) {
  // Left-to-right right-composition: psi_j = psi_{j-1} o sigma_{a_j}, so the
  // rightmost letter ends up acting first.
  FreeAuto f = FreeAuto::identity(w.strands());
  for (const auto& l : w.word()) {
    f.compose_generator(l.index, l.sign);
    if (f.total_length() > ceiling)
      throw ImageGrowthError("Artin images exceed " + std::to_string(ceiling) + " letters");
  }
  return f;
}

bool braid_equal(const BraidWord& u, const BraidWord& v, std::size_t ceiling) {
  if (u.strands() != v.strands()) throw std::invalid_argument("strand count mismatch");
  return evaluate(u, ceiling) == evaluate(v, ceiling);
}

std::optional<int> first_difference(const FreeAuto& f, const FreeAuto& h) {
  if (f.rank() != h.rank()) throw std::invalid_argument("rank mismatch");
  for (int j = 1; j <= f.rank(); ++j)
    if (f.image(j) != h.image(j)) return j;
  return std::nullopt;
}

}  // namespace twistkit
