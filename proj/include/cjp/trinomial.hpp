#pragma once

// Generalized trinomial coefficients: the coefficient of x^w in
//   prod_k (x^{(N_k-1)/2} + x^{(N_k-1)/2 - 1} + ... + x^{-(N_k-1)/2}).
// Indexed by m = 2w so every index is an integer.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cjp/laurent.hpp"

namespace cjp {

// Colors (dimensions of sl2 irreducibles); every entry >= 1, length >= 1.
class ColorVector {
 public:
  ColorVector() = default;
  // Throws NonPositiveColor on an entry < 1, InvalidArgument when empty.
  explicit ColorVector(std::vector<int> entries);
  ColorVector(std::initializer_list<int> entries)
      : ColorVector(std::vector<int>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<int>& entries() const { return entries_; }
  // |N| = N_0 + ... + N_{g-1}
  std::int64_t total() const;
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const ColorVector&, const ColorVector&) = default;

 private:
  std::vector<int> entries_;
};

class CoeffTable {
 public:
  explicit CoeffTable(ColorVector colors);

  const ColorVector& colors() const { return colors_; }
  // Largest index in the support: |N| - g.
  std::int64_t max_index() const { return max_index_; }
  // C[m]; zero outside the support.
  const Integer& at(std::int64_t m) const;
  // Support indices -max_index, -max_index + 2, ..., max_index.
  std::vector<std::int64_t> support() const;

 private:
  ColorVector colors_;
  std::int64_t max_index_ = 0;
  // values_[k] = C[-max_index + 2k]
  std::vector<Integer> values_;
};

CoeffTable trinomial_table(const ColorVector& colors);
Integer coefficient(const ColorVector& colors, std::int64_t m);

}  // namespace cjp
