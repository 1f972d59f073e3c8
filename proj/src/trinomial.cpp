#include "cjp/trinomial.hpp"

#include <numeric>

#include "cjp/error.hpp"

namespace cjp {

ColorVector::ColorVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "empty color vector");
  for (int n : entries_)
    if (n < 1) throw Error(ErrorKind::NonPositiveColor, "color " + std::to_string(n) + " is not positive");
}

std::int64_t ColorVector::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

// Each factor is an all-ones vector of length N_k; multiplying by it is a
// sliding-window sum of width N_k over the previous table.
CoeffTable::CoeffTable(ColorVector colors) : colors_(std::move(colors)) {
  values_ = {Integer(1)};
  for (int n : colors_) {
    const std::size_t width = static_cast<std::size_t>(n);
    std::vector<Integer> next(values_.size() + width - 1);
    Integer window = 0;
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < values_.size()) window += values_[k];
      if (k >= width) window -= values_[k - width];
      next[k] = window;
    }
    values_ = std::move(next);
  }
  max_index_ = colors_.total() - static_cast<std::int64_t>(colors_.size());
}

const Integer& CoeffTable::at(std::int64_t m) const {
  static const Integer zero = 0;
  if (m > max_index_ || m < -max_index_ || (m + max_index_) % 2 != 0) return zero;
  return values_[static_cast<std::size_t>((m + max_index_) / 2)];
}

std::vector<std::int64_t> CoeffTable::support() const {
  std::vector<std::int64_t> out;
  for (std::int64_t m = -max_index_; m <= max_index_; m += 2) out.push_back(m);
  return out;
}

CoeffTable trinomial_table(const ColorVector& colors) { return CoeffTable(colors); }

Integer coefficient(const ColorVector& colors, std::int64_t m) { return CoeffTable(colors).at(m); }

}  // namespace cjp
