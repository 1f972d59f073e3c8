#pragma once

// Unnormalized colored Jones polynomials of zero-volume banded links.
//
// Unknot colored N is [N]. Cabling component i by (r,s), g = gcd(|r|,s),
// p = s/g, with the g new components colored N_0..N_{g-1}:
//
//   J(cable) = sum_{m} C[m] * A^{(r/g) m (m p + 2)} * J(child; component i colored m p + 1)
//
// over m = -(|N|-g), ..., |N|-g in steps of 2, where C is the trinomial
// table of (N_0..N_{g-1}) and a negative color -j stands for -J(color j).
// A framing change by f multiplies by A^{f (N_i^2 - 1)}; a connected sum
// along color N is J(left) J(right) / [N].

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cjp/laurent.hpp"
#include "cjp/linkexpr.hpp"

namespace cjp {

// J / [N]^k could not be divided exactly; the limit is left to the caller.
struct DeferredRatio {
  LaurentPoly numerator;
  int color = 1;
  int power = 0;  // remaining exponent of [color] in the denominator
};

using NormalizedValue = std::variant<LaurentPoly, DeferredRatio>;

struct EngineOptions {
  // Memoized results are stored while their total span stays within this
  // many coefficient slots; larger results are recomputed on demand.
  std::size_t cache_slot_budget = std::size_t{1} << 26;
};

class JonesEngine {
 public:
  explicit JonesEngine(EngineOptions options = {});

  // Validates colors against the expression first.
  LaurentPoly colored_jones(const LinkExpr& e, const std::vector<int>& colors);
  // J with component `component` (1-based) recolored j; j = 0 gives 0 and
  // j < 0 gives -J(-j).
  LaurentPoly signed_color_fetch(const LinkExpr& e, const std::vector<int>& colors, int component,
                                 std::int64_t j);
  // All colors must equal one value N; divides by [N] split_mult times.
  NormalizedValue normalized_jones(const LinkExpr& e, const std::vector<int>& colors, int split_mult = 1);

  std::size_t cache_entries() const;
  std::size_t cached_slots() const;
  void clear_cache();

 private:
  struct Key {
    std::shared_ptr<const LinkNode> node;
    std::vector<int> colors;
    bool operator==(const Key& o) const { return node == o.node && colors == o.colors; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  LaurentPoly evaluate(const LinkExpr& e, const std::vector<int>& colors);
  LaurentPoly compute(const LinkExpr& e, const std::vector<int>& colors);
  LaurentPoly compute_cable(const LinkExpr& e, const std::vector<int>& colors);
  LaurentPoly compute_connsum(const LinkExpr& e, const std::vector<int>& colors);

  EngineOptions options_;
  mutable std::mutex mutex_;
  std::unordered_map<Key, LaurentPoly, KeyHash> cache_;
  std::size_t cached_slots_ = 0;
};

// One-shot versions with a fresh engine.
LaurentPoly colored_jones(const LinkExpr& e, const std::vector<int>& colors);
LaurentPoly signed_color_fetch(const LinkExpr& e, const std::vector<int>& colors, int component,
                               std::int64_t j);
NormalizedValue normalized_jones(const LinkExpr& e, const std::vector<int>& colors, int split_mult = 1);

// Exponent of A in the m-th cabling term: (r/g) m (m p + 2), g = gcd(|r|,s), p = s/g.
std::int64_t cable_term_exponent(std::int64_t r, std::int64_t s, std::int64_t m);

// J(left) J(right) / [N]; throws ColorMismatchAtConnSum when the joined
// components carry different colors.
LaurentPoly connected_sum(const LaurentPoly& left, int left_color, const LaurentPoly& right,
                          int right_color);

}  // namespace cjp
