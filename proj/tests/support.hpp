#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cjp/laurent.hpp"
#include "cjp/linkexpr.hpp"

namespace cjp::testing {

// Polynomial from (exponent, coefficient) pairs.
inline LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
  std::vector<std::pair<std::int64_t, Integer>> t;
  for (const auto& [e, c] : terms) t.emplace_back(e, Integer(c));
  return LaurentPoly::from_terms(t);
}

inline LaurentPoly mono(long c, std::int64_t e) { return LaurentPoly::monomial(Integer(c), e); }

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_span, long max_coeff, int max_offset = 20) {
  std::uniform_int_distribution<int> span_dist(0, max_span);
  std::uniform_int_distribution<int> offset_dist(-max_offset, max_offset);
  std::uniform_int_distribution<long> coeff_dist(-max_coeff, max_coeff);
  std::vector<std::int64_t> dense(static_cast<std::size_t>(span_dist(rng)));
  for (auto& c : dense) c = coeff_dist(rng);
  return LaurentPoly::from_dense(offset_dist(rng), std::move(dense));
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int max_span, long max_coeff) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_span, max_coeff);
    if (!p.is_zero()) return p;
  }
}

// Small random zero-volume expressions: nesting depth <= depth, s <= 3,
// |r| <= 3, at most 4 components.
inline LinkExpr random_expr(std::mt19937_64& rng, int depth) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  if (depth == 0) return LinkExpr::unknot();
  const int choice = pick(0, 9);
  if (choice < 2) return LinkExpr::unknot();
  if (choice < 6) {
    LinkExpr child = random_expr(rng, depth - 1);
    const int s = pick(1, 3);
    const int r = pick(-3, 3);
    const int g = std::gcd(r < 0 ? -r : r, s);
    if (child.component_count() + g - 1 > 4) return child;
    return LinkExpr::cable(child, pick(1, child.component_count()), r, s);
  }
  if (choice < 8) {
    LinkExpr child = random_expr(rng, depth - 1);
    return LinkExpr::twist(child, pick(1, child.component_count()), pick(-3, 3));
  }
  LinkExpr left = random_expr(rng, depth - 1);
  LinkExpr right = random_expr(rng, depth - 1);
  if (left.component_count() + right.component_count() - 1 > 4) return left;
  return LinkExpr::connsum(left, pick(1, left.component_count()), right, pick(1, right.component_count()));
}

}  // namespace cjp::testing
