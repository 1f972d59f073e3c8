#pragma once

// Laurent polynomials in A = q^{1/4} with arbitrary-precision integer
// coefficients.
//
// Storage is a dense coefficient window [offset, offset + span). Coefficients
// live in one of two tiers: an int64 array while every |c| < 2^62, otherwise
// an array of GMP integers. The tier is an implementation detail; equality,
// printing and every operation depend only on the mathematical value.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace cjp {

using Integer = mpz_class;

// A0 = exp(i*pi/(2N)), a primitive 4N-th root of unity; q0 = A0^4 = exp(2*pi*i/N).
class RootOfUnityPoint {
 public:
  explicit RootOfUnityPoint(int n);

  int n() const { return n_; }
  std::int64_t period() const { return 4 * static_cast<std::int64_t>(n_); }
  std::complex<double> value() const;

 private:
  int n_;
};

class LaurentPoly {
 public:
  static constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

  LaurentPoly() = default;
  explicit LaurentPoly(long c);
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(const Integer& c, std::int64_t exponent);
  static LaurentPoly from_terms(const std::vector<std::pair<std::int64_t, Integer>>& terms);
  static LaurentPoly from_dense(std::int64_t offset, std::vector<std::int64_t> coeffs);
  static LaurentPoly from_dense(std::int64_t offset, std::vector<Integer> coeffs);

  bool is_zero() const { return span() == 0; }
  // Both throw InvalidArgument on the zero polynomial.
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  // Number of dense slots, including interior zeros.
  std::size_t span() const { return big_mode_ ? big_.size() : small_.size(); }
  std::size_t term_count() const;
  std::int64_t offset() const { return offset_; }

  Integer coefficient(std::int64_t exponent) const;
  Integer leading_coefficient() const;
  Integer max_abs_coefficient() const;

  bool is_small() const { return !big_mode_; }
  std::span<const std::int64_t> small_coefficients() const { return small_; }
  std::span<const Integer> big_coefficients() const { return big_; }
  // Dense copy in the big tier regardless of storage.
  std::vector<Integer> dense_integers() const;

  // Nonzero terms in ascending exponent order.
  std::vector<std::pair<std::int64_t, Integer>> terms() const;

  LaurentPoly shifted(std::int64_t k) const;
  LaurentPoly scaled(const Integer& c) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  friend class PolyAccumulator;
  friend LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly derivative(const LaurentPoly& a);
  friend LaurentPoly mirror(const LaurentPoly& a);

  void canonicalize();
  void promote();

  std::int64_t offset_ = 0;
  std::vector<std::int64_t> small_;
  std::vector<Integer> big_;
  bool big_mode_ = false;
};

// Sums many scaled, shifted polynomials into one growing window without
// reallocating per term. Stays in int64 while a running magnitude bound allows.
class PolyAccumulator {
 public:
  void add(const LaurentPoly& p, const Integer& c, std::int64_t shift);
  void add(const LaurentPoly& p, std::int64_t c, std::int64_t shift);
  LaurentPoly take();

 private:
  void ensure_window(std::int64_t lo, std::int64_t hi);
  void promote();

  std::int64_t offset_ = 0;
  std::vector<std::int64_t> small_;
  std::vector<Integer> big_;
  bool big_mode_ = false;
  bool has_window_ = false;
  // Upper bound on max |entry| while in the small tier.
  unsigned __int128 bound_ = 0;
};

// [n] = A^{2(n-1)} + A^{2(n-3)} + ... + A^{-2(n-1)}; [0] = 0; [-n] = -[n].
LaurentPoly quantum_integer(std::int64_t n);

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);
// a / b when the division is exact; throws NotDivisible otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
// a / [n] in time linear in the span of a (via the binomial A^{2n} - A^{-2n}).
LaurentPoly divide_by_quantum_integer(const LaurentPoly& a, std::int64_t n);
LaurentPoly derivative(const LaurentPoly& a);
LaurentPoly mirror(const LaurentPoly& a);

struct RootValue {
  std::complex<double> value;
  // Sum of |T_r| over the exactly folded residue sums; bounds the rounding
  // error of the final double-precision pass up to a small factor.
  double scale = 0.0;
};

std::complex<double> eval_at_root(const LaurentPoly& a, const RootOfUnityPoint& pt);
RootValue eval_at_root_scaled(const LaurentPoly& a, const RootOfUnityPoint& pt);

// "A^16 + A^12 + A^8 - 1"; "0" for the zero polynomial.
std::string to_string(const LaurentPoly& p);
// {"variable":"A","terms":[[exponent,"coefficient"],...]} in descending order.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace cjp
