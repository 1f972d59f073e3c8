#include "cjp/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cjp/error.hpp"
#include "cjp/kernels.hpp"

namespace cjp {
namespace {

using i64 = std::int64_t;
using u128 = unsigned __int128;

bool fits_small(const Integer& c) {
  return mpz_sizeinbase(c.get_mpz_t(), 2) <= 62;
}

Integer from_small(i64 v) { return Integer(static_cast<long>(v)); }

i64 abs_small(i64 v) { return v < 0 ? -v : v; }

bool in_small_range(i64 v) { return v < LaurentPoly::kSmallLimit && v > -LaurentPoly::kSmallLimit; }

i64 floor_mod(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

const kernels::KernelTable& K() { return kernels::active(); }

}  // namespace

RootOfUnityPoint::RootOfUnityPoint(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root of unity order must be positive");
}

std::complex<double> RootOfUnityPoint::value() const {
  return std::polar(1.0, std::numbers::pi / (2.0 * n_));
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) {
    big_mode_ = true;
    big_.push_back(c);
    canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(const Integer& c, i64 exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.offset_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<i64, Integer>>& terms) {
  if (terms.empty()) return {};
  i64 lo = terms.front().first;
  i64 hi = lo;
  for (const auto& [e, c] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : terms) dense[static_cast<std::size_t>(e - lo)] += c;
  return from_dense(lo, std::move(dense));
}

LaurentPoly LaurentPoly::from_dense(i64 offset, std::vector<i64> coeffs) {
  LaurentPoly p;
  p.offset_ = offset;
  p.small_ = std::move(coeffs);
  p.canonicalize();
  return p;
}

LaurentPoly LaurentPoly::from_dense(i64 offset, std::vector<Integer> coeffs) {
  LaurentPoly p;
  p.offset_ = offset;
  p.big_ = std::move(coeffs);
  p.big_mode_ = true;
  p.canonicalize();
  return p;
}

void LaurentPoly::promote() {
  if (big_mode_) return;
  big_.clear();
  big_.reserve(small_.size());
  for (i64 v : small_) big_.push_back(from_small(v));
  small_.clear();
  small_.shrink_to_fit();
  big_mode_ = true;
}

void LaurentPoly::canonicalize() {
  if (big_mode_) {
    std::size_t first = 0;
    std::size_t last = big_.size();
    while (first < last && big_[first] == 0) ++first;
    while (last > first && big_[last - 1] == 0) --last;
    if (first > 0 || last < big_.size()) {
      big_.erase(big_.begin() + static_cast<std::ptrdiff_t>(last), big_.end());
      big_.erase(big_.begin(), big_.begin() + static_cast<std::ptrdiff_t>(first));
      offset_ += static_cast<i64>(first);
    }
    if (std::all_of(big_.begin(), big_.end(), fits_small)) {
      small_.resize(big_.size());
      for (std::size_t i = 0; i < big_.size(); ++i) small_[i] = mpz_get_si(big_[i].get_mpz_t());
      big_.clear();
      big_.shrink_to_fit();
      big_mode_ = false;
    }
  } else {
    std::size_t first = 0;
    std::size_t last = small_.size();
    while (first < last && small_[first] == 0) ++first;
    while (last > first && small_[last - 1] == 0) --last;
    if (first > 0 || last < small_.size()) {
      small_.erase(small_.begin() + static_cast<std::ptrdiff_t>(last), small_.end());
      small_.erase(small_.begin(), small_.begin() + static_cast<std::ptrdiff_t>(first));
      offset_ += static_cast<i64>(first);
    }
    if (!small_.empty() && K().max_abs(small_.data(), small_.size()) >= kSmallLimit) promote();
  }
  if (span() == 0) offset_ = 0;
}

i64 LaurentPoly::min_degree() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial");
  return offset_;
}

i64 LaurentPoly::max_degree() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial");
  return offset_ + static_cast<i64>(span()) - 1;
}

std::size_t LaurentPoly::term_count() const {
  if (big_mode_)
    return static_cast<std::size_t>(
        std::count_if(big_.begin(), big_.end(), [](const Integer& c) { return c != 0; }));
  return static_cast<std::size_t>(
      std::count_if(small_.begin(), small_.end(), [](i64 c) { return c != 0; }));
}

Integer LaurentPoly::coefficient(i64 exponent) const {
  if (is_zero() || exponent < offset_ || exponent > max_degree()) return 0;
  const auto idx = static_cast<std::size_t>(exponent - offset_);
  return big_mode_ ? big_[idx] : from_small(small_[idx]);
}

Integer LaurentPoly::leading_coefficient() const {
  if (is_zero()) return 0;
  return big_mode_ ? big_.back() : from_small(small_.back());
}

Integer LaurentPoly::max_abs_coefficient() const {
  if (!big_mode_) return small_.empty() ? Integer(0) : from_small(K().max_abs(small_.data(), small_.size()));
  Integer best = 0;
  for (const Integer& c : big_)
    if (mpz_cmpabs(c.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(c);
  return best;
}

std::vector<Integer> LaurentPoly::dense_integers() const {
  if (big_mode_) return big_;
  std::vector<Integer> out;
  out.reserve(small_.size());
  for (i64 v : small_) out.push_back(from_small(v));
  return out;
}

std::vector<std::pair<i64, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<i64, Integer>> out;
  for (std::size_t i = 0; i < span(); ++i) {
    const i64 e = offset_ + static_cast<i64>(i);
    if (big_mode_) {
      if (big_[i] != 0) out.emplace_back(e, big_[i]);
    } else if (small_[i] != 0) {
      out.emplace_back(e, from_small(small_[i]));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(i64 k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.offset_ += k;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0 || is_zero()) return {};
  if (!big_mode_ && fits_small(c)) {
    const i64 cs = mpz_get_si(c.get_mpz_t());
    const u128 bound = static_cast<u128>(abs_small(cs)) *
                       static_cast<u128>(K().max_abs(small_.data(), small_.size()));
    if (bound < static_cast<u128>(kSmallLimit)) {
      std::vector<i64> out(small_.size(), 0);
      K().axpy(out.data(), small_.data(), cs, small_.size());
      return from_dense(offset_, std::move(out));
    }
  }
  std::vector<Integer> out = dense_integers();
  for (Integer& v : out) v *= c;
  return from_dense(offset_, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  if (p.big_mode_) {
    for (Integer& v : p.big_) v = -v;
  } else {
    for (i64& v : p.small_) v = -v;
  }
  return p;
}

namespace {

// this += sign * other, both in one dense window.
void combine(const LaurentPoly& other, int sign,
             std::int64_t& offset, std::vector<i64>& small, std::vector<Integer>& big,
             bool& big_mode) {
  const i64 o_lo = other.offset();
  const i64 o_hi = other.max_degree();
  const i64 lo = std::min(offset, o_lo);
  const i64 hi = std::max(offset + static_cast<i64>(big_mode ? big.size() : small.size()) - 1, o_hi);
  const auto len = static_cast<std::size_t>(hi - lo + 1);

  if (!big_mode && other.is_small()) {
    if (lo != offset || len != small.size()) {
      std::vector<i64> grown(len, 0);
      std::copy(small.begin(), small.end(), grown.begin() + (offset - lo));
      small = std::move(grown);
      offset = lo;
    }
    auto src = other.small_coefficients();
    i64* dst = small.data() + (o_lo - offset);
    if (sign > 0) K().add(dst, src.data(), src.size());
    else K().sub(dst, src.data(), src.size());
    return;
  }

  if (!big_mode) {
    big.clear();
    big.reserve(small.size());
    for (i64 v : small) big.push_back(from_small(v));
    small.clear();
    big_mode = true;
  }
  if (lo != offset || len != big.size()) {
    std::vector<Integer> grown(len);
    for (std::size_t i = 0; i < big.size(); ++i) grown[i + static_cast<std::size_t>(offset - lo)] = std::move(big[i]);
    big = std::move(grown);
    offset = lo;
  }
  const auto base = static_cast<std::size_t>(o_lo - offset);
  if (other.is_small()) {
    auto src = other.small_coefficients();
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0) continue;
      if (sign > 0) big[base + i] += static_cast<long>(src[i]);
      else big[base + i] -= static_cast<long>(src[i]);
    }
  } else {
    auto src = other.big_coefficients();
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (sign > 0) big[base + i] += src[i];
      else big[base + i] -= src[i];
    }
  }
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  combine(other, +1, offset_, small_, big_, big_mode_);
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = -other;
  combine(other, -1, offset_, small_, big_, big_mode_);
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = multiply(*this, other);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.span() != b.span()) return false;
  if (a.is_zero()) return true;
  if (a.offset_ != b.offset_) return false;
  // Canonical form puts every value in the smallest tier that holds it.
  if (a.big_mode_ != b.big_mode_) return false;
  return a.big_mode_ ? a.big_ == b.big_ : a.small_ == b.small_;
}

// ---------------------------------------------------------------------------
// PolyAccumulator

void PolyAccumulator::promote() {
  if (big_mode_) return;
  big_.clear();
  big_.reserve(small_.size());
  for (i64 v : small_) big_.push_back(from_small(v));
  small_.clear();
  small_.shrink_to_fit();
  big_mode_ = true;
}

void PolyAccumulator::ensure_window(i64 lo, i64 hi) {
  const std::size_t size = big_mode_ ? big_.size() : small_.size();
  if (!has_window_) {
    offset_ = lo;
    if (big_mode_) big_.assign(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    else small_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    has_window_ = true;
    return;
  }
  const i64 cur_hi = offset_ + static_cast<i64>(size) - 1;
  if (lo >= offset_ && hi <= cur_hi) return;
  const i64 slack = static_cast<i64>(size / 2);
  const i64 new_lo = lo < offset_ ? std::min(lo, offset_ - slack) : offset_;
  const i64 new_hi = hi > cur_hi ? std::max(hi, cur_hi + slack) : cur_hi;
  const auto len = static_cast<std::size_t>(new_hi - new_lo + 1);
  const auto shift = static_cast<std::size_t>(offset_ - new_lo);
  if (big_mode_) {
    std::vector<Integer> grown(len);
    for (std::size_t i = 0; i < big_.size(); ++i) grown[i + shift] = std::move(big_[i]);
    big_ = std::move(grown);
  } else {
    std::vector<i64> grown(len, 0);
    std::copy(small_.begin(), small_.end(), grown.begin() + static_cast<std::ptrdiff_t>(shift));
    small_ = std::move(grown);
  }
  offset_ = new_lo;
}

void PolyAccumulator::add(const LaurentPoly& p, i64 c, i64 shift) {
  if (p.is_zero() || c == 0) return;
  if (c >= LaurentPoly::kSmallLimit || c <= -LaurentPoly::kSmallLimit) return add(p, from_small(c), shift);
  const i64 lo = p.offset() + shift;
  const i64 hi = p.max_degree() + shift;
  ensure_window(lo, hi);
  const auto base = static_cast<std::size_t>(lo - offset_);

  if (!big_mode_ && p.is_small()) {
    auto src = p.small_coefficients();
    const u128 step = static_cast<u128>(abs_small(c)) *
                      static_cast<u128>(K().max_abs(src.data(), src.size()));
    const u128 limit = static_cast<u128>(LaurentPoly::kSmallLimit);
    if (bound_ + step >= limit) bound_ = static_cast<u128>(K().max_abs(small_.data(), small_.size()));
    if (bound_ + step < limit) {
      K().axpy(small_.data() + base, src.data(), c, src.size());
      bound_ += step;
      return;
    }
    promote();
  }
  if (!big_mode_) promote();
  if (p.is_small()) {
    auto src = p.small_coefficients();
    Integer tmp;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0) continue;
      tmp = static_cast<long>(src[i]);
      tmp *= static_cast<long>(c);
      big_[base + i] += tmp;
    }
  } else {
    auto src = p.big_coefficients();
    const Integer cz = from_small(c);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0) continue;
      mpz_addmul(big_[base + i].get_mpz_t(), src[i].get_mpz_t(), cz.get_mpz_t());
    }
  }
}

void PolyAccumulator::add(const LaurentPoly& p, const Integer& c, i64 shift) {
  if (fits_small(c)) return add(p, static_cast<i64>(mpz_get_si(c.get_mpz_t())), shift);
  if (p.is_zero()) return;
  const i64 lo = p.offset() + shift;
  ensure_window(lo, p.max_degree() + shift);
  promote();
  const auto base = static_cast<std::size_t>(lo - offset_);
  const std::vector<Integer> src = p.dense_integers();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] == 0) continue;
    mpz_addmul(big_[base + i].get_mpz_t(), src[i].get_mpz_t(), c.get_mpz_t());
  }
}

LaurentPoly PolyAccumulator::take() {
  LaurentPoly out = big_mode_ ? LaurentPoly::from_dense(offset_, std::move(big_))
                              : LaurentPoly::from_dense(offset_, std::move(small_));
  *this = PolyAccumulator{};
  return out;
}

// ---------------------------------------------------------------------------
// Free operations

LaurentPoly quantum_integer(i64 n) {
  if (n == 0) return {};
  if (n < 0) return -quantum_integer(-n);
  std::vector<i64> dense(static_cast<std::size_t>(4 * (n - 1) + 1), 0);
  for (std::size_t i = 0; i < dense.size(); i += 4) dense[i] = 1;
  return LaurentPoly::from_dense(-2 * (n - 1), std::move(dense));
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly multiply(const LaurentPoly& a_in, const LaurentPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return {};
  // Outer loop runs over the operand with fewer nonzero terms.
  const bool swap = a_in.term_count() > b_in.term_count();
  const LaurentPoly& a = swap ? b_in : a_in;
  const LaurentPoly& b = swap ? a_in : b_in;
  const i64 offset = a.offset() + b.offset();
  const std::size_t len = a.span() + b.span() - 1;
  const std::size_t b_terms = b.term_count();
  const bool b_sparse = b_terms * 8 < b.span();

  if (a.is_small() && b.is_small()) {
    auto as = a.small_coefficients();
    auto bs = b.small_coefficients();
    u128 l1 = 0;
    for (i64 v : as) l1 += static_cast<u128>(abs_small(v));
    const u128 bound = l1 * static_cast<u128>(K().max_abs(bs.data(), bs.size()));
    if (bound < static_cast<u128>(LaurentPoly::kSmallLimit)) {
      std::vector<i64> out(len, 0);
      std::vector<std::pair<std::size_t, i64>> b_nz;
      if (b_sparse) {
        for (std::size_t j = 0; j < bs.size(); ++j)
          if (bs[j] != 0) b_nz.emplace_back(j, bs[j]);
      }
      for (std::size_t i = 0; i < as.size(); ++i) {
        const i64 ai = as[i];
        if (ai == 0) continue;
        if (b_sparse) {
          for (const auto& [j, bj] : b_nz) out[i + j] += ai * bj;
        } else {
          K().axpy(out.data() + i, bs.data(), ai, bs.size());
        }
      }
      return LaurentPoly::from_dense(offset, std::move(out));
    }
  }

  const std::vector<Integer> ad = a.dense_integers();
  const std::vector<Integer> bd = b.dense_integers();
  std::vector<std::size_t> b_nz;
  for (std::size_t j = 0; j < bd.size(); ++j)
    if (bd[j] != 0) b_nz.push_back(j);
  std::vector<Integer> out(len);
  for (std::size_t i = 0; i < ad.size(); ++i) {
    if (ad[i] == 0) continue;
    for (std::size_t j : b_nz) mpz_addmul(out[i + j].get_mpz_t(), ad[i].get_mpz_t(), bd[j].get_mpz_t());
  }
  return LaurentPoly::from_dense(offset, std::move(out));
}

namespace {

[[noreturn]] void not_divisible() {
  throw Error(ErrorKind::NotDivisible, "nonzero remainder in exact division");
}

// Returns false if an intermediate value leaves the int64 tier.
bool divide_small(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& out) {
  std::vector<i64> r(a.small_coefficients().begin(), a.small_coefficients().end());
  auto bs = b.small_coefficients();
  std::vector<std::pair<std::size_t, i64>> b_nz;
  for (std::size_t j = 0; j < bs.size(); ++j)
    if (bs[j] != 0) b_nz.emplace_back(j, bs[j]);
  const std::size_t hb = bs.size() - 1;
  const i64 lead = bs[hb];
  const std::size_t qlen = r.size() - bs.size() + 1;
  std::vector<i64> q(qlen, 0);
  for (std::size_t k = qlen; k-- > 0;) {
    const i64 v = r[k + hb];
    if (v == 0) continue;
    if (v % lead != 0) not_divisible();
    const i64 qk = v / lead;
    q[k] = qk;
    for (const auto& [j, bj] : b_nz) {
      i64 prod = 0;
      i64 next = 0;
      if (__builtin_mul_overflow(qk, bj, &prod)) return false;
      if (__builtin_sub_overflow(r[k + j], prod, &next)) return false;
      if (!in_small_range(next)) return false;
      r[k + j] = next;
    }
  }
  for (std::size_t i = 0; i < hb; ++i)
    if (r[i] != 0) not_divisible();
  out = LaurentPoly::from_dense(a.offset() - b.offset(), std::move(q));
  return true;
}

LaurentPoly divide_big(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<Integer> r = a.dense_integers();
  const std::vector<Integer> bd = b.dense_integers();
  std::vector<std::size_t> b_nz;
  for (std::size_t j = 0; j < bd.size(); ++j)
    if (bd[j] != 0) b_nz.push_back(j);
  const std::size_t hb = bd.size() - 1;
  const Integer& lead = bd[hb];
  const std::size_t qlen = r.size() - bd.size() + 1;
  std::vector<Integer> q(qlen);
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& v = r[k + hb];
    if (v == 0) continue;
    if (mpz_divisible_p(v.get_mpz_t(), lead.get_mpz_t()) == 0) not_divisible();
    mpz_divexact(q[k].get_mpz_t(), v.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j : b_nz) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), bd[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < hb; ++i)
    if (r[i] != 0) not_divisible();
  return LaurentPoly::from_dense(a.offset() - b.offset(), std::move(q));
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.span() < b.span()) not_divisible();
  if (a.is_small() && b.is_small()) {
    LaurentPoly out;
    if (divide_small(a, b, out)) return out;
  }
  return divide_big(a, b);
}

LaurentPoly divide_by_quantum_integer(const LaurentPoly& a, i64 n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "division by [0]");
  if (n < 0) return -divide_by_quantum_integer(a, -n);
  if (n == 1 || a.is_zero()) return a;
  // [n] * (A^2 - A^-2) = A^{2n} - A^{-2n}
  const LaurentPoly lift = LaurentPoly::from_dense(-2, std::vector<i64>{-1, 0, 0, 0, 1});
  std::vector<i64> binom(static_cast<std::size_t>(4 * n + 1), 0);
  binom.front() = -1;
  binom.back() = 1;
  return exact_divide(multiply(lift, a), LaurentPoly::from_dense(-2 * n, std::move(binom)));
}

LaurentPoly derivative(const LaurentPoly& a) {
  if (a.is_zero()) return {};
  if (a.is_small()) {
    std::vector<i64> out(a.small_.size(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < out.size() && ok; ++i) {
      const i64 e = a.offset_ + static_cast<i64>(i);
      ok = !__builtin_mul_overflow(a.small_[i], e, &out[i]) && in_small_range(out[i]);
    }
    if (ok) return LaurentPoly::from_dense(a.offset_ - 1, std::move(out));
  }
  std::vector<Integer> out = a.dense_integers();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= static_cast<long>(a.offset_ + static_cast<i64>(i));
  return LaurentPoly::from_dense(a.offset_ - 1, std::move(out));
}

LaurentPoly mirror(const LaurentPoly& a) {
  if (a.is_zero()) return {};
  LaurentPoly p = a;
  p.offset_ = -a.max_degree();
  if (p.big_mode_) std::reverse(p.big_.begin(), p.big_.end());
  else std::reverse(p.small_.begin(), p.small_.end());
  return p;
}

RootValue eval_at_root_scaled(const LaurentPoly& a, const RootOfUnityPoint& pt) {
  if (a.is_zero()) return {};
  const i64 period = pt.period();
  const i64 half = period / 2;
  const auto hp = static_cast<std::size_t>(half);
  const i64 r0 = floor_mod(a.offset(), period);
  const std::size_t n = a.span();

  // Exact residue sums S_r over exponents = r (mod 4N), then
  // T_r = S_r - S_{r+2N} because A0^{2N} = -1.
  std::vector<double> folded(hp, 0.0);
  bool done = false;
  if (a.is_small()) {
    auto src = a.small_coefficients();
    const u128 blocks = static_cast<u128>(n / static_cast<std::size_t>(period) + 2);
    const u128 bound = blocks * static_cast<u128>(K().max_abs(src.data(), n));
    if (bound < static_cast<u128>(LaurentPoly::kSmallLimit)) {
      std::vector<i64> sums(static_cast<std::size_t>(period), 0);
      const auto p = static_cast<std::size_t>(period);
      const auto start = static_cast<std::size_t>(r0);
      std::size_t i = std::min(n, p - start);
      K().add(sums.data() + start, src.data(), i);
      for (; i + p <= n; i += p) K().add(sums.data(), src.data() + i, p);
      if (i < n) K().add(sums.data(), src.data() + i, n - i);
      for (std::size_t r = 0; r < hp; ++r) folded[r] = static_cast<double>(sums[r] - sums[r + hp]);
      done = true;
    }
  }
  if (!done) {
    std::vector<Integer> sums(static_cast<std::size_t>(period));
    const std::vector<Integer> coeffs = a.dense_integers();
    std::size_t r = static_cast<std::size_t>(r0);
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs[i] != 0) sums[r] += coeffs[i];
      if (++r == static_cast<std::size_t>(period)) r = 0;
    }
    for (std::size_t k = 0; k < hp; ++k) {
      const Integer t = sums[k] - sums[k + hp];
      folded[k] = t.get_d();
    }
  }

  std::vector<double> cos_table(hp);
  std::vector<double> sin_table(hp);
  const double step = std::numbers::pi / static_cast<double>(half);
  for (std::size_t r = 0; r < hp; ++r) {
    cos_table[r] = std::cos(step * static_cast<double>(r));
    sin_table[r] = std::sin(step * static_cast<double>(r));
  }
  double re = 0.0;
  double im = 0.0;
  K().dot2(folded.data(), cos_table.data(), sin_table.data(), hp, &re, &im);
  double scale = 0.0;
  for (double t : folded) scale += std::abs(t);
  return {{re, im}, scale};
}

std::complex<double> eval_at_root(const LaurentPoly& a, const RootOfUnityPoint& pt) {
  return eval_at_root_scaled(a, pt).value;
}

// ---------------------------------------------------------------------------
// Text and JSON

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Integer mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "A";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  const auto ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it)
    terms.push_back(nlohmann::json::array({it->first, it->second.get_str()}));
  return {{"variable", "A"}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& what) { return Error(ErrorKind::InvalidArgument, "polynomial JSON: " + what); };
  if (!j.is_object() || !j.contains("terms")) throw bad("missing terms");
  if (j.contains("variable") && j.at("variable") != "A") throw bad("variable must be A");
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw bad("terms must be an array");
  std::vector<std::pair<i64, Integer>> out;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) throw bad("term must be [exponent, coefficient]");
    Integer c;
    if (t[1].is_string()) {
      if (c.set_str(t[1].get<std::string>(), 10) != 0) throw bad("coefficient is not a decimal integer");
    } else if (t[1].is_number_integer()) {
      c = static_cast<long>(t[1].get<i64>());
    } else {
      throw bad("coefficient must be a decimal string");
    }
    out.emplace_back(t[0].get<i64>(), c);
  }
  return LaurentPoly::from_terms(out);
}

}  // namespace cjp
