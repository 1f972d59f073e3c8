// Compiled with -mavx2 -mfma. Nothing in this file may run before the
// dispatcher has confirmed CPU support.

#include <immintrin.h>

#include "cjp/kernels.hpp"

namespace cjp::kernels::detail {
namespace {

inline __m256i load(const std::int64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(std::int64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Low 64 bits of a 64x64 product from three 32x32->64 multiplies. Exact
// whenever the true product fits in int64 (two's complement wraparound).
inline __m256i mullo_epi64(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b),
                                         _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void add_avx2(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    store(dst + i, _mm256_add_epi64(load(dst + i), load(src + i)));
    store(dst + i + 4, _mm256_add_epi64(load(dst + i + 4), load(src + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    store(dst + i, _mm256_add_epi64(load(dst + i), load(src + i)));
  }
  for (; i < n; ++i) dst[i] += src[i];
}

void sub_avx2(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    store(dst + i, _mm256_sub_epi64(load(dst + i), load(src + i)));
    store(dst + i + 4, _mm256_sub_epi64(load(dst + i + 4), load(src + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    store(dst + i, _mm256_sub_epi64(load(dst + i), load(src + i)));
  }
  for (; i < n; ++i) dst[i] -= src[i];
}

void axpy_avx2(std::int64_t* dst, const std::int64_t* src, std::int64_t c,
               std::size_t n) {
  if (c == 1) return add_avx2(dst, src, n);
  if (c == -1) return sub_avx2(dst, src, n);
  if (c == 0) return;
  const __m256i vc = _mm256_set1_epi64x(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store(dst + i, _mm256_add_epi64(load(dst + i), mullo_epi64(load(src + i), vc)));
  }
  for (; i < n; ++i) dst[i] += c * src[i];
}

std::int64_t max_abs_avx2(const std::int64_t* src, std::size_t n) {
  __m256i best = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(src + i);
    const __m256i neg = _mm256_cmpgt_epi64(zero, v);
    // |v| = (v ^ neg) - neg
    const __m256i a = _mm256_sub_epi64(_mm256_xor_si256(v, neg), neg);
    best = _mm256_blendv_epi8(best, a, _mm256_cmpgt_epi64(a, best));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
  std::int64_t m = lanes[0];
  for (int k = 1; k < 4; ++k)
    if (lanes[k] > m) m = lanes[k];
  for (; i < n; ++i) {
    const std::int64_t v = src[i] < 0 ? -src[i] : src[i];
    if (v > m) m = v;
  }
  return m;
}

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void dot2_avx2(const double* x, const double* c, const double* s,
               std::size_t n, double* out_c, double* out_s) {
  __m256d acc_c = _mm256_setzero_pd();
  __m256d acc_s = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    acc_c = _mm256_fmadd_pd(vx, _mm256_loadu_pd(c + i), acc_c);
    acc_s = _mm256_fmadd_pd(vx, _mm256_loadu_pd(s + i), acc_s);
  }
  double rc = hsum(acc_c);
  double rs = hsum(acc_s);
  for (; i < n; ++i) {
    rc += x[i] * c[i];
    rs += x[i] * s[i];
  }
  *out_c = rc;
  *out_s = rs;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2",    add_avx2,     sub_avx2,
                                 axpy_avx2, max_abs_avx2, dot2_avx2};
  return table;
}

}  // namespace cjp::kernels::detail
