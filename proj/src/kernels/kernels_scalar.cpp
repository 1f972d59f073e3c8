#include "cjp/kernels.hpp"

namespace cjp::kernels {
namespace {

void add_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

void sub_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] -= src[i];
}

void axpy_scalar(std::int64_t* dst, const std::int64_t* src, std::int64_t c,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += c * src[i];
}

std::int64_t max_abs_scalar(const std::int64_t* src, std::size_t n) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t v = src[i] < 0 ? -src[i] : src[i];
    if (v > m) m = v;
  }
  return m;
}

void dot2_scalar(const double* x, const double* c, const double* s,
                 std::size_t n, double* out_c, double* out_s) {
  double acc_c = 0.0;
  double acc_s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc_c += x[i] * c[i];
    acc_s += x[i] * s[i];
  }
  *out_c = acc_c;
  *out_s = acc_s;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",      add_scalar,     sub_scalar,
                                 axpy_scalar,   max_abs_scalar, dot2_scalar};
  return table;
}

}  // namespace cjp::kernels
