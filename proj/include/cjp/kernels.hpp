#pragma once

// Inner loops over dense int64 coefficient arrays and the double-precision
// root-of-unity pass. Every kernel has a scalar reference implementation;
// an AVX2 variant is selected at runtime when the CPU supports it.
//
// Contracts shared by all integer kernels: callers guarantee that no result
// or intermediate leaves the int64 range. The kernels never check.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cjp::kernels {

struct KernelTable {
  std::string_view name;

  // dst[i] += src[i]
  void (*add)(std::int64_t* dst, const std::int64_t* src, std::size_t n);
  // dst[i] -= src[i]
  void (*sub)(std::int64_t* dst, const std::int64_t* src, std::size_t n);
  // dst[i] += c * src[i]
  void (*axpy)(std::int64_t* dst, const std::int64_t* src, std::int64_t c,
               std::size_t n);
  // max |src[i]|; inputs must satisfy |src[i]| < 2^63.
  std::int64_t (*max_abs)(const std::int64_t* src, std::size_t n);
  // (sum x[i]*c[i], sum x[i]*s[i])
  void (*dot2)(const double* x, const double* c, const double* s,
               std::size_t n, double* out_c, double* out_s);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();

// The table used by the library. Chosen once: AVX2 when available unless
// the environment variable CJP_KERNELS=scalar is set.
const KernelTable& active();

}  // namespace cjp::kernels
