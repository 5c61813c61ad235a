#pragma once

// Flat double-precision kernels used by the tensor layer. Every kernel has a
// scalar reference implementation; SIMD variants (AVX2+FMA on x86-64, NEON on
// AArch64) are selected at runtime when the CPU supports them.
//
// Contract shared by all variants:
//   dot           sum of a[i]*b[i]; summation order is unspecified.
//   axpby         out[i] = alpha*x[i] + beta*y[i], two products then one add,
//                 no fused multiply-add, so every variant is bit-identical.
//   max_abs       max |a[i]|, 0 for n == 0.
//   max_abs_diff  max |a[i] - b[i]|, 0 for n == 0.

#include <cstddef>
#include <span>
#include <string_view>

namespace norden::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  void (*axpby)(double alpha, const double* x, double beta, const double* y,
                double* out, std::size_t n);
  double (*max_abs)(const double* a, std::size_t n);
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_table();

/// nullptr unless compiled in and supported by the running CPU.
const KernelTable* avx2_table();
const KernelTable* neon_table();

/// The table used by the library. Chosen once: the widest supported variant,
/// unless the environment variable NORDEN_KERNELS is set to "scalar".
const KernelTable& active();

std::string_view isa_name(Isa isa);

double dot(std::span<const double> a, std::span<const double> b);
void axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out);
double max_abs(std::span<const double> a);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

namespace detail {
// Per-ISA entry points; defined in kernels_avx2.cpp / kernels_neon.cpp.
// They return nullptr when the variant was not compiled in.
const KernelTable* avx2_table_if_compiled();
const KernelTable* neon_table_if_compiled();
}  // namespace detail

}  // namespace norden::kernels
