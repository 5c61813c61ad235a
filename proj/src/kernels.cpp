#include "norden/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "norden/error.hpp"

namespace norden::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpby_scalar(double alpha, const double* x, double beta, const double* y,
                  double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double p = alpha * x[i];
    const double q = beta * y[i];
    out[i] = p + q;
  }
}

double max_abs_scalar(const double* a, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i]));
  return m;
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

constexpr KernelTable kScalar{Isa::Scalar, dot_scalar, axpby_scalar, max_abs_scalar,
                              max_abs_diff_scalar};

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() {
  if (const char* env = std::getenv("NORDEN_KERNELS"); env && std::strcmp(env, "scalar") == 0)
    return kScalar;
  if (const KernelTable* t = avx2_table()) return *t;
  if (const KernelTable* t = neon_table()) return *t;
  return kScalar;
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw ArgumentError("kernel operands differ in length");
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
  static const KernelTable* table = cpu_has_avx2() ? detail::avx2_table_if_compiled() : nullptr;
  return table;
}

const KernelTable* neon_table() { return detail::neon_table_if_compiled(); }

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  return active().dot(a.data(), b.data(), a.size());
}

void axpby(double alpha, std::span<const double> x, double beta, std::span<const double> y,
           std::span<double> out) {
  require_same_size(x.size(), y.size());
  require_same_size(x.size(), out.size());
  active().axpby(alpha, x.data(), beta, y.data(), out.data(), x.size());
}

double max_abs(std::span<const double> a) { return active().max_abs(a.data(), a.size()); }

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  return active().max_abs_diff(a.data(), b.data(), a.size());
}

}  // namespace norden::kernels
