#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "norden/kernels.hpp"

namespace k = norden::kernels;

namespace {

std::vector<const k::KernelTable*> simd_tables() {
  std::vector<const k::KernelTable*> out;
  if (auto* t = k::avx2_table()) out.push_back(t);
  if (auto* t = k::neon_table()) out.push_back(t);
  return out;
}

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels against direct loops") {
  const double a[] = {1.0, -2.0, 3.5};
  const double b[] = {4.0, 0.5, -2.0};
  const auto& s = k::scalar_table();
  CHECK(s.dot(a, b, 3) == doctest::Approx(4.0 - 1.0 - 7.0));
  CHECK(s.max_abs(a, 3) == 3.5);
  CHECK(s.max_abs_diff(a, b, 3) == 5.5);
  CHECK(s.max_abs(a, 0) == 0.0);
  double out[3];
  s.axpby(2.0, a, -1.0, b, out, 3);
  CHECK(out[0] == -2.0);
  CHECK(out[1] == -4.5);
  CHECK(out[2] == 9.0);
}

TEST_CASE("SIMD variants agree with the scalar reference") {
  const auto tables = simd_tables();
  if (tables.empty()) MESSAGE("no SIMD variant available on this CPU; scalar only");
  std::mt19937_64 rng(7);
  const auto& ref = k::scalar_table();
  for (const auto* t : tables) {
    CAPTURE(k::isa_name(t->isa));
    for (std::size_t n = 0; n < 70; ++n) {
      const auto a = random_vec(rng, n);
      const auto b = random_vec(rng, n);
      double scale = 0.0;
      for (std::size_t i = 0; i < n; ++i) scale += std::abs(a[i] * b[i]);
      CHECK(std::abs(t->dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)) <=
            1e-14 * (1.0 + scale));
      CHECK(t->max_abs(a.data(), n) == ref.max_abs(a.data(), n));
      CHECK(t->max_abs_diff(a.data(), b.data(), n) == ref.max_abs_diff(a.data(), b.data(), n));
      std::vector<double> o1(n), o2(n);
      t->axpby(0.3, a.data(), -1.7, b.data(), o1.data(), n);
      ref.axpby(0.3, a.data(), -1.7, b.data(), o2.data(), n);
      CHECK(o1 == o2);
    }
  }
}

TEST_CASE("max_abs handles signed zeros and a single negative entry") {
  const double a[] = {-0.0, -7.25, 0.0};
  CHECK(k::max_abs(a) == 7.25);
  for (const auto* t : simd_tables()) CHECK(t->max_abs(a, 3) == 7.25);
}

TEST_CASE("span wrappers reject mismatched sizes") {
  std::vector<double> a(3), b(4), out(3);
  CHECK_THROWS(k::dot(a, b));
  CHECK_THROWS(k::max_abs_diff(a, b));
  CHECK_THROWS(k::axpby(1.0, a, 1.0, b, out));
}

TEST_CASE("active table is one of the available tables") {
  const auto& act = k::active();
  bool known = &act == &k::scalar_table();
  for (const auto* t : simd_tables()) known = known || &act == t;
  CHECK(known);
  MESSAGE("active kernels: " << k::isa_name(act.isa));
}
