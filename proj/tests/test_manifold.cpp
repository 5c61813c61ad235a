#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "norden/manifold.hpp"
#include "oracles.hpp"

using namespace norden;

namespace {

bool has_violation(const ValidationOutcome& o, const std::string& name, double* residual = nullptr) {
  for (const auto& v : o.violations)
    if (v.invariant == name) {
      if (residual) *residual = v.residual;
      return true;
    }
  return false;
}

LieFrameManifold with_brackets(std::size_t d, std::vector<double> c) {
  return LieFrameManifold(DenseTensor(d, 3, std::move(c)), canonical_norden_metric(d),
                          canonical_complex_structure(d));
}

}  // namespace

TEST_CASE("canonical pair") {
  const DenseTensor g = canonical_norden_metric(4);
  const DenseTensor J = canonical_complex_structure(4);
  CHECK(g(0, 0) == 1.0);
  CHECK(g(3, 3) == -1.0);
  // J e_0 = e_2, J e_2 = -e_0.
  CHECK(J(2, 0) == 1.0);
  CHECK(J(0, 2) == -1.0);
  CHECK(residual(matmul(J, J), -1.0 * DenseTensor::identity(4)) == 0.0);
}

TEST_CASE("flat example validates") { CHECK(validate_manifold(flat_kahler(4)).ok()); }

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(LieFrameManifold(DenseTensor::zeros(3, 3), DenseTensor::identity(3),
                                   DenseTensor::identity(3)),
                  ArgumentError);
  CHECK_THROWS_AS(LieFrameManifold(DenseTensor::zeros(4, 3), DenseTensor::identity(2),
                                   canonical_complex_structure(4)),
                  ArgumentError);
}

TEST_CASE("identity metric breaks Norden compatibility with residual 1") {
  const LieFrameManifold m(DenseTensor::zeros(4, 3), DenseTensor::identity(4),
                           canonical_complex_structure(4));
  double r = 0.0;
  const auto o = validate_manifold(m);
  REQUIRE(has_violation(o, kInvariantNordenCompatibility, &r));
  CHECK(r == doctest::Approx(1.0));
  CHECK(has_violation(o, kInvariantSignature));
}

TEST_CASE("bracket antisymmetry and Jacobi violations are reported") {
  std::vector<double> c(64, 0.0);
  c[(0 * 4 + 1) * 4 + 2] = 1.0;  // [e1,e2] = e0 without the antisymmetric partner
  CHECK(has_violation(validate_manifold(with_brackets(4, c)), kInvariantBracketAntisymmetry));

  // [e0,e1] = e1, [e0,e2] = e0 violates Jacobi.
  std::vector<double> j(64, 0.0);
  auto set = [&](std::size_t k, std::size_t a, std::size_t b, double v) {
    j[(k * 4 + a) * 4 + b] = v;
    j[(k * 4 + b) * 4 + a] = -v;
  };
  set(1, 0, 1, 1.0);
  set(0, 0, 2, 1.0);
  CHECK(jacobiator(DenseTensor(4, 3, j)).max_abs() > 0.5);
  CHECK(has_violation(validate_manifold(with_brackets(4, j)), kInvariantJacobi));
}

TEST_CASE("search outputs validate") {
  for (const auto& h : fixtures::w3_dim4()) CHECK(validate_manifold(h.manifold).ok());
  CHECK(validate_manifold(random_norden_manifold(4, 3)).ok());
}

TEST_CASE("Levi-Civita agrees with the torsion-free metric connection solved directly") {
  std::vector<LieFrameManifold> ms{random_norden_manifold(4, 11), random_norden_manifold(4, 12)};
  for (const auto& h : fixtures::w3_dim4()) ms.push_back(h.manifold);
  for (const auto& m : ms) {
    const auto lc = levi_civita(m);
    CHECK(oracle::max_diff(lc.gamma.components(), oracle::levi_civita(m)) <= 1e-12);
    CHECK(residual_to_zero(torsion(m, lc)) <= 1e-14);
    CHECK(residual_to_zero(metric_defect(m, lc)) <= 1e-14);
  }
}

TEST_CASE("covariant derivative matches the loop oracle for random connections") {
  std::mt19937_64 rng(21);
  const LieFrameManifold m = flat_kahler(4);
  for (std::size_t r = 0; r <= 3; ++r) {
    const ConnectionCoeffs conn{oracle::random_tensor(rng, 4, 3)};
    const DenseTensor t = r == 0 ? DenseTensor::scalar(4, 2.0) : oracle::random_tensor(rng, 4, r);
    const DenseTensor d = covariant_derivative(m, conn, t);
    CHECK(d.rank() == r + 1);
    CHECK(oracle::max_diff(d.components(), oracle::covariant(conn.gamma, t)) <= 1e-13);
  }
}

TEST_CASE("Levi-Civita derivative of the metric vanishes") {
  const LieFrameManifold m = random_norden_manifold(6, 5);
  CHECK(residual_to_zero(covariant_derivative(m, levi_civita(m), m.metric())) <= 1e-14);
}
