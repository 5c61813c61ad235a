#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "norden/curvature.hpp"
#include "oracles.hpp"

using namespace norden;

TEST_CASE("Riemann tensor agrees with the second-derivative oracle") {
  std::vector<LieFrameManifold> ms{random_norden_manifold(4, 31), random_norden_manifold(6, 32)};
  for (const auto& h : fixtures::w3_dim4()) ms.push_back(h.manifold);
  for (const auto& m : ms) {
    const auto lc = levi_civita(m);
    const CurvatureTensor R = riemann(m, lc);
    CHECK(oracle::max_diff(R.t.components(), oracle::riemann(m, lc.gamma)) <= 1e-13);
    CHECK(R.is_curvature_like);
    CHECK(residual(R.t, rearrange(R.t, {2, 3, 0, 1})) <= 1e-13);
  }
}

TEST_CASE("flat example has zero curvature") {
  const LieFrameManifold m = flat_kahler(4);
  const CurvatureTensor R = riemann(m, levi_civita(m));
  CHECK(R.t.max_abs() == 0.0);
  CHECK(R.is_kahler);
}

TEST_CASE("pi1 has tau = 12 in dimension 4") {
  const LieFrameManifold m = flat_kahler(4);
  const PiForms pi = pi_forms(m);
  const RicciScalars s = ricci_and_scalars(m, pi.pi1);
  CHECK(s.tau == doctest::Approx(12.0).epsilon(1e-14));
  // rho = 3 g.
  CHECK(residual(s.rho, 3.0 * m.metric()) <= 1e-15);
  const CurvatureProperties p = curvature_properties(pi.pi1, m.complex_structure());
  CHECK(p.antisymmetry == 0.0);
  CHECK(p.bianchi <= 1e-15);
}

TEST_CASE("pi1 - pi2 and pi3 are Kaehler tensors") {
  const LieFrameManifold m = flat_kahler(4);
  const PiForms pi = pi_forms(m);
  for (const DenseTensor& t : {pi.pi1 - pi.pi2, pi.pi3}) {
    const CurvatureProperties p = curvature_properties(t, m.complex_structure());
    CHECK(p.antisymmetry <= 1e-15);
    CHECK(p.bianchi <= 1e-15);
    CHECK(p.kahler <= 1e-15);
  }
}

TEST_CASE("synthetic decomposition 3(pi1 - pi2) + 5 pi3") {
  const LieFrameManifold m = flat_kahler(4);
  const PiForms pi = pi_forms(m);
  const CurvatureTensor Rp = make_curvature(kahler_model(pi, 3.0, 5.0), m.complex_structure());
  REQUIRE(Rp.is_kahler);
  const RicciScalars s = ricci_and_scalars(m, Rp.t);
  CHECK(s.tau / 8.0 == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(s.tau_star / 8.0 == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(kahler_decomposition_dim4(m, Rp, s.tau, s.tau_star) <= 1e-12);
}

TEST_CASE("decomposition preconditions") {
  const LieFrameManifold m4 = flat_kahler(4);
  const LieFrameManifold m6 = flat_kahler(6);
  const CurvatureTensor flat6 = riemann(m6, levi_civita(m6));
  CHECK_THROWS_AS(kahler_decomposition_dim4(m6, flat6, 0.0, 0.0), ArgumentError);
  std::mt19937_64 rng(3);
  const CurvatureTensor junk = make_curvature(oracle::random_tensor(rng, 4, 4), m4.complex_structure());
  CHECK_FALSE(junk.is_curvature_like);
  CHECK_THROWS_AS(kahler_decomposition_dim4(m4, junk, 0.0, 0.0), GeometryError);
}

TEST_CASE("P is curvature-like and H is a Kaehler tensor on W3 examples") {
  std::vector<LieFrameManifold> ms;
  for (const auto& h : fixtures::w3_dim4()) ms.push_back(h.manifold);
  for (const auto& h : fixtures::w3_dim6()) ms.push_back(h.manifold);
  for (const auto& m : ms) {
    const auto lc = levi_civita(m);
    const DenseTensor nJ = compute_nabla_J(m, lc);
    const ClassLabel label = classify(m, compute_F(m, nJ));
    const TorsionPotential Q = compute_Q(m, lc, nJ, label);
    const CurvatureTensor P = tensor_P(m, Q.vec);
    const CurvatureTensor H = tensor_H(m, nJ);
    CHECK(P.is_curvature_like);
    CHECK(H.is_curvature_like);
    CHECK(H.is_kahler);
    // H(x,y,z,w) = g(V(x,y), V(z,w)) by direct loop.
    const DenseTensor V = h_vector(m, nJ);
    const std::size_t d = m.dim();
    double worst = 0.0;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z)
          for (std::size_t w = 0; w < d; ++w) {
            double want = 0.0;
            for (std::size_t a = 0; a < d; ++a)
              for (std::size_t b = 0; b < d; ++b) want += m.metric()(a, b) * V(a, x, y) * V(b, z, w);
            worst = std::max(worst, std::abs(H.t(x, y, z, w) - want));
          }
    CHECK(worst <= 1e-13);
  }
}

TEST_CASE("curvature of the natural connection is J-invariant and antisymmetric") {
  for (const auto& h : fixtures::w3_dim4()) {
    const LieFrameManifold& m = h.manifold;
    const auto lc = levi_civita(m);
    const DenseTensor nJ = compute_nabla_J(m, lc);
    const TorsionPotential Q = compute_Q(m, lc, nJ, classify(m, compute_F(m, nJ)));
    const CurvatureTensor Rp = riemann(m, connection_prime(lc, Q.vec));
    CHECK(Rp.residuals.antisymmetry <= 1e-13);
    CHECK(Rp.residuals.kahler <= 1e-13);
  }
}
