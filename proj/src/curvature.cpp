#include "norden/curvature.hpp"

#include <algorithm>

namespace norden {

CurvatureProperties curvature_properties(const DenseTensor& L, const DenseTensor& J) {
  if (L.rank() != 4) throw ArgumentError("curvature tensors have rank 4");
  CurvatureProperties p;
  p.antisymmetry = std::max(residual(L, -rearrange(L, {1, 0, 2, 3})),
                            residual(L, -rearrange(L, {0, 1, 3, 2})));
  p.bianchi = residual_to_zero(cyclic_sum3(L, {0, 1, 2}));
  p.kahler = residual(substitute(substitute(L, 2, J), 3, J), -L);
  return p;
}

CurvatureTensor make_curvature(const DenseTensor& t, const DenseTensor& J, double tolerance) {
  CurvatureTensor out{t, curvature_properties(t, J)};
  out.is_curvature_like =
      out.residuals.antisymmetry <= tolerance && out.residuals.bianchi <= tolerance;
  out.is_kahler = out.is_curvature_like && out.residuals.kahler <= tolerance;
  return out;
}

CurvatureTensor riemann(const LieFrameManifold& m, const ConnectionCoeffs& conn, double tolerance) {
  const std::size_t d = m.dim();
  const DenseTensor& gamma = conn.gamma;
  const DenseTensor& c = m.structure_constants();
  if (gamma.dim() != d || gamma.rank() != 3) throw ArgumentError("riemann: connection shape mismatch");
  // vec(i, j, k, l): l-component of R(e_i, e_j) e_k
  const DenseTensor vec = DenseTensor::generate(d, 4, [&](std::span<const Index> x) {
    const std::size_t i = x[0], j = x[1], k = x[2], l = x[3];
    double s = 0.0;
    for (std::size_t mm = 0; mm < d; ++mm)
      s += gamma(l, i, mm) * gamma(mm, j, k) - gamma(l, j, mm) * gamma(mm, i, k) -
           c(mm, i, j) * gamma(l, mm, k);
    return s;
  });
  return make_curvature(substitute(vec, 3, m.metric()), m.complex_structure(), tolerance);
}

RicciScalars ricci_and_scalars(const LieFrameManifold& m, const DenseTensor& L) {
  if (L.rank() != 4 || L.dim() != m.dim()) throw ArgumentError("ricci_and_scalars: expected rank 4");
  const DenseTensor g_inv = inverse(m.metric());
  const DenseTensor& J = m.complex_structure();
  RicciScalars out;
  out.rho = contract(L, 0, 3, g_inv);
  out.rho_star = contract(substitute(L, 3, J), 0, 3, g_inv);
  out.tau = contract(out.rho, 0, 1, g_inv).value();
  out.tau_star = contract(substitute(out.rho, 1, J), 0, 1, g_inv).value();
  out.tau_star_from_rho_star = contract(out.rho_star, 0, 1, g_inv).value();
  return out;
}

CurvatureTensor tensor_P(const LieFrameManifold& m, const DenseTensor& Q_vec, double tolerance) {
  // pair(a, b, c, d) = g(Q(a,b), Q(c,d))
  const DenseTensor pair = metric_pairing(Q_vec, Q_vec, m.metric());
  // g(Q(z,y),Q(x,w)) -> pair(z, y, x, w); g(Q(x,z),Q(y,w)) -> pair(x, z, y, w)
  const DenseTensor P =
      2.0 * pair + rearrange(pair, {2, 1, 0, 3}) + rearrange(pair, {0, 2, 1, 3});
  return make_curvature(P, m.complex_structure(), tolerance);
}

DenseTensor h_vector(const LieFrameManifold& m, const DenseTensor& nabla_J) {
  const DenseTensor& J = m.complex_structure();
  return substitute(nabla_J, 2, J) + substitute(nabla_J, 1, J);
}

CurvatureTensor tensor_H(const LieFrameManifold& m, const DenseTensor& nabla_J, double tolerance) {
  const DenseTensor V = h_vector(m, nabla_J);
  return make_curvature(metric_pairing(V, V, m.metric()), m.complex_structure(), tolerance);
}

PiForms pi_forms(const LieFrameManifold& m) {
  const DenseTensor& g = m.metric();
  const DenseTensor gJ = matmul(g, m.complex_structure());  // gJ(a, b) = g(e_a, J e_b)
  // product(a, b)(x, y, z, w) for the pattern a(y,z) b(x,w) - a(x,z) b(y,w)
  const auto antisym = [](const DenseTensor& a, const DenseTensor& b) {
    const DenseTensor ab = outer(a, b);  // ab(p, q, r, s) = a(p,q) b(r,s)
    // a(y,z) b(x,w): out(x,y,z,w) = ab(y, z, x, w)
    // a(x,z) b(y,w): out(x,y,z,w) = ab(x, z, y, w)
    return rearrange(ab, {1, 2, 0, 3}) - rearrange(ab, {0, 2, 1, 3});
  };
  PiForms out;
  out.pi1 = antisym(g, g);
  out.pi2 = antisym(gJ, gJ);
  out.pi3 = -antisym(g, gJ) - antisym(gJ, g);
  return out;
}

DenseTensor kahler_model(const PiForms& pi, double nu, double nu_star) {
  return linear_combination(nu, pi.pi1 - pi.pi2, nu_star, pi.pi3);
}

namespace {

void require_dim4_kahler(const LieFrameManifold& m, const CurvatureTensor& R_prime) {
  if (m.dim() != 4) throw ArgumentError("the Kaehler decomposition is only defined in dimension 4");
  if (!R_prime.is_kahler)
    throw GeometryError("R' is not a Kaehler tensor (antisymmetry " +
                        std::to_string(R_prime.residuals.antisymmetry) + ", Bianchi " +
                        std::to_string(R_prime.residuals.bianchi) + ", J-invariance " +
                        std::to_string(R_prime.residuals.kahler) + ")");
}

}  // namespace

double kahler_decomposition_dim4(const LieFrameManifold& m, const CurvatureTensor& R_prime,
                                 double tau_prime, double tau_prime_star) {
  require_dim4_kahler(m, R_prime);
  return residual(R_prime.t, kahler_model(pi_forms(m), tau_prime / 8.0, tau_prime_star / 8.0));
}

ReconstructionResiduals reconstruct_R_dim4(const LieFrameManifold& m, const DenseTensor& R,
                                           const CurvatureTensor& R_prime,
                                           const ScalarPanel& panel, const DenseTensor& P) {
  require_dim4_kahler(m, R_prime);
  const PiForms pi = pi_forms(m);
  const DenseTensor third_P = (1.0 / 3.0) * P;
  const double tau = panel.tau, tau_star = panel.tau_star;
  const double norm = panel.sq_norm_nablaJ, tau_H = panel.tau_H;
  ReconstructionResiduals out;
  out.isotropic_form = residual(R, kahler_model(pi, tau / 8.0, tau_star / 8.0) - third_P);
  out.h_form = residual(R, kahler_model(pi, (16.0 * tau + tau_H) / 128.0,
                                        (16.0 * tau_star - tau_H) / 128.0) - third_P);
  out.norm_form = residual(R, kahler_model(pi, (tau + 3.0 / 8.0 * norm) / 8.0,
                                           (tau_star - norm / 8.0) / 8.0) - third_P);
  return out;
}

}  // namespace norden
