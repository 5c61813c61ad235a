#include "norden/norden_geometry.hpp"

#include <algorithm>

namespace norden {

std::string_view to_string(NordenClass c) {
  switch (c) {
    case NordenClass::KahlerW0: return "KAHLER_W0";
    case NordenClass::QuasiKahlerW3: return "QUASI_KAHLER_W3";
    case NordenClass::Other: return "OTHER";
  }
  return "OTHER";
}

DenseTensor compute_nabla_J(const LieFrameManifold& m, const ConnectionCoeffs& conn) {
  const std::size_t d = m.dim();
  const DenseTensor& gamma = conn.gamma;
  const DenseTensor& J = m.complex_structure();
  if (gamma.dim() != d || gamma.rank() != 3)
    throw ArgumentError("compute_nabla_J: connection shape mismatch");
  // (nabla_i J) e_j = nabla_i (J e_j) - J nabla_i e_j
  return DenseTensor::generate(d, 3, [&](std::span<const Index> x) {
    const std::size_t k = x[0], i = x[1], j = x[2];
    double s = 0.0;
    for (std::size_t mm = 0; mm < d; ++mm) s += gamma(k, i, mm) * J(mm, j) - J(k, mm) * gamma(mm, i, j);
    return s;
  });
}

DenseTensor compute_F(const LieFrameManifold& m, const DenseTensor& nabla_J) {
  return lower_leading(nabla_J, m.metric());
}

FSymmetryResiduals f_symmetry_residuals(const LieFrameManifold& m, const DenseTensor& F) {
  const DenseTensor& J = m.complex_structure();
  return {residual(F, rearrange(F, {0, 2, 1})), residual(F, substitute(substitute(F, 1, J), 2, J))};
}

ClassLabel classify(const LieFrameManifold& m, const DenseTensor& F, double tolerance) {
  const DenseTensor& J = m.complex_structure();
  ClassLabel out;
  out.f_norm = F.max_abs();
  out.w3_residual = residual_to_zero(cyclic_sum3(F, {0, 1, 2}));
  const DenseTensor FJx = substitute(F, 0, J);  // F(Jx, y, z)
  out.jx_cyclic_residual = residual_to_zero(cyclic_sum3(FJx, {0, 1, 2}));
  // Lowered with g: F(x,Jy,w) + F(y,Jx,w) + F(Jx,y,w) + F(Jy,x,w).
  const DenseTensor FJy = substitute(F, 1, J);  // F(x, Jy, z)
  const DenseTensor lowered = FJy + rearrange(FJy, {1, 0, 2}) + FJx + rearrange(FJx, {1, 0, 2});
  out.vector_residual = residual_to_zero(lowered);

  if (out.f_norm <= tolerance)
    out.label = NordenClass::KahlerW0;
  else if (out.w3_residual <= tolerance)
    out.label = NordenClass::QuasiKahlerW3;
  else
    out.label = NordenClass::Other;
  return out;
}

FTraces f_traces(const LieFrameManifold& m, const DenseTensor& F) {
  const DenseTensor g_inv = inverse(m.metric());
  return {contract(F, 0, 1, g_inv), contract(substitute(F, 1, m.complex_structure()), 0, 1, g_inv)};
}

DenseTensor metric_pairing(const DenseTensor& A, const DenseTensor& B, const DenseTensor& h) {
  if (A.rank() != 3 || B.rank() != 3) throw ArgumentError("metric_pairing: expected rank-3 inputs");
  // outer(A, B)(m, a, b, n, c, d); contracting slots 0 and 3 leaves (a, b, c, d).
  return contract(outer(A, B), 0, 3, h);
}

DenseTensor apply_to_output(const DenseTensor& t, const DenseTensor& map) {
  return substitute(t, 0, transpose(map));
}

namespace {

// h_outer^{ij} h_outer^{ks} inner((nabla_i J)e_k, (nabla_j J)e_s)
double norm_with(const DenseTensor& nabla_J, const DenseTensor& outer_inv, const DenseTensor& inner) {
  const DenseTensor pair = metric_pairing(nabla_J, nabla_J, inner);  // (i, k, j, s)
  return contract(contract(pair, 0, 2, outer_inv), 0, 1, outer_inv).value();
}

}  // namespace

SquareNorms square_norms(const LieFrameManifold& m, const DenseTensor& nabla_J,
                         AssocNormVariant variant) {
  const MetricPair mp = MetricPair::from(m.metric(), m.complex_structure());
  SquareNorms out;
  out.sq_norm = norm_with(nabla_J, mp.g_inv, mp.g);
  switch (variant) {
    case AssocNormVariant::InnerTilde:
      out.assoc_sq_norm = norm_with(nabla_J, mp.g_inv, mp.g_tilde);
      break;
    case AssocNormVariant::OuterTildeInverse:
      out.assoc_sq_norm = norm_with(nabla_J, inverse(mp.g_tilde), mp.g);
      break;
  }
  return out;
}

double sq_norm_cross_form(const LieFrameManifold& m, const DenseTensor& nabla_J) {
  const DenseTensor g_inv = inverse(m.metric());
  const DenseTensor pair = metric_pairing(nabla_J, nabla_J, m.metric());  // (i, k, s, j)
  return -2.0 * contract(contract(pair, 0, 3, g_inv), 0, 1, g_inv).value();
}

double tilde_sq_norm(const LieFrameManifold& m, const DenseTensor& nabla_J) {
  const MetricPair mp = MetricPair::from(m.metric(), m.complex_structure());
  return norm_with(nabla_J, inverse(mp.g_tilde), mp.g_tilde);
}

TorsionPotential compute_Q(const LieFrameManifold& m, const ConnectionCoeffs& conn,
                           const DenseTensor& nabla_J, const ClassLabel& label) {
  if (label.label == NordenClass::Other)
    throw GeometryError("torsion potential requested for a manifold outside W0/W3");
  if (conn.gamma.dim() != m.dim()) throw ArgumentError("compute_Q: connection shape mismatch");
  const DenseTensor& J = m.complex_structure();
  const DenseTensor at_Jy = substitute(nabla_J, 2, J);  // (nabla_x J) J y
  const DenseTensor at_Jx = substitute(nabla_J, 1, J);  // (nabla_{Jx} J) y
  const DenseTensor swapped = rearrange(at_Jy, {0, 2, 1});  // (nabla_y J) J x
  const DenseTensor vec = 0.25 * (at_Jy - at_Jx - 2.0 * swapped);
  return {vec, lower_leading(vec, m.metric())};
}

DenseTensor q_from_cyclic_F(const LieFrameManifold& m, const DenseTensor& F) {
  return -0.25 * cyclic_sum3(substitute(F, 2, m.complex_structure()), {0, 1, 2});
}

double antisymmetry_residual3(const DenseTensor& t) {
  if (t.rank() != 3) throw ArgumentError("antisymmetry_residual3: expected rank 3");
  return std::max({residual(t, -rearrange(t, {1, 0, 2})), residual(t, -rearrange(t, {0, 2, 1})),
                   residual(t, -rearrange(t, {2, 1, 0}))});
}

ConnectionCoeffs connection_prime(const ConnectionCoeffs& conn, const DenseTensor& Q_vec) {
  return ConnectionCoeffs{conn.gamma + Q_vec};
}

}  // namespace norden
