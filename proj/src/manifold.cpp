#include "norden/manifold.hpp"

#include <string>

namespace norden {

LieFrameManifold::LieFrameManifold(DenseTensor structure_constants, DenseTensor metric,
                                   DenseTensor complex_structure)
    : structure_constants_(std::move(structure_constants)),
      metric_(std::move(metric)),
      complex_structure_(std::move(complex_structure)) {
  const std::size_t d = metric_.dim();
  if (metric_.rank() != 2) throw ArgumentError("metric must be a square matrix");
  if (d % 2 != 0) throw ArgumentError("manifold dimension must be even, got " + std::to_string(d));
  if (complex_structure_.rank() != 2 || complex_structure_.dim() != d)
    throw ArgumentError("J must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  if (structure_constants_.rank() != 3 || structure_constants_.dim() != d)
    throw ArgumentError("structure constants must have shape " + std::to_string(d) + "^3");
}

DenseTensor canonical_norden_metric(std::size_t dim) {
  if (dim == 0 || dim % 2 != 0) throw ArgumentError("dimension must be even and positive");
  std::vector<double> diag(dim, 1.0);
  for (std::size_t i = dim / 2; i < dim; ++i) diag[i] = -1.0;
  return DenseTensor::diagonal(diag);
}

DenseTensor canonical_complex_structure(std::size_t dim) {
  if (dim == 0 || dim % 2 != 0) throw ArgumentError("dimension must be even and positive");
  const std::size_t n = dim / 2;
  std::vector<double> c(dim * dim, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    c[(n + i) * dim + i] = 1.0;   // J e_i = e_{n+i}
    c[i * dim + (n + i)] = -1.0;  // J e_{n+i} = -e_i
  }
  return DenseTensor(dim, 2, std::move(c));
}

LieFrameManifold flat_kahler(std::size_t dim) {
  return LieFrameManifold(DenseTensor::zeros(dim, 3), canonical_norden_metric(dim),
                          canonical_complex_structure(dim));
}

DenseTensor jacobiator(const DenseTensor& c) {
  const std::size_t d = c.dim();
  // nested(p, i, j, l) = sum_m C(m, i, j) C(p, m, l) = [[e_i, e_j], e_l]^p
  const DenseTensor nested = DenseTensor::generate(d, 4, [&](std::span<const Index> x) {
    double s = 0.0;
    for (std::size_t m = 0; m < d; ++m) s += c(m, x[1], x[2]) * c(x[0], m, x[3]);
    return s;
  });
  return cyclic_sum3(nested, {1, 2, 3});
}

ValidationOutcome validate_manifold(const LieFrameManifold& m, const ValidationTolerances& tol) {
  ValidationOutcome out;
  const auto report = [&](const char* name, double r, double limit) {
    if (!(r <= limit)) out.violations.push_back({name, r});
  };
  const std::size_t d = m.dim();
  const DenseTensor& c = m.structure_constants();
  const DenseTensor& g = m.metric();
  const DenseTensor& J = m.complex_structure();

  report(kInvariantBracketAntisymmetry, residual(c, -rearrange(c, {0, 2, 1})), tol.algebraic);
  report(kInvariantJacobi, residual_to_zero(jacobiator(c)), tol.jacobi);
  report(kInvariantComplexStructure, residual(matmul(J, J), -DenseTensor::identity(d)),
         tol.algebraic);
  report(kInvariantNordenCompatibility, residual(matmul(matmul(transpose(J), g), J), -g),
         tol.algebraic);
  report(kInvariantMetricSymmetry, residual(g, transpose(g)), tol.algebraic);

  try {
    const DenseTensor g_inv = inverse(g);
    report(kInvariantMetricInverse, residual(matmul(g, g_inv), DenseTensor::identity(d)),
           tol.algebraic);
  } catch (const NumericError&) {
    out.violations.push_back({kInvariantMetricInverse, 1.0});
  }

  const Signature s = signature(g);
  const std::size_t n = d / 2;
  const double off = static_cast<double>((s.positive > n ? s.positive - n : n - s.positive) +
                                         (s.negative > n ? s.negative - n : n - s.negative));
  report(kInvariantSignature, off, 0.0);
  return out;
}

ConnectionCoeffs levi_civita(const LieFrameManifold& m) {
  const DenseTensor& g = m.metric();
  const DenseTensor g_inv = inverse(g);
  // bracket(i, j, k) = g([e_i, e_j], e_k)
  const DenseTensor bracket = lower_leading(m.structure_constants(), g);
  // lowered(i, j, k) = g(nabla_i e_j, e_k)
  const DenseTensor lowered = 0.5 * (bracket + rearrange(bracket, {2, 0, 1}) +
                                     rearrange(bracket, {2, 1, 0}));
  return ConnectionCoeffs{raise_trailing(lowered, g_inv)};
}

DenseTensor covariant_derivative(const LieFrameManifold& m, const ConnectionCoeffs& conn,
                                 const DenseTensor& t) {
  const std::size_t d = m.dim();
  if (t.dim() != d || conn.gamma.dim() != d || conn.gamma.rank() != 3)
    throw ArgumentError("covariant_derivative: dimension mismatch");
  const std::size_t r = t.rank();
  if (r == 0) return DenseTensor::zeros(d, 1);
  const DenseTensor& gamma = conn.gamma;
  const auto data = t.components();
  return DenseTensor::generate(d, r + 1, [&](std::span<const Index> x) {
    const std::size_t i = x[0];
    double s = 0.0;
    for (std::size_t slot = 0; slot < r; ++slot) {
      const std::size_t st = t.stride(slot);
      std::size_t base = 0;
      for (std::size_t q = 0; q < r; ++q)
        if (q != slot) base += x[q + 1] * t.stride(q);
      const std::size_t a = x[slot + 1];
      for (std::size_t mm = 0; mm < d; ++mm) s -= gamma(mm, i, a) * data[base + mm * st];
    }
    return s;
  });
}

DenseTensor torsion(const LieFrameManifold& m, const ConnectionCoeffs& conn) {
  return conn.gamma - rearrange(conn.gamma, {0, 2, 1}) - m.structure_constants();
}

DenseTensor metric_defect(const LieFrameManifold& m, const ConnectionCoeffs& conn) {
  // lowered(i, j, k) = g(nabla_i e_j, e_k)
  const DenseTensor lowered = lower_leading(conn.gamma, m.metric());
  return lowered + rearrange(lowered, {0, 2, 1});
}

}  // namespace norden
