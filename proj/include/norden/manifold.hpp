#pragma once

// Left-invariant almost complex structures with Norden metric on a Lie group,
// described by data at the identity in a fixed frame {e_i}:
//   [e_i, e_j] = sum_k C(k, i, j) e_k,   g(i, j) = g(e_i, e_j),   J e_j = sum_k J(k, j) e_k.
// Every frame component of a left-invariant tensor is constant, so covariant
// derivatives reduce to algebra on the connection coefficients.

#include <string>
#include <vector>

#include "norden/tensor.hpp"

namespace norden {

class LieFrameManifold {
 public:
  /// Shape checks only: dim even and positive, C rank 3, g and J square of
  /// size dim. Throws ArgumentError otherwise. Geometric invariants are the
  /// business of validate_manifold.
  LieFrameManifold(DenseTensor structure_constants, DenseTensor metric,
                   DenseTensor complex_structure);

  std::size_t dim() const { return metric_.dim(); }
  std::size_t half_dim() const { return metric_.dim() / 2; }
  const DenseTensor& structure_constants() const { return structure_constants_; }
  const DenseTensor& metric() const { return metric_; }
  const DenseTensor& complex_structure() const { return complex_structure_; }

  friend bool operator==(const LieFrameManifold&, const LieFrameManifold&) = default;

 private:
  DenseTensor structure_constants_;
  DenseTensor metric_;
  DenseTensor complex_structure_;
};

/// g = diag(1,..,1,-1,..,-1) and J e_i = e_{n+i}, J e_{n+i} = -e_i.
DenseTensor canonical_norden_metric(std::size_t dim);
DenseTensor canonical_complex_structure(std::size_t dim);

/// The abelian (flat Kaehler) example on the canonical pair.
LieFrameManifold flat_kahler(std::size_t dim);

struct Violation {
  std::string invariant;
  double residual = 0.0;
};

struct ValidationOutcome {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct ValidationTolerances {
  double algebraic = 1e-12;
  double jacobi = 1e-10;
};

// Invariant names reported in ValidationOutcome.
inline constexpr const char* kInvariantBracketAntisymmetry = "bracket antisymmetry";
inline constexpr const char* kInvariantJacobi = "Jacobi identity";
inline constexpr const char* kInvariantComplexStructure = "J^2 = -identity";
inline constexpr const char* kInvariantNordenCompatibility = "Norden compatibility J^T g J = -g";
inline constexpr const char* kInvariantMetricSymmetry = "metric symmetry";
inline constexpr const char* kInvariantMetricInverse = "metric nondegenerate";
inline constexpr const char* kInvariantSignature = "metric signature (n,n)";

ValidationOutcome validate_manifold(const LieFrameManifold& m,
                                    const ValidationTolerances& tol = {});

/// Jacobiator: out(p, i, j, l) = cyclic_{i,j,l} sum_m C(m, i, j) C(p, m, l).
DenseTensor jacobiator(const DenseTensor& structure_constants);

/// Connection coefficients: nabla_{e_i} e_j = sum_k gamma(k, i, j) e_k.
struct ConnectionCoeffs {
  DenseTensor gamma;
};

/// Levi-Civita connection from the Koszul formula with constant frame metric:
///   2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) + g([e_k,e_i],e_j) + g([e_k,e_j],e_i).
/// Throws NumericError if g is singular.
ConnectionCoeffs levi_civita(const LieFrameManifold& m);

/// Covariant derivative of a left-invariant, fully covariant tensor. The new
/// derivative index is slot 0:
///   (nabla t)(i, a_1..a_r) = -sum_s sum_m gamma(m, i, a_s) t(a_1..m..a_r).
/// A rank-0 input gives the zero rank-1 tensor.
DenseTensor covariant_derivative(const LieFrameManifold& m, const ConnectionCoeffs& conn,
                                 const DenseTensor& t);

/// Torsion T(k, i, j) = gamma(k, i, j) - gamma(k, j, i) - C(k, i, j).
DenseTensor torsion(const LieFrameManifold& m, const ConnectionCoeffs& conn);

/// Frame-metric compatibility g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k), as a
/// rank-3 tensor (i, j, k); zero for a metric connection.
DenseTensor metric_defect(const LieFrameManifold& m, const ConnectionCoeffs& conn);

}  // namespace norden
