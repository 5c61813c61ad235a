#pragma once

// Norden-specific tensors built from the Levi-Civita connection: nabla J, the
// fundamental tensor F, class membership (Kaehler W0 / quasi-Kaehler W3), the
// square norms of nabla J, the torsion potential Q, and the natural connection
// nabla' = nabla + Q with totally skew torsion 2Q.
//
// Vector-valued objects keep their contravariant slot first:
//   nabla_J(k, i, j):  (nabla_{e_i} J) e_j = sum_k nabla_J(k, i, j) e_k
//   Q_vec(k, i, j):    Q(e_i, e_j)        = sum_k Q_vec(k, i, j) e_k
// (0,3) tensors are fully covariant, e.g. F(i, j, k) = g((nabla_i J) e_j, e_k).

#include <string_view>

#include "norden/manifold.hpp"
#include "norden/tensor.hpp"

namespace norden {

inline constexpr double kDefaultTolerance = 1e-9;

enum class NordenClass { KahlerW0, QuasiKahlerW3, Other };

std::string_view to_string(NordenClass c);

struct ClassLabel {
  NordenClass label = NordenClass::Other;
  double f_norm = 0.0;            // max |F|
  double w3_residual = 0.0;       // cyclic sum of F(x,y,z) against zero
  double jx_cyclic_residual = 0.0;  // cyclic sum of F(Jx,y,z) against zero
  double vector_residual = 0.0;   // (nabla_x J)Jy + (nabla_y J)Jx + (nabla_Jx J)y + (nabla_Jy J)x
};

/// Scalar quantities of a W0/W3 manifold. See curvature.hpp for the tensors
/// these are traces of.
struct ScalarPanel {
  double tau = 0.0;
  double tau_star = 0.0;
  double tau_prime = 0.0;
  double tau_prime_star = 0.0;
  double tau_P = 0.0;
  double tau_star_P = 0.0;
  double tau_H = 0.0;
  double tau_star_H = 0.0;
  double sq_norm_nablaJ = 0.0;
  double assoc_sq_norm_nablaJ = 0.0;

  friend bool operator==(const ScalarPanel&, const ScalarPanel&) = default;
};

DenseTensor compute_nabla_J(const LieFrameManifold& m, const ConnectionCoeffs& conn);

/// F(i, j, k) = g((nabla_i J) e_j, e_k).
DenseTensor compute_F(const LieFrameManifold& m, const DenseTensor& nabla_J);

/// F(x,y,z) - F(x,z,y) and F(x,y,z) - F(x,Jy,Jz), as residuals.
struct FSymmetryResiduals {
  double swap = 0.0;
  double j_pair = 0.0;
};
FSymmetryResiduals f_symmetry_residuals(const LieFrameManifold& m, const DenseTensor& F);

ClassLabel classify(const LieFrameManifold& m, const DenseTensor& F,
                    double tolerance = kDefaultTolerance);

/// g^{ij} F(e_i, e_j, z) and g^{ij} F(e_i, J e_j, z) as rank-1 tensors.
struct FTraces {
  DenseTensor plain;
  DenseTensor twisted;
};
FTraces f_traces(const LieFrameManifold& m, const DenseTensor& F);

/// Which pairing defines the associated square norm.
enum class AssocNormVariant {
  /// g^{ij} g^{ks} g~((nabla_i J)e_k, (nabla_j J)e_s): inner g replaced by g~.
  InnerTilde,
  /// g~^{ij} g~^{ks} g((nabla_i J)e_k, (nabla_j J)e_s): outer inverses replaced.
  OuterTildeInverse,
};

struct SquareNorms {
  double sq_norm = 0.0;
  double assoc_sq_norm = 0.0;
};

SquareNorms square_norms(const LieFrameManifold& m, const DenseTensor& nabla_J,
                         AssocNormVariant variant = AssocNormVariant::InnerTilde);

/// -2 g^{ij} g^{ks} g((nabla_i J)e_k, (nabla_s J)e_j); equals sq_norm on W3.
double sq_norm_cross_form(const LieFrameManifold& m, const DenseTensor& nabla_J);

/// g~^{ij} g~^{ks} g~((nabla_i J)e_k, (nabla_j J)e_s), every metric replaced by g~.
double tilde_sq_norm(const LieFrameManifold& m, const DenseTensor& nabla_J);

/// pairing(a, b, c, d) = sum_{m,n} h(m, n) A(m, a, b) B(n, c, d), i.e.
/// h(A(e_a, e_b), B(e_c, e_d)) for vector-valued A and B.
DenseTensor metric_pairing(const DenseTensor& A, const DenseTensor& B, const DenseTensor& h);

/// Applies a linear map to the output vector: out(k, ..) = sum_m map(k, m) t(m, ..).
DenseTensor apply_to_output(const DenseTensor& t, const DenseTensor& map);

struct TorsionPotential {
  DenseTensor vec;  // Q_vec(k, i, j)
  DenseTensor cov;  // Q_cov(i, j, k) = g(Q(e_i, e_j), e_k)
};

/// Q(x,y) = 1/4 {(nabla_x J)Jy - (nabla_{Jx} J)y - 2 (nabla_y J)Jx}.
/// Throws GeometryError unless the class label is W0 or W3: total skewness of
/// Q is a quasi-Kaehler fact.
TorsionPotential compute_Q(const LieFrameManifold& m, const ConnectionCoeffs& conn,
                           const DenseTensor& nabla_J, const ClassLabel& label);

/// Second route: Q(y,z,w) = -1/4 cyclic_{y,z,w} F(y, z, Jw).
DenseTensor q_from_cyclic_F(const LieFrameManifold& m, const DenseTensor& F);

/// Largest deviation of a rank-3 tensor from total antisymmetry.
double antisymmetry_residual3(const DenseTensor& t);

/// gamma'(k, i, j) = gamma(k, i, j) + Q_vec(k, i, j).
ConnectionCoeffs connection_prime(const ConnectionCoeffs& conn, const DenseTensor& Q_vec);

}  // namespace norden
