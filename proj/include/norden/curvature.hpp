#pragma once

// Curvature tensors of type (0,4), their algebraic properties, traces, the
// auxiliary tensors P and H, and the four-dimensional Kaehler decomposition.
//
// Conventions: R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z
// and R(x,y,z,w) = g(R(x,y)z, w).

#include "norden/manifold.hpp"
#include "norden/norden_geometry.hpp"
#include "norden/tensor.hpp"

namespace norden {

/// Residuals of the curvature-like and Kaehler properties of a (0,4) tensor L:
///   antisymmetry  L(x,y,z,w) = -L(y,x,z,w) = -L(x,y,w,z)
///   bianchi       cyclic_{x,y,z} L(x,y,z,w) = 0
///   kahler        L(x,y,Jz,Jw) = -L(x,y,z,w)
struct CurvatureProperties {
  double antisymmetry = 0.0;
  double bianchi = 0.0;
  double kahler = 0.0;
};

CurvatureProperties curvature_properties(const DenseTensor& L, const DenseTensor& J);

struct CurvatureTensor {
  DenseTensor t;
  CurvatureProperties residuals;
  bool is_curvature_like = false;
  bool is_kahler = false;
};

CurvatureTensor make_curvature(const DenseTensor& t, const DenseTensor& J,
                               double tolerance = kDefaultTolerance);

/// (0,4) curvature of any connection given by frame coefficients. Works for
/// connections with torsion; bracket terms come from the structure constants.
CurvatureTensor riemann(const LieFrameManifold& m, const ConnectionCoeffs& conn,
                        double tolerance = kDefaultTolerance);

/// rho(x,y) = g^{ij} L(e_i,x,y,e_j), rho*(x,y) = g^{ij} L(e_i,x,y,Je_j),
/// tau = g^{ij} rho(e_i,e_j), tau* = g^{ij} rho(e_i,Je_j).
/// tau_star_from_rho_star = g^{ij} rho*(e_i,e_j) is kept as a diagnostic.
struct RicciScalars {
  DenseTensor rho;
  DenseTensor rho_star;
  double tau = 0.0;
  double tau_star = 0.0;
  double tau_star_from_rho_star = 0.0;
};

RicciScalars ricci_and_scalars(const LieFrameManifold& m, const DenseTensor& L);

/// P(x,y,z,w) = 2 g(Q(x,y),Q(z,w)) + g(Q(z,y),Q(x,w)) + g(Q(x,z),Q(y,w)).
CurvatureTensor tensor_P(const LieFrameManifold& m, const DenseTensor& Q_vec,
                         double tolerance = kDefaultTolerance);

/// H(x,y,z,w) = g((nabla_x J)Jy + (nabla_Jx J)y, (nabla_z J)Jw + (nabla_Jz J)w).
CurvatureTensor tensor_H(const LieFrameManifold& m, const DenseTensor& nabla_J,
                         double tolerance = kDefaultTolerance);

/// The vector-valued argument of H: V(x,y) = (nabla_x J)Jy + (nabla_Jx J)y.
DenseTensor h_vector(const LieFrameManifold& m, const DenseTensor& nabla_J);

struct PiForms {
  DenseTensor pi1;  // g(y,z)g(x,w) - g(x,z)g(y,w)
  DenseTensor pi2;  // g(y,Jz)g(x,Jw) - g(x,Jz)g(y,Jw)
  DenseTensor pi3;  // -g(y,z)g(x,Jw) + g(x,z)g(y,Jw) - g(y,Jz)g(x,w) + g(x,Jz)g(y,w)
};

PiForms pi_forms(const LieFrameManifold& m);

/// nu (pi1 - pi2) + nu_star pi3.
DenseTensor kahler_model(const PiForms& pi, double nu, double nu_star);

/// Residual between a four-dimensional Kaehler R' and
/// (tau'/8)(pi1 - pi2) + (tau'*/8) pi3.
/// Throws ArgumentError when dim != 4 and GeometryError when R' is not Kaehler.
double kahler_decomposition_dim4(const LieFrameManifold& m, const CurvatureTensor& R_prime,
                                 double tau_prime, double tau_prime_star);

struct ReconstructionResiduals {
  /// R against (1/8){tau (pi1-pi2) + tau* pi3} - P/3.
  double isotropic_form = 0.0;
  /// R against (1/128){(16 tau + tau(H))(pi1-pi2) + (16 tau* - tau(H)) pi3} - P/3.
  double h_form = 0.0;
  /// R against (1/8){(tau + 3/8 |nabla J|^2)(pi1-pi2) + (tau* - 1/8 |nabla J|^2) pi3} - P/3.
  double norm_form = 0.0;
};

/// Same preconditions as kahler_decomposition_dim4, with R' passed for the
/// Kaehler gate.
ReconstructionResiduals reconstruct_R_dim4(const LieFrameManifold& m, const DenseTensor& R,
                                           const CurvatureTensor& R_prime,
                                           const ScalarPanel& panel, const DenseTensor& P);

}  // namespace norden
