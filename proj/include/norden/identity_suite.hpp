#pragma once

// Catalog of named identity checks and the runner that evaluates them on one
// manifold. All tensors a check may need are computed once into a
// SuiteContext; checks are read-only over it.
//
// Gates: a check either applies to every valid manifold, to W0/W3 manifolds,
// to W0/W3 manifolds whose R' is a Kaehler tensor, or additionally only in
// dimension 4. Gated-off checks are still evaluated when their inputs exist;
// their residual is logged with status NA.

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "norden/curvature.hpp"
#include "norden/manifold.hpp"
#include "norden/norden_geometry.hpp"

namespace norden {

inline constexpr std::string_view kSuiteVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CheckStatus s);

enum class Gate {
  None,
  NordenClass,        // W0 or W3
  RPrimeKahler,       // W0 or W3, and R' Kaehler within tolerance
  Dim4RPrimeKahler,   // as above, in dimension 4
};

struct CheckSpec {
  std::string_view id;
  std::string_view anchor;
  Gate gate;
};

/// Every check, in report order.
std::span<const CheckSpec> catalog();

struct CheckResult {
  std::string check_id;
  std::string anchor;
  std::optional<double> residual;  // empty when the inputs do not exist
  double tolerance = kDefaultTolerance;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string gate_reason;  // set when status is NA
  std::chrono::nanoseconds elapsed{0};
};

/// Quantities that exist only for W0/W3 manifolds.
struct QuasiKahlerData {
  TorsionPotential Q;
  DenseTensor Q_cyclic;  // second route for Q_cov
  ConnectionCoeffs prime;
  CurvatureTensor R_prime;
  CurvatureTensor P;
  CurvatureTensor H;
  DenseTensor nabla_Q;  // Levi-Civita derivative of Q_cov, derivative slot first
  RicciScalars ricci_R;
  RicciScalars ricci_R_prime;
  RicciScalars ricci_P;
  RicciScalars ricci_H;
  SquareNorms norms;
  double cross_norm = 0.0;
  double tilde_norm = 0.0;
  double assoc_norm_outer = 0.0;
  ScalarPanel panel;
};

struct SuiteContext {
  LieFrameManifold manifold;
  double tolerance;
  ConnectionCoeffs levi_civita;
  DenseTensor nabla_J;
  DenseTensor F;
  ClassLabel label;
  CurvatureTensor R;
  DenseTensor nabla_F;
  std::optional<QuasiKahlerData> quasi;

  /// W0/W3 and R' Kaehler within tolerance.
  bool r_prime_kahler() const;

  /// Precondition: the manifold validates.
  static SuiteContext build(const LieFrameManifold& m, double tolerance = kDefaultTolerance);
};

struct VerificationReport {
  std::string manifold_id;
  ClassLabel class_label;
  std::optional<ScalarPanel> scalar_panel;
  std::vector<CheckResult> checks;
  /// Extra named numbers that no check asserts on.
  std::vector<std::pair<std::string, double>> diagnostics;
  std::string suite_version{kSuiteVersion};
  double tolerance = kDefaultTolerance;

  bool any_failure() const;
  const CheckResult* find(std::string_view id) const;
};

class InvalidManifoldError : public std::runtime_error {
 public:
  explicit InvalidManifoldError(ValidationOutcome outcome);
  const ValidationOutcome& outcome() const { return outcome_; }

 private:
  ValidationOutcome outcome_;
};

/// Throws ArgumentError for an id outside the catalog.
CheckResult check_identity(std::string_view check_id, const SuiteContext& ctx);

/// Throws InvalidManifoldError when validate_manifold reports violations.
VerificationReport run_suite(const LieFrameManifold& m, std::string manifold_id,
                             double tolerance = kDefaultTolerance);

}  // namespace norden
