#include "norden/identity_suite.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace norden {
namespace {

// Residual of a biconditional "a small <=> b small": zero when both sides
// agree, otherwise the residual of the side that is not small.
double equivalence(double a, double b, double tol) {
  return ((a <= tol) == (b <= tol)) ? 0.0 : std::max(a, b);
}

double smallness(double x) { return scalar_residual(x, 0.0); }

DenseTensor on_J(const DenseTensor& t, std::size_t slot, const DenseTensor& J) {
  return substitute(t, slot, J);
}

using Evaluator = std::function<std::optional<double>(const SuiteContext&)>;

struct CatalogEntry {
  CheckSpec spec;
  Evaluator eval;
};

// Wraps an evaluator that needs the W0/W3 data.
template <class Fn>
Evaluator quasi(Fn fn) {
  return [fn](const SuiteContext& c) -> std::optional<double> {
    if (!c.quasi) return std::nullopt;
    return fn(c, *c.quasi);
  };
}

template <class Fn>
Evaluator quasi_dim4(Fn fn) {
  return [fn](const SuiteContext& c) -> std::optional<double> {
    if (!c.quasi || c.manifold.dim() != 4 || !c.quasi->R_prime.is_kahler) return std::nullopt;
    return fn(c, *c.quasi);
  };
}

double eq_1_15_difference(const SuiteContext& c, bool flipped) {
  const DenseTensor& R = c.R.t;
  const DenseTensor& J = c.manifold.complex_structure();
  const DenseTensor lhs = cyclic_sum3(on_J(on_J(R, 1, J), 2, J) - on_J(on_J(R, 1, J), 3, J) +
                                          on_J(on_J(R, 0, J), 3, J) - on_J(on_J(R, 0, J), 2, J),
                                      {0, 1, 2});
  const DenseTensor S = c.nabla_J + rearrange(c.nabla_J, {0, 2, 1});  // (nabla_x J)y + (nabla_y J)x
  const DenseTensor rhs = -cyclic_sum3(metric_pairing(S, S, c.manifold.metric()), {0, 1, 2});
  return flipped ? residual(lhs, -rhs) : residual(lhs, rhs);
}

const std::vector<CatalogEntry>& entries() {
  using G = Gate;
  using Q = QuasiKahlerData;
  using C = SuiteContext;
  static const std::vector<CatalogEntry> table = {
      // Valid for every almost complex manifold with Norden metric.
      {{"LEVI_CIVITA", "nabla g = 0 and T = 0 for the Levi-Civita connection", G::None},
       [](const C& c) -> std::optional<double> {
         return std::max(residual_to_zero(metric_defect(c.manifold, c.levi_civita)),
                         residual_to_zero(torsion(c.manifold, c.levi_civita)));
       }},
      {{"R_CURVATURE_LIKE", "R(x,y,z,w) = -R(y,x,z,w) = R(z,w,x,y), cyclic R(x,y,z,w) = 0", G::None},
       [](const C& c) -> std::optional<double> {
         return std::max({c.R.residuals.antisymmetry, c.R.residuals.bianchi,
                          residual(c.R.t, rearrange(c.R.t, {2, 3, 0, 1}))});
       }},
      {{"EQ_1_3", "F(x,y,z) = F(x,z,y) = F(x,Jy,Jz)", G::None},
       [](const C& c) -> std::optional<double> {
         const auto s = f_symmetry_residuals(c.manifold, c.F);
         return std::max(s.swap, s.j_pair);
       }},
      {{"EQ_1_5", "(nabla_x F)(y,z,w) - (nabla_y F)(x,z,w) = R(x,y,Jz,w) - R(x,y,z,Jw)", G::None},
       [](const C& c) -> std::optional<double> {
         const DenseTensor& J = c.manifold.complex_structure();
         return residual(c.nabla_F - rearrange(c.nabla_F, {1, 0, 2, 3}),
                         on_J(c.R.t, 2, J) - on_J(c.R.t, 3, J));
       }},

      // Class W0/W3.
      {{"EQ_1_4", "cyclic_{x,y,z} F(x,y,z) = 0", G::NordenClass},
       [](const C& c) -> std::optional<double> { return c.label.w3_residual; }},
      {{"EQ_1_13", "cyclic_{x,y,z} F(Jx,y,z) = 0", G::NordenClass},
       [](const C& c) -> std::optional<double> { return c.label.jx_cyclic_residual; }},
      {{"EQ_1_14", "(nabla_x J)Jy + (nabla_y J)Jx + (nabla_Jx J)y + (nabla_Jy J)x = 0", G::NordenClass},
       [](const C& c) -> std::optional<double> { return c.label.vector_residual; }},
      {{"F_TRACES", "g^ij F(e_i,e_j,z) = g^ij F(e_i,Je_j,z) = 0", G::NordenClass},
       [](const C& c) -> std::optional<double> {
         const auto t = f_traces(c.manifold, c.F);
         return std::max(residual_to_zero(t.plain), residual_to_zero(t.twisted));
       }},
      {{"EQ_1_7", "|nabla J|^2 = -2 g^ij g^ks g((nabla_ei J)e_k, (nabla_es J)e_j)", G::NordenClass},
       quasi([](const C&, const Q& q) { return scalar_residual(q.norms.sq_norm, q.cross_norm); })},
      {{"ASSOC_NORM", "g^ij g^ks g~((nabla_ei J)e_k, (nabla_ej J)e_s) = 0", G::NordenClass},
       quasi([](const C&, const Q& q) { return smallness(q.norms.assoc_sq_norm); })},
      {{"EQ_1_15",
        "cyclic {R(x,Jy,Jz,w) - R(x,Jy,z,Jw) + R(Jx,y,z,Jw) - R(Jx,y,Jz,w)} = "
        "-cyclic g((nabla_x J)y + (nabla_y J)x, (nabla_z J)w + (nabla_w J)z)",
        G::NordenClass},
       quasi([](const C& c, const Q&) { return eq_1_15_difference(c, false); })},
      {{"EQ_1_19", "Q(y,z,w) = -1/4 cyclic_{y,z,w} F(y,z,Jw)", G::NordenClass},
       quasi([](const C&, const Q& q) { return residual(q.Q.cov, q.Q_cyclic); })},
      {{"Q_SKEW", "Q(y,z,w) totally skew symmetric", G::NordenClass},
       quasi([](const C&, const Q& q) { return antisymmetry_residual3(q.Q.cov); })},
      {{"Q_TRACE", "g^ij Q(e_i,e_j) = 0", G::NordenClass},
       quasi([](const C& c, const Q& q) {
         return residual_to_zero(contract(q.Q.vec, 1, 2, inverse(c.manifold.metric())));
       })},
      {{"NATURAL_G", "nabla' g = 0", G::NordenClass},
       quasi([](const C& c, const Q& q) {
         return residual_to_zero(covariant_derivative(c.manifold, q.prime, c.manifold.metric()));
       })},
      {{"NATURAL_J", "nabla' J = 0", G::NordenClass},
       quasi([](const C& c, const Q& q) {
         return residual_to_zero(compute_nabla_J(c.manifold, q.prime));
       })},
      {{"TORSION_2Q", "T(x,y) = 2Q(x,y)", G::NordenClass},
       quasi([](const C& c, const Q& q) {
         return residual(torsion(c.manifold, q.prime), 2.0 * q.Q.vec);
       })},
      {{"EQ_2_3",
        "R'(x,y,z,w) = R(x,y,z,w) + (nabla_x Q)(y,z,w) - (nabla_y Q)(x,z,w) - g(Q(y,z),Q(x,w)) + "
        "g(Q(x,z),Q(y,w))",
        G::NordenClass},
       quasi([](const C& c, const Q& q) {
         const DenseTensor pair = metric_pairing(q.Q.vec, q.Q.vec, c.manifold.metric());
         const DenseTensor rhs = c.R.t + q.nabla_Q - rearrange(q.nabla_Q, {1, 0, 2, 3}) -
                                 rearrange(pair, {1, 2, 0, 3}) + rearrange(pair, {0, 2, 1, 3});
         return residual(q.R_prime.t, rhs);
       })},
      {{"R_PRIME_ANTISYMMETRY", "R'(x,y,z,w) = -R'(y,x,z,w) = -R'(x,y,w,z)", G::NordenClass},
       quasi([](const C&, const Q& q) { return q.R_prime.residuals.antisymmetry; })},
      {{"R_PRIME_J_INVARIANT", "R'(x,y,Jz,Jw) = -R'(x,y,z,w)", G::NordenClass},
       quasi([](const C&, const Q& q) { return q.R_prime.residuals.kahler; })},
      {{"BIANCHI_R_PRIME", "cyclic_{x,y,z} R'(x,y,z,w) = 0", G::NordenClass},
       quasi([](const C&, const Q& q) { return q.R_prime.residuals.bianchi; })},
      {{"EQ_2_8", "3R'(x,y,z,w) = 3R(x,y,z,w) + P(x,y,z,w)", G::NordenClass},
       quasi([](const C& c, const Q& q) { return residual(3.0 * q.R_prime.t, 3.0 * c.R.t + q.P.t); })},
      {{"EQ_2_14",
        "cyclic_{x,y,z} g((nabla_x J)Jy + (nabla_Jx J)y, (nabla_z J)Jw + (nabla_Jz J)w) = 0",
        G::NordenClass},
       quasi([](const C&, const Q& q) { return q.H.residuals.bianchi; })},
      {{"THM_2_1", "R' Kaehler <=> 3R' = 3R + P", G::NordenClass},
       quasi([](const C& c, const Q& q) {
         return equivalence(q.R_prime.residuals.bianchi,
                            residual(3.0 * q.R_prime.t, 3.0 * c.R.t + q.P.t), c.tolerance);
       })},
      {{"THM_2_3", "R' Kaehler <=> cyclic H(x,y,z,w) = 0", G::NordenClass},
       quasi([](const C& c, const Q& q) {
         return equivalence(q.R_prime.residuals.bianchi, q.H.residuals.bianchi, c.tolerance);
       })},
      {{"P_CURVATURE_LIKE", "P antisymmetric and satisfies the first Bianchi identity", G::NordenClass},
       quasi([](const C&, const Q& q) {
         return std::max(q.P.residuals.antisymmetry, q.P.residuals.bianchi);
       })},
      {{"H_KAHLER_TENSOR", "H antisymmetric, first Bianchi, H(x,y,Jz,Jw) = -H(x,y,z,w)", G::NordenClass},
       quasi([](const C&, const Q& q) {
         return std::max({q.H.residuals.antisymmetry, q.H.residuals.bianchi, q.H.residuals.kahler});
       })},
      {{"COR_2_4", "R' Kaehler <=> H Kaehler", G::NordenClass},
       quasi([](const C& c, const Q& q) {
         const double h = std::max({q.H.residuals.antisymmetry, q.H.residuals.bianchi,
                                    q.H.residuals.kahler});
         return equivalence(q.R_prime.residuals.bianchi, h, c.tolerance);
       })},
      {{"EQ_3_3", "tau(P) = 3 g^ij g^ks g(Q(e_i,e_k), Q(e_s,e_j))", G::NordenClass},
       quasi([](const C& c, const Q& q) {
         const DenseTensor g_inv = inverse(c.manifold.metric());
         const DenseTensor pair = metric_pairing(q.Q.vec, q.Q.vec, c.manifold.metric());  // (i,k,s,j)
         const double rhs = 3.0 * contract(contract(pair, 0, 3, g_inv), 0, 1, g_inv).value();
         return scalar_residual(q.panel.tau_P, rhs);
       })},
      {{"EQ_3_4", "tau(P) = 9/8 |nabla J|^2", G::NordenClass},
       quasi([](const C&, const Q& q) {
         return scalar_residual(q.panel.tau_P, 9.0 / 8.0 * q.panel.sq_norm_nablaJ);
       })},
      {{"EQ_3_6", "tau*(P) = -3/8 |nabla J|^2", G::NordenClass},
       quasi([](const C&, const Q& q) {
         return scalar_residual(q.panel.tau_star_P, -3.0 / 8.0 * q.panel.sq_norm_nablaJ);
       })},
      {{"EQ_3_9", "tau(H) = tau*(H) = 2 |nabla J|^2", G::NordenClass},
       quasi([](const C&, const Q& q) {
         const double n2 = 2.0 * q.panel.sq_norm_nablaJ;
         return std::max(scalar_residual(q.panel.tau_H, n2), scalar_residual(q.panel.tau_star_H, n2));
       })},

      // W0/W3 with R' Kaehler.
      {{"EQ_2_6", "R'(x,y,z,w) = R(x,y,z,w) - (nabla_z Q)(x,y,w) + g(Q(x,y),Q(z,w))", G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         const DenseTensor pair = metric_pairing(q.Q.vec, q.Q.vec, c.manifold.metric());
         return residual(q.R_prime.t, c.R.t - rearrange(q.nabla_Q, {2, 0, 1, 3}) + pair);
       })},
      {{"EQ_2_7",
        "R'(x,y,z,w) + R'(z,y,x,w) = R(x,y,z,w) + R(z,y,x,w) + g(Q(x,y),Q(z,w)) + g(Q(z,y),Q(x,w))",
        G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         const DenseTensor pair = metric_pairing(q.Q.vec, q.Q.vec, c.manifold.metric());
         const auto swap_xz = [](const DenseTensor& t) { return rearrange(t, {2, 1, 0, 3}); };
         return residual(q.R_prime.t + swap_xz(q.R_prime.t),
                         c.R.t + swap_xz(c.R.t) + pair + swap_xz(pair));
       })},
      {{"COR_2_2", "P Kaehler <=> R Kaehler", G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         return equivalence(q.P.residuals.kahler, c.R.residuals.kahler, c.tolerance);
       })},
      {{"EQ_3_1", "3 tau' = 3 tau + tau(P)", G::RPrimeKahler},
       quasi([](const C&, const Q& q) {
         const auto& p = q.panel;
         return scalar_residual(3.0 * p.tau_prime, 3.0 * p.tau + p.tau_P);
       })},
      {{"EQ_3_2", "3 tau'* = 3 tau* + tau*(P)", G::RPrimeKahler},
       quasi([](const C&, const Q& q) {
         const auto& p = q.panel;
         return scalar_residual(3.0 * p.tau_prime_star, 3.0 * p.tau_star + p.tau_star_P);
       })},
      {{"EQ_3_5", "tau' = tau + 3/8 |nabla J|^2", G::RPrimeKahler},
       quasi([](const C&, const Q& q) {
         const auto& p = q.panel;
         return scalar_residual(p.tau_prime, p.tau + 3.0 / 8.0 * p.sq_norm_nablaJ);
       })},
      {{"EQ_3_7", "tau'* = tau* - 1/8 |nabla J|^2", G::RPrimeKahler},
       quasi([](const C&, const Q& q) {
         const auto& p = q.panel;
         return scalar_residual(p.tau_prime_star, p.tau_star - p.sq_norm_nablaJ / 8.0);
       })},
      {{"EQ_3_8", "tau' + 3 tau'* = tau + 3 tau*", G::RPrimeKahler},
       quasi([](const C&, const Q& q) {
         const auto& p = q.panel;
         return scalar_residual(p.tau_prime + 3.0 * p.tau_prime_star, p.tau + 3.0 * p.tau_star);
       })},
      {{"EQ_3_10", "tau' = tau + 3/16 tau(H)", G::RPrimeKahler},
       quasi([](const C&, const Q& q) {
         const auto& p = q.panel;
         return scalar_residual(p.tau_prime, p.tau + 3.0 / 16.0 * p.tau_H);
       })},
      {{"EQ_3_11", "tau'* = tau* - 1/16 tau(H)", G::RPrimeKahler},
       quasi([](const C&, const Q& q) {
         const auto& p = q.panel;
         return scalar_residual(p.tau_prime_star, p.tau_star - p.tau_H / 16.0);
       })},
      {{"THM_3_1_TAU_DIFF", "|nabla J|^2 = 0 <=> tau - tau' = 0", G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         const auto& p = q.panel;
         return equivalence(smallness(p.sq_norm_nablaJ), smallness(p.tau - p.tau_prime), c.tolerance);
       })},
      {{"THM_3_1_TAU_STAR_DIFF", "|nabla J|^2 = 0 <=> tau* - tau'* = 0", G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         const auto& p = q.panel;
         return equivalence(smallness(p.sq_norm_nablaJ), smallness(p.tau_star - p.tau_prime_star),
                            c.tolerance);
       })},
      {{"THM_3_1_TAU_P", "|nabla J|^2 = 0 <=> tau(P) = 0", G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         const auto& p = q.panel;
         return equivalence(smallness(p.sq_norm_nablaJ), smallness(p.tau_P), c.tolerance);
       })},
      {{"THM_3_1_TAU_STAR_P", "|nabla J|^2 = 0 <=> tau*(P) = 0", G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         const auto& p = q.panel;
         return equivalence(smallness(p.sq_norm_nablaJ), smallness(p.tau_star_P), c.tolerance);
       })},
      {{"THM_3_1_TAU_H", "|nabla J|^2 = 0 <=> tau(H) = 0", G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         const auto& p = q.panel;
         return equivalence(smallness(p.sq_norm_nablaJ), smallness(p.tau_H), c.tolerance);
       })},
      {{"THM_3_1_TAU_STAR_H", "|nabla J|^2 = 0 <=> tau*(H) = 0", G::RPrimeKahler},
       quasi([](const C& c, const Q& q) {
         const auto& p = q.panel;
         return equivalence(smallness(p.sq_norm_nablaJ), smallness(p.tau_star_H), c.tolerance);
       })},

      // Dimension 4, R' Kaehler.
      {{"EQ_3_12", "R' = tau'/8 (pi1 - pi2) + tau'*/8 pi3", G::Dim4RPrimeKahler},
       quasi_dim4([](const C& c, const Q& q) {
         return kahler_decomposition_dim4(c.manifold, q.R_prime, q.panel.tau_prime,
                                          q.panel.tau_prime_star);
       })},
      {{"EQ_3_13",
        "R = 1/8 {(tau + 3/8 |nabla J|^2)(pi1 - pi2) + (tau* - 1/8 |nabla J|^2) pi3} - P/3",
        G::Dim4RPrimeKahler},
       quasi_dim4([](const C& c, const Q& q) {
         return reconstruct_R_dim4(c.manifold, c.R.t, q.R_prime, q.panel, q.P.t).norm_form;
       })},
      {{"THM_3_2", "|nabla J|^2 = 0 <=> R = 1/8 {tau (pi1 - pi2) + tau* pi3} - P/3", G::Dim4RPrimeKahler},
       quasi_dim4([](const C& c, const Q& q) {
         const auto r = reconstruct_R_dim4(c.manifold, c.R.t, q.R_prime, q.panel, q.P.t);
         return equivalence(smallness(q.panel.sq_norm_nablaJ), r.isotropic_form, c.tolerance);
       })},
      {{"THM_3_3", "R = 1/128 {(16 tau + tau(H))(pi1 - pi2) + (16 tau* - tau(H)) pi3} - P/3",
        G::Dim4RPrimeKahler},
       quasi_dim4([](const C& c, const Q& q) {
         return reconstruct_R_dim4(c.manifold, c.R.t, q.R_prime, q.panel, q.P.t).h_form;
       })},
  };
  return table;
}

const std::vector<CheckSpec>& spec_list() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> out;
    for (const auto& e : entries()) out.push_back(e.spec);
    return out;
  }();
  return specs;
}

// Empty string when the gate is met, the reason otherwise.
std::string gate_reason(Gate gate, const SuiteContext& c) {
  if (gate == Gate::None) return {};
  if (!c.quasi) return "class OTHER";
  if (gate == Gate::NordenClass) return {};
  if (!c.r_prime_kahler()) return "R' not Kaehler";
  if (gate == Gate::Dim4RPrimeKahler && c.manifold.dim() != 4) return "dimension != 4";
  return {};
}

CheckResult run_entry(const CatalogEntry& e, const SuiteContext& c) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = std::string(e.spec.id);
  r.anchor = std::string(e.spec.anchor);
  r.tolerance = c.tolerance;
  r.residual = e.eval(c);
  r.gate_reason = gate_reason(e.spec.gate, c);
  if (!r.gate_reason.empty())
    r.status = CheckStatus::NotApplicable;
  else if (!r.residual)
    throw NumericError("check " + r.check_id + " has no inputs although its gate is met");
  else
    r.status = (*r.residual <= c.tolerance) ? CheckStatus::Pass : CheckStatus::Fail;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "NA";
  }
  return "NA";
}

std::span<const CheckSpec> catalog() { return spec_list(); }

bool SuiteContext::r_prime_kahler() const { return quasi && quasi->R_prime.is_kahler; }

SuiteContext SuiteContext::build(const LieFrameManifold& m, double tolerance) {
  ConnectionCoeffs lc = norden::levi_civita(m);
  DenseTensor nabla_J = compute_nabla_J(m, lc);
  DenseTensor F = compute_F(m, nabla_J);
  ClassLabel label = classify(m, F, tolerance);
  CurvatureTensor R = riemann(m, lc, tolerance);
  DenseTensor nabla_F = covariant_derivative(m, lc, F);
  SuiteContext ctx{m, tolerance, lc, nabla_J, F, label, R, nabla_F, std::nullopt};
  if (label.label == NordenClass::Other) return ctx;

  QuasiKahlerData q;
  q.Q = compute_Q(m, lc, nabla_J, label);
  q.Q_cyclic = q_from_cyclic_F(m, F);
  q.prime = connection_prime(lc, q.Q.vec);
  q.R_prime = riemann(m, q.prime, tolerance);
  q.P = tensor_P(m, q.Q.vec, tolerance);
  q.H = tensor_H(m, nabla_J, tolerance);
  q.nabla_Q = covariant_derivative(m, lc, q.Q.cov);
  q.ricci_R = ricci_and_scalars(m, R.t);
  q.ricci_R_prime = ricci_and_scalars(m, q.R_prime.t);
  q.ricci_P = ricci_and_scalars(m, q.P.t);
  q.ricci_H = ricci_and_scalars(m, q.H.t);
  q.norms = square_norms(m, nabla_J, AssocNormVariant::InnerTilde);
  q.cross_norm = sq_norm_cross_form(m, nabla_J);
  q.tilde_norm = tilde_sq_norm(m, nabla_J);
  q.assoc_norm_outer = square_norms(m, nabla_J, AssocNormVariant::OuterTildeInverse).assoc_sq_norm;

  ScalarPanel& p = q.panel;
  p.tau = q.ricci_R.tau;
  p.tau_star = q.ricci_R.tau_star;
  p.tau_prime = q.ricci_R_prime.tau;
  p.tau_prime_star = q.ricci_R_prime.tau_star;
  p.tau_P = q.ricci_P.tau;
  p.tau_star_P = q.ricci_P.tau_star;
  p.tau_H = q.ricci_H.tau;
  p.tau_star_H = q.ricci_H.tau_star;
  p.sq_norm_nablaJ = q.norms.sq_norm;
  p.assoc_sq_norm_nablaJ = q.norms.assoc_sq_norm;
  ctx.quasi = std::move(q);
  return ctx;
}

bool VerificationReport::any_failure() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

const CheckResult* VerificationReport::find(std::string_view id) const {
  for (const auto& r : checks)
    if (r.check_id == id) return &r;
  return nullptr;
}

namespace {

std::string describe(const ValidationOutcome& o) {
  std::string s = "manifold fails validation:";
  for (const auto& v : o.violations) s += " [" + v.invariant + ": " + std::to_string(v.residual) + "]";
  return s;
}

}  // namespace

InvalidManifoldError::InvalidManifoldError(ValidationOutcome outcome)
    : std::runtime_error(describe(outcome)), outcome_(std::move(outcome)) {}

CheckResult check_identity(std::string_view check_id, const SuiteContext& ctx) {
  for (const auto& e : entries())
    if (e.spec.id == check_id) return run_entry(e, ctx);
  throw ArgumentError("unknown check id: " + std::string(check_id));
}

VerificationReport run_suite(const LieFrameManifold& m, std::string manifold_id, double tolerance) {
  if (!(tolerance > 0.0)) throw ArgumentError("tolerance must be positive");
  ValidationOutcome outcome = validate_manifold(m);
  if (!outcome.ok()) throw InvalidManifoldError(std::move(outcome));

  const SuiteContext ctx = SuiteContext::build(m, tolerance);
  VerificationReport report;
  report.manifold_id = std::move(manifold_id);
  report.class_label = ctx.label;
  report.tolerance = tolerance;
  report.checks.reserve(entries().size());
  for (const auto& e : entries()) report.checks.push_back(run_entry(e, ctx));

  if (ctx.quasi) {
    const QuasiKahlerData& q = *ctx.quasi;
    report.scalar_panel = q.panel;
    report.diagnostics = {
        {"tau_star_from_rho_star", q.ricci_R.tau_star_from_rho_star},
        {"tau_prime_star_from_rho_star", q.ricci_R_prime.tau_star_from_rho_star},
        {"tilde_sq_norm_nablaJ", q.tilde_norm},
        {"assoc_sq_norm_outer_tilde_inverse", q.assoc_norm_outer},
        {"eq_1_15_opposite_sign_residual", eq_1_15_difference(ctx, true)},
        {"r_prime_bianchi_residual", q.R_prime.residuals.bianchi},
        {"r_kahler_residual", ctx.R.residuals.kahler},
        {"p_kahler_residual", q.P.residuals.kahler},
    };
  }
  return report;
}

}  // namespace norden
