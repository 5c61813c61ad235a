#include "norden/search.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace norden {
namespace {

struct Param {
  std::size_t k, i, j;  // C(k,i,j) = -C(k,j,i) = value, i < j
};

std::vector<Param> bracket_params(std::size_t d) {
  std::vector<Param> ps;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) ps.push_back({k, i, j});
  return ps;
}

DenseTensor brackets_from(std::span<const Param> ps, const Eigen::VectorXd& v, std::size_t d) {
  std::vector<double> c(d * d * d, 0.0);
  for (std::size_t p = 0; p < ps.size(); ++p) {
    const auto [k, i, j] = ps[p];
    c[(k * d + i) * d + j] = v[static_cast<Eigen::Index>(p)];
    c[(k * d + j) * d + i] = -v[static_cast<Eigen::Index>(p)];
  }
  return DenseTensor(d, 3, std::move(c));
}

LieFrameManifold canonical_with(DenseTensor C) {
  const std::size_t d = C.dim();
  return LieFrameManifold(std::move(C), canonical_norden_metric(d), canonical_complex_structure(d));
}

Eigen::VectorXd flatten(const DenseTensor& t) {
  const auto c = t.components();
  return Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
}

// Column p is the cyclic sum of F for the p-th unit bracket.
Eigen::MatrixXd w3_map(std::span<const Param> ps, std::size_t d) {
  Eigen::MatrixXd A(static_cast<Eigen::Index>(d * d * d), static_cast<Eigen::Index>(ps.size()));
  for (std::size_t p = 0; p < ps.size(); ++p) {
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ps.size()));
    unit[static_cast<Eigen::Index>(p)] = 1.0;
    const LieFrameManifold m = canonical_with(brackets_from(ps, unit, d));
    const DenseTensor F = compute_F(m, compute_nabla_J(m, levi_civita(m)));
    A.col(static_cast<Eigen::Index>(p)) = flatten(cyclic_sum3(F, {0, 1, 2}));
  }
  return A;
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = 1e-10 * std::max(1.0, s.size() ? s[0] : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s[rank] > cut) ++rank;
  return svd.matrixV().rightCols(A.cols() - rank);
}

// Constraint set over the coefficients a of a basis N of a bracket subspace.
struct Problem {
  std::vector<Param> params;
  Eigen::MatrixXd basis;  // params x coefficients
  std::size_t dim = 0;
  bool bianchi_r_prime = false;
  bool isotropic = false;

  DenseTensor brackets(const Eigen::VectorXd& a) const {
    return brackets_from(params, basis * a, dim);
  }

  Eigen::VectorXd constraints(const Eigen::VectorXd& a) const {
    const DenseTensor C = brackets(a);
    std::vector<Eigen::VectorXd> parts{flatten(jacobiator(C))};
    if (bianchi_r_prime || isotropic) {
      const LieFrameManifold m = canonical_with(C);
      const ConnectionCoeffs lc = levi_civita(m);
      const DenseTensor nabla_J = compute_nabla_J(m, lc);
      if (bianchi_r_prime) {
        ClassLabel w3;
        w3.label = NordenClass::QuasiKahlerW3;
        const TorsionPotential Q = compute_Q(m, lc, nabla_J, w3);
        const CurvatureTensor Rp = riemann(m, connection_prime(lc, Q.vec));
        parts.push_back(flatten(cyclic_sum3(Rp.t, {0, 1, 2})));
      }
      if (isotropic) parts.push_back(Eigen::VectorXd::Constant(1, square_norms(m, nabla_J).sq_norm));
    }
    Eigen::Index n = 0;
    for (const auto& p : parts) n += p.size();
    Eigen::VectorXd out(n);
    n = 0;
    for (const auto& p : parts) {
      out.segment(n, p.size()) = p;
      n += p.size();
    }
    return out;
  }

  // Gauss-Newton on constraints(a) = 0 with a0.a = a0.a0.
  Eigen::VectorXd project(const Eigen::VectorXd& a0, int max_iter = 100) const {
    Eigen::VectorXd a = a0;
    const Eigen::Index p = a.size();
    const double anchor = a0.dot(a0);
    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_a = a;
    for (int it = 0; it < max_iter; ++it) {
      const Eigen::VectorXd c = constraints(a);
      Eigen::VectorXd r(c.size() + 1);
      r << c, a0.dot(a) - anchor;
      const double size = r.cwiseAbs().maxCoeff();
      if (size < best) {
        best = size;
        best_a = a;
      }
      if (size < 1e-15) break;
      Eigen::MatrixXd jac(r.size(), p);
      for (Eigen::Index q = 0; q < p; ++q) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(p);
        e[q] = 1.0;
        jac.col(q).head(c.size()) = 0.5 * (constraints(a + e) - constraints(a - e));
      }
      jac.row(r.size() - 1) = a0.transpose();
      a -= jac.completeOrthogonalDecomposition().solve(r);
      if (!a.allFinite()) break;
    }
    return best_a;
  }
};

DenseTensor normalized(const DenseTensor& C) {
  const double m = C.max_abs();
  return m > 0.0 ? (1.0 / m) * C : C;
}

Eigen::VectorXd uniform_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

struct Family {
  std::vector<std::size_t> center;
  Problem problem;
};

// Brackets of the complement landing in a coordinate center; Jacobi is automatic.
std::vector<Family> nilpotent_families(std::size_t d) {
  std::vector<Family> out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << d); ++mask) {
    std::vector<std::size_t> center;
    for (std::size_t b = 0; b < d; ++b)
      if (mask >> b & 1) center.push_back(b);
    if (d - center.size() < 2) continue;
    std::vector<Param> ps;
    for (const Param& p : bracket_params(d))
      if ((mask >> p.k & 1) && !(mask >> p.i & 1) && !(mask >> p.j & 1)) ps.push_back(p);
    Eigen::MatrixXd N = null_space(w3_map(ps, d));
    if (N.cols() == 0) continue;
    // Drop families that are Kaehler throughout.
    bool nonflat = false;
    for (Eigen::Index c = 0; c < N.cols() && !nonflat; ++c) {
      const LieFrameManifold m = canonical_with(brackets_from(ps, N.col(c), d));
      nonflat = compute_F(m, compute_nabla_J(m, levi_civita(m))).max_abs() > 1e-8;
    }
    if (!nonflat) continue;
    Problem prob{ps, std::move(N), d, false, false};
    out.push_back({std::move(center), std::move(prob)});
  }
  return out;
}

std::string center_text(const std::vector<std::size_t>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::string("e") + std::to_string(c[i] + 1);
  return s;
}

}  // namespace

std::string_view to_string(SearchTarget t) {
  return t == SearchTarget::W3 ? "w3" : "w3-kahler-rprime";
}

SearchTarget parse_search_target(std::string_view s) {
  if (s == "w3") return SearchTarget::W3;
  if (s == "w3-kahler-rprime") return SearchTarget::W3RPrimeKahler;
  throw ArgumentError("unknown search target: " + std::string(s));
}

SearchResult search_w3_examples(const SearchConfig& cfg) {
  if (cfg.dim == 0 || cfg.dim % 2 != 0) throw ArgumentError("search dim must be even and positive");
  if (cfg.max_candidates == 0) throw ArgumentError("max_candidates must be positive");
  if (!(cfg.tolerance > 0.0) || !(cfg.jacobi_tolerance > 0.0))
    throw ArgumentError("tolerances must be positive");

  const std::size_t d = cfg.dim;
  const bool kahler = cfg.target == SearchTarget::W3RPrimeKahler;
  SearchResult result;
  SearchStatistics& st = result.stats;

  Problem full{bracket_params(d), {}, d, kahler, cfg.require_isotropic};
  full.basis = null_space(w3_map(full.params, d));
  st.parameters = full.params.size();
  st.w3_subspace_dim = static_cast<std::size_t>(full.basis.cols());

  // The nilpotent shortcut only serves the plain W3 target; extra curvature
  // constraints need the projection anyway.
  std::vector<Family> families;
  if (!kahler && !cfg.require_isotropic) families = nilpotent_families(d);
  st.nilpotent_families = families.size();
  if (full.basis.cols() == 0 && families.empty()) return result;

  std::mt19937_64 rng(cfg.seed);
  const std::string prefix = std::string(kahler ? "w3k" : "w3") + "_dim" + std::to_string(d) +
                             "_seed" + std::to_string(cfg.seed) + "_c";

  for (std::size_t c = 0; c < cfg.max_candidates; ++c) {
    if (cfg.max_results != 0 && result.manifests.size() >= cfg.max_results) break;
    ++st.candidates;
    DenseTensor C;
    std::string how;
    const bool use_family = !families.empty() && (c % 2 == 0 || full.basis.cols() == 0);
    if (use_family) {
      const Family& f = families[(c / 2) % families.size()];
      C = normalized(f.problem.brackets(uniform_vector(rng, f.problem.basis.cols())));
      how = "two-step nilpotent, center {" + center_text(f.center) + "}";
    } else {
      const Eigen::VectorXd a = full.project(uniform_vector(rng, full.basis.cols()));
      C = normalized(full.brackets(a));
      how = "W3 subspace projected onto the Jacobi variety";
      if (kahler) how += " with R' Kaehler";
      if (cfg.require_isotropic) how += ", isotropic";
    }

    if (jacobiator(C).max_abs() > cfg.jacobi_tolerance) {
      ++st.rejected_jacobi;
      continue;
    }
    LieFrameManifold m = canonical_with(C);
    if (!validate_manifold(m, {1e-12, cfg.jacobi_tolerance}).ok()) {
      ++st.rejected_class;
      continue;
    }
    const ConnectionCoeffs lc = levi_civita(m);
    const DenseTensor nabla_J = compute_nabla_J(m, lc);
    const ClassLabel label = classify(m, compute_F(m, nabla_J), cfg.tolerance);
    if (label.label != NordenClass::QuasiKahlerW3 || label.f_norm < cfg.min_f_norm) {
      ++st.rejected_class;
      continue;
    }
    if (kahler || cfg.require_isotropic) {
      const TorsionPotential Q = compute_Q(m, lc, nabla_J, label);
      const bool rk = riemann(m, connection_prime(lc, Q.vec), cfg.tolerance).is_kahler;
      const double norm = square_norms(m, nabla_J).sq_norm;
      if ((kahler && !rk) || (cfg.require_isotropic && std::abs(norm) > cfg.tolerance)) {
        ++st.rejected_curvature;
        continue;
      }
    }
    ++st.accepted;
    result.manifests.push_back({prefix + std::to_string(c), std::move(m), how});
  }
  return result;
}

LieFrameManifold random_norden_manifold(std::size_t dim, std::uint64_t seed) {
  if (dim == 0 || dim % 2 != 0) throw ArgumentError("dim must be even and positive");
  Problem all{bracket_params(dim), {}, dim, false, false};
  all.basis = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(all.params.size()),
                                        static_cast<Eigen::Index>(all.params.size()));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const DenseTensor C = normalized(all.brackets(all.project(uniform_vector(rng, all.basis.cols()))));
    LieFrameManifold m = canonical_with(C);
    if (C.max_abs() > 0.0 && validate_manifold(m).ok()) return m;
  }
  throw NumericError("could not project a random bracket onto the Jacobi variety");
}

}  // namespace norden
