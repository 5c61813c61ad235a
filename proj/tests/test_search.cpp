#include <doctest.h>

#include "norden/search.hpp"

using namespace norden;

TEST_CASE("config errors") {
  SearchConfig cfg;
  cfg.max_candidates = 0;
  CHECK_THROWS_AS(search_w3_examples(cfg), ArgumentError);
  cfg = {};
  cfg.dim = 5;
  CHECK_THROWS_AS(search_w3_examples(cfg), ArgumentError);
  CHECK_THROWS_AS(parse_search_target("w4"), ArgumentError);
  CHECK(parse_search_target("w3-kahler-rprime") == SearchTarget::W3RPrimeKahler);
}

TEST_CASE("seeded search is reproducible") {
  SearchConfig cfg;
  cfg.max_results = 3;
  const auto a = search_w3_examples(cfg);
  const auto b = search_w3_examples(cfg);
  REQUIRE(a.manifests.size() == 3);
  CHECK(a.manifests == b.manifests);
  cfg.seed = 43;
  CHECK_FALSE(search_w3_examples(cfg).manifests == a.manifests);
}

TEST_CASE("every hit re-validates and classifies W3 after a reload") {
  for (std::size_t dim : {4u, 6u}) {
    SearchConfig cfg;
    cfg.dim = dim;
    cfg.max_results = 4;
    const auto res = search_w3_examples(cfg);
    CHECK(res.stats.accepted == res.manifests.size());
    CHECK(res.stats.w3_subspace_dim == (dim == 4 ? 12u : 54u));
    for (const auto& h : res.manifests) {
      const ManifoldManifest back = parse_manifest(serialize_manifest(h));
      CHECK(validate_manifold(back.manifold).ok());
      const auto lc = levi_civita(back.manifold);
      const ClassLabel label = classify(back.manifold, compute_F(back.manifold, compute_nabla_J(back.manifold, lc)));
      CHECK(label.label == NordenClass::QuasiKahlerW3);
      CHECK(label.f_norm >= cfg.min_f_norm);
      CHECK(back.manifold.structure_constants().max_abs() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("nilpotent families exist in dimension 6 but not 4") {
  SearchConfig cfg;
  cfg.max_results = 1;
  CHECK(search_w3_examples(cfg).stats.nilpotent_families == 0);
  cfg.dim = 6;
  const auto res = search_w3_examples(cfg);
  CHECK(res.stats.nilpotent_families > 0);
  REQUIRE_FALSE(res.manifests.empty());
  // Candidate 0 comes from a family, so its brackets land in the center.
  CHECK(res.manifests.front().description->find("nilpotent") != std::string::npos);
}

TEST_CASE("R' Kaehler target yields R' Kaehler hits") {
  SearchConfig cfg;
  cfg.target = SearchTarget::W3RPrimeKahler;
  cfg.max_results = 2;
  const auto res = search_w3_examples(cfg);
  REQUIRE(res.manifests.size() == 2);
  for (const auto& h : res.manifests) {
    const auto& m = h.manifold;
    const auto lc = levi_civita(m);
    const DenseTensor nJ = compute_nabla_J(m, lc);
    const ClassLabel label = classify(m, compute_F(m, nJ));
    const TorsionPotential Q = compute_Q(m, lc, nJ, label);
    CHECK(riemann(m, connection_prime(lc, Q.vec)).is_kahler);
  }
}

TEST_CASE("isotropic R' Kaehler hits have vanishing norm") {
  SearchConfig cfg;
  cfg.target = SearchTarget::W3RPrimeKahler;
  cfg.require_isotropic = true;
  cfg.max_results = 1;
  cfg.max_candidates = 200;
  const auto res = search_w3_examples(cfg);
  REQUIRE(res.manifests.size() == 1);
  const auto& m = res.manifests.front().manifold;
  CHECK(std::abs(square_norms(m, compute_nabla_J(m, levi_civita(m))).sq_norm) <= 1e-9);
}

TEST_CASE("an exhausted budget is not an error") {
  SearchConfig cfg;
  cfg.max_candidates = 1;
  cfg.min_f_norm = 1e9;  // nothing can pass
  const auto res = search_w3_examples(cfg);
  CHECK(res.manifests.empty());
  CHECK(res.stats.candidates == 1);
  CHECK(res.stats.rejected_class + res.stats.rejected_jacobi == 1);
}
