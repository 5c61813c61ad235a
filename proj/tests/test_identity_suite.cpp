#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "norden/identity_suite.hpp"
#include "norden/manifest.hpp"

using namespace norden;

namespace {

const std::set<std::string> kClassFree{"LEVI_CIVITA", "R_CURVATURE_LIKE", "EQ_1_3", "EQ_1_5"};

}  // namespace

TEST_CASE("catalog ids are unique and anchored") {
  std::set<std::string_view> ids;
  for (const CheckSpec& c : catalog()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.anchor.empty());
  }
  CHECK(ids.size() == catalog().size());
}

TEST_CASE("flat example passes every check") {
  const VerificationReport r = run_suite(flat_kahler(4), "flat");
  CHECK(r.class_label.label == NordenClass::KahlerW0);
  REQUIRE(r.checks.size() == catalog().size());
  for (const auto& c : r.checks) {
    CAPTURE(c.check_id);
    CHECK(c.status == CheckStatus::Pass);
    CHECK(*c.residual <= 1e-12);
  }
  CHECK_FALSE(r.any_failure());
  REQUIRE(r.scalar_panel);
  CHECK(*r.scalar_panel == ScalarPanel{});
}

TEST_CASE("invalid manifolds raise with the validation outcome") {
  const LieFrameManifold bad(DenseTensor::zeros(4, 3), DenseTensor::identity(4),
                             canonical_complex_structure(4));
  try {
    run_suite(bad, "bad");
    FAIL("expected InvalidManifoldError");
  } catch (const InvalidManifoldError& e) {
    CHECK_FALSE(e.outcome().ok());
  }
  CHECK_THROWS_AS(run_suite(flat_kahler(4), "flat", 0.0), ArgumentError);
}

TEST_CASE("OTHER manifolds run only the class-free checks") {
  const VerificationReport r = run_suite(random_norden_manifold(4, 17), "other");
  CHECK(r.class_label.label == NordenClass::Other);
  CHECK_FALSE(r.scalar_panel);
  for (const auto& c : r.checks) {
    CAPTURE(c.check_id);
    if (kClassFree.count(c.check_id)) {
      CHECK(c.status == CheckStatus::Pass);
    } else {
      CHECK(c.status == CheckStatus::NotApplicable);
      CHECK(c.gate_reason == "class OTHER");
    }
  }
}

TEST_CASE("gating soundness: no PASS or FAIL with an unmet gate") {
  std::vector<ManifoldManifest> all = fixtures::w3_dim4();
  for (const auto& h : fixtures::w3_dim6()) all.push_back(h);
  for (const auto& h : fixtures::r_prime_kahler_dim4()) all.push_back(h);
  for (const auto& h : all) {
    const VerificationReport r = run_suite(h.manifold, h.id);
    const SuiteContext ctx = SuiteContext::build(h.manifold);
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      const CheckSpec& spec = catalog()[i];
      const CheckResult& c = r.checks[i];
      CHECK(c.check_id == spec.id);
      bool gate = true;
      if (spec.gate == Gate::RPrimeKahler || spec.gate == Gate::Dim4RPrimeKahler)
        gate = ctx.r_prime_kahler();
      if (spec.gate == Gate::Dim4RPrimeKahler) gate = gate && h.manifold.dim() == 4;
      CAPTURE(c.check_id);
      CHECK((c.status != CheckStatus::NotApplicable) == gate);
    }
  }
}

TEST_CASE("identities that hold on every W3 example") {
  const char* ids[] = {"LEVI_CIVITA", "R_CURVATURE_LIKE", "EQ_1_3", "EQ_1_5", "EQ_1_4", "EQ_1_13",
                       "EQ_1_14", "F_TRACES", "EQ_1_7", "ASSOC_NORM", "EQ_1_19", "Q_SKEW", "Q_TRACE",
                       "NATURAL_G", "NATURAL_J", "TORSION_2Q", "EQ_2_3", "R_PRIME_ANTISYMMETRY",
                       "R_PRIME_J_INVARIANT", "THM_2_1", "P_CURVATURE_LIKE", "H_KAHLER_TENSOR",
                       "EQ_3_3", "EQ_3_4"};
  for (const auto& h : fixtures::w3_dim4()) {
    const SuiteContext ctx = SuiteContext::build(h.manifold);
    for (const char* id : ids) {
      CAPTURE(id);
      CHECK(check_identity(id, ctx).status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("identities that hold when R' is Kaehler") {
  const char* ids[] = {"EQ_2_6", "EQ_2_7", "EQ_2_8", "BIANCHI_R_PRIME", "EQ_3_1", "EQ_3_2",
                       "EQ_3_5", "EQ_3_10", "EQ_3_12"};
  REQUIRE_FALSE(fixtures::r_prime_kahler_dim4().empty());
  for (const auto& h : fixtures::r_prime_kahler_dim4()) {
    const SuiteContext ctx = SuiteContext::build(h.manifold);
    REQUIRE(ctx.r_prime_kahler());
    for (const char* id : ids) {
      CAPTURE(id);
      CHECK(check_identity(id, ctx).status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("EQ_1_15 holds with the opposite sign") {
  for (const auto& h : fixtures::w3_dim4()) {
    const VerificationReport r = run_suite(h.manifold, h.id);
    for (const auto& [name, value] : r.diagnostics)
      if (name == "eq_1_15_opposite_sign_residual") CHECK(value <= 1e-12);
    CHECK(r.find("EQ_1_15")->status == CheckStatus::Fail);
  }
}

TEST_CASE("unknown check id") {
  const SuiteContext ctx = SuiteContext::build(flat_kahler(4));
  CHECK_THROWS_AS(check_identity("NO_SUCH_CHECK", ctx), ArgumentError);
}

TEST_CASE("reports are deterministic") {
  const auto& h = fixtures::w3_dim4().front();
  const auto a = emit_report(run_suite(h.manifold, h.id), ReportFormat::Structured);
  const auto b = emit_report(run_suite(h.manifold, h.id), ReportFormat::Structured);
  CHECK(a == b);
}
