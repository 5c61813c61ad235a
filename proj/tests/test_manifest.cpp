#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "norden/manifest.hpp"

using namespace norden;
namespace fs = std::filesystem;

namespace {

const fs::path kBundled = fs::path(NORDEN_DATA_DIR) / "flat_kahler_4.manifest";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("bundled flat manifest parses to the canonical flat example") {
  const ManifoldManifest m = load_manifest(kBundled);
  CHECK(m.id == "flat_kahler_4");
  CHECK(m.manifold == flat_kahler(4));
  CHECK(m.description.has_value());
}

TEST_CASE("manifest errors carry a code") {
  const std::string good = serialize_manifest({"x", flat_kahler(4), std::nullopt});
  auto code_of = [](const std::string& text) {
    try {
      parse_manifest(text);
    } catch (const ManifestError& e) {
      return static_cast<int>(e.code());
    }
    return -1;
  };
  const std::string three = "[[1, 0, 0], [0, 1, 0], [0, 0, -1]]";
  const std::string four = "[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]";
  CHECK(code_of(replace(good, four, three)) == static_cast<int>(ManifestError::Code::ShapeMismatch));
  CHECK(code_of("{\"id\": ") == static_cast<int>(ManifestError::Code::Syntax));
  CHECK(code_of(replace(good, "\"dim\"", "\"dimension\"")) ==
        static_cast<int>(ManifestError::Code::Syntax));
  CHECK(code_of(replace(good, "\"dim\": 4", "\"dim\": 3")) ==
        static_cast<int>(ManifestError::Code::ShapeMismatch));
  try {
    load_manifest("/nonexistent/none.manifest");
    FAIL("expected ManifestError");
  } catch (const ManifestError& e) {
    CHECK(e.code() == ManifestError::Code::MissingFile);
  }
}

TEST_CASE("serialization has the fixed key order") {
  const std::string s = serialize_manifest({"x", flat_kahler(4), "d"});
  std::size_t last = 0;
  for (const char* key : {"\"id\"", "\"dim\"", "\"structure_constants\"", "\"metric\"", "\"J\"",
                          "\"description\""}) {
    const auto pos = s.find(key);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= last);
    last = pos;
  }
}

TEST_CASE("numbers round-trip bit for bit") {
  for (double x : {0.1, 1.0 / 3.0, -2.2250738585072014e-308, 1e300, 0.0, -0.0, 123456789.123456789}) {
    CHECK(same_bits(std::stod(format_number(x)), x));
  }
  CHECK_THROWS_AS(format_number(INFINITY), NumericError);
}

TEST_CASE("search manifests round-trip and give identical reports") {
  for (const auto& h : fixtures::w3_dim4()) {
    const std::string text = serialize_manifest(h);
    const ManifoldManifest back = parse_manifest(text);
    CHECK(back == h);
    CHECK(serialize_manifest(back) == text);
    CHECK(emit_report(run_suite(back.manifold, back.id), ReportFormat::Structured) ==
          emit_report(run_suite(h.manifold, h.id), ReportFormat::Structured));
  }
}

TEST_CASE("save and load through a file") {
  const auto& h = fixtures::w3_dim4().front();
  const fs::path p = fs::temp_directory_path() / "norden_manifest_roundtrip.manifest";
  save_manifest(h, p);
  CHECK(load_manifest(p) == h);
  fs::remove(p);
}

TEST_CASE("structured report reloads field for field") {
  std::vector<ManifoldManifest> cases{{"flat", flat_kahler(4), std::nullopt}};
  cases.push_back(fixtures::w3_dim4().front());
  cases.push_back({"other", random_norden_manifold(4, 8), std::nullopt});
  for (const auto& h : cases) {
    const VerificationReport r = run_suite(h.manifold, h.id);
    const std::string text = emit_report(r, ReportFormat::Structured);
    const VerificationReport back = parse_report(text);
    CHECK(back.manifold_id == r.manifold_id);
    CHECK(back.suite_version == r.suite_version);
    CHECK(back.tolerance == r.tolerance);
    CHECK(back.class_label.label == r.class_label.label);
    CHECK(back.class_label.f_norm == r.class_label.f_norm);
    CHECK(back.scalar_panel == r.scalar_panel);
    CHECK(back.diagnostics == r.diagnostics);
    REQUIRE(back.checks.size() == r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      CHECK(back.checks[i].check_id == r.checks[i].check_id);
      CHECK(back.checks[i].anchor == r.checks[i].anchor);
      CHECK(back.checks[i].residual == r.checks[i].residual);
      CHECK(back.checks[i].status == r.checks[i].status);
      CHECK(back.checks[i].gate_reason == r.checks[i].gate_reason);
    }
    CHECK(emit_report(back, ReportFormat::Structured) == text);
  }
}

TEST_CASE("text report lists every check") {
  const VerificationReport r = run_suite(flat_kahler(4), "flat");
  const std::string t = emit_report(r, ReportFormat::Text);
  for (const auto& c : r.checks) CHECK(t.find(c.check_id) != std::string::npos);
  CHECK(t.find("FAIL") == std::string::npos);
}
