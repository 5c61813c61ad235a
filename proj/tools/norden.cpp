// norden: verify manifold manifests against the identity catalog and search
// for quasi-Kaehler examples.
//
// Exit codes: 0 every check PASS or NA, 1 some check FAIL, 2 input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "norden/manifest.hpp"
#include "norden/search.hpp"

namespace fs = std::filesystem;
using namespace norden;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

// A bare name such as "flat_kahler_4" refers to a bundled manifest.
fs::path resolve_manifest(const std::string& arg) {
  const fs::path direct(arg);
  if (fs::exists(direct)) return direct;
  const fs::path bundled = fs::path(NORDEN_DATA_DIR) / (arg + ".manifest");
  if (direct.extension().empty() && fs::exists(bundled)) return bundled;
  return direct;
}

double tolerance_from_env() {
  const char* env = std::getenv("NORDEN_TOLERANCE");
  if (!env || !*env) return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0)) throw ArgumentError("NORDEN_TOLERANCE must be a positive number");
  return v;
}

int verify(const std::string& target, std::optional<double> tolerance, const std::string& format) {
  const ManifoldManifest manifest = load_manifest(resolve_manifest(target));
  const double tol = tolerance ? *tolerance : tolerance_from_env();
  const VerificationReport report = run_suite(manifest.manifold, manifest.id, tol);
  std::cout << emit_report(report, format == "json" ? ReportFormat::Structured : ReportFormat::Text);
  return report.any_failure() ? kExitFail : 0;
}

int search(SearchConfig cfg, const std::string& out_dir) {
  const SearchResult result = search_w3_examples(cfg);
  const SearchStatistics& s = result.stats;
  std::cout << "target " << to_string(cfg.target) << ", dim " << cfg.dim << ", seed " << cfg.seed
            << "\n"
            << "bracket parameters      " << s.parameters << "\n"
            << "W3 subspace dimension   " << s.w3_subspace_dim << "\n"
            << "nilpotent families      " << s.nilpotent_families << "\n"
            << "candidates tried        " << s.candidates << "\n"
            << "rejected (Jacobi)       " << s.rejected_jacobi << "\n"
            << "rejected (class)        " << s.rejected_class << "\n"
            << "rejected (curvature)    " << s.rejected_curvature << "\n"
            << "accepted                " << s.accepted << "\n";
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (const ManifoldManifest& m : result.manifests) {
    std::cout << "  " << m.id;
    if (m.description) std::cout << "  (" << *m.description << ")";
    std::cout << "\n";
    if (!out_dir.empty()) save_manifest(m, fs::path(out_dir) / (m.id + ".manifest"));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identity verification for quasi-Kaehler manifolds with Norden metric"};
  app.require_subcommand(1);

  std::string verify_target;
  std::optional<double> verify_tol;
  std::string format = "text";
  auto* v = app.add_subcommand("verify", "Run the identity catalog on a manifest");
  v->add_option("manifest", verify_target, "Manifest path or bundled name (e.g. flat_kahler_4)")
      ->required();
  v->add_option("--tolerance", verify_tol, "Residual tolerance (overrides NORDEN_TOLERANCE)")
      ->check(CLI::PositiveNumber);
  v->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  SearchConfig cfg;
  std::string target = "w3";
  std::string out_dir;
  auto* s = app.add_subcommand("search", "Search for W3 examples on the canonical Norden pair");
  s->add_option("--dim", cfg.dim, "Even dimension")->capture_default_str();
  s->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  s->add_option("--max-candidates", cfg.max_candidates, "Candidate budget")->capture_default_str();
  s->add_option("--max-results", cfg.max_results, "Stop after this many hits (0: no limit)")
      ->capture_default_str();
  s->add_option("--target", target, "Search target")
      ->check(CLI::IsMember({"w3", "w3-kahler-rprime"}))
      ->capture_default_str();
  s->add_option("--out", out_dir, "Directory for emitted manifests");

  auto* d = app.add_subcommand("demo", "Verify the bundled flat Kaehler example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*v) return verify(verify_target, verify_tol, format);
    if (*s) {
      cfg.target = parse_search_target(target);
      return search(cfg, out_dir);
    }
    if (*d) return verify("flat_kahler_4", std::nullopt, "text");
  } catch (const InvalidManifoldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ManifestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
