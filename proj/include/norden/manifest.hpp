#pragma once

// Manifold manifests and verification reports on disk.
//
// Both are JSON with a fixed key order and doubles written with 17
// significant digits, so a value survives a write/read cycle bit for bit and
// two writes of the same object are byte-identical.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "norden/identity_suite.hpp"
#include "norden/manifold.hpp"

namespace norden {

struct ManifoldManifest {
  std::string id;
  LieFrameManifold manifold;
  std::optional<std::string> description;

  friend bool operator==(const ManifoldManifest&, const ManifoldManifest&) = default;
};

class ManifestError : public std::runtime_error {
 public:
  enum class Code { MissingFile, Syntax, ShapeMismatch };

  ManifestError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Parses manifest text. The result need not validate; that is checked later.
ManifoldManifest parse_manifest(std::string_view text);
ManifoldManifest load_manifest(const std::filesystem::path& path);

/// Keys in order: id, dim, structure_constants ([k][i][j]), metric, J, description.
std::string serialize_manifest(const ManifoldManifest& manifest);
void save_manifest(const ManifoldManifest& manifest, const std::filesystem::path& path);

/// "%.17g"; the input must be finite.
std::string format_number(double x);

enum class ReportFormat { Text, Structured };

/// Timing is never written, so equal reports give equal bytes.
std::string emit_report(const VerificationReport& report, ReportFormat format);

/// Reads a STRUCTURED report back. Elapsed times come back as zero.
VerificationReport parse_report(std::string_view text);

}  // namespace norden
