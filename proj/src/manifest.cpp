#include "norden/manifest.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace norden {
namespace {

using nlohmann::json;

[[noreturn]] void shape_error(const std::string& what) {
  throw ManifestError(ManifestError::Code::ShapeMismatch, what);
}

std::vector<double> read_numbers(const json& node, std::size_t depth, std::size_t dim,
                                 const std::string& key) {
  std::vector<double> out;
  const auto walk = [&](const auto& self, const json& n, std::size_t level) -> void {
    if (level == depth) {
      if (!n.is_number()) shape_error(key + ": expected a number");
      out.push_back(n.get<double>());
      return;
    }
    if (!n.is_array() || n.size() != dim)
      shape_error(key + ": expected an array of length " + std::to_string(dim));
    for (const auto& child : n) self(self, child, level + 1);
  };
  walk(walk, node, 0);
  return out;
}

const json& require(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end())
    throw ManifestError(ManifestError::Code::Syntax, std::string("missing key \"") + key + "\"");
  return *it;
}

void quote(std::string& out, std::string_view s) { out += json(std::string(s)).dump(); }

void append_tensor(std::string& out, const DenseTensor& t) {
  const auto c = t.components();
  const std::size_t n = t.dim();
  std::size_t k = 0;
  const auto rec = [&](const auto& self, std::size_t level) -> void {
    if (level == t.rank()) {
      out += format_number(c[k++]);
      return;
    }
    out += '[';
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += ", ";
      self(self, level + 1);
    }
    out += ']';
  };
  rec(rec, 0);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ManifestError(ManifestError::Code::MissingFile, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << text;
}

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) throw NumericError("cannot serialize a non-finite number");
  // A bare "-0" would come back as the integer 0.
  if (x == 0.0 && std::signbit(x)) return "-0.0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ManifoldManifest parse_manifest(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifestError(ManifestError::Code::Syntax, e.what());
  }
  if (!doc.is_object()) throw ManifestError(ManifestError::Code::Syntax, "manifest is not an object");

  const json& id = require(doc, "id");
  const json& dim_node = require(doc, "dim");
  if (!id.is_string()) throw ManifestError(ManifestError::Code::Syntax, "id must be a string");
  if (!dim_node.is_number_unsigned() || dim_node.get<std::size_t>() == 0)
    throw ManifestError(ManifestError::Code::Syntax, "dim must be a positive integer");
  const auto dim = dim_node.get<std::size_t>();
  if (dim % 2 != 0) shape_error("dim must be even");

  auto C = read_numbers(require(doc, "structure_constants"), 3, dim, "structure_constants");
  auto g = read_numbers(require(doc, "metric"), 2, dim, "metric");
  auto J = read_numbers(require(doc, "J"), 2, dim, "J");

  std::optional<std::string> description;
  if (const auto it = doc.find("description"); it != doc.end() && !it->is_null()) {
    if (!it->is_string())
      throw ManifestError(ManifestError::Code::Syntax, "description must be a string");
    description = it->get<std::string>();
  }
  LieFrameManifold m(DenseTensor(dim, 3, std::move(C)), DenseTensor(dim, 2, std::move(g)),
                     DenseTensor(dim, 2, std::move(J)));
  return {id.get<std::string>(), std::move(m), std::move(description)};
}

ManifoldManifest load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_file(path));
}

std::string serialize_manifest(const ManifoldManifest& manifest) {
  const LieFrameManifold& m = manifest.manifold;
  std::string out = "{\n  \"id\": ";
  quote(out, manifest.id);
  out += ",\n  \"dim\": " + std::to_string(m.dim());
  out += ",\n  \"structure_constants\": ";
  append_tensor(out, m.structure_constants());
  out += ",\n  \"metric\": ";
  append_tensor(out, m.metric());
  out += ",\n  \"J\": ";
  append_tensor(out, m.complex_structure());
  if (manifest.description) {
    out += ",\n  \"description\": ";
    quote(out, *manifest.description);
  }
  out += "\n}\n";
  return out;
}

void save_manifest(const ManifoldManifest& manifest, const std::filesystem::path& path) {
  write_file(path, serialize_manifest(manifest));
}

namespace {

constexpr std::array<std::pair<const char*, double ScalarPanel::*>, 10> kPanelFields{{
    {"tau", &ScalarPanel::tau},
    {"tau_star", &ScalarPanel::tau_star},
    {"tau_prime", &ScalarPanel::tau_prime},
    {"tau_prime_star", &ScalarPanel::tau_prime_star},
    {"tau_P", &ScalarPanel::tau_P},
    {"tau_star_P", &ScalarPanel::tau_star_P},
    {"tau_H", &ScalarPanel::tau_H},
    {"tau_star_H", &ScalarPanel::tau_star_H},
    {"sq_norm_nablaJ", &ScalarPanel::sq_norm_nablaJ},
    {"assoc_sq_norm_nablaJ", &ScalarPanel::assoc_sq_norm_nablaJ},
}};

constexpr std::array<std::pair<const char*, double ClassLabel::*>, 4> kLabelFields{{
    {"f_norm", &ClassLabel::f_norm},
    {"w3_residual", &ClassLabel::w3_residual},
    {"jx_cyclic_residual", &ClassLabel::jx_cyclic_residual},
    {"vector_residual", &ClassLabel::vector_residual},
}};

NordenClass class_from_string(std::string_view s) {
  for (auto c : {NordenClass::KahlerW0, NordenClass::QuasiKahlerW3, NordenClass::Other})
    if (to_string(c) == s) return c;
  throw ManifestError(ManifestError::Code::Syntax, "unknown class " + std::string(s));
}

CheckStatus status_from_string(std::string_view s) {
  for (auto c : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::NotApplicable})
    if (to_string(c) == s) return c;
  throw ManifestError(ManifestError::Code::Syntax, "unknown status " + std::string(s));
}

std::string structured(const VerificationReport& r) {
  std::string out = "{\n  \"manifold_id\": ";
  quote(out, r.manifold_id);
  out += ",\n  \"suite_version\": ";
  quote(out, r.suite_version);
  out += ",\n  \"tolerance\": " + format_number(r.tolerance);
  out += ",\n  \"class\": ";
  quote(out, to_string(r.class_label.label));
  out += ",\n  \"class_residuals\": {";
  for (std::size_t i = 0; i < kLabelFields.size(); ++i) {
    out += i ? ", \"" : "\"";
    out += kLabelFields[i].first;
    out += "\": " + format_number(r.class_label.*kLabelFields[i].second);
  }
  out += "},\n  \"scalars\": ";
  if (!r.scalar_panel) {
    out += "null";
  } else {
    out += "{";
    for (std::size_t i = 0; i < kPanelFields.size(); ++i) {
      out += i ? ",\n    \"" : "\n    \"";
      out += kPanelFields[i].first;
      out += "\": " + format_number(*r.scalar_panel.*kPanelFields[i].second);
    }
    out += "\n  }";
  }
  out += ",\n  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const CheckResult& c = r.checks[i];
    out += i ? ",\n    {\"id\": " : "\n    {\"id\": ";
    quote(out, c.check_id);
    out += ", \"anchor\": ";
    quote(out, c.anchor);
    out += ", \"residual\": " + (c.residual ? format_number(*c.residual) : std::string("null"));
    out += ", \"tolerance\": " + format_number(c.tolerance);
    out += ", \"status\": ";
    quote(out, to_string(c.status));
    out += ", \"gate\": ";
    quote(out, c.gate_reason);
    out += "}";
  }
  out += r.checks.empty() ? "]" : "\n  ]";
  out += ",\n  \"diagnostics\": {";
  for (std::size_t i = 0; i < r.diagnostics.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    quote(out, r.diagnostics[i].first);
    out += ": " + format_number(r.diagnostics[i].second);
  }
  out += r.diagnostics.empty() ? "}" : "\n  }";
  out += "\n}\n";
  return out;
}

std::string text_table(const VerificationReport& r) {
  std::ostringstream os;
  char line[256];
  os << "manifold: " << r.manifold_id << "\n";
  os << "class:    " << to_string(r.class_label.label) << "  (max|F| = "
     << format_number(r.class_label.f_norm) << ")\n";
  os << "suite:    " << r.suite_version << "  tolerance " << format_number(r.tolerance) << "\n";
  if (r.scalar_panel) {
    os << "\nscalars\n";
    for (const auto& [name, field] : kPanelFields) {
      std::snprintf(line, sizeof line, "  %-22s % .17g\n", name, *r.scalar_panel.*field);
      os << line;
    }
  }
  os << "\n";
  std::snprintf(line, sizeof line, "%-24s %-6s %-24s %s\n", "check", "status", "residual", "anchor");
  os << line;
  for (const auto& c : r.checks) {
    const std::string res = c.residual ? format_number(*c.residual) : "-";
    std::snprintf(line, sizeof line, "%-24s %-6s %-24s ", c.check_id.c_str(),
                  std::string(to_string(c.status)).c_str(), res.c_str());
    os << line << c.anchor;
    if (!c.gate_reason.empty()) os << "  [" << c.gate_reason << "]";
    os << "\n";
  }
  if (!r.diagnostics.empty()) {
    os << "\ndiagnostics\n";
    for (const auto& [name, value] : r.diagnostics) {
      std::snprintf(line, sizeof line, "  %-36s % .17g\n", name.c_str(), value);
      os << line;
    }
  }
  return os.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::Structured ? structured(report) : text_table(report);
}

VerificationReport parse_report(std::string_view text) {
  nlohmann::ordered_json doc;  // diagnostics keep their written order
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifestError(ManifestError::Code::Syntax, e.what());
  }
  try {
    VerificationReport r;
    r.manifold_id = doc.at("manifold_id").get<std::string>();
    r.suite_version = doc.at("suite_version").get<std::string>();
    r.tolerance = doc.at("tolerance").get<double>();
    r.class_label.label = class_from_string(doc.at("class").get<std::string>());
    const auto& labels = doc.at("class_residuals");
    for (const auto& [name, field] : kLabelFields) r.class_label.*field = labels.at(name).get<double>();
    if (const auto& s = doc.at("scalars"); !s.is_null()) {
      ScalarPanel p;
      for (const auto& [name, field] : kPanelFields) p.*field = s.at(name).get<double>();
      r.scalar_panel = p;
    }
    for (const auto& c : doc.at("checks")) {
      CheckResult cr;
      cr.check_id = c.at("id").get<std::string>();
      cr.anchor = c.at("anchor").get<std::string>();
      if (!c.at("residual").is_null()) cr.residual = c.at("residual").get<double>();
      cr.tolerance = c.at("tolerance").get<double>();
      cr.status = status_from_string(c.at("status").get<std::string>());
      cr.gate_reason = c.at("gate").get<std::string>();
      r.checks.push_back(std::move(cr));
    }
    for (const auto& [name, value] : doc.at("diagnostics").items())
      r.diagnostics.emplace_back(name, value.get<double>());
    return r;
  } catch (const json::exception& e) {
    throw ManifestError(ManifestError::Code::Syntax, e.what());
  }
}

}  // namespace norden
