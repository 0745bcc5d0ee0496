#include "lockcert/documents.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "json_text.hpp"
#include "lockcert/error.hpp"

namespace lockcert {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": malformed JSON");
  }
}

[[noreturn]] void field_error(const std::string& path, const char* expected) {
  throw Error(ErrorCode::ParseError, "field '" + path + "': expected " + expected);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::ParseError, "field '" + path + key + "': missing");
  return *it;
}

const json* optional_member(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

double as_number(const json& value, const std::string& path) {
  if (!value.is_number()) field_error(path, "a number");
  return value.get<double>();
}

int as_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) field_error(path, "an integer");
  return value.get<int>();
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) field_error(path, "a string");
  return value.get<std::string>();
}

bool as_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) field_error(path, "a boolean");
  return value.get<bool>();
}

std::vector<double> as_numbers(const json& value, const std::string& path) {
  if (!value.is_array()) field_error(path, "an array of numbers");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_number(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& path) {
  const json* v = optional_member(obj, key);
  if (v == nullptr) return std::nullopt;
  return as_number(*v, path + key);
}

std::optional<int> optional_int(const json& obj, const std::string& key, const std::string& path) {
  const json* v = optional_member(obj, key);
  if (v == nullptr) return std::nullopt;
  return as_int(*v, path + key);
}

void require_object(const json& root) {
  if (!root.is_object()) throw Error(ErrorCode::ParseError, "line 1: document must be an object");
}

void require_schema(const json& root) {
  const int version = as_int(member(root, "schema_version", ""), "schema_version");
  if (version != kSchemaVersion) {
    throw Error(ErrorCode::ValidationError,
                "unsupported schema_version " + std::to_string(version));
  }
}

std::string document_kind(const json& root) {
  const json* kind = optional_member(root, "kind");
  return kind == nullptr ? std::string() : as_string(*kind, "kind");
}

ordered_json optional_to_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

ChainSpecDocument parse_chain_spec(std::string_view text) {
  const json root = parse_json(text);
  require_object(root);
  require_schema(root);
  const std::string kind = document_kind(root);
  if (!kind.empty() && kind != "chain") {
    throw Error(ErrorCode::ValidationError, "expected a chain document, got kind '" + kind + "'");
  }

  ChainSpecDocument doc;
  doc.chain.n = as_int(member(root, "n", ""), "n");
  doc.chain.lambda = optional_int(root, "lambda", "");
  doc.tol = optional_number(root, "tol", "");
  if (doc.tol && !(*doc.tol > 0.0)) throw Error(ErrorCode::ValidationError, "tol must be positive");

  const json& ifaces = member(root, "interfaces", "");
  if (!ifaces.is_array()) field_error("interfaces", "an array");
  for (std::size_t i = 0; i < ifaces.size(); ++i) {
    const std::string path = "interfaces[" + std::to_string(i) + "].";
    const json& item = ifaces[i];
    if (!item.is_object()) field_error(path.substr(0, path.size() - 1), "an object");
    InterfaceData iface;
    const json* name = optional_member(item, "name");
    iface.name = name ? as_string(*name, path + "name") : "Sigma_" + std::to_string(i + 1);
    iface.samples_minus = as_numbers(member(item, "samples_minus", path), path + "samples_minus");
    iface.samples_plus = as_numbers(member(item, "samples_plus", path), path + "samples_plus");
    iface.bound_low_minus = optional_number(item, "bound_low_minus", path);
    iface.bound_up_plus = optional_number(item, "bound_up_plus", path);
    doc.chain.interfaces.push_back(std::move(iface));
  }
  validate_structure(doc.chain);
  return doc;
}

std::string serialize_chain_spec(const ChainSpecDocument& doc) {
  ordered_json root;
  root["schema_version"] = kSchemaVersion;
  root["kind"] = "chain";
  root["n"] = doc.chain.n;
  root["lambda"] = doc.chain.lambda ? ordered_json(*doc.chain.lambda) : ordered_json(nullptr);
  root["tol"] = optional_to_json(doc.tol);
  ordered_json ifaces = ordered_json::array();
  for (const auto& iface : doc.chain.interfaces) {
    ordered_json item;
    item["name"] = iface.name;
    item["samples_minus"] = iface.samples_minus;
    item["samples_plus"] = iface.samples_plus;
    item["bound_low_minus"] = optional_to_json(iface.bound_low_minus);
    item["bound_up_plus"] = optional_to_json(iface.bound_up_plus);
    ifaces.push_back(std::move(item));
  }
  root["interfaces"] = std::move(ifaces);
  return detail::to_text(root);
}

RadialProfile parse_profile_spec(std::string_view text) {
  const json root = parse_json(text);
  require_object(root);
  require_schema(root);
  ProfileBuilder builder(as_int(member(root, "n", ""), "n"));
  if (const json* start = optional_member(root, "start")) {
    builder.start(as_number(member(*start, "s", "start."), "start.s"),
                  as_number(member(*start, "f", "start."), "start.f"));
  }
  const json& pieces = member(root, "pieces", "");
  if (!pieces.is_array() || pieces.empty()) field_error("pieces", "a non-empty array");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string path = "pieces[" + std::to_string(i) + "].";
    const json& item = pieces[i];
    if (!item.is_object()) field_error(path.substr(0, path.size() - 1), "an object");
    const std::string kind = as_string(member(item, "kind", path), path + "kind");
    if (kind == "cap") {
      builder.cap(as_number(member(item, "s_end", path), path + "s_end"));
    } else if (kind == "linear") {
      const double slope = as_number(member(item, "slope", path), path + "slope");
      const auto s_end = optional_number(item, "s_end", path);
      const auto f_end = optional_number(item, "f_end", path);
      if (s_end && f_end) {
        throw Error(ErrorCode::ValidationError, path + "s_end and f_end are exclusive");
      }
      if (s_end) {
        builder.linear_to_s(slope, *s_end);
      } else if (f_end) {
        builder.linear_to_f(slope, *f_end);
      } else {
        builder.linear_end(slope);
      }
    } else if (kind == "schwarzschild") {
      const auto mass = optional_number(item, "mass", path);
      const auto slope = optional_number(item, "slope", path);
      if (mass.has_value() == slope.has_value()) {
        throw Error(ErrorCode::ValidationError, path + "give exactly one of mass, slope");
      }
      if (mass) {
        builder.schwarzschild_mass(*mass);
      } else {
        builder.schwarzschild_slope(*slope);
      }
    } else {
      throw Error(ErrorCode::ValidationError, path + "kind: unknown piece kind '" + kind + "'");
    }
  }
  return builder.build();
}

bool is_lemma_document(std::string_view text) {
  const json root = parse_json(text);
  return root.is_object() && root.contains("kind") && root["kind"] == "lemma";
}

LemmaInput parse_lemma_spec(std::string_view text) {
  const json root = parse_json(text);
  require_object(root);
  require_schema(root);
  if (document_kind(root) != "lemma") {
    throw Error(ErrorCode::ValidationError, "expected a lemma document");
  }
  LemmaInput input;
  input.h_low_minus = as_number(member(root, "h_low_minus", ""), "h_low_minus");
  input.h_bar_plus = as_number(member(root, "h_bar_plus", ""), "h_bar_plus");
  input.a = as_number(member(root, "a", ""), "a");
  const json& samples = member(root, "samples", "");
  if (!samples.is_array() || samples.empty()) field_error("samples", "a non-empty array");
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const std::string path = "samples[" + std::to_string(k) + "]";
    const auto pair = as_numbers(samples[k], path);
    if (pair.size() != 2) field_error(path, "a pair [H-, H+]");
    input.samples.push_back({pair[0], pair[1]});
  }
  if (!(input.h_low_minus > 0.0) || !(input.h_bar_plus > 0.0) || input.a < 0.0) {
    throw Error(ErrorCode::ValidationError, "lemma bounds must be positive and a nonnegative");
  }
  return input;
}

std::string serialize_certificate(const LockCertificate& cert) {
  ordered_json root;
  root["schema_version"] = kSchemaVersion;
  root["kind"] = "certificate";
  root["verdict"] = std::string(to_string(cert.verdict));
  root["reason"] = cert.reason;
  root["failed_interface"] =
      cert.failed_interface ? ordered_json(*cert.failed_interface) : ordered_json(nullptr);
  root["n"] = cert.n;
  root["tol"] = cert.tol;
  root["scale"] = cert.scale;
  root["square_sum"] = cert.hypotheses.square_sum;

  const auto& h = cert.hypotheses;
  ordered_json hyp;
  hyp["outcome"] = std::string(to_string(h.outcome));
  hyp["reject_reason"] = std::string(to_string(h.reason));
  hyp["positivity_ok"] = h.positivity_ok;
  hyp["lambda_pattern_ok"] = h.lambda_pattern_ok;
  hyp["lambda"] = h.lambda ? ordered_json(*h.lambda) : ordered_json(nullptr);
  hyp["lambda_candidates"] = h.lambda_candidates;
  hyp["square_sum_ok"] = h.square_sum_ok;
  root["hypotheses"] = std::move(hyp);

  ordered_json ledger;
  ledger["d"] = cert.ledger.d;
  ledger["c"] = cert.ledger.c;
  ledger["lambda_prime"] =
      cert.ledger.lambda_prime ? ordered_json(*cert.ledger.lambda_prime) : ordered_json(nullptr);
  root["ledger"] = std::move(ledger);
  root["k_factors"] = cert.k_factors;

  ordered_json ifaces = ordered_json::array();
  for (const auto& r : cert.interfaces) {
    ordered_json item;
    item["name"] = r.name;
    item["a"] = r.a;
    item["effective_low"] = r.effective_low;
    item["effective_up"] = r.effective_up;
    item["xi"] = r.xi;
    item["theta"] = r.theta;
    item["min_margin"] = r.min_margin;
    item["sample_count"] = r.sample_count;
    ifaces.push_back(std::move(item));
  }
  root["interfaces"] = std::move(ifaces);
  root["warnings"] = cert.warnings;

  ordered_json convention;
  convention["nu_plus"] = {1, 0};
  convention["tau_plus"] = {0, 1};
  convention["beta"] = 0;
  convention["k"] = "k_l = k_factors[l] * g_l on region M_l";
  convention["unchecked_hypotheses"] = {"spin structure", "scalar curvature of each region",
                                        "asymptotic flatness of the outer region"};
  root["convention"] = std::move(convention);
  return detail::to_text(root);
}

LockCertificate parse_certificate(std::string_view text) {
  const json root = parse_json(text);
  require_object(root);
  require_schema(root);
  if (document_kind(root) != "certificate") {
    throw Error(ErrorCode::ValidationError, "expected a certificate document");
  }
  LockCertificate cert;
  const std::string verdict = as_string(member(root, "verdict", ""), "verdict");
  const auto parsed = verdict_from_string(verdict);
  if (!parsed) throw Error(ErrorCode::ValidationError, "unknown verdict '" + verdict + "'");
  cert.verdict = *parsed;
  cert.reason = as_string(member(root, "reason", ""), "reason");
  if (const auto failed = optional_int(root, "failed_interface", "")) {
    cert.failed_interface = static_cast<std::size_t>(*failed);
  }
  cert.n = as_int(member(root, "n", ""), "n");
  cert.tol = as_number(member(root, "tol", ""), "tol");
  cert.scale = as_number(member(root, "scale", ""), "scale");

  const json& hyp = member(root, "hypotheses", "");
  auto& h = cert.hypotheses;
  h.square_sum = as_number(member(root, "square_sum", ""), "square_sum");
  h.positivity_ok = as_bool(member(hyp, "positivity_ok", "hypotheses."), "hypotheses.positivity_ok");
  h.lambda_pattern_ok =
      as_bool(member(hyp, "lambda_pattern_ok", "hypotheses."), "hypotheses.lambda_pattern_ok");
  h.lambda = optional_int(hyp, "lambda", "hypotheses.");
  for (double v : as_numbers(member(hyp, "lambda_candidates", "hypotheses."),
                             "hypotheses.lambda_candidates")) {
    h.lambda_candidates.push_back(static_cast<int>(v));
  }
  h.square_sum_ok = as_bool(member(hyp, "square_sum_ok", "hypotheses."), "hypotheses.square_sum_ok");
  const std::string outcome = as_string(member(hyp, "outcome", "hypotheses."), "hypotheses.outcome");
  for (auto o : {HypothesisOutcome::TheoremApplies, HypothesisOutcome::MiaoCase,
                 HypothesisOutcome::Rejected}) {
    if (to_string(o) == outcome) h.outcome = o;
  }
  const std::string reason =
      as_string(member(hyp, "reject_reason", "hypotheses."), "hypotheses.reject_reason");
  for (auto r : {RejectReason::None, RejectReason::TooFewInterfaces, RejectReason::Positivity,
                 RejectReason::Pattern, RejectReason::SquareSum}) {
    if (to_string(r) == reason) h.reason = r;
  }

  const json& ledger = member(root, "ledger", "");
  cert.ledger.d = as_numbers(member(ledger, "d", "ledger."), "ledger.d");
  cert.ledger.c = as_numbers(member(ledger, "c", "ledger."), "ledger.c");
  cert.ledger.lambda_prime = optional_int(ledger, "lambda_prime", "ledger.");
  cert.k_factors = as_numbers(member(root, "k_factors", ""), "k_factors");

  const json& ifaces = member(root, "interfaces", "");
  if (!ifaces.is_array()) field_error("interfaces", "an array");
  for (std::size_t i = 0; i < ifaces.size(); ++i) {
    const std::string path = "interfaces[" + std::to_string(i) + "].";
    const json& item = ifaces[i];
    InterfaceRecord r;
    r.name = as_string(member(item, "name", path), path + "name");
    r.a = as_number(member(item, "a", path), path + "a");
    r.effective_low = as_number(member(item, "effective_low", path), path + "effective_low");
    r.effective_up = as_number(member(item, "effective_up", path), path + "effective_up");
    r.xi = as_number(member(item, "xi", path), path + "xi");
    r.theta = as_number(member(item, "theta", path), path + "theta");
    r.min_margin = as_number(member(item, "min_margin", path), path + "min_margin");
    r.sample_count = static_cast<std::size_t>(as_int(member(item, "sample_count", path), path + "sample_count"));
    cert.interfaces.push_back(std::move(r));
  }
  if (const json* warnings = optional_member(root, "warnings")) {
    for (std::size_t i = 0; i < warnings->size(); ++i) {
      cert.warnings.push_back(as_string((*warnings)[i], "warnings[" + std::to_string(i) + "]"));
    }
  }
  return cert;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + temp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw Error(ErrorCode::IoError, "cannot move certificate into " + path.string());
  }
}

}  // namespace lockcert
