// lockcert: build and check corner-chain certificates from the command line.
//
// Exit status: 0 success / certified, 1 rejected or failed (outputs are still
// written), 2 input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "lockcert/chain.hpp"
#include "lockcert/documents.hpp"
#include "lockcert/error.hpp"
#include "lockcert/oracle.hpp"
#include "lockcert/radial.hpp"
#include "lockcert/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInputError = 2;

int report_input_error(const lockcert::Error& e) {
  std::cerr << "lockcert: " << lockcert::to_string(e.code()) << ": " << e.what() << "\n";
  return kInputError;
}

unsigned sweep_workers() {
  if (const char* env = std::getenv("LOCKCERT_WORKERS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    std::cerr << "lockcert: ignoring invalid LOCKCERT_WORKERS='" << env << "'\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_verify(const std::string& chain_path, std::optional<double> tol_flag,
               const std::string& out_path) {
  lockcert::ChainSpecDocument doc;
  try {
    doc = lockcert::parse_chain_spec(lockcert::read_file(chain_path));
    if (tol_flag && !(*tol_flag > 0.0)) {
      throw lockcert::Error(lockcert::ErrorCode::ValidationError, "--tol must be positive");
    }
  } catch (const lockcert::Error& e) {
    return report_input_error(e);
  }
  const double tol = tol_flag.value_or(doc.tol.value_or(lockcert::kDefaultTol));

  lockcert::LockCertificate cert;
  try {
    cert = lockcert::certify(doc.chain, tol);
  } catch (const lockcert::Error& e) {
    cert.n = doc.chain.n;
    cert.tol = tol;
    cert.verdict = lockcert::Verdict::Failed;
    cert.failed_interface = e.interface_index();
    cert.reason = std::string(lockcert::to_string(e.code())) + ": " + e.what();
  }
  try {
    lockcert::write_file_atomic(out_path, lockcert::serialize_certificate(cert));
  } catch (const lockcert::Error& e) {
    return report_input_error(e);
  }
  std::cout << lockcert::to_string(cert.verdict) << " square_sum="
            << lockcert::format_double(cert.hypotheses.square_sum);
  if (!cert.reason.empty()) std::cout << " (" << cert.reason << ")";
  std::cout << "\n";
  return lockcert::is_certified(cert.verdict) ? kOk : kRejected;
}

int run_profile(const std::string& spec_path, int samples, const std::string& chain_path) {
  std::optional<lockcert::RadialProfile> profile;
  try {
    profile.emplace(lockcert::parse_profile_spec(lockcert::read_file(spec_path)));
  } catch (const lockcert::Error& e) {
    return report_input_error(e);
  }
  lockcert::CornerChain chain;
  try {
    chain = lockcert::chain_from_profile(*profile, samples);
  } catch (const lockcert::Error& e) {
    if (e.code() == lockcert::ErrorCode::InvalidArgument) return report_input_error(e);
    std::cerr << "lockcert: profile violates a hypothesis: " << lockcert::to_string(e.code())
              << ": " << e.what() << "\n";
    return kRejected;
  }
  try {
    lockcert::write_file_atomic(chain_path, lockcert::serialize_chain_spec({chain, std::nullopt}));
  } catch (const lockcert::Error& e) {
    return report_input_error(e);
  }
  for (const auto& iface : chain.interfaces) {
    std::cout << iface.name << " H-=" << lockcert::format_double(iface.samples_minus.front())
              << " H+=" << lockcert::format_double(iface.samples_plus.front()) << "\n";
  }
  if (profile->n() == 3) {
    std::cout << "adm_mass=" << lockcert::format_double(lockcert::adm_mass_limit(*profile)) << "\n";
  }
  return kOk;
}

int run_sweep(const std::string& templ, const std::string& grid_spec, const std::string& csv_path) {
  if (templ != "two-jump") {
    std::cerr << "lockcert: unknown sweep template '" << templ << "'\n";
    return kInputError;
  }
  try {
    std::string spec = grid_spec;
    std::error_code ec;
    if (std::filesystem::is_regular_file(grid_spec, ec)) spec = lockcert::read_file(grid_spec);
    const lockcert::TwoJumpGrid grid = lockcert::parse_grid(spec);
    const auto rows = lockcert::run_sweep(grid, sweep_workers());
    lockcert::write_file_atomic(csv_path, lockcert::sweep_csv(rows));
    std::cout << rows.size() << " cells written to " << csv_path << "\n";
  } catch (const lockcert::Error& e) {
    return report_input_error(e);
  }
  return kOk;
}

int run_oracle(const std::string& chain_path, double range, int steps,
               const std::string& out_path) {
  lockcert::OracleReport report;
  try {
    if (!(range > 0.0) || steps < 2) {
      throw lockcert::Error(lockcert::ErrorCode::ValidationError,
                            "--range must be positive and --steps at least 2");
    }
    const std::string text = lockcert::read_file(chain_path);
    if (lockcert::is_lemma_document(text)) {
      report.range = range;
      report.steps = steps;
      report.interfaces.push_back(lockcert::oracle_lemma(lockcert::parse_lemma_spec(text), range, steps));
    } else {
      const auto doc = lockcert::parse_chain_spec(text);
      report = lockcert::run_oracle(doc.chain, range, steps,
                                    doc.tol.value_or(lockcert::kDefaultTol));
    }
  } catch (const lockcert::Error& e) {
    return report_input_error(e);
  }
  const std::string text = lockcert::serialize_oracle_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    try {
      lockcert::write_file_atomic(out_path, text);
    } catch (const lockcert::Error& e) {
      return report_input_error(e);
    }
  }
  return report.flagged() ? kRejected : kOk;
}

int run_check(const std::string& chain_path, const std::string& cert_path) {
  try {
    const auto doc = lockcert::parse_chain_spec(lockcert::read_file(chain_path));
    const auto cert = lockcert::parse_certificate(lockcert::read_file(cert_path));
    const bool ok = lockcert::verify_certificate(cert, doc.chain);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? kOk : kRejected;
  } catch (const lockcert::Error& e) {
    return report_input_error(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lock-principle certificates for chains of metric corners"};
  app.require_subcommand(1);

  std::string chain_path, out_path, spec_path, grid_spec, csv_path, cert_path;
  std::string templ = "two-jump";
  std::optional<double> tol;
  int samples = 1;
  double range = 10.0;
  int steps = 200001;

  auto* verify = app.add_subcommand("verify", "Build and write the certificate for a chain");
  verify->add_option("--chain", chain_path, "Chain specification (JSON)")->required();
  verify->add_option("--tol", tol, "Relative tolerance for pass/fail decisions");
  verify->add_option("--out", out_path, "Certificate output path")->required();

  auto* profile = app.add_subcommand("profile", "Generate a chain from a radial profile");
  profile->add_option("--spec", spec_path, "Profile specification (JSON)")->required();
  profile->add_option("--samples", samples, "Samples per interface")->check(CLI::PositiveNumber);
  profile->add_option("--emit-chain", out_path, "Chain output path")->required();

  auto* sweep = app.add_subcommand("sweep", "Verdicts over a parameter grid");
  sweep->add_option("--template", templ, "Chain template")->required();
  sweep->add_option("--grid", grid_spec, "Grid spec or path to a file containing it")->required();
  sweep->add_option("--csv", csv_path, "CSV output path")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force angle scan against the closed form");
  oracle->add_option("--chain", chain_path, "Chain or lemma document (JSON)")->required();
  oracle->add_option("--range", range, "Scan angles in [-range, range]");
  oracle->add_option("--steps", steps, "Number of grid angles");
  oracle->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* check = app.add_subcommand("check", "Re-verify a certificate against its chain");
  check->add_option("--chain", chain_path, "Chain specification (JSON)")->required();
  check->add_option("--cert", cert_path, "Certificate (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (verify->parsed()) return run_verify(chain_path, tol, out_path);
  if (profile->parsed()) return run_profile(spec_path, samples, out_path);
  if (sweep->parsed()) return run_sweep(templ, grid_spec, csv_path);
  if (oracle->parsed()) return run_oracle(chain_path, range, steps, out_path);
  if (check->parsed()) return run_check(chain_path, cert_path);
  return kInputError;
}
