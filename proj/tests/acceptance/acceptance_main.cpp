// Acceptance gate: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "generators.hpp"
#include "lockcert/chain.hpp"
#include "lockcert/documents.hpp"
#include "lockcert/error.hpp"
#include "lockcert/lemma.hpp"
#include "lockcert/lorentz.hpp"
#include "lockcert/oracle.hpp"
#include "lockcert/radial.hpp"

namespace {

namespace fs = std::filesystem;
using namespace lockcert;
using Clock = std::chrono::steady_clock;

// Reference values, 30-digit mpmath evaluations.
constexpr double kTheta1 = -1.31695789692481670862504634731;
constexpr double kTheta2 = 0.658478948462408354312523173654;
constexpr double kSqrt3 = 1.73205080756887729352744634151;
constexpr double kSqrt6Minus2 = 0.449489742783178098197284074706;
constexpr double kCapConeLow1 = 1.15470053837925152901829756100;   // 2/sqrt(3)
constexpr double kCapConeUp1 = 2.07846096908265275223293560980;    // 1.8*2/sqrt(3)
constexpr double kCapConeSquareSum = 0.0933333333333333333333333333;  // 4/3 - 4.32 + 3.24 - 0.16
constexpr double kPerturbedSquareSum = -0.106666666666666666666666667;  // 4/3 - 4.32 + 3.24 - 0.36

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << "FAILED " << what;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool near(double x, double ref, double tol) { return std::abs(x - ref) <= tol; }

// --- 1 ----------------------------------------------------------------------
void euclidean_annuli(Outcome& o, const fs::path& data) {
  const auto start = Clock::now();
  const RadialProfile profile =
      parse_profile_spec(read_file(data / "profile_flat_annuli.json"));
  const CornerChain chain = chain_from_profile(profile, 1);
  o.require(chain.size() == 2, "two junctions");
  const Bounds b1 = effective_bounds(chain.interfaces[0]);
  const Bounds b2 = effective_bounds(chain.interfaces[1]);
  o.require(b1.low_minus == 2.0 && b1.up_plus == 2.0, "bounds (2,2) at s=1");
  o.require(b2.low_minus == 1.0 && b2.up_plus == 1.0, "bounds (1,1) at s=2");
  const LockCertificate cert = certify(chain);
  bool zero = true;
  for (double v : cert.ledger.d) zero = zero && v == 0.0;
  for (double v : cert.ledger.c) zero = zero && v == 0.0;
  o.require(zero, "ledger all zero");
  o.require(cert.verdict == Verdict::CertifiedMiaoCase, "verdict CertifiedMiaoCase");
  o.require(adm_mass_limit(profile) == 0.0, "adm mass exactly 0");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "runtime < 1 s");
  o.detail << (o.pass ? "" : "; ") << "verdict=" << to_string(cert.verdict)
           << " runtime=" << fmt(elapsed) << "s";
}

// --- 2 ----------------------------------------------------------------------
void chain_b(Outcome& o) {
  const CornerChain chain = testing::bounds_chain(3, {{1.0, 2.0}, {3.0, 2.0}});
  const LockCertificate cert = build_certificate(chain);
  constexpr double tol = 1e-9;
  o.require(near(cert.hypotheses.square_sum, 2.0, tol), "square_sum = 2");
  o.require(cert.ledger.c.size() == 3 && near(cert.ledger.c[0], 0.0, tol) &&
                near(cert.ledger.c[1], kSqrt3, tol) && near(cert.ledger.c[2], 0.0, tol),
            "c = (0, sqrt3, 0)");
  o.require(near(cert.interfaces[0].theta, kTheta1, tol), "theta1");
  o.require(near(cert.interfaces[1].theta, kTheta2, tol), "theta2");
  o.require(near(cert.interfaces[0].min_margin, 0.0, tol), "margin1 = 0");
  o.require(near(cert.interfaces[1].min_margin, kSqrt6Minus2, tol), "margin2 = sqrt6 - 2");
  o.require(verify_certificate(cert, chain), "certificate re-verifies");
  const OracleReport oracle = run_oracle(chain, 10.0, 200001);
  o.require(!oracle.flagged(), "grid oracle agrees");
  o.detail << (o.pass ? "" : "; ") << "theta=(" << format_double(cert.interfaces[0].theta) << ", "
           << format_double(cert.interfaces[1].theta) << ") margins=("
           << fmt(cert.interfaces[0].min_margin) << ", " << fmt(cert.interfaces[1].min_margin)
           << ")";
}

// --- 3 ----------------------------------------------------------------------
void cap_cone_schwarzschild(Outcome& o, const fs::path& data) {
  const RadialProfile profile =
      parse_profile_spec(read_file(data / "profile_cap_cone_schwarzschild.json"));
  const CornerChain chain = chain_from_profile(profile, 1);
  const Bounds b1 = effective_bounds(chain.interfaces[0]);
  const Bounds b2 = effective_bounds(chain.interfaces[1]);
  constexpr double tol = 1e-9;
  o.require(near(b1.low_minus, kCapConeLow1, tol) && near(b1.up_plus, kCapConeUp1, tol),
            "bounds (1.1547005, 2.0784610)");
  o.require(near(b2.low_minus, 1.8, tol) && near(b2.up_plus, 0.4, tol), "bounds (1.8, 0.4)");
  const LockCertificate cert = certify(chain);
  o.require(near(cert.hypotheses.square_sum, kCapConeSquareSum, tol), "square_sum 0.0933333");
  o.require(cert.verdict == Verdict::Certified, "verdict Certified");
  o.require(b1.low_minus - b1.up_plus < 0.0, "interface 1 mean-concave");
  o.require(near(adm_mass_limit(profile), 0.48, 1e-8), "adm mass 0.48");

  const RadialProfile perturbed =
      parse_profile_spec(read_file(data / "profile_cap_cone_perturbed.json"));
  const LockCertificate rejected = certify(chain_from_profile(perturbed, 1));
  o.require(rejected.verdict == Verdict::Rejected, "perturbed verdict Rejected");
  o.require(rejected.hypotheses.square_sum < 0.0, "perturbed square_sum negative");
  // Outer slope 0.3 gives H+ = 0.6 at f = 1, so the sum is 4/3 - 4.32 + 3.24 - 0.36.
  o.require(near(rejected.hypotheses.square_sum, kPerturbedSquareSum, tol),
            "perturbed square_sum matches the fixture arithmetic");
  o.detail << (o.pass ? "" : "; ") << "square_sum=" << fmt(cert.hypotheses.square_sum)
           << " jump1=" << fmt(b1.low_minus - b1.up_plus)
           << " adm=" << format_double(adm_mass_limit(profile))
           << " perturbed square_sum=" << fmt(rejected.hypotheses.square_sum)
           << " (stated -0.0933 is inconsistent with slope 0.3) verdict="
           << to_string(rejected.verdict);
}

// --- 4 ----------------------------------------------------------------------
void lemma_property(Outcome& o) {
  const auto start = Clock::now();
  std::mt19937_64 rng(20260401);
  constexpr int kInputs = 10000;
  int passed = 0;
  double worst_rel = std::numeric_limits<double>::infinity(), worst_corner = 0.0;
  for (int trial = 0; trial < kInputs; ++trial) {
    const LemmaInput input = testing::random_lemma_input(rng, 64);
    const InterfaceVerdict v = verify_interface(input);
    if (v.pass && v.min_margin >= -1e-9 * v.scale) ++passed;
    worst_rel = std::min(worst_rel, v.min_margin / v.scale);
    const double out = xi(input.h_bar_plus, input.h_low_minus, input.a);
    const Boost b = lock_boost(input.h_low_minus, input.h_bar_plus, input.a);
    const LorentzVec x = jump_vector(b, input.h_low_minus, input.a, input.h_bar_plus, out);
    worst_corner = std::max({worst_corner, std::abs(x.t), std::abs(x.s)});
  }
  const double elapsed = seconds_since(start);
  o.require(passed == kInputs, "all inputs pass");
  o.require(worst_corner <= 1e-9, "corner sample |X| <= 1e-9");
  o.require(elapsed < 30.0, "runtime < 30 s");
  o.detail << (o.pass ? "" : "; ") << passed << "/" << kInputs
           << " pass, worst margin/scale=" << fmt(worst_rel)
           << ", worst corner |X|=" << fmt(worst_corner) << ", runtime=" << fmt(elapsed) << "s";
}

// --- 5 ----------------------------------------------------------------------
void algebra(Outcome& o) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> angle(-20.0, 20.0);
  std::uniform_real_distribution<double> comp(-10.0, 10.0);
  double worst_form = 0.0;
  for (int trial = 0; trial < 1000000; ++trial) {
    const double theta = angle(rng);
    const LorentzVec v{comp(rng), comp(rng)};
    const LorentzVec w = boost_apply(theta, v);
    const double magnitude = w.t * w.t + w.s * w.s;
    worst_form = std::max(worst_form, std::abs(lorentz_norm_sq(w) - lorentz_norm_sq(v)) / magnitude);
  }
  o.require(worst_form <= 1e-12, "Lorentz form preserved to 1e-12");

  double worst_identity = 0.0;
  for (int checked = 0; checked < 100000;) {
    const double low = testing::uniform(rng, 0.05, 10.0);
    const double up = testing::uniform(rng, 0.05, 10.0);
    const double a = testing::uniform(rng, 0.0, 10.0);
    if (up * up - low * low + a * a < 0.0) continue;
    const double out = xi(up, low, a, 0.0);
    const double lhs = std::pow(up * low - a * out, 2) - std::pow(out * low - a * up, 2);
    const double rhs = std::pow(low * low - a * a, 2);
    const double size = std::pow(up * low + a * out, 2) + std::pow(out * low + a * up, 2);
    worst_identity = std::max(worst_identity, std::abs(lhs - rhs) / size);
    ++checked;
  }
  o.require(worst_identity <= 1e-10, "trace identity to 1e-10");

  double worst_forms = 0.0;
  int compared = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const double low = testing::uniform(rng, 0.05, 10.0);
    const double up = testing::uniform(rng, 0.05, 10.0);
    const double a = testing::uniform(rng, 0.0, 10.0);
    if (up * up - low * low + a * a < 0.0) continue;
    const double scale = margin_scale(up);
    const double out = xi(up, low, a);
    const double conjugate = a * up + out * low;
    const double raw = low * low - a * a;
    // Well conditioned: neither denominator near zero.
    if (conjugate <= 1e-6 * scale || std::abs(raw) <= 1e-6 * scale) continue;
    const double stable = std::asinh((low * low - up * up) / conjugate);
    const double quotient = angle_by_quotient(low, up, a);
    worst_forms = std::max(worst_forms, std::abs(stable - quotient) / std::max(1.0, std::abs(stable)));
    ++compared;
  }
  o.require(worst_forms <= 1e-9, "stable form agrees with quotient to 1e-9");

  double worst_jump = 0.0;
  for (double a : {0.25, 0.5, 1.0, 3.0, 7.0}) {
    for (double up : {0.3, 0.7, 2.0, 5.0, 9.0}) {
      const double at = lock_angle(a, up, a);
      worst_jump = std::max({worst_jump, std::abs(lock_angle(a + 1e-6, up, a) - at),
                             std::abs(lock_angle(a - 1e-6, up, a) - at)});
    }
  }
  o.require(worst_jump <= 1e-4, "branch continuity to 1e-4");
  o.detail << (o.pass ? "" : "; ") << "form=" << fmt(worst_form) << " identity=" << fmt(worst_identity)
           << " forms=" << fmt(worst_forms) << " (" << compared << " inputs) branch=" << fmt(worst_jump);
}

// --- 6 ----------------------------------------------------------------------
void ledger_equivalence(Outcome& o) {
  std::mt19937_64 rng(6006);
  int chains = 0, violations = 0, covariant = 0, covariance_failures = 0;
  double worst_theta = 0.0;
  while (chains < 2000) {
    const CornerChain chain = testing::random_pattern_chain(rng, 3 + chains % 4);
    ++chains;
    const HypothesisReport r = check_hypotheses(chain);
    const DefectLedger l = defect_ledger(chain);
    const bool a = r.square_sum >= 0.0;
    const bool b = l.d.back() <= 0.0;
    const bool c = l.c.back() == 0.0;
    if (a != b || b != c) ++violations;
    if (r.outcome == HypothesisOutcome::Rejected) continue;
    const LockCertificate base = build_certificate(chain);
    for (double lambda : {0.5, 3.0}) {
      const LockCertificate s = certify(testing::scaled(chain, lambda));
      if (s.verdict != base.verdict || s.interfaces.size() != base.interfaces.size()) {
        ++covariance_failures;
        continue;
      }
      for (std::size_t i = 0; i < base.interfaces.size(); ++i) {
        const double t = base.interfaces[i].theta;
        const double rel = std::abs(s.interfaces[i].theta - t) / std::max(1.0, std::abs(t));
        worst_theta = std::max(worst_theta, rel);
        if (rel > 1e-9) ++covariance_failures;
      }
    }
    ++covariant;
  }
  o.require(violations == 0, "square_sum/d_N/c_N equivalence");
  o.require(covariance_failures == 0, "scale covariance");
  o.require(covariant >= 100, "enough admissible chains");
  o.detail << (o.pass ? "" : "; ") << chains << " chains, " << violations << " equivalence violations, "
           << covariant << " scaled at 0.5 and 3, worst theta drift=" << fmt(worst_theta);
}

// --- 7 ----------------------------------------------------------------------
struct OracleTally {
  int instances = 0;
  int beats = 0;
  int inconsistent = 0;
  double worst_gap = 0.0;  // grid - closed - bound
};

OracleTally tally(const std::vector<LemmaInput>& inputs) {
  OracleTally t;
  for (const auto& input : inputs) {
    const OracleInterfaceReport r = oracle_lemma(input, 10.0, 20001);
    ++t.instances;
    for (const auto& f : r.flags) {
      if (f == "GridBeatsClosedForm") ++t.beats;
      if (f == "GridInconsistent" || f == "RangeTooNarrow") ++t.inconsistent;
    }
    t.worst_gap = std::max(t.worst_gap, r.grid_margin - r.closed_margin - r.resolution_bound);
  }
  return t;
}

void oracle_equivalence(Outcome& o) {
  std::mt19937_64 rng(7007);
  std::vector<LemmaInput> generic, sharp;
  while (generic.size() < 1000) generic.push_back(testing::random_lemma_input(rng, 8));
  while (sharp.size() < 1000) {
    LemmaInput in = testing::random_lemma_input(rng, 7);
    if (!(in.h_low_minus > in.a)) continue;
    in.samples.push_back({in.h_low_minus, in.h_bar_plus});
    sharp.push_back(std::move(in));
  }
  const OracleTally g = tally(generic);
  const OracleTally s = tally(sharp);
  o.require(g.beats == 0, "grid never beats closed form beyond the resolution bound");
  o.detail << (o.pass ? "" : "; ") << "generic: " << g.beats << "/" << g.instances
           << " beaten, worst excess=" << fmt(g.worst_gap) << ", " << g.inconsistent
           << " below closed form"
           << " | info: corner-sample family " << s.beats << "/" << s.instances
           << " beaten, worst excess=" << fmt(s.worst_gap) << ", " << s.inconsistent
           << " below closed form";
}

// --- 8 ----------------------------------------------------------------------
void geometry(Outcome& o) {
  bool flat_exact = true;
  for (int n = 3; n <= 7; ++n) {
    const RadialProfile flat = ProfileBuilder(n).linear_end(1.0).build();
    for (double s : {0.1, 0.5, 1.0, 2.0, 3.7, 10.0, 123.0}) {
      flat_exact = flat_exact && warped_scalar_curvature(flat, 0, s) == 0.0 &&
                   sphere_mean_curvature(flat, 0, s) == static_cast<double>(n - 1) / s;
    }
  }
  o.require(flat_exact, "flat R == 0 and H == (n-1)/s");

  double worst_r = 0.0;
  for (int n = 3; n <= 6; ++n) {
    const RadialProfile p = ProfileBuilder(n).cap(1.0).linear_to_s(0.9, 2.0).schwarzschild_slope(0.4).build();
    const double s0 = p.pieces().back().s_begin;
    for (double ds : {0.0, 0.5, 2.0, 10.0, 40.0}) {
      worst_r = std::max(worst_r, std::abs(warped_scalar_curvature(p, p.piece_count() - 1, s0 + ds)));
    }
  }
  o.require(worst_r <= 1e-10, "Schwarzschild R <= 1e-10");

  const RadialProfile p = ProfileBuilder(3).cap(1.0).linear_to_f(0.8, 1.5).schwarzschild_mass(0.3).build();
  const double s0 = p.pieces().back().s_begin;
  double drift = 0.0;
  for (double ds : {0.0, 0.5, 2.0, 10.0, 50.0, 150.0}) {
    drift = std::max(drift, std::abs(hawking_mass(p, s0 + ds) - 0.3));
  }
  o.require(drift <= 1e-8, "Hawking mass drift <= 1e-8");
  o.require(adm_mass_limit(p) == 0.3, "adm mass = m");

  double worst_cap = 0.0;
  for (int n = 3; n <= 7; ++n) {
    const RadialProfile cap = ProfileBuilder(n).cap(2.5).linear_end(1.0).build();
    for (double s : {0.05, 0.4, 1.0, 1.57, 2.2, 2.5}) {
      worst_cap = std::max(worst_cap, std::abs(warped_scalar_curvature(cap, 0, s) - n * (n - 1.0)));
    }
  }
  o.require(worst_cap <= 1e-10, "round cap R = n(n-1)");
  o.detail << (o.pass ? "" : "; ") << "schwarzschild |R|=" << fmt(worst_r) << " hawking drift="
           << fmt(drift) << " cap |R - n(n-1)|=" << fmt(worst_cap);
}

// --- 9 ----------------------------------------------------------------------
class Cli {
 public:
  Cli(std::string exe, fs::path dir) : exe_(std::move(exe)), dir_(std::move(dir)) {}

  int run(const std::string& args, const std::string& env = "") const {
    const std::string cmd = env + " \"" + exe_ + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::string exe_;
  fs::path dir_;
};

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

void cli_contract(Outcome& o, const std::string& exe, const fs::path& data) {
  const fs::path dir = fs::temp_directory_path() / "lockcert_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const Cli cli(exe, dir);
  const auto d = [&](const char* name) { return (data / name).string(); };

  o.require(cli.run("verify --chain " + d("chain_b.json") + " --out " + cli.path("b1.json")) == 0,
            "verify certified -> 0");
  o.require(cli.run("verify --chain " + d("chain_b.json") + " --out " + cli.path("b2.json")) == 0,
            "verify repeat -> 0");
  o.require(read_file(cli.path("b1.json")) == read_file(cli.path("b2.json")),
            "certificates byte-identical");
  o.require(cli.run("verify --chain " + d("negative_square_sum.json") + " --out " +
                    cli.path("neg.json")) == 1,
            "verify rejected -> 1");
  o.require(fs::exists(cli.path("neg.json")) &&
                parse_certificate(read_file(cli.path("neg.json"))).verdict == Verdict::Rejected,
            "rejected certificate written");
  o.require(cli.run("verify --chain " + cli.path("missing.json") + " --out " + cli.path("m.json")) == 2,
            "verify missing file -> 2");

  o.require(cli.run("oracle --chain " + d("chain_b.json") + " --range 10 --steps 200001 --out " +
                    cli.path("o1.json")) == 0,
            "oracle chain B -> 0");
  o.require(cli.run("oracle --chain " + d("chain_b.json") + " --range 10 --steps 200001 --out " +
                    cli.path("o2.json")) == 0 &&
                read_file(cli.path("o1.json")) == read_file(cli.path("o2.json")),
            "oracle reports byte-identical");
  o.require(cli.run("oracle --chain " + d("chain_b.json") + " --range 1 --steps 2001") == 1,
            "oracle RangeTooNarrow -> 1");
  o.require(cli.run("oracle --chain " + cli.path("missing.json")) == 2, "oracle missing file -> 2");

  const std::string low1 = "2|1|" + format_double(kCapConeLow1) + "|0";
  const std::string up1 = "2|" + format_double(kCapConeUp1);
  const std::string grid = "low1=" + low1 + ",up1=" + up1 + ",low2=1|3|1.8,up2=1|2|0.4|0.6";
  o.require(cli.run("sweep --template two-jump --grid '" + grid + "' --csv " + cli.path("s1.csv"),
                    "LOCKCERT_WORKERS=1") == 0,
            "sweep -> 0");
  o.require(cli.run("sweep --template two-jump --grid '" + grid + "' --csv " + cli.path("s4.csv"),
                    "LOCKCERT_WORKERS=4") == 0 &&
                read_file(cli.path("s1.csv")) == read_file(cli.path("s4.csv")),
            "sweep CSV byte-identical across workers");
  o.require(cli.run("sweep --template two-jump --grid 'low1=1,up1=x' --csv " + cli.path("bad.csv")) == 2,
            "sweep invalid grid -> 2");

  // Criteria 1-3 parameter points; the cap-cone bounds are compared at the
  // 17-digit values the CLI reads back.
  const CornerChain cap = chain_from_profile(
      parse_profile_spec(read_file(data / "profile_cap_cone_schwarzschild.json")), 1);
  const double cap_low1 = std::stod(format_double(kCapConeLow1));
  const double cap_up1 = std::stod(format_double(kCapConeUp1));
  struct Expected {
    double low1, up1, low2, up2;
    std::string verdict;
  };
  const std::vector<Expected> expected{
      {2, 2, 1, 1, "CertifiedMiaoCase"},
      {1, 2, 3, 2, "Certified"},
      {cap_low1, cap_up1, 1.8, 0.4, to_string(certify(cap).verdict).data()},
      {cap_low1, cap_up1, 1.8, 0.6, "Rejected(square_sum)"},
      {0, 2, 3, 2, "Rejected(positivity)"},
  };
  const auto rows = read_csv(cli.path("s1.csv"));
  o.require(!rows.empty() && rows.front().size() == 7 && rows.front()[5] == "verdict", "CSV header");
  o.require(rows.size() == 1 + 4 * 2 * 3 * 4, "one row per cell");
  for (const auto& e : expected) {
    bool found = false;
    for (std::size_t i = 1; i < rows.size() && !found; ++i) {
      const auto& r = rows[i];
      if (r.size() != 7) continue;
      if (std::stod(r[0]) == e.low1 && std::stod(r[1]) == e.up1 && std::stod(r[2]) == e.low2 &&
          std::stod(r[3]) == e.up2) {
        found = true;
        o.require(r[5] == e.verdict, "row (" + r[0] + "," + r[1] + "," + r[2] + "," + r[3] +
                                         ") verdict " + r[5] + " != " + e.verdict);
      }
    }
    o.require(found, "row for (" + fmt(e.low1) + "," + fmt(e.up1) + "," + fmt(e.low2) + "," +
                         fmt(e.up2) + ") present");
  }
  fs::remove_all(dir);
  o.detail << (o.pass ? "" : "; ") << "exit statuses 0/1/2 checked for verify, oracle, sweep; "
           << rows.size() - 1 << " sweep rows";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lockcert acceptance suite"};
  std::string cli_path;
  std::string data_dir;
  app.add_option("--cli", cli_path, "Path to the lockcert executable")->required();
  app.add_option("--data", data_dir, "Fixture directory")->required();
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"euclidean annuli fixture", [&](Outcome& o) { euclidean_annuli(o, data_dir); }},
      {"worked two-interface chain", chain_b},
      {"cap-cone-Schwarzschild fixture", [&](Outcome& o) { cap_cone_schwarzschild(o, data_dir); }},
      {"lemma property suite", lemma_property},
      {"algebra suite", algebra},
      {"ledger equivalence", ledger_equivalence},
      {"oracle equivalence", oracle_equivalence},
      {"geometry suite", geometry},
      {"cli contract", [&](Outcome& o) { cli_contract(o, cli_path, data_dir); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail.str() << std::endl;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
