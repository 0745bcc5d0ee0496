#include "lockcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json_text.hpp"
#include "lockcert/error.hpp"

namespace lockcert {
namespace {

OracleInterfaceReport compare(const std::string& name, double a, double xi_target,
                              double radicand, std::optional<Boost> closed,
                              std::span<const SamplePair> samples, double range, int steps) {
  OracleInterfaceReport r;
  r.name = name;
  r.a = a;
  r.xi_target = xi_target;
  r.radicand = radicand;
  const ThetaScan scan = scan_theta(a, xi_target, samples, range, steps);
  r.grid_theta = scan.best_theta;
  r.grid_margin = scan.best_margin;
  if (!closed) {
    r.flags.emplace_back("ClosedFormUnavailable");
    r.lipschitz = margin_lipschitz(a, samples, range);
    r.resolution_bound = 0.5 * r.lipschitz * scan.step;
    return r;
  }
  r.closed_form_available = true;
  r.closed_theta = closed->theta();
  r.closed_margin = min_cone_margin(*closed, a, xi_target, samples);
  // Local constant: the nearest grid angle is within step/2 of the closed form.
  r.lipschitz = margin_lipschitz(a, samples, std::abs(r.closed_theta) + scan.step);
  r.resolution_bound = 0.5 * r.lipschitz * scan.step;
  if (std::abs(r.closed_theta) > range) {
    r.flags.emplace_back("RangeTooNarrow");
  } else if (r.grid_margin < r.closed_margin - r.resolution_bound) {
    r.flags.emplace_back("GridInconsistent");
  }
  if (r.grid_margin > r.closed_margin + r.resolution_bound) {
    r.flags.emplace_back("GridBeatsClosedForm");
  }
  return r;
}

}  // namespace

ThetaScan scan_theta(double a, double xi_out, std::span<const SamplePair> samples, double range,
                     int steps) {
  if (steps < 2 || !(range > 0.0) || samples.empty()) {
    throw Error(ErrorCode::InvalidArgument, "theta scan needs steps >= 2, range > 0, samples");
  }
  ThetaScan scan;
  scan.step = 2.0 * range / static_cast<double>(steps - 1);
  scan.best_margin = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < steps; ++k) {
    const double theta = -range + scan.step * static_cast<double>(k);
    const double m = min_cone_margin(Boost::from_angle(theta), a, xi_out, samples);
    if (m > scan.best_margin) {
      scan.best_margin = m;
      scan.best_theta = theta;
    }
  }
  return scan;
}

double margin_lipschitz(double a, std::span<const SamplePair> samples, double theta_max) {
  double h = 0.0;
  for (const auto& s : samples) h = std::max(h, std::abs(s.minus));
  return 2.0 * (h + std::abs(a)) * std::exp(theta_max);
}

bool OracleReport::flagged() const {
  return std::any_of(interfaces.begin(), interfaces.end(), [](const OracleInterfaceReport& r) {
    return std::any_of(r.flags.begin(), r.flags.end(), [](const std::string& f) {
      return f == "GridBeatsClosedForm" || f == "GridInconsistent" || f == "RangeTooNarrow";
    });
  });
}

OracleInterfaceReport oracle_lemma(const LemmaInput& input, double range, int steps, double tol) {
  const double scale = std::max({1.0, input.h_bar_plus, input.h_low_minus, input.a});
  const double radicand = input.h_bar_plus * input.h_bar_plus -
                          input.h_low_minus * input.h_low_minus + input.a * input.a;
  if (radicand < -tol * scale * scale) {
    // No real outgoing trace; scan against the nearest admissible target 0.
    auto r = compare("lemma", input.a, 0.0, radicand, std::nullopt, input.samples, range, steps);
    r.flags.insert(r.flags.begin(), "RadicandNegative");
    return r;
  }
  const double out = xi(input.h_bar_plus, input.h_low_minus, input.a, tol);
  const Boost closed = lock_boost(input.h_low_minus, input.h_bar_plus, input.a, tol);
  return compare("lemma", input.a, out, radicand, closed, input.samples, range, steps);
}

OracleReport run_oracle(const CornerChain& chain, double range, int steps, double tol) {
  validate_structure(chain);
  OracleReport report;
  report.range = range;
  report.steps = steps;
  const DefectLedger ledger = defect_ledger(chain, tol);
  const int count = static_cast<int>(chain.size());
  for (int ell = 1; ell <= count; ++ell) {
    const auto& iface = chain.interfaces[static_cast<std::size_t>(ell - 1)];
    const Bounds b = effective_bounds(iface);
    std::vector<SamplePair> samples(iface.samples_minus.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
      samples[k] = {iface.samples_minus[k], iface.samples_plus[k]};
    }
    const double a = ledger.c[static_cast<std::size_t>(ell - 1)];
    const double target = ell == count ? 0.0 : ledger.c[static_cast<std::size_t>(ell)];
    const bool beyond_split = !ledger.lambda_prime || ell > *ledger.lambda_prime;

    std::optional<Boost> closed;
    double upper = b.up_plus;
    if (beyond_split || ell < count) {
      try {
        upper = beyond_split ? effective_upper(ell, chain, ledger, tol) : b.up_plus;
        closed = lock_boost(b.low_minus, upper, a, tol);
      } catch (const Error&) {
        closed.reset();
      }
    }
    const double radicand = upper * upper - b.low_minus * b.low_minus + a * a;
    report.interfaces.push_back(
        compare(iface.name, a, target, radicand, closed, samples, range, steps));
  }
  return report;
}

std::string serialize_oracle_report(const OracleReport& report) {
  nlohmann::ordered_json root;
  root["schema_version"] = 1;
  root["kind"] = "oracle_report";
  root["range"] = report.range;
  root["steps"] = report.steps;
  root["flagged"] = report.flagged();
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& r : report.interfaces) {
    nlohmann::ordered_json item;
    item["name"] = r.name;
    item["a"] = r.a;
    item["xi_target"] = r.xi_target;
    item["radicand"] = r.radicand;
    item["closed_form_available"] = r.closed_form_available;
    item["closed_theta"] = r.closed_form_available ? nlohmann::ordered_json(r.closed_theta)
                                                   : nlohmann::ordered_json(nullptr);
    item["closed_margin"] = r.closed_form_available ? nlohmann::ordered_json(r.closed_margin)
                                                    : nlohmann::ordered_json(nullptr);
    item["grid_theta"] = r.grid_theta;
    item["grid_margin"] = r.grid_margin;
    item["lipschitz"] = r.lipschitz;
    item["resolution_bound"] = r.resolution_bound;
    item["flags"] = r.flags;
    items.push_back(std::move(item));
  }
  root["interfaces"] = std::move(items);
  return detail::to_text(root);
}

}  // namespace lockcert
