#include "lockcert/lemma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lockcert/error.hpp"

namespace lockcert {
namespace {

void require_lemma_domain(double h_low_minus, double h_bar_plus, double a) {
  if (!std::isfinite(h_low_minus) || !std::isfinite(h_bar_plus) || !std::isfinite(a)) {
    throw Error(ErrorCode::InvalidArgument, "lemma bounds must be finite");
  }
  if (h_low_minus <= 0.0 || h_bar_plus <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "lemma bounds must be strictly positive");
  }
  if (a < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "incoming k-trace a must be nonnegative");
  }
}

}  // namespace

bool dec_jump_holds(LorentzVec x, double tol, double scale) {
  return cone_margin(x) >= -tol * scale;
}

double xi(double h_bar_plus, double h_low_minus, double a, double tol) {
  require_lemma_domain(h_low_minus, h_bar_plus, a);
  const double radicand = h_bar_plus * h_bar_plus - h_low_minus * h_low_minus + a * a;
  const double scale = std::max({1.0, h_bar_plus, h_low_minus, a});
  const double slack = tol * scale * scale;
  if (std::abs(radicand) <= slack) return 0.0;
  if (radicand < 0.0) {
    throw Error(ErrorCode::RadicandNegative,
                "H_up^2 - H_low^2 + a^2 = " + std::to_string(radicand) + " < 0");
  }
  return std::sqrt(radicand);
}

Boost lock_boost(double h_low_minus, double h_bar_plus, double a, double tol) {
  const double out = xi(h_bar_plus, h_low_minus, a, tol);
  const double scale = margin_scale(h_bar_plus);
  const double conjugate = a * h_bar_plus + out * h_low_minus;
  if (conjugate > kConjugateFloor * scale) {
    return Boost::from_sinh((h_low_minus * h_low_minus - h_bar_plus * h_bar_plus) / conjugate);
  }
  // a ≈ 0 and xi ≈ 0: consistent input forces H_low ≈ H_up and θ ≈ 0.
  const double raw_denominator = h_low_minus * h_low_minus - a * a;
  if (std::abs(h_low_minus - h_bar_plus) > tol * scale ||
      raw_denominator <= kConjugateFloor * scale * scale) {
    throw Error(ErrorCode::DegenerateAngle,
                "a and xi vanish but H_low and H_up differ; no admissible boost");
  }
  return Boost::from_sinh((a * h_bar_plus - out * h_low_minus) / raw_denominator);
}

double angle_by_quotient(double h_low_minus, double h_bar_plus, double a, double tol) {
  const double out = xi(h_bar_plus, h_low_minus, a, tol);
  const double denominator = h_low_minus * h_low_minus - a * a;
  if (denominator == 0.0) {
    throw Error(ErrorCode::DegenerateAngle, "quotient form undefined at H_low = a");
  }
  return std::asinh((a * h_bar_plus - out * h_low_minus) / denominator);
}

double angle_by_log_ratio(double h_low_minus, double h_bar_plus) {
  require_lemma_domain(h_low_minus, h_bar_plus, 0.0);
  return std::log(h_low_minus) - std::log(h_bar_plus);
}

double min_cone_margin(const Boost& b, double a, double xi_out,
                       std::span<const SamplePair> samples) {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& sample : samples) {
    worst = std::min(worst, cone_margin(jump_vector(b, sample.minus, a, sample.plus, xi_out)));
  }
  return worst;
}

InterfaceVerdict verify_interface(const LemmaInput& input, double tol,
                                  std::optional<double> scale) {
  require_lemma_domain(input.h_low_minus, input.h_bar_plus, input.a);
  if (input.samples.empty()) {
    throw Error(ErrorCode::EmptySamples, "no sample points on the corner");
  }
  InterfaceVerdict verdict;
  verdict.scale = scale.value_or(margin_scale(input.h_bar_plus));
  const double slack = tol * verdict.scale;
  for (std::size_t k = 0; k < input.samples.size(); ++k) {
    const auto& sample = input.samples[k];
    if (!(sample.minus >= input.h_low_minus - slack) || !(sample.plus <= input.h_bar_plus + slack)) {
      throw Error(ErrorCode::SampleOutOfBounds,
                  "sample " + std::to_string(k + 1) + " violates H- >= H_low or H+ <= H_up");
    }
  }
  verdict.xi = xi(input.h_bar_plus, input.h_low_minus, input.a, tol);
  const Boost boost = lock_boost(input.h_low_minus, input.h_bar_plus, input.a, tol);
  verdict.theta = boost.theta();
  verdict.sinh_theta = boost.sinh();
  verdict.min_margin = min_cone_margin(boost, input.a, verdict.xi, input.samples);
  verdict.pass = verdict.min_margin >= -slack;
  return verdict;
}

}  // namespace lockcert
