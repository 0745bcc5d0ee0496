#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lockcert/lorentz.hpp"

namespace lockcert {

inline constexpr double kDefaultTol = 1e-9;

// Below this multiple of the scale the conjugate denominator a*H_up + xi*H_low
// is treated as zero and the raw quotient is used instead.
inline constexpr double kConjugateFloor = 1e-9;

struct SamplePair {
  double minus = 0.0;  // H_- at a sample point
  double plus = 0.0;   // H_+ at the same point
};

// One application of the jump lemma at a single corner.
struct LemmaInput {
  double h_low_minus = 0.0;  // lower bound for H_- along the corner
  double h_bar_plus = 0.0;   // upper bound for H_+ along the corner
  double a = 0.0;            // incoming k-trace constant, a >= 0
  std::vector<SamplePair> samples;
};

struct InterfaceVerdict {
  double theta = 0.0;
  double sinh_theta = 0.0;
  double xi = 0.0;
  double min_margin = 0.0;
  double scale = 1.0;
  bool pass = false;
};

inline double margin_scale(double h_bar_plus) { return h_bar_plus > 1.0 ? h_bar_plus : 1.0; }

bool dec_jump_holds(LorentzVec x, double tol, double scale);

/// Outgoing k-trace sqrt(H_up^2 - H_low^2 + a^2).
///
/// A radicand within tol*scale^2 of zero (scale = max(1, H_up, H_low, a))
/// returns exactly 0. Throws RadicandNegative below that, InvalidArgument when
/// H_up or H_low is not positive or a is negative.
double xi(double h_bar_plus, double h_low_minus, double a, double tol = kDefaultTol);

/// The lock boost for (H_low, H_up, a).
///
/// sinh θ is evaluated as (H_low^2 - H_up^2) / (a H_up + xi H_low), the
/// conjugate form of (a H_up - xi H_low) / (H_low^2 - a^2); it also equals
/// (a^2 - H_up^2) / (2 a H_up) when H_low = a, i.e. θ = ln H_low - ln H_up.
/// When the conjugate denominator vanishes (a ≈ 0 and xi ≈ 0) the raw quotient
/// is used; it then requires H_low ≈ H_up or throws DegenerateAngle.
Boost lock_boost(double h_low_minus, double h_bar_plus, double a, double tol = kDefaultTol);

inline double lock_angle(double h_low_minus, double h_bar_plus, double a,
                         double tol = kDefaultTol) {
  return lock_boost(h_low_minus, h_bar_plus, a, tol).theta();
}

// The two textbook forms, kept as cross-checks for lock_boost.
// angle_by_quotient requires H_low != a; angle_by_log_ratio is the H_low = a case.
double angle_by_quotient(double h_low_minus, double h_bar_plus, double a, double tol = kDefaultTol);
double angle_by_log_ratio(double h_low_minus, double h_bar_plus);

/// X = F_θ (H_-, a) - (H_+, xi_out).
inline LorentzVec jump_vector(const Boost& b, double h_minus, double a, double h_plus,
                              double xi_out) {
  return boost_apply(b, LorentzVec{h_minus, a}) - LorentzVec{h_plus, xi_out};
}

inline LorentzVec jump_vector(double theta, double h_minus, double a, double h_plus,
                              double xi_out) {
  return jump_vector(Boost::from_angle(theta), h_minus, a, h_plus, xi_out);
}

// Minimum of X1 - |X2| over the samples for a fixed boost and target.
double min_cone_margin(const Boost& b, double a, double xi_out, std::span<const SamplePair> samples);

/// Computes the lock boost for `input`, evaluates the jump vector at every
/// sample and reports the worst margin. `scale` defaults to max(1, H_up).
///
/// Throws SampleOutOfBounds when a sample lies outside [H_low, ∞) x (-∞, H_up]
/// by more than tol*scale, EmptySamples for an empty sample list.
InterfaceVerdict verify_interface(const LemmaInput& input, double tol = kDefaultTol,
                                  std::optional<double> scale = std::nullopt);

}  // namespace lockcert
