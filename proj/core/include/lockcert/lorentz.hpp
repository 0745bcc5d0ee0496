#pragma once

#include <cmath>

namespace lockcert {

// A point of the Minkowski plane R^{1,1} with quadratic form t^2 - s^2.
// The first slot carries mean curvature, the second the trace of k.
struct LorentzVec {
  double t = 0.0;
  double s = 0.0;

  friend LorentzVec operator+(LorentzVec x, LorentzVec y) { return {x.t + y.t, x.s + y.s}; }
  friend LorentzVec operator-(LorentzVec x, LorentzVec y) { return {x.t - y.t, x.s - y.s}; }
  friend bool operator==(LorentzVec, LorentzVec) = default;
};

// Factored so that nearly null vectors keep full relative accuracy.
inline double lorentz_norm_sq(LorentzVec v) { return (v.t - v.s) * (v.t + v.s); }

/// Hyperbolic rotation
///
///     | cosh θ   -sinh θ |
///     | -sinh θ   cosh θ |
///
/// cosh is always derived as sqrt(1 + sinh^2) so that cosh^2 - sinh^2 = 1 holds
/// to rounding even for large |θ|. Application goes through light-cone
/// coordinates, t - s -> e^θ (t - s) and t + s -> e^-θ (t + s), which keeps the
/// Lorentz form accurate relative to the image even for nearly null vectors.
class Boost {
 public:
  Boost() = default;

  static Boost from_angle(double theta) {
    return Boost(theta, std::sinh(theta), std::exp(theta), std::exp(-theta));
  }

  static Boost from_sinh(double sinh_theta) {
    const double root = std::sqrt(1.0 + sinh_theta * sinh_theta);
    // e^θ = sinh + cosh without cancellation on either sign of sinh.
    const double up = sinh_theta >= 0.0 ? sinh_theta + root : 1.0 / (root - sinh_theta);
    const double down = sinh_theta >= 0.0 ? 1.0 / (sinh_theta + root) : root - sinh_theta;
    return Boost(std::asinh(sinh_theta), sinh_theta, up, down);
  }

  double theta() const noexcept { return theta_; }
  double cosh() const noexcept { return cosh_; }
  double sinh() const noexcept { return sinh_; }
  double exp_plus() const noexcept { return exp_plus_; }
  double exp_minus() const noexcept { return exp_minus_; }

  Boost inverse() const { return Boost(-theta_, -sinh_, exp_minus_, exp_plus_); }

 private:
  Boost(double theta, double sinh_theta, double exp_plus, double exp_minus)
      : theta_(theta),
        cosh_(std::sqrt(1.0 + sinh_theta * sinh_theta)),
        sinh_(sinh_theta),
        exp_plus_(exp_plus),
        exp_minus_(exp_minus) {}

  double theta_ = 0.0;
  double cosh_ = 1.0;
  double sinh_ = 0.0;
  double exp_plus_ = 1.0;
  double exp_minus_ = 1.0;
};

inline LorentzVec boost_apply(const Boost& b, LorentzVec v) {
  const double u = b.exp_plus() * (v.t - v.s);
  const double w = b.exp_minus() * (v.t + v.s);
  return {0.5 * (u + w), 0.5 * (w - u)};
}

inline LorentzVec boost_apply(double theta, LorentzVec v) {
  return boost_apply(Boost::from_angle(theta), v);
}

// Signed distance of x from the boundary of the future causal cone, X1 - |X2|.
inline double cone_margin(LorentzVec x) { return x.t - std::abs(x.s); }

}  // namespace lockcert
