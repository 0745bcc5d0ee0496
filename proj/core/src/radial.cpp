#include "lockcert/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "lockcert/error.hpp"

namespace lockcert {
namespace {

constexpr double kJunctionEps = 1e-12;
constexpr double kSchwarzschildStep = 1e-3;
constexpr long kMaxSchwarzschildSteps = 200000;

double junction_slack(double s) { return kJunctionEps * std::max(1.0, std::abs(s)); }

double curvature_from_jet(int n, const WarpJet& jet) {
  const double dim = static_cast<double>(n);
  return (dim - 1.0) *
         (-2.0 * jet.d2f / jet.f + (dim - 2.0) * (1.0 - jet.df * jet.df) / (jet.f * jet.f));
}

bool asymptotically_flat(const ProfilePiece& last) {
  if (last.kind == PieceKind::SchwarzschildEnd) return true;
  return last.kind == PieceKind::Linear && std::abs(last.beta - 1.0) <= kJunctionEps;
}

std::string piece_label(std::size_t i) { return "piece " + std::to_string(i + 1); }

}  // namespace

WarpJet schwarzschild_jet_at_f(int n, double mass, double f) {
  if (!(f > 0.0)) throw Error(ErrorCode::OutOfDomain, "warping value must be positive");
  const double power = std::pow(f, n - 2);
  const double slope_sq = 1.0 - 2.0 * mass / power;
  if (slope_sq < 0.0) {
    throw Error(ErrorCode::OutOfDomain, "warping value lies inside the Schwarzschild horizon");
  }
  // f'^2 = 1 - 2m f^{2-n}  =>  f'' = (n-2) m f^{1-n}
  return {f, std::sqrt(slope_sq), static_cast<double>(n - 2) * mass / (power * f)};
}

double schwarzschild_f(int n, double mass, double s0, double f0, double s) {
  if (s < s0) throw Error(ErrorCode::OutOfDomain, "query precedes the Schwarzschild end");
  if (s == s0) return f0;
  using State = std::array<double, 1>;
  const auto rhs = [n, mass](const State& x, State& dxdt, double) {
    const double slope_sq = 1.0 - 2.0 * mass / std::pow(x[0], n - 2);
    dxdt[0] = std::sqrt(std::max(slope_sq, 0.0));
  };
  const long steps = std::clamp(static_cast<long>(std::ceil((s - s0) / kSchwarzschildStep)), 1L,
                                kMaxSchwarzschildSteps);
  const double h = (s - s0) / static_cast<double>(steps);
  State state{f0};
  boost::numeric::odeint::runge_kutta4<State> stepper;
  boost::numeric::odeint::integrate_n_steps(stepper, rhs, state, s0, h, steps);
  return state[0];
}

RadialProfile::RadialProfile(int n, std::vector<ProfilePiece> pieces)
    : n_(n), pieces_(std::move(pieces)) {
  if (n_ < 3) throw Error(ErrorCode::ValidationError, "dimension n must be at least 3");
  if (pieces_.empty()) throw Error(ErrorCode::ValidationError, "profile has no pieces");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    const bool last = i + 1 == pieces_.size();
    if (!std::isfinite(p.s_begin) || !(p.s_end > p.s_begin)) {
      throw Error(ErrorCode::ValidationError, piece_label(i) + ": empty parameter interval");
    }
    if (last != std::isinf(p.s_end)) {
      throw Error(ErrorCode::ValidationError,
                  piece_label(i) + ": only the last piece is semi-infinite");
    }
    if (i > 0 && std::abs(p.s_begin - pieces_[i - 1].s_end) > junction_slack(p.s_begin)) {
      throw Error(ErrorCode::ValidationError, piece_label(i) + ": intervals are not contiguous");
    }
    switch (p.kind) {
      case PieceKind::SphericalCap:
        if (i != 0 || p.s_begin != 0.0 || p.s_end >= std::numbers::pi) {
          throw Error(ErrorCode::ValidationError,
                      piece_label(i) + ": a cap must be the first piece on [0, s_end], s_end < pi");
        }
        break;
      case PieceKind::SchwarzschildEnd:
        if (!last || p.mass < 0.0 || !(p.f_begin > 0.0) ||
            std::pow(p.f_begin, n_ - 2) <= 2.0 * p.mass) {
          throw Error(ErrorCode::ValidationError,
                      piece_label(i) + ": a Schwarzschild end must be last, outside its horizon");
        }
        break;
      case PieceKind::Linear: {
        const double f0 = p.alpha + p.beta * p.s_begin;
        const bool center = i == 0 && p.s_begin == 0.0 && f0 == 0.0;
        if (!(f0 > 0.0) && !center) {
          throw Error(ErrorCode::ValidationError, piece_label(i) + ": f must be positive");
        }
        if (last ? p.beta < 0.0 : !(p.alpha + p.beta * p.s_end > 0.0)) {
          throw Error(ErrorCode::ValidationError, piece_label(i) + ": f must be positive");
        }
        break;
      }
    }
    if (i > 0) {
      const double left = jet(i - 1, p.s_begin).f;
      const double right = jet(i, p.s_begin).f;
      if (std::abs(left - right) > junction_slack(left)) {
        throw Error(ErrorCode::ValidationError,
                    piece_label(i) + ": induced metrics do not match at the junction");
      }
    }
  }
}

WarpJet RadialProfile::jet(std::size_t piece, double s) const {
  if (piece >= pieces_.size()) throw Error(ErrorCode::OutOfDomain, "no such piece");
  const auto& p = pieces_[piece];
  if (s < p.s_begin - junction_slack(s) || s > p.s_end + junction_slack(s)) {
    throw Error(ErrorCode::OutOfDomain, piece_label(piece) + ": parameter outside the piece");
  }
  switch (p.kind) {
    case PieceKind::Linear:
      return {p.alpha + p.beta * s, p.beta, 0.0};
    case PieceKind::SphericalCap:
      return {std::sin(s), std::cos(s), -std::sin(s)};
    case PieceKind::SchwarzschildEnd:
      return schwarzschild_jet_at_f(n_, p.mass,
                                    schwarzschild_f(n_, p.mass, p.s_begin, p.f_begin,
                                                    std::max(s, p.s_begin)));
  }
  throw Error(ErrorCode::OutOfDomain, "unknown piece kind");
}

std::size_t RadialProfile::piece_at(double s) const {
  if (s < pieces_.front().s_begin - junction_slack(s)) {
    throw Error(ErrorCode::OutOfDomain, "parameter precedes the profile");
  }
  std::size_t index = 0;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (s >= pieces_[i].s_begin) index = i;
  }
  return index;
}

bool RadialProfile::closes_smoothly_at_center() const {
  const auto& first = pieces_.front();
  if (first.s_begin != 0.0) return false;
  const WarpJet j = jet(0, 0.0);
  return j.f == 0.0 && std::abs(j.df - 1.0) <= kJunctionEps;
}

ProfileBuilder& ProfileBuilder::start(double s0, double f0) {
  if (!pieces_.empty()) throw Error(ErrorCode::ValidationError, "start must precede all pieces");
  s_ = s0;
  f_ = f0;
  return *this;
}

void ProfileBuilder::require_open(const char* what) const {
  if (closed_) {
    throw Error(ErrorCode::ValidationError,
                std::string(what) + " after the semi-infinite end piece");
  }
}

ProfileBuilder& ProfileBuilder::cap(double s_end) {
  require_open("cap");
  if (!pieces_.empty() || s_ != 0.0 || f_ != 0.0) {
    throw Error(ErrorCode::ValidationError, "a cap must start at the center");
  }
  pieces_.push_back({PieceKind::SphericalCap, 0.0, s_end});
  s_ = s_end;
  f_ = std::sin(s_end);
  return *this;
}

ProfileBuilder& ProfileBuilder::linear_to_s(double slope, double s_end) {
  require_open("linear piece");
  const double alpha = f_ - slope * s_;
  pieces_.push_back({PieceKind::Linear, s_, s_end, alpha, slope});
  s_ = s_end;
  f_ = alpha + slope * s_end;
  return *this;
}

ProfileBuilder& ProfileBuilder::linear_to_f(double slope, double f_end) {
  if (slope == 0.0) throw Error(ErrorCode::ValidationError, "zero slope cannot reach a new f");
  require_open("linear piece");
  const double s_end = s_ + (f_end - f_) / slope;
  const double alpha = f_ - slope * s_;
  pieces_.push_back({PieceKind::Linear, s_, s_end, alpha, slope});
  s_ = s_end;
  f_ = f_end;
  return *this;
}

ProfileBuilder& ProfileBuilder::linear_end(double slope) {
  require_open("linear end");
  pieces_.push_back({PieceKind::Linear, s_, std::numeric_limits<double>::infinity(),
                     f_ - slope * s_, slope});
  closed_ = true;
  return *this;
}

ProfileBuilder& ProfileBuilder::schwarzschild_mass(double mass) {
  require_open("Schwarzschild end");
  ProfilePiece piece{PieceKind::SchwarzschildEnd, s_, std::numeric_limits<double>::infinity()};
  piece.mass = mass;
  piece.f_begin = f_;
  pieces_.push_back(piece);
  closed_ = true;
  return *this;
}

ProfileBuilder& ProfileBuilder::schwarzschild_slope(double slope) {
  if (!(slope > 0.0) || slope > 1.0) {
    throw Error(ErrorCode::ValidationError, "Schwarzschild junction slope must lie in (0, 1]");
  }
  return schwarzschild_mass(0.5 * (1.0 - slope * slope) * std::pow(f_, n_ - 2));
}

RadialProfile ProfileBuilder::build() const {
  if (!closed_) throw Error(ErrorCode::ValidationError, "profile needs a semi-infinite end piece");
  return RadialProfile(n_, pieces_);
}

double sphere_mean_curvature(const RadialProfile& profile, std::size_t piece, double s) {
  const WarpJet j = profile.jet(piece, s);
  if (!(j.f > 0.0)) throw Error(ErrorCode::OutOfDomain, "sphere degenerates (f <= 0)");
  return static_cast<double>(profile.n() - 1) * j.df / j.f;
}

double warped_scalar_curvature(const RadialProfile& profile, std::size_t piece, double s) {
  const WarpJet j = profile.jet(piece, s);
  if (!(j.f > 0.0)) throw Error(ErrorCode::OutOfDomain, "scalar curvature undefined at f <= 0");
  return curvature_from_jet(profile.n(), j);
}

double hawking_mass(const RadialProfile& profile, double s) {
  if (profile.n() != 3) {
    throw Error(ErrorCode::DimensionUnsupported, "Hawking mass is implemented for n = 3 only");
  }
  const WarpJet j = profile.jet(profile.piece_at(s), s);
  if (!(j.f > 0.0)) throw Error(ErrorCode::OutOfDomain, "Hawking mass undefined at f <= 0");
  return 0.5 * j.f * (1.0 - j.df * j.df);
}

double adm_mass_limit(const RadialProfile& profile) {
  if (profile.n() != 3) {
    throw Error(ErrorCode::DimensionUnsupported, "ADM mass is implemented for n = 3 only");
  }
  const auto& last = profile.pieces().back();
  if (!asymptotically_flat(last)) {
    throw Error(ErrorCode::NotAsymptoticallyFlat, "f' does not tend to 1 on the end");
  }
  return last.kind == PieceKind::SchwarzschildEnd ? last.mass : 0.0;
}

CornerChain chain_from_profile(const RadialProfile& profile, int samples_per_interface,
                               double tol) {
  if (samples_per_interface < 1) {
    throw Error(ErrorCode::InvalidArgument, "samples_per_interface must be at least 1");
  }
  if (profile.piece_count() < 2) {
    throw Error(ErrorCode::ValidationError, "profile has no junctions");
  }
  if (!profile.closes_smoothly_at_center()) {
    throw Error(ErrorCode::InnerBoundary, "profile has an inner boundary instead of a smooth center");
  }
  const auto& pieces = profile.pieces();
  if (!asymptotically_flat(pieces.back())) {
    throw Error(ErrorCode::NotAsymptoticallyFlat, "f' does not tend to 1 on the end");
  }

  const int n = profile.n();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.kind == PieceKind::Linear && std::abs(p.beta) > 1.0 + tol) {
      throw Error(ErrorCode::CurvatureHypothesisViolated,
                  piece_label(i) + ": slope above 1 gives negative scalar curvature");
    }
    for (int k = 0; k < kCurvatureSamplesPerPiece; ++k) {
      const double u = (k + 0.5) / kCurvatureSamplesPerPiece;
      double curvature = 0.0;
      if (p.kind == PieceKind::SchwarzschildEnd) {
        curvature = curvature_from_jet(n, schwarzschild_jet_at_f(n, p.mass, p.f_begin * (1.0 + 9.0 * u)));
      } else {
        const double span = std::isinf(p.s_end) ? 10.0 * std::max(1.0, p.s_begin) : p.s_end - p.s_begin;
        curvature = warped_scalar_curvature(profile, i, p.s_begin + u * span);
      }
      if (curvature < -tol) {
        throw Error(ErrorCode::CurvatureHypothesisViolated,
                    piece_label(i) + ": sampled scalar curvature is negative");
      }
    }
  }

  CornerChain chain;
  chain.n = n;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const double s = pieces[i].s_begin;
    const double h_minus = sphere_mean_curvature(profile, i - 1, s);
    const double h_plus = sphere_mean_curvature(profile, i, s);
    if (!(h_minus > 0.0) || !(h_plus > 0.0)) {
      throw Error(ErrorCode::NonpositiveMeanCurvature,
                  "junction " + std::to_string(i) + ": mean curvature is not positive", i);
    }
    InterfaceData iface;
    iface.name = "Sigma_" + std::to_string(i);
    iface.samples_minus.assign(static_cast<std::size_t>(samples_per_interface), h_minus);
    iface.samples_plus.assign(static_cast<std::size_t>(samples_per_interface), h_plus);
    chain.interfaces.push_back(std::move(iface));
  }
  return chain;
}

}  // namespace lockcert
