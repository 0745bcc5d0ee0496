#pragma once

// Rotationally symmetric fixtures g = ds^2 + f(s)^2 g_{S^{n-1}} assembled from
// pieces on consecutive parameter intervals. Junctions between pieces are the
// corner hypersurfaces of the generated chain.

#include <cstddef>
#include <limits>
#include <vector>

#include "lockcert/chain.hpp"

namespace lockcert {

enum class PieceKind { Linear, SphericalCap, SchwarzschildEnd };

struct ProfilePiece {
  PieceKind kind = PieceKind::Linear;
  double s_begin = 0.0;
  double s_end = std::numeric_limits<double>::infinity();
  double alpha = 0.0;  // linear: f = alpha + beta*s
  double beta = 1.0;
  double mass = 0.0;     // schwarzschild-end
  double f_begin = 0.0;  // schwarzschild-end: f at s_begin
};

// Value and first two derivatives of the warping function.
struct WarpJet {
  double f = 0.0;
  double df = 0.0;
  double d2f = 0.0;
};

class RadialProfile {
 public:
  // Validates continuity, positivity and piece placement; throws ValidationError.
  RadialProfile(int n, std::vector<ProfilePiece> pieces);

  int n() const noexcept { return n_; }
  const std::vector<ProfilePiece>& pieces() const noexcept { return pieces_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }

  // Jet of the named piece at s; s may sit on either end of the piece interval.
  WarpJet jet(std::size_t piece, double s) const;

  // Index of the piece owning s, using the outer piece at junctions.
  std::size_t piece_at(double s) const;

  bool closes_smoothly_at_center() const;

 private:
  int n_;
  std::vector<ProfilePiece> pieces_;
};

// Schwarzschild end quantities at a given warping value; bypasses integration.
WarpJet schwarzschild_jet_at_f(int n, double mass, double f);

// Integrates f' = sqrt(1 - 2m/f^{n-2}) from (s0, f0) to s with fixed-step RK4.
double schwarzschild_f(int n, double mass, double s0, double f0, double s);

/// Fluent construction of profiles from the data used to describe fixtures:
/// slopes, warping values at junctions and masses.
class ProfileBuilder {
 public:
  explicit ProfileBuilder(int n) : n_(n) {}

  // Inner boundary at (s0, f0); the default is the smooth center (0, 0).
  ProfileBuilder& start(double s0, double f0);
  ProfileBuilder& cap(double s_end);
  ProfileBuilder& linear_to_s(double slope, double s_end);
  ProfileBuilder& linear_to_f(double slope, double f_end);
  ProfileBuilder& linear_end(double slope);
  ProfileBuilder& schwarzschild_mass(double mass);
  // Mass chosen so that f' equals `slope` at the junction.
  ProfileBuilder& schwarzschild_slope(double slope);

  RadialProfile build() const;

 private:
  void require_open(const char* what) const;

  int n_;
  double s_ = 0.0;
  double f_ = 0.0;
  bool closed_ = false;
  std::vector<ProfilePiece> pieces_;
};

// (n-1) f'/f with f' from the named piece (the infinity-pointing normal).
double sphere_mean_curvature(const RadialProfile& profile, std::size_t piece, double s);

// (n-1) [ -2 f''/f + (n-2)(1 - f'^2)/f^2 ]
double warped_scalar_curvature(const RadialProfile& profile, std::size_t piece, double s);

// (f/2)(1 - f'^2) with the outer one-sided derivative; n = 3 only.
double hawking_mass(const RadialProfile& profile, double s);

double adm_mass_limit(const RadialProfile& profile);

inline constexpr int kCurvatureSamplesPerPiece = 1024;

/// One interface per junction with samples_minus from the inner piece and
/// samples_plus from the outer piece. Requires a smooth center, nonnegative
/// sampled scalar curvature, an asymptotically flat end and positive mean
/// curvature on both sides of every junction.
CornerChain chain_from_profile(const RadialProfile& profile, int samples_per_interface,
                               double tol = kDefaultTol);

}  // namespace lockcert
