#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lockcert/chain.hpp"
#include "lockcert/lemma.hpp"

namespace lockcert {

struct ThetaScan {
  double best_theta = 0.0;
  double best_margin = 0.0;
  double step = 0.0;
};

// Brute-force maximisation of min_k (X1 - |X2|) over `steps` equally spaced
// angles in [-range, range]. Knows nothing about the closed-form angle.
ThetaScan scan_theta(double a, double xi_out, std::span<const SamplePair> samples, double range,
                     int steps);

// Lipschitz constant of θ -> min margin on |θ| <= theta_max:
// 2 (max|H-| + |a|) e^{theta_max}.
double margin_lipschitz(double a, std::span<const SamplePair> samples, double theta_max);

struct OracleInterfaceReport {
  std::string name;
  double a = 0.0;
  double xi_target = 0.0;
  double radicand = 0.0;
  bool closed_form_available = false;
  double closed_theta = 0.0;
  double closed_margin = 0.0;
  double grid_theta = 0.0;
  double grid_margin = 0.0;
  double lipschitz = 0.0;
  double resolution_bound = 0.0;
  std::vector<std::string> flags;  // GridBeatsClosedForm, GridInconsistent, RangeTooNarrow, RadicandNegative, ClosedFormUnavailable
};

struct OracleReport {
  double range = 0.0;
  int steps = 0;
  std::vector<OracleInterfaceReport> interfaces;

  bool flagged() const;
};

OracleInterfaceReport oracle_lemma(const LemmaInput& input, double range, int steps,
                                   double tol = kDefaultTol);

// Per corner: a = c_{l-1}, target xi = c_l (0 at the outermost corner).
OracleReport run_oracle(const CornerChain& chain, double range, int steps,
                        double tol = kDefaultTol);

std::string serialize_oracle_report(const OracleReport& report);

}  // namespace lockcert
