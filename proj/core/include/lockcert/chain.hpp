#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lockcert/lemma.hpp"

namespace lockcert {

// One corner hypersurface Σ_i with sampled one-sided mean curvatures.
struct InterfaceData {
  std::string name;
  std::vector<double> samples_minus;
  std::vector<double> samples_plus;
  std::optional<double> bound_low_minus;
  std::optional<double> bound_up_plus;
};

struct Bounds {
  double low_minus = 0.0;
  double up_plus = 0.0;
};

// Interfaces are ordered inner to outer; index 0 here is Σ_1.
struct CornerChain {
  int n = 3;
  std::vector<InterfaceData> interfaces;
  std::optional<int> lambda;

  std::size_t size() const noexcept { return interfaces.size(); }
};

Bounds effective_bounds(const InterfaceData& iface);

// Throws ValidationError on structural defects: n < 3, no interfaces, empty or
// unequal sample lists, non-finite values, inconsistent overrides, Λ outside [1, N).
void validate_structure(const CornerChain& chain);

// max(1, every effective bound in the chain)
double chain_scale(const CornerChain& chain);

enum class HypothesisOutcome { TheoremApplies, MiaoCase, Rejected };

enum class RejectReason { None, TooFewInterfaces, Positivity, Pattern, SquareSum };

std::string_view to_string(HypothesisOutcome outcome) noexcept;
std::string_view to_string(RejectReason reason) noexcept;

struct HypothesisReport {
  bool positivity_ok = false;
  bool lambda_pattern_ok = false;
  std::optional<int> lambda;               // smallest valid split index
  std::vector<int> lambda_candidates;      // every valid split index
  double square_sum = 0.0;                 // Σ (H_low^2 - H_up^2)
  bool square_sum_ok = false;
  HypothesisOutcome outcome = HypothesisOutcome::Rejected;
  RejectReason reason = RejectReason::None;
};

HypothesisReport check_hypotheses(const CornerChain& chain, double tol = kDefaultTol);

struct DefectLedger {
  std::vector<double> d;  // d_0 .. d_N
  std::vector<double> c;  // c_0 .. c_N
  std::optional<int> lambda_prime;
};

// Prefix sums d_l = Σ_{i<=l} (H_up^2 - H_low^2) with c_l = sqrt(max(d_l, 0)).
// Entries with |d_l| <= tol*scale^2 are stored as exactly 0.
DefectLedger defect_ledger(const CornerChain& chain, double tol = kDefaultTol);

std::vector<double> k_constants(const DefectLedger& ledger, int n);

// Upper bound for H_+ fed to the jump lemma at corner `ell` (1-based): the raw
// bound for ell <= Λ', sqrt(H_low^2 - c_{ell-1}^2) beyond Λ'.
double effective_upper(int ell, const CornerChain& chain, const DefectLedger& ledger,
                       double tol = kDefaultTol);

enum class Verdict { Certified, CertifiedMiaoCase, CertifiedWithWarning, Rejected, Failed };

std::string_view to_string(Verdict verdict) noexcept;
std::optional<Verdict> verdict_from_string(std::string_view text) noexcept;

inline bool is_certified(Verdict v) {
  return v == Verdict::Certified || v == Verdict::CertifiedMiaoCase ||
         v == Verdict::CertifiedWithWarning;
}

struct InterfaceRecord {
  std::string name;
  double a = 0.0;
  double effective_low = 0.0;
  double effective_up = 0.0;
  double xi = 0.0;
  double theta = 0.0;
  double min_margin = 0.0;
  std::size_t sample_count = 0;
};

struct LockCertificate {
  int n = 3;
  double tol = kDefaultTol;
  double scale = 1.0;
  HypothesisReport hypotheses;
  DefectLedger ledger;
  std::vector<double> k_factors;
  std::vector<InterfaceRecord> interfaces;
  Verdict verdict = Verdict::Rejected;
  std::optional<std::size_t> failed_interface;  // 1-based
  std::string reason;
  std::vector<std::string> warnings;
};

// Builds the certificate; rejected hypotheses yield a Rejected certificate
// carrying the report and ledger but no interface records.
LockCertificate certify(const CornerChain& chain, double tol = kDefaultTol);

// As certify, but throws HypothesesNotChecked when the hypotheses are rejected.
LockCertificate build_certificate(const CornerChain& chain, double tol = kDefaultTol);

// Independent re-check of a certificate against its chain. Recomputes every
// jump vector from the recorded angles and k-constants; never re-derives θ.
// Throws StructuralMismatch when interface or sample counts differ.
bool verify_certificate(const LockCertificate& cert, const CornerChain& chain);

}  // namespace lockcert
