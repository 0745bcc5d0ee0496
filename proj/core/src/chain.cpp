#include "lockcert/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lockcert/error.hpp"

namespace lockcert {
namespace {

std::string label(std::size_t index) { return "interface " + std::to_string(index + 1); }

bool all_finite(const std::vector<double>& values) {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

double square(double x) { return x * x; }

}  // namespace

std::string_view to_string(HypothesisOutcome outcome) noexcept {
  switch (outcome) {
    case HypothesisOutcome::TheoremApplies: return "TheoremApplies";
    case HypothesisOutcome::MiaoCase: return "MiaoCase";
    case HypothesisOutcome::Rejected: return "Rejected";
  }
  return "Rejected";
}

std::string_view to_string(RejectReason reason) noexcept {
  switch (reason) {
    case RejectReason::None: return "none";
    case RejectReason::TooFewInterfaces: return "too_few_interfaces";
    case RejectReason::Positivity: return "positivity";
    case RejectReason::Pattern: return "pattern";
    case RejectReason::SquareSum: return "square_sum";
  }
  return "none";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Certified: return "Certified";
    case Verdict::CertifiedMiaoCase: return "CertifiedMiaoCase";
    case Verdict::CertifiedWithWarning: return "CertifiedWithWarning";
    case Verdict::Rejected: return "Rejected";
    case Verdict::Failed: return "Failed";
  }
  return "Failed";
}

std::optional<Verdict> verdict_from_string(std::string_view text) noexcept {
  for (Verdict v : {Verdict::Certified, Verdict::CertifiedMiaoCase, Verdict::CertifiedWithWarning,
                    Verdict::Rejected, Verdict::Failed}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

Bounds effective_bounds(const InterfaceData& iface) {
  if (iface.samples_minus.empty() || iface.samples_plus.empty()) {
    throw Error(ErrorCode::EmptySamples, "empty samples");
  }
  Bounds bounds{*std::min_element(iface.samples_minus.begin(), iface.samples_minus.end()),
                *std::max_element(iface.samples_plus.begin(), iface.samples_plus.end())};
  if (iface.bound_low_minus) {
    if (*iface.bound_low_minus > bounds.low_minus) {
      throw Error(ErrorCode::OverrideInconsistent,
                  "bound_low_minus exceeds a sample of H- (needs H- >= H_low)");
    }
    bounds.low_minus = *iface.bound_low_minus;
  }
  if (iface.bound_up_plus) {
    if (*iface.bound_up_plus < bounds.up_plus) {
      throw Error(ErrorCode::OverrideInconsistent,
                  "bound_up_plus is below a sample of H+ (needs H+ <= H_up)");
    }
    bounds.up_plus = *iface.bound_up_plus;
  }
  return bounds;
}

void validate_structure(const CornerChain& chain) {
  if (chain.n < 3) {
    throw Error(ErrorCode::ValidationError, "dimension n must be at least 3");
  }
  if (chain.interfaces.empty()) {
    throw Error(ErrorCode::ValidationError, "chain has no interfaces");
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& iface = chain.interfaces[i];
    if (iface.samples_minus.empty() || iface.samples_plus.empty()) {
      throw Error(ErrorCode::ValidationError, label(i) + ": empty samples", i + 1);
    }
    if (iface.samples_minus.size() != iface.samples_plus.size()) {
      throw Error(ErrorCode::ValidationError,
                  label(i) + ": samples_minus and samples_plus differ in length", i + 1);
    }
    if (!all_finite(iface.samples_minus) || !all_finite(iface.samples_plus) ||
        (iface.bound_low_minus && !std::isfinite(*iface.bound_low_minus)) ||
        (iface.bound_up_plus && !std::isfinite(*iface.bound_up_plus))) {
      throw Error(ErrorCode::ValidationError, label(i) + ": non-finite value", i + 1);
    }
    try {
      effective_bounds(iface);
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationError, label(i) + ": " + e.what(), i + 1);
    }
  }
  if (chain.lambda) {
    const int n_ifaces = static_cast<int>(chain.size());
    if (*chain.lambda < 1 || *chain.lambda >= n_ifaces) {
      throw Error(ErrorCode::ValidationError, "lambda must satisfy 1 <= lambda < N");
    }
  }
}

double chain_scale(const CornerChain& chain) {
  double scale = 1.0;
  for (const auto& iface : chain.interfaces) {
    const Bounds b = effective_bounds(iface);
    scale = std::max({scale, std::abs(b.low_minus), std::abs(b.up_plus)});
  }
  return scale;
}

HypothesisReport check_hypotheses(const CornerChain& chain, double tol) {
  validate_structure(chain);
  HypothesisReport report;
  const double scale = chain_scale(chain);
  const double slack = tol * scale;
  const std::size_t n_ifaces = chain.size();

  std::vector<Bounds> bounds;
  bounds.reserve(n_ifaces);
  for (const auto& iface : chain.interfaces) bounds.push_back(effective_bounds(iface));

  report.positivity_ok = true;
  for (std::size_t i = 0; i < n_ifaces; ++i) {
    const auto& iface = chain.interfaces[i];
    const auto positive = [](double v) { return v > 0.0; };
    if (!std::all_of(iface.samples_minus.begin(), iface.samples_minus.end(), positive) ||
        !std::all_of(iface.samples_plus.begin(), iface.samples_plus.end(), positive) ||
        bounds[i].low_minus <= 0.0 || bounds[i].up_plus <= 0.0) {
      report.positivity_ok = false;
    }
  }

  // Λ is valid when H_low <= H_up up to Λ and H_low >= H_up after it.
  for (std::size_t split = 1; split < n_ifaces; ++split) {
    bool valid = true;
    for (std::size_t i = 0; i < n_ifaces && valid; ++i) {
      const bool concave_side = i < split;
      valid = concave_side ? bounds[i].low_minus <= bounds[i].up_plus + slack
                           : bounds[i].low_minus >= bounds[i].up_plus - slack;
    }
    if (valid) report.lambda_candidates.push_back(static_cast<int>(split));
  }
  const auto& candidates = report.lambda_candidates;
  if (chain.lambda) {
    report.lambda_pattern_ok =
        std::find(candidates.begin(), candidates.end(), *chain.lambda) != candidates.end();
    if (report.lambda_pattern_ok) report.lambda = chain.lambda;
  } else if (!candidates.empty()) {
    report.lambda_pattern_ok = true;
    report.lambda = candidates.front();
  }

  report.square_sum = 0.0;
  for (const auto& b : bounds) report.square_sum += square(b.low_minus) - square(b.up_plus);
  report.square_sum_ok = report.square_sum >= -tol * scale * scale;

  if (n_ifaces < 2) {
    report.reason = RejectReason::TooFewInterfaces;
  } else if (!report.positivity_ok) {
    report.reason = RejectReason::Positivity;
  } else if (!report.lambda_pattern_ok) {
    report.reason = RejectReason::Pattern;
  } else if (!report.square_sum_ok) {
    report.reason = RejectReason::SquareSum;
  }
  if (report.reason != RejectReason::None) {
    report.outcome = HypothesisOutcome::Rejected;
    return report;
  }
  const DefectLedger ledger = defect_ledger(chain, tol);
  report.outcome = ledger.lambda_prime ? HypothesisOutcome::TheoremApplies
                                       : HypothesisOutcome::MiaoCase;
  return report;
}

DefectLedger defect_ledger(const CornerChain& chain, double tol) {
  const double scale = chain_scale(chain);
  const double snap = tol * scale * scale;
  DefectLedger ledger;
  ledger.d.assign(chain.size() + 1, 0.0);
  ledger.c.assign(chain.size() + 1, 0.0);
  double running = 0.0;
  for (std::size_t ell = 1; ell <= chain.size(); ++ell) {
    const Bounds b = effective_bounds(chain.interfaces[ell - 1]);
    running += square(b.up_plus) - square(b.low_minus);
    ledger.d[ell] = std::abs(running) <= snap ? 0.0 : running;
    ledger.c[ell] = std::sqrt(std::max(ledger.d[ell], 0.0));
    if (ledger.d[ell] > 0.0) ledger.lambda_prime = static_cast<int>(ell);
  }
  return ledger;
}

std::vector<double> k_constants(const DefectLedger& ledger, int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "dimension n must be at least 3");
  std::vector<double> k(ledger.c.size());
  std::transform(ledger.c.begin(), ledger.c.end(), k.begin(),
                 [n](double c) { return c / static_cast<double>(n - 1); });
  return k;
}

double effective_upper(int ell, const CornerChain& chain, const DefectLedger& ledger, double tol) {
  if (ell < 1 || static_cast<std::size_t>(ell) > chain.size() ||
      ledger.c.size() != chain.size() + 1) {
    throw Error(ErrorCode::InvalidArgument, "corner index out of range");
  }
  const Bounds b = effective_bounds(chain.interfaces[ell - 1]);
  if (ledger.lambda_prime && ell <= *ledger.lambda_prime) return b.up_plus;

  const double scale = chain_scale(chain);
  const double incoming = ledger.c[ell - 1];
  const double radicand = square(b.low_minus) - square(incoming);
  if (radicand < -tol * scale * scale) {
    throw Error(ErrorCode::InvariantBreach,
                "H_low^2 - c_{l-1}^2 is negative beyond the defect split", ell);
  }
  const double adjusted = std::sqrt(std::max(radicand, 0.0));
  if (adjusted < b.up_plus - tol * scale) {
    throw Error(ErrorCode::InvariantBreach, "adjusted upper bound falls below H_up", ell);
  }
  return std::max(adjusted, b.up_plus);
}

LockCertificate certify(const CornerChain& chain, double tol) {
  LockCertificate cert;
  cert.n = chain.n;
  cert.tol = tol;
  cert.hypotheses = check_hypotheses(chain, tol);
  cert.scale = chain_scale(chain);
  cert.ledger = defect_ledger(chain, tol);
  cert.k_factors = k_constants(cert.ledger, chain.n);

  if (cert.hypotheses.outcome == HypothesisOutcome::Rejected) {
    cert.verdict = Verdict::Rejected;
    cert.reason = "hypotheses rejected: " + std::string(to_string(cert.hypotheses.reason));
    return cert;
  }

  const double slack = tol * cert.scale;
  cert.verdict = cert.hypotheses.outcome == HypothesisOutcome::MiaoCase ? Verdict::CertifiedMiaoCase
                                                                        : Verdict::Certified;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& iface = chain.interfaces[i];
    const Bounds b = effective_bounds(iface);
    const int ell = static_cast<int>(i) + 1;
    InterfaceRecord record;
    record.name = iface.name;
    record.effective_low = b.low_minus;
    record.sample_count = iface.samples_minus.size();

    std::vector<SamplePair> samples(iface.samples_minus.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
      samples[k] = {iface.samples_minus[k], iface.samples_plus[k]};
    }

    if (cert.hypotheses.outcome == HypothesisOutcome::MiaoCase) {
      // k ≡ 0 and θ = 0: the jump reduces to H- - H+.
      record.effective_up = b.up_plus;
      record.min_margin = min_cone_margin(Boost{}, 0.0, 0.0, samples);
      if (record.min_margin < -slack) {
        cert.verdict = Verdict::CertifiedWithWarning;
        cert.warnings.push_back(label(i) + ": pointwise H- < H+; relies on the bound-level reduction");
      }
    } else {
      try {
        record.a = cert.ledger.c[i];
        record.effective_up = effective_upper(ell, chain, cert.ledger, tol);
        const LemmaInput input{b.low_minus, record.effective_up, record.a, std::move(samples)};
        const InterfaceVerdict verdict = verify_interface(input, tol, cert.scale);
        record.xi = verdict.xi;
        record.theta = verdict.theta;
        record.min_margin = verdict.min_margin;
        if (std::abs(record.xi - cert.ledger.c[i + 1]) > slack) {
          throw Error(ErrorCode::InvariantBreach, "outgoing k-trace differs from c_l");
        }
        if (!verdict.pass && cert.verdict != Verdict::Failed) {
          cert.verdict = Verdict::Failed;
          cert.failed_interface = i + 1;
          cert.reason = label(i) + ": jump condition X1 >= |X2| violated";
        }
      } catch (const Error& e) {
        e.rethrow_at(i + 1);
      }
    }
    cert.interfaces.push_back(std::move(record));
  }
  if (cert.k_factors.back() != 0.0) {
    throw Error(ErrorCode::InvariantBreach, "k does not vanish on the asymptotic end");
  }
  return cert;
}

LockCertificate build_certificate(const CornerChain& chain, double tol) {
  LockCertificate cert = certify(chain, tol);
  if (cert.verdict == Verdict::Rejected) {
    throw Error(ErrorCode::HypothesesNotChecked, cert.reason);
  }
  return cert;
}

bool verify_certificate(const LockCertificate& cert, const CornerChain& chain) {
  if (!is_certified(cert.verdict)) return false;
  const std::size_t n_ifaces = chain.size();
  if (cert.n != chain.n || cert.interfaces.size() != n_ifaces ||
      cert.ledger.d.size() != n_ifaces + 1 || cert.ledger.c.size() != n_ifaces + 1 ||
      cert.k_factors.size() != n_ifaces + 1) {
    throw Error(ErrorCode::StructuralMismatch, "certificate and chain differ in shape");
  }
  for (std::size_t i = 0; i < n_ifaces; ++i) {
    if (cert.interfaces[i].sample_count != chain.interfaces[i].samples_minus.size()) {
      throw Error(ErrorCode::StructuralMismatch, label(i) + ": sample count differs", i + 1);
    }
  }

  const double tol = cert.tol;
  const double scale = chain_scale(chain);
  const double slack = tol * scale;
  const HypothesisReport report = check_hypotheses(chain, tol);
  if (report.outcome == HypothesisOutcome::Rejected) return false;
  const bool miao = report.outcome == HypothesisOutcome::MiaoCase;
  if (miao != (cert.verdict != Verdict::Certified)) return false;

  const DefectLedger ledger = defect_ledger(chain, tol);
  if (cert.ledger.d.front() != 0.0 || cert.ledger.c.front() != 0.0) return false;
  if (cert.k_factors.front() != 0.0 || cert.k_factors.back() != 0.0) return false;
  const double k_divisor = static_cast<double>(chain.n - 1);
  for (std::size_t ell = 0; ell <= n_ifaces; ++ell) {
    const double d = cert.ledger.d[ell];
    const double c = cert.ledger.c[ell];
    if (c < 0.0 || std::abs(c * c - std::max(d, 0.0)) > slack * scale) return false;
    if (std::abs(d - ledger.d[ell]) > slack * scale) return false;
    if (std::abs(c - ledger.c[ell]) > slack) return false;
    if (std::abs(cert.k_factors[ell] - c / k_divisor) > slack) return false;
  }

  for (std::size_t i = 0; i < n_ifaces; ++i) {
    const auto& record = cert.interfaces[i];
    const auto& iface = chain.interfaces[i];
    const double a = ledger.c[i];
    const double out = ledger.c[i + 1];
    if (std::abs(record.a - a) > slack || std::abs(record.xi - out) > slack) return false;
    const Boost boost = Boost::from_angle(record.theta);
    for (std::size_t k = 0; k < iface.samples_minus.size(); ++k) {
      const LorentzVec x = jump_vector(boost, iface.samples_minus[k], a, iface.samples_plus[k], out);
      if (!dec_jump_holds(x, tol, scale)) return false;
    }
  }
  return true;
}

}  // namespace lockcert
