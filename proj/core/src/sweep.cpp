#include "lockcert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "lockcert/chain.hpp"
#include "lockcert/documents.hpp"
#include "lockcert/error.hpp"

namespace lockcert {
namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidGrid, message);
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    parts.push_back(trim(text.substr(begin, end == std::string_view::npos ? end : end - begin)));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

double parse_number(std::string_view text, const std::string& key) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    invalid(key + ": '" + std::string(text) + "' is not a finite number");
  }
  return value;
}

GridAxis parse_axis(std::string_view text, const std::string& key) {
  GridAxis axis;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) invalid(key + ": expected start:stop:count");
    const double start = parse_number(parts[0], key);
    const double stop = parse_number(parts[1], key);
    const double count = parse_number(parts[2], key);
    if (count < 1 || count != std::floor(count) || count > 1e7) invalid(key + ": bad count");
    const auto n = static_cast<std::size_t>(count);
    if (n == 1 && start != stop) invalid(key + ": a single point needs start == stop");
    for (std::size_t k = 0; k < n; ++k) {
      axis.values.push_back(n == 1 ? start
                                   : start + (stop - start) * static_cast<double>(k) /
                                                 static_cast<double>(n - 1));
    }
  } else {
    for (auto part : split(text, '|')) axis.values.push_back(parse_number(part, key));
  }
  if (axis.values.empty()) invalid(key + ": no values");
  return axis;
}

std::string cell_verdict(const LockCertificate& cert) {
  if (cert.verdict == Verdict::Rejected) {
    return "Rejected(" + std::string(to_string(cert.hypotheses.reason)) + ")";
  }
  return std::string(to_string(cert.verdict));
}

SweepRow evaluate(const TwoJumpGrid& grid, double low1, double up1, double low2, double up2) {
  SweepRow row{low1, up1, low2, up2, low1 * low1 - up1 * up1 + low2 * low2 - up2 * up2, "",
               std::numeric_limits<double>::quiet_NaN()};
  CornerChain chain;
  chain.n = grid.n;
  chain.interfaces = {{"Sigma_1", {low1}, {up1}, std::nullopt, std::nullopt},
                      {"Sigma_2", {low2}, {up2}, std::nullopt, std::nullopt}};
  try {
    const LockCertificate cert = certify(chain, grid.tol);
    row.square_sum = cert.hypotheses.square_sum;
    row.verdict = cell_verdict(cert);
    for (const auto& r : cert.interfaces) {
      row.min_margin = std::isnan(row.min_margin) ? r.min_margin : std::min(row.min_margin, r.min_margin);
    }
  } catch (const Error& e) {
    row.verdict = "Error(" + std::string(to_string(e.code())) + ")";
  }
  return row;
}

}  // namespace

std::size_t TwoJumpGrid::cell_count() const {
  return low1.values.size() * up1.values.size() * low2.values.size() * up2.values.size();
}

TwoJumpGrid parse_grid(std::string_view spec) {
  TwoJumpGrid grid;
  std::map<std::string, std::string_view> fields;
  for (auto item : split(trim(spec), ',')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) invalid("expected key=value, got '" + std::string(item) + "'");
    const std::string key(trim(item.substr(0, eq)));
    if (!fields.emplace(key, trim(item.substr(eq + 1))).second) invalid("duplicate key " + key);
  }
  for (const auto& [key, value] : fields) {
    if (key == "low1") grid.low1 = parse_axis(value, key);
    else if (key == "up1") grid.up1 = parse_axis(value, key);
    else if (key == "low2") grid.low2 = parse_axis(value, key);
    else if (key == "up2") grid.up2 = parse_axis(value, key);
    else if (key == "n") {
      const double n = parse_number(value, key);
      if (n < 3 || n != std::floor(n)) invalid("n must be an integer >= 3");
      grid.n = static_cast<int>(n);
    } else if (key == "tol") {
      grid.tol = parse_number(value, key);
      if (!(grid.tol > 0.0)) invalid("tol must be positive");
    } else {
      invalid("unknown key " + key);
    }
  }
  for (const char* key : {"low1", "up1", "low2", "up2"}) {
    if (!fields.contains(key)) invalid(std::string("missing axis ") + key);
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const TwoJumpGrid& grid, unsigned workers) {
  const std::size_t n1 = grid.up1.values.size();
  const std::size_t n2 = grid.low2.values.size();
  const std::size_t n3 = grid.up2.values.size();
  const std::size_t total = grid.cell_count();
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t cell = next++; cell < total; cell = next++) {
      std::size_t rest = cell;
      const std::size_t i3 = rest % n3;
      rest /= n3;
      const std::size_t i2 = rest % n2;
      rest /= n2;
      const std::size_t i1 = rest % n1;
      const std::size_t i0 = rest / n1;
      rows[cell] = evaluate(grid, grid.low1.values[i0], grid.up1.values[i1],
                            grid.low2.values[i2], grid.up2.values[i3]);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "low1,up1,low2,up2,square_sum,verdict,min_margin\n";
  for (const auto& r : rows) {
    out += format_double(r.low1) + "," + format_double(r.up1) + "," + format_double(r.low2) + "," +
           format_double(r.up2) + "," + format_double(r.square_sum) + "," + r.verdict + "," +
           format_double(r.min_margin) + "\n";
  }
  return out;
}

}  // namespace lockcert
