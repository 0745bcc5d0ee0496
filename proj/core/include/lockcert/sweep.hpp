#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lockcert/lemma.hpp"

namespace lockcert {

// Values of one sweep parameter, either start:stop:count or an explicit list.
struct GridAxis {
  std::vector<double> values;
};

// Two-jump template: corners Σ_1, Σ_2 with single samples at the bounds.
// Parameter order low1, up1, low2, up2; the first varies slowest.
struct TwoJumpGrid {
  int n = 3;
  double tol = kDefaultTol;
  GridAxis low1, up1, low2, up2;

  std::size_t cell_count() const;
};

// "low1=1:3:3,up1=2,low2=0.5|1|3,up2=2:2:1[,n=3][,tol=1e-9]". Throws InvalidGrid.
TwoJumpGrid parse_grid(std::string_view spec);

struct SweepRow {
  double low1 = 0.0, up1 = 0.0, low2 = 0.0, up2 = 0.0;
  double square_sum = 0.0;
  std::string verdict;
  double min_margin = 0.0;  // NaN when no margins were computed
};

std::vector<SweepRow> run_sweep(const TwoJumpGrid& grid, unsigned workers);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace lockcert
