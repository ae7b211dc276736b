#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cricket/types.hpp"

namespace cricket {

// Logistic scale divisor for expected scores. 400 is the chess convention;
// Test cricket is calibrated to 85 (see calibration.hpp).
struct Scale {
  double d = 85.0;
};

// RD is clamped here after every update so that g() stays bounded away from
// zero over long horizons.
inline constexpr double kRdFloor = 0.5;

// g(RD) = 1 / sqrt(1 + 3 RD^2 / pi^2). Discounts an opponent's rating
// reliability; strictly decreasing, g(0) = 1.
inline double g(double rd) {
  if (rd < 0) throw std::domain_error("g: rd must be nonnegative");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return 1.0 / std::sqrt(1.0 + 3.0 * rd * rd / pi2);
}

// E = 1 / (1 + 10^(-(r_a - r_b) g(rd_b) / d)). Base-10 form; the copula
// expected score uses the natural-base variant instead (copula.hpp), which
// differs by an effective factor ln(10) in the exponent.
inline double expected_score_basic(double r_a, double r_b, double rd_b, Scale scale = {}) {
  if (scale.d <= 0) throw std::domain_error("expected_score_basic: scale.d must be positive");
  double expo = -(r_a - r_b) * g(rd_b) / scale.d;
  return 1.0 / (1.0 + std::pow(10.0, expo));
}

// d^2 = 1 / (g(RD_opp)^2 E (1 - E)): information carried by one result.
inline double d_squared(double g_opp, double e) {
  if (g_opp <= 0 || g_opp > 1) throw std::domain_error("d_squared: g_opp must lie in (0,1]");
  if (e <= 0 || e >= 1) throw std::domain_error("d_squared: e must lie strictly in (0,1)");
  return 1.0 / (g_opp * g_opp * e * (1.0 - e));
}

// RD' = 1 / sqrt(1/RD^2 + 1/d^2); always below the input, floored at kRdFloor.
inline double update_rd(double rd, double d2) {
  if (rd <= 0) throw std::domain_error("update_rd: rd must be positive");
  if (d2 <= 0) throw std::domain_error("update_rd: d2 must be positive");
  double out = 1.0 / std::sqrt(1.0 / (rd * rd) + 1.0 / d2);
  return std::max(out, kRdFloor);
}

// r' = r + g(RD_opp) (S - E) / (1/RD^2 + 1/d^2).
inline double update_rating(double r, double rd, double d2, double g_opp, double s, double e) {
  if (rd <= 0) throw std::domain_error("update_rating: rd must be positive");
  if (d2 <= 0) throw std::domain_error("update_rating: d2 must be positive");
  return r + g_opp * (s - e) / (1.0 / (rd * rd) + 1.0 / d2);
}

}  // namespace cricket
