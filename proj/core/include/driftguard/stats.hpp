#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace driftguard {

// Population conventions (divide by n) throughout, so the residual-variance
// bound sigma2_eps <= var(increments) holds exactly.

inline double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

inline double variance_population(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size());
}

inline double covariance_population(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || a.size() != b.size()) return 0.0;
  const double ma = mean(a), mb = mean(b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - ma) * (b[i] - mb);
  return s / static_cast<double>(a.size());
}

inline double pearson_correlation(std::span<const double> a, std::span<const double> b) {
  const double va = variance_population(a), vb = variance_population(b);
  if (va <= 0.0 || vb <= 0.0) return 0.0;
  return covariance_population(a, b) / std::sqrt(va * vb);
}

/// Linear-interpolation quantile on a sorted sample (R type 7).
inline double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) return 0.0;
  if (sorted.size() == 1) return sorted[0];
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - std::floor(h);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

inline double median(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  return quantile_sorted(x, 0.5);
}

/// Banker's rounding, independent of the floating-point environment.
inline double round_half_even(double x) {
  const double f = std::floor(x);
  const double d = x - f;
  if (d > 0.5) return f + 1.0;
  if (d < 0.5) return f;
  return std::fmod(f, 2.0) == 0.0 ? f : f + 1.0;
}

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace driftguard
