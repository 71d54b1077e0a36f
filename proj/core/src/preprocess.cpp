#include "driftguard/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "driftguard/stats.hpp"

namespace driftguard {

namespace {

double apply_estimator(std::vector<double> values, OffsetEstimator estimator) {
  if (estimator == OffsetEstimator::mean) return mean(values);
  return median(std::move(values));
}

// Euclidean gcd on reals; remainders below tol count as zero.
double float_gcd(double a, double b, double tol) {
  a = std::fabs(a);
  b = std::fabs(b);
  if (a < b) std::swap(a, b);
  while (b > tol) {
    const double r = std::fmod(a, b);
    a = b;
    // fmod can land a hair under b; treat both ends as exact divisors.
    b = (r > b - tol) ? 0.0 : r;
  }
  return a;
}

}  // namespace

QuantizationGrid detect_quantization(std::span<const double> values) {
  if (values.size() < 2) throw AllValuesIdentical("need at least two readings");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  double max_abs = 1.0;
  for (double v : sorted) max_abs = std::max(max_abs, std::fabs(v));
  const double tol = 1e-9 * max_abs;

  // gcd of consecutive sorted differences equals the gcd of all pairwise
  // differences.
  double g = 0.0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double diff = sorted[i] - sorted[i - 1];
    if (diff <= tol) continue;
    g = (g == 0.0) ? diff : float_gcd(g, diff, tol);
  }
  if (g == 0.0)
    throw AllValuesIdentical("all readings identical; supply the step explicitly");
  if (g <= tol)
    throw NonCommensurable("readings share no common divisor above tolerance");

  QuantizationGrid grid{g, sorted.front()};
  for (double v : values) center_value(v, grid);  // post-check: everything on-lattice
  return grid;
}

State center_value(double value, const QuantizationGrid& grid) {
  if (!(grid.step > 0.0)) throw InvalidArgument("quantization step must be positive");
  const double n = (value - grid.origin) / grid.step;
  const double rounded = round_half_even(n);
  const double max_abs = std::max({std::fabs(value), std::fabs(grid.origin), 1.0});
  if (std::fabs(n - rounded) * grid.step > 1e-9 * max_abs)
    throw OffLattice("reading " + std::to_string(value) + " is off the (step=" +
                     std::to_string(grid.step) + ", origin=" + std::to_string(grid.origin) +
                     ") lattice");
  return static_cast<State>(rounded);
}

std::pair<TrajectoryPanel, NormalizationMeta> center_panel(const TrajectoryPanel& panel,
                                                           const QuantizationGrid& grid) {
  if (panel.unit_space() != UnitSpace::raw_physical)
    throw InvalidArgument("center_panel expects a raw-physical panel");

  std::vector<double> centered(panel.values().size());
  for (std::size_t i = 0; i < panel.values().size(); ++i)
    centered[i] = static_cast<double>(center_value(panel.values()[i], grid));

  NormalizationMeta meta;
  meta.step = grid.step;
  meta.origin = grid.origin;
  meta.offset_shifts.assign(panel.readouts(), 0.0);
  meta.offset_residuals.assign(panel.readouts(), 0.0);
  return {TrajectoryPanel(panel.schedule(), panel.device_ids(), std::move(centered),
                          UnitSpace::integer_normalized),
          std::move(meta)};
}

double backtransform(double normalized_value, const NormalizationMeta& meta) {
  return meta.to_physical(normalized_value);
}

OffsetCorrection correct_tester_offset(const TrajectoryPanel& stressed,
                                       const TrajectoryPanel& reference,
                                       OffsetEstimator estimator) {
  if (stressed.schedule() != reference.schedule())
    throw ScheduleMismatch("stressed and reference panels have different readout schedules");
  if (stressed.unit_space() != reference.unit_space())
    throw InvalidArgument("stressed and reference panels must share a unit space");

  const std::size_t readouts = stressed.readouts();
  const bool snap = stressed.unit_space() == UnitSpace::integer_normalized;

  const double base = apply_estimator(reference.column(0), estimator);
  std::vector<double> estimator_shifts(readouts, 0.0);
  std::vector<double> applied(readouts, 0.0);
  for (std::size_t k = 1; k < readouts; ++k) {
    const double shift = apply_estimator(reference.column(k), estimator) - base;
    estimator_shifts[k] = shift;
    applied[k] = snap ? round_half_even(shift) : shift;
  }

  std::vector<double> corrected(stressed.values().size());
  for (std::size_t i = 0; i < stressed.devices(); ++i)
    for (std::size_t k = 0; k < readouts; ++k)
      corrected[i * readouts + k] = stressed.value(i, k) - applied[k];

  return OffsetCorrection{
      TrajectoryPanel(stressed.schedule(), stressed.device_ids(), std::move(corrected),
                      stressed.unit_space()),
      std::move(applied), std::move(estimator_shifts)};
}

std::vector<double> interpolate_at(const TrajectoryPanel& panel, double t) {
  const auto& times = panel.schedule().times();
  if (t < times.front() || t > times.back())
    throw OutOfRange("query time " + std::to_string(t) + " outside [" +
                     std::to_string(times.front()) + ", " + std::to_string(times.back()) + "]");

  const auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it != times.end() && *it == t)
    return panel.column(static_cast<std::size_t>(it - times.begin()));

  const std::size_t hi = static_cast<std::size_t>(it - times.begin());
  const std::size_t lo = hi - 1;
  const double w = (t - times[lo]) / (times[hi] - times[lo]);

  std::vector<double> column(panel.devices());
  for (std::size_t i = 0; i < panel.devices(); ++i) {
    const double v = panel.value(i, lo) + w * (panel.value(i, hi) - panel.value(i, lo));
    column[i] = panel.unit_space() == UnitSpace::integer_normalized ? round_half_even(v) : v;
  }
  return column;
}

}  // namespace driftguard
