#pragma once

#include <span>
#include <utility>
#include <vector>

#include "driftguard/types.hpp"

namespace driftguard {

enum class OffsetEstimator { mean, median };

struct QuantizationGrid {
  double step = 1.0;   // lattice resolution (gcd of pairwise differences)
  double origin = 0.0; // minimum of the observed values
};

/// Detect the lattice a set of raw readings lives on. The resolution is the
/// float-tolerant greatest common divisor of the pairwise differences; the
/// origin is the minimum value.
QuantizationGrid detect_quantization(std::span<const double> values);

/// Map one raw reading onto the integer lattice. Throws OffLattice when the
/// reading is further than tolerance from any lattice point.
State center_value(double value, const QuantizationGrid& grid);

/// Normalize a raw-physical panel onto the centered integer lattice.
std::pair<TrajectoryPanel, NormalizationMeta> center_panel(const TrajectoryPanel& panel,
                                                           const QuantizationGrid& grid);

/// Inverse of center_panel for values; exact on lattice points.
double backtransform(double normalized_value, const NormalizationMeta& meta);

struct OffsetCorrection {
  TrajectoryPanel panel;
  std::vector<double> applied_shifts;    // per readout, panel units
  std::vector<double> estimator_shifts;  // unsnapped estimator differences
};

/// Subtract the reference-device drift (estimator of column k minus
/// estimator of column 0) from every stressed column. In normalized space
/// shifts snap to the nearest integer so data stays on the lattice.
OffsetCorrection correct_tester_offset(const TrajectoryPanel& stressed,
                                       const TrajectoryPanel& reference,
                                       OffsetEstimator estimator);

/// Per-device linear interpolation of a panel at an intermediate stress
/// time; rounds half-to-even in normalized space. Exact columns are
/// returned verbatim.
std::vector<double> interpolate_at(const TrajectoryPanel& panel, double t);

}  // namespace driftguard
