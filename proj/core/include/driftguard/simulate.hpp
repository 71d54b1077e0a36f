#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "driftguard/drift_model.hpp"
#include "driftguard/types.hpp"

namespace driftguard {

enum class PatternKind {
  constant,
  linear_drift,
  expanding_variance,
  contracting_variance,
  positive_correlation,
  negative_correlation,
  skewed_increments,
  mean_shift,
  mixed,
};

constexpr std::size_t kPatternCount = 9;
const std::vector<PatternKind>& all_pattern_kinds();
std::string pattern_name(PatternKind kind);
std::optional<PatternKind> pattern_from_name(const std::string& name);

struct PatternSpec {
  PatternKind kind = PatternKind::constant;
  std::size_t devices = 80;
  std::size_t readouts = 4;
  std::uint64_t seed = 0;
};

/// Designed lag-1 increment-correlation sign per step pair (entries for
/// steps 2..k): -1, 0 (no designed dependence) or +1.
std::vector<int> designed_increment_corr_signs(PatternKind kind, std::size_t readouts);

/// Integer panel exhibiting the named mean/variance/correlation behavior.
/// Deterministic in the seed.
TrajectoryPanel generate_pattern(const PatternSpec& spec);

/// Panel with designed total-drift dependence per step (regression slopes
/// approximately 0, +0.8, -0.8 over three steps); used to check sign
/// recovery of the per-step fits.
TrajectoryPanel make_dependence_fixture(std::size_t devices, std::uint64_t seed);

/// Sample n device trajectories from a fitted chain: first step from the
/// first-step pmf, later steps from the conditional rows. The t0 column
/// holds the (default zero) starting drift.
TrajectoryPanel sample_trajectories(const DriftChain& chain, std::size_t n, std::uint64_t seed);
TrajectoryPanel sample_trajectories(const DriftChain& chain, std::size_t n, std::uint64_t seed,
                                    std::span<const double> initial);

struct RoundTripReport {
  std::vector<double> mean_error;      // per readout 1..k, in states
  std::vector<double> rel_std_error;   // per readout 1..k
  std::vector<int> corr_sign_source;   // per step 2..k
  std::vector<int> corr_sign_simulated;
  std::vector<bool> corr_sign_match;   // per step 2..k
  bool all_finite() const;
};

struct RoundTripConfig {
  FitConfig fit;
  std::size_t resample_devices = 10000;
  std::uint64_t seed = 0;
  double corr_dead_zone = 0.1;  // |corr| below this counts as sign 0
};

/// Fit a chain on the panel, resample, and compare per-readout drift
/// moments and lag-1 increment-correlation signs.
RoundTripReport validate_roundtrip(const TrajectoryPanel& panel, const RoundTripConfig& config);

}  // namespace driftguard
