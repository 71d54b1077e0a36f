#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "driftguard/errors.hpp"

namespace driftguard {

// Integer drift / parameter state in normalized units.
using State = std::int64_t;

enum class UnitSpace { raw_physical, integer_normalized };

/// Ordered stress-test readout times in hours; times[0] is the pre-stress
/// readout. Strictly increasing, at least two entries, non-negative.
class ReadoutSchedule {
 public:
  explicit ReadoutSchedule(std::vector<double> times);

  std::size_t size() const noexcept { return times_.size(); }
  std::size_t steps() const noexcept { return times_.size() - 1; }
  double at(std::size_t i) const { return times_.at(i); }
  const std::vector<double>& times() const noexcept { return times_; }

  bool operator==(const ReadoutSchedule&) const = default;

 private:
  std::vector<double> times_;
};

/// Complete device-by-readout matrix of parameter readings. No missing
/// cells; in integer-normalized space every value is an integer.
class TrajectoryPanel {
 public:
  TrajectoryPanel(ReadoutSchedule schedule, std::vector<std::string> device_ids,
                  std::vector<double> values,  // row-major, devices x readouts
                  UnitSpace unit_space);

  std::size_t devices() const noexcept { return device_ids_.size(); }
  std::size_t readouts() const noexcept { return schedule_.size(); }
  double value(std::size_t device, std::size_t readout) const {
    return values_[device * readouts() + readout];
  }
  std::vector<double> column(std::size_t readout) const;
  std::vector<double> row(std::size_t device) const;

  const ReadoutSchedule& schedule() const noexcept { return schedule_; }
  const std::vector<std::string>& device_ids() const noexcept { return device_ids_; }
  const std::vector<double>& values() const noexcept { return values_; }
  UnitSpace unit_space() const noexcept { return unit_space_; }

  bool operator==(const TrajectoryPanel&) const = default;

 private:
  ReadoutSchedule schedule_;
  std::vector<std::string> device_ids_;
  std::vector<double> values_;
  UnitSpace unit_space_;
};

/// Everything needed to map normalized results back to physical units:
/// lattice step, subtracted origin, and the tester-offset shifts applied
/// per readout (plus the sub-step remainder that snapping left unapplied).
struct NormalizationMeta {
  double step = 1.0;
  double origin = 0.0;
  std::vector<double> offset_shifts;     // applied shift per readout, normalized units
  std::vector<double> offset_residuals;  // estimator shift minus applied shift

  double to_physical(double normalized) const { return normalized * step + origin; }
  double from_physical(double physical) const { return (physical - origin) / step; }
  // Widths (guard bands, limit differences) scale by step only.
  double width_to_physical(double width) const { return width * step; }

  bool operator==(const NormalizationMeta&) const = default;
};

/// Inclusive integer interval of drift states. Always contains 0
/// (zero total drift).
struct StateSpace {
  State lo = 0;
  State hi = 0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(hi - lo + 1); }
  bool contains(State s) const noexcept { return s >= lo && s <= hi; }
  std::size_t index(State s) const noexcept { return static_cast<std::size_t>(s - lo); }
  State state(std::size_t idx) const noexcept { return lo + static_cast<State>(idx); }

  void validate() const {
    if (lo > 0 || hi < 0)
      throw InvalidArgument("state space must contain 0: [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  }

  bool operator==(const StateSpace&) const = default;
};

}  // namespace driftguard
