#include "driftguard/types.hpp"

#include <cmath>

namespace driftguard {

ReadoutSchedule::ReadoutSchedule(std::vector<double> times) : times_(std::move(times)) {
  if (times_.size() < 2)
    throw InvalidArgument("readout schedule needs at least two times");
  if (times_.front() < 0.0)
    throw InvalidArgument("readout times must be non-negative");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1]))
      throw InvalidArgument("readout times must be strictly increasing");
  }
}

TrajectoryPanel::TrajectoryPanel(ReadoutSchedule schedule, std::vector<std::string> device_ids,
                                 std::vector<double> values, UnitSpace unit_space)
    : schedule_(std::move(schedule)),
      device_ids_(std::move(device_ids)),
      values_(std::move(values)),
      unit_space_(unit_space) {
  if (device_ids_.empty()) throw InvalidArgument("panel needs at least one device");
  if (values_.size() != device_ids_.size() * schedule_.size())
    throw InvalidArgument("panel is not complete: expected " +
                          std::to_string(device_ids_.size() * schedule_.size()) +
                          " cells, got " + std::to_string(values_.size()));
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("panel values must be finite");
    if (unit_space_ == UnitSpace::integer_normalized && v != std::floor(v))
      throw InvalidArgument("normalized panel values must be integers");
  }
}

std::vector<double> TrajectoryPanel::column(std::size_t readout) const {
  std::vector<double> col(devices());
  for (std::size_t i = 0; i < devices(); ++i) col[i] = value(i, readout);
  return col;
}

std::vector<double> TrajectoryPanel::row(std::size_t device) const {
  std::vector<double> r(readouts());
  for (std::size_t k = 0; k < readouts(); ++k) r[k] = value(device, k);
  return r;
}

}  // namespace driftguard
