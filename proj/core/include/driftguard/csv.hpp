#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "driftguard/types.hpp"

namespace driftguard {

// Long-format CSV with header `device_id,role,time_hours,value`,
// role in {stressed, reference}. Every device must have exactly one value
// per readout time of its role's schedule.

struct CsvPanels {
  TrajectoryPanel stressed;
  std::optional<TrajectoryPanel> reference;
};

CsvPanels read_panels_csv(std::istream& in);
CsvPanels read_panels_csv_file(const std::string& path);

void write_panel_csv(std::ostream& out, const TrajectoryPanel& panel,
                     const std::string& role = "stressed");
void write_panel_csv_file(const std::string& path, const TrajectoryPanel& panel,
                          const std::string& role = "stressed");

/// Shortest round-trip decimal form (integers print without a decimal
/// point); used everywhere CSV output must be byte-stable.
std::string format_double(double v);

}  // namespace driftguard
