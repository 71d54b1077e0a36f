#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace driftguard {

// Base error. The code is a stable machine-readable identifier; the CLI
// forwards it into its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define DRIFTGUARD_ERROR_TYPE(Name, code_literal)            \
  struct Name : Error {                                      \
    explicit Name(const std::string& w) : Error(code_literal, w) {} \
  }

DRIFTGUARD_ERROR_TYPE(InvalidArgument, "invalid_argument");
DRIFTGUARD_ERROR_TYPE(AllValuesIdentical, "all_values_identical");
DRIFTGUARD_ERROR_TYPE(NonCommensurable, "non_commensurable");
DRIFTGUARD_ERROR_TYPE(OffLattice, "off_lattice");
DRIFTGUARD_ERROR_TYPE(ScheduleMismatch, "schedule_mismatch");
DRIFTGUARD_ERROR_TYPE(OutOfRange, "out_of_range");
DRIFTGUARD_ERROR_TYPE(DegenerateScale, "degenerate_scale");
DRIFTGUARD_ERROR_TYPE(TailMassTooLarge, "tail_mass_too_large");
DRIFTGUARD_ERROR_TYPE(EmptyInterval, "empty_interval");
DRIFTGUARD_ERROR_TYPE(DimensionMismatch, "dimension_mismatch");
DRIFTGUARD_ERROR_TYPE(EmptyTruncation, "empty_truncation");
DRIFTGUARD_ERROR_TYPE(TooLarge, "too_large");
DRIFTGUARD_ERROR_TYPE(CsvError, "csv_error");
DRIFTGUARD_ERROR_TYPE(JsonError, "json_error");

#undef DRIFTGUARD_ERROR_TYPE

}  // namespace driftguard
