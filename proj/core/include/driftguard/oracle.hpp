#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "driftguard/drift_model.hpp"

namespace driftguard {

// Brute-force references, intentionally slow and simple. They ship with the
// library so guard-band results can be audited (see the verify subcommand).
namespace oracle {

struct PathEnumeration {
  double survive = 0.0;
  std::vector<double> exceed_by_readout;
};

/// Exact survival by enumerating every full state path, classifying the
/// first readout at which it leaves [lo, hi]. Guarded to <= 10 states and
/// <= 5 steps.
PathEnumeration enumerate_paths(const DriftChain& chain, std::span<const double> start,
                                State lo, State hi);

struct McEstimate {
  double estimate = 0.0;
  double ci_low = 0.0;   // Wilson 99% interval
  double ci_high = 0.0;
  std::uint64_t exceed_count = 0;
  std::uint64_t trials = 0;
};

/// Monte Carlo first-exceedance frequency with a Wilson 99% interval.
McEstimate mc_exceedance(const DriftChain& chain, State lo, State hi, std::uint64_t n,
                         std::uint64_t seed);

}  // namespace oracle
}  // namespace driftguard
