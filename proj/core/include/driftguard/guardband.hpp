#pragma once

#include <optional>
#include <span>
#include <vector>

#include "driftguard/drift_model.hpp"
#include "driftguard/types.hpp"

namespace driftguard {

/// Maximum allowed lifetime exceedance probability per device.
struct QualityTarget {
  double fail_budget = 1e-6;

  void validate() const {
    if (!(fail_budget > 0.0 && fail_budget < 1.0))
      throw InvalidArgument("fail_budget must lie in (0,1)");
  }
};

enum class Sidedness { upper, lower, two_sided };

/// Specification limits in normalized state units; an unset limit is
/// infinite. One-sided specs leave the opposite side unset.
struct LimitSpec {
  std::optional<State> usl;
  std::optional<State> lsl;
  Sidedness sidedness = Sidedness::two_sided;

  void validate() const;
};

struct GuardBandResult {
  std::optional<State> utl;  // unset = +inf
  std::optional<State> ltl;  // unset = -inf
  State gbu = 0;             // USL - UTL (0 when that side is unbounded)
  State gbl = 0;             // LTL - LSL
  double achieved_fail_prob = 1.0;
  std::vector<double> per_readout_exceedance;  // first-exceedance mass per readout
  bool feasible = false;
};

/// Zero all entries outside rows [row_lo,row_hi] and columns [col_lo,col_hi]
/// (state units). The result is sub-stochastic; the lost row mass is the
/// exceedance that guard banding accounts for.
TransitionMatrix restrict_matrix(const TransitionMatrix& matrix, State row_lo, State row_hi,
                                 State col_lo, State col_hi);

struct SurvivalBreakdown {
  double survive = 0.0;
  std::vector<double> exceed_by_readout;  // length = step count
};

/// First-passage survival: probability that the drift stays inside
/// [lo, hi] at every readout, starting from the given distribution over
/// drift states. Mass that leaves is absorbed and never re-enters.
/// lo/hi are clamped to the chain's state space.
SurvivalBreakdown survive_breakdown(const DriftChain& chain, std::span<const double> start,
                                    State lo, State hi);
double survive_probability(const DriftChain& chain, std::span<const double> start, State lo,
                           State hi);

/// Largest UTL <= USL whose worst-case device (starting exactly at UTL)
/// keeps survival >= 1 - fail_budget; the drift is restricted to
/// (-inf, USL - UTL] within the state space.
GuardBandResult optimize_one_sided_upper(const DriftChain& chain, const LimitSpec& spec,
                                         const QualityTarget& target);
GuardBandResult optimize_one_sided_lower(const DriftChain& chain, const LimitSpec& spec,
                                         const QualityTarget& target);

/// Maximize UTL - LTL subject to worst-case survival with the drift
/// restricted to [LSL - LTL, USL - UTL]. Ties: smaller achieved failure
/// probability, then larger UTL.
GuardBandResult optimize_two_sided(const DriftChain& chain, const LimitSpec& spec,
                                   const QualityTarget& target);

/// Initial parameter distribution over absolute normalized states.
struct InitialPmf {
  State lo = 0;
  std::vector<double> p;

  State hi() const noexcept { return lo + static_cast<State>(p.size()) - 1; }
  void validate() const;
};

/// Batch-level optimization: the initial pmf is truncated to [LTL, UTL],
/// renormalized, and each surviving start s contributes the survival of the
/// drift restricted to [LSL - s, USL - s].
GuardBandResult optimize_with_initial(const DriftChain& chain, const InitialPmf& initial,
                                      const LimitSpec& spec, const QualityTarget& target);

}  // namespace driftguard
