#pragma once

#include <span>
#include <utility>
#include <vector>

#include "driftguard/density.hpp"
#include "driftguard/types.hpp"

namespace driftguard {

enum class PoolingMode { increments, residuals };

/// Total drifts relative to the pre-stress readout: device x step matrix of
/// x_{i,k} - x_{i,0}.
struct DriftSeries {
  std::size_t device_count = 0;
  std::size_t step_count = 0;
  std::vector<double> data;  // row-major, devices x steps

  double at(std::size_t device, std::size_t step) const {
    return data[device * step_count + step];
  }
  std::vector<double> column(std::size_t step) const;
};

/// Per-step regression and pooled-sample summary. beta0/beta1 are the OLS
/// coefficients of the current total drift on the previous one; sigma2_eps
/// is the population variance of the residuals.
struct StepFit {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double sigma2_eps = 0.0;
  std::vector<double> pooled_samples;  // increments or residuals, one per device
  PoolingMode pooling = PoolingMode::increments;
  double mean_prev = 0.0;
  double mean_cur = 0.0;
  double mean_inc = 0.0;
  double var_inc = 0.0;

  bool operator==(const StepFit&) const = default;
};

/// Row-stochastic matrix of conditional next-total-drift probabilities.
struct TransitionMatrix {
  StateSpace states;
  std::vector<double> rows;  // row-major, size() x size()

  double prob(State from, State to) const {
    return rows[states.index(from) * states.size() + states.index(to)];
  }
  double& entry(std::size_t row_idx, std::size_t col_idx) {
    return rows[row_idx * states.size() + col_idx];
  }
  double entry(std::size_t row_idx, std::size_t col_idx) const {
    return rows[row_idx * states.size() + col_idx];
  }

  bool operator==(const TransitionMatrix&) const = default;
};

/// The fitted per-step Markov model: a first-step pmf (the first drift is
/// independent of the starting value) and one transition matrix per later
/// step, all over one shared state space.
struct DriftChain {
  ReadoutSchedule schedule{std::vector<double>{0.0, 1.0}};
  StateSpace states;
  std::vector<double> first_step_pmf;
  std::vector<TransitionMatrix> matrices;  // steps 2..k
  std::vector<StepFit> fits;               // diagnostics; step 1 first (may be empty)
  KernelSpec kernel;
  PoolingMode pooling = PoolingMode::increments;
  std::vector<double> bandwidths;  // resolved bandwidth per step (diagnostics)

  std::size_t step_count() const noexcept { return schedule.steps(); }
  void validate() const;
};

struct FitConfig {
  KernelSpec kernel;
  PoolingMode pooling = PoolingMode::increments;
  double tail_tolerance = 1e-12;
};

DriftSeries compute_total_drifts(const TrajectoryPanel& panel);

/// OLS of cur on prev with population-variance residuals. Var(prev) = 0
/// degenerates to beta1 = 0, beta0 = mean(cur).
StepFit fit_step_regression(std::span<const double> prev, std::span<const double> cur,
                            PoolingMode pooling = PoolingMode::increments);

/// Conditional (mean, variance) of the next total drift given previous
/// state j: beta1 * (j - E[prev]) + E[cur], and sigma2_eps.
std::pair<double, double> conditional_moments(State j, const StepFit& fit);

/// Affine-map the pooled samples so their empirical mean and variance hit
/// the conditional moments for state j. Residual pooling shifts only.
std::vector<double> transform_pooled_samples(const StepFit& fit, State j);

/// Smallest integer interval around 0 whose binned densities lose less
/// than tail_tol mass over every step reachable from a zero-drift start,
/// widened further to the all-rows fixed point when one exists.
StateSpace widen_state_space(const std::vector<StepFit>& fits, const KernelSpec& kernel,
                             double tail_tol = 1e-12);

/// Pmf of the first total drift from the raw first increments (no
/// location/scale correction).
std::vector<double> build_first_step(const StepFit& first_fit, const KernelSpec& kernel,
                                     const StateSpace& states, double tail_tol = 1e-12);

TransitionMatrix build_transition_matrix(const StepFit& fit, const KernelSpec& kernel,
                                         const StateSpace& states, double tail_tol = 1e-12);

DriftChain fit_chain(const TrajectoryPanel& panel, const FitConfig& config);

std::vector<double> e0_vector(const StateSpace& states);

/// Per-readout pmfs of the total drift: the initial drift distribution is
/// convolved with the first-step pmf, then multiplied through the
/// transition matrices.
std::vector<std::vector<double>> propagate(const DriftChain& chain,
                                           std::span<const double> initial);
std::vector<std::vector<double>> propagate(const DriftChain& chain);  // e0 start

}  // namespace driftguard
