#include "driftguard/density.hpp"

#include <algorithm>
#include <cmath>

#include "driftguard/stats.hpp"

namespace driftguard {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014327;
constexpr double kBandwidthFloor = 0.25;
}  // namespace

double silverman_bandwidth(std::span<const double> samples) {
  const double n = static_cast<double>(samples.size());
  const double sd = std::sqrt(variance_population(samples));
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  const double score = 0.9 * std::min(sd, iqr / 1.34) * std::pow(n, -0.2);
  return std::max(score, kBandwidthFloor);
}

double kernel_pdf(KernelShape shape, double u) {
  switch (shape) {
    case KernelShape::gaussian:
      return kInvSqrt2Pi * std::exp(-0.5 * u * u);
    case KernelShape::rectangular:
      return (u >= -0.5 && u <= 0.5) ? 1.0 : 0.0;
    case KernelShape::epanechnikov:
      return (u >= -1.0 && u <= 1.0) ? 0.75 * (1.0 - u * u) : 0.0;
  }
  return 0.0;
}

double kernel_cdf(KernelShape shape, double u) {
  switch (shape) {
    case KernelShape::gaussian:
      return normal_cdf(u);
    case KernelShape::rectangular:
      return std::clamp(u + 0.5, 0.0, 1.0);
    case KernelShape::epanechnikov:
      if (u <= -1.0) return 0.0;
      if (u >= 1.0) return 1.0;
      return 0.5 + 0.75 * u - 0.25 * u * u * u;
  }
  return 0.0;
}

double kernel_tail_radius(KernelShape shape) {
  switch (shape) {
    case KernelShape::gaussian:
      return 8.0;  // Phi(-8) ~ 6e-16
    case KernelShape::rectangular:
      return 0.5;
    case KernelShape::epanechnikov:
      return 1.0;
  }
  return 8.0;
}

StepDensity StepDensity::fit(std::vector<double> samples, const KernelSpec& spec) {
  if (samples.empty()) throw InvalidArgument("density estimation needs at least one sample");

  StepDensity d;
  d.shape_ = spec.shape;
  d.samples_ = std::move(samples);

  const auto [mn, mx] = std::minmax_element(d.samples_.begin(), d.samples_.end());
  const bool zero_spread = (*mx - *mn) == 0.0;

  if (spec.bandwidth) {
    if (!(*spec.bandwidth > 0.0)) throw InvalidArgument("bandwidth must be positive");
    d.h_ = *spec.bandwidth;
  } else if (zero_spread) {
    // Rule-based bandwidth on degenerate samples: keep the distribution an
    // exact point mass instead of smearing deterministic data.
    d.point_mass_ = true;
    d.atom_ = d.samples_.front();
    d.h_ = 0.0;
    d.support_lo_ = d.support_hi_ = d.atom_;
    return d;
  } else {
    d.h_ = silverman_bandwidth(d.samples_);
  }

  const double radius = kernel_tail_radius(d.shape_) * d.h_;
  d.support_lo_ = *mn - radius;
  d.support_hi_ = *mx + radius;
  return d;
}

double StepDensity::pdf(double x) const {
  if (point_mass_)
    return x == atom_ ? std::numeric_limits<double>::infinity() : 0.0;
  double s = 0.0;
  for (double xi : samples_) s += kernel_pdf(shape_, (x - xi) / h_);
  return s / (static_cast<double>(samples_.size()) * h_);
}

double StepDensity::cdf(double x) const {
  if (point_mass_) return x < atom_ ? 0.0 : 1.0;
  double s = 0.0;
  for (double xi : samples_) s += kernel_cdf(shape_, (x - xi) / h_);
  return s / static_cast<double>(samples_.size());
}

StepDensity estimate_step_density(std::vector<double> samples, const KernelSpec& spec) {
  return StepDensity::fit(std::move(samples), spec);
}

std::vector<double> bin_density_shifted(const StepDensity& density, const StateSpace& states,
                                        double shift, double* retained_mass) {
  std::vector<double> bins(states.size(), 0.0);

  if (density.is_point_mass()) {
    const double where = density.atom() + shift;
    const State target = static_cast<State>(round_half_even(where));
    if (states.contains(target)) {
      bins[states.index(target)] = 1.0;
      if (retained_mass) *retained_mass = 1.0;
    } else if (retained_mass) {
      *retained_mass = 0.0;
    }
    return bins;
  }

  const double lo_edge = density.support_lo() + shift;
  const double hi_edge = density.support_hi() + shift;
  State first = static_cast<State>(std::ceil(lo_edge - 0.5));
  State last = static_cast<State>(std::floor(hi_edge + 0.5));
  first = std::max(first, states.lo);
  last = std::min(last, states.hi);

  double sum = 0.0;
  for (State x = first; x <= last; ++x) {
    const double xd = static_cast<double>(x) - shift;
    const double mass = density.mass_between(xd - 0.5, xd + 0.5);
    bins[states.index(x)] = mass;
    sum += mass;
  }
  if (retained_mass) *retained_mass = sum;
  if (sum > 0.0)
    for (double& b : bins) b /= sum;
  return bins;
}

std::vector<double> bin_density(const StepDensity& density, const StateSpace& states,
                                double tail_tol) {
  states.validate();
  double retained = 0.0;
  std::vector<double> bins = bin_density_shifted(density, states, 0.0, &retained);
  if (1.0 - retained >= tail_tol)
    throw TailMassTooLarge("state space loses " + std::to_string(1.0 - retained) +
                           " probability mass (tolerance " + std::to_string(tail_tol) + ")");
  return bins;
}

}  // namespace driftguard
