#pragma once

#include <optional>
#include <span>
#include <vector>

#include "driftguard/types.hpp"

namespace driftguard {

enum class KernelShape { gaussian, rectangular, epanechnikov };

/// Kernel choice plus bandwidth; an unset bandwidth means Silverman's rule
/// 0.9 * min(sd, IQR/1.34) * n^(-1/5), floored at 0.25.
struct KernelSpec {
  KernelShape shape = KernelShape::gaussian;
  std::optional<double> bandwidth;  // nullopt => Silverman rule

  bool operator==(const KernelSpec&) const = default;
};

double silverman_bandwidth(std::span<const double> samples);

// Unit-kernel functions. The rectangular kernel is the indicator of
// [-1/2, 1/2], so bandwidth h=1 on integer samples reproduces the
// empirical histogram after binning.
double kernel_pdf(KernelShape shape, double u);
double kernel_cdf(KernelShape shape, double u);
// Half-width beyond which the unit kernel carries < 1e-15 mass.
double kernel_tail_radius(KernelShape shape);

/// Continuous kernel density estimate over a sample set. Degenerates to an
/// exact point mass when a rule-based bandwidth meets zero-spread samples;
/// an explicit bandwidth always produces a true KDE.
class StepDensity {
 public:
  static StepDensity fit(std::vector<double> samples, const KernelSpec& spec);

  double pdf(double x) const;
  double cdf(double x) const;
  double mass_between(double a, double b) const { return cdf(b) - cdf(a); }

  double support_lo() const noexcept { return support_lo_; }
  double support_hi() const noexcept { return support_hi_; }
  bool is_point_mass() const noexcept { return point_mass_; }
  double atom() const noexcept { return atom_; }
  double bandwidth() const noexcept { return h_; }
  const std::vector<double>& samples() const noexcept { return samples_; }
  KernelShape shape() const noexcept { return shape_; }

 private:
  StepDensity() = default;

  KernelShape shape_ = KernelShape::gaussian;
  std::vector<double> samples_;
  double h_ = 1.0;
  bool point_mass_ = false;
  double atom_ = 0.0;
  double support_lo_ = 0.0;
  double support_hi_ = 0.0;
};

/// Spec-named alias for StepDensity::fit.
StepDensity estimate_step_density(std::vector<double> samples, const KernelSpec& spec);

/// Integrate the density over unit bins centered on the integers of the
/// state space and renormalize the sub-tolerance tail. Throws
/// TailMassTooLarge if the truncated mass reaches tail_tol.
std::vector<double> bin_density(const StepDensity& density, const StateSpace& states,
                                double tail_tol = 1e-12);

/// Same integration with the density translated by shift; rows of a
/// transition matrix are bins of one shared shape at per-state locations.
/// Instead of throwing it reports the retained mass (caller decides).
std::vector<double> bin_density_shifted(const StepDensity& density, const StateSpace& states,
                                        double shift, double* retained_mass);

}  // namespace driftguard
