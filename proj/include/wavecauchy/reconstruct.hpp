// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_RECONSTRUCT_HPP
#define WAVECAUCHY_RECONSTRUCT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavecauchy/forward.hpp"
#include "wavecauchy/geometry.hpp"
#include "wavecauchy/kernel.hpp"

namespace wavecauchy
{

// Kernel settings shared by every h of a sweep.
struct KernelSettings
{
  int s_nodes = 32;
  int xi_nodes = 64;
  double xi_cutoff_tol = 1e-15;
  // Absolute threshold; when unset sigma_min = sigma_min_factor * sqrt(h).
  std::optional<double> sigma_min;
  double sigma_min_factor = 1e-4;
};

// Kernel parameters at width h whose spectral envelope covers the chart.
KernelParams KernelParamsFor(const KernelSettings &settings, double h, const ApertureChart &chart);

// w*(x, y, t) = w(x - x*, y - y*, t - t*).
class ShiftedKernel
{
public:
  ShiftedKernel(const KernelEvaluator &kernel, const ReconstructionTarget &target)
    : kernel_(kernel), target_(target)
  {
  }
  WaveKernelSample Sample(const SpacePoint &p, double t) const
  {
    return kernel_.Sample(p.x - target_.x, p.y - target_.y, t - target_.t);
  }
  double W(const SpacePoint &p, double t) const
  {
    return kernel_.W(p.x - target_.x, p.y - target_.y, t - target_.t);
  }

private:
  const KernelEvaluator &kernel_;
  ReconstructionTarget target_;
};

// (u(x*, Y(x*), T_-) + u(x*, Y(x*), T_+)) / 2. Throws DataError without traces.
double BoundaryTerm(const CauchyDataSet &data);

// Regularized boundary integral
//   sum_i W_i sum_j omega_j (Y_i - y*) [u d_nu w* - (d_nu u) w*]
// over the chart's tensor rule. Node rows are evaluated on the OpenMP team and
// reduced in node order, so the result is bitwise independent of the thread
// count and equal to IntegralTermSerial.
double IntegralTerm(const CauchyDataSet &data, const KernelEvaluator &kernel,
                    const ApertureChart &chart);
// Single-threaded reference implementation of IntegralTerm.
double IntegralTermSerial(const CauchyDataSet &data, const KernelEvaluator &kernel,
                          const ApertureChart &chart);

struct ReconstructionValue
{
  double h = 0.0;
  double boundary = 0.0;
  double integral = 0.0;
  double estimate = 0.0;  // boundary + integral
};

ReconstructionValue ReconstructAt(const CauchyDataSet &data, const ApertureChart &chart, double h,
                                  const KernelSettings &settings);

struct SweepOptions
{
  double h_max = 0.4;
  double ratio = 0.7;
  int count = 8;
  // Stop the schedule once eps_machine * exp(max height^2 / h) exceeds this.
  double precision_budget = 1e-8;
  // Stop the schedule once the chart cannot resolve the kernel oscillation.
  bool resolution_guard = true;

  void Validate() const;
  std::vector<double> Schedule() const;
};

struct SweepEntry
{
  double h = 0.0;
  double boundary = 0.0;
  double integral = 0.0;
  double estimate = 0.0;
  std::optional<double> abs_err;
  std::optional<double> rel_err;
  double amplification = 1.0;
};

struct LimitSelection
{
  double estimate = 0.0;
  double h_star = 0.0;
  std::size_t index = 0;  // entry index of h_star
  std::vector<double> differences;
  bool no_plateau = false;
};

struct SweepResult
{
  std::vector<double> schedule;  // requested
  std::vector<SweepEntry> entries;
  std::optional<double> truth;
  double scale = 1.0;  // max(|truth|, max|u|); denominator of rel_err
  bool truncated = false;
  std::string truncation_reason;
  std::optional<LimitSelection> selection;
};

// Amplification exp(max (Y - y*)^2 / h) of the kernel over the chart (n = 2
// subtracts |x - x*|^2, which the closed-form kernel cancels exactly).
double KernelAmplification(const ApertureChart &chart, double h);
// Chart nodes needed to resolve the kernel's x-oscillation at width h.
double RequiredChartNodes(const ApertureChart &chart, double h);

SweepResult HSweep(const CauchyDataSet &data, const ApertureChart &chart,
                   const SweepOptions &options, const KernelSettings &settings,
                   std::optional<double> truth = std::nullopt);

// Plateau rule: the consecutive pair minimizing |R_{k+1} - R_k| selects
// R_{k+1}. Needs at least 3 entries (NumericalError otherwise).
LimitSelection SelectLimit(std::span<const double> h, std::span<const double> estimates);
LimitSelection SelectLimit(const SweepResult &sweep);

}  // namespace wavecauchy

#endif  // WAVECAUCHY_RECONSTRUCT_HPP
