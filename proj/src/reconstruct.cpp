// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wavecauchy/errors.hpp"
#include "wavecauchy/parallel.hpp"

namespace wavecauchy
{

namespace
{

void CheckCompatible(const CauchyDataSet &data, const KernelEvaluator &kernel,
                     const ApertureChart &chart)
{
  if (kernel.Dim() != chart.dim_n || data.dim_n != chart.dim_n)
  {
    throw ConfigurationError("kernel, data and chart dimensions differ");
  }
  if (data.nodes_x != chart.NodeCount() || data.nodes_t != chart.tau.size() ||
      data.u.size() != data.nodes_x * data.nodes_t || data.dnu.size() != data.u.size())
  {
    throw DataError("dataset layout does not match the aperture chart");
  }
}

// Weighted time integral over one boundary node.
double NodeRow(const CauchyDataSet &data, const KernelEvaluator &kernel,
               const ApertureChart &chart, std::size_t i)
{
  const ChartNode &node = chart.nodes[i];
  const ReconstructionTarget &tg = chart.target;
  const XVec dx = node.x - tg.x;
  const double dy = node.y - tg.y;
  const XVec nx = node.UnitNormalX();
  const double ny = node.UnitNormalY();
  double row = 0.0;
  for (std::size_t j = 0; j < data.nodes_t; ++j)
  {
    const double s = chart.tau.nodes[j] * dy;
    WaveKernelSample w;
    try
    {
      w = kernel.Sample(dx, dy, s);
    }
    catch (const RangeError &e)
    {
      std::ostringstream os;
      os << e.what() << " at aperture node " << i << " (x=" << node.x[0] << ", " << node.x[1]
         << "), time node " << j;
      throw RangeError(os.str(), e.Magnitude());
    }
    const std::size_t k = data.Index(i, j);
    const double dnu_w = Dot(nx, w.grad_x) + ny * w.d_y;
    row += chart.tau.weights[j] * (data.u[k] * dnu_w - data.dnu[k] * w.w);
  }
  return node.weight * node.surface_element * dy * row;
}

}  // namespace

KernelParams KernelParamsFor(const KernelSettings &settings, double h, const ApertureChart &chart)
{
  KernelParams p;
  p.h = h;
  p.dim_n = chart.dim_n;
  p.s_nodes = settings.s_nodes;
  p.xi_nodes = settings.xi_nodes;
  p.xi_cutoff_tol = settings.xi_cutoff_tol;
  p.sigma_min = settings.sigma_min ? *settings.sigma_min : settings.sigma_min_factor * std::sqrt(h);
  p.y_max = std::max(chart.MaxHeight(), 1e-12);
  p.x_max = std::max(chart.radius, 1e-12);
  return p;
}

double BoundaryTerm(const CauchyDataSet &data)
{
  if (!data.trace_minus || !data.trace_plus)
  {
    throw DataError("dataset is missing the trace values u(x*, Y(x*), T_-/+)");
  }
  return 0.5 * (*data.trace_minus + *data.trace_plus);
}

double IntegralTerm(const CauchyDataSet &data, const KernelEvaluator &kernel,
                    const ApertureChart &chart)
{
  CheckCompatible(data, kernel, chart);
  std::vector<double> rows(chart.NodeCount());
  parallel::For(rows.size(), [&](std::size_t i) { rows[i] = NodeRow(data, kernel, chart, i); });
  double total = 0.0;
  for (double r : rows)
  {
    total += r;
  }
  return total;
}

double IntegralTermSerial(const CauchyDataSet &data, const KernelEvaluator &kernel,
                          const ApertureChart &chart)
{
  CheckCompatible(data, kernel, chart);
  double total = 0.0;
  for (std::size_t i = 0; i < chart.NodeCount(); ++i)
  {
    total += NodeRow(data, kernel, chart, i);
  }
  return total;
}

ReconstructionValue ReconstructAt(const CauchyDataSet &data, const ApertureChart &chart, double h,
                                  const KernelSettings &settings)
{
  const KernelEvaluator kernel = MakeKernel(KernelParamsFor(settings, h, chart));
  ReconstructionValue v;
  v.h = h;
  v.boundary = BoundaryTerm(data);
  v.integral = IntegralTerm(data, kernel, chart);
  v.estimate = v.boundary + v.integral;
  return v;
}

void SweepOptions::Validate() const
{
  std::vector<std::string> problems;
  if (!(h_max > 0.0))
  {
    problems.push_back("sweep h_max must be positive");
  }
  if (!(ratio > 0.0 && ratio < 1.0))
  {
    problems.push_back("sweep ratio must lie in (0, 1)");
  }
  if (count < 3)
  {
    problems.push_back("sweep count must be >= 3");
  }
  if (!(precision_budget > 0.0))
  {
    problems.push_back("sweep precision_budget must be positive");
  }
  if (!problems.empty())
  {
    throw ValidationError(problems);
  }
}

std::vector<double> SweepOptions::Schedule() const
{
  std::vector<double> h(static_cast<std::size_t>(std::max(count, 0)));
  for (std::size_t k = 0; k < h.size(); ++k)
  {
    h[k] = h_max * std::pow(ratio, static_cast<double>(k));
  }
  return h;
}

double KernelAmplification(const ApertureChart &chart, double h)
{
  double e = 0.0;
  for (const ChartNode &n : chart.nodes)
  {
    const double dy = n.y - chart.target.y;
    double v = dy * dy;
    if (chart.dim_n == 2)
    {
      const XVec dx = n.x - chart.target.x;
      v -= Dot(dx, dx);
    }
    e = std::max(e, v);
  }
  return std::exp(e / h);
}

double RequiredChartNodes(const ApertureChart &chart, double h)
{
  // The kernel's x-spectrum is centred at 2 (y - y*) / h with width ~ 1 / sqrt(h).
  const double band = 2.0 * chart.MaxHeight() / h + 3.0 / std::sqrt(h);
  const double length = chart.dim_n == 2 ? 2.0 * chart.radius : chart.radius;
  return 0.5 * length * band;
}

SweepResult HSweep(const CauchyDataSet &data, const ApertureChart &chart,
                   const SweepOptions &options, const KernelSettings &settings,
                   std::optional<double> truth)
{
  options.Validate();
  SweepResult result;
  result.schedule = options.Schedule();
  result.truth = truth;
  result.scale = std::max(truth ? std::abs(*truth) : 0.0, data.MaxAbsU());
  if (result.scale == 0.0)
  {
    result.scale = 1.0;
  }
  const double boundary = BoundaryTerm(data);
  for (double h : result.schedule)
  {
    const double amp = KernelAmplification(chart, h);
    std::ostringstream why;
    if (std::numeric_limits<double>::epsilon() * amp > options.precision_budget)
    {
      why << "precision: eps * amplification " << std::numeric_limits<double>::epsilon() * amp
          << " exceeds budget " << options.precision_budget << " at h=" << h;
    }
    else if (options.resolution_guard &&
             static_cast<double>(chart.counts.nodes_x) < RequiredChartNodes(chart, h))
    {
      why << "resolution: " << chart.counts.nodes_x << " chart nodes < "
          << std::ceil(RequiredChartNodes(chart, h)) << " required at h=" << h;
    }
    if (!why.str().empty())
    {
      result.truncated = true;
      result.truncation_reason = why.str();
      break;
    }
    SweepEntry entry;
    entry.h = h;
    entry.boundary = boundary;
    entry.amplification = amp;
    try
    {
      const KernelEvaluator kernel = MakeKernel(KernelParamsFor(settings, h, chart));
      entry.integral = IntegralTerm(data, kernel, chart);
    }
    catch (const RangeError &e)
    {
      result.truncated = true;
      result.truncation_reason = std::string("overflow at h=") + std::to_string(h) + ": " + e.what();
      break;
    }
    entry.estimate = entry.boundary + entry.integral;
    if (truth)
    {
      entry.abs_err = std::abs(entry.estimate - *truth);
      entry.rel_err = *entry.abs_err / result.scale;
    }
    result.entries.push_back(entry);
  }
  if (result.entries.size() >= 3)
  {
    result.selection = SelectLimit(result);
  }
  return result;
}

LimitSelection SelectLimit(std::span<const double> h, std::span<const double> estimates)
{
  if (h.size() != estimates.size())
  {
    throw ConfigurationError("sweep h and estimate lists differ in length");
  }
  if (estimates.size() < 3)
  {
    throw NumericalError("limit selection needs at least 3 sweep entries");
  }
  LimitSelection sel;
  for (std::size_t k = 0; k + 1 < estimates.size(); ++k)
  {
    sel.differences.push_back(std::abs(estimates[k + 1] - estimates[k]));
  }
  const auto best = std::min_element(sel.differences.begin(), sel.differences.end());
  const auto k = static_cast<std::size_t>(best - sel.differences.begin());
  sel.index = k + 1;
  sel.estimate = estimates[k + 1];
  sel.h_star = h[k + 1];
  sel.no_plateau = true;
  for (std::size_t i = 0; i + 1 < sel.differences.size(); ++i)
  {
    if (!(sel.differences[i + 1] > sel.differences[i]))
    {
      sel.no_plateau = false;
      break;
    }
  }
  return sel;
}

LimitSelection SelectLimit(const SweepResult &sweep)
{
  std::vector<double> h, r;
  for (const SweepEntry &e : sweep.entries)
  {
    h.push_back(e.h);
    r.push_back(e.estimate);
  }
  return SelectLimit(h, r);
}

}  // namespace wavecauchy
