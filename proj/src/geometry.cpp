// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wavecauchy/errors.hpp"

namespace wavecauchy
{

std::string ToString(ProfileKind kind)
{
  switch (kind)
  {
    case ProfileKind::Flat:
      return "flat";
    case ProfileKind::Tilted:
      return "tilted";
    case ProfileKind::GaussianBump:
      return "gaussian_bump";
    case ProfileKind::CustomSeries:
      return "custom_series";
  }
  return "unknown";
}

ProfileKind ProfileKindFromString(const std::string &name)
{
  if (name == "flat")
  {
    return ProfileKind::Flat;
  }
  if (name == "tilted")
  {
    return ProfileKind::Tilted;
  }
  if (name == "gaussian_bump")
  {
    return ProfileKind::GaussianBump;
  }
  if (name == "custom_series")
  {
    return ProfileKind::CustomSeries;
  }
  throw ConfigurationError("unknown profile kind '" + name + "'");
}

ProfileValue DomainProfile::Eval(const XVec &x) const
{
  ProfileValue v;
  switch (kind)
  {
    case ProfileKind::Flat:
      v.y = level;
      break;
    case ProfileKind::Tilted:
      v.y = level + Dot(slope, x);
      v.grad = slope;
      break;
    case ProfileKind::GaussianBump:
    {
      const XVec d = x - center;
      const double w2 = width * width;
      const double g = amplitude * std::exp(-Dot(d, d) / w2);
      v.y = level + g;
      v.grad = (-2.0 * g / w2) * d;
      break;
    }
    case ProfileKind::CustomSeries:
      v.y = level;
      for (const SeriesTerm &term : series)
      {
        const double arg = Dot(term.wavevector, x);
        const double c = std::cos(arg), s = std::sin(arg);
        v.y += term.cos_amplitude * c + term.sin_amplitude * s;
        v.grad = v.grad + (term.sin_amplitude * c - term.cos_amplitude * s) * term.wavevector;
      }
      break;
  }
  if (dim_n == 2)
  {
    v.grad[1] = 0.0;
  }
  return v;
}

DomainProfile FlatProfile(int dim_n, double level)
{
  DomainProfile p;
  p.kind = ProfileKind::Flat;
  p.dim_n = dim_n;
  p.level = level;
  p.c1 = std::abs(level);
  p.c2 = 0.0;
  return p;
}

DomainProfile TiltedProfile(int dim_n, double level, const XVec &slope)
{
  DomainProfile p;
  p.kind = ProfileKind::Tilted;
  p.dim_n = dim_n;
  p.level = level;
  p.slope = slope;
  if (dim_n == 2)
  {
    p.slope[1] = 0.0;
  }
  p.c1 = std::abs(level);
  p.c2 = Norm(p.slope);
  return p;
}

DomainProfile GaussianBumpProfile(int dim_n, double level, double amplitude, double width,
                                  const XVec &center)
{
  if (!(width > 0.0))
  {
    throw ConfigurationError("gaussian_bump width must be positive");
  }
  DomainProfile p;
  p.kind = ProfileKind::GaussianBump;
  p.dim_n = dim_n;
  p.level = level;
  p.amplitude = amplitude;
  p.width = width;
  p.center = center;
  p.c1 = std::abs(level) + std::abs(amplitude);
  p.c2 = 0.0;
  return p;
}

DomainProfile CustomSeriesProfile(int dim_n, double level, std::vector<SeriesTerm> terms)
{
  DomainProfile p;
  p.kind = ProfileKind::CustomSeries;
  p.dim_n = dim_n;
  p.level = level;
  p.series = std::move(terms);
  p.c1 = std::abs(level);
  for (const SeriesTerm &t : p.series)
  {
    p.c1 += std::hypot(t.cos_amplitude, t.sin_amplitude);
  }
  p.c2 = 0.0;
  return p;
}

GrowthReport ValidateGrowth(const DomainProfile &p, double box_halfwidth, int samples)
{
  if (samples < 1)
  {
    throw ConfigurationError("validate_growth needs at least one sample");
  }
  std::vector<std::string> problems;
  if (!(p.c1 >= 0.0))
  {
    problems.push_back("growth constant C1 must be >= 0");
  }
  if (!(p.c2 >= 0.0 && p.c2 < 1.0))
  {
    problems.push_back("growth constant C2 must lie in [0, 1)");
  }
  GrowthReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  auto coord = [&](int k) {
    return samples == 1 ? 0.0 : -box_halfwidth + 2.0 * box_halfwidth * k / (samples - 1);
  };
  const int ny = p.dim_n == 3 ? samples : 1;
  for (int a = 0; a < samples; ++a)
  {
    for (int b = 0; b < ny; ++b)
    {
      const XVec x{coord(a), p.dim_n == 3 ? coord(b) : 0.0};
      const double margin = p.c1 + p.c2 * Norm(x) - std::abs(p.Y(x));
      ++report.samples;
      if (margin < report.worst_margin)
      {
        report.worst_margin = margin;
        report.worst_x = x;
      }
    }
  }
  if (report.worst_margin < 0.0)
  {
    std::ostringstream os;
    os << "growth bound |Y(x)| <= C1 + C2|x| violated; worst x = (" << report.worst_x[0];
    if (p.dim_n == 3)
    {
      os << ", " << report.worst_x[1];
    }
    os << "), margin " << report.worst_margin;
    problems.push_back(os.str());
  }
  if (!problems.empty())
  {
    throw ValidationError(problems);
  }
  return report;
}

void CheckTarget(const DomainProfile &p, const ReconstructionTarget &target)
{
  const double y_boundary = p.Y(target.x);
  if (!(target.y < y_boundary))
  {
    std::ostringstream os;
    os << "target y*=" << target.y << " is not strictly below the boundary Y(x*)=" << y_boundary;
    throw GeometryError(os.str());
  }
}

double ConeCapRadius(const DomainProfile &p, const ReconstructionTarget &target)
{
  CheckTarget(p, target);
  if (!(p.c2 < 1.0))
  {
    throw GeometryError("growth constant C2 must be < 1 for a bounded cone cap");
  }
  const double r_limit =
      (p.c1 + std::abs(target.y) + p.c2 * Norm(target.x)) / (1.0 - p.c2) + 1.0;
  const int directions = p.dim_n == 2 ? 2 : 64;
  constexpr int scan = 4096;
  double radius = 0.0;
  for (int d = 0; d < directions; ++d)
  {
    XVec e{1.0, 0.0};
    if (p.dim_n == 2)
    {
      e[0] = d == 0 ? 1.0 : -1.0;
    }
    else
    {
      const double ang = 2.0 * std::numbers::pi * d / directions;
      e = {std::cos(ang), std::sin(ang)};
    }
    auto gap = [&](double r) { return p.Y(target.x + r * e) - target.y - r; };
    // Outermost sample still inside the cone cap.
    int last_inside = 0;
    for (int k = 1; k <= scan; ++k)
    {
      if (gap(r_limit * k / scan) >= 0.0)
      {
        last_inside = k;
      }
    }
    if (last_inside == scan)
    {
      std::ostringstream os;
      os << "cone cap bracket not found within |x - x*| <= " << r_limit;
      throw GeometryError(os.str());
    }
    double lo = r_limit * last_inside / scan;
    double hi = r_limit * (last_inside + 1) / scan;
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi;
         ++it)
    {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) >= 0.0 ? lo : hi) = mid;
    }
    radius = std::max(radius, 0.5 * (lo + hi));
  }
  return radius;
}

double DistanceToCone(const ReconstructionTarget &target, const SpacePoint &p)
{
  const double rho = Norm(p.x - target.x);
  const double eta = p.y - target.y;
  if (eta >= rho)
  {
    return 0.0;
  }
  if (eta <= -rho)
  {
    return std::hypot(rho, eta);
  }
  return (rho - eta) / std::numbers::sqrt2;
}

std::pair<double, double> TimeWindow(const DomainProfile &p, const ReconstructionTarget &target,
                                     const XVec &x)
{
  const double height = p.Y(x) - target.y;
  if (!(height > 0.0))
  {
    throw GeometryError("time window requires Y(x) > y*");
  }
  return {target.t - height, target.t + height};
}

double ApertureChart::SurfaceArea() const
{
  double area = 0.0;
  for (const ChartNode &n : nodes)
  {
    area += n.weight * n.surface_element;
  }
  return area;
}

bool ApertureChart::Contains(const XVec &x) const
{
  if (dim_n == 2)
  {
    return std::abs(x[0] - target.x[0]) < radius;
  }
  return Norm(x - target.x) < radius;
}

double ApertureChart::Time(std::size_t i, std::size_t j) const
{
  return target.t + tau.nodes[j] * (nodes[i].y - target.y);
}

double ApertureChart::MaxHeight() const
{
  double m = 0.0;
  for (const ChartNode &n : nodes)
  {
    m = std::max(m, n.y - target.y);
  }
  return m;
}

ApertureChart BuildAperture(const DomainProfile &p, const ReconstructionTarget &target,
                            double margin, const NodeCounts &counts)
{
  if (!(margin >= 0.0))
  {
    throw ConfigurationError("aperture margin must be >= 0");
  }
  if (counts.nodes_x < 1 || counts.nodes_t < 1 || (p.dim_n == 3 && counts.nodes_angular < 1))
  {
    throw ConfigurationError("aperture node counts must be positive");
  }
  ApertureChart chart;
  chart.dim_n = p.dim_n;
  chart.target = target;
  chart.cap_radius = ConeCapRadius(p, target);
  chart.margin = margin;
  chart.radius = chart.cap_radius + margin;
  chart.boundary_y_at_target = p.Y(target.x);
  chart.counts = counts;
  chart.tau = quadrature::GaussLegendre(static_cast<std::size_t>(counts.nodes_t));

  auto add_node = [&](const XVec &x, double weight) {
    const ProfileValue v = p.Eval(x);
    if (!(v.y > target.y))
    {
      std::ostringstream os;
      os << "aperture node x=(" << x[0] << ", " << x[1] << ") has Y(x)=" << v.y
         << " <= y*=" << target.y;
      throw GeometryError(os.str());
    }
    ChartNode node;
    node.x = x;
    node.y = v.y;
    node.grad_y = v.grad;
    node.weight = weight;
    node.surface_element = std::sqrt(1.0 + Dot(v.grad, v.grad));
    node.t_minus = target.t - (v.y - target.y);
    node.t_plus = target.t + (v.y - target.y);
    chart.nodes.push_back(node);
  };

  if (p.dim_n == 2)
  {
    const quadrature::Rule rx = quadrature::GaussLegendre(
        static_cast<std::size_t>(counts.nodes_x), target.x[0] - chart.radius,
        target.x[0] + chart.radius);
    for (std::size_t i = 0; i < rx.size(); ++i)
    {
      add_node({rx.nodes[i], 0.0}, rx.weights[i]);
    }
  }
  else
  {
    const quadrature::Rule rr =
        quadrature::GaussLegendre(static_cast<std::size_t>(counts.nodes_x), 0.0, chart.radius);
    const quadrature::Rule ra =
        quadrature::PeriodicTrapezoid(static_cast<std::size_t>(counts.nodes_angular));
    for (std::size_t i = 0; i < rr.size(); ++i)
    {
      for (std::size_t k = 0; k < ra.size(); ++k)
      {
        const double r = rr.nodes[i];
        const XVec x{target.x[0] + r * std::cos(ra.nodes[k]),
                     target.x[1] + r * std::sin(ra.nodes[k])};
        add_node(x, rr.weights[i] * r * ra.weights[k]);
      }
    }
  }
  return chart;
}

double DefaultMargin(double h_max, double eps)
{
  return 3.0 * std::sqrt(h_max * std::log(1.0 / eps));
}

}  // namespace wavecauchy
