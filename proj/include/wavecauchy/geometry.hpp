// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_GEOMETRY_HPP
#define WAVECAUCHY_GEOMETRY_HPP

#include <string>
#include <utility>
#include <vector>

#include "wavecauchy/quadrature.hpp"
#include "wavecauchy/types.hpp"

namespace wavecauchy
{

enum class ProfileKind
{
  Flat,
  Tilted,
  GaussianBump,
  CustomSeries
};

std::string ToString(ProfileKind kind);
ProfileKind ProfileKindFromString(const std::string &name);

// One term a cos(k.x) + b sin(k.x) of a custom boundary series.
struct SeriesTerm
{
  double cos_amplitude = 0.0;
  double sin_amplitude = 0.0;
  XVec wavevector{};
};

struct ProfileValue
{
  double y = 0.0;
  XVec grad{};
};

// Boundary graph y = Y(x) of the subgraph domain {y < Y(x)} together with the
// growth constants of |Y(x)| <= C1 + C2 |x|, C2 < 1.
struct DomainProfile
{
  ProfileKind kind = ProfileKind::Flat;
  int dim_n = 2;
  double level = 0.0;
  XVec slope{};
  double amplitude = 0.0;
  double width = 1.0;
  XVec center{};
  std::vector<SeriesTerm> series;
  double c1 = 0.0;
  double c2 = 0.0;

  ProfileValue Eval(const XVec &x) const;
  double Y(const XVec &x) const { return Eval(x).y; }
};

// Factories fill C1/C2 with the tightest constants valid for the kind.
DomainProfile FlatProfile(int dim_n, double level);
DomainProfile TiltedProfile(int dim_n, double level, const XVec &slope);
DomainProfile GaussianBumpProfile(int dim_n, double level, double amplitude, double width,
                                  const XVec &center = {});
DomainProfile CustomSeriesProfile(int dim_n, double level, std::vector<SeriesTerm> terms);

inline ProfileValue ProfileEval(const DomainProfile &p, const XVec &x) { return p.Eval(x); }

struct GrowthReport
{
  double worst_margin = 0.0;  // min over samples of C1 + C2|x| - |Y(x)|
  XVec worst_x{};
  int samples = 0;
};

// Checks the growth bound on a uniform grid of the box |x_i| <= box_halfwidth
// (`samples` points per axis). Throws ValidationError naming the worst x.
GrowthReport ValidateGrowth(const DomainProfile &p, double box_halfwidth, int samples);

struct ReconstructionTarget
{
  XVec x{};
  double y = 0.0;
  double t = 0.0;
};

// Throws GeometryError unless y_star < Y(x_star).
void CheckTarget(const DomainProfile &p, const ReconstructionTarget &target);

// Smallest a with Y(x) - y* < |x - x*| whenever |x - x*| > a, found by radial
// bisection along 2 (n = 2) or 64 (n = 3) directions. Assumes the cap is
// star-shaped about x*.
double ConeCapRadius(const DomainProfile &p, const ReconstructionTarget &target);

// Distance from a point to the cone {y - y* >= |x - x*|}.
double DistanceToCone(const ReconstructionTarget &target, const SpacePoint &p);

std::pair<double, double> TimeWindow(const DomainProfile &p, const ReconstructionTarget &target,
                                     const XVec &x);

struct NodeCounts
{
  int nodes_x = 64;        // n = 2: interval nodes; n = 3: radial nodes
  int nodes_t = 64;        // normalized-time nodes per boundary node
  int nodes_angular = 32;  // n = 3 only
};

struct ChartNode
{
  XVec x{};
  double y = 0.0;  // Y(x)
  XVec grad_y{};
  double weight = 0.0;           // chart-coordinate weight (dx)
  double surface_element = 1.0;  // sqrt(1 + |grad Y|^2)
  double t_minus = 0.0;
  double t_plus = 0.0;

  // Unit outward normal (-grad Y, 1) / sqrt(1 + |grad Y|^2).
  XVec UnitNormalX() const { return {-grad_y[0] / surface_element, -grad_y[1] / surface_element}; }
  double UnitNormalY() const { return 1.0 / surface_element; }
};

// Parametrized boundary patch covering the cone cap, with a tensor quadrature
// in (x-chart, normalized time tau in [-1, 1]).
struct ApertureChart
{
  int dim_n = 2;
  ReconstructionTarget target;
  double cap_radius = 0.0;
  double margin = 0.0;
  double radius = 0.0;
  double boundary_y_at_target = 0.0;  // Y(x*)
  NodeCounts counts;
  std::vector<ChartNode> nodes;
  quadrature::Rule tau;

  std::size_t NodeCount() const { return nodes.size(); }
  // Sum of weight * surface_element.
  double SurfaceArea() const;
  // Strict interior test in chart coordinates.
  bool Contains(const XVec &x) const;
  // Absolute time of sample (i, j).
  double Time(std::size_t i, std::size_t j) const;
  // Largest Y(x_i) - y_star over the nodes.
  double MaxHeight() const;
};

ApertureChart BuildAperture(const DomainProfile &p, const ReconstructionTarget &target,
                            double margin, const NodeCounts &counts);

// Margin 3 sqrt(h ln(1/eps)) that keeps the kernel tail beyond the cap below eps.
double DefaultMargin(double h_max, double eps = 1e-6);

}  // namespace wavecauchy

#endif  // WAVECAUCHY_GEOMETRY_HPP
