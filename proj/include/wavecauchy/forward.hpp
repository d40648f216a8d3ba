// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_FORWARD_HPP
#define WAVECAUCHY_FORWARD_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wavecauchy/geometry.hpp"
#include "wavecauchy/types.hpp"

namespace wavecauchy
{

// Gaussian pulse A exp(-(s - delay)^2 / sigma^2).
struct PulseSpec
{
  double sigma = 0.5;
  double amplitude = 1.0;
  double delay = 0.0;

  double Value(double s) const;
  double D1(double s) const;
  double D2(double s) const;
};

struct PlaneWaveTerm
{
  std::array<double, 3> direction{};  // (d_x1, d_x2, d_y), unit length
  PulseSpec pulse;
};

// A source field is valid away from q; if `scatterer_radius` > 0 the ball
// |p - q| <= scatterer_radius is the declared scatterer set omega.
struct PointSourceTerm
{
  SpacePoint source;
  PulseSpec pulse;
  double scatterer_radius = 0.0;
  double r_min = 1e-6;
};

struct CylindricalSourceTerm
{
  SpacePoint source;
  PulseSpec pulse;
  double scatterer_radius = 0.0;
  double r_min = 1e-6;
};

struct StandingWaveTerm
{
  XVec k{};
  double k_y = 0.0;
  double phase = 0.0;
  double amplitude = 1.0;

  double Omega() const { return std::sqrt(Dot(k, k) + k_y * k_y); }
};

// u = c0 + c_t t + c_x . x + c_y y. Used for null reconstructions (u = 1, u = t).
struct AffineTerm
{
  double c0 = 0.0;
  double c_t = 0.0;
  XVec c_x{};
  double c_y = 0.0;
};

using FieldTerm =
    std::variant<PlaneWaveTerm, PointSourceTerm, CylindricalSourceTerm, StandingWaveTerm,
                 AffineTerm>;

struct FieldGradient
{
  XVec grad_x{};
  double d_y = 0.0;
  double d_t = 0.0;
};

// Exact solution of the homogeneous wave equation (superposition of terms).
class WaveFieldModel
{
public:
  WaveFieldModel() = default;
  WaveFieldModel(int dim_n, std::vector<FieldTerm> terms);

  int Dim() const { return dim_n_; }
  const std::vector<FieldTerm> &Terms() const { return terms_; }

  // Both throw DomainError when p is outside the validity region.
  double Value(const SpacePoint &p, double t) const;
  FieldGradient Gradient(const SpacePoint &p, double t) const;
  void CheckValid(const SpacePoint &p) const;
  bool IsValid(const SpacePoint &p) const;

  WaveFieldModel operator+(const WaveFieldModel &other) const;

private:
  int dim_n_ = 2;
  std::vector<FieldTerm> terms_;
};

// |d| must equal 1 within 1e-12 (ConfigurationError otherwise). `direction`
// holds (d_x1, d_x2, d_y); d_x2 must be 0 when dim_n = 2.
WaveFieldModel PlaneWave(int dim_n, const std::array<double, 3> &direction,
                         const PulseSpec &pulse);
// Retarded spherical wave A f(t - r) / (4 pi r), n = 3.
WaveFieldModel PointSource3d(const SpacePoint &source, const PulseSpec &pulse,
                             double scatterer_radius = 0.0);
// 2-D retarded solution (A / 2 pi) int_r^inf f(t - s) / sqrt(s^2 - r^2) ds.
WaveFieldModel CylindricalSource2d(const SpacePoint &source, const PulseSpec &pulse,
                                   double scatterer_radius = 0.0);
WaveFieldModel StandingWave(int dim_n, const XVec &k, double k_y, double phase,
                            double amplitude = 1.0);
WaveFieldModel AffineField(int dim_n, double c0, double c_t, const XVec &c_x = {},
                           double c_y = 0.0);

struct NoiseDescriptor
{
  double level = 0.0;
  std::uint64_t seed = 0;
};

// Cauchy data (u, d_nu u) at the tensor nodes (x_i, tau_j) of an aperture
// chart, t = t* + tau_j (Y(x_i) - y*), plus the traces u(x*, Y(x*), T_-/+).
struct CauchyDataSet
{
  int dim_n = 2;
  std::size_t nodes_x = 0;
  std::size_t nodes_t = 0;
  ReconstructionTarget target;
  std::vector<SpacePoint> points;  // boundary point per x-node
  std::vector<double> t;           // [i * nodes_t + j]
  std::vector<double> u;
  std::vector<double> dnu;  // unit outward normal derivative
  std::optional<double> trace_minus;
  std::optional<double> trace_plus;
  SpacePoint trace_point;
  double trace_t_minus = 0.0;
  double trace_t_plus = 0.0;
  std::optional<NoiseDescriptor> noise;

  std::size_t Index(std::size_t i, std::size_t j) const { return i * nodes_t + j; }
  // Node samples plus traces, i.e. the dataset CSV row count.
  std::size_t SampleCount() const;
  // Max |u| over node samples and traces.
  double MaxAbsU() const;
  double MaxAbsDnu() const;
};

// Throws DomainError naming the first node outside the model's validity region.
CauchyDataSet SampleCauchyData(const WaveFieldModel &model, const ApertureChart &chart);

// Adds N(0, (level max|u|)^2) to u samples and traces and N(0, (level max|dnu|)^2)
// to dnu samples. Deterministic for a fixed seed.
CauchyDataSet AddNoise(const CauchyDataSet &data, double level, std::uint64_t seed);

// Linear combination a*d1 + b*d2 of two datasets on the same chart.
CauchyDataSet Combine(double a, const CauchyDataSet &d1, double b, const CauchyDataSet &d2);

}  // namespace wavecauchy

#endif  // WAVECAUCHY_FORWARD_HPP
