// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wavecauchy/errors.hpp"
#include "wavecauchy/parallel.hpp"

namespace wavecauchy
{

namespace
{

// Beyond 27 sigma the Gaussian pulse is below the smallest normal double.
constexpr double kPulseSupport = 27.0;

template <class... Ts>
struct Overloaded : Ts...
{
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double Distance(const SpacePoint &a, const SpacePoint &b)
{
  const XVec dx = a.x - b.x;
  return std::sqrt(Dot(dx, dx) + (a.y - b.y) * (a.y - b.y));
}

std::string Describe(const SpacePoint &p)
{
  std::ostringstream os;
  os << "(" << p.x[0] << ", " << p.x[1] << ", " << p.y << ")";
  return os.str();
}

template <class Source>
void CheckSourceValid(const Source &s, const SpacePoint &p)
{
  const double r = Distance(p, s.source);
  if (r < s.r_min)
  {
    throw DomainError("field evaluated within r_min of the source at " + Describe(p));
  }
  if (s.scatterer_radius > 0.0 && r <= s.scatterer_radius)
  {
    throw DomainError("field evaluated inside the scatterer ball at " + Describe(p));
  }
}

// (1/2pi) int_0^inf g(t - r cosh(theta)) d(theta) for a pulse-shaped g that is
// negligible outside |s - delay| < 27 sigma. The substitution s = r cosh(theta)
// removes the endpoint singularity of the retarded 2-D kernel.
template <class G>
double RetardedIntegral(const PulseSpec &pulse, double r, double t, G &&g)
{
  const double tau = t - pulse.delay;
  const double hi_c = (tau + kPulseSupport * pulse.sigma) / r;
  if (hi_c <= 1.0)
  {
    return 0.0;
  }
  const double lo_c = std::max(1.0, (tau - kPulseSupport * pulse.sigma) / r);
  const double th_lo = std::acosh(lo_c);
  const double th_hi = std::acosh(hi_c);
  std::vector<double> cuts{th_lo};
  // Split at the pulse peak unless that leaves a sliver, on which the
  // Gauss-Kronrod error estimate is unreliable.
  if (tau / r > lo_c && tau / r < hi_c)
  {
    const double peak = std::acosh(tau / r);
    const double sliver = 1e-3 * (th_hi - th_lo);
    if (peak - th_lo > sliver && th_hi - peak > sliver)
    {
      cuts.push_back(peak);
    }
  }
  cuts.push_back(th_hi);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
  {
    double err = 0.0, l1 = 0.0;
    const double part = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, cuts[k], cuts[k + 1], 15, 1e-11, &err, &l1);
    if (!(err <= 1e-9 * l1 + 1e-300))
    {
      std::ostringstream os;
      os << "cylindrical source quadrature did not converge at r=" << r << " t=" << t
         << " (estimated error " << err << ", L1 " << l1 << ")";
      throw NumericalError(os.str());
    }
    total += part;
  }
  return total / (2.0 * std::numbers::pi);
}

}  // namespace

double PulseSpec::Value(double s) const
{
  const double z = (s - delay) / sigma;
  return amplitude * std::exp(-z * z);
}

double PulseSpec::D1(double s) const
{
  const double z = (s - delay) / sigma;
  return -2.0 * z / sigma * amplitude * std::exp(-z * z);
}

double PulseSpec::D2(double s) const
{
  const double z = (s - delay) / sigma;
  return (4.0 * z * z - 2.0) / (sigma * sigma) * amplitude * std::exp(-z * z);
}

WaveFieldModel::WaveFieldModel(int dim_n, std::vector<FieldTerm> terms)
  : dim_n_(dim_n), terms_(std::move(terms))
{
  if (dim_n_ != 2 && dim_n_ != 3)
  {
    throw ConfigurationError("field dimension must be 2 or 3");
  }
}

void WaveFieldModel::CheckValid(const SpacePoint &p) const
{
  for (const FieldTerm &term : terms_)
  {
    std::visit(Overloaded{[&](const PointSourceTerm &s) { CheckSourceValid(s, p); },
                          [&](const CylindricalSourceTerm &s) { CheckSourceValid(s, p); },
                          [](const auto &) {}},
               term);
  }
}

bool WaveFieldModel::IsValid(const SpacePoint &p) const
{
  try
  {
    CheckValid(p);
  }
  catch (const DomainError &)
  {
    return false;
  }
  return true;
}

double WaveFieldModel::Value(const SpacePoint &p, double t) const
{
  CheckValid(p);
  double u = 0.0;
  for (const FieldTerm &term : terms_)
  {
    u += std::visit(
        Overloaded{
            [&](const PlaneWaveTerm &w) {
              const auto &d = w.direction;
              return w.pulse.Value(t - (d[0] * p.x[0] + d[1] * p.x[1] + d[2] * p.y));
            },
            [&](const PointSourceTerm &s) {
              const double r = Distance(p, s.source);
              return s.pulse.Value(t - r) / (4.0 * std::numbers::pi * r);
            },
            [&](const CylindricalSourceTerm &s) {
              const double r = Distance(p, s.source);
              return RetardedIntegral(s.pulse, r, t, [&](double th) {
                return s.pulse.Value(t - r * std::cosh(th));
              });
            },
            [&](const StandingWaveTerm &s) {
              return s.amplitude * std::cos(Dot(s.k, p.x) + s.k_y * p.y + s.phase) *
                     std::cos(s.Omega() * t);
            },
            [&](const AffineTerm &a) { return a.c0 + a.c_t * t + Dot(a.c_x, p.x) + a.c_y * p.y; }},
        term);
  }
  return u;
}

FieldGradient WaveFieldModel::Gradient(const SpacePoint &p, double t) const
{
  CheckValid(p);
  FieldGradient g;
  auto add_radial = [&](const SpacePoint &q, double r, double d_r, double d_t) {
    const double inv = d_r / r;
    g.grad_x = g.grad_x + inv * (p.x - q.x);
    g.d_y += inv * (p.y - q.y);
    g.d_t += d_t;
  };
  for (const FieldTerm &term : terms_)
  {
    std::visit(
        Overloaded{
            [&](const PlaneWaveTerm &w) {
              const auto &d = w.direction;
              const double fp = w.pulse.D1(t - (d[0] * p.x[0] + d[1] * p.x[1] + d[2] * p.y));
              g.grad_x = g.grad_x + (-fp) * XVec{d[0], d[1]};
              g.d_y -= fp * d[2];
              g.d_t += fp;
            },
            [&](const PointSourceTerm &s) {
              const double r = Distance(p, s.source);
              const double four_pi = 4.0 * std::numbers::pi;
              const double v = s.pulse.Value(t - r);
              const double fp = s.pulse.D1(t - r);
              add_radial(s.source, r, -fp / (four_pi * r) - v / (four_pi * r * r),
                         fp / (four_pi * r));
            },
            [&](const CylindricalSourceTerm &s) {
              const double r = Distance(p, s.source);
              const double d_r = RetardedIntegral(s.pulse, r, t, [&](double th) {
                const double c = std::cosh(th);
                return -s.pulse.D1(t - r * c) * c;
              });
              const double d_t = RetardedIntegral(
                  s.pulse, r, t, [&](double th) { return s.pulse.D1(t - r * std::cosh(th)); });
              add_radial(s.source, r, d_r, d_t);
            },
            [&](const StandingWaveTerm &s) {
              const double phase = Dot(s.k, p.x) + s.k_y * p.y + s.phase;
              const double om = s.Omega();
              const double sn = -s.amplitude * std::sin(phase) * std::cos(om * t);
              g.grad_x = g.grad_x + sn * s.k;
              g.d_y += sn * s.k_y;
              g.d_t += -s.amplitude * om * std::cos(phase) * std::sin(om * t);
            },
            [&](const AffineTerm &a) {
              g.grad_x = g.grad_x + a.c_x;
              g.d_y += a.c_y;
              g.d_t += a.c_t;
            }},
        term);
  }
  if (dim_n_ == 2)
  {
    g.grad_x[1] = 0.0;
  }
  return g;
}

WaveFieldModel WaveFieldModel::operator+(const WaveFieldModel &other) const
{
  if (other.dim_n_ != dim_n_)
  {
    throw ConfigurationError("cannot superpose fields of different dimension");
  }
  std::vector<FieldTerm> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return WaveFieldModel(dim_n_, std::move(terms));
}

WaveFieldModel PlaneWave(int dim_n, const std::array<double, 3> &direction,
                         const PulseSpec &pulse)
{
  const double norm = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                                direction[2] * direction[2]);
  if (std::abs(norm - 1.0) > 1e-12)
  {
    throw ConfigurationError("plane wave direction must be a unit vector");
  }
  if (dim_n == 2 && direction[1] != 0.0)
  {
    throw ConfigurationError("plane wave direction has an x_2 component in 2-D");
  }
  if (!(pulse.sigma > 0.0))
  {
    throw ConfigurationError("pulse width sigma must be positive");
  }
  return WaveFieldModel(dim_n, {PlaneWaveTerm{direction, pulse}});
}

WaveFieldModel PointSource3d(const SpacePoint &source, const PulseSpec &pulse,
                             double scatterer_radius)
{
  if (!(pulse.sigma > 0.0))
  {
    throw ConfigurationError("pulse width sigma must be positive");
  }
  PointSourceTerm term;
  term.source = source;
  term.pulse = pulse;
  term.scatterer_radius = scatterer_radius;
  return WaveFieldModel(3, {term});
}

WaveFieldModel CylindricalSource2d(const SpacePoint &source, const PulseSpec &pulse,
                                   double scatterer_radius)
{
  if (!(pulse.sigma > 0.0))
  {
    throw ConfigurationError("pulse width sigma must be positive");
  }
  CylindricalSourceTerm term;
  term.source = source;
  term.source.x[1] = 0.0;
  term.pulse = pulse;
  term.scatterer_radius = scatterer_radius;
  return WaveFieldModel(2, {term});
}

WaveFieldModel StandingWave(int dim_n, const XVec &k, double k_y, double phase, double amplitude)
{
  StandingWaveTerm term{k, k_y, phase, amplitude};
  if (dim_n == 2)
  {
    term.k[1] = 0.0;
  }
  return WaveFieldModel(dim_n, {term});
}

WaveFieldModel AffineField(int dim_n, double c0, double c_t, const XVec &c_x, double c_y)
{
  AffineTerm term{c0, c_t, c_x, c_y};
  if (dim_n == 2)
  {
    term.c_x[1] = 0.0;
  }
  return WaveFieldModel(dim_n, {term});
}

std::size_t CauchyDataSet::SampleCount() const
{
  return u.size() + (trace_minus ? 1 : 0) + (trace_plus ? 1 : 0);
}

double CauchyDataSet::MaxAbsU() const
{
  double m = 0.0;
  for (double v : u)
  {
    m = std::max(m, std::abs(v));
  }
  if (trace_minus)
  {
    m = std::max(m, std::abs(*trace_minus));
  }
  if (trace_plus)
  {
    m = std::max(m, std::abs(*trace_plus));
  }
  return m;
}

double CauchyDataSet::MaxAbsDnu() const
{
  double m = 0.0;
  for (double v : dnu)
  {
    m = std::max(m, std::abs(v));
  }
  return m;
}

CauchyDataSet SampleCauchyData(const WaveFieldModel &model, const ApertureChart &chart)
{
  if (model.Dim() != chart.dim_n)
  {
    throw ConfigurationError("field dimension does not match the aperture chart");
  }
  CauchyDataSet data;
  data.dim_n = chart.dim_n;
  data.nodes_x = chart.NodeCount();
  data.nodes_t = chart.tau.size();
  data.target = chart.target;
  data.points.resize(data.nodes_x);
  const std::size_t total = data.nodes_x * data.nodes_t;
  data.t.resize(total);
  data.u.resize(total);
  data.dnu.resize(total);

  parallel::For(data.nodes_x, [&](std::size_t i) {
    const ChartNode &node = chart.nodes[i];
    const SpacePoint p{node.x, node.y};
    if (!model.IsValid(p))
    {
      std::ostringstream os;
      os << "field model is not valid at aperture node " << i << " " << Describe(p);
      throw DomainError(os.str());
    }
    data.points[i] = p;
    const XVec nx = node.UnitNormalX();
    const double ny = node.UnitNormalY();
    for (std::size_t j = 0; j < data.nodes_t; ++j)
    {
      const std::size_t k = data.Index(i, j);
      const double t = chart.Time(i, j);
      data.t[k] = t;
      data.u[k] = model.Value(p, t);
      const FieldGradient g = model.Gradient(p, t);
      data.dnu[k] = Dot(nx, g.grad_x) + ny * g.d_y;
    }
  });

  const ReconstructionTarget &tg = chart.target;
  data.trace_point = {tg.x, chart.boundary_y_at_target};
  const double height = chart.boundary_y_at_target - tg.y;
  data.trace_t_minus = tg.t - height;
  data.trace_t_plus = tg.t + height;
  if (!model.IsValid(data.trace_point))
  {
    throw DomainError("field model is not valid at the trace point " +
                      Describe(data.trace_point));
  }
  data.trace_minus = model.Value(data.trace_point, data.trace_t_minus);
  data.trace_plus = model.Value(data.trace_point, data.trace_t_plus);
  return data;
}

CauchyDataSet AddNoise(const CauchyDataSet &data, double level, std::uint64_t seed)
{
  if (!(level >= 0.0))
  {
    throw ConfigurationError("noise level must be >= 0");
  }
  if (level == 0.0)
  {
    return data;
  }
  CauchyDataSet out = data;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double su = level * data.MaxAbsU();
  const double sd = level * data.MaxAbsDnu();
  for (double &v : out.u)
  {
    v += su * normal(rng);
  }
  if (out.trace_minus)
  {
    *out.trace_minus += su * normal(rng);
  }
  if (out.trace_plus)
  {
    *out.trace_plus += su * normal(rng);
  }
  for (double &v : out.dnu)
  {
    v += sd * normal(rng);
  }
  out.noise = NoiseDescriptor{level, seed};
  return out;
}

CauchyDataSet Combine(double a, const CauchyDataSet &d1, double b, const CauchyDataSet &d2)
{
  if (d1.u.size() != d2.u.size() || d1.nodes_t != d2.nodes_t)
  {
    throw DataError("cannot combine datasets sampled on different charts");
  }
  CauchyDataSet out = d1;
  for (std::size_t k = 0; k < out.u.size(); ++k)
  {
    out.u[k] = a * d1.u[k] + b * d2.u[k];
    out.dnu[k] = a * d1.dnu[k] + b * d2.dnu[k];
  }
  if (d1.trace_minus && d2.trace_minus)
  {
    out.trace_minus = a * *d1.trace_minus + b * *d2.trace_minus;
  }
  else
  {
    out.trace_minus.reset();
  }
  if (d1.trace_plus && d2.trace_plus)
  {
    out.trace_plus = a * *d1.trace_plus + b * *d2.trace_plus;
  }
  else
  {
    out.trace_plus.reset();
  }
  out.noise.reset();
  return out;
}

}  // namespace wavecauchy
