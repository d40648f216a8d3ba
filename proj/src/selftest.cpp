// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavecauchy/errors.hpp"
#include "wavecauchy/forward.hpp"
#include "wavecauchy/geometry.hpp"
#include "wavecauchy/kernel.hpp"

namespace wavecauchy
{

namespace
{

class Recorder
{
public:
  explicit Recorder(SelftestReport &report) : report_(report) {}

  void AtMost(const std::string &module, const std::string &invariant, double observed, double bound)
  {
    Push(module, invariant, observed <= bound, observed, bound, "<=");
  }
  void Above(const std::string &module, const std::string &invariant, double observed, double bound)
  {
    Push(module, invariant, observed > bound, observed, bound, ">");
  }
  void Holds(const std::string &module, const std::string &invariant, bool ok)
  {
    Push(module, invariant, ok, ok ? 1.0 : 0.0, 1.0, "==");
  }
  // Runs a check body; an exception fails the check instead of the suite.
  template <class Body>
  void Guard(const std::string &module, const std::string &invariant, Body &&body)
  {
    try
    {
      body();
    }
    catch (const std::exception &e)
    {
      Push(module, invariant + " [threw: " + e.what() + "]", false, std::nan(""), 0.0, "==");
    }
  }

private:
  void Push(const std::string &module, const std::string &invariant, bool passed, double observed,
            double expected, const char *relation)
  {
    report_.checks.push_back({module, invariant, passed, observed, expected, relation});
  }

  SelftestReport &report_;
};

KernelEvaluator Kernel(const KernelSettings &s, int dim_n, double h)
{
  KernelParams p;
  p.h = h;
  p.dim_n = dim_n;
  p.s_nodes = s.s_nodes;
  p.xi_nodes = s.xi_nodes;
  p.xi_cutoff_tol = s.xi_cutoff_tol;
  p.sigma_min = s.sigma_min ? *s.sigma_min : s.sigma_min_factor * std::sqrt(h);
  return MakeKernel(p);
}

double RelDiff(double a, double b, double scale)
{
  return std::abs(a - b) / std::max(scale, 1e-300);
}

void KernelChecks(const KernelSettings &settings, Recorder &rec)
{
  const std::string mod = "kernel";
  for (int n : {2, 3})
  {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    rec.Guard(mod, "Gaussian trace phi(x,0)" + tag, [&] {
      const double h = 0.5;
      const KernelEvaluator k = Kernel(settings, n, h);
      const double m = 0.5 * (n - 1);
      double worst = 0.0;
      for (double r : {0.0, 0.3, 0.7, 1.1, 1.5})
      {
        const XVec x = n == 2 ? XVec{r, 0.0} : XVec{0.6 * r, 0.8 * r};
        const double gauss = std::pow(std::numbers::pi * h, -m) * std::exp(-r * r / h);
        worst = std::max(worst, RelDiff(k.Phi(x, 0.0), gauss, gauss));
      }
      rec.AtMost(mod, "Gaussian trace phi(x,0)" + tag, worst, 1e-8);
    });

    rec.Guard(mod, "symmetry in y and t" + tag, [&] {
      const KernelEvaluator k = Kernel(settings, n, 0.3);
      const XVec x = n == 2 ? XVec{0.4, 0.0} : XVec{0.4, -0.2};
      const double a = std::abs(k.Phi(x, 0.7) - k.Phi(x, -0.7)) / std::abs(k.Phi(x, 0.7));
      const double b =
          std::abs(k.W(x, 0.9, 0.5) - k.W(x, 0.9, -0.5)) / std::abs(k.W(x, 0.9, 0.5));
      rec.AtMost(mod, "symmetry in y and t" + tag, std::max(a, b), 1e-12);
    });

    rec.Guard(mod, "harmonicity of phi (FD)" + tag, [&] {
      const KernelEvaluator k = Kernel(settings, n, 0.5);
      const XVec x = n == 2 ? XVec{0.3, 0.0} : XVec{0.3, 0.2};
      const double y = 0.6;
      const double d = 1e-3;
      const double c = k.Phi(x, y);
      double lap = 0.0;
      double scale = 0.0;
      auto add = [&](double plus, double minus) {
        const double second = (plus - 2.0 * c + minus) / (d * d);
        lap += second;
        scale += std::abs(second);
      };
      add(k.Phi(x, y + d), k.Phi(x, y - d));
      for (int a = 0; a < n - 1; ++a)
      {
        XVec xp = x, xm = x;
        xp[a] += d;
        xm[a] -= d;
        add(k.Phi(xp, y), k.Phi(xm, y));
      }
      rec.AtMost(mod, "harmonicity of phi (FD)" + tag, std::abs(lap) / scale, 1e-4);
    });

    rec.Guard(mod, "wave equation for w (FD)" + tag, [&] {
      const KernelEvaluator k = Kernel(settings, n, 0.5);
      const XVec x = n == 2 ? XVec{0.3, 0.0} : XVec{0.3, 0.2};
      const double y = 0.9;
      const double t = 0.4;
      const double d = 1e-3;
      const double c = k.W(x, y, t);
      const double w_tt = (k.W(x, y, t + d) - 2 * c + k.W(x, y, t - d)) / (d * d);
      double lap = (k.W(x, y + d, t) - 2 * c + k.W(x, y - d, t)) / (d * d);
      double scale = std::abs(w_tt) + std::abs(lap);
      for (int a = 0; a < n - 1; ++a)
      {
        XVec xp = x, xm = x;
        xp[a] += d;
        xm[a] -= d;
        const double second = (k.W(xp, y, t) - 2 * c + k.W(xm, y, t)) / (d * d);
        lap += second;
        scale += std::abs(second);
      }
      rec.AtMost(mod, "wave equation for w (FD)" + tag, std::abs(w_tt - lap) / scale, 1e-4);
    });

    rec.Guard(mod, "trace w(x,y,+-y) = phi(x,0)/2" + tag, [&] {
      const KernelEvaluator k = Kernel(settings, n, 0.4);
      const XVec x = n == 2 ? XVec{0.5, 0.0} : XVec{0.3, 0.4};
      const double half = 0.5 * k.Phi(x, 0.0);
      const double err = std::max(std::abs(k.W(x, 0.8, 0.8) - half),
                                  std::abs(k.W(x, 0.8, -0.8) - half)) /
                         std::abs(half);
      rec.AtMost(mod, "trace w(x,y,+-y) = phi(x,0)/2" + tag, err, 1e-10);
    });

    // Near t = y the y/t derivatives must satisfy d_y w + d_t w ~ 0 and agree
    // with difference quotients of w itself; the second part exposes a
    // misplaced Taylor switch.
    rec.Guard(mod, "characteristic identity" + tag, [&] {
      const double h = 0.2;
      const KernelEvaluator k = Kernel(settings, n, h);
      const XVec x = n == 2 ? XVec{0.3, 0.0} : XVec{0.3, 0.1};
      const double y = 1.5;
      const double t = y * (1.0 - 1e-3);
      const WaveKernelSample s = k.Sample(x, y, t);
      rec.AtMost(mod, "characteristic identity |d_y w + d_t w| / |d_y w|" + tag,
                 std::abs(s.d_y + s.d_t) / std::abs(s.d_y), 1e-3 * (1.0 + 1e-9));
      const double d = 1e-5;
      const double fd_y = (k.W(x, y + d, t) - k.W(x, y - d, t)) / (2 * d);
      const double fd_t = (k.W(x, y, t + d) - k.W(x, y, t - d)) / (2 * d);
      const double err = std::max(RelDiff(s.d_y, fd_y, std::abs(fd_y)),
                                  RelDiff(s.d_t, fd_t, std::abs(fd_t)));
      rec.AtMost(mod, "characteristic derivatives match difference quotients" + tag, err, 1e-5);
    });
  }

  rec.Guard(mod, "localization", [&] {
    const XVec x{1.5, 0.0};
    double previous = INFINITY;
    bool decreasing = true;
    for (double h : {0.4, 0.2, 0.1, 0.05})
    {
      const double w = std::abs(Kernel(settings, 2, h).W(x, 1.0, 0.0));
      decreasing = decreasing && w < previous;
      previous = w;
    }
    rec.Holds(mod, "localization |w(1.5,1,0)| decreases as h -> 0", decreasing);
  });
}

void GeometryChecks(Recorder &rec)
{
  const std::string mod = "geometry";
  rec.Guard(mod, "flat cone cap radius", [&] {
    const DomainProfile flat = FlatProfile(2, 1.0);
    const ReconstructionTarget target{{0.0, 0.0}, 0.0, 0.0};
    rec.AtMost(mod, "flat cone cap radius = Y - y*", std::abs(ConeCapRadius(flat, target) - 1.0),
               1e-10);
    const ApertureChart chart = BuildAperture(flat, target, 0.5, {16, 8, 8});
    rec.AtMost(mod, "flat chart length = 2 (a + margin)", std::abs(chart.SurfaceArea() - 3.0),
               1e-12);
    double worst = 0.0;
    for (std::size_t i = 0; i < chart.NodeCount(); ++i)
    {
      const ChartNode &node = chart.nodes[i];
      worst = std::max({worst, std::abs(node.t_plus - node.y), std::abs(node.t_minus + node.y)});
    }
    rec.AtMost(mod, "time window T+- = t* +- (Y - y*)", worst, 1e-14);
  });
  rec.Guard(mod, "unit normals on a bump", [&] {
    const DomainProfile bump = GaussianBumpProfile(3, 1.0, 0.3, 1.0);
    const ReconstructionTarget target{{0.1, 0.0}, 0.0, 0.0};
    const ApertureChart chart = BuildAperture(bump, target, 0.3, {8, 4, 8});
    double worst = 0.0;
    for (const ChartNode &node : chart.nodes)
    {
      const XVec nx = node.UnitNormalX();
      worst = std::max(worst, std::abs(Dot(nx, nx) + node.UnitNormalY() * node.UnitNormalY() - 1));
    }
    rec.AtMost(mod, "unit normals have length 1", worst, 1e-14);
    rec.Holds(mod, "cap is covered by the chart",
              chart.radius >= ConeCapRadius(bump, target) && chart.NodeCount() == 64);
  });
}

void ForwardChecks(Recorder &rec)
{
  const std::string mod = "forward";
  rec.Guard(mod, "plane wave solves the wave equation", [&] {
    const double th = 20.0 * std::numbers::pi / 180.0;
    const WaveFieldModel u = PlaneWave(2, {std::sin(th), 0.0, std::cos(th)}, PulseSpec{});
    const SpacePoint p{{0.2, 0.0}, 0.7};
    const double t = 0.3;
    const double d = 1e-3;
    const double c = u.Value(p, t);
    const double u_tt = (u.Value(p, t + d) - 2 * c + u.Value(p, t - d)) / (d * d);
    const double u_yy = (u.Value({p.x, p.y + d}, t) - 2 * c + u.Value({p.x, p.y - d}, t)) / (d * d);
    const double u_xx = (u.Value({{p.x[0] + d, 0.0}, p.y}, t) - 2 * c +
                         u.Value({{p.x[0] - d, 0.0}, p.y}, t)) /
                        (d * d);
    rec.AtMost(mod, "plane wave solves the wave equation (FD)",
               std::abs(u_tt - u_xx - u_yy) / (std::abs(u_tt) + std::abs(u_xx) + std::abs(u_yy)),
               1e-4);
  });
  rec.Guard(mod, "point source solves the wave equation", [&] {
    const WaveFieldModel u = PointSource3d({{0.0, 0.0}, -1.0}, PulseSpec{0.5, 1.0, 0.0});
    const SpacePoint p{{0.3, -0.2}, 0.4};
    const double t = 1.4;
    const double d = 1e-3;
    const double c = u.Value(p, t);
    const double u_tt = (u.Value(p, t + d) - 2 * c + u.Value(p, t - d)) / (d * d);
    double lap = (u.Value({p.x, p.y + d}, t) - 2 * c + u.Value({p.x, p.y - d}, t)) / (d * d);
    double scale = std::abs(u_tt) + std::abs(lap);
    for (int a = 0; a < 2; ++a)
    {
      SpacePoint pp = p, pm = p;
      pp.x[a] += d;
      pm.x[a] -= d;
      const double second = (u.Value(pp, t) - 2 * c + u.Value(pm, t)) / (d * d);
      lap += second;
      scale += std::abs(second);
    }
    rec.AtMost(mod, "point source solves the wave equation (FD)", std::abs(u_tt - lap) / scale,
               1e-4);
  });
  rec.Guard(mod, "sampling and noise", [&] {
    const ApertureChart chart =
        BuildAperture(FlatProfile(2, 1.0), {{0.0, 0.0}, 0.0, 0.0}, 0.5, {12, 6, 1});
    const WaveFieldModel u = PlaneWave(2, {0.0, 0.0, 1.0}, PulseSpec{});
    const CauchyDataSet data = SampleCauchyData(u, chart);
    double worst = 0.0;
    for (std::size_t i = 0; i < data.nodes_x; ++i)
    {
      for (std::size_t j = 0; j < data.nodes_t; ++j)
      {
        const std::size_t k = data.Index(i, j);
        worst = std::max(worst, std::abs(data.dnu[k] - u.Gradient(data.points[i], data.t[k]).d_y));
      }
    }
    rec.AtMost(mod, "normal derivative on flat boundary = d_y u", worst, 1e-15);
    const CauchyDataSet a = AddNoise(data, 0.01, 7);
    const CauchyDataSet b = AddNoise(data, 0.01, 7);
    rec.Holds(mod, "noise is deterministic for a fixed seed", a.u == b.u && a.dnu == b.dnu);
    rec.Holds(mod, "sample count = nodes_x * nodes_t + 2 traces", data.SampleCount() == 74);
  });
}

}  // namespace

std::size_t SelftestReport::Failures() const
{
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const SelftestCheck &c) { return !c.passed; }));
}

std::string SelftestReport::Format(bool failures_only) const
{
  std::ostringstream out;
  out.precision(3);
  for (const SelftestCheck &c : checks)
  {
    if (failures_only && c.passed)
    {
      continue;
    }
    out << (c.passed ? "PASS " : "FAIL ") << c.module << ": " << c.invariant << " (observed "
        << c.observed << ", expected " << c.relation << ' ' << c.expected << ")\n";
  }
  out << checks.size() - Failures() << "/" << checks.size() << " checks passed\n";
  return out.str();
}

SelftestReport RunSelftest(const KernelSettings &settings)
{
  SelftestReport report;
  Recorder rec(report);
  KernelChecks(settings, rec);
  GeometryChecks(rec);
  ForwardChecks(rec);
  return report;
}

}  // namespace wavecauchy
