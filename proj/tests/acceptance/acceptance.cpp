// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, exit status = number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "oracles.hpp"
#include "scratch_dir.hpp"
#include "wavecauchy/config.hpp"
#include "wavecauchy/kernel.hpp"
#include "wavecauchy/reconstruct.hpp"

using namespace wavecauchy;
namespace fs = std::filesystem;

namespace
{

struct Verdict
{
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string &what)
  {
    if (!ok)
    {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

KernelEvaluator Kernel(int n, double h)
{
  KernelParams p;
  p.h = h;
  p.dim_n = n;
  return MakeKernel(p);
}

ExperimentConfig Load(const std::string &name)
{
  return LoadConfig(fs::path(WAVECAUCHY_CONFIG_DIR) / name);
}

struct Run
{
  ExperimentConfig config;
  ApertureChart chart;
  CauchyDataSet data;
  SweepResult sweep;
};

Run Sweep(ExperimentConfig config)
{
  Run r{config, config.BuildChart(), {}, {}};
  r.data = SampleCauchyData(*config.field, r.chart);
  if (config.noise.level > 0.0)
  {
    r.data = AddNoise(r.data, config.noise.level, config.noise.seed);
  }
  r.sweep = HSweep(r.data, r.chart, config.sweep, config.kernel, config.Truth());
  return r;
}

double SelectedRelErr(const Run &r)
{
  return std::abs(r.sweep.selection->estimate - *r.sweep.truth) / r.sweep.scale;
}

std::string Curve(const SweepResult &s)
{
  std::ostringstream out;
  out.precision(2);
  out << "{";
  for (std::size_t k = 0; k < s.entries.size(); ++k)
  {
    out << (k ? " " : "") << *s.entries[k].abs_err;
  }
  out << "}";
  return out.str();
}

// ---------------------------------------------------------------------------

Verdict KernelCorrectness()
{
  Verdict v;
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(-1.5, 1.5), uh(0.05, 1.0);
  double worst2 = 0.0;
  for (int k = 0; k < 100; ++k)
  {
    const double x = ux(rng), y = uy(rng), h = uh(rng);
    const double envelope = std::exp((y * y - x * x) / h) / std::sqrt(std::numbers::pi * h);
    const double err = std::abs(Kernel(2, h).Phi({x, 0.0}, y) - oracle::PhiSpectral2d(x, y, h));
    worst2 = std::max(worst2, err / envelope);
  }
  double worst3 = 0.0;
  for (double h : {0.05, 0.1, 0.3, 0.6, 1.0})
  {
    const KernelEvaluator k = Kernel(3, h);
    const double peak = oracle::GaussianTrace(0.0, h, 3);
    for (double r = 0.0; r <= 2.0; r += 0.05)
    {
      const double g = oracle::GaussianTrace(r * r, h, 3);
      worst3 = std::max(worst3, std::abs(k.Phi({0.8 * r, 0.6 * r}, 0.0) - g) / peak);
    }
  }
  v.detail << "n=2 vs 100-digit spectral oracle, 100 points: max err/envelope " << worst2
           << "; n=3 trace vs Gaussian: max err/peak " << worst3;
  v.Require(worst2 <= 1e-8, "n=2 relative 1e-8");
  v.Require(worst3 <= 1e-8, "n=3 trace 1e-8");
  return v;
}

// u_tt - Laplacian u by central second differences of w.
double WaveResidual(const KernelEvaluator &k, const XVec &x, double y, double t, double d)
{
  const double c = k.W(x, y, t);
  double r = (k.W(x, y, t + d) - 2 * c + k.W(x, y, t - d)) / (d * d);
  r -= (k.W(x, y + d, t) - 2 * c + k.W(x, y - d, t)) / (d * d);
  for (int a = 0; a < k.Dim() - 1; ++a)
  {
    XVec xp = x, xm = x;
    xp[a] += d;
    xm[a] -= d;
    r -= (k.W(xp, y, t) - 2 * c + k.W(xm, y, t)) / (d * d);
  }
  return r;
}

Verdict WaveIdentities()
{
  Verdict v;
  double ratio_lo = INFINITY, ratio_hi = 0.0, char_worst = 0.0, fd_worst = 0.0, trace_worst = 0.0;
  for (int n : {2, 3})
  {
    std::mt19937_64 rng(7 + n);
    std::uniform_real_distribution<double> ux(-1.0, 1.0), uy(0.3, 1.5), us(-1.0, 1.0),
        uh(0.2, 1.0);
    for (int k = 0; k < 20; ++k)
    {
      const XVec x{ux(rng), n == 3 ? ux(rng) : 0.0};
      const double y = uy(rng);
      const double t = us(rng) * (y - 0.15);
      const KernelEvaluator ker = Kernel(n, uh(rng));
      const double ratio = WaveResidual(ker, x, y, t, 0.04) / WaveResidual(ker, x, y, t, 0.02);
      ratio_lo = std::min(ratio_lo, ratio);
      ratio_hi = std::max(ratio_hi, ratio);

      const double tc = y * (1.0 - 1e-3);
      const WaveKernelSample s = ker.Sample(x, y, tc);
      char_worst = std::max(char_worst, std::abs(s.d_y + s.d_t) / std::abs(s.d_y));
      const double d = 1e-6 * y;
      const double fd_y = (ker.W(x, y + d, tc) - ker.W(x, y - d, tc)) / (2 * d);
      const double fd_t = (ker.W(x, y, tc + d) - ker.W(x, y, tc - d)) / (2 * d);
      fd_worst = std::max({fd_worst, std::abs(s.d_y - fd_y) / std::abs(fd_y),
                           std::abs(s.d_t - fd_t) / std::abs(fd_t)});

      const double half = 0.5 * ker.Phi(x, 0.0);
      for (double tt : {y, -y, y * (1 - 1e-12)})
      {
        trace_worst = std::max(trace_worst, std::abs(ker.W(x, y, tt) - half) / std::abs(half));
      }
    }
  }
  // w depends on y^2 - t^2 only, so |d_y w + d_t w| / |d_y w| = 1 - t/y = 1e-3
  // exactly at t = y (1 - 1e-3): the bound is attained. The sum cancels three
  // digits, so quadrature-level errors in d_y, d_t (~1e-12) reach the ratio
  // magnified 1e3 times; the comparison absorbs that and nothing more.
  const double char_bound = 1e-3 * (1.0 + 1e-9);
  v.detail << "FD residual ratio (d=0.04/0.02) in [" << ratio_lo << ", " << ratio_hi
           << "] over 40 points (20 per n); |d_y w + d_t w|/|d_y w| at t=y(1-1e-3) max "
           << char_worst << " (excess over 1e-3: " << char_worst / 1e-3 - 1.0 << ") with d_y, d_t matching difference quotients to " << fd_worst
           << "; trace identity max rel err " << trace_worst;
  v.Require(ratio_lo >= 2.8 && ratio_hi <= 5.2, "residual ratio 4 +- 30%");
  v.Require(char_worst <= char_bound, "characteristic ratio <= 1e-3");
  v.Require(fd_worst <= 1e-5, "characteristic derivatives agree with difference quotients");
  v.Require(trace_worst <= 1e-10, "trace identity 1e-10");
  return v;
}

Verdict Localization()
{
  Verdict v;
  const double h_list[] = {0.4, 0.2, 0.1, 0.05};
  struct Point
  {
    int n;
    double r, y, t;
  };
  const std::vector<Point> points = {
      {2, 1.5, 1.0, 0.0},  {2, 1.5, 1.0, 0.5},  {2, 1.2, 1.0, 0.9},
      {2, 2.0, 1.5, 1.0},  {2, 1.3, 0.8, -0.6}, {3, 1.5, 1.0, 0.0},
      {3, 1.5, 1.0, 0.5},  {3, 1.2, 1.0, 0.9},  {3, 1.1, 0.5, 0.2},
      {3, 1.3, 0.8, -0.6},
  };
  int decreasing = 0;
  for (const Point &p : points)
  {
    const XVec x = p.n == 2 ? XVec{p.r, 0.0} : XVec{0.6 * p.r, 0.8 * p.r};
    double prev[3] = {INFINITY, INFINITY, INFINITY};
    bool ok = true;
    for (double h : h_list)
    {
      const WaveKernelSample s = Kernel(p.n, h).Sample(x, p.y, p.t);
      const double now[3] = {std::abs(s.w), Norm(s.grad_x), std::abs(s.d_y)};
      for (int q = 0; q < 3; ++q)
      {
        ok = ok && now[q] < prev[q];
        prev[q] = now[q];
      }
    }
    decreasing += ok ? 1 : 0;
    if (!ok)
    {
      v.Require(false, "monotone decay at n=" + std::to_string(p.n) + " (" + std::to_string(p.r) +
                           ", " + std::to_string(p.y) + ", " + std::to_string(p.t) + ")");
    }
  }
  bool grows = true;
  for (int n : {2, 3})
  {
    const XVec x = n == 2 ? XVec{0.2, 0.0} : XVec{0.12, 0.16};
    const double w_lo = std::abs(Kernel(n, 0.05).W(x, 1.0, 0.3));
    const double w_hi = std::abs(Kernel(n, 0.4).W(x, 1.0, 0.3));
    grows = grows && w_lo > w_hi;
    v.detail << "n=" << n << " |w(0.2,1,0.3)|: h=0.4 " << w_hi << " -> h=0.05 " << w_lo << "; ";
  }
  v.detail << decreasing << "/" << points.size()
           << " points with |x| > y >= |t| (5 per n) decay strictly in |w|, |grad_x w|, |d_y w|";
  v.Require(grows, "growth inside the cone");
  return v;
}

Verdict NullReconstructions()
{
  Verdict v;
  const double eps = std::numeric_limits<double>::epsilon();
  auto decreasing = [&](const SweepResult &s) {
    for (std::size_t k = 1; k < s.entries.size(); ++k)
    {
      const double floor = 10.0 * eps * s.entries[k].amplification * s.scale;
      if (!(*s.entries[k].abs_err < *s.entries[k - 1].abs_err || *s.entries[k].abs_err <= floor))
      {
        return false;
      }
    }
    return true;
  };
  auto strictly = [](const SweepResult &s) {
    for (std::size_t k = 1; k < s.entries.size(); ++k)
    {
      if (!(*s.entries[k].abs_err < *s.entries[k - 1].abs_err))
      {
        return false;
      }
    }
    return true;
  };
  const Run one = Sweep(Load("null_one.json"));
  const Run t = Sweep(Load("null_t.json"));
  ExperimentConfig shifted = Load("null_t.json");
  shifted.target.t = 0.5;
  const Run ts = Sweep(shifted);
  for (const Run *r : {&one, &t, &ts})
  {
    v.Require(r->sweep.selection && std::abs(r->sweep.selection->estimate - *r->sweep.truth) <= 1e-3,
              "selected estimate within 1e-3");
  }
  v.detail << "u=1 errors " << Curve(one.sweep) << " (strictly decreasing: " << strictly(one.sweep)
           << "); u=t, t*=0 errors " << Curve(t.sweep)
           << " (all at the eps*amplification*max|u| roundoff level: " << decreasing(t.sweep)
           << "); u=t, t*=0.5 errors " << Curve(ts.sweep) << " (strictly decreasing: "
           << strictly(ts.sweep) << ")";
  v.Require(strictly(one.sweep), "u=1 error decreases");
  v.Require(decreasing(t.sweep), "u=t error decreases down to roundoff");
  v.Require(strictly(ts.sweep), "u=t (t*=0.5) error decreases");
  return v;
}

Verdict PlaneWaveBenchmark()
{
  Verdict v;
  for (const char *name : {"benchmark_theta0.json", "benchmark_theta20.json"})
  {
    const Run r = Sweep(Load(name));
    const double rel = SelectedRelErr(r);
    ExperimentConfig fine = r.config;
    fine.counts.nodes_x *= 2;
    fine.counts.nodes_t *= 2;
    fine.kernel.s_nodes *= 2;
    fine.kernel.xi_nodes *= 2;
    const ApertureChart chart = fine.BuildChart();
    const CauchyDataSet data = SampleCauchyData(*fine.field, chart);
    const double h_star = r.sweep.selection->h_star;
    double change = 0.0;
    for (double h : {h_star, 0.2})
    {
      const double coarse = ReconstructAt(r.data, r.chart, h, r.config.kernel).estimate;
      const double doubled = ReconstructAt(data, chart, h, fine.kernel).estimate;
      change = std::max(change, std::abs(doubled - coarse) / r.data.MaxAbsU());
    }
    v.detail << name << ": h*=" << h_star << " R=" << r.sweep.selection->estimate
             << " rel err " << rel << ", node doubling changes R at h* and 0.2 by <= " << change
             << " max|u|; ";
    v.Require(rel <= 0.05, std::string(name) + " relative error 5%");
    v.Require(change < 1e-4, std::string(name) + " node doubling 1e-4");
  }
  return v;
}

Verdict CurvedBoundary()
{
  Verdict v;
  const Run r = Sweep(Load("bump_theta20.json"));
  const double rel = SelectedRelErr(r);
  v.detail << "gaussian_bump A=0.3 w=1, theta=20 deg: h*=" << r.sweep.selection->h_star
           << " R=" << r.sweep.selection->estimate << " rel err " << rel;
  v.Require(rel <= 0.10, "relative error 10%");
  return v;
}

Verdict Scatterer()
{
  Verdict v;
  const ExperimentConfig c = Load("scatterer_3d.json");
  const Run r = Sweep(c);
  const double rel = SelectedRelErr(r);
  v.detail << "n=3 point source in omega (radius 0.3), truth " << *r.sweep.truth << ": h*="
           << r.sweep.selection->h_star << " R=" << r.sweep.selection->estimate << " rel err "
           << rel;
  v.Require(rel <= 0.10, "relative error 10%");
  return v;
}

struct NoiseOutcome
{
  bool u_shaped = false;
  bool above_clean = false;
  std::size_t argmin = 0;
  double min_noisy = 0.0;
};

NoiseOutcome NoiseStudy(const ExperimentConfig &c, const Run &clean)
{
  const Run noisy = Sweep(c);
  NoiseOutcome o;
  o.min_noisy = INFINITY;
  for (std::size_t k = 0; k < noisy.sweep.entries.size(); ++k)
  {
    if (*noisy.sweep.entries[k].abs_err < o.min_noisy)
    {
      o.min_noisy = *noisy.sweep.entries[k].abs_err;
      o.argmin = k;
    }
  }
  double min_clean = INFINITY;
  for (const SweepEntry &e : clean.sweep.entries)
  {
    min_clean = std::min(min_clean, *e.abs_err);
  }
  const std::size_t count = static_cast<std::size_t>(c.sweep.count);
  o.u_shaped = noisy.sweep.entries.size() == count && o.argmin > 0 && o.argmin + 1 < count;
  o.above_clean = o.min_noisy > min_clean;
  return o;
}

Verdict Noise()
{
  Verdict v;
  const ExperimentConfig c = Load("noise_theta0.json");
  ExperimentConfig quiet = c;
  quiet.noise.level = 0.0;
  const Run clean = Sweep(quiet);
  const Run noisy = Sweep(c);
  const NoiseOutcome o = NoiseStudy(c, clean);
  int both = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
  {
    ExperimentConfig other = c;
    other.noise.seed = seed;
    const NoiseOutcome s = NoiseStudy(other, clean);
    both += s.u_shaped && s.above_clean ? 1 : 0;
  }
  v.detail << "1% noise, 8-point sweep h=" << c.sweep.h_max << "*" << c.sweep.ratio
           << "^k: noisy errors " << Curve(noisy.sweep) << ", minimum at index " << o.argmin
           << " = " << o.min_noisy << "; noiseless errors " << Curve(clean.sweep)
           << "; seeds 1..20 satisfying both conditions: " << both << "/20";
  v.Require(clean.sweep.entries.size() == 8, "noiseless sweep has 8 points");
  v.Require(o.u_shaped, "U-shaped (interior minimum of an 8-point sweep)");
  v.Require(o.above_clean, "noisy minimum exceeds noiseless minimum");
  v.Require(both == 20, "conditions hold for seeds 1..20");
  return v;
}

int Shell(const std::string &cmd)
{
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict Reproducibility()
{
  Verdict v;
  ScratchDir dir("acceptance_repro");
  // reduced n = 3 case exercising the spectral kernel and the polar chart
  const std::string small3 = (dir / "scatterer_small.json").string();
  {
    nlohmann::json doc = Load("scatterer_3d.json").source;
    doc["aperture"] = {{"margin", 0.5}, {"nodes_x", 12}, {"nodes_t", 16}, {"nodes_angular", 12}};
    doc["sweep"] = {{"h_max", 0.4}, {"ratio", 0.85}, {"count", 3}};
    std::ofstream(small3) << doc.dump(2);
  }
  const std::vector<std::string> configs = {
      std::string(WAVECAUCHY_CONFIG_DIR) + "/benchmark_theta20.json",
      std::string(WAVECAUCHY_CONFIG_DIR) + "/noise_theta0.json", small3};
  int compared = 0;
  for (std::size_t k = 0; k < configs.size(); ++k)
  {
    const std::vector<std::pair<std::string, int>> runs = {{"a", 1}, {"b", 1}, {"c", 4}};
    for (const auto &[tag, threads] : runs)
    {
      const fs::path out = dir / ("run" + std::to_string(k) + tag);
      const int code = Shell(std::string(WAVECAUCHY_CLI_PATH) + " sweep --quiet --threads " +
                             std::to_string(threads) + " --config " + configs[k] + " --out " +
                             out.string());
      v.Require(code == 0, "cli sweep exit 0 for " + configs[k]);
    }
    for (const char *file : {"dataset.csv", "sweep.csv"})
    {
      const std::string a = Slurp(dir / ("run" + std::to_string(k) + "a") / file);
      const std::string b = Slurp(dir / ("run" + std::to_string(k) + "b") / file);
      const std::string c = Slurp(dir / ("run" + std::to_string(k) + "c") / file);
      v.Require(!a.empty() && a == b, std::string(file) + " identical across two runs");
      v.Require(a == c, std::string(file) + " identical across 1 and 4 threads");
      ++compared;
    }
  }
  v.detail << compared << " CSV files (n=2 benchmark, n=2 noisy, n=3 scatterer) compared byte "
           << "for byte across two runs and across --threads 1/4";
  return v;
}

}  // namespace

int main()
{
  struct Criterion
  {
    int id;
    const char *name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "kernel correctness", 10.0, KernelCorrectness},
      {2, "wave and characteristic identities", 30.0, WaveIdentities},
      {3, "localization", 10.0, Localization},
      {4, "null reconstructions", 60.0, NullReconstructions},
      {5, "plane-wave benchmark", 300.0, PlaneWaveBenchmark},
      {6, "curved boundary", 300.0, CurvedBoundary},
      {7, "scatterer scenario", 900.0, Scatterer},
      {8, "noise study", 300.0, Noise},
      {9, "reproducibility", INFINITY, Reproducibility},
  };
  int failed = 0;
  for (const Criterion &c : criteria)
  {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try
    {
      v = c.run();
    }
    catch (const std::exception &e)
    {
      v.pass = false;
      v.detail << " [threw: " << e.what() << "]";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_s)
    {
      v.Require(false, "runtime budget " + std::to_string(c.budget_s) + " s");
    }
    failed += v.pass ? 0 : 1;
    std::printf("[%s] criterion %d (%s): %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.str().c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
