// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include <doctest.h>

#include "wavecauchy/errors.hpp"
#include "wavecauchy/forward.hpp"
#include "wavecauchy/parallel.hpp"
#include "wavecauchy/reconstruct.hpp"

using namespace wavecauchy;

namespace
{

const ReconstructionTarget kOrigin{{0.0, 0.0}, 0.0, 0.0};

ApertureChart FlatChart(int n = 2, int nodes = 64, double margin = 0.5,
                        const ReconstructionTarget &target = kOrigin)
{
  return BuildAperture(FlatProfile(n, 1.0), target, margin, {nodes, 64, 32});
}

WaveFieldModel Plane20(double delay = 0.0)
{
  const double th = 20.0 * std::numbers::pi / 180.0;
  return PlaneWave(2, {std::sin(th), 0.0, std::cos(th)}, PulseSpec{0.5, 1.0, delay});
}

double Integral(const CauchyDataSet &d, const ApertureChart &c, double h)
{
  return IntegralTerm(d, MakeKernel(KernelParamsFor({}, h, c)), c);
}

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("boundary term")
{
  const ApertureChart c = FlatChart();
  CHECK(BoundaryTerm(SampleCauchyData(AffineField(2, 1.0, 0.0), c)) == 1.0);
  CHECK(BoundaryTerm(SampleCauchyData(AffineField(2, 0.0, 1.0), c)) == 0.0);
  const PulseSpec f{};
  const double th = 20.0 * std::numbers::pi / 180.0;
  const double dp = std::cos(th) * 1.0;  // d . (x*, Y(x*)) with x* = 0
  CHECK(BoundaryTerm(SampleCauchyData(Plane20(), c)) ==
        doctest::Approx(0.5 * (f.Value(-1.0 - dp) + f.Value(1.0 - dp))));
  CauchyDataSet missing = SampleCauchyData(Plane20(), c);
  missing.trace_plus.reset();
  CHECK_THROWS_AS(BoundaryTerm(missing), DataError);
}

TEST_CASE("integral term: null solutions and linearity")
{
  const ApertureChart c = FlatChart();
  const CauchyDataSet one = SampleCauchyData(AffineField(2, 1.0, 0.0), c);
  double previous = INFINITY;
  for (double h : {0.4, 0.2, 0.1})
  {
    const double i = std::abs(Integral(one, c, h));
    CHECK(i < previous);
    previous = i;
  }
  CHECK(previous < 1e-4);

  const CauchyDataSet t = SampleCauchyData(AffineField(2, 0.0, 1.0), c);
  for (double h : {0.4, 0.2, 0.1})
  {
    CHECK(std::abs(Integral(t, c, h)) < 1e-13);
  }

  const CauchyDataSet pw = SampleCauchyData(Plane20(), c);
  const CauchyDataSet neg = Combine(-1.0, pw, 0.0, pw);
  CHECK(Integral(neg, c, 0.2) == -Integral(pw, c, 0.2));
}

TEST_CASE("parallel integral is bitwise equal to the serial reference")
{
  for (int n : {2, 3})
  {
    const ApertureChart c = n == 2 ? FlatChart(2) : BuildAperture(FlatProfile(3, 1.0), kOrigin, 0.5, {8, 16, 8});
    const WaveFieldModel u = n == 2 ? Plane20() : PlaneWave(3, {0.48, 0.6, 0.64}, PulseSpec{});
    const CauchyDataSet d = AddNoise(SampleCauchyData(u, c), 0.01, 3);
    const KernelEvaluator k = MakeKernel(KernelParamsFor({}, 0.2, c));
    const double serial = IntegralTermSerial(d, k, c);
    for (int threads : {1, 2, 4, 7})
    {
      parallel::SetNumThreads(threads);
      CHECK(SameBits(IntegralTerm(d, k, c), serial));
    }
  }
  parallel::SetNumThreads(1);
}

TEST_CASE("overflow names the offending node")
{
  const ApertureChart c = FlatChart();
  const CauchyDataSet d = SampleCauchyData(Plane20(), c);
  try
  {
    (void)Integral(d, c, 1e-3);
    FAIL("expected a range error");
  }
  catch (const RangeError &e)
  {
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
}

TEST_CASE("reconstruct_at: plane wave and constant field")
{
  const ApertureChart c = FlatChart();
  const ReconstructionValue r = ReconstructAt(SampleCauchyData(Plane20(), c), c, 0.0672, {});
  CHECK(r.estimate == r.boundary + r.integral);
  CHECK(std::abs(r.estimate - 1.0) <= 0.05);
  const CauchyDataSet one = SampleCauchyData(AffineField(2, 1.0, 0.0), c);
  CHECK(std::abs(ReconstructAt(one, c, 0.1, {}).estimate - 1.0) <
        std::abs(ReconstructAt(one, c, 0.4, {}).estimate - 1.0));
}

TEST_CASE("time-shift equivariance")
{
  const double shift = 0.75;
  const ApertureChart c0 = FlatChart();
  const ApertureChart c1 = FlatChart(2, 64, 0.5, {{0.0, 0.0}, 0.0, shift});
  const CauchyDataSet d0 = SampleCauchyData(Plane20(), c0);
  const CauchyDataSet d1 = SampleCauchyData(Plane20(shift), c1);
  for (double h : {0.4, 0.2, 0.1})
  {
    CHECK(std::abs(ReconstructAt(d0, c0, h, {}).estimate - ReconstructAt(d1, c1, h, {}).estimate) <
          1e-12);
  }
}

TEST_CASE("insensitivity to the chart margin beyond the kernel tail")
{
  const ApertureChart a = FlatChart(2, 64, 0.5);
  const ApertureChart b = FlatChart(2, 80, 0.8);
  const double ra = ReconstructAt(SampleCauchyData(Plane20(), a), a, 0.0672, {}).estimate;
  const double rb = ReconstructAt(SampleCauchyData(Plane20(), b), b, 0.0672, {}).estimate;
  CHECK(std::abs(ra - rb) < 1e-6);
}

TEST_CASE("sweep options and schedule")
{
  SweepOptions o;
  o.h_max = 0.4;
  o.ratio = 0.5;
  o.count = 3;
  const std::vector<double> s = o.Schedule();
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 0.4);
  CHECK(s[1] == 0.2);
  CHECK(s[2] == doctest::Approx(0.1).epsilon(1e-15));
  SweepOptions bad = o;
  bad.ratio = 1.0;
  CHECK_THROWS(bad.Validate());
  bad = o;
  bad.count = 2;
  CHECK_THROWS(bad.Validate());
  bad = o;
  bad.h_max = 0.0;
  CHECK_THROWS(bad.Validate());
}

TEST_CASE("sweep: guards and overflow truncate the schedule")
{
  const ApertureChart c = FlatChart();
  const CauchyDataSet d = SampleCauchyData(Plane20(), c);

  const SweepResult guarded = HSweep(d, c, SweepOptions{}, {}, 1.0);
  CHECK(guarded.schedule.size() == 8);
  CHECK(guarded.entries.size() == 6);
  CHECK(guarded.truncated);
  CHECK(guarded.truncation_reason.find("precision") != std::string::npos);
  CHECK(guarded.scale == doctest::Approx(1.0));
  REQUIRE(guarded.selection);
  CHECK(guarded.selection->h_star == doctest::Approx(0.4 * std::pow(0.7, 5)));
  CHECK(*guarded.entries.back().rel_err <= 0.05);

  SweepOptions raw;
  raw.ratio = 0.1;
  raw.count = 5;
  raw.precision_budget = INFINITY;
  raw.resolution_guard = false;
  const SweepResult overflow = HSweep(d, c, raw, {});
  CHECK(overflow.entries.size() == 3);
  CHECK(overflow.truncated);
  INFO(overflow.truncation_reason);
  CHECK(overflow.truncation_reason.find("overflow") != std::string::npos);
  CHECK_FALSE(overflow.entries[0].abs_err.has_value());

  SweepOptions coarse;
  coarse.precision_budget = 1e300;
  const ApertureChart sparse = FlatChart(2, 24);
  const SweepResult resolution = HSweep(SampleCauchyData(Plane20(), sparse), sparse, coarse, {});
  CHECK(resolution.truncation_reason.find("resolution") != std::string::npos);
}

TEST_CASE("amplification and resolution estimates")
{
  const ApertureChart c = FlatChart();
  for (double h : {0.4, 0.1})
  {
    CHECK(KernelAmplification(c, h) <= std::exp(1.0 / h));
    CHECK(KernelAmplification(c, h) >= std::exp(0.99 / h));
  }
  CHECK(RequiredChartNodes(c, 0.1) > RequiredChartNodes(c, 0.4));
  const KernelParams p = KernelParamsFor({}, 0.2, c);
  CHECK(p.h == 0.2);
  CHECK(p.y_max == c.MaxHeight());
  CHECK(p.x_max == c.radius);
}

TEST_CASE("select_limit")
{
  const std::vector<double> h{0.4, 0.2, 0.1, 0.05, 0.025};
  const LimitSelection a = SelectLimit(h, std::vector<double>{2.0, 1.10, 1.01, 1.00, 1.30});
  CHECK(a.estimate == 1.00);
  CHECK(a.index == 3);
  CHECK(a.h_star == 0.05);
  CHECK(a.differences.size() == 4);
  CHECK_FALSE(a.no_plateau);

  const LimitSelection b = SelectLimit(h, std::vector<double>{0.7, 0.7, 0.7, 0.7, 0.7});
  CHECK(b.estimate == 0.7);
  CHECK(b.index == 1);

  const LimitSelection c = SelectLimit(h, std::vector<double>{1.0, 1.1, 1.3, 1.7, 2.5});
  CHECK(c.no_plateau);
  CHECK(c.index == 1);

  CHECK_THROWS_AS(SelectLimit(std::vector<double>{0.4, 0.2}, std::vector<double>{1.0, 1.0}),
                  NumericalError);
}
