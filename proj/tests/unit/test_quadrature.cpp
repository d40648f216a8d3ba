// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <numeric>

#include <doctest.h>

#include "wavecauchy/quadrature.hpp"

using namespace wavecauchy;

namespace
{

double Apply(const quadrature::Rule &r, auto f)
{
  double s = 0.0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k)
  {
    s += r.weights[k] * f(r.nodes[k]);
  }
  return s;
}

}  // namespace

TEST_CASE("Gauss-Legendre is exact to degree 2n-1")
{
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u})
  {
    const quadrature::Rule r = quadrature::GaussLegendre(n, 0.0, 2.0);
    for (std::size_t p = 0; p < 2 * n; ++p)
    {
      const double exact = std::pow(2.0, static_cast<double>(p + 1)) / static_cast<double>(p + 1);
      CHECK(Apply(r, [&](double x) { return std::pow(x, static_cast<double>(p)); }) ==
            doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("Gauss-Legendre nodes are increasing and symmetric")
{
  const quadrature::Rule r = quadrature::GaussLegendre(33);
  for (std::size_t k = 0; k + 1 < r.nodes.size(); ++k)
  {
    CHECK(r.nodes[k] < r.nodes[k + 1]);
    CHECK(std::abs(r.nodes[k] + r.nodes[r.nodes.size() - 1 - k]) < 1e-15);
  }
  CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("composite rule integrates a Gaussian")
{
  const quadrature::Rule r = quadrature::CompositeGaussLegendre(8, 16, -10.0, 10.0);
  CHECK(r.nodes.size() == 128);
  CHECK(Apply(r, [](double x) { return std::exp(-x * x); }) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("periodic trapezoid is exact for low trigonometric polynomials")
{
  const quadrature::Rule r = quadrature::PeriodicTrapezoid(16);
  CHECK(Apply(r, [](double) { return 1.0; }) == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(std::abs(Apply(r, [](double th) { return std::cos(3 * th); })) < 1e-14);
  CHECK(Apply(r, [](double th) { return std::cos(th) * std::cos(th); }) ==
        doctest::Approx(std::numbers::pi));
}
