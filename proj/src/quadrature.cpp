// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "wavecauchy/errors.hpp"

namespace wavecauchy::quadrature
{

namespace
{

// Legendre P_n(z) and its derivative via the three-term recurrence.
void Legendre(std::size_t n, double z, double &p, double &dp)
{
  double p0 = 1.0, p1 = z;
  if (n == 0)
  {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (std::size_t k = 2; k <= n; ++k)
  {
    const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = pk;
  }
  p = p1;
  dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
}

}  // namespace

Rule GaussLegendre(std::size_t n, double a, double b)
{
  if (n == 0)
  {
    throw ConfigurationError("Gauss-Legendre rule needs at least one node");
  }
  Rule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i)
  {
    // Tricomi initial guess, then Newton.
    const double theta = std::numbers::pi * (i + 0.75) / (n + 0.5);
    double z = std::cos(theta) * (1.0 - (n - 1.0) / (8.0 * n * n * n));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it)
    {
      Legendre(n, z, p, dp);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) <= 1e-16 * std::abs(z) + 1e-300)
      {
        break;
      }
    }
    Legendre(n, z, p, dp);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    // z is the i-th largest root; store symmetric pair in increasing order.
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.nodes[i] = mid - half * z;
    rule.weights[n - 1 - i] = half * w;
    rule.weights[i] = half * w;
  }
  if (n % 2 == 1)
  {
    rule.nodes[n / 2] = mid;
  }
  return rule;
}

Rule CompositeGaussLegendre(std::size_t panels, std::size_t order, double a, double b)
{
  if (panels == 0)
  {
    throw ConfigurationError("composite rule needs at least one panel");
  }
  const Rule base = GaussLegendre(order);
  Rule rule;
  rule.nodes.reserve(panels * order);
  rule.weights.reserve(panels * order);
  const double len = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p)
  {
    const double lo = a + len * static_cast<double>(p);
    for (std::size_t k = 0; k < order; ++k)
    {
      rule.nodes.push_back(lo + 0.5 * len * (base.nodes[k] + 1.0));
      rule.weights.push_back(0.5 * len * base.weights[k]);
    }
  }
  return rule;
}

Rule PeriodicTrapezoid(std::size_t n)
{
  if (n == 0)
  {
    throw ConfigurationError("trapezoid rule needs at least one node");
  }
  Rule rule;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    rule.nodes.push_back(step * static_cast<double>(k));
    rule.weights.push_back(step);
  }
  return rule;
}

}  // namespace wavecauchy::quadrature
