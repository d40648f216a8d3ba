// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_QUADRATURE_HPP
#define WAVECAUCHY_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace wavecauchy::quadrature
{

struct Rule
{
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

// n-point Gauss-Legendre rule on [a, b]. Nodes are returned in increasing
// order. Exact for polynomials of degree 2n - 1.
Rule GaussLegendre(std::size_t n, double a = -1.0, double b = 1.0);

// Composite rule: `panels` equal sub-intervals of [a, b], each with an
// `order`-point Gauss-Legendre rule.
Rule CompositeGaussLegendre(std::size_t panels, std::size_t order, double a, double b);

// Periodic trapezoid rule on [0, 2*pi): n equally spaced angles, weights 2*pi/n.
Rule PeriodicTrapezoid(std::size_t n);

}  // namespace wavecauchy::quadrature

#endif  // WAVECAUCHY_QUADRATURE_HPP
