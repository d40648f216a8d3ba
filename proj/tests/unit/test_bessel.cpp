// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <initializer_list>

#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include "wavecauchy/bessel.hpp"

using namespace wavecauchy;

// Reference: extended-precision (long double) evaluation; libstdc++'s
// cyl_bessel_j is only good to ~5e-14 for large arguments.
TEST_CASE("J0 and J1 agree with an extended-precision reference on both regimes")
{
  double worst = 0.0;
  for (double x = 0.0; x <= 200.0; x += 0.0137)
  {
    const long double lx = x;
    worst = std::max(worst, static_cast<double>(std::abs(bessel::J0(x) - boost::math::cyl_bessel_j(0, lx))));
    worst = std::max(worst, static_cast<double>(std::abs(bessel::J1(x) - boost::math::cyl_bessel_j(1, lx))));
  }
  CHECK(worst < 2e-15);
  CHECK(std::abs(bessel::J0(12.5) - std::cyl_bessel_j(0.0, 12.5)) < 1e-13);
}

TEST_CASE("parity: J0 even, J1 odd")
{
  for (double x : {0.3, 2.5, 7.9, 8.1, 31.0})
  {
    CHECK(bessel::J0(-x) == bessel::J0(x));
    CHECK(bessel::J1(-x) == -bessel::J1(x));
  }
  CHECK(bessel::J0(0.0) == 1.0);
  CHECK(bessel::J1(0.0) == 0.0);
}

TEST_CASE("first zero of J0")
{
  CHECK(std::abs(bessel::J0(2.404825557695773)) < 1e-15);
}
