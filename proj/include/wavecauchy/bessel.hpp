// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_BESSEL_HPP
#define WAVECAUCHY_BESSEL_HPP

namespace wavecauchy::bessel
{

// Bessel functions of the first kind, orders 0 and 1, for real argument.
// Minimax rational approximations on (0, 4] and (4, 8]; Hankel amplitude/phase
// form beyond 8. Absolute error is a few ulp over the real line.
double J0(double x);
double J1(double x);

}  // namespace wavecauchy::bessel

#endif  // WAVECAUCHY_BESSEL_HPP
