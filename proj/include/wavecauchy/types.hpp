// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_TYPES_HPP
#define WAVECAUCHY_TYPES_HPP

#include <array>
#include <cmath>

namespace wavecauchy
{

// Horizontal coordinate x in R^{n-1} for n in {2, 3}. For n = 2 only the first
// component is used and the second must stay zero.
using XVec = std::array<double, 2>;

// Point (x, y) in R^n stored as (x_1, x_2, y); x_2 = 0 when n = 2.
struct SpacePoint
{
  XVec x{};
  double y = 0.0;
};

inline double Norm(const XVec &v) { return std::hypot(v[0], v[1]); }
inline double Dot(const XVec &a, const XVec &b) { return a[0] * b[0] + a[1] * b[1]; }
inline XVec operator-(const XVec &a, const XVec &b) { return {a[0] - b[0], a[1] - b[1]}; }
inline XVec operator+(const XVec &a, const XVec &b) { return {a[0] + b[0], a[1] + b[1]}; }
inline XVec operator*(double s, const XVec &a) { return {s * a[0], s * a[1]}; }

}  // namespace wavecauchy

#endif  // WAVECAUCHY_TYPES_HPP
