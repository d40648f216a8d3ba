// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0
//
// Rational coefficients follow Boost.Math (bessel_j0.hpp / bessel_j1.hpp,
// Copyright 2006 Xiaogang Zhang, Boost Software License 1.0), which in turn
// use Hart, "Computer Approximations" (1968) for the large-argument regime.

#include "wavecauchy/bessel.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace wavecauchy::bessel
{

namespace
{

template <std::size_t N>
double Poly(const std::array<double, N> &c, double z)
{
  double s = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;)
  {
    s = s * z + c[i];
  }
  return s;
}

template <std::size_t N>
double Rational(const std::array<double, N> &p, const std::array<double, N> &q, double z)
{
  return Poly(p, z) / Poly(q, z);
}

}  // namespace

double J0(double x)
{
  static constexpr std::array<double, 7> P1 = {
      -4.1298668500990866786e+11, 2.7282507878605942706e+10, -6.2140700423540120665e+08,
      6.6302997904833794242e+06,  -3.6629814655107086448e+04, 1.0344222815443188943e+02,
      -1.2117036164593528341e-01};
  static constexpr std::array<double, 7> Q1 = {
      2.3883787996332290397e+12, 2.6328198300859648632e+10, 1.3985097372263433271e+08,
      4.5612696224219938200e+05, 9.3614022392337710626e+02, 1.0, 0.0};
  static constexpr std::array<double, 8> P2 = {
      -1.8319397969392084011e+03, -1.2254078161378989535e+04, -7.2879702464464618998e+03,
      1.0341910641583726701e+04,  1.1725046279757103576e+04,  4.4176707025325087628e+03,
      7.4321196680624245801e+02,  4.8591703355916499363e+01};
  static constexpr std::array<double, 8> Q2 = {
      -3.5783478026152301072e+05, 2.4599102262586308984e+05, -8.4055062591169562211e+04,
      1.8680990008359188352e+04,  -2.9458766545509337327e+03, 3.3307310774649071172e+02,
      -2.5258076240801555057e+01, 1.0};
  static constexpr std::array<double, 6> PC = {
      2.2779090197304684302e+04, 4.1345386639580765797e+04, 2.1170523380864944322e+04,
      3.4806486443249270347e+03, 1.5376201909008354296e+02, 8.8961548424210455236e-01};
  static constexpr std::array<double, 6> QC = {
      2.2779090197304684318e+04, 4.1370412495510416640e+04, 2.1215350561880115730e+04,
      3.5028735138235608207e+03, 1.5711159858080893649e+02, 1.0};
  static constexpr std::array<double, 6> PS = {
      -8.9226600200800094098e+01, -1.8591953644342993800e+02, -1.1183429920482737611e+02,
      -2.2300261666214198472e+01, -1.2441026745835638459e+00, -8.8033303048680751817e-03};
  static constexpr std::array<double, 6> QS = {
      5.7105024128512061905e+03, 1.1951131543434613647e+04, 7.2642780169211018836e+03,
      1.4887231232283756582e+03, 9.0593769594993125859e+01, 1.0};
  // Zeros j_{0,1}, j_{0,2} split into a coarse and fine part for accuracy near the roots.
  constexpr double x1 = 2.4048255576957727686e+00, x2 = 5.5200781102863106496e+00;
  constexpr double x11 = 6.160e+02, x12 = -1.42444230422723137837e-03;
  constexpr double x21 = 1.4130e+03, x22 = 5.46860286310649596604e-04;

  x = std::abs(x);
  if (x == 0.0)
  {
    return 1.0;
  }
  if (x <= 4.0)
  {
    const double r = Rational(P1, Q1, x * x);
    return (x + x1) * ((x - x11 / 256.0) - x12) * r;
  }
  if (x <= 8.0)
  {
    const double r = Rational(P2, Q2, 1.0 - x * x / 64.0);
    return (x + x2) * ((x - x21 / 256.0) - x22) * r;
  }
  const double y = 8.0 / x;
  const double y2 = y * y;
  const double z = x - 0.25 * std::numbers::pi;
  const double rc = Rational(PC, QC, y2);
  const double rs = Rational(PS, QS, y2);
  return std::sqrt(2.0 / (x * std::numbers::pi)) * (rc * std::cos(z) - y * rs * std::sin(z));
}

double J1(double x)
{
  static constexpr std::array<double, 7> P1 = {
      -1.4258509801366645672e+11, 6.6781041261492395835e+09, -1.1548696764841276794e+08,
      9.8062904098958257677e+05,  -4.4615792982775076130e+03, 1.0650724020080236441e+01,
      -1.0767857011487300348e-02};
  static constexpr std::array<double, 7> Q1 = {
      4.1868604460820175290e+12, 4.2091902282580133541e+10, 2.0228375140097033958e+08,
      5.9117614494174794095e+05, 1.0742272239517380498e+03, 1.0, 0.0};
  static constexpr std::array<double, 8> P2 = {
      -1.7527881995806511112e+16, 1.6608531731299018674e+15, -3.6658018905416665164e+13,
      3.5580665670910619166e+11,  -1.8113931269860667829e+09, 5.0793266148011179143e+06,
      -7.5023342220781607561e+03, 4.6179191852758252278e+00};
  static constexpr std::array<double, 8> Q2 = {
      1.7253905888447681194e+18, 1.7128800897135812012e+16, 8.4899346165481429307e+13,
      2.7622777286244082666e+11, 6.4872502899596389593e+08, 1.1267125065029138050e+06,
      1.3886978985861357615e+03, 1.0};
  static constexpr std::array<double, 7> PC = {
      -4.4357578167941278571e+06, -9.9422465050776411957e+06, -6.6033732483649391093e+06,
      -1.5235293511811373833e+06, -1.0982405543459346727e+05, -1.6116166443246101165e+03,
      0.0};
  static constexpr std::array<double, 7> QC = {
      -4.4357578167941278568e+06, -9.9341243899345856590e+06, -6.5853394797230870728e+06,
      -1.5118095066341608816e+06, -1.0726385991103820119e+05, -1.4550094401904961825e+03,
      1.0};
  static constexpr std::array<double, 7> PS = {
      3.3220913409857223519e+04, 8.5145160675335701966e+04, 6.6178836581270835179e+04,
      1.8494262873223866797e+04, 1.7063754290207680021e+03, 3.5265133846636032186e+01,
      0.0};
  static constexpr std::array<double, 7> QS = {
      7.0871281941028743574e+05, 1.8194580422439972989e+06, 1.4194606696037208929e+06,
      4.0029443582266975117e+05, 3.7890229745772202641e+04, 8.6383677696049909675e+02,
      1.0};
  constexpr double x1 = 3.8317059702075123156e+00, x2 = 7.0155866698156187535e+00;
  constexpr double x11 = 9.810e+02, x12 = -3.2527979248768438556e-04;
  constexpr double x21 = 1.7960e+03, x22 = -3.8330184381246462950e-05;

  const double w = std::abs(x);
  if (x == 0.0)
  {
    return 0.0;
  }
  double value;
  if (w <= 4.0)
  {
    const double r = Rational(P1, Q1, x * x);
    value = w * (w + x1) * ((w - x11 / 256.0) - x12) * r;
  }
  else if (w <= 8.0)
  {
    const double r = Rational(P2, Q2, x * x);
    value = w * (w + x2) * ((w - x21 / 256.0) - x22) * r;
  }
  else
  {
    const double y = 8.0 / w;
    const double y2 = y * y;
    const double z = w - 0.75 * std::numbers::pi;
    const double rc = Rational(PC, QC, y2);
    const double rs = Rational(PS, QS, y2);
    value = std::sqrt(2.0 / (w * std::numbers::pi)) * (rc * std::cos(z) - y * rs * std::sin(z));
  }
  return x < 0.0 ? -value : value;
}

}  // namespace wavecauchy::bessel
