// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_KERNEL_HPP
#define WAVECAUCHY_KERNEL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wavecauchy/quadrature.hpp"
#include "wavecauchy/types.hpp"

namespace wavecauchy
{

// Settings of the regularized kernel. `h` is the squared width of the Gaussian
// trace; `dim_n` the ambient dimension n.
struct KernelParams
{
  double h = 1.0;
  int dim_n = 2;
  // Gauss-Legendre nodes for the transmutation integral over s in [0, pi/2].
  int s_nodes = 32;
  // Spectral (Hankel) quadrature controls, used for n = 3 only.
  int xi_nodes = 64;
  double xi_cutoff_tol = 1e-15;
  // Threshold on sigma = sqrt(y^2 - t^2) below which the y/t derivatives of
  // w switch to their Taylor limit. Defaults to 1e-4 * sqrt(h).
  std::optional<double> sigma_min;
  // Evaluation envelope |y| <= y_max, |x| <= x_max of the spectral table (n = 3).
  double y_max = 2.0;
  double x_max = 4.0;

  double M() const { return 0.5 * (dim_n - 1); }
  double SigmaMin() const;
  // Throws ConfigurationError listing the first violated invariant.
  void Validate() const;
};

struct PhiGradient
{
  XVec grad_x{};
  double d_y = 0.0;
};

using WSpatialGradient = PhiGradient;

// w together with all of its first derivatives at one point.
struct WaveKernelSample
{
  double w = 0.0;
  XVec grad_x{};
  double d_y = 0.0;
  double d_t = 0.0;
};

// Evaluator of the harmonic kernel phi (Gaussian trace, zero normal derivative
// on y = 0) and of its transmutation
//
//   w(x, y, t) = (1/pi) int_0^{pi/2} phi(x, sqrt(y^2 - t^2) sin s) ds,
//
// a solution of the wave equation on {y > |t|}, continuously extended to
// y = |t|. Immutable after construction; every member is a pure function of
// its arguments and safe to call concurrently.
class KernelEvaluator
{
public:
  explicit KernelEvaluator(KernelParams params);

  const KernelParams &Params() const { return params_; }
  double H() const { return params_.h; }
  int Dim() const { return params_.dim_n; }

  double Phi(const XVec &x, double y) const;
  PhiGradient PhiGrad(const XVec &x, double y) const;
  // d^2 phi / dy^2 at y = 0, i.e. minus the x-Laplacian of the Gaussian trace.
  double PhiYYAtZero(const XVec &x) const;

  // Requires y >= |t|; throws DomainError otherwise.
  double W(const XVec &x, double y, double t) const;
  WSpatialGradient WSpatialGrad(const XVec &x, double y, double t) const;
  double WTimeDeriv(const XVec &x, double y, double t) const;
  WaveKernelSample Sample(const XVec &x, double y, double t) const;

  // Spectral table diagnostics (n = 3); zero for n = 2.
  double SpectralCutoff() const { return xi_cutoff_; }
  std::size_t SpectralNodes() const { return rho_.size(); }

private:
  struct PhiAll
  {
    double value = 0.0;
    double d_r = 0.0;  // n = 3: radial derivative; n = 2: d/dx_1
    double d_y = 0.0;
  };

  PhiAll PhiClosedForm(double x1, double y) const;
  PhiAll PhiSpectral(double y, const std::vector<double> &j0,
                     const std::vector<double> &j1) const;
  void BesselTable(double r, std::vector<double> &j0, std::vector<double> &j1) const;
  void CheckEnvelope(double r, double y) const;
  PhiAll PhiAt(const XVec &x, double y) const;
  XVec RadialToGrad(const XVec &x, double d_r) const;

  KernelParams params_;
  double sigma_min_ = 0.0;
  double gauss_norm_ = 0.0;  // (pi h)^{-m}
  quadrature::Rule s_rule_;
  std::vector<double> sin_s_;
  // n = 3 spectral table: nodes rho_k and weights w_k * rho_k / (2 pi).
  std::vector<double> rho_;
  std::vector<double> rho_weight_;
  double xi_cutoff_ = 0.0;
};

// Validates `params` and freezes the quadrature tables.
KernelEvaluator MakeKernel(const KernelParams &params);

}  // namespace wavecauchy

#endif  // WAVECAUCHY_KERNEL_HPP
