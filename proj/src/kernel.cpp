// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavecauchy/bessel.hpp"
#include "wavecauchy/errors.hpp"

namespace wavecauchy
{

namespace
{

// exp() overflows just above 709.78; keep a margin for the prefactors.
constexpr double kMaxExponent = 700.0;
constexpr std::size_t kSpectralPanelOrder = 16;

void CheckExponent(double e, const char *where)
{
  if (e > kMaxExponent)
  {
    std::ostringstream os;
    os << where << ": exponent " << e << " exceeds the floating-point budget " << kMaxExponent
       << " (increase h)";
    throw RangeError(os.str(), e);
  }
}

double Sigma(double y, double t)
{
  const double at = std::abs(t);
  return std::sqrt((y - at) * (y + at));
}

void CheckCone(double y, double t)
{
  if (!(y >= std::abs(t)))
  {
    std::ostringstream os;
    os << "wave kernel requires y >= |t|, got y=" << y << " t=" << t;
    throw DomainError(os.str());
  }
}

}  // namespace

double KernelParams::SigmaMin() const
{
  return sigma_min ? *sigma_min : 1e-4 * std::sqrt(h);
}

void KernelParams::Validate() const
{
  if (!(h > 0.0) || !std::isfinite(h))
  {
    throw ConfigurationError("kernel width h must be positive and finite");
  }
  if (dim_n != 2 && dim_n != 3)
  {
    throw ConfigurationError("kernel dimension must be 2 or 3");
  }
  if (s_nodes < 8)
  {
    throw ConfigurationError("s_nodes must be >= 8");
  }
  if (xi_nodes < 32)
  {
    throw ConfigurationError("xi_nodes must be >= 32");
  }
  if (!(xi_cutoff_tol > 0.0 && xi_cutoff_tol < 1.0))
  {
    throw ConfigurationError("xi_cutoff_tol must lie in (0, 1)");
  }
  if (!(SigmaMin() > 0.0))
  {
    throw ConfigurationError("sigma_min must be positive");
  }
  if (!(y_max > 0.0) || !(x_max > 0.0))
  {
    throw ConfigurationError("spectral envelope y_max, x_max must be positive");
  }
}

KernelEvaluator::KernelEvaluator(KernelParams params) : params_(std::move(params))
{
  params_.Validate();
  const double h = params_.h;
  sigma_min_ = params_.SigmaMin();
  gauss_norm_ = std::pow(std::numbers::pi * h, -params_.M());
  s_rule_ = quadrature::GaussLegendre(static_cast<std::size_t>(params_.s_nodes), 0.0,
                                      0.5 * std::numbers::pi);
  sin_s_.reserve(s_rule_.size());
  for (double s : s_rule_.nodes)
  {
    sin_s_.push_back(std::sin(s));
  }

  if (params_.dim_n == 3)
  {
    // Truncate where the shifted Gaussian e^{-h (rho - 2 y_max / h)^2 / 4}
    // has dropped below xi_cutoff_tol of its peak.
    xi_cutoff_ = 2.0 * params_.y_max / h +
                 (2.0 / std::sqrt(h)) * std::sqrt(std::log(1.0 / params_.xi_cutoff_tol));
    const double per_period = 8.0 * xi_cutoff_ * params_.x_max / (2.0 * std::numbers::pi);
    const double per_width = 4.0 * xi_cutoff_ * std::sqrt(h);
    const double wanted =
        std::max({static_cast<double>(params_.xi_nodes), per_period, per_width});
    const auto panels = static_cast<std::size_t>(
        std::ceil(wanted / static_cast<double>(kSpectralPanelOrder)));
    const quadrature::Rule rho_rule =
        quadrature::CompositeGaussLegendre(panels, kSpectralPanelOrder, 0.0, xi_cutoff_);
    rho_ = rho_rule.nodes;
    rho_weight_.resize(rho_.size());
    for (std::size_t k = 0; k < rho_.size(); ++k)
    {
      rho_weight_[k] = rho_rule.weights[k] * rho_[k] / (2.0 * std::numbers::pi);
    }
  }
}

KernelEvaluator MakeKernel(const KernelParams &params) { return KernelEvaluator(params); }

KernelEvaluator::PhiAll KernelEvaluator::PhiClosedForm(double x1, double y) const
{
  // phi = (pi h)^{-1/2} Re exp(-(x - i y)^2 / h)
  const double h = params_.h;
  const double e = (y * y - x1 * x1) / h;
  CheckExponent(e, "phi");
  const double amp = gauss_norm_ * std::exp(e);
  const double arg = 2.0 * x1 * y / h;
  const double c = std::cos(arg);
  const double s = std::sin(arg);
  PhiAll out;
  out.value = amp * c;
  out.d_r = amp * (-2.0 * x1 / h * c - 2.0 * y / h * s);
  out.d_y = amp * (2.0 * y / h * c - 2.0 * x1 / h * s);
  return out;
}

void KernelEvaluator::CheckEnvelope(double r, double y) const
{
  constexpr double slack = 1.0 + 1e-12;
  if (std::abs(y) > params_.y_max * slack || r > params_.x_max * slack)
  {
    std::ostringstream os;
    os << "point (|x|=" << r << ", y=" << y << ") outside the spectral table envelope (x_max="
       << params_.x_max << ", y_max=" << params_.y_max << ")";
    throw DomainError(os.str());
  }
}

void KernelEvaluator::BesselTable(double r, std::vector<double> &j0,
                                  std::vector<double> &j1) const
{
  j0.resize(rho_.size());
  j1.resize(rho_.size());
  for (std::size_t k = 0; k < rho_.size(); ++k)
  {
    const double z = rho_[k] * r;
    j0[k] = bessel::J0(z);
    j1[k] = bessel::J1(z);
  }
}

KernelEvaluator::PhiAll KernelEvaluator::PhiSpectral(double y,
                                                     const std::vector<double> &j0,
                                                     const std::vector<double> &j1) const
{
  // phi = (1/2pi) int e^{-h rho^2/4} cosh(y rho) J0(rho r) rho drho with
  // cosh(y rho) e^{-h rho^2/4} = e^{y^2/h} (e^{-h(rho - 2y/h)^2/4} + e^{-h(rho + 2y/h)^2/4}) / 2.
  const double h = params_.h;
  const double ay = std::abs(y);
  const double e = ay * ay / h;
  CheckExponent(e, "phi");
  const double shift = 2.0 * ay / h;
  double sum_c = 0.0, sum_r = 0.0, sum_s = 0.0;
  for (std::size_t k = 0; k < rho_.size(); ++k)
  {
    const double rho = rho_[k];
    const double a = rho - shift;
    const double b = rho + shift;
    const double ep = std::exp(-0.25 * h * a * a);
    const double em = std::exp(-0.25 * h * b * b);
    const double wc = rho_weight_[k] * 0.5 * (ep + em);
    const double ws = rho_weight_[k] * 0.5 * (ep - em);
    sum_c += wc * j0[k];
    sum_r -= wc * rho * j1[k];
    sum_s += ws * rho * j0[k];
  }
  const double scale = std::exp(e);
  PhiAll out;
  out.value = scale * sum_c;
  out.d_r = scale * sum_r;
  out.d_y = (y < 0.0 ? -scale : scale) * sum_s;
  return out;
}

KernelEvaluator::PhiAll KernelEvaluator::PhiAt(const XVec &x, double y) const
{
  if (params_.dim_n == 2)
  {
    return PhiClosedForm(x[0], y);
  }
  const double r = Norm(x);
  CheckEnvelope(r, y);
  std::vector<double> j0, j1;
  BesselTable(r, j0, j1);
  return PhiSpectral(y, j0, j1);
}

XVec KernelEvaluator::RadialToGrad(const XVec &x, double d_r) const
{
  if (params_.dim_n == 2)
  {
    return {d_r, 0.0};
  }
  const double r = Norm(x);
  if (r == 0.0)
  {
    return {0.0, 0.0};
  }
  return {d_r * x[0] / r, d_r * x[1] / r};
}

double KernelEvaluator::Phi(const XVec &x, double y) const { return PhiAt(x, y).value; }

PhiGradient KernelEvaluator::PhiGrad(const XVec &x, double y) const
{
  const PhiAll p = PhiAt(x, y);
  return {RadialToGrad(x, p.d_r), p.d_y};
}

double KernelEvaluator::PhiYYAtZero(const XVec &x) const
{
  const double h = params_.h;
  const double x2 = Dot(x, x);
  const double n1 = params_.dim_n - 1;
  return gauss_norm_ * std::exp(-x2 / h) * (2.0 * n1 / h - 4.0 * x2 / (h * h));
}

WaveKernelSample KernelEvaluator::Sample(const XVec &x, double y, double t) const
{
  CheckCone(y, t);
  const double sigma = Sigma(y, t);
  const std::size_t ns = s_rule_.size();

  std::vector<double> j0, j1;
  double r = 0.0;
  if (params_.dim_n == 3)
  {
    r = Norm(x);
    CheckEnvelope(r, sigma);
    BesselTable(r, j0, j1);
  }
  auto phi_at = [&](double yy) {
    return params_.dim_n == 2 ? PhiClosedForm(x[0], yy) : PhiSpectral(yy, j0, j1);
  };

  WaveKernelSample out;
  if (sigma == 0.0)
  {
    // Characteristic y = |t|: w = phi(x, 0) / 2.
    const PhiAll p0 = phi_at(0.0);
    out.w = 0.5 * p0.value;
    out.grad_x = RadialToGrad(x, 0.5 * p0.d_r);
  }
  else
  {
    double sum_w = 0.0, sum_r = 0.0, sum_y = 0.0;
    for (std::size_t j = 0; j < ns; ++j)
    {
      const PhiAll p = phi_at(sigma * sin_s_[j]);
      const double wj = s_rule_.weights[j];
      sum_w += wj * p.value;
      sum_r += wj * p.d_r;
      sum_y += wj * p.d_y * sin_s_[j];
    }
    out.w = sum_w / std::numbers::pi;
    out.grad_x = RadialToGrad(x, sum_r / std::numbers::pi);
    if (sigma >= sigma_min_)
    {
      const double factor = sum_y / (std::numbers::pi * sigma);
      out.d_y = y * factor;
      out.d_t = -t * factor;
      return out;
    }
  }
  // Taylor branch: (d_y phi)(x, tau) ~ tau * phi_yy(x, 0) and int sin^2 = pi/4.
  const double quarter = 0.25 * PhiYYAtZero(x);
  out.d_y = y * quarter;
  out.d_t = -t * quarter;
  return out;
}

double KernelEvaluator::W(const XVec &x, double y, double t) const
{
  CheckCone(y, t);
  const double sigma = Sigma(y, t);
  if (sigma == 0.0)
  {
    return 0.5 * Phi(x, 0.0);
  }
  if (params_.dim_n == 2)
  {
    double sum = 0.0;
    for (std::size_t j = 0; j < s_rule_.size(); ++j)
    {
      sum += s_rule_.weights[j] * PhiClosedForm(x[0], sigma * sin_s_[j]).value;
    }
    return sum / std::numbers::pi;
  }
  return Sample(x, y, t).w;
}

WSpatialGradient KernelEvaluator::WSpatialGrad(const XVec &x, double y, double t) const
{
  const WaveKernelSample s = Sample(x, y, t);
  return {s.grad_x, s.d_y};
}

double KernelEvaluator::WTimeDeriv(const XVec &x, double y, double t) const
{
  return Sample(x, y, t).d_t;
}

}  // namespace wavecauchy
