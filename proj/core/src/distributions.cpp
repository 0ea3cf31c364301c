#include "nsc/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nsc/errors.hpp"
#include "rng.hpp"

namespace nsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.2831853071795864769;

}  // namespace

CoupledDensityParams::CoupledDensityParams(double mu_, double sigma_, double kappa_, int alpha_)
    : mu(mu_), sigma(sigma_), kappa(kappa_), alpha(alpha_) {
  if (!(sigma > 0.0)) throw std::invalid_argument("CoupledDensityParams: sigma must be positive");
  if (!(kappa > -1.0)) throw invalid_coupling("CoupledDensityParams: kappa must exceed -1");
  if (alpha != 1 && alpha != 2) {
    throw unsupported_parameters("CoupledDensityParams: alpha must be 1 or 2");
  }
  if (alpha == 2 && kappa < 0.0) {
    throw unsupported_parameters(
        "CoupledDensityParams: the alpha = 2 family requires kappa >= 0; the compact-support "
        "Gaussian normalization is not provided");
  }
}

double CoupledDensityParams::support_lower() const noexcept {
  return alpha == 1 ? mu : -kInf;
}

double CoupledDensityParams::support_upper() const noexcept {
  if (alpha == 1 && kappa < 0.0) return mu - sigma / kappa;
  return kInf;
}

double normalization(const CoupledDensityParams& params) {
  if (params.alpha == 1) return params.sigma;
  if (coupling_is_zero(params.kappa)) return std::sqrt(kTwoPi) * params.sigma;
  const double k = params.kappa;
  const double log_gamma_ratio = std::lgamma(1.0 / (2.0 * k)) - std::lgamma((1.0 + k) / (2.0 * k));
  return std::sqrt(M_PI / k) * params.sigma * std::exp(log_gamma_ratio);
}

double density(const CoupledDensityParams& params, double x) {
  const double z = (x - params.mu) / params.sigma;
  if (params.alpha == 1) {
    if (z < 0.0) return 0.0;
    if (coupling_is_zero(params.kappa)) return std::exp(-z) / params.sigma;
    const double base = params.kappa * z;
    if (1.0 + base <= 0.0) return 0.0;  // beyond the compact-support edge
    return std::exp(-(1.0 / params.kappa + 1.0) * std::log1p(base)) / params.sigma;
  }
  const double z2 = z * z;
  if (coupling_is_zero(params.kappa)) {
    return std::exp(-0.5 * z2) / (std::sqrt(kTwoPi) * params.sigma);
  }
  const double exponent = -0.5 * (1.0 / params.kappa + 1.0);
  return std::exp(exponent * std::log1p(params.kappa * z2)) / normalization(params);
}

double cdf_coupled_exponential(const CoupledDensityParams& params, double x) {
  if (params.alpha != 1) {
    throw unsupported_parameters("cdf_coupled_exponential: closed-form CDF exists for alpha = 1 only");
  }
  const double z = (x - params.mu) / params.sigma;
  if (z <= 0.0) return 0.0;
  if (coupling_is_zero(params.kappa)) return -std::expm1(-z);
  if (params.kappa < 0.0 && 1.0 + params.kappa * z <= 0.0) return 1.0;
  return -std::expm1(-std::log1p(params.kappa * z) / params.kappa);
}

double gamma_mixing_density(double kappa, double sigma, double beta) {
  if (!(kappa > 0.0) || !(sigma > 0.0)) {
    throw std::domain_error("gamma_mixing_density: kappa and sigma must be positive");
  }
  if (beta < 0.0) return 0.0;
  const double shape = 1.0 / kappa;
  const double scale = kappa / sigma;
  if (beta == 0.0) {
    if (shape > 1.0) return 0.0;
    if (shape == 1.0) return 1.0 / scale;
    return kInf;
  }
  const double log_density = (shape - 1.0) * std::log(beta) - beta / scale - std::lgamma(shape) -
                             shape * std::log(scale);
  return std::exp(log_density);
}

double superstatistics_mixture(double kappa, double sigma, double x, const QuadratureConfig& cfg) {
  if (!(kappa > 0.0) || !(sigma > 0.0)) {
    throw std::domain_error("superstatistics_mixture: kappa and sigma must be positive");
  }
  if (!(x >= 0.0)) throw std::domain_error("superstatistics_mixture: requires x >= 0");
  const auto integrand = [kappa, sigma, x](double beta) {
    if (beta <= 0.0) return 0.0;
    const double f = gamma_mixing_density(kappa, sigma, beta);
    if (f == 0.0) return 0.0;
    return f * beta * std::exp(-beta * x);
  };
  const IntegrationResult r = integrate(integrand, 0.0, kInf, cfg);
  if (!r.converged) {
    throw quadrature_error("superstatistics_mixture: tolerance not met");
  }
  return r.value;
}

std::vector<double> sample(const CoupledDensityParams& params, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
  detail::SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(n);

  if (params.alpha == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const double u = rng.uniform_open();
      double z;
      if (coupling_is_zero(params.kappa)) {
        z = -std::log1p(-u);
      } else {
        z = std::expm1(-params.kappa * std::log1p(-u)) / params.kappa;
      }
      out.push_back(params.mu + params.sigma * z);
    }
    return out;
  }

  if (coupling_is_zero(params.kappa)) {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(params.mu + params.sigma * detail::standard_normal(rng));
    }
    return out;
  }

  // Precision beta ~ Gamma(1/(2 kappa), 2 kappa / sigma^2); x | beta is
  // Gaussian with variance 1/beta. Marginally Student-t with 1/kappa
  // degrees of freedom and scale sigma.
  const double shape = 1.0 / (2.0 * params.kappa);
  const double scale = 2.0 * params.kappa / (params.sigma * params.sigma);
  for (std::size_t i = 0; i < n; ++i) {
    const double beta = detail::gamma_variate(rng, shape, scale);
    out.push_back(params.mu + detail::standard_normal(rng) / std::sqrt(beta));
  }
  return out;
}

}  // namespace nsc
