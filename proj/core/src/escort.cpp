#include "nsc/escort.hpp"

#include <cmath>
#include <stdexcept>

#include "family_integrals.hpp"
#include "nsc/errors.hpp"

namespace nsc {

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs, bool renormalize) {
  probs_.reserve(probs.size());
  for (double p : probs) {
    if (!std::isfinite(p)) throw std::invalid_argument("DiscreteDistribution: probabilities must be finite");
    if (p < 0.0) throw std::invalid_argument("DiscreteDistribution: probabilities must be nonnegative");
    if (p == 0.0) continue;  // a zero-probability state changes nothing downstream
    if (!renormalize && p > 1.0) {
      throw std::invalid_argument("DiscreteDistribution: probability exceeds 1");
    }
    probs_.push_back(p);
  }
  if (probs_.empty()) {
    throw std::invalid_argument("DiscreteDistribution: needs at least one positive state");
  }
  double sum = 0.0;
  for (double p : probs_) sum += p;
  if (renormalize) {
    for (double& p : probs_) p /= sum;
  } else if (std::abs(sum - 1.0) > 1e-9) {
    throw normalization_error("DiscreteDistribution: probabilities sum to " + std::to_string(sum) +
                              "; pass renormalize to accept");
  }
}

DiscreteDistribution coupled_probability(const DiscreteDistribution& p, const Coupling& c) {
  const double exponent = 1.0 + c.moment();
  std::vector<double> powered;
  powered.reserve(p.size());
  for (double pi : p.probs()) powered.push_back(std::pow(pi, exponent));
  return DiscreteDistribution(std::move(powered), /*renormalize=*/true);
}

double coupled_density_transform(const CoupledDensityParams& params, const Coupling& metric,
                                 double x, const QuadratureConfig& cfg) {
  const double m = metric.moment();
  if (coupling_is_zero(m)) return density(params, x);
  const double f = density(params, x);
  if (f == 0.0) return 0.0;
  detail::require_escort_convergent(params, 1.0 + m);
  const double norm = detail::family_power_integral(params, 1.0 + m, cfg);
  return std::pow(f, 1.0 + m) / norm;
}

double coupled_moment_discrete(std::span<const double> xs, const DiscreteDistribution& p, int n,
                               double kappa) {
  if (xs.size() != p.size()) {
    throw std::invalid_argument("coupled_moment_discrete: values and probabilities differ in length");
  }
  if (n < 1) throw std::invalid_argument("coupled_moment_discrete: moment order must be positive");
  if (!(kappa > -1.0)) throw invalid_coupling("coupled_moment_discrete: kappa must exceed -1");

  const double exponent = 1.0 + static_cast<double>(n) * kappa / (1.0 + kappa);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double w = std::pow(p.probs()[i], exponent);
    num += std::pow(xs[i], n) * w;
    den += w;
  }
  return num / den;
}

double coupled_moment_continuous(const CoupledDensityParams& params, int n,
                                 const QuadratureConfig& cfg) {
  const bool supported = (params.alpha == 1 && n == 1) || (params.alpha == 2 && n == 2);
  if (!supported) {
    throw unsupported_parameters(
        "coupled_moment_continuous: implemented for (alpha=1, n=1) and (alpha=2, n=2)");
  }
  if (params.kappa < 0.0) {
    throw unsupported_parameters("coupled_moment_continuous: requires kappa >= 0");
  }
  const double exponent = 1.0 + static_cast<double>(n) * params.kappa / (1.0 + params.kappa);
  detail::require_escort_convergent(params, exponent, n);
  const double num = detail::family_power_moment_integral(params, n, exponent, cfg);
  const double den = detail::family_power_integral(params, exponent, cfg);
  if (n == 1) return params.mu + num / den;
  return params.mu * params.mu + num / den;
}

}  // namespace nsc
