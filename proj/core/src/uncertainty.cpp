#include "nsc/uncertainty.hpp"

#include <cmath>
#include <stdexcept>

#include "family_integrals.hpp"
#include "nsc/algebra.hpp"
#include "nsc/errors.hpp"

namespace nsc {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("WeightVector: needs at least one weight");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("WeightVector: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("WeightVector: weights must sum to one");
  }
}

double weighted_generalized_mean(std::span<const double> values, const WeightVector& w,
                                 double moment) {
  if (values.size() != w.size()) {
    throw std::invalid_argument("weighted_generalized_mean: length mismatch");
  }
  for (double v : values) {
    if (!(v > 0.0)) throw std::domain_error("weighted_generalized_mean: values must be positive");
  }
  const auto& weights = w.weights();
  if (coupling_is_zero(moment)) {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] * std::log(values[i]);
    return std::exp(acc);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] * std::pow(values[i], -moment);
  return std::pow(acc, -1.0 / moment);
}

double coupled_log_average(std::span<const double> values, const WeightVector& w,
                           const Coupling& c) {
  if (values.size() != w.size()) {
    throw std::invalid_argument("coupled_log_average: length mismatch");
  }
  const auto& weights = w.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc += weights[i] * coupled_log(std::pow(values[i], -c.alpha()), c.kappa());
  }
  return coupled_exp_general(acc, c, -1);
}

double coupled_average_uncertainty_discrete(const DiscreteDistribution& p, const Coupling& c) {
  const double m = c.moment();
  if (coupling_is_zero(m)) {
    double acc = 0.0;
    for (double pi : p.probs()) acc += pi * std::log(pi);
    return std::exp(acc);
  }
  double sum = 0.0;
  for (double pi : p.probs()) sum += std::pow(pi, 1.0 + m);
  return std::pow(sum, 1.0 / m);
}

double coupled_average_uncertainty_continuous(const CoupledDensityParams& params,
                                              const Coupling& metric,
                                              const QuadratureConfig& cfg) {
  const double m = metric.moment();
  if (coupling_is_zero(m)) {
    return std::exp(detail::family_power_log_integral(params, 1.0, cfg));
  }
  detail::require_escort_convergent(params, 1.0 + m);
  const double escort_integral = detail::family_power_integral(params, 1.0 + m, cfg);
  return std::pow(escort_integral, 1.0 / m);
}

std::vector<UncertaintySweepPoint> uncertainty_sweep(std::span<const double> dist_kappas,
                                                     std::span<const double> metric_kappas,
                                                     double sigma, const QuadratureConfig& cfg) {
  if (dist_kappas.empty() || metric_kappas.empty()) {
    throw std::invalid_argument("uncertainty_sweep: grids must be nonempty");
  }
  std::vector<UncertaintySweepPoint> rows;
  rows.reserve(dist_kappas.size() * metric_kappas.size());
  for (double metric_kappa : metric_kappas) {
    const double metric_moment = Coupling(metric_kappa, 2.0).moment();
    for (double dist_kappa : dist_kappas) {
      const CoupledDensityParams params(0.0, sigma, dist_kappa, 2);
      const double dist_moment = Coupling(dist_kappa, 2.0).moment();
      detail::require_escort_convergent(params, 1.0 + dist_moment);
      const double escort_norm = detail::family_power_integral(params, 1.0 + dist_moment, cfg);

      // Generalized mean of the density under its own escort weight, with
      // the moment supplied by the metric coupling.
      double value;
      if (coupling_is_zero(metric_moment)) {
        value = std::exp(detail::family_power_log_integral(params, 1.0 + dist_moment, cfg) /
                         escort_norm);
      } else {
        const double a = 1.0 + dist_moment - metric_moment;
        detail::require_escort_convergent(params, a);
        const double numerator = detail::family_power_integral(params, a, cfg);
        value = std::pow(numerator / escort_norm, -1.0 / metric_moment);
      }
      rows.push_back({metric_kappa, dist_kappa, value});
    }
  }
  return rows;
}

}  // namespace nsc
