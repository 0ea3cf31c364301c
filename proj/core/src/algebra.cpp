#include "nsc/algebra.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nsc {

namespace {

void require_coupling(double kappa) {
  if (!(kappa > -1.0)) throw invalid_coupling("coupling kappa must exceed -1");
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// (1 + kappa*x)_+ ^ exponent with the divergence policy: a nonpositive base
// raised to a negative exponent diverges, and returning 0 there would
// silently corrupt downstream integrals, so +infinity is reported instead.
double truncated_power(double kappa_x, double exponent) {
  if (1.0 + kappa_x <= 0.0) return exponent > 0.0 ? 0.0 : kInf;
  return std::exp(exponent * std::log1p(kappa_x));
}

}  // namespace

double coupled_add(double x, double y, double kappa) {
  require_coupling(kappa);
  return x + y + kappa * x * y;
}

double coupled_subtract(double x, double y, double kappa) {
  require_coupling(kappa);
  const double dilation = 1.0 + kappa * y;
  if (dilation == 0.0) throw singular_dilation("coupled_subtract: dilation factor 1 + kappa*y is zero");
  return (x - y) / dilation;
}

double coupled_exp(double x, double kappa) {
  require_coupling(kappa);
  if (coupling_is_zero(kappa)) return std::exp(x);
  return truncated_power(kappa * x, 1.0 / kappa + 1.0);
}

double coupled_exp_general(double x, const Coupling& c, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("coupled_exp_general: sign must be +1 or -1");
  const double kappa = c.kappa();
  if (coupling_is_zero(kappa)) return std::exp(sign * x / c.alpha());
  const double exponent = sign * (1.0 / kappa + 1.0) / c.alpha();
  return truncated_power(kappa * x, exponent);
}

double coupled_log(double x, double kappa) {
  require_coupling(kappa);
  if (!(x > 0.0)) throw std::domain_error("coupled_log: requires x > 0");
  if (coupling_is_zero(kappa)) return std::log(x);
  return std::expm1(kappa / (1.0 + kappa) * std::log(x)) / kappa;
}

double coupled_log_alpha(double x, const Coupling& c) {
  if (!(x > 0.0)) throw std::domain_error("coupled_log_alpha: requires x > 0");
  const double m = c.moment();
  if (coupling_is_zero(m)) return std::log(x);
  return std::expm1(m * std::log(x)) / (c.alpha() * c.kappa());
}

double coupled_product(std::span<const double> values, double kappa1) {
  for (double v : values) {
    if (!(v > 0.0)) throw std::domain_error("coupled_product: values must be positive");
  }
  if (coupling_is_zero(kappa1)) {
    double prod = 1.0;
    for (double v : values) prod *= v;
    return prod;
  }
  double acc = 1.0 - static_cast<double>(values.size());
  for (double v : values) acc += std::pow(v, kappa1);
  if (acc <= 0.0) return kappa1 > 0.0 ? 0.0 : kInf;
  return std::pow(acc, 1.0 / kappa1);
}

double coupled_power(double x, double a, double kappa1) {
  if (!(x > 0.0)) throw std::domain_error("coupled_power: requires x > 0");
  if (coupling_is_zero(kappa1)) return std::pow(x, a);
  const double acc = a * std::pow(x, kappa1) - (a - 1.0);
  if (acc <= 0.0) return kappa1 > 0.0 ? 0.0 : kInf;
  return std::pow(acc, 1.0 / kappa1);
}

double coupled_surprisal(double p, const Coupling& c) {
  if (!(p > 0.0)) throw std::domain_error("coupled_surprisal: requires p > 0");
  const double m = c.moment();
  if (coupling_is_zero(m)) return -std::log(p);
  return std::expm1(-m * std::log(p)) / (c.alpha() * c.kappa());
}

}  // namespace nsc
