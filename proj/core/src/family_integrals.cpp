#include "family_integrals.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "nsc/coupling.hpp"
#include "nsc/errors.hpp"

namespace nsc::detail {

namespace {

constexpr double kUnderflowFloor = 1e-300;

// Integrates over the support; the even alpha = 2 integrands are taken on
// [mu, inf) and doubled.
double symmetric_integral(const CoupledDensityParams& params,
                          const std::function<double(double)>& integrand,
                          const QuadratureConfig& cfg, const char* what) {
  IntegrationResult r;
  double factor = 1.0;
  if (params.alpha == 2) {
    r = integrate(integrand, params.mu, params.support_upper(), cfg);
    factor = 2.0;
  } else {
    r = integrate(integrand, params.support_lower(), params.support_upper(), cfg);
  }
  if (!r.converged) {
    throw quadrature_error(std::string(what) + ": tolerance not met");
  }
  return factor * r.value;
}

}  // namespace

void require_escort_convergent(const CoupledDensityParams& params, double a, int nmoment) {
  if (params.alpha == 1 && params.kappa < 0.0) {
    // Compact support; the density vanishes like (edge - x)^q at the upper edge.
    const double edge_order = -(1.0 / params.kappa + 1.0);
    if (!(a * edge_order > -1.0)) {
      throw divergent_escort("escort integral diverges at the compact-support edge");
    }
    return;
  }
  if (params.kappa > small_coupling_threshold) {
    const double tail_order = 1.0 / params.kappa + 1.0;
    if (!(a * tail_order - nmoment > 1.0)) {
      throw divergent_escort("escort integral diverges: tail exponent " +
                             std::to_string(a * tail_order - nmoment) + " does not exceed 1");
    }
    return;
  }
  if (!(a > 0.0)) {
    throw divergent_escort("escort integral diverges for a nonpositive power");
  }
}

double family_power_integral(const CoupledDensityParams& params, double a,
                             const QuadratureConfig& cfg) {
  const auto integrand = [&params, a](double x) {
    const double f = density(params, x);
    if (f <= kUnderflowFloor) return 0.0;
    return std::pow(f, a);
  };
  return symmetric_integral(params, integrand, cfg, "family_power_integral");
}

double family_power_log_integral(const CoupledDensityParams& params, double a,
                                 const QuadratureConfig& cfg) {
  const auto integrand = [&params, a](double x) {
    const double f = density(params, x);
    if (f <= kUnderflowFloor) return 0.0;
    return std::pow(f, a) * std::log(f);
  };
  return symmetric_integral(params, integrand, cfg, "family_power_log_integral");
}

double family_power_moment_integral(const CoupledDensityParams& params, int nmoment, double a,
                                    const QuadratureConfig& cfg) {
  if (params.alpha == 2 && nmoment % 2 == 1) return 0.0;  // odd moment of an even density
  const auto integrand = [&params, nmoment, a](double x) {
    const double f = density(params, x);
    if (f <= kUnderflowFloor) return 0.0;
    return std::pow(x - params.mu, nmoment) * std::pow(f, a);
  };
  return symmetric_integral(params, integrand, cfg, "family_power_moment_integral");
}

}  // namespace nsc::detail
