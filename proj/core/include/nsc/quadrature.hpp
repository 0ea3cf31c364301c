#ifndef NSC_QUADRATURE_HPP
#define NSC_QUADRATURE_HPP

#include <functional>

namespace nsc {

// Deterministic adaptive integration on finite, semi-infinite and doubly
// infinite ranges, built on an embedded 7/15 Gauss-Kronrod panel rule.
struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  // How infinite limits are handled.
  //   analytic_transform: substitute x = a + t/(1-t) and integrate t on [0,1).
  //   table58: truncate at the banded tail limit for `tail_kappa`; falls back
  //            to analytic_transform when tail_kappa is outside the table.
  enum class TailPolicy { analytic_transform, table58 } tail_policy = TailPolicy::analytic_transform;
  double tail_kappa = 0.0;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int subdivisions = 0;
};

// Integrate f over (a, b). Either limit may be infinite. Same inputs always
// produce bitwise-identical output. When the subdivision budget runs out the
// best estimate is returned with converged = false.
IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg = {});

// Banded truncation limit used for the numerically delicate Shannon-entropy
// integrals of the heavy-tailed families: 100 / 1000 / 10000 / 15000 as the
// coupling grows. Throws std::domain_error outside (0, 2].
double tail_limit_for(double kappa);

}  // namespace nsc

#endif
