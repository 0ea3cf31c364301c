#ifndef NSC_SRC_FAMILY_INTEGRALS_HPP
#define NSC_SRC_FAMILY_INTEGRALS_HPP

#include "nsc/distributions.hpp"
#include "nsc/quadrature.hpp"

namespace nsc::detail {

// Throws divergent_escort unless integral of (x-mu)^n * f^a over the support
// converges: heavy tails need a*(1/kappa + 1) - n > 1, exponential/Gaussian
// tails need a > 0, and the compact-support edge needs a * edge_order > -1.
void require_escort_convergent(const CoupledDensityParams& params, double a, int nmoment = 0);

// integral of f^a over the support. The alpha = 2 families are even about mu
// and are integrated on [mu, inf) and doubled.
double family_power_integral(const CoupledDensityParams& params, double a,
                             const QuadratureConfig& cfg);

// integral of f^a * ln f, with the integrand defined as 0 wherever f
// underflows; same symmetric treatment.
double family_power_log_integral(const CoupledDensityParams& params, double a,
                                 const QuadratureConfig& cfg);

// integral of (x-mu)^n * f^a.
double family_power_moment_integral(const CoupledDensityParams& params, int nmoment, double a,
                                    const QuadratureConfig& cfg);

}  // namespace nsc::detail

#endif
