#ifndef NSC_ALGEBRA_HPP
#define NSC_ALGEBRA_HPP

#include <span>

#include "nsc/coupling.hpp"

namespace nsc {

// Deformed arithmetic and the deformed exponential/logarithm pair.
//
// All functions are pure. Every kappa argument must exceed -1
// (invalid_coupling otherwise). Whenever the relevant deformation parameter
// is below small_coupling_threshold the classical limit is returned, so the
// kappa -> 0 behaviour is continuous.

// x (+) y = x + y + kappa*x*y. Zero is the identity element.
double coupled_add(double x, double y, double kappa);

// x (-) y = (x - y) / (1 + kappa*y); inverts coupled_add in its second
// argument. Throws singular_dilation when 1 + kappa*y == 0.
double coupled_subtract(double x, double y, double kappa);

// (1 + kappa*x)_+ ^ (1/kappa + 1).
// For kappa > 0 the truncation (.)_+ makes the result exactly 0 when
// 1 + kappa*x <= 0. For kappa < 0 the exponent is negative and the function
// diverges there, so +infinity is returned instead of a silent 0.
double coupled_exp(double x, double kappa);

// (1 + kappa*x)_+ ^ (sign * (1/alpha)(1/kappa + 1)) with sign in {+1,-1}.
// sign = -1 is the density kernel of the coupled distribution families.
// Follows the same truncation/divergence policy as coupled_exp, driven by
// the sign of the full exponent.
double coupled_exp_general(double x, const Coupling& c, int sign);

// (1/kappa) (x^{kappa/(1+kappa)} - 1), x > 0; exact inverse of coupled_exp
// on the domain where 1 + kappa*coupled_log(x) > 0.
double coupled_log(double x, double kappa);

// (1/(alpha*kappa)) (x^{alpha*kappa/(1+kappa)} - 1), x > 0.
double coupled_log_alpha(double x, const Coupling& c);

// Coupled product over positive values with multiplicative coupling kappa1:
// (sum_i x_i^{kappa1} - (N-1))_+ ^ (1/kappa1).
// kappa1 is passed directly so callers can use either +-kappa/(1+kappa) or
// the moment-signed variants.
double coupled_product(std::span<const double> values, double kappa1);

// Coupled power x^{(x) a} = (a x^{kappa1} - (a-1))_+ ^ (1/kappa1), x > 0.
double coupled_power(double x, double a, double kappa1);

// Generalized information content of a probability (densities may exceed 1):
// (1/(alpha*kappa)) (p^{-alpha*kappa/(1+kappa)} - 1); -ln p as kappa -> 0.
// An alternative definition takes the alpha-th root of the deformed log
// instead of dividing by alpha; it is not provided here.
double coupled_surprisal(double p, const Coupling& c);

}  // namespace nsc

#endif
