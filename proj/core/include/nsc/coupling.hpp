#ifndef NSC_COUPLING_HPP
#define NSC_COUPLING_HPP

#include "nsc/errors.hpp"

namespace nsc {

// Below this magnitude deformation parameters (kappa, kappa/(1+kappa),
// alpha*kappa/(1+kappa)) are treated as zero and the classical limit is
// evaluated instead; the deformed expressions degenerate to 0/0 there.
inline constexpr double small_coupling_threshold = 1e-10;

inline bool coupling_is_zero(double value) {
  return value < small_coupling_threshold && value > -small_coupling_threshold;
}

// Nonlinear coupling strength kappa together with the stability index alpha.
// kappa > 0 gives heavy tails, kappa in (-1,0) compact support, kappa = 0 the
// classical exponential regime. alpha is a positive real; the distribution
// families restrict it to {1,2}. The multiplicative coupling generalizes to
// kappa/(1 + d*kappa) in d dimensions; everything here is the one-dimensional
// case.
class Coupling {
 public:
  explicit Coupling(double kappa, double alpha = 1.0) : kappa_(kappa), alpha_(alpha) {
    if (!(kappa > -1.0)) throw invalid_coupling("Coupling: kappa must exceed -1");
    if (!(alpha > 0.0)) throw invalid_coupling("Coupling: alpha must be positive");
  }

  double kappa() const noexcept { return kappa_; }
  double alpha() const noexcept { return alpha_; }

  // Moment of the weighted generalized mean, m = alpha*kappa/(1+kappa).
  double moment() const noexcept { return alpha_ * kappa_ / (1.0 + kappa_); }

  // Multiplicative coupling kappa/(1+kappa), the inverse exponent of the
  // deformed exponential; drives the coupled product and power.
  double multiplicative() const noexcept { return kappa_ / (1.0 + kappa_); }

 private:
  double kappa_;
  double alpha_;
};

}  // namespace nsc

#endif
