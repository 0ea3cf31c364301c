#ifndef NSC_ESCORT_HPP
#define NSC_ESCORT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nsc/coupling.hpp"
#include "nsc/distributions.hpp"

namespace nsc {

// Validated probability vector. States with probability exactly zero are
// dropped at construction (a zero-probability state must not change any
// downstream functional). Unless `renormalize` is set, the entries must lie
// in (0,1] and sum to one within 1e-9; silent renormalization is refused so
// data bugs surface (normalization_error).
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> probs, bool renormalize = false);

  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

// Escort transform p_i^{1+m} / sum_j p_j^{1+m} with m = alpha*kappa/(1+kappa).
// The output sums to one by construction.
DiscreteDistribution coupled_probability(const DiscreteDistribution& p, const Coupling& c);

// Continuous escort density f^{1+m}(x) / integral of f^{1+m}, evaluated by
// quadrature. Throws divergent_escort when the tail exponent makes the
// normalizing integral divergent.
double coupled_density_transform(const CoupledDensityParams& params, const Coupling& metric,
                                 double x, const QuadratureConfig& cfg = {});

// Escort-weighted n-th moment
//   sum x_i^n p_i^{1+n kappa/(1+kappa)} / sum p_i^{1+n kappa/(1+kappa)}.
// The stability index alpha plays no role here; the moment order n replaces it.
double coupled_moment_discrete(std::span<const double> xs, const DiscreteDistribution& p, int n,
                               double kappa);

// Continuous escort moment of the family itself: n = 1 for alpha = 1 recovers
// sigma, n = 2 for alpha = 2 recovers sigma^2 (plus mu terms when mu != 0).
double coupled_moment_continuous(const CoupledDensityParams& params, int n,
                                 const QuadratureConfig& cfg = {});

}  // namespace nsc

#endif
