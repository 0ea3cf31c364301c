#ifndef NSC_UNCERTAINTY_HPP
#define NSC_UNCERTAINTY_HPP

#include <span>
#include <vector>

#include "nsc/coupling.hpp"
#include "nsc/distributions.hpp"
#include "nsc/escort.hpp"

namespace nsc {

// Nonnegative weights summing to one within 1e-12.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);

  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

// (sum_i w_i x_i^{-moment})^{-1/moment}; the weighted geometric mean
// exp(sum w_i ln x_i) when |moment| is below the coupling threshold.
// Under this sign convention moment = -1 is the arithmetic mean.
double weighted_generalized_mean(std::span<const double> values, const WeightVector& w,
                                 double moment);

// The deformed-log route to the same quantity: applies the deformed logarithm
// to x_i^{-alpha}, averages, and inverts with the deformed exponential.
// Algebraically identical to weighted_generalized_mean with
// moment = alpha*kappa/(1+kappa); kept as an independent evaluation path so
// the equality can be checked rather than assumed.
double coupled_log_average(std::span<const double> values, const WeightVector& w,
                           const Coupling& c);

// Average uncertainty of a distribution weighted by itself:
// (sum_i p_i^{1+m})^{1/m}, m = alpha*kappa/(1+kappa). Ranges over [1/N, 1]
// for kappa >= 0, hitting 1/N at the uniform distribution and 1 at a
// degenerate one. The kappa -> 0 limit is the weighted geometric mean
// prod p_i^{p_i}.
double coupled_average_uncertainty_discrete(const DiscreteDistribution& p, const Coupling& c);

// Continuous counterpart (integral of f^{1+m})^{1/m} by quadrature, with the
// weighted-geometric-mean limit exp(integral of f ln f) as the metric moment
// vanishes. For the coupled families evaluated at their own coupling this
// equals the density at mu + sigma. Throws divergent_escort when the escort
// integral diverges and quadrature_error when tolerance cannot be met.
double coupled_average_uncertainty_continuous(const CoupledDensityParams& params,
                                              const Coupling& metric,
                                              const QuadratureConfig& cfg = {});

struct UncertaintySweepPoint {
  double metric_kappa;
  double dist_kappa;
  double average_uncertainty;
};

// Average uncertainty of the alpha = 2 family across distribution couplings,
// one row block per metric coupling. The weight is the distribution's own
// escort density and the generalized-mean moment comes from the metric
// coupling, so at dist_kappa == metric_kappa the value reduces to the
// matched average uncertainty, i.e. the density at mu + sigma, and is an
// extremum of the block. Rows are emitted in grid order.
std::vector<UncertaintySweepPoint> uncertainty_sweep(std::span<const double> dist_kappas,
                                                     std::span<const double> metric_kappas,
                                                     double sigma,
                                                     const QuadratureConfig& cfg = {});

}  // namespace nsc

#endif
