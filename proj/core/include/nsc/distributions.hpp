#ifndef NSC_DISTRIBUTIONS_HPP
#define NSC_DISTRIBUTIONS_HPP

#include <cstdint>
#include <vector>

#include "nsc/coupling.hpp"
#include "nsc/quadrature.hpp"

namespace nsc {

// Parameters of the coupled exponential (alpha = 1) and coupled Gaussian
// (alpha = 2) families: location mu, scale sigma > 0, coupling kappa > -1.
// alpha = 2 requires kappa >= 0; the compact-support Gaussian normalization
// is out of scope. The alpha = 1 family coincides with the generalized
// Pareto distribution (shape kappa, scale sigma); alpha = 2 with kappa > 0
// is a Student-t with 1/kappa degrees of freedom and scale sigma.
struct CoupledDensityParams {
  CoupledDensityParams(double mu, double sigma, double kappa, int alpha);

  double mu;
  double sigma;
  double kappa;
  int alpha;

  // Support: alpha=1 starts at mu and, for kappa < 0, ends at mu - sigma/kappa;
  // alpha=2 covers the whole real line.
  double support_lower() const noexcept;
  double support_upper() const noexcept;
};

// Normalized density; 0 outside the support.
double density(const CoupledDensityParams& params, double x);

// Normalization constant Z: sigma for alpha=1, and for alpha=2
// sqrt(pi/kappa) * sigma * Gamma(1/(2 kappa)) / Gamma((1+kappa)/(2 kappa)),
// with the Gaussian limit sqrt(2 pi) * sigma as kappa -> 0.
double normalization(const CoupledDensityParams& params);

// Closed-form CDF of the alpha = 1 family: 1 - (1 + kappa (x-mu)/sigma)^(-1/kappa).
// Throws unsupported_parameters for alpha != 1.
double cdf_coupled_exponential(const CoupledDensityParams& params, double x);

// Density of the fluctuating inverse scale: a gamma distribution with shape
// 1/kappa and scale kappa/sigma, so the inverse scale has mean 1/sigma and
// relative variance kappa.
double gamma_mixing_density(double kappa, double sigma, double beta);

// Scale mixture of exponentials against the gamma density above, evaluated
// by quadrature. Pointwise equal to density({0, sigma, kappa, 1}, x).
double superstatistics_mixture(double kappa, double sigma, double x,
                               const QuadratureConfig& cfg = {});

// n samples, deterministic for a fixed seed. alpha = 1 draws through the
// inverse CDF; alpha = 2 draws a gamma-distributed precision and then a
// Gaussian tied to it (Student-t scale mixture).
std::vector<double> sample(const CoupledDensityParams& params, std::size_t n, std::uint64_t seed);

}  // namespace nsc

#endif
