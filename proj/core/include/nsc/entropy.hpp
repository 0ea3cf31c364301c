#ifndef NSC_ENTROPY_HPP
#define NSC_ENTROPY_HPP

#include <span>
#include <string>
#include <vector>

#include "nsc/coupling.hpp"
#include "nsc/distributions.hpp"
#include "nsc/escort.hpp"

namespace nsc {

enum class EntropyKind { shannon, renyi, tsallis, normalized_tsallis, coupled };

const char* to_string(EntropyKind kind);
EntropyKind entropy_kind_from_string(const std::string& name);

// An entropy functional, decomposed as a transform of the average
// uncertainty GM = (sum p^{1+moment})^{1/moment}:
//   S = (-1/norm) (GM^power - 1),   S -> -ln GM as power, norm -> 0.
// The five kinds differ only in the (moment, power, norm) triple:
//   coupled:            ( m, -m, -alpha*kappa )
//   tsallis:            ( m,  m,  m )
//   normalized_tsallis: ( m, -m, -m )
//   renyi:              ( m,  limit, limit )
//   shannon:            ( limit, limit, limit )
// with m = alpha*kappa/(1+kappa).
struct EntropySpec {
  EntropyKind kind;
  Coupling coupling;

  double moment() const noexcept;
  double power() const noexcept;
  double norm() const noexcept;
};

// The (-1/norm)(GM^power - 1) transform. Shannon and Renyi use the explicit
// -ln GM branch rather than small-parameter evaluation.
double entropy_from_components(double generalized_mean, const EntropySpec& spec);

// Entropy of a discrete distribution: the transform applied to the coupled
// average uncertainty.
double entropy_discrete(const DiscreteDistribution& p, const EntropySpec& spec);

// Entropy of a coupled-family density. Generalized kinds go through the
// escort integral (quadrature); Shannon uses -integral of f ln f with the
// banded truncation limits, switching to the classical closed forms
// (1 + ln sigma, ln sqrt(2 pi e) + ln sigma) below kappa = 0.005 where the
// integrand loses accuracy.
double entropy_continuous(const CoupledDensityParams& params, const EntropySpec& spec,
                          const QuadratureConfig& cfg = {});

// Closed forms for the matched case (metric coupling equal to the
// distribution coupling, kappa > 0), available for the coupled, Tsallis and
// normalized-Tsallis kinds. For alpha = 1 at sigma = 1 the coupled and
// Tsallis entropies are identically 1 and the normalized Tsallis entropy is
// 1 + kappa. Throws unsupported_parameters otherwise.
double closed_form_entropy(const CoupledDensityParams& params, EntropyKind kind);

struct EntropySweepRow {
  int alpha;
  double sigma;
  double kappa;
  EntropyKind kind;
  double entropy;
};

// Matched-coupling entropy over a (sigma, kappa, kind) grid for one family.
// Closed forms are used where they exist; Shannon and Renyi are integrated
// numerically. Rows are emitted in grid order.
std::vector<EntropySweepRow> entropy_sweep(int alpha, std::span<const double> sigmas,
                                           std::span<const double> kappas,
                                           std::span<const EntropyKind> kinds,
                                           const QuadratureConfig& cfg = {});

}  // namespace nsc

#endif
