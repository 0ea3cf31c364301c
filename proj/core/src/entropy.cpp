#include "nsc/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "family_integrals.hpp"
#include "nsc/errors.hpp"
#include "nsc/quadrature.hpp"
#include "nsc/uncertainty.hpp"

namespace nsc {

namespace {

constexpr double kUnderflowFloor = 1e-300;
constexpr double kTwoPi = 6.2831853071795864769;

// Below this coupling the truncated Shannon integrand loses accuracy, so the
// classical closed forms are used instead.
constexpr double kShannonClosedFormKappa = 0.005;

double classical_shannon_entropy(int alpha, double sigma) {
  if (alpha == 1) return 1.0 + std::log(sigma);
  return 0.5 * std::log(kTwoPi * std::exp(1.0)) + std::log(sigma);
}

// -integral of f ln f with the banded truncation limits; the integrand is
// taken as 0 wherever the density underflows.
double shannon_continuous(const CoupledDensityParams& params, const QuadratureConfig& cfg) {
  if (params.kappa >= 0.0 && params.kappa < kShannonClosedFormKappa) {
    return classical_shannon_entropy(params.alpha, params.sigma);
  }

  const auto integrand = [&params](double x) {
    const double f = density(params, x);
    if (f <= kUnderflowFloor) return 0.0;
    return -f * std::log(f);
  };

  double upper = params.support_upper();
  if (params.kappa >= kShannonClosedFormKappa && params.kappa <= 2.0) {
    upper = params.mu + tail_limit_for(params.kappa);
  }

  IntegrationResult r;
  double factor = 1.0;
  if (params.alpha == 2) {
    r = integrate(integrand, params.mu, upper, cfg);
    factor = 2.0;
  } else {
    r = integrate(integrand, params.mu, upper, cfg);
  }
  if (!r.converged) throw quadrature_error("entropy_continuous: Shannon integral tolerance not met");
  return factor * r.value;
}

}  // namespace

const char* to_string(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::shannon: return "shannon";
    case EntropyKind::renyi: return "renyi";
    case EntropyKind::tsallis: return "tsallis";
    case EntropyKind::normalized_tsallis: return "normalized-tsallis";
    case EntropyKind::coupled: return "coupled";
  }
  return "unknown";
}

EntropyKind entropy_kind_from_string(const std::string& name) {
  if (name == "shannon") return EntropyKind::shannon;
  if (name == "renyi") return EntropyKind::renyi;
  if (name == "tsallis") return EntropyKind::tsallis;
  if (name == "normalized-tsallis" || name == "normalized_tsallis") {
    return EntropyKind::normalized_tsallis;
  }
  if (name == "coupled") return EntropyKind::coupled;
  throw std::invalid_argument("unknown entropy kind: " + name);
}

double EntropySpec::moment() const noexcept {
  return kind == EntropyKind::shannon ? 0.0 : coupling.moment();
}

double EntropySpec::power() const noexcept {
  switch (kind) {
    case EntropyKind::shannon:
    case EntropyKind::renyi: return 0.0;
    case EntropyKind::tsallis: return coupling.moment();
    case EntropyKind::normalized_tsallis:
    case EntropyKind::coupled: return -coupling.moment();
  }
  return 0.0;
}

double EntropySpec::norm() const noexcept {
  switch (kind) {
    case EntropyKind::shannon:
    case EntropyKind::renyi: return 0.0;
    case EntropyKind::tsallis: return coupling.moment();
    case EntropyKind::normalized_tsallis: return -coupling.moment();
    case EntropyKind::coupled: return -coupling.alpha() * coupling.kappa();
  }
  return 0.0;
}

double entropy_from_components(double generalized_mean, const EntropySpec& spec) {
  if (!(generalized_mean > 0.0)) {
    throw std::domain_error("entropy_from_components: generalized mean must be positive");
  }
  // Shannon and Renyi are the explicit logarithmic limits, not small-parameter
  // evaluations of the generic transform.
  if (spec.kind == EntropyKind::shannon || spec.kind == EntropyKind::renyi) {
    return -std::log(generalized_mean);
  }
  const double power = spec.power();
  const double norm = spec.norm();
  if (coupling_is_zero(power) || coupling_is_zero(norm)) {
    return -std::log(generalized_mean);
  }
  return -std::expm1(power * std::log(generalized_mean)) / norm;
}

double entropy_discrete(const DiscreteDistribution& p, const EntropySpec& spec) {
  const Coupling metric = spec.kind == EntropyKind::shannon
                              ? Coupling(0.0, spec.coupling.alpha())
                              : spec.coupling;
  const double gm = coupled_average_uncertainty_discrete(p, metric);
  return entropy_from_components(gm, spec);
}

double entropy_continuous(const CoupledDensityParams& params, const EntropySpec& spec,
                          const QuadratureConfig& cfg) {
  if (spec.kind == EntropyKind::shannon) return shannon_continuous(params, cfg);
  const double gm = coupled_average_uncertainty_continuous(params, spec.coupling, cfg);
  return entropy_from_components(gm, spec);
}

double closed_form_entropy(const CoupledDensityParams& params, EntropyKind kind) {
  if (!(params.kappa > 0.0)) {
    throw unsupported_parameters("closed_form_entropy: requires kappa > 0");
  }
  const double k = params.kappa;

  double scale_term;  // Z^{moment}: sigma^{kappa/(1+kappa)} or Z^{2 kappa/(1+kappa)}
  double norm_scale;  // alpha * kappa
  if (params.alpha == 1) {
    scale_term = std::pow(params.sigma, k / (1.0 + k));
    norm_scale = k;
  } else {
    scale_term = std::pow(normalization(params), 2.0 * k / (1.0 + k));
    norm_scale = 2.0 * k;
  }

  switch (kind) {
    case EntropyKind::coupled:
      return ((1.0 + k) * scale_term - 1.0) / norm_scale;
    case EntropyKind::tsallis:
      return ((1.0 + k) - 1.0 / scale_term) / norm_scale;
    case EntropyKind::normalized_tsallis:
      return (1.0 + k) * ((1.0 + k) * scale_term - 1.0) / norm_scale;
    default:
      throw unsupported_parameters(
          "closed_form_entropy: available for coupled, tsallis and normalized-tsallis kinds");
  }
}

std::vector<EntropySweepRow> entropy_sweep(int alpha, std::span<const double> sigmas,
                                           std::span<const double> kappas,
                                           std::span<const EntropyKind> kinds,
                                           const QuadratureConfig& cfg) {
  if (sigmas.empty() || kappas.empty() || kinds.empty()) {
    throw std::invalid_argument("entropy_sweep: grids must be nonempty");
  }
  std::vector<EntropySweepRow> rows;
  rows.reserve(sigmas.size() * kappas.size() * kinds.size());
  for (double sigma : sigmas) {
    for (double kappa : kappas) {
      const CoupledDensityParams params(0.0, sigma, kappa, alpha);
      for (EntropyKind kind : kinds) {
        double value;
        switch (kind) {
          case EntropyKind::coupled:
          case EntropyKind::tsallis:
          case EntropyKind::normalized_tsallis:
            if (kappa >= small_coupling_threshold) {
              value = closed_form_entropy(params, kind);
            } else if (coupling_is_zero(kappa)) {
              value = classical_shannon_entropy(alpha, sigma);
            } else {
              value = entropy_continuous(params, {kind, Coupling(kappa, alpha)}, cfg);
            }
            break;
          case EntropyKind::renyi:
            value = coupling_is_zero(kappa)
                        ? classical_shannon_entropy(alpha, sigma)
                        : entropy_continuous(params, {kind, Coupling(kappa, alpha)}, cfg);
            break;
          case EntropyKind::shannon:
          default:
            value = entropy_continuous(params, {kind, Coupling(kappa, alpha)}, cfg);
            break;
        }
        rows.push_back({alpha, sigma, kappa, kind, value});
      }
    }
  }
  return rows;
}

}  // namespace nsc
