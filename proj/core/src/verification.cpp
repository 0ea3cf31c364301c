#include "nsc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "nsc/algebra.hpp"
#include "nsc/distributions.hpp"
#include "nsc/entropy.hpp"
#include "nsc/escort.hpp"
#include "nsc/quadrature.hpp"
#include "nsc/uncertainty.hpp"
#include "rng.hpp"

namespace nsc {

namespace {

double rel_to(double observed, double reference, double floor = 1e-300) {
  return std::abs(observed - reference) / std::max(std::abs(reference), floor);
}

double rel_pair(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

CheckResult make_check(std::string name, double max_error, double tolerance, std::string note = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.max_error = max_error;
  r.tolerance = tolerance;
  r.passed = std::isfinite(max_error) && max_error <= tolerance;
  r.note = std::move(note);
  return r;
}

double truncated_power_ref(double base_shift, double exponent) {
  if (1.0 + base_shift <= 0.0) return exponent > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::exp(exponent * std::log1p(base_shift));
}

// --- algebra checks -------------------------------------------------------

CheckResult check_inverse_pair() {
  const double kappas[] = {-0.9, -0.5, -0.25, -0.1, 0.0, 1e-8, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  double worst = 0.0;
  for (double k : kappas) {
    const double lo = k > 0.0 ? std::max(-5.0, -0.95 / k) : -5.0;
    const double hi = k < 0.0 ? std::min(5.0, 0.95 / (-k)) : 5.0;
    for (int i = 0; i <= 40; ++i) {
      const double x = lo + (hi - lo) * i / 40.0;
      const double roundtrip = coupled_log(coupled_exp(x, k), k);
      worst = std::max(worst, std::abs(roundtrip - x) / (1.0 + std::abs(x)));
    }
  }
  return make_check("algebra/exp-log inverse pair", worst, 1e-10);
}

CheckResult check_small_coupling_accuracy() {
  // Deformed path against a long-double reference for couplings near zero.
  double worst = 0.0;
  const double kappas[] = {1e-6, 1e-5, 1e-4, 1e-3, -1e-6, -1e-4, -1e-3};
  for (double k : kappas) {
    for (int i = 0; i <= 20; ++i) {
      const double x = -2.0 + 4.0 * i / 20.0;
      const long double ref =
          expl((1.0L / static_cast<long double>(k) + 1.0L) * log1pl(static_cast<long double>(k) * x));
      worst = std::max(worst, rel_to(coupled_exp(x, k), static_cast<double>(ref)));
      const double y = 0.2 + 4.8 * i / 20.0;
      const long double logref =
          expm1l(static_cast<long double>(k) / (1.0L + static_cast<long double>(k)) * logl(y)) /
          static_cast<long double>(k);
      worst = std::max(worst, rel_to(coupled_log(y, k), static_cast<double>(logref)));
    }
  }
  return make_check("algebra/small-coupling deformed path accuracy", worst, 1e-6);
}

CheckResult check_threshold_continuity() {
  // No jump across the classical-limit switch of the coupling.
  const double below = 0.99e-10;
  const double above = 1.01e-10;
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double x = -2.0 + 4.0 * i / 20.0;
    worst = std::max(worst, rel_pair(coupled_exp(x, below), coupled_exp(x, above)));
    const double y = 0.2 + 4.8 * i / 20.0;
    if (std::abs(std::log(y)) > 0.1) {
      worst = std::max(worst, rel_pair(coupled_log(y, below), coupled_log(y, above)));
    }
  }
  return make_check("algebra/classical-limit threshold continuity", worst, 1e-9);
}

CheckResult check_unit_integral() {
  const double kappas[] = {-0.5, 0.0, 0.5, 1.0, 2.0};
  double worst = 0.0;
  QuadratureConfig cfg;
  for (double k : kappas) {
    // x = u^3 regularizes the integrable endpoint of ln_k(1/x) at x = 0.
    const auto integrand = [k](double u) {
      if (u <= 0.0) return 0.0;
      return coupled_log(std::pow(u, -3.0), k) * 3.0 * u * u;
    };
    const IntegrationResult r = integrate(integrand, 0.0, 1.0, cfg);
    worst = std::max(worst, std::abs(r.value - 1.0));
  }
  return make_check("algebra/unit integral of deformed log", worst, 1e-8);
}

CheckResult check_power_argument_identity() {
  const double kappas[] = {-0.5, 0.25, 0.5, 1.0, 3.0};
  const double alphas[] = {1.0, 2.0, 3.0};
  const double xs[] = {0.1, 0.5, 1.0, 1.8};
  double worst = 0.0;
  for (double k : kappas) {
    for (double a : alphas) {
      for (double x : xs) {
        const double lhs = coupled_exp_general(x, Coupling(k, a), +1);
        const double rhs = truncated_power_ref(a * k * (x / a), (1.0 / k + 1.0) / a);
        worst = std::max(worst, rel_pair(lhs, rhs));
      }
    }
  }
  return make_check("algebra/power-argument identity of deformed exp", worst, 1e-12);
}

CheckResult check_log_of_products() {
  detail::SplitMix64 rng(0x17u);
  const double kappas[] = {-0.5, 0.3, 1.0, 2.0};
  double worst = 0.0;
  for (double k : kappas) {
    for (int rep = 0; rep < 50; ++rep) {
      const int n = 2 + static_cast<int>(rng.next() % 4);
      std::vector<double> xs;
      double product = 1.0;
      for (int i = 0; i < n; ++i) {
        const double x = (k < 0.0 ? 0.15 : 1.0) * rng.uniform_open();
        xs.push_back(x);
        product *= coupled_exp(x, k);
      }
      double coupled_sum = xs[0];
      for (int i = 1; i < n; ++i) coupled_sum = coupled_add(coupled_sum, xs[i], k);
      const double lhs = coupled_log(product, k);
      worst = std::max(worst, std::abs(lhs - coupled_sum) / (1.0 + std::abs(coupled_sum)));
    }
  }
  return make_check("algebra/deformed log of ordinary products", worst, 1e-10);
}

CheckResult check_product_homomorphism() {
  detail::SplitMix64 rng(0x23u);
  const double kappas[] = {-0.5, 0.3, 1.0, 2.0};
  double worst = 0.0;
  for (double k : kappas) {
    const double k1 = k / (1.0 + k);
    for (int rep = 0; rep < 50; ++rep) {
      const int n = 2 + static_cast<int>(rng.next() % 4);
      std::vector<double> factors;
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        const double x = (k < 0.0 ? 0.15 : 1.0) * rng.uniform_open();
        factors.push_back(coupled_exp(x, k));
        sum += x;
      }
      const double lhs = coupled_product(factors, k1);
      const double rhs = coupled_exp(sum, k);
      worst = std::max(worst, rel_pair(lhs, rhs));
    }
  }
  return make_check("algebra/coupled product homomorphism", worst, 1e-10);
}

CheckResult check_surprisal_power_scaling() {
  const double kappas[] = {0.25, 1.0, 2.0};
  const double alphas[] = {1.0, 2.0};
  const double bs[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  const double xs[] = {0.05, 0.3, 0.7, 1.0};
  double worst = 0.0;
  for (double k : kappas) {
    for (double a : alphas) {
      const Coupling c(k, a);
      for (double b : bs) {
        for (double x : xs) {
          const double lhs = b * coupled_surprisal(x, c);
          const double rhs = coupled_surprisal(coupled_power(x, b, -c.moment()), c);
          worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
        }
      }
    }
  }
  return make_check("algebra/surprisal scaling under coupled power", worst, 1e-10);
}

CheckResult check_addition_laws() {
  detail::SplitMix64 rng(0x31u);
  const double kappas[] = {-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 10.0};
  double worst = 0.0;
  for (double k : kappas) {
    for (int rep = 0; rep < 100; ++rep) {
      const double x = 4.0 * rng.uniform_open() - 2.0;
      const double y = 4.0 * rng.uniform_open() - 2.0;
      const double z = 4.0 * rng.uniform_open() - 2.0;
      const double left = coupled_add(coupled_add(x, y, k), z, k);
      const double right = coupled_add(x, coupled_add(y, z, k), k);
      const double scale = std::max(1.0, std::abs(right));
      worst = std::max(worst, std::abs(left - right) / scale);
      worst = std::max(worst,
                       std::abs(coupled_add(x, y, k) - coupled_add(y, x, k)) / scale);
    }
  }
  return make_check("algebra/coupled addition associativity and commutativity", worst, 1e-12);
}

}  // namespace

std::vector<CheckResult> verify_algebra() {
  return {check_inverse_pair(),        check_small_coupling_accuracy(),
          check_threshold_continuity(), check_unit_integral(),
          check_power_argument_identity(), check_log_of_products(),
          check_product_homomorphism(), check_surprisal_power_scaling(),
          check_addition_laws()};
}

std::vector<CheckResult> verify_theorem1() {
  std::vector<CheckResult> results;
  const double sigmas[] = {0.5, 1.0, 2.0};
  for (int alpha : {1, 2}) {
    std::vector<double> kappas;
    for (int i = 1; i <= 20; ++i) kappas.push_back(i / 10.0);
    if (alpha == 1) {
      kappas.push_back(-0.5);
      kappas.push_back(-0.25);
    }
    for (double sigma : sigmas) {
      double worst = 0.0;
      for (double kappa : kappas) {
        const CoupledDensityParams params(0.0, sigma, kappa, alpha);
        const double uncertainty =
            coupled_average_uncertainty_continuous(params, Coupling(kappa, alpha));
        const double width_density = density(params, params.mu + params.sigma);
        worst = std::max(worst, rel_to(uncertainty, width_density));
      }
      results.push_back(make_check("theorem1/alpha=" + std::to_string(alpha) +
                                       " sigma=" + std::to_string(sigma),
                                   worst, 1e-6));
    }
  }
  return results;
}

std::vector<CheckResult> verify_lemma1() {
  std::vector<CheckResult> results;
  const double sigmas[] = {0.5, 1.0, 2.0};
  for (int alpha : {1, 2}) {
    const int n = alpha == 1 ? 1 : 2;
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
      const double kappa = i / 10.0;
      for (double sigma : sigmas) {
        const CoupledDensityParams params(0.0, sigma, kappa, alpha);
        const double moment = coupled_moment_continuous(params, n);
        const double target = n == 1 ? sigma : sigma * sigma;
        worst = std::max(worst, rel_to(moment, target));
      }
    }
    results.push_back(make_check(
        "lemma1/alpha=" + std::to_string(alpha) + " escort moment recovers scale", worst, 1e-5));
  }
  return results;
}

std::vector<CheckResult> verify_lemma2() {
  detail::SplitMix64 rng(0x4du);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 1 + static_cast<int>(rng.next() % 8);
    std::vector<double> values;
    std::vector<double> weights;
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      values.push_back(0.05 + 20.0 * rng.uniform_open());
      weights.push_back(rng.uniform_open());
      wsum += weights.back();
    }
    for (double& w : weights) w /= wsum;
    const double kappa = -0.9 + 5.9 * rng.uniform_open();
    const double alpha = (rng.next() % 2 == 0) ? 1.0 : 2.0;
    const Coupling c(kappa, alpha);
    const WeightVector wv(weights);
    const double via_coupled_log = coupled_log_average(values, wv, c);
    const double via_power_mean = weighted_generalized_mean(values, wv, c.moment());
    worst = std::max(worst, rel_pair(via_coupled_log, via_power_mean));
  }
  return {make_check("lemma2/coupled-log average equals weighted generalized mean", worst, 1e-12)};
}

std::vector<CheckResult> verify_closed_forms() {
  std::vector<CheckResult> results;
  const double sigmas[] = {0.25, 0.5, 1.0, 2.0};
  const EntropyKind kinds[] = {EntropyKind::coupled, EntropyKind::tsallis,
                               EntropyKind::normalized_tsallis};
  for (int alpha : {1, 2}) {
    for (EntropyKind kind : kinds) {
      double worst = 0.0;
      for (int i = 1; i <= 20; ++i) {
        const double kappa = i / 10.0;
        for (double sigma : sigmas) {
          const CoupledDensityParams params(0.0, sigma, kappa, alpha);
          const double closed = closed_form_entropy(params, kind);
          const double quad = entropy_continuous(params, {kind, Coupling(kappa, alpha)});
          // The closed form crosses zero inside the grid, so errors are
          // measured against max(|S|, 0.01).
          worst = std::max(worst, std::abs(closed - quad) / std::max(std::abs(closed), 1e-2));
        }
      }
      results.push_back(make_check("closedforms/alpha=" + std::to_string(alpha) + " " +
                                       to_string(kind) + " vs quadrature",
                                   worst, 1e-6));
    }
  }

  double worst_unit = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double kappa = i / 10.0;
    const CoupledDensityParams params(0.0, 1.0, kappa, 1);
    worst_unit = std::max(worst_unit,
                          std::abs(closed_form_entropy(params, EntropyKind::coupled) - 1.0));
    worst_unit = std::max(worst_unit,
                          std::abs(closed_form_entropy(params, EntropyKind::tsallis) - 1.0));
    worst_unit = std::max(
        worst_unit,
        std::abs(closed_form_entropy(params, EntropyKind::normalized_tsallis) - (1.0 + kappa)));
  }
  results.push_back(make_check(
      "closedforms/alpha=1 sigma=1 coupled=tsallis=1 and normalized=1+kappa", worst_unit, 1e-10));
  return results;
}

std::vector<CheckResult> verify_superstatistics() {
  const double xs[] = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  const double kappas[] = {0.25, 0.5, 1.0};
  double worst = 0.0;
  for (double kappa : kappas) {
    for (double x : xs) {
      const double mixture = superstatistics_mixture(kappa, 1.0, x);
      const double direct = density(CoupledDensityParams(0.0, 1.0, kappa, 1), x);
      worst = std::max(worst, std::abs(mixture - direct));
    }
  }
  return {make_check("superstat/gamma mixture matches coupled exponential", worst, 1e-8)};
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> all;
  for (auto suite : {verify_algebra, verify_theorem1, verify_lemma1, verify_lemma2,
                     verify_closed_forms, verify_superstatistics}) {
    auto results = suite();
    all.insert(all.end(), results.begin(), results.end());
  }
  return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace nsc
