#include "nsc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace nsc {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule. Off-center abscissae
// on (0,1); Gauss points sit at indices 1, 3, 5 plus the center.
constexpr double kKronrodNodes[7] = {
    0.99145537112081264, 0.94910791234275852, 0.86486442335976907, 0.74153118559939444,
    0.58608723546769113, 0.40584515137739717, 0.20778495500789847,
};
constexpr double kKronrodWeights[7] = {
    0.022935322010529225, 0.063092092629978553, 0.10479001032225018, 0.14065325971552592,
    0.16900472663926790,  0.19035057806478541,  0.20443294007529889,
};
constexpr double kKronrodCenterWeight = 0.20948214108472783;
constexpr double kGaussWeights[3] = {
    0.12948496616886969, 0.27970539148927666, 0.38183005050511894,
};
constexpr double kGaussCenterWeight = 0.41795918367346939;

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double err = 0.0;
  std::int64_t id = 0;
};

struct PanelGreater {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.id > b.id;  // oldest panel first on exact ties
  }
};

Panel evaluate_panel(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(center);
  double resg = kGaussCenterWeight * fc;
  double resk = kKronrodCenterWeight * fc;
  double resabs = kKronrodCenterWeight * std::abs(fc);

  double flo[7];
  double fhi[7];
  for (int j = 0; j < 7; ++j) {
    flo[j] = f(center - half * kKronrodNodes[j]);
    fhi[j] = f(center + half * kKronrodNodes[j]);
    const double sum = flo[j] + fhi[j];
    resk += kKronrodWeights[j] * sum;
    resabs += kKronrodWeights[j] * (std::abs(flo[j]) + std::abs(fhi[j]));
    if (j % 2 == 1) resg += kGaussWeights[j / 2] * sum;
  }

  const double reskh = 0.5 * resk;
  double resasc = kKronrodCenterWeight * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kKronrodWeights[j] * (std::abs(flo[j] - reskh) + std::abs(fhi[j] - reskh));
  }

  Panel panel;
  panel.lo = lo;
  panel.hi = hi;
  panel.value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50) {
    err = std::max(eps50 * resabs, err);
  }
  panel.err = err;
  return panel;
}

IntegrationResult adaptive_finite(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureConfig& cfg) {
  IntegrationResult result;

  std::priority_queue<Panel, std::vector<Panel>, PanelGreater> queue;
  std::int64_t next_id = 0;

  Panel first = evaluate_panel(f, a, b);
  first.id = next_id++;
  if (!std::isfinite(first.value) || !std::isfinite(first.err)) {
    result.value = first.value;
    result.error_estimate = std::numeric_limits<double>::infinity();
    return result;
  }
  double total_value = first.value;
  double total_err = first.err;
  queue.push(first);

  const auto tolerance = [&cfg](double v) { return std::max(cfg.rel_tol * std::abs(v), cfg.abs_tol); };

  int subdivisions = 0;
  bool integrand_ok = true;
  while (total_err > tolerance(total_value) && subdivisions < cfg.max_subdivisions) {
    Panel worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;  // panel already at rounding width
    queue.pop();

    Panel left = evaluate_panel(f, worst.lo, mid);
    Panel right = evaluate_panel(f, mid, worst.hi);
    left.id = next_id++;
    right.id = next_id++;
    if (!std::isfinite(left.value) || !std::isfinite(right.value) || !std::isfinite(left.err) ||
        !std::isfinite(right.err)) {
      integrand_ok = false;
      queue.push(worst);
      break;
    }
    total_value += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }

  // Re-sum the panel list in positional order so the result does not depend
  // on the heap's internal layout.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });

  double value = 0.0;
  double err = 0.0;
  for (const Panel& p : panels) {
    value += p.value;
    err += p.err;
  }

  result.value = value;
  result.error_estimate = err;
  result.subdivisions = subdivisions;
  result.converged = integrand_ok && std::isfinite(value) && err <= tolerance(value);
  return result;
}

// Maps [a, +inf) to t in [0, 1) via x = a + t/(1-t). Kronrod abscissae are
// interior, so t = 1 is never evaluated.
std::function<double(double)> upper_transform(const std::function<double(double)>& f, double a) {
  return [&f, a](double t) {
    const double u = 1.0 - t;
    const double fx = f(a + t / u);
    if (fx == 0.0) return 0.0;
    return fx / (u * u);
  };
}

std::function<double(double)> lower_transform(const std::function<double(double)>& f, double b) {
  return [&f, b](double t) {
    const double u = 1.0 - t;
    const double fx = f(b - t / u);
    if (fx == 0.0) return 0.0;
    return fx / (u * u);
  };
}

bool table58_applies(const QuadratureConfig& cfg) {
  return cfg.tail_policy == QuadratureConfig::TailPolicy::table58 && cfg.tail_kappa > 0.0 &&
         cfg.tail_kappa <= 2.0;
}

}  // namespace

double tail_limit_for(double kappa) {
  if (!(kappa > 0.0) || kappa > 2.0) {
    throw std::domain_error("tail_limit_for: coupling outside the (0, 2] table");
  }
  if (kappa < 0.09) return 100.0;
  if (kappa < 0.74) return 1000.0;
  if (kappa < 1.50) return 10000.0;
  return 15000.0;
}

IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg) {
  const bool lower_infinite = std::isinf(a) && a < 0.0;
  const bool upper_infinite = std::isinf(b) && b > 0.0;

  if (!lower_infinite && !upper_infinite) {
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
    return adaptive_finite(f, a, b, cfg);
  }

  if (!lower_infinite && upper_infinite) {
    if (table58_applies(cfg)) {
      return adaptive_finite(f, a, a + tail_limit_for(cfg.tail_kappa), cfg);
    }
    return adaptive_finite(upper_transform(f, a), 0.0, 1.0, cfg);
  }

  if (lower_infinite && !upper_infinite) {
    if (table58_applies(cfg)) {
      return adaptive_finite(f, b - tail_limit_for(cfg.tail_kappa), b, cfg);
    }
    return adaptive_finite(lower_transform(f, b), 0.0, 1.0, cfg);
  }

  if (table58_applies(cfg)) {
    const double limit = tail_limit_for(cfg.tail_kappa);
    return adaptive_finite(f, -limit, limit, cfg);
  }
  IntegrationResult lower = adaptive_finite(lower_transform(f, 0.0), 0.0, 1.0, cfg);
  IntegrationResult upper = adaptive_finite(upper_transform(f, 0.0), 0.0, 1.0, cfg);
  IntegrationResult combined;
  combined.value = lower.value + upper.value;
  combined.error_estimate = lower.error_estimate + upper.error_estimate;
  combined.subdivisions = lower.subdivisions + upper.subdivisions;
  combined.converged = lower.converged && upper.converged;
  return combined;
}

}  // namespace nsc
