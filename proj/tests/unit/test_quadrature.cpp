#include <cmath>
#include <cstring>
#include <limits>

#include <doctest.h>

#include "nsc/algebra.hpp"
#include "nsc/distributions.hpp"
#include "nsc/quadrature.hpp"

using doctest::Approx;
using namespace nsc;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("polynomials integrate to machine precision") {
  const auto r2 = integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r2.converged);
  CHECK(std::abs(r2.value - 1.0 / 3.0) <= 1e-12);

  const auto r10 = integrate([](double x) { return std::pow(x, 10.0); }, 0.0, 1.0);
  CHECK(std::abs(r10.value - 1.0 / 11.0) / (1.0 / 11.0) <= 1e-13);

  const auto flat = integrate([](double) { return 1.0; }, -3.0, 7.0);
  CHECK(flat.value == Approx(10.0).epsilon(1e-15));
}

TEST_CASE("semi-infinite exponential tail") {
  const auto r = integrate([](double x) { return std::exp(-x); }, 0.0, kInf);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0) <= 1e-10);
}

TEST_CASE("deformed log keeps unit information over the unit interval") {
  const auto r = integrate([](double x) { return coupled_log(1.0 / x, 0.5); }, 0.0, 1.0);
  CHECK(std::abs(r.value - 1.0) <= 1e-8);
}

TEST_CASE("doubly infinite range splits at zero") {
  const auto r = integrate([](double x) { return std::exp(-0.5 * x * x); }, -kInf, kInf);
  CHECK(r.converged);
  CHECK(r.value == Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-10));
}

TEST_CASE("integration is bitwise deterministic") {
  const auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  const auto a = integrate(f, 0.0, kInf);
  const auto b = integrate(f, 0.0, kInf);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.error_estimate, &b.error_estimate, sizeof(double)) == 0);
  CHECK(a.subdivisions == b.subdivisions);
}

TEST_CASE("tail limit bands") {
  CHECK(tail_limit_for(0.05) == 100.0);
  CHECK(tail_limit_for(0.09) == 1000.0);
  CHECK(tail_limit_for(0.5) == 1000.0);
  CHECK(tail_limit_for(0.74) == 10000.0);
  CHECK(tail_limit_for(1.0) == 10000.0);
  CHECK(tail_limit_for(1.5) == 15000.0);
  CHECK(tail_limit_for(2.0) == 15000.0);
  CHECK_THROWS_AS(tail_limit_for(0.0), std::domain_error);
  CHECK_THROWS_AS(tail_limit_for(-0.5), std::domain_error);
  CHECK_THROWS_AS(tail_limit_for(2.5), std::domain_error);
}

TEST_CASE("banded truncation handles the heaviest in-scope escort tail") {
  // Escort integrand of the alpha = 2 family at kappa = 2 decays like
  // x^{-3.5}; the banded policy truncates at 15000.
  const CoupledDensityParams params(0.0, 1.0, 2.0, 2);
  const double exponent = 1.0 + Coupling(2.0, 2.0).moment();
  const auto integrand = [&](double x) { return std::pow(density(params, x), exponent); };

  QuadratureConfig banded;
  banded.tail_policy = QuadratureConfig::TailPolicy::table58;
  banded.tail_kappa = 2.0;
  const auto truncated = integrate(integrand, 0.0, kInf, banded);
  CHECK(truncated.converged);

  const auto transformed = integrate(integrand, 0.0, kInf);
  CHECK(transformed.converged);
  CHECK(truncated.value == Approx(transformed.value).epsilon(1e-8));
}

TEST_CASE("banded policy falls back to the transform outside the table") {
  QuadratureConfig banded;
  banded.tail_policy = QuadratureConfig::TailPolicy::table58;
  banded.tail_kappa = 5.0;  // outside the table
  const auto r = integrate([](double x) { return std::exp(-x); }, 0.0, kInf, banded);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0) <= 1e-10);
}

TEST_CASE("subdivision budget exhaustion is reported, not hidden") {
  QuadratureConfig tight;
  tight.max_subdivisions = 1;
  const auto needle = [](double x) { return std::exp(-1e6 * (x - 0.5) * (x - 0.5)); };
  const auto r = integrate(needle, 0.0, 1.0, tight);
  CHECK_FALSE(r.converged);
  CHECK(std::isfinite(r.value));
}

TEST_CASE("degenerate ranges are rejected") {
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0), std::invalid_argument);
}
