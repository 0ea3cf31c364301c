#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "nsc/algebra.hpp"
#include "nsc/verification.hpp"
#include "test_util.hpp"

using doctest::Approx;
using namespace nsc;

namespace {
constexpr double kE = 2.718281828459045235;
}

TEST_CASE("coupled addition") {
  CHECK(coupled_add(1.0, 2.0, 0.5) == Approx(4.0).epsilon(1e-15));
  CHECK(coupled_add(3.0, 0.0, 2.0) == 3.0);  // zero is the identity
  CHECK(coupled_add(0.7, -0.3, 0.0) == Approx(0.4).epsilon(1e-15));
  CHECK_THROWS_AS(coupled_add(1.0, 1.0, -1.0), invalid_coupling);
  CHECK_THROWS_AS(coupled_add(1.0, 1.0, -2.5), invalid_coupling);
}

TEST_CASE("coupled subtraction inverts coupled addition") {
  CHECK(coupled_subtract(4.0, 2.0, 0.5) == Approx(1.0).epsilon(1e-15));
  CHECK(coupled_subtract(0.7, 0.3, 0.0) == Approx(0.4).epsilon(1e-15));
  CHECK_THROWS_AS(coupled_subtract(3.0, -2.0, 0.5), singular_dilation);

  TestRng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double k = rng.uniform(-0.9, 3.0);
    const double x = rng.uniform(-2.0, 2.0);
    const double y = rng.uniform(-0.5, 2.0);
    if (std::abs(1.0 + k * y) < 1e-6) continue;
    const double roundtrip = coupled_subtract(coupled_add(x, y, k), y, k);
    CHECK(std::abs(roundtrip - x) <= 1e-12 * (1.0 + std::abs(x)));
  }
}

TEST_CASE("coupled exponential") {
  CHECK(coupled_exp(1.0, 1.0) == Approx(4.0).epsilon(1e-15));
  CHECK(coupled_exp(1.0, 0.0) == Approx(kE).epsilon(1e-15));
  CHECK(coupled_exp(-3.0, 0.5) == 0.0);  // truncated outside the cone

  // Negative coupling makes the exponent negative: the function diverges at
  // the truncation edge instead of vanishing.
  CHECK(coupled_exp(2.0, -0.5) == std::numeric_limits<double>::infinity());
  CHECK(coupled_exp(5.0, -0.5) == std::numeric_limits<double>::infinity());
}

TEST_CASE("coupled exponential with explicit power") {
  CHECK(coupled_exp_general(1.0, Coupling(1.0, 2.0), -1) == Approx(0.5).epsilon(1e-15));
  CHECK(coupled_exp_general(2.0, Coupling(0.0, 2.0), -1) == Approx(std::exp(-1.0)).epsilon(1e-15));

  // Raising to a power 1/alpha is the same as dividing the argument and
  // multiplying the coupling by alpha.
  const double lhs = coupled_exp_general(1.0, Coupling(0.5, 2.0), +1);
  CHECK(lhs == Approx(std::pow(1.5, 1.5)).epsilon(1e-15));
  const double rhs = std::pow(1.0 + 2.0 * 0.5 * (1.0 / 2.0), (1.0 / 2.0) * (1.0 / 0.5 + 1.0));
  CHECK(lhs == Approx(rhs).epsilon(1e-14));

  CHECK_THROWS_AS(coupled_exp_general(1.0, Coupling(1.0, 2.0), 3), std::invalid_argument);
}

TEST_CASE("coupled logarithm") {
  CHECK(coupled_log(4.0, 1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(coupled_log(kE, 0.0) == Approx(1.0).epsilon(1e-15));
  for (double k : {-0.5, 0.0, 0.3, 1.0, 4.0}) CHECK(coupled_log(1.0, k) == 0.0);
  CHECK_THROWS_AS(coupled_log(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(coupled_log(-1.0, 0.5), std::domain_error);
}

TEST_CASE("coupled logarithm with stability index") {
  CHECK(coupled_log_alpha(4.0, Coupling(1.0, 2.0)) == Approx(1.5).epsilon(1e-15));
  CHECK(coupled_log_alpha(kE, Coupling(0.0, 2.0)) == Approx(1.0).epsilon(1e-15));

  TestRng rng(13);
  for (int i = 0; i < 100; ++i) {
    const double x = rng.uniform(0.05, 8.0);
    const double k = rng.uniform(-0.9, 4.0);
    const double reduced = coupled_log_alpha(x, Coupling(k, 1.0));
    const double plain = coupled_log(x, k);
    CHECK(std::abs(reduced - plain) <= 1e-14 * (1.0 + std::abs(plain)));
  }
}

TEST_CASE("coupled product") {
  const std::vector<double> v1 = {4.0, 9.0};
  CHECK(coupled_product(v1, 0.5) == Approx(16.0).epsilon(1e-14));
  const std::vector<double> v2 = {2.0, 3.0};
  CHECK(coupled_product(v2, 0.0) == Approx(6.0).epsilon(1e-15));

  // Coupled product of deformed exponentials telescopes into the deformed
  // exponential of the plain sum.
  const std::vector<double> factors = {coupled_exp(1.0, 1.0), coupled_exp(2.0, 1.0)};
  CHECK(coupled_product(factors, 0.5) == Approx(16.0).epsilon(1e-13));
  CHECK(coupled_product(factors, 0.5) == Approx(coupled_exp(3.0, 1.0)).epsilon(1e-13));

  const std::vector<double> bad = {1.0, 0.0};
  CHECK_THROWS_AS(coupled_product(bad, 0.5), std::domain_error);
}

TEST_CASE("coupled power") {
  CHECK(coupled_power(4.0, 3.0, 0.5) == Approx(16.0).epsilon(1e-14));
  CHECK(coupled_power(2.0, 3.0, 0.0) == Approx(8.0).epsilon(1e-15));
  TestRng rng(17);
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(0.1, 5.0);
    const double k1 = rng.uniform(-0.8, 0.8);
    // The pow round trip loses ~1/k1 ulps near vanishing coupling.
    CHECK(coupled_power(x, 1.0, k1) == Approx(x).epsilon(1e-12));
  }
  CHECK_THROWS_AS(coupled_power(0.0, 2.0, 0.5), std::domain_error);
}

TEST_CASE("coupled surprisal") {
  CHECK(coupled_surprisal(0.25, Coupling(1.0, 1.0)) == Approx(1.0).epsilon(1e-15));
  CHECK(coupled_surprisal(std::exp(-1.0), Coupling(0.0, 1.0)) == Approx(1.0).epsilon(1e-14));
  for (double k : {0.0, 0.5, 2.0}) {
    for (double a : {1.0, 2.0}) CHECK(coupled_surprisal(1.0, Coupling(k, a)) == 0.0);
  }
  CHECK_THROWS_AS(coupled_surprisal(0.0, Coupling(1.0, 1.0)), std::domain_error);
}

TEST_CASE("coupling derived quantities") {
  const Coupling c(1.0, 2.0);
  CHECK(c.moment() == Approx(1.0).epsilon(1e-15));
  CHECK(c.multiplicative() == Approx(0.5).epsilon(1e-15));
  const Coupling zero(0.0, 2.0);
  CHECK(zero.moment() == 0.0);
  CHECK(zero.multiplicative() == 0.0);
  CHECK_THROWS_AS(Coupling(-1.0, 1.0), invalid_coupling);
  CHECK_THROWS_AS(Coupling(0.5, 0.0), invalid_coupling);
}

TEST_CASE("algebra invariant suite passes") {
  const auto results = verify_algebra();
  for (const auto& r : results) {
    INFO(r.name, ": max err ", r.max_error, " tol ", r.tolerance);
    CHECK(r.passed);
  }
}
