#ifndef NSC_ERRORS_HPP
#define NSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nsc {

// Coupling parameter outside its admissible range (kappa <= -1, alpha <= 0).
class invalid_coupling : public std::invalid_argument {
 public:
  explicit invalid_coupling(const std::string& msg) : std::invalid_argument(msg) {}
};

// Coupled subtraction hit a zero dilation factor 1 + kappa*y.
class singular_dilation : public std::domain_error {
 public:
  explicit singular_dilation(const std::string& msg) : std::domain_error(msg) {}
};

// Parameter combination the library deliberately does not support
// (e.g. a coupled Gaussian with negative coupling).
class unsupported_parameters : public std::invalid_argument {
 public:
  explicit unsupported_parameters(const std::string& msg) : std::invalid_argument(msg) {}
};

// Discrete probabilities do not sum to one and renormalization was not requested.
class normalization_error : public std::invalid_argument {
 public:
  explicit normalization_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Adaptive integration could not meet the requested tolerance.
class quadrature_error : public std::runtime_error {
 public:
  explicit quadrature_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An escort-type integral whose tail exponent makes it divergent.
class divergent_escort : public std::domain_error {
 public:
  explicit divergent_escort(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace nsc

#endif
