#pragma once

#include <stdexcept>
#include <string>

namespace stancu {

/// An argument lies outside the mathematical domain of an operation
/// (k > n, x outside [0,1], x <= 0 for log_gamma, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A run or object was configured inconsistently (missing analytic partial,
/// empty n list, too few Monte-Carlo samples, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure produced a non-finite value or failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stancu
