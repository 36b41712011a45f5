#pragma once

#include <stdexcept>
#include <string>

namespace abmodel {

/// Input outside the physical domain of an operation (b <= R, v >= c0, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Input violates the v_e >> v_q regime required by the approximate charge model.
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check between two independent computation routes failed.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration file or command line.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace abmodel
