#pragma once

#include <stdexcept>
#include <string>

namespace mbhe {

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error("NonConvergence: " + what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error("DomainError: " + what) {}
};

struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error("QuadratureFailure: " + what) {}
};

struct NoBracket : std::runtime_error {
  explicit NoBracket(const std::string& what) : std::runtime_error("NoBracket: " + what) {}
};

struct SingularMoments : std::runtime_error {
  explicit SingularMoments(const std::string& what) : std::runtime_error("SingularMoments: " + what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error("ConfigError: " + what) {}
};

}  // namespace mbhe
