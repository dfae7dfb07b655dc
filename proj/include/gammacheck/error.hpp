#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gammacheck {

enum class ErrorKind {
  near_pole,
  cap_exceeded,
  non_positive_factor,
  domain_error,
  tol_unreachable,
  numerical_overflow,
  invalid_config,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::near_pole: return "NearPole";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::non_positive_factor: return "NonPositiveFactor";
    case ErrorKind::domain_error: return "DomainError";
    case ErrorKind::tol_unreachable: return "TolUnreachable";
    case ErrorKind::numerical_overflow: return "NumericalOverflow";
    case ErrorKind::invalid_config: return "InvalidConfig";
  }
  return "Unknown";
}

/// Every failure raised by the numerics carries one of the kinds above.
class NumericsError : public std::runtime_error {
 public:
  NumericsError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gammacheck
