#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsb {

enum class ErrorCode {
  invalid_argument,
  shape_mismatch,
  dimension_mismatch,
  not_hermitian,
  negative_spectrum,
  non_finite,
  singular_bergman,
  cut_locus,
  closure_violation,
  not_in_k,
  not_hermitian_structure,
  covariance_violation,
  singular_gauge,
  not_unitary,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace hsb
