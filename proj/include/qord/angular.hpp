#pragma once

#include "qord/quantize.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qord {

/// Angular momentum component l_ij = x_i p_j - x_j p_i in ambient dimension
/// n. Requires 1 <= i < j <= n.
ClassicalPolynomial l_component(std::uint32_t i, std::uint32_t j, std::uint32_t n);

/// Total angular momentum square sum_{i<j} l_ij^2. Requires n >= 2.
ClassicalPolynomial l_squared_classical(std::uint32_t n);

/// Operator component X_i P_j - X_j P_i (already in normal form).
OperatorPolynomial l_hat_component(std::uint32_t i, std::uint32_t j, std::uint32_t n);

/// sum_{i<j} L_ij^2, built by operator multiplication.
OperatorPolynomial l_hat_squared(std::uint32_t n);

/// Raised when Q(l^2) - L^2 is not a multiple of the identity. The tau
/// family does this away from tau = 1/2; the remainder is carried for
/// inspection.
class NonScalarShiftError : public std::runtime_error {
 public:
  NonScalarShiftError(const std::string& message, OperatorPolynomial remainder)
      : std::runtime_error(message), remainder_(std::move(remainder)) {}

  const OperatorPolynomial& remainder() const { return remainder_; }

 private:
  OperatorPolynomial remainder_;
};

struct ShiftReport {
  std::uint32_t dimension = 0;
  QuantizationScheme scheme;
  /// The scalar S with Q(l^2) = L^2 + S.
  Coefficient shift;
  /// 2(n-2)*hbar^2, reading n as the ambient dimension.
  Coefficient conjecture_value;
  bool matches_conjecture = false;
};

/// Computes Q(l^2) - L^2 and reports the scalar shift. Throws
/// std::invalid_argument for n < 2 and NonScalarShiftError when the
/// difference is not scalar.
ShiftReport ordering_shift(const QuantizationScheme& scheme, std::uint32_t dimension);

/// Shift reports for every dimension in [n_min, n_max], ascending. Rows are
/// independent and are computed in parallel unless `parallel` is false; the
/// result is deterministic either way.
std::vector<ShiftReport> conjecture_scan(const QuantizationScheme& scheme, std::uint32_t n_min,
                                         std::uint32_t n_max, bool parallel = true);

}  // namespace qord
