#include "qord/angular.hpp"

#include <exception>

namespace qord {

namespace {

void check_component_args(std::uint32_t i, std::uint32_t j, std::uint32_t n) {
  if (i == 0 || j == 0 || i > n || j > n) {
    throw std::invalid_argument("angular momentum indices must lie in [1, n]");
  }
  if (i >= j) {
    throw std::invalid_argument("angular momentum component needs i < j");
  }
}

}  // namespace

ClassicalPolynomial l_component(std::uint32_t i, std::uint32_t j, std::uint32_t n) {
  check_component_args(i, j, n);
  ClassicalPolynomial out = ClassicalPolynomial::x(i) * ClassicalPolynomial::p(j);
  out -= ClassicalPolynomial::x(j) * ClassicalPolynomial::p(i);
  return out;
}

ClassicalPolynomial l_squared_classical(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("total angular momentum needs dimension >= 2");
  ClassicalPolynomial out;
  for (std::uint32_t i = 1; i < n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      const ClassicalPolynomial l = l_component(i, j, n);
      out += l * l;
    }
  }
  return out;
}

OperatorPolynomial l_hat_component(std::uint32_t i, std::uint32_t j, std::uint32_t n) {
  check_component_args(i, j, n);
  OperatorPolynomial out = op_mul(OperatorPolynomial::generator(position(i)),
                                  OperatorPolynomial::generator(momentum(j)));
  out -= op_mul(OperatorPolynomial::generator(position(j)),
                OperatorPolynomial::generator(momentum(i)));
  return out;
}

OperatorPolynomial l_hat_squared(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("total angular momentum needs dimension >= 2");
  OperatorPolynomial out;
  for (std::uint32_t i = 1; i < n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      const OperatorPolynomial l = l_hat_component(i, j, n);
      out += op_mul(l, l);
    }
  }
  return out;
}

ShiftReport ordering_shift(const QuantizationScheme& scheme, std::uint32_t dimension) {
  const OperatorPolynomial quantized = quantize(scheme, l_squared_classical(dimension));
  const OperatorPolynomial remainder = quantized - l_hat_squared(dimension);
  const auto scalar = remainder.as_scalar();
  if (!scalar) {
    throw NonScalarShiftError("ordering shift of scheme " + scheme.to_string() +
                                  " in dimension " + std::to_string(dimension) +
                                  " is not a scalar",
                              remainder);
  }
  ShiftReport report;
  report.dimension = dimension;
  report.scheme = scheme;
  report.shift = *scalar;
  report.conjecture_value = Coefficient::monomial(
      GaussianRational(Rational(2 * (static_cast<long long>(dimension) - 2))), 2, 0);
  report.matches_conjecture = report.shift == report.conjecture_value;
  return report;
}

std::vector<ShiftReport> conjecture_scan(const QuantizationScheme& scheme, std::uint32_t n_min,
                                         std::uint32_t n_max, bool parallel) {
  if (n_min < 2) throw std::invalid_argument("scan must start at dimension >= 2");
  if (n_max < n_min) throw std::invalid_argument("scan range is empty");

  const std::size_t count = n_max - n_min + 1;
  std::vector<ShiftReport> out(count);

  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < count; ++k) {
      try {
        out[k] = ordering_shift(scheme, n_min + static_cast<std::uint32_t>(k));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      out[k] = ordering_shift(scheme, n_min + static_cast<std::uint32_t>(k));
    }
  }
  return out;
}

}  // namespace qord
