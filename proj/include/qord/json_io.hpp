#pragma once

#include "qord/angular.hpp"
#include "qord/phase_space.hpp"
#include "qord/weyl_algebra.hpp"

#include <json.hpp>

namespace qord {

/// Array of summands in ascending (hbar, tau) order; rationals are always
/// written as "num/den" strings to keep the encoding exact.
nlohmann::json coefficient_to_json(const Coefficient& c);

/// {"mode": "operator", "terms": [{"x": [...], "p": [...], "coeff": [...]}]}
/// with terms in descending canonical order, matching the text rendering.
nlohmann::json operator_to_json(const OperatorPolynomial& a);

/// Same layout with "mode": "classical".
nlohmann::json classical_to_json(const ClassicalPolynomial& f);

nlohmann::json shift_report_to_json(const ShiftReport& report);

}  // namespace qord
