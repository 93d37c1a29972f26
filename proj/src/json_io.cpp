#include "qord/json_io.hpp"

namespace qord {

using nlohmann::json;

json coefficient_to_json(const Coefficient& c) {
  json out = json::array();
  for (const auto& [key, g] : c.terms()) {
    out.push_back({{"re", g.re().json_string()},
                   {"im", g.im().json_string()},
                   {"hbar", key.hbar},
                   {"tau", key.tau}});
  }
  return out;
}

namespace {

json exponents_to_json(const ExpVec& exps) {
  json out = json::array();
  for (Exp e : exps.entries()) out.push_back(e);
  return out;
}

template <class TermMap>
json terms_to_json(const TermMap& terms) {
  json out = json::array();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    out.push_back({{"x", exponents_to_json(it->first.x)},
                   {"p", exponents_to_json(it->first.p)},
                   {"coeff", coefficient_to_json(it->second)}});
  }
  return out;
}

}  // namespace

json operator_to_json(const OperatorPolynomial& a) {
  return {{"mode", "operator"}, {"terms", terms_to_json(a.terms())}};
}

json classical_to_json(const ClassicalPolynomial& f) {
  return {{"mode", "classical"}, {"terms", terms_to_json(f.terms())}};
}

json shift_report_to_json(const ShiftReport& report) {
  return {{"dimension", report.dimension},
          {"scheme", report.scheme.to_string()},
          {"shift", coefficient_to_json(report.shift)},
          {"conjecture_value", coefficient_to_json(report.conjecture_value)},
          {"matches_conjecture", report.matches_conjecture}};
}

}  // namespace qord
