#include "qord/cli.hpp"

#include "qord/angular.hpp"
#include "qord/detail/parser_impl.hpp"
#include "qord/errors.hpp"
#include "qord/json_io.hpp"
#include "qord/oracle.hpp"
#include "qord/parser.hpp"
#include "qord/quantize.hpp"
#include "qord/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qord {

namespace {

// Expression evaluated directly as an endomorphism of the wavefunction
// space. This is the oracle-side reading of operator input: no word is ever
// rewritten, letters act one by one. `pbound` tracks a per-variable bound on
// the momentum degree, which sizes the comparison box.
struct ActionPoly {
  std::function<Wavefunction(const Wavefunction&)> act;
  std::vector<Exp> pbound;
};

std::vector<Exp> bound_envelope(std::vector<Exp> a, const std::vector<Exp>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t v = 0; v < b.size(); ++v) a[v] = std::max(a[v], b[v]);
  return a;
}

std::vector<Exp> bound_sum(std::vector<Exp> a, const std::vector<Exp>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t v = 0; v < b.size(); ++v) a[v] += b[v];
  return a;
}

struct ActionAlgebra {
  using Poly = ActionPoly;
  static constexpr bool operator_mode = true;

  static Poly scalar(const Coefficient& c) {
    return {[c](const Wavefunction& psi) { return psi.scaled(c); }, {}};
  }
  static Poly variable(GeneratorKind kind, std::uint32_t index) {
    const Generator g{kind, index};
    std::vector<Exp> pb;
    if (kind == GeneratorKind::Momentum) {
      pb.resize(index, 0);
      pb[index - 1] = 1;
    }
    return {[g](const Wavefunction& psi) { return apply_generator(g, psi); }, std::move(pb)};
  }
  static Poly add(const Poly& a, const Poly& b) {
    return {[fa = a.act, fb = b.act](const Wavefunction& psi) { return fa(psi) + fb(psi); },
            bound_envelope(a.pbound, b.pbound)};
  }
  static Poly sub(const Poly& a, const Poly& b) {
    return {[fa = a.act, fb = b.act](const Wavefunction& psi) { return fa(psi) - fb(psi); },
            bound_envelope(a.pbound, b.pbound)};
  }
  static Poly mul(const Poly& a, const Poly& b) {
    return {[fa = a.act, fb = b.act](const Wavefunction& psi) { return fa(fb(psi)); },
            bound_sum(a.pbound, b.pbound)};
  }
  static Poly neg(const Poly& a) {
    return {[f = a.act](const Wavefunction& psi) { return f(psi).scaled(Coefficient(-1)); },
            a.pbound};
  }
};

// Checks that the expression's direct action coincides with the engine's
// normal form everywhere on the joint box.
bool action_matches_operator(const ActionPoly& action, const OperatorPolynomial& op) {
  const std::vector<Exp> box = bound_envelope(action.pbound, momentum_degrees(op));
  bool agree = true;
  for_each_box_monomial(box, [&](const Wavefunction& psi) {
    if (agree && !(action.act(psi) == apply_operator(op, psi))) agree = false;
  });
  return agree;
}

struct Options {
  std::string scheme = "weyl";
  std::string shubin_form = "x-sandwich";
  std::string bj_mode = "direct";
  std::string bracket_mode = "classical";
  std::string expr;
  std::string expr2;
  std::uint32_t dim = 3;
  std::uint32_t min_dim = 2;
  std::uint32_t max_dim = 8;
  Exp truncate = 0;
  bool json = false;
  bool verify = false;
  bool serial = false;
};

QuantizationScheme resolve_scheme(const Options& o) {
  auto parsed = QuantizationScheme::parse(o.scheme);
  if (!parsed) {
    throw std::invalid_argument("unknown scheme '" + o.scheme +
                                "' (expected weyl, bj, shubin:<rational>, or shubin:sym)");
  }
  parsed->form = (o.shubin_form == "p-sandwich") ? ShubinForm::PSandwich : ShubinForm::XSandwich;
  parsed->bj_mode =
      (o.bj_mode == "integral") ? BornJordanMode::Integral : BornJordanMode::Direct;
  return *parsed;
}

void emit(std::ostream& out, bool json, const OperatorPolynomial& a) {
  if (json) {
    out << operator_to_json(a).dump(2) << "\n";
  } else {
    out << a.to_string() << "\n";
  }
}

void emit(std::ostream& out, bool json, const ClassicalPolynomial& f) {
  if (json) {
    out << classical_to_json(f).dump(2) << "\n";
  } else {
    out << f.to_string() << "\n";
  }
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

Coefficient sphere_reading_value(std::uint32_t dimension) {
  // The same conjecture read on S^(n-1) itself: 2((n-1)-2)*hbar^2.
  const long long n = static_cast<long long>(dimension);
  return Coefficient::monomial(GaussianRational(Rational(2 * (n - 3))), 2, 0);
}

nlohmann::json scan_row_json(const ShiftReport& report) {
  nlohmann::json row = shift_report_to_json(report);
  const Coefficient sphere = sphere_reading_value(report.dimension);
  row["sphere_reading_value"] = coefficient_to_json(sphere);
  row["matches_sphere_reading"] = (report.shift == sphere);
  return row;
}

int run_quantize(const Options& o, std::ostream& out) {
  const QuantizationScheme scheme = resolve_scheme(o);
  const ObservableExpression obs = parse_observable(o.expr, ParseMode::Classical);
  const OperatorPolynomial result = quantize(scheme, obs.classical());
  if (o.verify && !verify_quantization(scheme, obs.classical(), result)) {
    throw InternalError("oracle rejected the quantization of '" + o.expr + "'");
  }
  emit(out, o.json, result);
  return 0;
}

int run_normal_order(const Options& o, std::ostream& out) {
  const ObservableExpression obs = parse_observable(o.expr, ParseMode::Operator);
  if (o.verify) {
    const ActionPoly action = detail::parse_with_algebra<ActionAlgebra>(o.expr);
    if (!action_matches_operator(action, obs.op())) {
      throw InternalError("oracle rejected the normal form of '" + o.expr + "'");
    }
  }
  emit(out, o.json, obs.op());
  return 0;
}

int run_star(const Options& o, bool truncated, std::ostream& out) {
  const ClassicalPolynomial f = parse_observable(o.expr, ParseMode::Classical).classical();
  const ClassicalPolynomial g = parse_observable(o.expr2, ParseMode::Classical).classical();
  if (truncated && o.verify) {
    throw std::invalid_argument("--verify needs the untruncated star product");
  }
  const ClassicalPolynomial result =
      truncated ? moyal_star(f, g, o.truncate) : moyal_star(f, g);
  if (o.verify && !verify_star_compatibility(f, g, result)) {
    throw InternalError("oracle rejected the star product");
  }
  emit(out, o.json, result);
  return 0;
}

int run_bracket(const Options& o, std::ostream& out) {
  if (o.bracket_mode == "operator") {
    const OperatorPolynomial a = parse_observable(o.expr, ParseMode::Operator).op();
    const OperatorPolynomial b = parse_observable(o.expr2, ParseMode::Operator).op();
    const OperatorPolynomial result = commutator(a, b);
    if (o.verify && !verify_commutator(a, b, result)) {
      throw InternalError("oracle rejected the commutator");
    }
    emit(out, o.json, result);
  } else {
    const ClassicalPolynomial f = parse_observable(o.expr, ParseMode::Classical).classical();
    const ClassicalPolynomial g = parse_observable(o.expr2, ParseMode::Classical).classical();
    const ClassicalPolynomial result = poisson_bracket(f, g);
    if (o.verify && !verify_poisson_bracket(f, g, result)) {
      throw InternalError("star commutator disagrees with the bracket at leading order");
    }
    emit(out, o.json, result);
  }
  return 0;
}

int run_defect(const Options& o, std::ostream& out) {
  const QuantizationScheme scheme = resolve_scheme(o);
  const ClassicalPolynomial f = parse_observable(o.expr, ParseMode::Classical).classical();
  const ClassicalPolynomial g = parse_observable(o.expr2, ParseMode::Classical).classical();
  const OperatorPolynomial result = dirac_defect(scheme, f, g);
  if (o.verify && !verify_defect(scheme, f, g, result)) {
    throw InternalError("oracle rejected the bracket defect");
  }
  emit(out, o.json, result);
  return 0;
}

int run_symbol(const Options& o, std::ostream& out) {
  const OperatorPolynomial op = parse_observable(o.expr, ParseMode::Operator).op();
  const ClassicalPolynomial symbol = weyl_symbol(op);
  if (o.verify) {
    const ActionPoly action = detail::parse_with_algebra<ActionAlgebra>(o.expr);
    if (!action_matches_operator(action, op) || !verify_weyl_symbol(op, symbol)) {
      throw InternalError("oracle rejected the symbol of '" + o.expr + "'");
    }
  }
  emit(out, o.json, symbol);
  return 0;
}

int run_shift(const Options& o, std::ostream& out) {
  const QuantizationScheme scheme = resolve_scheme(o);
  const ShiftReport report = ordering_shift(scheme, o.dim);
  if (o.verify && !verify_shift(scheme, o.dim, report.shift)) {
    throw InternalError("oracle rejected the ordering shift");
  }
  if (o.json) {
    out << shift_report_to_json(report).dump(2) << "\n";
  } else {
    out << report.shift.to_string() << "\n";
  }
  return 0;
}

int run_scan(const Options& o, std::ostream& out) {
  const QuantizationScheme scheme = resolve_scheme(o);
  const std::vector<ShiftReport> rows = conjecture_scan(scheme, o.min_dim, o.max_dim, !o.serial);
  if (o.verify) {
    for (const ShiftReport& row : rows) {
      if (!verify_shift(scheme, row.dimension, row.shift)) {
        throw InternalError("oracle rejected the shift in dimension " +
                            std::to_string(row.dimension));
      }
    }
  }
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ShiftReport& row : rows) arr.push_back(scan_row_json(row));
    out << arr.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> table;
  table.push_back({"dim", "scheme", "shift", "2(n-2)*hbar^2", "match", "2(n-3)*hbar^2", "match"});
  for (const ShiftReport& row : rows) {
    const Coefficient sphere = sphere_reading_value(row.dimension);
    table.push_back({std::to_string(row.dimension), row.scheme.to_string(),
                     row.shift.to_string(), row.conjecture_value.to_string(),
                     row.matches_conjecture ? "yes" : "no", sphere.to_string(),
                     row.shift == sphere ? "yes" : "no"});
  }
  print_table(out, table);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for operator-ordering quantization schemes"};
  app.name("qord");
  app.require_subcommand(1);

  Options o;

  const auto add_scheme_options = [&o](CLI::App* cmd) {
    cmd->add_option("--scheme", o.scheme,
                    "Quantization scheme: weyl, bj, shubin:<rational>, shubin:sym")
        ->capture_default_str();
    cmd->add_option("--shubin-form", o.shubin_form, "Word layout of the tau family")
        ->check(CLI::IsMember({"x-sandwich", "p-sandwich"}))
        ->capture_default_str();
    cmd->add_option("--bj-mode", o.bj_mode, "Born-Jordan construction")
        ->check(CLI::IsMember({"direct", "integral"}))
        ->capture_default_str();
  };
  const auto add_common_flags = [&o](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "Emit JSON instead of text");
    cmd->add_flag("--verify", o.verify,
                  "Re-check the printed identity against the representation oracle");
  };

  CLI::App* quantize_cmd =
      app.add_subcommand("quantize", "Quantize a classical observable");
  quantize_cmd->add_option("expr", o.expr, "Classical expression")->required();
  add_scheme_options(quantize_cmd);
  add_common_flags(quantize_cmd);

  CLI::App* normal_cmd =
      app.add_subcommand("normal-order", "Normal-order an operator expression");
  normal_cmd->add_option("expr", o.expr, "Operator expression")->required();
  add_common_flags(normal_cmd);

  CLI::App* star_cmd = app.add_subcommand("star", "Star product of two observables");
  star_cmd->add_option("f", o.expr, "Left factor")->required();
  star_cmd->add_option("g", o.expr2, "Right factor")->required();
  CLI::Option* truncate_opt = star_cmd->add_option(
      "--truncate", o.truncate, "Keep only deformation orders <= this");
  add_common_flags(star_cmd);

  CLI::App* bracket_cmd = app.add_subcommand("bracket", "Poisson bracket or commutator");
  bracket_cmd->add_option("a", o.expr, "Left entry")->required();
  bracket_cmd->add_option("b", o.expr2, "Right entry")->required();
  bracket_cmd->add_option("--mode", o.bracket_mode, "classical or operator")
      ->check(CLI::IsMember({"classical", "operator"}))
      ->capture_default_str();
  add_common_flags(bracket_cmd);

  CLI::App* defect_cmd =
      app.add_subcommand("defect", "Bracket-to-commutator defect of a scheme");
  defect_cmd->add_option("f", o.expr, "Left observable")->required();
  defect_cmd->add_option("g", o.expr2, "Right observable")->required();
  add_scheme_options(defect_cmd);
  add_common_flags(defect_cmd);

  CLI::App* symbol_cmd =
      app.add_subcommand("symbol", "Phase-space symbol of an operator (symmetric rule)");
  symbol_cmd->add_option("expr", o.expr, "Operator expression")->required();
  add_common_flags(symbol_cmd);

  CLI::App* shift_cmd =
      app.add_subcommand("shift", "Ordering shift of the total angular momentum square");
  shift_cmd->add_option("--dim", o.dim, "Ambient dimension (>= 2)")->required();
  add_scheme_options(shift_cmd);
  add_common_flags(shift_cmd);

  CLI::App* scan_cmd =
      app.add_subcommand("scan", "Ordering shifts across a range of dimensions");
  scan_cmd->add_option("--min-dim", o.min_dim, "First dimension (>= 2)")->required();
  scan_cmd->add_option("--max-dim", o.max_dim, "Last dimension")->required();
  scan_cmd->add_flag("--serial", o.serial, "Compute rows one by one");
  add_scheme_options(scan_cmd);
  add_common_flags(scan_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qord");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (quantize_cmd->parsed()) return run_quantize(o, out);
    if (normal_cmd->parsed()) return run_normal_order(o, out);
    if (star_cmd->parsed()) return run_star(o, truncate_opt->count() > 0, out);
    if (bracket_cmd->parsed()) return run_bracket(o, out);
    if (defect_cmd->parsed()) return run_defect(o, out);
    if (symbol_cmd->parsed()) return run_symbol(o, out);
    if (shift_cmd->parsed()) return run_shift(o, out);
    if (scan_cmd->parsed()) return run_scan(o, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const NonScalarShiftError& e) {
    err << "error: " << e.what() << "\n";
    err << "remainder: " << e.remainder().to_string() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qord
