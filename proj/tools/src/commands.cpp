#include "commands.hpp"

#include "piesp/esp.hpp"
#include "piesp/pi.hpp"
#include "piesp/polyproduct.hpp"
#include "piesp/series.hpp"
#include "piesp/terms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace piesp::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Fewer digits for error/bound columns: they are diagnostics of tiny
/// magnitude, twenty significant digits say everything they have to say.
constexpr int kDiagnosticDigits = 20;

std::string bool_name(bool value) { return value ? "true" : "false"; }

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (const unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << value;
  return out.str();
}

nlohmann::json base_params(int order, std::int64_t count, const NumberMode& mode) {
  return {{"n", order},
          {"M", count},
          {"mode", kind_name(mode.kind)},
          {"digits", mode.digits}};
}

}  // namespace

int resolve_digits(const CommonOptions& options) {
  if (options.digits) return validate_digits(*options.digits);
  if (const char* env = std::getenv(kDigitsEnv)) {
    const std::string text(env);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size())
      throw Error(std::string(kDigitsEnv) + " must be an integer, got '" + text + "'");
    return validate_digits(value);
  }
  return NumberMode::kDefaultDigits;
}

NumberMode resolve_mode(const CommonOptions& options, NumberKind default_kind,
                        int digits) {
  const NumberKind kind =
      options.mode ? kind_from_name(*options.mode) : default_kind;
  return {kind, digits};
}

OutputFormat resolve_format(const CommonOptions& options) {
  return options.format ? format_from_name(*options.format) : default_format();
}

int cmd_partial(const PartialArgs& args) {
  const auto start = Clock::now();
  const int digits = resolve_digits(args.common);
  const NumberMode mode = resolve_mode(args.common, NumberKind::rational, digits);
  const OutputFormat format = resolve_format(args.common);

  const NumberValue value = nested_partial(args.order, args.count, mode);
  const double elapsed = seconds_since(start);

  switch (format) {
    case OutputFormat::table:
      std::cout << value.str() << "\n";
      break;
    case OutputFormat::json:
      print_json(envelope("partial", base_params(args.order, args.count, mode),
                          {{"value", value_json(value)}}, elapsed));
      break;
    case OutputFormat::csv:
      print_csv({"n", "M", "mode", "value"},
                {{std::to_string(args.order), std::to_string(args.count),
                  kind_name(mode.kind), value.str()}});
      break;
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args) {
  const int digits = resolve_digits(args.common);
  const NumberMode mode = resolve_mode(args.common, NumberKind::decimal, digits);
  const OutputFormat format = resolve_format(args.common);

  const VerificationReport report = verify(args.order, args.count, mode, digits);

  const std::string computed = report.computed.str();
  const std::string target = format_bigfloat(report.target.value, digits);
  const std::string tail = format_bigfloat(report.tail, kDiagnosticDigits);
  const std::string abs_error = format_bigfloat(report.abs_error, kDiagnosticDigits);
  const std::string rel_error = format_bigfloat(report.rel_error, kDiagnosticDigits);
  const std::string pi_estimate = format_bigfloat(report.pi_estimate, digits);

  switch (format) {
    case OutputFormat::table:
      print_table({}, {{"n", std::to_string(report.order)},
                       {"M", std::to_string(report.count)},
                       {"mode", kind_name(mode.kind)},
                       {"computed", computed},
                       {"target", target},
                       {"tail_bound", tail},
                       {"abs_error", abs_error},
                       {"rel_error", rel_error},
                       {"bracket_ok", bool_name(report.bracket_ok)},
                       {"pi_estimate", pi_estimate}});
      break;
    case OutputFormat::json:
      print_json(envelope(
          "verify", base_params(args.order, args.count, mode),
          {{"computed", value_json(report.computed)},
           {"target", value_json(report.target.value, digits)},
           {"tail_bound", value_json(report.tail, kDiagnosticDigits)},
           {"abs_error", value_json(report.abs_error, kDiagnosticDigits)},
           {"rel_error", value_json(report.rel_error, kDiagnosticDigits)},
           {"bracket_ok", report.bracket_ok},
           {"pi_estimate", value_json(report.pi_estimate, digits)}},
          report.elapsed_seconds));
      break;
    case OutputFormat::csv:
      print_csv({"n", "M", "mode", "computed", "target", "tail_bound", "abs_error",
                 "rel_error", "bracket_ok", "pi_estimate"},
                {{std::to_string(report.order), std::to_string(report.count),
                  kind_name(mode.kind), computed, target, tail, abs_error, rel_error,
                  bool_name(report.bracket_ok), pi_estimate}});
      break;
  }
  return report.bracket_ok ? kExitOk : kExitCheckFailed;
}

int cmd_expand(const ExpandArgs& args) {
  const auto start = Clock::now();
  const int digits = resolve_digits(args.common);
  const NumberMode mode = resolve_mode(args.common, NumberKind::float64, digits);
  const OutputFormat format = resolve_format(args.common);

  if (args.factor_count < 1) throw Error("expand needs at least one factor");

  struct EvalRow {
    std::string x, product, poly, cos;
    nlohmann::json jx, jproduct, jpoly, jcos;
  };
  std::vector<std::string> coeff_strings;
  nlohmann::json coeff_json = nlohmann::json::array();
  std::vector<EvalRow> evals;

  int order = 0;
  dispatch(mode, [&]<class T>(ScalarTag<T>) {
    const auto poly = expand_product<T>(args.factor_count, args.order);
    order = poly.order();
    for (const T& c : poly.coeffs) {
      const NumberValue value = make_value(mode, c);
      coeff_strings.push_back(value.str());
      coeff_json.push_back(value_json(value));
    }
    for (const std::string& text : args.eval_points) {
      const T x = to_scalar<T>(parse_number(text, mode));
      const NumberValue xv = make_value(mode, x);
      const NumberValue product = make_value(mode, eval_product(args.factor_count, x));
      const NumberValue poly_value = make_value(mode, eval_poly(poly, x));
      const BigFloat cos_value = cos_reference(widen(x), digits);
      EvalRow row;
      row.x = xv.str();
      row.product = product.str();
      row.poly = poly_value.str();
      row.jx = value_json(xv);
      row.jproduct = value_json(product);
      row.jpoly = value_json(poly_value);
      if constexpr (std::is_same_v<T, double>) {
        row.cos = format_double(cos_value.convert_to<double>());
        row.jcos = value_json(NumberValue(cos_value.convert_to<double>()));
      } else {
        row.cos = format_bigfloat(cos_value, digits);
        row.jcos = value_json(cos_value, digits);
      }
      evals.push_back(std::move(row));
    }
    return 0;
  });
  const double elapsed = seconds_since(start);

  switch (format) {
    case OutputFormat::table: {
      std::string line;
      for (std::size_t i = 0; i < coeff_strings.size(); ++i) {
        if (i) line += ", ";
        line += coeff_strings[i];
      }
      std::cout << line << "\n";
      if (!evals.empty()) {
        std::cout << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : evals)
          rows.push_back({row.x, row.product, row.poly, row.cos});
        print_table({"x", "product", "poly", "cos_reference"}, rows);
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::json evaluations = nlohmann::json::array();
      for (const auto& row : evals)
        evaluations.push_back({{"x", row.jx},
                               {"product", row.jproduct},
                               {"poly", row.jpoly},
                               {"cos_reference", row.jcos}});
      nlohmann::json params = {{"M", args.factor_count},
                               {"order", order},
                               {"mode", kind_name(mode.kind)},
                               {"digits", mode.digits}};
      print_json(envelope("expand", std::move(params),
                          {{"coefficients", coeff_json},
                           {"evaluations", std::move(evaluations)}},
                          elapsed));
      break;
    }
    case OutputFormat::csv:
      if (evals.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k < coeff_strings.size(); ++k)
          rows.push_back({std::to_string(k), coeff_strings[k]});
        print_csv({"k", "coefficient"}, rows);
      } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : evals)
          rows.push_back({row.x, row.product, row.poly, row.cos});
        print_csv({"x", "product", "poly", "cos_reference"}, rows);
      }
      break;
  }
  return kExitOk;
}

int cmd_oracle(const OracleArgs& args) {
  const auto start = Clock::now();
  const int digits = resolve_digits(args.common);
  const NumberMode mode = resolve_mode(args.common, NumberKind::rational, digits);
  const OutputFormat format = resolve_format(args.common);

  if (mode.kind != NumberKind::rational)
    throw Error("oracle compares exact values; only rational mode is supported");
  if (args.count < 1) throw Error("oracle needs at least one term");

  const std::uint64_t tuples =
      binomial_capped(args.count, args.order, kBruteforceTupleLimit);
  if (tuples > kBruteforceTupleLimit)
    throw GuardError("oracle cost C(" + std::to_string(args.count) + ", " +
                     std::to_string(args.order) + ") exceeds the limit of " +
                     std::to_string(kBruteforceTupleLimit) +
                     " tuples; shrink M or n");

  const auto dp = esp_dp<Rational>(args.count, args.order);
  const auto newton = esp_newton<Rational>(args.count, args.order);
  const auto brute = esp_bruteforce<Rational>(args.count, args.order);

  bool all_equal = true;
  std::vector<std::vector<std::string>> rows;
  nlohmann::json orders = nlohmann::json::array();
  for (int k = 0; k <= args.order; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const bool equal = dp.e[i] == newton.e[i] && dp.e[i] == brute[i];
    all_equal = all_equal && equal;
    rows.push_back({std::to_string(k), format_rational(dp.e[i]),
                    format_rational(newton.e[i]), format_rational(brute[i]),
                    bool_name(equal)});
    orders.push_back({{"k", k},
                      {"dp", format_rational(dp.e[i])},
                      {"newton", format_rational(newton.e[i])},
                      {"bruteforce", format_rational(brute[i])},
                      {"equal", equal}});
  }
  const double elapsed = seconds_since(start);

  switch (format) {
    case OutputFormat::table:
      print_table({"k", "dp", "newton", "bruteforce", "equal"}, rows);
      std::cout << (all_equal ? "all orders agree" : "MISMATCH between engines")
                << " (C(M,n) = " << tuples << " tuples)\n";
      break;
    case OutputFormat::json:
      print_json(envelope("oracle", base_params(args.order, args.count, mode),
                          {{"orders", std::move(orders)},
                           {"all_equal", all_equal},
                           {"tuple_count", tuples}},
                          elapsed));
      break;
    case OutputFormat::csv:
      print_csv({"k", "dp", "newton", "bruteforce", "equal"}, rows);
      break;
  }
  return all_equal ? kExitOk : kExitCheckFailed;
}

namespace {

enum class Engine { naive, dp, newton };

Engine engine_from_name(const std::string& name) {
  if (name == "naive") return Engine::naive;
  if (name == "dp") return Engine::dp;
  if (name == "newton") return Engine::newton;
  throw Error("unknown engine '" + name + "' (expected naive, dp or newton)");
}

template <class T>
T run_engine(Engine engine, int order, std::int64_t count) {
  switch (engine) {
    case Engine::naive:
      return nested_sum_naive<T>(count, order);
    case Engine::dp:
      return esp_dp<T>(count, order).e[static_cast<std::size_t>(order)];
    case Engine::newton:
      return esp_newton<T>(count, order).e[static_cast<std::size_t>(order)];
  }
  throw Error("unrecognized engine");
}

/// Engines must reproduce each other to a relative 1e-9 within one M.
constexpr double kBenchAgreementTolerance = 1e-9;

}  // namespace

int cmd_bench(const BenchArgs& args) {
  const auto start = Clock::now();
  const int digits = resolve_digits(args.common);
  const NumberMode mode = resolve_mode(args.common, NumberKind::float64, digits);
  const OutputFormat format = resolve_format(args.common);

  if (args.order < 1) throw Error("bench order must be >= 1");
  if (args.counts.empty()) throw Error("bench needs at least one -M value");
  if (args.reps < 1) throw Error("bench reps must be >= 1");

  std::vector<Engine> engines;
  if (args.engines.empty()) {
    engines = {Engine::naive, Engine::dp, Engine::newton};
  } else {
    for (const std::string& name : args.engines)
      engines.push_back(engine_from_name(name));
  }
  const char* engine_names[] = {"naive", "dp", "newton"};

  bool agreement_ok = true;
  double worst_spread = 0.0;
  std::vector<std::vector<std::string>> rows;
  nlohmann::json json_rows = nlohmann::json::array();

  for (const std::int64_t count : args.counts) {
    if (count < 1) throw Error("bench needs M >= 1");

    // Exact checksum while exact evaluation stays cheap; it pins down the
    // value the timed engines are supposed to reproduce.
    std::string checksum = "-";
    if (count <= 1000)
      checksum =
          hex64(fnv1a64(format_rational(nested_partial<Rational>(args.order, count))));

    std::vector<double> values;
    for (const Engine engine : engines) {
      double best = 0.0;
      double value = 0.0;
      for (int rep = 0; rep < args.reps; ++rep) {
        const auto t0 = Clock::now();
        const double projected = dispatch(mode, [&]<class T>(ScalarTag<T>) {
          const BigFloat wide = widen(run_engine<T>(engine, args.order, count));
          return wide.convert_to<double>();
        });
        const double elapsed = seconds_since(t0);
        if (rep == 0 || elapsed < best) best = elapsed;
        value = projected;
      }
      values.push_back(value);
      rows.push_back({engine_names[static_cast<int>(engine)],
                      std::to_string(args.order), std::to_string(count),
                      std::to_string(args.reps), format_double(best),
                      format_double(value), checksum});
      json_rows.push_back({{"engine", engine_names[static_cast<int>(engine)]},
                           {"n", args.order},
                           {"M", count},
                           {"reps", args.reps},
                           {"seconds", best},
                           {"value", value},
                           {"checksum", checksum}});
    }

    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double scale = std::max(std::abs(*lo), std::abs(*hi));
    const double spread = scale > 0 ? (*hi - *lo) / scale : 0.0;
    worst_spread = std::max(worst_spread, spread);
    if (spread > kBenchAgreementTolerance) agreement_ok = false;
  }
  const double elapsed = seconds_since(start);

  switch (format) {
    case OutputFormat::table:
      print_table({"engine", "n", "M", "reps", "seconds", "value", "checksum"}, rows);
      std::cout << "agreement " << (agreement_ok ? "ok" : "FAILED")
                << " (max relative spread " << format_double(worst_spread) << ")\n";
      break;
    case OutputFormat::json: {
      nlohmann::json params = {{"n", args.order},
                               {"M", args.counts},
                               {"reps", args.reps},
                               {"mode", kind_name(mode.kind)},
                               {"digits", mode.digits}};
      print_json(envelope("bench", std::move(params),
                          {{"rows", std::move(json_rows)},
                           {"agreement_ok", agreement_ok},
                           {"max_rel_spread", worst_spread}},
                          elapsed));
      break;
    }
    case OutputFormat::csv:
      print_csv({"engine", "n", "M", "reps", "seconds", "value", "checksum"}, rows);
      break;
  }
  return agreement_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace piesp::cli
