#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common_options(CLI::App* cmd, piesp::cli::CommonOptions& options) {
  cmd->add_option("--mode", options.mode,
                  "arithmetic mode: rational, f64 or decimal");
  cmd->add_option("--digits", options.digits,
                  "significant digits for decimal output, 16..100 "
                  "(default 50, or the PI_ESP_DIGITS environment variable)");
  cmd->add_option("--format", options.format,
                  "output format: table, json or csv "
                  "(default: table on a terminal, json otherwise)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace piesp::cli;

  CLI::App app{
      "Nested sums of reciprocal odd squares: the order-n sum over the first M\n"
      "terms approaches (pi/2)^(2n)/(2n)!, and these commands compute, verify\n"
      "and benchmark that approach."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "piesp 0.1.0");

  PartialArgs partial_args;
  auto* partial = app.add_subcommand(
      "partial", "Order-n nested partial sum over the first M terms");
  partial->add_option("-n,--order", partial_args.order, "nested sum order, >= 1")
      ->required();
  partial->add_option("-M,--terms", partial_args.count, "number of terms, >= 0")
      ->required();
  add_common_options(partial, partial_args.common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Compare the partial sum against its closed-form target with a "
                "rigorous truncation bracket");
  verify->add_option("-n,--order", verify_args.order, "nested sum order, >= 1")
      ->required();
  verify->add_option("-M,--terms", verify_args.count, "number of terms, >= n")
      ->required();
  add_common_options(verify, verify_args.common);

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand(
      "expand", "Coefficients of the expanded cosine product, with optional "
                "side-by-side evaluation against the product and cos");
  expand->add_option("-M,--factors", expand_args.factor_count,
                     "number of product factors, >= 1")
      ->required();
  expand->add_option("--order", expand_args.order,
                     "truncate the expansion at x^(2*order); defaults to the "
                     "full expansion, which needs M <= 10000");
  expand->add_option("--eval", expand_args.eval_points,
                     "points to evaluate at (repeatable or comma-separated)")
      ->delimiter(',');
  add_common_options(expand, expand_args.common);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "Cross-check the three exact engines (dp, newton, brute force) "
                "for every order up to n");
  oracle->add_option("-n,--order", oracle_args.order, "highest order, >= 1")
      ->required();
  oracle->add_option("-M,--terms", oracle_args.count, "number of terms, >= 1")
      ->required();
  add_common_options(oracle, oracle_args.common);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "Time the engines and check that their values agree");
  bench->add_option("-n,--order", bench_args.order, "nested sum order, >= 1")
      ->required();
  bench->add_option("-M,--terms", bench_args.counts,
                    "term counts (repeatable or comma-separated)")
      ->required()
      ->delimiter(',');
  bench->add_option("--engines", bench_args.engines,
                    "engines to run: naive, dp, newton (default: all)")
      ->delimiter(',');
  bench->add_option("--reps", bench_args.reps,
                    "repetitions per engine; the best time is reported");
  add_common_options(bench, bench_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (partial->parsed()) return cmd_partial(partial_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (expand->parsed()) return cmd_expand(expand_args);
    if (oracle->parsed()) return cmd_oracle(oracle_args);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const piesp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
