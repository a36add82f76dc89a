#pragma once

#include "output.hpp"

#include "piesp/number.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace piesp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment override for the default --digits value.
inline constexpr const char* kDigitsEnv = "PI_ESP_DIGITS";

struct CommonOptions {
  std::optional<std::string> mode;
  std::optional<int> digits;
  std::optional<std::string> format;
};

/// --digits if given, else PI_ESP_DIGITS, else 50. Bad values throw Error.
int resolve_digits(const CommonOptions& options);

NumberMode resolve_mode(const CommonOptions& options, NumberKind default_kind,
                        int digits);

OutputFormat resolve_format(const CommonOptions& options);

struct PartialArgs {
  int order = 0;
  std::int64_t count = 0;
  CommonOptions common;
};

struct VerifyArgs {
  int order = 0;
  std::int64_t count = 0;
  CommonOptions common;
};

struct ExpandArgs {
  std::int64_t factor_count = 0;
  std::optional<int> order;
  std::vector<std::string> eval_points;
  CommonOptions common;
};

struct OracleArgs {
  int order = 0;
  std::int64_t count = 0;
  CommonOptions common;
};

struct BenchArgs {
  int order = 0;
  std::vector<std::int64_t> counts;
  std::vector<std::string> engines;
  int reps = 3;
  CommonOptions common;
};

int cmd_partial(const PartialArgs& args);
int cmd_verify(const VerifyArgs& args);
int cmd_expand(const ExpandArgs& args);
int cmd_oracle(const OracleArgs& args);
int cmd_bench(const BenchArgs& args);

}  // namespace piesp::cli
