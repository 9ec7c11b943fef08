#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lpl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitRefusal = 2;

struct CliOptions {
  std::string command;
  std::optional<std::string> problem;
  std::optional<std::string> model;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  bool json = false;
  std::vector<std::string> polynomials;
};

struct CliResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

const std::vector<std::string>& cli_commands();

/// Executes one command. Never throws; errors become exit codes and messages.
/// JSON output is key-sorted and identical for identical inputs and seed.
CliResult run(const CliOptions& options);

}  // namespace lpl
