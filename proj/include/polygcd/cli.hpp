#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "polygcd/analysis.hpp"

namespace polygcd::cli {

enum class Subcommand { analyze, resultant, snf, brute_force, witness, period };

struct Caps {
  std::uint64_t brute_force = kDefaultBruteForceCap;
  std::size_t residue_listing = kDefaultResidueCap;
  std::size_t divisor_count = kDefaultDivisorCap;
};

struct CliConfig {
  Subcommand subcommand = Subcommand::analyze;
  std::string f_text;
  std::string g_text;
  /// snf only: matrix file, or "-" for standard input.
  std::string matrix_path = "-";
  bool transforms = false;
  bool json = false;
  bool verify = false;
  Caps caps;
  std::uint64_t seed = kDefaultFactorSeed;
};

enum ExitStatus : int {
  kOk = 0,
  kInputError = 1,
  kCapExceeded = 2,
  kInvariantBreach = 3,
};

/// Executes one subcommand. Reports go to `out`, diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err, std::istream& in);

/// Parses argv (and POLYGCD_SEED from the environment). Returns the config,
/// or the exit status to use when parsing ends the program (help, errors).
std::variant<CliConfig, int> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err);

}  // namespace polygcd::cli
