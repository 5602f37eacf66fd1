#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace perlef::cli {

enum class Subcommand { Classify, Lefschetz, Zeta, Spectrum, Harness };
enum class OutputFormat { Text, Json };

struct RunConfig {
  Subcommand subcommand = Subcommand::Classify;
  std::string input_path;
  std::size_t max_m = 64;
  std::uint64_t hard_cap = 65536;
  OutputFormat output_format = OutputFormat::Text;
  std::size_t grid_resolution = 64;
  /// Output file, or directory when input_path is a directory. Empty: stdout.
  std::string out_path;
};

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kHypothesisViolated = 2,
  kWitnessNotFound = 3,
  kTheoremViolation = 4,
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs; used by the executable.
int main(int argc, char** argv);

}  // namespace perlef::cli
