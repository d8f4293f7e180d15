#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "truss/witness.hpp"

namespace truss::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kParse = 3,
  kValidation = 4,
  kIo = 5,
  kCapacity = 6,
  kInfeasible = 7,
  kInternal = 8,
};

// Environment variable overriding the default witness memory cap (bytes).
inline constexpr const char* kMemCapEnv = "TRUSS_MEM_CAP";

struct RunConfig {
  std::string command;     // stats, triangles, truss, truncated-truss, components, generate, verify, bench
  std::string subcommand;  // generator name or verification kind
  std::optional<std::string> input;   // stdin when unset
  std::optional<std::string> output;  // stdout when unset
  int verbosity = 0;

  bool counts = false;     // triangles --counts
  bool histogram = false;  // truss --histogram
  bool json = false;       // verify --json
  bool drop_isolated = false;

  std::uint32_t k = 0;
  WitnessConfig witness;

  // Generator sizes.
  std::uint32_t s = 1;
  std::uint32_t n = 0;
  std::uint32_t added = 1;
  std::uint32_t faces_i = 0;
  std::uint32_t faces_t = 4;
  std::optional<std::string> receipt_path;

  // bench: named family and sizes instead of an input graph.
  std::optional<std::string> family;
  std::vector<std::uint32_t> sizes;
  double p = 0.1;
};

// Parses argv (without the program name) into a RunConfig. Returns nullopt
// after printing help or a usage error to `out`/`err`; `status` receives the
// exit code in that case.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& status);

// Executes a parsed configuration. Errors are reported on `err` and mapped
// to ExitCode values; nothing escapes as an exception.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace truss::cli
