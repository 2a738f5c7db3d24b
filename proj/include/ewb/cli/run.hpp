#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ewb/io/json_io.hpp"

namespace ewb {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMalformedInput = 3;

/// Residual tolerance for the numeric suites.
inline constexpr const char* kResidualTolerance = "1e-35";
/// Agreement required for the closed-form spot values.
inline constexpr const char* kSpotTolerance = "1e-40";
/// Lower bound the negative control must exceed.
inline constexpr const char* kControlFloor = "1e-3";

struct CommandRequest {
  std::string subcommand;
  int N = 3;
  int k = 1;
  int D = 8;
  int u = 1;
  std::optional<int> a;  ///< residue: a single torsion index instead of all
  long precision = 200;
  std::optional<int> twist;  ///< kernel-relations projection; defaults to k
  int trials = 50;
  std::uint64_t seed = 20240601;
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> output;
};

struct RunResult {
  json report;
  int exit_code;  ///< kExitPass or kExitVerificationFailure
};

const std::vector<std::string>& subcommand_names();

/// Throws std::invalid_argument naming the offending parameter.
void validate(const CommandRequest& request);

/// Validates, runs the suite(s) and builds the report. Precondition
/// violations throw std::invalid_argument; malformed input throws SchemaError.
RunResult run(const CommandRequest& request);

/// Library version and linked arithmetic backends; constant for a build.
std::string toolchain_stamp();

}  // namespace ewb
