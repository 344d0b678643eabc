#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace siegel::cli {

enum class CoeffMode { Rational, Prime1, Prime2, DualPrime };

struct RunManifest {
  std::string command;
  std::string target;  // catalog name or verify suite
  std::uint64_t seed = 7;
  int points = 10;
  int radius = 10;
  double eps = 1e-12;
  CoeffMode coeff_mode = CoeffMode::Rational;
  std::optional<std::string> cache_dir;
  std::optional<std::string> out;
  int jobs = 1;
  bool verbose = false;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

// Parses argv, runs the command, writes the JSON report to the manifest's output
// (or `out`) and diagnostics to `err`; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// The same, from an already parsed manifest; the report is returned in `json`.
int execute(const RunManifest& m, std::string& json, std::ostream& err);

}  // namespace siegel::cli
