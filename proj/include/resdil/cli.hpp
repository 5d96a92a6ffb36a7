#pragma once

// Command-line front end: figure reproduction, generic sweeps, the Pauli QEC
// comparison and the selftest, all emitting CSV.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace resdil {

enum class Command { kFigure, kSweep, kQecCompare, kSelftest };

struct RunConfig {
  Command command = Command::kFigure;
  /// Flag values that were set explicitly (CLI or config file), keyed by flag
  /// name without dashes: lambda, gamma, T, p, alpha-range, q-range, pauli,
  /// alpha, u-grid, samples.
  std::map<std::string, std::string> parameters;
  /// "-" writes to stdout.
  std::filesystem::path output_path = "-";
  std::size_t grid_points = 200;
  std::uint64_t seed = 1;
  /// 0 = hardware concurrency.
  std::size_t workers = 0;

  void validate() const;
};

struct Table {
  /// Emitted as "# key=value" lines above the header.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// 12 significant digits, '.' decimal separator, '#' metadata lines first.
std::string to_csv(const Table& table);

/// Writes text to `path` ("-" = stdout). Throws IoError.
void write_output(const std::string& text, const std::filesystem::path& path, std::ostream& out);

/// name in fig2, fig3, fig4, fig5, figS2, figS3, figQEC; otherwise UnknownFigure.
Table run_figure(const std::string& name, const RunConfig& config);

/// spec in entanglement, coherence-pure, coherence-mixed, thermal, purity.
Table run_sweep(const std::string& spec, const RunConfig& config);

/// One row per Pauli vector: --pauli, or --samples random vectors drawn from
/// the seed.
Table run_qec_compare(const RunConfig& config);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitIo = 3;

/// Parses argv, runs the command and maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace resdil
