#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "gacfit/fit_engine.hpp"

namespace gacfit::cli {

enum class Command { Fit, Bench, Plot };
enum class OutputFormat { Json, Text };

struct CliConfig {
    Command command = Command::Fit;
    std::string input = "builtin:table3";
    FitMode mode = FitMode::General;
    FitMethod method = FitMethod::Eigen;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> svg_path;
    int grid = 512;
    double margin = 0.15;
    /// Write the loaded dataset back out as CSV.
    std::optional<std::string> dump_path;
};

/// Each returns the process exit status and throws gacfit::Error on failure.
int run_fit(const CliConfig& config, std::ostream& out);
int run_bench(const CliConfig& config, std::ostream& out);
/// Writes the SVG to `svg_path` and the fit report to `out`, or the SVG to
/// `out` when no path is set.
int run_plot(const CliConfig& config, std::ostream& out);

/// Parses arguments and dispatches. Every failure prints one JSON error
/// object to `err` and returns 1.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace gacfit::cli
