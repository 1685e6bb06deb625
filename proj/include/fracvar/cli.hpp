#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracvar/errors.hpp"
#include "fracvar/grid.hpp"

namespace fracvar {

// Bad command line or bad input data; exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
};

// Unreadable input or unwritable output; exit code 1.
class IOError : public Error {
public:
  using Error::Error;
};

enum class Command { frac_deriv, frac_int, sensitivity, action, el_residual, alpha_scan, root, example, sweep };
enum class OutputFormat { csv, json };

struct RunConfig {
  Command command = Command::example;
  std::optional<double> alpha;
  std::optional<double> alpha0;
  std::optional<double> beta;
  double c = 1.0;
  double d = 1.0;
  int n_intervals = 1024;
  std::vector<double> alpha_grid;
  std::optional<double> tol;
  std::string id;
  std::string in_path;
  std::string out_path;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
};

// Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

// "start:stop:step", inclusive of stop up to rounding.
std::vector<double> parse_grid(const std::string& spec);

// Runs the command and returns the process exit code; diagnostics go to err.
int execute(const RunConfig& config, std::ostream& err);

// Full CLI: parse, execute, map errors to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& err);

// 17 significant digits, which round-trips every double.
std::string format_double(double v);

// Two-column CSV (t, value) on a uniform grid starting at t = 0.
GridFunction read_grid_csv(const std::string& path);
std::string grid_to_csv(const GridFunction& f, const std::string& value_column);

}  // namespace fracvar
