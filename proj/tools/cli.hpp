#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "eemd/types.hpp"

namespace eemd::cli {

enum class Method { Emd, Eemd, Ceemdan };

struct CliConfig {
  std::string input_path;
  std::string output_path = "-";  // "-" is standard output
  Method method = Method::Eemd;
  std::size_t column = 0;
  bool has_header = false;
  DecompositionParams params;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kSuccess = 0, kRuntimeError = 1, kUsageError = 2 };

/// Thrown by parse_config. status() is kUsageError for bad arguments and
/// kSuccess when help was requested; what() holds the text to print.
class UsageError : public std::runtime_error {
 public:
  UsageError(int status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

/// Parses arguments (without the program name).
CliConfig parse_config(const std::vector<std::string>& args);

/// Thrown for unreadable or malformed input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads one numeric column. Blank lines are skipped; the delimiter (comma,
/// tab, then whitespace) is detected on the first data line.
std::vector<double> read_series(std::istream& in, std::size_t column, bool has_header);

/// Writes the matrix column-per-row: header "imf1,...,imf{M-1},residual"
/// followed by N lines of M values with 17 significant digits.
void write_imfs(std::ostream& out, const ImfMatrix& imfs);

/// Decomposes according to config; diagnostics go to `err`.
int run(const CliConfig& config, std::ostream& err);

std::string_view method_name(Method method) noexcept;

}  // namespace eemd::cli
