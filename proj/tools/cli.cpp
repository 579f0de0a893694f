#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "eemd/ensemble.hpp"
#include "eemd/sifter.hpp"

namespace eemd::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

enum class Delimiter { Comma, Tab, Whitespace };

Delimiter detect_delimiter(std::string_view line) {
  if (line.find(',') != std::string_view::npos) return Delimiter::Comma;
  if (line.find('\t') != std::string_view::npos) return Delimiter::Tab;
  return Delimiter::Whitespace;
}

std::vector<std::string_view> split(std::string_view line, Delimiter delim) {
  std::vector<std::string_view> fields;
  if (delim == Delimiter::Whitespace) {
    std::size_t pos = 0;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string_view::npos) break;
      const auto end = line.find_first_of(" \t\r", pos);
      fields.push_back(line.substr(pos, end == std::string_view::npos ? end : end - pos));
      pos = end;
    }
    return fields;
  }
  const char sep = delim == Delimiter::Comma ? ',' : '\t';
  std::size_t pos = 0;
  while (true) {
    const auto end = line.find(sep, pos);
    fields.push_back(trim(line.substr(pos, end == std::string_view::npos ? end : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return fields;
}

double parse_number(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw DataError("line " + std::to_string(line_no) + ": not a number: '" +
                    std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::Emd: return "emd";
    case Method::Eemd: return "eemd";
    case Method::Ceemdan: return "ceemdan";
  }
  return "?";
}

CliConfig parse_config(const std::vector<std::string>& args) {
  CliConfig config;
  CLI::App app{"Empirical mode decomposition (EMD, EEMD, CEEMDAN) of a time series", "eemd"};

  const std::map<std::string, Method> methods{
      {"emd", Method::Emd}, {"eemd", Method::Eemd}, {"ceemdan", Method::Ceemdan}};

  app.add_option("-i,--input", config.input_path, "Input file with one sample per row")
      ->required();
  app.add_option("-o,--output", config.output_path, "Output file, '-' for standard output")
      ->capture_default_str();
  std::string method = "eemd";
  app.add_option("--method", method, "Decomposition method")
      ->check(CLI::IsMember({"emd", "eemd", "ceemdan"}, CLI::ignore_case).description(""))
      ->option_text("{emd,eemd,ceemdan} [eemd]");
  app.add_option("--column", config.column, "Zero-based column to read")
      ->capture_default_str();
  app.add_flag("--header", config.has_header, "Skip the first data line");
  app.add_option("--num-imfs", config.params.num_imfs,
                 "Output rows including the residual (0 = floor(log2 N))")
      ->capture_default_str();
  app.add_option("--s-number", config.params.s_number, "S-number stopping rule (0 = off)")
      ->capture_default_str();
  app.add_option("--num-siftings", config.params.num_siftings,
                 "Maximum siftings per IMF (0 = no cap)")
      ->capture_default_str();
  app.add_option("--ensemble-size", config.params.ensemble_size, "Ensemble members")
      ->capture_default_str();
  app.add_option("--noise-strength", config.params.noise_strength,
                 "Noise std relative to the input std")
      ->capture_default_str();
  app.add_option("--seed", config.params.rng_seed, "RNG seed (0 = from entropy)")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(kSuccess, app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(kUsageError, std::string(e.what()) + "\nRun with --help for usage.");
  }

  std::transform(method.begin(), method.end(), method.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  config.method = methods.at(method);

  if (config.input_path.empty()) throw UsageError(kUsageError, "input path is empty");
  if (config.output_path.empty()) throw UsageError(kUsageError, "output path is empty");

  if (config.method == Method::Emd) {
    config.params.ensemble_size = 1;
    config.params.noise_strength = 0.0;
  }
  try {
    check_params(config.params);
  } catch (const Error& e) {
    throw UsageError(kUsageError, e.what());
  }
  return config;
}

std::vector<double> read_series(std::istream& in, std::size_t column, bool has_header) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = has_header;
  std::optional<Delimiter> delim;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    if (!delim) delim = detect_delimiter(view);
    const auto fields = split(view, *delim);
    if (column >= fields.size()) {
      throw DataError("line " + std::to_string(line_no) + ": no column " +
                      std::to_string(column));
    }
    values.push_back(parse_number(fields[column], line_no));
  }
  if (in.bad()) throw DataError("read error");
  return values;
}

void write_imfs(std::ostream& out, const ImfMatrix& imfs) {
  const std::size_t rows = imfs.rows();
  std::string text;
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    text += "imf" + std::to_string(r + 1) + ",";
  }
  text += "residual\n";
  out << text;

  std::array<char, 40> buf{};
  for (std::size_t c = 0; c < imfs.cols(); ++c) {
    text.clear();
    for (std::size_t r = 0; r < rows; ++r) {
      const auto [ptr, ec] =
          std::to_chars(buf.data(), buf.data() + buf.size(), imfs(r, c),
                        std::chars_format::general, 17);
      text.append(buf.data(), ptr);
      text += (r + 1 < rows) ? ',' : '\n';
    }
    out << text;
  }
}

int run(const CliConfig& config, std::ostream& err) {
  try {
    std::ifstream in(config.input_path);
    if (!in) {
      throw DataError("cannot open input file '" + config.input_path + "'");
    }
    const std::vector<double> series = read_series(in, config.column, config.has_header);

    const EnsembleOptions options{config.threads};
    ImfMatrix imfs;
    switch (config.method) {
      case Method::Emd: imfs = emd(series, config.params); break;
      case Method::Eemd: imfs = eemd(series, config.params, options); break;
      case Method::Ceemdan: imfs = ceemdan(series, config.params, options); break;
    }

    if (config.output_path == "-") {
      write_imfs(std::cout, imfs);
      std::cout.flush();
      if (!std::cout) throw DataError("failed writing to standard output");
    } else {
      std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
      if (!out) throw DataError("cannot open output file '" + config.output_path + "'");
      write_imfs(out, imfs);
      out.close();
      if (!out) throw DataError("failed writing '" + config.output_path + "'");
    }
  } catch (const std::exception& e) {
    err << "eemd: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kSuccess;
}

}  // namespace eemd::cli
