#include <gtest/gtest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "eemd/ensemble.hpp"
#include "support/test_support.hpp"

namespace eemd::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("eemd_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write_column(const fs::path& path, const std::vector<double>& x, const std::string& header = "") {
  std::ofstream out(path);
  if (!header.empty()) out << header << '\n';
  out.precision(17);
  for (double v : x) out << v << '\n';
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int status_of(const std::vector<std::string>& args) {
  try {
    parse_config(args);
    return kSuccess;
  } catch (const UsageError& e) {
    return e.status();
  }
}

TEST(ParseConfig, MethodAndSeed) {
  const auto c = parse_config({"-i", "x.csv", "--method", "ceemdan", "--seed", "42"});
  EXPECT_EQ(c.input_path, "x.csv");
  EXPECT_EQ(c.output_path, "-");
  EXPECT_EQ(c.method, Method::Ceemdan);
  EXPECT_EQ(c.params.rng_seed, 42u);
  EXPECT_EQ(c.params.s_number, 4u);
  EXPECT_EQ(c.params.num_siftings, 50u);
  EXPECT_EQ(c.params.ensemble_size, 250u);
  EXPECT_DOUBLE_EQ(c.params.noise_strength, 0.2);
  EXPECT_EQ(c.threads, 0u);
}

TEST(ParseConfig, DefaultsAndAllFlags) {
  const auto d = parse_config({"--input", "a.txt"});
  EXPECT_EQ(d.method, Method::Eemd);
  EXPECT_EQ(d.column, 0u);
  EXPECT_FALSE(d.has_header);

  const auto c = parse_config({"-i", "a", "-o", "b", "--column", "2", "--header", "--num-imfs", "5",
                               "--s-number", "6", "--num-siftings", "0", "--ensemble-size", "30",
                               "--noise-strength", "0.1", "--threads", "3"});
  EXPECT_EQ(c.output_path, "b");
  EXPECT_EQ(c.column, 2u);
  EXPECT_TRUE(c.has_header);
  EXPECT_EQ(c.params.num_imfs, 5u);
  EXPECT_EQ(c.params.s_number, 6u);
  EXPECT_EQ(c.params.num_siftings, 0u);
  EXPECT_EQ(c.params.ensemble_size, 30u);
  EXPECT_DOUBLE_EQ(c.params.noise_strength, 0.1);
  EXPECT_EQ(c.threads, 3u);
}

TEST(ParseConfig, EmdForcesSingleNoiselessMember) {
  const auto c = parse_config({"-i", "x", "--method", "emd", "--ensemble-size", "10"});
  EXPECT_EQ(c.params.ensemble_size, 1u);
  EXPECT_EQ(c.params.noise_strength, 0.0);
}

TEST(ParseConfig, UsageErrors) {
  EXPECT_EQ(status_of({"--method", "fft"}), kUsageError);
  EXPECT_EQ(status_of({"-i", "x", "--method", "fft"}), kUsageError);
  EXPECT_EQ(status_of({"-i", "x", "--bogus"}), kUsageError);
  EXPECT_EQ(status_of({}), kUsageError);
  EXPECT_EQ(status_of({"-i", "x", "--seed", "abc"}), kUsageError);
  EXPECT_EQ(status_of({"-i", "x", "--noise-strength", "0.2x"}), kUsageError);
  EXPECT_EQ(status_of({"--help"}), kSuccess);
}

TEST(ParseConfig, ValidationSurfacedAsUsageError) {
  try {
    parse_config({"-i", "x.csv", "--ensemble-size", "1", "--noise-strength", "0.2"});
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_EQ(e.status(), kUsageError);
    EXPECT_NE(std::string(e.what()).find("NoiseMismatch"), std::string::npos);
  }
  EXPECT_EQ(status_of({"-i", "x", "--s-number", "0", "--num-siftings", "0"}), kUsageError);
}

TEST(ReadSeries, DelimitersHeaderAndColumns) {
  std::istringstream comma("t,value\n0,1.5\n1,-2\n\n2,3e-1\n");
  EXPECT_EQ(read_series(comma, 1, true), (std::vector<double>{1.5, -2.0, 0.3}));
  std::istringstream tabs("1\t10\n2\t20\n");
  EXPECT_EQ(read_series(tabs, 1, false), (std::vector<double>{10.0, 20.0}));
  std::istringstream spaces("  1   10 \n 2 20\n");
  EXPECT_EQ(read_series(spaces, 0, false), (std::vector<double>{1.0, 2.0}));
  std::istringstream plus("+4\n");
  EXPECT_EQ(read_series(plus, 0, false), (std::vector<double>{4.0}));
}

TEST(ReadSeries, Errors) {
  std::istringstream text("1\nabc\n");
  EXPECT_THROW(read_series(text, 0, false), DataError);
  std::istringstream narrow("1,2\n3\n");
  EXPECT_THROW(read_series(narrow, 1, false), DataError);
}

TEST(WriteImfs, HeaderShapeAndBitFaithfulRoundTrip) {
  const auto x = testing::normal_signal(4, 50);
  ImfMatrix m(3, 50);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t i = 0; i < 50; ++i) m(r, i) = x[i] * std::pow(10.0, double(r) * 7 - 7) / 3.0;
  std::ostringstream out;
  write_imfs(out, m);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "imf1,imf2,residual");
  for (std::size_t r = 0; r < 3; ++r) {
    std::istringstream again(out.str());
    EXPECT_EQ(read_series(again, r, true), std::vector<double>(m.row(r).begin(), m.row(r).end()));
  }
}

TEST(Run, DefaultShape) {
  TempDir dir;
  write_column(dir / "x.csv", testing::normal_signal(1, 512));
  const auto c = parse_config({"-i", (dir / "x.csv").string(), "-o", (dir / "out.csv").string(),
                               "--seed", "3", "--ensemble-size", "20"});
  std::ostringstream err;
  ASSERT_EQ(run(c, err), kSuccess) << err.str();
  std::istringstream out(slurp(dir / "out.csv"));
  std::string line;
  std::getline(out, line);
  EXPECT_EQ(line, "imf1,imf2,imf3,imf4,imf5,imf6,imf7,imf8,residual");
  std::size_t rows = 0;
  while (std::getline(out, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
  }
  EXPECT_EQ(rows, 512u);
}

TEST(Run, MonotoneRampEmd) {
  TempDir dir;
  std::vector<double> ramp(64);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = 0.5 * static_cast<double>(i) - 3.0;
  write_column(dir / "ramp.txt", ramp, "value");
  const auto c = parse_config({"-i", (dir / "ramp.txt").string(), "-o",
                               (dir / "out.csv").string(), "--method", "emd", "--num-imfs", "3",
                               "--header"});
  std::ostringstream err;
  ASSERT_EQ(run(c, err), kSuccess) << err.str();
  std::istringstream out(slurp(dir / "out.csv"));
  std::istringstream out1(out.str()), out2(out.str());
  EXPECT_EQ(read_series(out, 0, true), std::vector<double>(64, 0.0));
  EXPECT_EQ(read_series(out1, 1, true), std::vector<double>(64, 0.0));
  EXPECT_EQ(read_series(out2, 2, true), ramp);
}

TEST(Run, ColumnSumsReconstructInput) {
  TempDir dir;
  const auto x = testing::normal_signal(2, 256);
  write_column(dir / "x.csv", x);
  const auto c = parse_config({"-i", (dir / "x.csv").string(), "-o", (dir / "o.csv").string(),
                               "--method", "ceemdan", "--ensemble-size", "10", "--seed", "8"});
  std::ostringstream err;
  ASSERT_EQ(run(c, err), kSuccess);
  const std::string text = slurp(dir / "o.csv");
  std::vector<double> sum(x.size(), 0.0);
  for (std::size_t col = 0; col < default_num_imfs(256); ++col) {
    std::istringstream in(text);
    const auto v = read_series(in, col, true);
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
  }
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(sum[i], x[i], 1e-9);
}

TEST(Run, ThreadCountDoesNotChangeOutputBytes) {
  TempDir dir;
  write_column(dir / "x.csv", testing::normal_signal(6, 300));
  auto run_with = [&](const std::string& threads, const std::string& out) {
    const auto c = parse_config({"-i", (dir / "x.csv").string(), "-o", (dir / out).string(),
                                 "--method", "ceemdan", "--ensemble-size", "24", "--seed", "42",
                                 "--threads", threads});
    std::ostringstream err;
    EXPECT_EQ(run(c, err), kSuccess);
    return slurp(dir / out);
  };
  const auto a = run_with("1", "a.csv");
  EXPECT_EQ(a, run_with("4", "b.csv"));
  EXPECT_FALSE(a.empty());
}

TEST(Run, MatchesLibraryBitForBit) {
  TempDir dir;
  const auto x = testing::normal_signal(10, 128);
  write_column(dir / "x.csv", x);
  const auto c = parse_config({"-i", (dir / "x.csv").string(), "-o", (dir / "o.csv").string(),
                               "--method", "ceemdan", "--ensemble-size", "16", "--seed", "42"});
  std::ostringstream err;
  ASSERT_EQ(run(c, err), kSuccess);
  DecompositionParams p;
  p.ensemble_size = 16;
  p.rng_seed = 42;
  const auto m = ceemdan(x, p);
  const std::string text = slurp(dir / "o.csv");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::istringstream in(text);
    EXPECT_EQ(read_series(in, r, true), std::vector<double>(m.row(r).begin(), m.row(r).end()));
  }
}

TEST(Run, RuntimeErrorsExitOne) {
  TempDir dir;
  std::ostringstream err;
  auto c = parse_config({"-i", (dir / "missing.csv").string()});
  EXPECT_EQ(run(c, err), kRuntimeError);
  EXPECT_NE(err.str().find("cannot open"), std::string::npos);

  {
    std::ofstream bad(dir / "bad.csv");
    bad << "1\n2\nx\n4\n";
  }
  c = parse_config({"-i", (dir / "bad.csv").string(), "-o", (dir / "o.csv").string()});
  EXPECT_EQ(run(c, err), kRuntimeError);

  write_column(dir / "short.csv", {1.0, 2.0, 3.0});
  c = parse_config({"-i", (dir / "short.csv").string(), "-o", (dir / "o.csv").string()});
  err.str("");
  EXPECT_EQ(run(c, err), kRuntimeError);
  EXPECT_NE(err.str().find("SignalTooShort"), std::string::npos);
}

}  // namespace
}  // namespace eemd::cli
