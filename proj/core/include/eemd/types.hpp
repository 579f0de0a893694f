#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eemd {

/// Failure categories reported by the library.
enum class Errc {
  NoStoppingRule,    // both S-number and sifting cap disabled
  NoiseMismatch,     // ensemble_size == 1 must pair with zero noise
  SignalTooShort,    // fewer than 4 samples
  NonFinite,         // NaN or infinity in data
  InvalidParameter,  // out-of-domain numeric parameter
  DegenerateKnots,   // spline knots too few or not increasing
  DomainMismatch,    // spline domain does not cover the sample grid
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// A point on the sample axis. Abscissas may be half-integers.
struct Point {
  double x;
  double y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Finite samples at unit spacing, abscissas 0..N-1.
class Signal {
 public:
  /// Throws Error(NonFinite) for NaN/infinity and Error(SignalTooShort) when empty.
  explicit Signal(std::vector<double> samples);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }

  operator std::span<const double>() const noexcept { return samples_; }

 private:
  std::vector<double> samples_;
};

/// Decomposition settings. Zero values disable the corresponding feature
/// where noted.
struct DecompositionParams {
  std::size_t num_imfs = 0;  // rows including the residual; 0 selects default_num_imfs(n)
  unsigned s_number = 4;     // 0 disables the S-number criterion
  unsigned num_siftings = 50;  // 0 disables the sifting cap
  std::size_t ensemble_size = 250;
  double noise_strength = 0.2;  // relative to the input's population std
  std::uint64_t rng_seed = 0;   // 0 seeds from entropy

  /// Plain EMD settings: one member, no noise.
  static DecompositionParams emd_defaults() {
    DecompositionParams p;
    p.ensemble_size = 1;
    p.noise_strength = 0.0;
    return p;
  }
};

/// Checks the constraints that do not depend on the signal length.
void check_params(const DecompositionParams& params);

/// Full validation against a signal of length n. Returns the params with
/// num_imfs resolved (never 0). Throws Error with the first violated
/// constraint.
DecompositionParams validate_params(const DecompositionParams& params, std::size_t n);

/// max(2, floor(log2(n))) rows, residual included.
std::size_t default_num_imfs(std::size_t n);

/// Throws Error(NonFinite) if any sample is NaN or infinite.
void check_finite(std::span<const double> samples);

double mean(std::span<const double> x);

/// Standard deviation dividing by N.
double population_stddev(std::span<const double> x);

/// M x N decomposition result stored row-major. Rows 0..M-2 are IMFs in
/// order of decreasing local frequency, row M-1 is the residual.
class ImfMatrix {
 public:
  ImfMatrix() = default;
  ImfMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<double> residual() { return row(rows_ - 1); }
  std::span<const double> residual() const { return row(rows_ - 1); }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Number of IMF rows actually produced; the rest are zero.
  std::size_t num_extracted() const noexcept { return num_extracted_; }
  void set_num_extracted(std::size_t k) noexcept { num_extracted_ = k; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  /// Element-wise sum over all rows.
  std::vector<double> reconstruct() const;

  friend bool operator==(const ImfMatrix&, const ImfMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t num_extracted_ = 0;
  std::vector<double> data_;
};

}  // namespace eemd
