#include "eemd/types.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace eemd {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NoStoppingRule: return "NoStoppingRule";
    case Errc::NoiseMismatch: return "NoiseMismatch";
    case Errc::SignalTooShort: return "SignalTooShort";
    case Errc::NonFinite: return "NonFinite";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::DegenerateKnots: return "DegenerateKnots";
    case Errc::DomainMismatch: return "DomainMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

Signal::Signal(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw Error(Errc::SignalTooShort, "signal is empty");
  }
  check_finite(samples_);
}

void check_params(const DecompositionParams& params) {
  if (params.s_number == 0 && params.num_siftings == 0) {
    throw Error(Errc::NoStoppingRule, "S-number and num_siftings are both zero");
  }
  if (params.num_imfs == 1) {
    throw Error(Errc::InvalidParameter, "num_imfs must be at least 2 (one IMF plus the residual)");
  }
  if (params.ensemble_size == 0) {
    throw Error(Errc::InvalidParameter, "ensemble_size must be positive");
  }
  if (!std::isfinite(params.noise_strength) || params.noise_strength < 0.0) {
    throw Error(Errc::InvalidParameter, "noise_strength must be finite and non-negative");
  }
  if (params.ensemble_size == 1 && params.noise_strength != 0.0) {
    throw Error(Errc::NoiseMismatch, "ensemble_size 1 requires noise_strength 0");
  }
  if (params.ensemble_size > 1 && params.noise_strength == 0.0) {
    throw Error(Errc::NoiseMismatch, "ensemble_size > 1 requires positive noise_strength");
  }
}

DecompositionParams validate_params(const DecompositionParams& params, std::size_t n) {
  check_params(params);
  if (n < 4) {
    throw Error(Errc::SignalTooShort,
                "need at least 4 samples, got " + std::to_string(n));
  }
  DecompositionParams out = params;
  if (out.num_imfs == 0) {
    out.num_imfs = default_num_imfs(n);
  }
  return out;
}

std::size_t default_num_imfs(std::size_t n) {
  if (n < 4) {
    throw Error(Errc::SignalTooShort,
                "need at least 4 samples, got " + std::to_string(n));
  }
  // bit_width(n) - 1 == floor(log2(n)) for n > 0
  const auto log2n = static_cast<std::size_t>(std::bit_width(n)) - 1;
  return std::max<std::size_t>(2, log2n);
}

void check_finite(std::span<const double> samples) {
  const auto it = std::find_if(samples.begin(), samples.end(),
                               [](double v) { return !std::isfinite(v); });
  if (it != samples.end()) {
    throw Error(Errc::NonFinite, "sample " + std::to_string(it - samples.begin()) +
                                     " is not finite");
  }
}

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum / static_cast<double>(x.size());
}

double population_stddev(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const double mu = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(x.size()));
}

ImfMatrix::ImfMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

std::vector<double> ImfMatrix::reconstruct() const {
  std::vector<double> sum(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto src = row(r);
    for (std::size_t c = 0; c < cols_; ++c) sum[c] += src[c];
  }
  return sum;
}

}  // namespace eemd
