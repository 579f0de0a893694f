#include "eemd/sifter.hpp"

#include <algorithm>
#include <cstdlib>

#include "eemd/extrema.hpp"

namespace eemd {

namespace {

std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

unsigned SiftState::observe(const ExtremaCounts& counts) {
  const std::size_t extrema = counts.num_extrema();
  const std::size_t crossings = counts.num_zero_crossings;
  const bool imf_like = abs_diff(extrema, crossings) <= 1;

  bool stable = false;
  if (prev_) {
    const std::size_t de = abs_diff(extrema, prev_->num_extrema());
    const std::size_t dz = abs_diff(crossings, prev_->num_zero_crossings);
    stable = (de == 0 && dz == 0) || (de + dz == 1);
  }
  streak_ = (imf_like && stable) ? streak_ + 1 : 0;
  prev_ = counts;
  return streak_;
}

SiftResult sift_once(std::span<const double> signal) {
  LocalMean lm = local_mean(signal);
  SiftResult result{std::move(lm.mean), lm.counts};
  for (std::size_t i = 0; i < signal.size(); ++i) {
    result.sifted[i] = signal[i] - result.sifted[i];
  }
  return result;
}

SiftReport extract_imf(std::span<const double> signal, const DecompositionParams& params,
                       SiftWorkspace& ws, std::vector<double>& imf) {
  const std::size_t n = signal.size();
  imf.assign(signal.begin(), signal.end());

  SiftState state;
  SiftReport report;
  while (true) {
    if (params.num_siftings > 0 && state.iteration() == params.num_siftings) {
      report.reason = StopReason::SiftingCap;
      break;
    }
    const ExtremaCounts counts = local_mean(imf, ws.envelope, ws.mean);
    report.last_counts = counts;
    if (counts.num_extrema() == 0) {
      report.reason = StopReason::NoExtrema;
      break;
    }
    if (params.s_number > 0 && state.observe(counts) >= params.s_number) {
      report.reason = StopReason::SNumber;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) imf[i] -= ws.mean[i];
    state.advance();
  }
  report.siftings = state.iteration();
  return report;
}

std::vector<double> extract_imf(std::span<const double> signal,
                                const DecompositionParams& params) {
  SiftWorkspace ws;
  std::vector<double> imf;
  extract_imf(signal, params, ws, imf);
  return imf;
}

void emd_into(std::span<const double> signal, const DecompositionParams& params,
              SiftWorkspace& ws, ImfMatrix& out) {
  const std::size_t n = signal.size();
  const std::size_t rows = params.num_imfs;
  if (out.rows() != rows || out.cols() != n) {
    out = ImfMatrix(rows, n);
  } else {
    std::fill(out.data().begin(), out.data().end(), 0.0);
  }

  std::vector<double>& residual = ws.current;
  residual.assign(signal.begin(), signal.end());
  std::vector<double> imf;

  std::size_t extracted = 0;
  while (extracted + 1 < rows && count_extrema(residual) >= 2) {
    extract_imf(residual, params, ws, imf);
    auto dst = out.row(extracted);
    for (std::size_t i = 0; i < n; ++i) {
      dst[i] = imf[i];
      residual[i] -= imf[i];
    }
    ++extracted;
  }
  std::copy(residual.begin(), residual.end(), out.residual().begin());
  out.set_num_extracted(extracted);
}

ImfMatrix emd(std::span<const double> signal, const DecompositionParams& params) {
  check_finite(signal);
  const DecompositionParams p = validate_params(params, signal.size());
  if (p.ensemble_size != 1) {
    throw Error(Errc::NoiseMismatch, "emd requires ensemble_size 1 and noise_strength 0");
  }
  SiftWorkspace ws;
  ImfMatrix out;
  emd_into(signal, p, ws, out);
  return out;
}

}  // namespace eemd
