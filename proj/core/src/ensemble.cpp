#include "eemd/ensemble.hpp"

#include <algorithm>
#include <vector>

#include "eemd/extrema.hpp"
#include "eemd/noise.hpp"
#include "eemd/sifter.hpp"
#include "parallel.hpp"

namespace eemd {

namespace {

std::size_t num_blocks(std::size_t members) {
  return (members + kReductionBlock - 1) / kReductionBlock;
}

// Mean over members of member(e, worker), a span of `width` values. Members
// are summed in ascending order within fixed-size blocks and the block sums
// are then added in ascending block order.
template <typename Member>
std::vector<double> ensemble_mean(std::size_t members, std::size_t width, unsigned workers,
                                  Member&& member) {
  const std::size_t blocks = num_blocks(members);
  std::vector<double> partial(blocks * width, 0.0);
  detail::parallel_for(blocks, workers, [&](std::size_t b, unsigned worker) {
    double* acc = partial.data() + b * width;
    const std::size_t end = std::min(members, (b + 1) * kReductionBlock);
    for (std::size_t e = b * kReductionBlock; e < end; ++e) {
      const std::span<const double> r = member(e, worker);
      for (std::size_t i = 0; i < width; ++i) acc[i] += r[i];
    }
  });

  std::vector<double> total(width, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    const double* src = partial.data() + b * width;
    for (std::size_t i = 0; i < width; ++i) total[i] += src[i];
  }
  const double inv = 1.0 / static_cast<double>(members);
  for (double& v : total) v *= inv;
  return total;
}

std::size_t leading_nonzero_rows(const ImfMatrix& m) {
  std::size_t k = 0;
  while (k + 1 < m.rows()) {
    const auto r = m.row(k);
    if (std::all_of(r.begin(), r.end(), [](double v) { return v == 0.0; })) break;
    ++k;
  }
  return k;
}

struct Normalization {
  double scale = 1.0;      // input divided by this before processing
  double amplitude = 0.0;  // noise std in normalized units
};

Normalization normalize(std::span<const double> x, double noise_strength,
                        std::vector<double>& out) {
  const double sigma = population_stddev(x);
  Normalization norm;
  if (noise_strength > 0.0 && sigma > 0.0) {
    norm.scale = sigma;
    norm.amplitude = noise_strength;
  }
  out.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / norm.scale;
  return norm;
}

struct EemdScratch {
  SiftWorkspace ws;
  std::vector<double> input;
  ImfMatrix rows;
};

}  // namespace

ImfMatrix eemd(std::span<const double> signal, const DecompositionParams& params,
               const EnsembleOptions& options) {
  check_finite(signal);
  const DecompositionParams p = validate_params(params, signal.size());
  if (p.ensemble_size == 1) {
    return emd(signal, p);
  }

  const std::size_t n = signal.size();
  const std::size_t rows = p.num_imfs;
  const std::uint64_t seed = p.rng_seed != 0 ? p.rng_seed : entropy_seed();

  std::vector<double> xn;
  const Normalization norm = normalize(signal, p.noise_strength, xn);

  const unsigned workers =
      detail::resolve_workers(options.threads, num_blocks(p.ensemble_size));
  std::vector<EemdScratch> scratch(workers);

  const std::vector<double> mean = ensemble_mean(
      p.ensemble_size, rows * n, workers,
      [&](std::size_t e, unsigned worker) -> std::span<const double> {
        EemdScratch& s = scratch[worker];
        s.input.resize(n);
        generate_noise(NoiseStream{seed, e}, s.input);
        for (std::size_t i = 0; i < n; ++i) s.input[i] = xn[i] + norm.amplitude * s.input[i];
        emd_into(s.input, p, s.ws, s.rows);
        return s.rows.data();
      });

  ImfMatrix out(rows, n);
  std::transform(mean.begin(), mean.end(), out.data().begin(),
                 [&](double v) { return v * norm.scale; });
  out.set_num_extracted(leading_nonzero_rows(out));
  return out;
}

ImfMatrix ceemdan(std::span<const double> signal, const DecompositionParams& params,
                  const EnsembleOptions& options) {
  check_finite(signal);
  const DecompositionParams p = validate_params(params, signal.size());

  const std::size_t n = signal.size();
  const std::size_t rows = p.num_imfs;
  const std::size_t members = p.ensemble_size;
  const bool noisy = p.noise_strength > 0.0;
  const std::uint64_t seed = !noisy ? 0 : (p.rng_seed != 0 ? p.rng_seed : entropy_seed());

  std::vector<double> residual;
  const Normalization norm = normalize(signal, p.noise_strength, residual);

  const unsigned workers = detail::resolve_workers(options.threads, num_blocks(members));
  std::vector<SiftWorkspace> workspaces(workers);

  // Per member: row 0 is the raw white noise, row k >= 1 the k-th EMD mode
  // of that noise scaled to unit std. usable[e * (rows-1) + k] is false for
  // modes with zero variance.
  const std::size_t noise_rows = rows - 1;
  std::vector<std::vector<double>> noise(noisy ? members : 0);
  std::vector<char> usable(noisy ? members * noise_rows : 0, 0);
  if (noisy) {
    std::vector<ImfMatrix> modes(workers);
    detail::parallel_for(members, workers, [&](std::size_t e, unsigned worker) {
      std::vector<double>& w = noise[e];
      w.assign(noise_rows * n, 0.0);
      std::span<double> raw(w.data(), n);
      generate_noise(NoiseStream{seed, e}, raw);
      usable[e * noise_rows] = 1;
      if (noise_rows < 2) return;
      emd_into(raw, p, workspaces[worker], modes[worker]);
      for (std::size_t k = 1; k < noise_rows; ++k) {
        const auto mode = modes[worker].row(k - 1);
        const double sd = population_stddev(mode);
        if (sd <= 0.0) continue;
        usable[e * noise_rows + k] = 1;
        double* dst = w.data() + k * n;
        for (std::size_t i = 0; i < n; ++i) dst[i] = mode[i] / sd;
      }
    });
  }

  struct StageScratch {
    std::vector<double> input;
    std::vector<double> imf;
  };
  std::vector<StageScratch> scratch(workers);

  ImfMatrix out(rows, n);
  std::size_t extracted = 0;
  while (extracted + 1 < rows && count_extrema(residual) >= 2) {
    const std::size_t k = extracted;
    const double amp = norm.amplitude * population_stddev(residual);

    const std::vector<double> imf = ensemble_mean(
        members, n, workers, [&](std::size_t e, unsigned worker) -> std::span<const double> {
          StageScratch& s = scratch[worker];
          s.input.assign(residual.begin(), residual.end());
          if (noisy && usable[e * noise_rows + k]) {
            const double* w = noise[e].data() + k * n;
            for (std::size_t i = 0; i < n; ++i) s.input[i] += amp * w[i];
          }
          extract_imf(s.input, p, workspaces[worker], s.imf);
          return s.imf;
        });

    auto dst = out.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      residual[i] -= imf[i];
      dst[i] = imf[i] * norm.scale;
    }
    ++extracted;
  }

  // Residual in original units by exact subtraction of the rescaled rows.
  auto res = out.residual();
  std::copy(signal.begin(), signal.end(), res.begin());
  for (std::size_t r = 0; r < extracted; ++r) {
    const auto imf = out.row(r);
    for (std::size_t i = 0; i < n; ++i) res[i] -= imf[i];
  }
  out.set_num_extracted(extracted);
  return out;
}

}  // namespace eemd
