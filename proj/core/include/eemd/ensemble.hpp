#pragma once

#include <cstddef>
#include <span>

#include "eemd/types.hpp"

namespace eemd {

struct EnsembleOptions {
  /// Worker threads; 0 uses std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Members are reduced in fixed blocks of this many, in ascending member
/// order, so results do not depend on the worker count.
inline constexpr std::size_t kReductionBlock = 8;

/**
 * Ensemble EMD.
 *
 * Every member decomposes the input plus Gaussian white noise of standard
 * deviation noise_strength * sigma_x, and corresponding rows are averaged
 * over the ensemble. The result is not an exact decomposition for nonzero
 * noise: the rows sum to the input plus the residual ensemble noise. With
 * ensemble_size 1 and zero noise the result is exactly emd().
 */
ImfMatrix eemd(std::span<const double> signal, const DecompositionParams& params,
               const EnsembleOptions& options = {});

/**
 * Complete ensemble EMD with adaptive noise.
 *
 * Averaging is done per extracted IMF: row k is the ensemble mean of the
 * first IMF of r_k + noise_strength * sigma(r_k) * n_{e,k}, where n_{e,0} is
 * member e's white noise and n_{e,k} for k >= 1 is the k-th EMD mode of
 * that noise rescaled to unit variance. The residual is formed by exact
 * subtraction, so the rows sum to the input up to rounding.
 */
ImfMatrix ceemdan(std::span<const double> signal, const DecompositionParams& params,
                  const EnsembleOptions& options = {});

}  // namespace eemd
