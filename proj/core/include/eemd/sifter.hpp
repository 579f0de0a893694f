#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eemd/envelope.hpp"
#include "eemd/types.hpp"

namespace eemd {

/// Bookkeeping for the S-number stopping rule across sifting iterations.
///
/// An iteration is stable when the extrema and zero-crossing counts are
/// unchanged from the previous iteration, or when exactly one of them moved
/// by exactly one (finite precision can make a count flicker between two
/// neighbouring values). The streak grows on iterations that are stable and
/// satisfy |extrema - zero crossings| <= 1, and resets otherwise.
class SiftState {
 public:
  /// Records the counts measured before sifting number iteration()+1 and
  /// returns the updated streak.
  unsigned observe(const ExtremaCounts& counts);

  /// Counts an applied sifting.
  void advance() noexcept { ++iteration_; }

  std::size_t iteration() const noexcept { return iteration_; }
  unsigned stability_streak() const noexcept { return streak_; }
  const std::optional<ExtremaCounts>& prev_counts() const noexcept { return prev_; }

 private:
  std::size_t iteration_ = 0;
  unsigned streak_ = 0;
  std::optional<ExtremaCounts> prev_;
};

enum class StopReason {
  SiftingCap,  // num_siftings iterations applied
  SNumber,     // S consecutive stable, IMF-compliant iterations
  NoExtrema,   // nothing left to sift
};

struct SiftReport {
  std::size_t siftings = 0;
  StopReason reason = StopReason::SiftingCap;
  ExtremaCounts last_counts;  // counts of the returned signal when measured
};

/// Per-thread scratch buffers for sifting.
struct SiftWorkspace {
  EnvelopeWorkspace envelope;
  std::vector<double> mean;
  std::vector<double> current;
};

struct SiftResult {
  std::vector<double> sifted;
  ExtremaCounts counts;  // of the input, before subtraction
};

/// One sifting step: signal minus its local mean.
SiftResult sift_once(std::span<const double> signal);

/// Sifts until a stopping rule fires and returns the resulting IMF.
/// `params` must already be validated.
std::vector<double> extract_imf(std::span<const double> signal, const DecompositionParams& params);

/// Workspace form writing the IMF into `imf` (resized to signal.size()).
SiftReport extract_imf(std::span<const double> signal, const DecompositionParams& params,
                       SiftWorkspace& ws, std::vector<double>& imf);

/// Empirical mode decomposition. Extracts IMFs from the running residual
/// until num_imfs - 1 rows are filled or the residual has fewer than two
/// interior extrema. Requires ensemble_size 1 and zero noise.
ImfMatrix emd(std::span<const double> signal, const DecompositionParams& params);

/// Workspace form; params must be validated with num_imfs resolved.
void emd_into(std::span<const double> signal, const DecompositionParams& params,
              SiftWorkspace& ws, ImfMatrix& out);

}  // namespace eemd
