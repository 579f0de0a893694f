#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eemd/types.hpp"

namespace eemd {

/// Interior local maxima and minima, each sorted by strictly increasing
/// abscissa.
struct ExtremaSet {
  std::vector<Point> maxima;
  std::vector<Point> minima;

  std::size_t count() const noexcept { return maxima.size() + minima.size(); }

  void clear() noexcept {
    maxima.clear();
    minima.clear();
  }
};

/**
 * Locates interior extrema of a sampled signal.
 *
 * A sample is a maximum when the slope before it is strictly positive and
 * the slope after it strictly negative. A run of equal samples between a
 * rising and a falling slope is a single maximum placed at the center of
 * the run (a half-integer abscissa for runs of even length). Minima are
 * symmetric. Runs touching either end of the signal and the endpoints
 * themselves are never extrema.
 */
ExtremaSet find_extrema(std::span<const double> signal);

/// Same as find_extrema, reusing the storage held by `out`.
void find_extrema(std::span<const double> signal, ExtremaSet& out);

/// Number of interior extrema without materializing them.
std::size_t count_extrema(std::span<const double> signal);

/// Sign changes between consecutive samples. A run of exact zeros counts
/// as one crossing when the samples on either side have opposite signs and
/// as none otherwise; leading and trailing zero runs never count.
std::size_t count_zero_crossings(std::span<const double> signal);

/**
 * Appends artificial extrema at abscissas 0 and N-1 to both lists.
 *
 * With at least two entries, the new end point is the straight line through
 * the two outermost extrema evaluated at the boundary. If that value is less
 * extremal than the boundary sample (below it for maxima, above it for
 * minima) the boundary sample is used instead. Lists with fewer than two
 * entries get the boundary samples directly.
 */
ExtremaSet extend_extrema(const ExtremaSet& extrema, std::span<const double> signal);

/// In-place variant of extend_extrema.
void extend_extrema_inplace(ExtremaSet& extrema, std::span<const double> signal);

}  // namespace eemd
