#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eemd/extrema.hpp"
#include "eemd/types.hpp"

namespace eemd {

/**
 * Piecewise polynomial interpolant through K >= 2 knots.
 *
 * K = 2 gives the straight line, K = 3 the interpolating parabola and
 * K >= 4 the cubic spline with not-a-knot end conditions (third derivative
 * continuous across the second and the second-to-last knot). On interval i
 * the value at x is a[i] + b[i] t + c[i] t^2 + d[i] t^3 with t = x - knot i.
 */
class CubicSplineEnvelope {
 public:
  enum class Degree { Linear, Quadratic, Cubic };

  CubicSplineEnvelope() = default;

  /// Refits in place, reusing allocated storage. Throws Error(DegenerateKnots)
  /// or Error(NonFinite).
  void fit(std::span<const Point> knots);

  Degree degree() const noexcept { return degree_; }
  std::size_t num_knots() const noexcept { return x_.size(); }
  std::span<const double> knot_abscissas() const noexcept { return x_; }
  double domain_begin() const { return x_.front(); }
  double domain_end() const { return x_.back(); }

  /// Value at an arbitrary abscissa; outside the domain the end polynomials
  /// are extended.
  double operator()(double at) const;

  /// Values at 0, 1, ..., out.size()-1. Throws Error(DomainMismatch) unless
  /// the knots span that range.
  void evaluate_grid(std::span<double> out) const;

 private:
  std::size_t interval_of(double at) const;

  Degree degree_ = Degree::Linear;
  std::vector<double> x_;
  std::vector<double> a_, b_, c_, d_;
  double last_y_ = 0.0;
  std::vector<double> scratch_;
};

/// Fits the envelope through `knots` (strictly increasing abscissas).
CubicSplineEnvelope fit_envelope(std::span<const Point> knots);

/// Samples the envelope at abscissas 0..n-1.
std::vector<double> evaluate_envelope(const CubicSplineEnvelope& spline, std::size_t n);

/// Structural counts of a signal used by the sifting stopping rule.
/// Extrema counts refer to interior extrema only.
struct ExtremaCounts {
  std::size_t num_maxima = 0;
  std::size_t num_minima = 0;
  std::size_t num_zero_crossings = 0;

  std::size_t num_extrema() const noexcept { return num_maxima + num_minima; }

  friend bool operator==(const ExtremaCounts&, const ExtremaCounts&) = default;
};

struct LocalMean {
  std::vector<double> mean;
  ExtremaCounts counts;
};

/// Reusable scratch storage for repeated local-mean computations on one
/// thread.
struct EnvelopeWorkspace {
  ExtremaSet extrema;
  CubicSplineEnvelope upper;
  CubicSplineEnvelope lower;
  std::vector<double> lower_values;
};

/// Average of the upper and lower spline envelopes of `signal`. If the
/// signal has no interior extrema the mean is the signal itself.
LocalMean local_mean(std::span<const double> signal);

/// Workspace form: writes the mean into `mean` (resized to signal.size()).
ExtremaCounts local_mean(std::span<const double> signal, EnvelopeWorkspace& ws,
                         std::vector<double>& mean);

}  // namespace eemd
