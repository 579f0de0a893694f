#include "eemd/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eemd {

namespace {

// Solves a tridiagonal system in place (Thomas algorithm). On return `rhs`
// holds the solution. `sup` and `rhs` are overwritten.
void solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                       std::span<double> sup, std::span<double> rhs) {
  const std::size_t m = diag.size();
  double pivot = diag[0];
  sup[0] /= pivot;
  rhs[0] /= pivot;
  for (std::size_t r = 1; r < m; ++r) {
    pivot = diag[r] - sub[r] * sup[r - 1];
    if (r + 1 < m) sup[r] /= pivot;
    rhs[r] = (rhs[r] - sub[r] * rhs[r - 1]) / pivot;
  }
  for (std::size_t r = m - 1; r-- > 0;) {
    rhs[r] -= sup[r] * rhs[r + 1];
  }
}

}  // namespace

void CubicSplineEnvelope::fit(std::span<const Point> knots) {
  const std::size_t k = knots.size();
  if (k < 2) {
    throw Error(Errc::DegenerateKnots, "need at least 2 knots, got " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!std::isfinite(knots[i].x) || !std::isfinite(knots[i].y)) {
      throw Error(Errc::NonFinite, "knot " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(knots[i].x > knots[i - 1].x)) {
      throw Error(Errc::DegenerateKnots,
                  "knot abscissas not strictly increasing at " + std::to_string(i));
    }
  }

  const std::size_t intervals = k - 1;
  x_.resize(k);
  a_.resize(intervals);
  b_.resize(intervals);
  c_.resize(intervals);
  d_.resize(intervals);
  for (std::size_t i = 0; i < k; ++i) x_[i] = knots[i].x;
  for (std::size_t i = 0; i < intervals; ++i) a_[i] = knots[i].y;
  last_y_ = knots[k - 1].y;

  if (k == 2) {
    degree_ = Degree::Linear;
    b_[0] = (knots[1].y - knots[0].y) / (knots[1].x - knots[0].x);
    c_[0] = 0.0;
    d_[0] = 0.0;
    return;
  }

  if (k == 3) {
    degree_ = Degree::Quadratic;
    const double f01 = (knots[1].y - knots[0].y) / (knots[1].x - knots[0].x);
    const double f12 = (knots[2].y - knots[1].y) / (knots[2].x - knots[1].x);
    const double f012 = (f12 - f01) / (knots[2].x - knots[0].x);
    for (std::size_t i = 0; i < 2; ++i) {
      b_[i] = f01 + f012 * (2.0 * knots[i].x - knots[0].x - knots[1].x);
      c_[i] = f012;
      d_[i] = 0.0;
    }
    return;
  }

  degree_ = Degree::Cubic;

  // Unknowns are the second derivatives at the interior knots 1..k-2. The
  // not-a-knot conditions express the end second derivatives through their
  // neighbours and are folded into the first and last rows, which keeps the
  // system tridiagonal.
  const std::size_t m = k - 2;
  scratch_.resize(4 * m + 2 * k);
  std::span<double> sub(scratch_.data(), m);
  std::span<double> diag(scratch_.data() + m, m);
  std::span<double> sup(scratch_.data() + 2 * m, m);
  std::span<double> rhs(scratch_.data() + 3 * m, m);
  std::span<double> h(scratch_.data() + 4 * m, k);
  std::span<double> moments(scratch_.data() + 4 * m + k, k);

  for (std::size_t i = 0; i < intervals; ++i) h[i] = x_[i + 1] - x_[i];
  // slopes reuse b_ until the final coefficients are written
  for (std::size_t i = 0; i < intervals; ++i) b_[i] = (knots[i + 1].y - knots[i].y) / h[i];

  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t i = r + 1;
    sub[r] = h[i - 1];
    diag[r] = 2.0 * (h[i - 1] + h[i]);
    sup[r] = h[i];
    rhs[r] = 6.0 * (b_[i] - b_[i - 1]);
  }
  {
    const double h0 = h[0];
    const double h1 = h[1];
    diag[0] = (h0 + h1) * (h0 + 2.0 * h1) / h1;
    sup[0] = (h1 - h0) * (h1 + h0) / h1;
  }
  {
    const double ha = h[k - 3];
    const double hb = h[k - 2];
    sub[m - 1] = (ha - hb) * (ha + hb) / ha;
    diag[m - 1] = (ha + hb) * (2.0 * ha + hb) / ha;
  }
  sub[0] = 0.0;
  sup[m - 1] = 0.0;

  solve_tridiagonal(sub, diag, sup, rhs);

  for (std::size_t r = 0; r < m; ++r) moments[r + 1] = rhs[r];
  moments[0] = moments[1] + h[0] / h[1] * (moments[1] - moments[2]);
  moments[k - 1] = moments[k - 2] + h[k - 2] / h[k - 3] * (moments[k - 2] - moments[k - 3]);

  for (std::size_t i = 0; i < intervals; ++i) {
    const double slope = b_[i];
    b_[i] = slope - h[i] * (2.0 * moments[i] + moments[i + 1]) / 6.0;
    c_[i] = 0.5 * moments[i];
    d_[i] = (moments[i + 1] - moments[i]) / (6.0 * h[i]);
  }
}

std::size_t CubicSplineEnvelope::interval_of(double at) const {
  // knots belong to the interval on their right, the last knot to its left
  const auto it = std::upper_bound(x_.begin() + 1, x_.end() - 1, at);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double CubicSplineEnvelope::operator()(double at) const {
  // knots are reproduced exactly, including the last one
  if (at == x_.back()) return last_y_;
  const std::size_t i = interval_of(at);
  const double t = at - x_[i];
  return a_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
}

void CubicSplineEnvelope::evaluate_grid(std::span<double> out) const {
  const std::size_t n = out.size();
  if (n == 0) return;
  if (x_.empty() || x_.front() > 0.0 || x_.back() < static_cast<double>(n - 1)) {
    throw Error(Errc::DomainMismatch,
                "spline domain does not cover [0, " + std::to_string(n - 1) + "]");
  }
  const std::size_t last_interval = x_.size() - 2;
  std::size_t i = 0;
  for (std::size_t g = 0; g < n; ++g) {
    const double at = static_cast<double>(g);
    if (at == x_.back()) {
      out[g] = last_y_;
      continue;
    }
    while (i < last_interval && x_[i + 1] <= at) ++i;
    const double t = at - x_[i];
    out[g] = a_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
  }
}

CubicSplineEnvelope fit_envelope(std::span<const Point> knots) {
  CubicSplineEnvelope spline;
  spline.fit(knots);
  return spline;
}

std::vector<double> evaluate_envelope(const CubicSplineEnvelope& spline, std::size_t n) {
  std::vector<double> out(n);
  spline.evaluate_grid(out);
  return out;
}

ExtremaCounts local_mean(std::span<const double> signal, EnvelopeWorkspace& ws,
                         std::vector<double>& mean) {
  const std::size_t n = signal.size();
  mean.resize(n);

  find_extrema(signal, ws.extrema);
  ExtremaCounts counts{ws.extrema.maxima.size(), ws.extrema.minima.size(),
                       count_zero_crossings(signal)};
  if (counts.num_extrema() == 0) {
    std::copy(signal.begin(), signal.end(), mean.begin());
    return counts;
  }

  extend_extrema_inplace(ws.extrema, signal);
  ws.upper.fit(ws.extrema.maxima);
  ws.lower.fit(ws.extrema.minima);
  ws.lower_values.resize(n);
  ws.upper.evaluate_grid(mean);
  ws.lower.evaluate_grid(ws.lower_values);
  for (std::size_t i = 0; i < n; ++i) {
    mean[i] = 0.5 * (mean[i] + ws.lower_values[i]);
  }
  return counts;
}

LocalMean local_mean(std::span<const double> signal) {
  EnvelopeWorkspace ws;
  LocalMean result;
  result.counts = local_mean(signal, ws, result.mean);
  return result;
}

}  // namespace eemd
