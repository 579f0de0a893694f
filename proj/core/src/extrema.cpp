#include "eemd/extrema.hpp"

namespace eemd {

namespace {

enum class Kind { Max, Min };

// Visits every interior extremum in order of abscissa.
template <typename Visit>
void scan_extrema(std::span<const double> x, Visit&& visit) {
  const std::size_t n = x.size();
  if (n < 3) return;
  std::size_t i = 1;
  while (i + 1 < n) {
    if (x[i] == x[i - 1]) {
      // flat continuation of a run whose left slope was already judged
      ++i;
      continue;
    }
    const bool rising = x[i] > x[i - 1];
    std::size_t j = i;
    while (j + 1 < n && x[j + 1] == x[i]) ++j;
    if (j + 1 == n) return;  // run touches the right boundary
    const bool falling = x[j + 1] < x[j];
    if (rising && falling) {
      visit(Kind::Max, Point{0.5 * static_cast<double>(i + j), x[i]});
    } else if (!rising && !falling) {
      visit(Kind::Min, Point{0.5 * static_cast<double>(i + j), x[i]});
    }
    i = j + 1;
  }
}

void extend_list(std::vector<Point>& list, std::span<const double> x, Kind kind) {
  const std::size_t n = x.size();
  const double last = static_cast<double>(n - 1);
  const Point left_boundary{0.0, x.front()};
  const Point right_boundary{last, x.back()};

  if (list.size() < 2) {
    const bool has_left = !list.empty() && list.front().x == 0.0;
    const bool has_right = !list.empty() && list.back().x == last;
    if (!has_left) list.insert(list.begin(), left_boundary);
    if (!has_right) list.push_back(right_boundary);
    return;
  }

  auto line_at = [](const Point& a, const Point& b, double at) {
    return a.y + (b.y - a.y) / (b.x - a.x) * (at - a.x);
  };
  auto clamp = [kind](double extrapolated, double boundary) {
    if (kind == Kind::Max) return extrapolated < boundary ? boundary : extrapolated;
    return extrapolated > boundary ? boundary : extrapolated;
  };

  const bool has_left = list.front().x == 0.0;
  const bool has_right = list.back().x == last;
  Point left{0.0, 0.0};
  Point right{last, 0.0};
  if (!has_left) left.y = clamp(line_at(list[0], list[1], 0.0), x.front());
  if (!has_right) {
    const std::size_t k = list.size();
    right.y = clamp(line_at(list[k - 2], list[k - 1], last), x.back());
  }
  if (!has_left) list.insert(list.begin(), left);
  if (!has_right) list.push_back(right);
}

}  // namespace

void find_extrema(std::span<const double> signal, ExtremaSet& out) {
  out.clear();
  scan_extrema(signal, [&out](Kind kind, Point p) {
    (kind == Kind::Max ? out.maxima : out.minima).push_back(p);
  });
}

ExtremaSet find_extrema(std::span<const double> signal) {
  ExtremaSet out;
  find_extrema(signal, out);
  return out;
}

std::size_t count_extrema(std::span<const double> signal) {
  std::size_t count = 0;
  scan_extrema(signal, [&count](Kind, Point) { ++count; });
  return count;
}

std::size_t count_zero_crossings(std::span<const double> signal) {
  std::size_t crossings = 0;
  int last_sign = 0;
  for (double v : signal) {
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++crossings;
    last_sign = sign;
  }
  return crossings;
}

void extend_extrema_inplace(ExtremaSet& extrema, std::span<const double> signal) {
  if (signal.empty()) return;
  extend_list(extrema.maxima, signal, Kind::Max);
  extend_list(extrema.minima, signal, Kind::Min);
}

ExtremaSet extend_extrema(const ExtremaSet& extrema, std::span<const double> signal) {
  ExtremaSet out = extrema;
  extend_extrema_inplace(out, signal);
  return out;
}

}  // namespace eemd
