#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "barrmet/core.hpp"
#include "barrmet/geometry.hpp"

namespace barrmet {

struct LevelPolyline {
  double level;
  std::vector<Complex> points;
};

namespace detail {

// Nodes outside the domain carry a large sentinel so that contour crossings
// on boundary-adjacent edges collapse onto the inside node; contours then
// stay inside the closed domain and can still reach boundary contact points.
constexpr double kOutsideValue = 1e100;

struct Segment {
  Complex a, b;
};

inline Complex interpolate_edge(Complex p0, double v0, Complex p1, double v1, double level) {
  double t = (level - v0) / (v1 - v0);
  t = std::clamp(t, 0.0, 1.0);
  return p0 + t * (p1 - p0);
}

inline std::vector<std::vector<Complex>> chain_segments(std::vector<Segment> segs) {
  using Key = std::pair<double, double>;
  auto key = [](Complex z) { return Key{z.real(), z.imag()}; };
  std::multimap<Key, std::size_t> by_endpoint;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    by_endpoint.emplace(key(segs[i].a), i);
    by_endpoint.emplace(key(segs[i].b), i);
  }
  std::vector<bool> used(segs.size(), false);
  std::vector<std::vector<Complex>> polylines;

  auto take_next = [&](Complex end) -> std::ptrdiff_t {
    auto [lo, hi] = by_endpoint.equal_range(key(end));
    for (auto it = lo; it != hi; ++it)
      if (!used[it->second]) return static_cast<std::ptrdiff_t>(it->second);
    return -1;
  };

  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<Complex> line = {segs[i].a, segs[i].b};
    // extend forward
    for (std::ptrdiff_t j = take_next(line.back()); j >= 0; j = take_next(line.back())) {
      used[static_cast<std::size_t>(j)] = true;
      const Segment& s = segs[static_cast<std::size_t>(j)];
      line.push_back(s.a == line.back() ? s.b : s.a);
    }
    // extend backward
    for (std::ptrdiff_t j = take_next(line.front()); j >= 0; j = take_next(line.front())) {
      used[static_cast<std::size_t>(j)] = true;
      const Segment& s = segs[static_cast<std::size_t>(j)];
      line.insert(line.begin(), s.a == line.front() ? s.b : s.a);
    }
    if (line.size() >= 2) polylines.push_back(std::move(line));
  }
  return polylines;
}

}  // namespace detail

/// Marching-squares level sets of f over a grid x grid lattice on the given
/// bounding box, restricted to the domain: f is evaluated only at nodes of d,
/// outside nodes act as +infinity.
inline std::vector<LevelPolyline> extract_level_sets(
    const Domain& d, const std::function<double(Complex)>& f, Complex bbox_lo, Complex bbox_hi,
    std::size_t grid, const std::vector<double>& levels) {
  if (grid < 16) throw std::invalid_argument("extract_level_sets: grid must be >= 16");
  if (levels.empty()) throw std::invalid_argument("extract_level_sets: levels must be nonempty");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!(levels[i - 1] < levels[i]))
      throw std::invalid_argument("extract_level_sets: levels must be strictly increasing");

  const std::size_t n = grid;
  const double dx = (bbox_hi.real() - bbox_lo.real()) / static_cast<double>(n - 1);
  const double dy = (bbox_hi.imag() - bbox_lo.imag()) / static_cast<double>(n - 1);

  std::vector<double> values(n * n, detail::kOutsideValue);
  std::vector<Complex> nodes(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex z(bbox_lo.real() + dx * static_cast<double>(i),
                bbox_lo.imag() + dy * static_cast<double>(j));
      nodes[j * n + i] = z;
      if (contains(d, z)) values[j * n + i] = f(z);
    }
  }

  std::vector<LevelPolyline> out;
  for (double level : levels) {
    std::vector<detail::Segment> segments;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t bl = j * n + i, br = j * n + i + 1;
        const std::size_t tl = (j + 1) * n + i, tr = (j + 1) * n + i + 1;
        const double v0 = values[bl], v1 = values[br], v2 = values[tr], v3 = values[tl];
        int idx = (v0 >= level ? 1 : 0) | (v1 >= level ? 2 : 0) | (v2 >= level ? 4 : 0) |
                  (v3 >= level ? 8 : 0);
        if (idx == 0 || idx == 15) continue;
        Complex p0 = nodes[bl], p1 = nodes[br], p2 = nodes[tr], p3 = nodes[tl];
        auto bottom = [&] { return detail::interpolate_edge(p0, v0, p1, v1, level); };
        auto right = [&] { return detail::interpolate_edge(p1, v1, p2, v2, level); };
        auto top = [&] { return detail::interpolate_edge(p3, v3, p2, v2, level); };
        auto left = [&] { return detail::interpolate_edge(p0, v0, p3, v3, level); };
        auto emit = [&](Complex a, Complex b) {
          if (a != b) segments.push_back({a, b});
        };
        switch (idx) {
          case 1: case 14: emit(left(), bottom()); break;
          case 2: case 13: emit(bottom(), right()); break;
          case 3: case 12: emit(left(), right()); break;
          case 4: case 11: emit(right(), top()); break;
          case 6: case 9: emit(bottom(), top()); break;
          case 7: case 8: emit(left(), top()); break;
          case 5: case 10: {
            // saddle: disambiguate with the cell-center mean
            double mean = 0.25 * (v0 + v1 + v2 + v3);
            bool center_above = mean >= level;
            if ((idx == 5) == center_above) {
              emit(left(), top());
              emit(bottom(), right());
            } else {
              emit(left(), bottom());
              emit(right(), top());
            }
            break;
          }
          default: break;
        }
      }
    }
    for (auto& line : detail::chain_segments(std::move(segments)))
      out.push_back({level, std::move(line)});
  }
  return out;
}

/// Default plotting box per domain, around an interior center point.
inline std::pair<Complex, Complex> domain_bbox(const Domain& d, Complex center) {
  return std::visit(
      [&](const auto& dom) -> std::pair<Complex, Complex> {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, UnitDisk>) {
          return {Complex(-1.0, -1.0), Complex(1.0, 1.0)};
        } else if constexpr (std::is_same_v<T, UpperHalfPlane>) {
          double span = 4.0 * (1.0 + std::abs(center));
          return {Complex(center.real() - span, 0.0), Complex(center.real() + span, span)};
        } else if constexpr (std::is_same_v<T, ExteriorUnitDisk>) {
          double span = 2.0 * (1.0 + std::abs(center));
          return {Complex(-span, -span), Complex(span, span)};
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          double span = 4.0 * (1.0 + std::abs(center - dom.center));
          return {dom.center - Complex(span, span), dom.center + Complex(span, span)};
        } else {
          double xlo = dom.outer().front().real(), xhi = xlo;
          double ylo = dom.outer().front().imag(), yhi = ylo;
          for (Complex v : dom.outer()) {
            xlo = std::min(xlo, v.real());
            xhi = std::max(xhi, v.real());
            ylo = std::min(ylo, v.imag());
            yhi = std::max(yhi, v.imag());
          }
          return {Complex(xlo, ylo), Complex(xhi, yhi)};
        }
      },
      d);
}

}  // namespace barrmet
