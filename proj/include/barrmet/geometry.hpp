#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

#include "barrmet/core.hpp"

namespace barrmet {

// ------------------------------------------------------------- domains

struct UnitDisk {};
struct UpperHalfPlane {};
struct ExteriorUnitDisk {};
struct PuncturedPlane {
  Complex center{0.0, 0.0};
};

using Ring = std::vector<Complex>;

namespace detail {

inline double cross(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

inline double signed_area(const Ring& r) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Complex a = r[i], b = r[(i + 1) % r.size()];
    s += cross(a, b);
  }
  return 0.5 * s;
}

inline double point_segment_distance(Complex z, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = std::clamp(((z - a).real() * ab.real() + (z - a).imag() * ab.imag()) / len2, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

inline Complex project_on_segment(Complex z, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return a;
  double t = std::clamp(((z - a).real() * ab.real() + (z - a).imag() * ab.imag()) / len2, 0.0, 1.0);
  return a + t * ab;
}

inline bool on_segment(Complex z, Complex a, Complex b) {
  Complex ab = b - a;
  if (std::abs(cross(ab, z - a)) > 1e-12 * (1.0 + std::norm(ab))) return false;
  double dot = (z - a).real() * ab.real() + (z - a).imag() * ab.imag();
  return dot >= -1e-12 && dot <= std::norm(ab) + 1e-12;
}

inline bool on_ring(const Ring& r, Complex z) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (on_segment(z, r[i], r[(i + 1) % r.size()])) return true;
  return false;
}

// Even-odd rule; points on the boundary are resolved separately by on_ring.
inline bool inside_ring(const Ring& r, Complex z) {
  bool in = false;
  for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
    double xi = r[i].real(), yi = r[i].imag();
    double xj = r[j].real(), yj = r[j].imag();
    bool straddles = (yi > z.imag()) != (yj > z.imag());
    if (straddles && z.real() < (xj - xi) * (z.imag() - yi) / (yj - yi) + xi) in = !in;
  }
  return in;
}

inline int orientation_sign(Complex a, Complex b, Complex c) {
  double v = cross(b - a, c - a);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

inline bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
  int o1 = orientation_sign(p1, p2, q1);
  int o2 = orientation_sign(p1, p2, q2);
  int o3 = orientation_sign(q1, q2, p1);
  int o4 = orientation_sign(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(q1, p1, p2)) return true;
  if (o2 == 0 && on_segment(q2, p1, p2)) return true;
  if (o3 == 0 && on_segment(p1, q1, q2)) return true;
  if (o4 == 0 && on_segment(p2, q1, q2)) return true;
  return false;
}

inline bool ring_is_simple(const Ring& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // adjacent edges share an endpoint
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(r[i], r[(i + 1) % n], r[j], r[(j + 1) % n])) return false;
    }
  }
  return true;
}

inline bool rings_intersect(const Ring& a, const Ring& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (segments_intersect(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]))
        return true;
  return false;
}

inline double ring_length(const Ring& r) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) s += std::abs(r[(i + 1) % r.size()] - r[i]);
  return s;
}

/// Point at arc-length position s along the ring (s taken mod perimeter).
inline Complex ring_point_at(const Ring& r, double s) {
  double len = ring_length(r);
  s = std::fmod(s, len);
  if (s < 0.0) s += len;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Complex a = r[i], b = r[(i + 1) % r.size()];
    double l = std::abs(b - a);
    if (s <= l || i + 1 == r.size()) {
      if (l == 0.0) return a;
      return a + (s / l) * (b - a);
    }
    s -= l;
  }
  return r.front();
}

}  // namespace detail

/// Bounded region with holes. The outer ring must be simple and
/// counterclockwise; holes must be simple, pairwise disjoint and strictly
/// inside the outer ring.
class PolygonWithHoles {
public:
  explicit PolygonWithHoles(Ring outer, std::vector<Ring> holes = {})
      : outer_(std::move(outer)), holes_(std::move(holes)) {
    validate();
  }

  const Ring& outer() const { return outer_; }
  const std::vector<Ring>& holes() const { return holes_; }

  std::vector<const Ring*> rings() const {
    std::vector<const Ring*> out;
    out.push_back(&outer_);
    for (const Ring& h : holes_) out.push_back(&h);
    return out;
  }

private:
  void validate() const {
    auto check_ring = [](const Ring& r, const char* what) {
      if (r.size() < 3) throw InvalidPolygon(std::string(what) + ": ring needs >= 3 vertices");
      for (Complex v : r)
        if (!is_finite(v)) throw InvalidPolygon(std::string(what) + ": non-finite vertex");
      if (!detail::ring_is_simple(r))
        throw InvalidPolygon(std::string(what) + ": ring is not simple");
    };
    check_ring(outer_, "outer");
    if (detail::signed_area(outer_) <= 0.0)
      throw InvalidPolygon("outer: ring must be counterclockwise");
    for (std::size_t i = 0; i < holes_.size(); ++i) {
      check_ring(holes_[i], "hole");
      for (Complex v : holes_[i])
        if (!detail::inside_ring(outer_, v) || detail::on_ring(outer_, v))
          throw InvalidPolygon("hole: vertex not strictly inside the outer ring");
      if (detail::rings_intersect(holes_[i], outer_))
        throw InvalidPolygon("hole: crosses the outer ring");
      for (std::size_t j = 0; j < i; ++j) {
        if (detail::rings_intersect(holes_[i], holes_[j]))
          throw InvalidPolygon("hole: holes intersect");
        if (detail::inside_ring(holes_[j], holes_[i].front()) ||
            detail::inside_ring(holes_[i], holes_[j].front()))
          throw InvalidPolygon("hole: nested holes");
      }
    }
  }

  Ring outer_;
  std::vector<Ring> holes_;
};

using Domain = std::variant<UnitDisk, UpperHalfPlane, ExteriorUnitDisk, PuncturedPlane,
                            PolygonWithHoles>;

/// Finite window used to sample an unbounded boundary.
struct BoundaryWindow {
  Complex anchor;
  double radius;
};

// ---------------------------------------------------------- membership

/// True iff z lies in the open set; boundary points are excluded.
inline bool contains(const Domain& d, Complex z) {
  require_finite(z, "contains");
  return std::visit(
      [&](const auto& dom) -> bool {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, UnitDisk>) {
          return std::abs(z) < 1.0;
        } else if constexpr (std::is_same_v<T, UpperHalfPlane>) {
          return z.imag() > 0.0;
        } else if constexpr (std::is_same_v<T, ExteriorUnitDisk>) {
          return std::abs(z) > 1.0;
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          return z != dom.center;
        } else {
          if (detail::on_ring(dom.outer(), z)) return false;
          if (!detail::inside_ring(dom.outer(), z)) return false;
          for (const Ring& h : dom.holes()) {
            if (detail::on_ring(h, z)) return false;
            if (detail::inside_ring(h, z)) return false;
          }
          return true;
        }
      },
      d);
}

// ------------------------------------------------------------ distance

/// Euclidean distance from z to the boundary of d (defined for any z).
inline double boundary_distance(const Domain& d, Complex z) {
  require_finite(z, "boundary_distance");
  return std::visit(
      [&](const auto& dom) -> double {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, UnitDisk> || std::is_same_v<T, ExteriorUnitDisk>) {
          return std::abs(std::abs(z) - 1.0);
        } else if constexpr (std::is_same_v<T, UpperHalfPlane>) {
          return std::abs(z.imag());
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          return std::abs(z - dom.center);
        } else {
          double best = std::numeric_limits<double>::infinity();
          for (const Ring* r : dom.rings())
            for (std::size_t i = 0; i < r->size(); ++i)
              best = std::min(best, detail::point_segment_distance(
                                        z, (*r)[i], (*r)[(i + 1) % r->size()]));
          return best;
        }
      },
      d);
}

/// A boundary point of d closest to z.
inline Complex nearest_boundary_point(const Domain& d, Complex z) {
  require_finite(z, "nearest_boundary_point");
  return std::visit(
      [&](const auto& dom) -> Complex {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, UnitDisk> || std::is_same_v<T, ExteriorUnitDisk>) {
          double r = std::abs(z);
          return r == 0.0 ? Complex(1.0, 0.0) : z / r;
        } else if constexpr (std::is_same_v<T, UpperHalfPlane>) {
          return Complex(z.real(), 0.0);
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          return dom.center;
        } else {
          double best = std::numeric_limits<double>::infinity();
          Complex arg = dom.outer().front();
          for (const Ring* r : dom.rings()) {
            for (std::size_t i = 0; i < r->size(); ++i) {
              Complex p = detail::project_on_segment(z, (*r)[i], (*r)[(i + 1) % r->size()]);
              double dist = std::abs(z - p);
              if (dist < best) {
                best = dist;
                arg = p;
              }
            }
          }
          return arg;
        }
      },
      d);
}

// ------------------------------------------------------------ sampling

/// n boundary points: equispaced on the circle, equispaced on a window of the
/// real axis for the half-plane, arc-length equidistributed over all rings
/// for polygons. The punctured plane has the single boundary point {center}.
inline std::vector<Complex> sample_boundary(const Domain& d, std::size_t n,
                                            std::optional<BoundaryWindow> window = {}) {
  if (n < 2) throw std::invalid_argument("sample_boundary: n must be >= 2");
  return std::visit(
      [&](const auto& dom) -> std::vector<Complex> {
        using T = std::decay_t<decltype(dom)>;
        std::vector<Complex> out;
        if constexpr (std::is_same_v<T, UnitDisk> || std::is_same_v<T, ExteriorUnitDisk>) {
          out.reserve(n);
          for (std::size_t k = 0; k < n; ++k)
            out.push_back(std::polar(1.0, 2.0 * std::numbers::pi *
                                              static_cast<double>(k) / static_cast<double>(n)));
        } else if constexpr (std::is_same_v<T, UpperHalfPlane>) {
          if (!window)
            throw MissingWindow("sample_boundary: half-plane boundary needs a window");
          if (!(window->radius > 0.0))
            throw std::invalid_argument("sample_boundary: window radius must be positive");
          double lo = window->anchor.real() - window->radius;
          double hi = window->anchor.real() + window->radius;
          out.reserve(n);
          for (std::size_t k = 0; k < n; ++k) {
            double t = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
            out.emplace_back(t, 0.0);
          }
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          out.push_back(dom.center);
        } else {
          double total = 0.0;
          for (const Ring* r : dom.rings()) total += detail::ring_length(*r);
          out.reserve(n);
          double step = total / static_cast<double>(n);
          double pos = 0.0;
          auto rings = dom.rings();
          std::size_t ring_idx = 0;
          double ring_start = 0.0;
          double ring_len = detail::ring_length(*rings[0]);
          for (std::size_t k = 0; k < n; ++k, pos += step) {
            while (pos >= ring_start + ring_len && ring_idx + 1 < rings.size()) {
              ring_start += ring_len;
              ++ring_idx;
              ring_len = detail::ring_length(*rings[ring_idx]);
            }
            out.push_back(detail::ring_point_at(*rings[ring_idx], pos - ring_start));
          }
        }
        return out;
      },
      d);
}

// ---------------------------------------------------------- similarity

/// z -> scale*z + shift with scale > 0.
inline Complex similarity_apply(double scale, Complex shift, Complex z) {
  if (!(scale > 0.0)) throw std::invalid_argument("similarity_apply: scale must be positive");
  require_finite(z, "similarity_apply");
  require_finite(shift, "similarity_apply");
  return scale * z + shift;
}

/// Window wide enough that the boundary minimizer for the pair (z1, z2) on an
/// unbounded boundary always falls inside it.
inline BoundaryWindow standard_window(Complex z1, Complex z2) {
  double radius = 8.0 * (1.0 + std::abs(z1) + std::abs(z2) + std::abs(z1 - z2));
  return BoundaryWindow{0.5 * (z1 + z2), radius};
}

}  // namespace barrmet
