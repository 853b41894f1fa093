#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "barrmet/barrlund.hpp"
#include "barrmet/bounds.hpp"
#include "barrmet/core.hpp"
#include "barrmet/geometry.hpp"
#include "barrmet/metrics.hpp"
#include "barrmet/mobius.hpp"
#include "barrmet/oracle.hpp"

namespace barrmet {

// -------------------------------------------------------------- report

/// Machine-readable record of one property-suite or conjecture-search run.
/// Slack convention: one-sided checks record rhs - lhs, equality checks
/// record -|difference|; the run passes iff the most negative slack stays
/// above -tolerance.
struct VerificationReport {
  std::string suite;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double worst_margin = 0.0;
  nlohmann::ordered_json witness = nullptr;
  bool passed = false;
  std::int64_t runtime_ms = 0;
  bool conjecture = false;
  double tolerance = 1e-9;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["trials"] = trials;
    j["seed"] = seed;
    j["worst_margin"] = worst_margin;
    j["witness"] = witness;
    j["passed"] = passed;
    j["runtime_ms"] = runtime_ms;
    if (conjecture) j["conjecture"] = true;
    return j;
  }
};

namespace detail {

inline nlohmann::ordered_json j_point(Complex z) {
  return nlohmann::ordered_json::array({z.real(), z.imag()});
}

class MarginTracker {
public:
  template <class W>
  void observe(double slack, W&& make_witness) {
    ++count_;
    if (slack < worst_) {
      worst_ = slack;
      witness_ = make_witness();
    }
  }
  double worst() const { return count_ == 0 ? 0.0 : worst_; }
  const nlohmann::ordered_json& witness() const { return witness_; }

private:
  double worst_ = std::numeric_limits<double>::infinity();
  nlohmann::ordered_json witness_ = nullptr;
  std::uint64_t count_ = 0;
};

class SuiteTimer {
public:
  SuiteTimer() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

inline VerificationReport finish(const std::string& name, std::uint64_t trials,
                                 std::uint64_t seed, const MarginTracker& m,
                                 const SuiteTimer& timer, double tolerance,
                                 bool conjecture = false) {
  VerificationReport r;
  r.suite = name;
  r.trials = trials;
  r.seed = seed;
  r.worst_margin = m.worst();
  r.witness = m.witness();
  r.passed = m.worst() >= -tolerance;
  r.runtime_ms = timer.elapsed_ms();
  r.conjecture = conjecture;
  r.tolerance = tolerance;
  return r;
}

inline const std::vector<PExponent>& standard_exponents() {
  static const std::vector<PExponent> ps = {PExponent::finite(1.0), PExponent::finite(1.5),
                                            PExponent::finite(2.0), PExponent::finite(3.0),
                                            PExponent::finite(10.0)};
  return ps;
}

}  // namespace detail

// -------------------------------------------------------------- suites

/// s_G <= b_{G,p} <= 2^(1-1/p) s_G on the disk and the half-plane.
inline VerificationReport suite_sandwich(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain domains[] = {Domain{UnitDisk{}}, Domain{UpperHalfPlane{}}};
  const char* names[] = {"disk", "halfplane"};
  for (int di = 0; di < 2; ++di) {
    const Domain& d = domains[di];
    const PExponent one = PExponent::finite(1.0);
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 16 + static_cast<std::uint64_t>(di));
      Complex z1 = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
      Complex z2 = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
      double s = b(d, one, z1, z2).value;
      for (PExponent p : detail::standard_exponents()) {
        double bp = b(d, p, z1, z2).value;
        double slack = std::min(bp - s, p.sup_value() * s - bp);
        m.observe(slack, [&] {
          return nlohmann::ordered_json::array(
              {std::string(names[di]) + " p=" + p.str(), detail::j_point(z1), detail::j_point(z2)});
        });
      }
    }
  }
  return detail::finish("sandwich", trials, seed, m, timer, 1e-9);
}

/// b_{G,r} <= b_{G,p} <= 2^(1/r-1/p) b_{G,r} for r < p.
inline VerificationReport suite_p_monotonicity(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain domains[] = {Domain{UnitDisk{}}, Domain{UpperHalfPlane{}}};
  const char* names[] = {"disk", "halfplane"};
  const std::pair<double, double> rp[] = {{1.0, 1.5}, {1.5, 2.0}, {2.0, 3.0},
                                          {3.0, 10.0}, {1.0, 2.0}, {2.0, 10.0}};
  for (int di = 0; di < 2; ++di) {
    for (const auto& pair : rp) {
      const double r = pair.first, p = pair.second;
      for (std::uint64_t i = 0; i < trials; ++i) {
        auto g = detail::trial_rng(seed, i * 32 + static_cast<std::uint64_t>(di));
        Complex z1 = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
        Complex z2 = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
        double br = b(domains[di], PExponent::finite(r), z1, z2).value;
        double bp = b(domains[di], PExponent::finite(p), z1, z2).value;
        double cap = std::pow(2.0, 1.0 / r - 1.0 / p) * br;
        m.observe(std::min(bp - br, cap - bp), [&] {
          return nlohmann::ordered_json::array({std::string(names[di]) + " r=" +
                                                    std::to_string(r) + " p=" + std::to_string(p),
                                                detail::j_point(z1), detail::j_point(z2)});
        });
      }
    }
  }
  return detail::finish("p-monotonicity", trials, seed, m, timer, 1e-9);
}

/// b_{G,p} <= b_{G,inf} <= 2^(1/p) b_{G,p}.
inline VerificationReport suite_inf_bracketing(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain domains[] = {Domain{UnitDisk{}}, Domain{UpperHalfPlane{}}};
  const char* names[] = {"disk", "halfplane"};
  for (int di = 0; di < 2; ++di) {
    for (double p : {1.0, 2.0, 3.0}) {
      for (std::uint64_t i = 0; i < trials; ++i) {
        auto g = detail::trial_rng(seed, i * 8 + static_cast<std::uint64_t>(di));
        Complex z1 = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
        Complex z2 = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
        double bp = b(domains[di], PExponent::finite(p), z1, z2).value;
        double bi = b(domains[di], PExponent::infinity(), z1, z2).value;
        m.observe(std::min(bi - bp, std::pow(2.0, 1.0 / p) * bp - bi), [&] {
          return nlohmann::ordered_json::array({std::string(names[di]) + " p=" + std::to_string(p),
                                                detail::j_point(z1), detail::j_point(z2)});
        });
      }
    }
  }
  return detail::finish("inf-bracketing", trials, seed, m, timer, 1e-9);
}

/// s_D <= m_D, equality exactly for pairs collinear with the origin.
inline VerificationReport suite_s_vs_m(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto g = detail::trial_rng(seed, i);
    Complex z1 = detail::sample_disk(g);
    Complex z2 = detail::sample_disk(g);
    m.observe(m_disk(z1, z2) - s_disk(z1, z2).value, [&] {
      return nlohmann::ordered_json::array({"s <= m", detail::j_point(z1), detail::j_point(z2)});
    });
    // collinear through the origin: equality
    double phi = 2.0 * std::numbers::pi * g.unit();
    Complex c1 = std::polar(0.05 + 0.9 * g.unit(), phi);
    Complex c2 = -std::polar(0.05 + 0.9 * g.unit(), phi);
    m.observe(-std::abs(m_disk(c1, c2) - s_disk(c1, c2).value), [&] {
      return nlohmann::ordered_json::array({"collinear equality", detail::j_point(c1),
                                            detail::j_point(c2)});
    });
  }
  // strictness away from collinearity
  for (Complex z1 : {Complex(0.5, 0.0), Complex(0.2, 0.3), Complex(-0.4, 0.1)}) {
    Complex z2 = Complex(-z1.imag(), z1.real());  // rotate by 90 degrees
    m.observe(m_disk(z1, z2) - s_disk(z1, z2).value - 1e-6, [&] {
      return nlohmann::ordered_json::array({"strictness", detail::j_point(z1),
                                            detail::j_point(z2)});
    });
  }
  // m is not a metric: the t = 0.9 triple through the origin is a witness
  {
    double t = 0.9;
    double violation = m_disk(Complex(t, 0.0), Complex(0.0, t)) -
                       m_disk(Complex(0.0, 0.0), Complex(t, 0.0)) -
                       m_disk(Complex(0.0, 0.0), Complex(0.0, t));
    m.observe(violation, [&] {
      return nlohmann::ordered_json::array({"m triangle-inequality witness", t});
    });
  }
  return detail::finish("s-vs-m", trials, seed, m, timer, 1e-9);
}

/// tanh(rho/4) <= s_D <= tanh(rho/2).
inline VerificationReport suite_hyperbolic_bounds(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto g = detail::trial_rng(seed, i);
    Complex z1 = detail::sample_disk(g);
    Complex z2 = detail::sample_disk(g);
    double rho = hyperbolic_disk(z1, z2);
    double s = s_disk(z1, z2).value;
    m.observe(std::min(s - std::tanh(rho / 4.0), std::tanh(rho / 2.0) - s), [&] {
      return nlohmann::ordered_json::array({"hyperbolic bounds", detail::j_point(z1),
                                            detail::j_point(z2)});
    });
  }
  return detail::finish("hyperbolic-bounds", trials, seed, m, timer, 1e-9);
}

/// s_D <= p_D (the disk is convex).
inline VerificationReport suite_s_vs_pointpair(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain disk = UnitDisk{};
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto g = detail::trial_rng(seed, i);
    Complex z1 = detail::sample_disk(g);
    Complex z2 = detail::sample_disk(g);
    m.observe(point_pair(disk, z1, z2) - s_disk(z1, z2).value, [&] {
      return nlohmann::ordered_json::array({"s <= p", detail::j_point(z1), detail::j_point(z2)});
    });
  }
  return detail::finish("s-vs-pointpair", trials, seed, m, timer, 1e-9);
}

/// s_H <= T_p <= b_{H,p}, U_p <= b_{H,p}, U_p >= T_p for p >= 2, with the
/// documented equality and strictness cases of T_p.
inline VerificationReport suite_halfplane_lower_bounds(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain h = UpperHalfPlane{};
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    PExponent pe = PExponent::finite(p);
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 4);
      Complex z1 = detail::sample_halfplane(g);
      Complex z2 = detail::sample_halfplane(g);
      double s = s_halfplane(z1, z2).value;
      double t = t_bound(p, z1, z2);
      double u = u_bound(p, z1, z2);
      double bp = b(h, pe, z1, z2).value;
      double slack = std::min({t - s, bp - t, bp - u});
      if (p >= 2.0) slack = std::min(slack, u - t);
      m.observe(slack, [&] {
        return nlohmann::ordered_json::array({"chain p=" + std::to_string(p),
                                              detail::j_point(z1), detail::j_point(z2)});
      });
      // strictness of b > T_p away from the equality locus
      if (std::abs(z1.real() - z2.real()) > 0.05 && std::abs(z1.imag() - z2.imag()) > 0.05) {
        m.observe(bp - t - 1e-12, [&] {
          return nlohmann::ordered_json::array({"T strictness p=" + std::to_string(p),
                                                detail::j_point(z1), detail::j_point(z2)});
        });
      }
      // equality cases: equal real parts, equal imaginary parts
      Complex e1(z1.real(), z1.imag());
      Complex e2(z1.real(), z2.imag());
      m.observe(-std::abs(b(h, pe, e1, e2).value - t_bound(p, e1, e2)), [&] {
        return nlohmann::ordered_json::array({"T equality (Re) p=" + std::to_string(p),
                                              detail::j_point(e1), detail::j_point(e2)});
      });
      Complex f1(z1.real(), z1.imag());
      Complex f2(z2.real(), z1.imag());
      m.observe(-std::abs(b(h, pe, f1, f2).value - t_bound(p, f1, f2)), [&] {
        return nlohmann::ordered_json::array({"T equality (Im) p=" + std::to_string(p),
                                              detail::j_point(f1), detail::j_point(f2)});
      });
    }
  }
  // T_1 = s_H
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto g = detail::trial_rng(seed, i * 4 + 1);
    Complex z1 = detail::sample_halfplane(g);
    Complex z2 = detail::sample_halfplane(g);
    m.observe(-std::abs(t_bound(1.0, z1, z2) - s_halfplane(z1, z2).value), [&] {
      return nlohmann::ordered_json::array({"T_1 = s", detail::j_point(z1), detail::j_point(z2)});
    });
  }
  return detail::finish("halfplane-lower-bounds", trials, seed, m, timer, 1e-9);
}

/// b_{H,p} <= |z1-z2| / max(Im z1, Im z2) for all p including infinity.
inline VerificationReport suite_halfplane_upper_bound(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain h = UpperHalfPlane{};
  const PExponent ps[] = {PExponent::finite(1.0), PExponent::finite(2.0), PExponent::finite(3.0),
                          PExponent::finite(10.0), PExponent::infinity()};
  for (PExponent p : ps) {
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 8);
      Complex z1 = detail::sample_halfplane(g);
      Complex z2 = detail::sample_halfplane(g);
      double cap = std::abs(z1 - z2) / std::max(z1.imag(), z2.imag());
      m.observe(cap - b(h, p, z1, z2).value, [&] {
        return nlohmann::ordered_json::array({"upper bound p=" + p.str(), detail::j_point(z1),
                                              detail::j_point(z2)});
      });
    }
  }
  return detail::finish("halfplane-upper-bound", trials, seed, m, timer, 1e-9);
}

/// b_{D,p}(z1,z2) < b over the exterior domain at (1/z1, 1/z2).
inline VerificationReport suite_inversion_comparison(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain disk = UnitDisk{};
  const Domain ext = ExteriorUnitDisk{};
  for (double p : {1.0, 2.0, 3.0}) {
    PExponent pe = PExponent::finite(p);
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 4);
      Complex z1 = detail::sample_disk(g);
      Complex z2 = detail::sample_disk(g);
      if (std::abs(z1) < 1e-3 || std::abs(z2) < 1e-3 || z1 == z2) continue;
      double inner = b(disk, pe, z1, z2).value;
      double outer = b(ext, pe, 1.0 / z1, 1.0 / z2).value;
      m.observe(outer - inner - 1e-12, [&] {
        return nlohmann::ordered_json::array({"inversion p=" + std::to_string(p),
                                              detail::j_point(z1), detail::j_point(z2)});
      });
    }
  }
  return detail::finish("inversion-comparison", trials, seed, m, timer, 1e-9);
}

/// Metric axioms for b on (disk, half-plane) x {1, 1.5, 2, 3, inf}.
inline VerificationReport suite_metric_axioms(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain domains[] = {Domain{UnitDisk{}}, Domain{UpperHalfPlane{}}};
  const char* names[] = {"disk", "halfplane"};
  const PExponent ps[] = {PExponent::finite(1.0), PExponent::finite(1.5), PExponent::finite(2.0),
                          PExponent::finite(3.0), PExponent::infinity()};
  for (int di = 0; di < 2; ++di) {
    for (PExponent p : ps) {
      for (std::uint64_t i = 0; i < trials; ++i) {
        auto g = detail::trial_rng(seed, i * 8 + static_cast<std::uint64_t>(di));
        Complex x = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
        Complex y = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
        Complex z = di == 0 ? detail::sample_disk(g) : detail::sample_halfplane(g);
        double bxy = b(domains[di], p, x, y).value;
        double byx = b(domains[di], p, y, x).value;
        double bxz = b(domains[di], p, x, z).value;
        double bzy = b(domains[di], p, z, y).value;
        double slack = std::min({bxy,                        // nonnegativity
                                 -b(domains[di], p, x, x).value,  // identity
                                 -std::abs(bxy - byx),       // symmetry
                                 bxz + bzy - bxy});          // triangle inequality
        m.observe(slack, [&] {
          return nlohmann::ordered_json::array({std::string(names[di]) + " p=" + p.str(),
                                                detail::j_point(x), detail::j_point(y),
                                                detail::j_point(z)});
        });
      }
    }
  }
  return detail::finish("metric-axioms", trials, seed, m, timer, 1e-9);
}

/// Every closed form agrees with the boundary-sampling oracle to 1e-6
/// relative.
inline VerificationReport suite_oracle_agreement(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain disk = UnitDisk{};
  const Domain half = UpperHalfPlane{};
  const Complex puncture(0.3, 0.4);
  const Domain punct = PuncturedPlane{puncture};

  struct Case {
    const char* name;
    const Domain* domain;
    PExponent p;
    std::function<double(Complex, Complex)> closed;
  };
  const std::vector<Case> cases = {
      {"s_D", &disk, PExponent::finite(1.0),
       [](Complex a, Complex c) { return s_disk(a, c).value; }},
      {"s_H", &half, PExponent::finite(1.0),
       [](Complex a, Complex c) { return s_halfplane(a, c).value; }},
      {"b_D2", &disk, PExponent::finite(2.0),
       [](Complex a, Complex c) { return b_disk_p2_closed(a, c).value; }},
      {"b_H2", &half, PExponent::finite(2.0),
       [](Complex a, Complex c) { return b_halfplane_p2_closed(a, c).value; }},
      {"b_H3", &half, PExponent::finite(3.0),
       [](Complex a, Complex c) { return b_halfplane_p(3.0, a, c).value; }},
      {"b_Hinf", &half, PExponent::infinity(),
       [](Complex a, Complex c) { return b_halfplane_inf(a, c).value; }},
      {"b_Dinf", &disk, PExponent::infinity(),
       [](Complex a, Complex c) { return b_disk_inf(a, c).value; }},
      {"b_punctured", &punct, PExponent::finite(1.7),
       [puncture](Complex a, Complex c) { return b_punctured(puncture, 1.7, a, c).value; }},
  };

  for (std::size_t ci = 0; ci < cases.size(); ++ci) {
    const Case& cs = cases[ci];
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 16 + ci);
      Complex z1, z2;
      if (std::holds_alternative<UnitDisk>(*cs.domain)) {
        z1 = detail::sample_disk(g);
        z2 = detail::sample_disk(g);
      } else if (std::holds_alternative<UpperHalfPlane>(*cs.domain)) {
        z1 = detail::sample_halfplane(g);
        z2 = detail::sample_halfplane(g);
      } else {
        z1 = Complex(-5.0 + 10.0 * g.unit(), -5.0 + 10.0 * g.unit());
        z2 = Complex(-5.0 + 10.0 * g.unit(), -5.0 + 10.0 * g.unit());
        if (z1 == puncture || z2 == puncture || z1 == z2) continue;
      }
      if (z1 == z2) continue;
      double closed = cs.closed(z1, z2);
      double scanned = oracle_b(*cs.domain, cs.p, z1, z2, 8192).value;
      double rel = std::abs(closed - scanned) / std::max(1e-12, std::abs(closed));
      m.observe(1e-6 - rel, [&] {
        return nlohmann::ordered_json::array({cs.name, detail::j_point(z1), detail::j_point(z2)});
      });
    }
  }
  return detail::finish("oracle-agreement", trials, seed, m, timer, 1e-6);
}

/// b_{H,p} attains 2^(1-1/p) s_H exactly when the imaginary parts agree, and
/// the supremum 2^(1-1/p) is approached in the disk by the small-angle
/// two-point family near a boundary contact.
inline VerificationReport suite_equality_attainment(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain h = UpperHalfPlane{};
  const Domain disk = UnitDisk{};
  for (double p : {1.0, 2.0, 5.0}) {
    PExponent pe = PExponent::finite(p);
    double sup = pe.sup_value();
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 4);
      double x1 = -10.0 + 20.0 * g.unit();
      double x2 = -10.0 + 20.0 * g.unit();
      double y = 0.001 + 9.999 * g.unit();
      Complex z1(x1, y), z2(x2, y);
      if (z1 == z2) continue;
      double bp = b(h, pe, z1, z2).value;
      double s = s_halfplane(z1, z2).value;
      m.observe(-std::abs(bp - sup * s), [&] {
        return nlohmann::ordered_json::array({"Im-equal p=" + std::to_string(p),
                                              detail::j_point(z1), detail::j_point(z2)});
      });
    }
    // two points on the circle |u - 1/2| = 1/2 straddling the real axis
    double best = 0.0;
    for (double alpha : {0.2, 0.1, 0.05, 0.02, 0.01}) {
      Complex u = 0.5 + 0.5 * std::polar(1.0, 2.0 * alpha);
      best = std::max(best, b(disk, pe, u, std::conj(u)).value);
    }
    m.observe(1e-3 - (sup - best), [&] {
      return nlohmann::ordered_json::array({"sup family p=" + std::to_string(p)});
    });
    m.observe(sup + 1e-10 - best, [&] {
      return nlohmann::ordered_json::array({"sup ceiling p=" + std::to_string(p)});
    });
  }
  return detail::finish("equality-attainment", trials, seed, m, timer, 1e-10);
}

/// Domain monotonicity on a midpoint-convex superdomain, the square-annulus
/// reversal, and monotonicity of the complement-based variant.
inline VerificationReport suite_domain_monotonicity(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain disk = UnitDisk{};
  const Domain h = UpperHalfPlane{};
  const Complex lift(0.0, 1.0);  // D sits inside {Im z > -1}; shift into H
  const PExponent ps[] = {PExponent::finite(1.0), PExponent::finite(2.0), PExponent::finite(3.0),
                          PExponent::infinity()};
  for (PExponent p : ps) {
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 8);
      Complex x = detail::sample_disk(g);
      Complex y = detail::sample_disk(g);
      double inner = b(disk, p, x, y).value;
      double outer = b(h, p, x + lift, y + lift).value;
      m.observe(inner - outer, [&] {
        return nlohmann::ordered_json::array({"midpoint-convex p=" + p.str(), detail::j_point(x),
                                              detail::j_point(y)});
      });
    }
  }

  auto square = [](double a) {
    return Ring{{a, -a}, {a, a}, {-a, a}, {-a, -a}};
  };
  const Domain wide = PolygonWithHoles(square(4.0), {square(1.0)});
  const Domain narrow = PolygonWithHoles(square(4.0), {square(2.0)});
  const Complex z1(3.0, 0.0), z2(-3.0, 0.0);
  const PExponent two = PExponent::finite(2.0);
  double b_wide = b(wide, two, z1, z2).value;
  double b_narrow = b(narrow, two, z1, z2).value;
  m.observe(-std::abs(b_wide - 6.0 / std::sqrt(20.0)), [&] {
    return nlohmann::ordered_json::array({"annulus wide value"});
  });
  m.observe(-std::abs(b_narrow - 6.0 / std::sqrt(26.0)), [&] {
    return nlohmann::ordered_json::array({"annulus narrow value"});
  });
  // boundary-based b reverses monotonicity on the annuli
  m.observe(b_wide - b_narrow - 1e-12, [&] {
    return nlohmann::ordered_json::array({"annulus reversal"});
  });
  // the complement-based variant stays monotone
  for (Complex pair2 : {Complex(-3.0, 0.0), Complex(0.0, 3.0), Complex(3.0, 2.0)}) {
    if (pair2 == z1) continue;
    double v_narrow = oracle_b(narrow, two, z1, pair2, 4096, SupremumOver::Complement).value;
    double v_wide = oracle_b(wide, two, z1, pair2, 4096, SupremumOver::Complement).value;
    m.observe(v_narrow - v_wide, [&] {
      return nlohmann::ordered_json::array({"complement variant", detail::j_point(z1),
                                            detail::j_point(pair2)});
    });
  }
  return detail::finish("domain-monotonicity", trials, seed, m, timer, 1e-9);
}

// ---------------------------------------------------- ball inclusions

/// With c = b_{D,p}(a, a+r): the disk |z-a| < r lies inside the b-ball
/// B(a;c); for p = 2 the b-ball lies inside |z| < a+r and inside |z-a| < R
/// where b_{D,2}(a, a-R) = c.
inline VerificationReport check_ball_inclusions(double a, double r, PExponent p,
                                                std::uint64_t circle_samples,
                                                std::uint64_t seed = 0) {
  if (!(0.0 < a && a < a + r && a + r < 1.0))
    throw BadConfiguration("check_ball_inclusions: requires 0 < a < a+r < 1");
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain disk = UnitDisk{};
  const Complex ca(a, 0.0);
  const double c = b(disk, p, ca, Complex(a + r, 0.0)).value;
  const double eps = 1e-6;
  const double two_pi = 2.0 * std::numbers::pi;

  for (std::uint64_t k = 0; k < circle_samples; ++k) {
    double th = two_pi * static_cast<double>(k) / static_cast<double>(circle_samples);
    // inner circle: inside the b-ball
    Complex zi = ca + r * (1.0 - eps) * std::polar(1.0, th);
    if (std::abs(zi) < 1.0) {
      m.observe(c - b(disk, p, ca, zi).value, [&] {
        return nlohmann::ordered_json::array({"inner inclusion", detail::j_point(zi)});
      });
    }
    if (!p.is_infinity() && p.value() == 2.0) {
      // circle |z| = (a+r)(1+eps): outside the b-ball
      Complex zo = (a + r) * (1.0 + eps) * std::polar(1.0, th);
      if (std::abs(zo) < 1.0) {
        m.observe(b(disk, p, ca, zo).value - c, [&] {
          return nlohmann::ordered_json::array({"outer inclusion (origin circle)",
                                                detail::j_point(zo)});
        });
      }
      // circle |z-a| = R(1+eps): outside the b-ball
      double R = (2.0 * a * (1.0 - a) - r * (1.0 + a) >= 0.0) ? r * (1.0 - a) / (1.0 - a - r)
                                                              : r * (1.0 + a) / (1.0 - a);
      Complex zr = ca + R * (1.0 + eps) * std::polar(1.0, th);
      if (std::abs(zr) < 1.0) {
        m.observe(b(disk, p, ca, zr).value - c, [&] {
          return nlohmann::ordered_json::array({"outer inclusion (R circle)",
                                                detail::j_point(zr)});
        });
      }
    }
  }
  VerificationReport rep = detail::finish("ball-inclusions", circle_samples, seed, m, timer, 0.0);
  rep.suite = "ball-inclusions(a=" + std::to_string(a) + ",r=" + std::to_string(r) +
              ",p=" + p.str() + ")";
  return rep;
}

/// Ball-geometry suite: the radius-1 ball around a real center is the
/// elliptic disk x^2 + y^2/(1-a^2) = 1, plus the three circle inclusions.
inline VerificationReport suite_ball_inclusions(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;

  // level-1 ball boundary vs. the ellipse, sampled at 360 angles
  const double a = 0.3;
  auto b2_raw = [](Complex z1, Complex z2) {
    return std::abs(z1 - z2) /
           std::sqrt(2.0 + std::norm(z1) + std::norm(z2) - 2.0 * std::abs(z1 + z2));
  };
  for (int k = 0; k < 360; ++k) {
    double t = 2.0 * std::numbers::pi * static_cast<double>(k) / 360.0;
    Complex w(std::cos(t), std::sqrt(1.0 - a * a) * std::sin(t));
    m.observe(1e-6 - std::abs(b2_raw(Complex(a, 0.0), w) - 1.0), [&] {
      return nlohmann::ordered_json::array({"ellipse", detail::j_point(w)});
    });
  }

  struct Config {
    double a, r;
    PExponent p;
  };
  const Config configs[] = {{0.3, 0.4, PExponent::finite(2.0)},
                            {0.2, 0.5, PExponent::finite(2.0)},
                            {0.5, 0.27, PExponent::finite(2.0)},
                            {0.4, 0.3, PExponent::finite(3.0)},
                            {0.4, 0.3, PExponent::finite(1.5)},
                            {0.3, 1e-6, PExponent::finite(2.0)}};
  for (const Config& cfg : configs) {
    VerificationReport sub = check_ball_inclusions(cfg.a, cfg.r, cfg.p, trials, seed);
    m.observe(sub.worst_margin, [&] { return sub.witness; });
  }
  return detail::finish("ball-inclusions", trials, seed, m, timer, 0.0);
}

/// Distortion machinery: phi_K identities and bound, the Groetzsch modulus,
/// and the quasiconformal growth bound over a zoo of half-plane self-maps.
inline VerificationReport suite_distortion(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;

  for (int k = 1; k <= 9; ++k) {
    double r = 0.1 * static_cast<double>(k);
    m.observe(-std::abs(phi_k(1.0, r) - r),
              [&] { return nlohmann::ordered_json::array({"phi_1 identity", r}); });
    for (double K : {1.5, 2.0, 4.0}) {
      double bound = std::pow(4.0, 1.0 - 1.0 / K) * std::pow(r, 1.0 / K);
      m.observe(bound - phi_k(K, r),
                [&] { return nlohmann::ordered_json::array({"phi bound", K, r}); });
      m.observe(1e-10 - std::abs(grotzsch_mu(phi_k(K, r)) - grotzsch_mu(r) / K),
                [&] { return nlohmann::ordered_json::array({"phi defining residual", K, r}); });
    }
  }
  m.observe(1e-12 - std::abs(grotzsch_mu(1.0 / std::numbers::sqrt2) - std::numbers::pi / 2.0),
            [&] { return nlohmann::ordered_json::array({"mu(1/sqrt2)"}); });
  m.observe(1e-10 - std::abs(grotzsch_mu(0.6) * grotzsch_mu(0.8) -
                             std::numbers::pi * std::numbers::pi / 4.0),
            [&] { return nlohmann::ordered_json::array({"mu reflection product"}); });
  m.observe(grotzsch_mu(0.3) - grotzsch_mu(0.7),
            [&] { return nlohmann::ordered_json::array({"mu decreasing"}); });

  // growth bound b(f z1, f z2) <= 2^(1-1/p) 4^(1-1/K) b(z1,z2)^(1/K)
  struct MapCase {
    const char* name;
    double K;
    std::function<Complex(Complex)> f;
  };
  const std::vector<MapCase> zoo = {
      {"identity", 1.0, [](Complex z) { return z; }},
      {"affine", 1.0, [](Complex z) { return 2.0 * z + 1.0; }},
      {"mobius -1/z", 1.0, [](Complex z) { return -1.0 / z; }},
      {"inversion", 1.0, [](Complex z) { return inversion(z); }},
      {"stretch K=1.5", 1.5, [](Complex z) { return radial_stretch(1.5, z); }},
      {"stretch K=2", 2.0, [](Complex z) { return radial_stretch(2.0, z); }},
      {"stretch K=4", 4.0, [](Complex z) { return radial_stretch(4.0, z); }},
  };
  const Domain h = UpperHalfPlane{};
  for (double p : {1.0, 2.0}) {
    PExponent pe = PExponent::finite(p);
    for (const MapCase& mc : zoo) {
      for (std::uint64_t i = 0; i < trials; ++i) {
        auto g = detail::trial_rng(seed, i * 8);
        Complex z1 = detail::sample_halfplane(g);
        Complex z2 = detail::sample_halfplane(g);
        if (z1 == z2) continue;
        double bv = b(h, pe, z1, z2).value;
        double lhs = b(h, pe, mc.f(z1), mc.f(z2)).value;
        double cap = std::pow(2.0, 1.0 - 1.0 / p) * std::pow(4.0, 1.0 - 1.0 / mc.K) *
                     std::pow(bv, 1.0 / mc.K);
        m.observe(cap - lhs, [&] {
          return nlohmann::ordered_json::array({std::string("growth ") + mc.name +
                                                    " p=" + std::to_string(p),
                                                detail::j_point(z1), detail::j_point(z2)});
        });
      }
    }
  }
  return detail::finish("distortion", trials, seed, m, timer, 1e-9);
}

/// Disk-automorphism experiments: the 2^(2-1/p) b/(1+b^2) bound, the
/// bilipschitz envelope, the Cayley transfer bound, and the observed
/// Lipschitz constants R(p, a).
inline VerificationReport suite_mobius_experiments(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const Domain disk = UnitDisk{};
  const Domain h = UpperHalfPlane{};

  for (double p : {1.0, 2.0, 3.0}) {
    PExponent pe = PExponent::finite(p);
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 4);
      Complex a = detail::sample_disk(g);
      Complex z1 = detail::sample_disk(g);
      Complex z2 = detail::sample_disk(g);
      if (z1 == z2) continue;
      double bv = b(disk, pe, z1, z2).value;
      double s = s_disk(z1, z2).value;
      double lhs = b(disk, pe, mobius_disk(a, z1), mobius_disk(a, z2)).value;
      // t/(1+t^2) increases only on [0,1]: the b-form of the growth bound is
      // provable for b <= 1, the s-form always (s < 1)
      double cap = std::pow(2.0, 2.0 - 1.0 / p) * s / (1.0 + s * s);
      if (bv <= 1.0) cap = std::min(cap, std::pow(2.0, 2.0 - 1.0 / p) * bv / (1.0 + bv * bv));
      m.observe(cap - lhs, [&] {
        return nlohmann::ordered_json::array({"automorphism growth p=" + std::to_string(p),
                                              detail::j_point(a), detail::j_point(z1),
                                              detail::j_point(z2)});
      });
    }
  }

  const PExponent envelope_ps[] = {PExponent::finite(1.0), PExponent::finite(2.0),
                                   PExponent::infinity()};
  for (PExponent pe : envelope_ps) {
    for (std::uint64_t i = 0; i < trials; ++i) {
      auto g = detail::trial_rng(seed, i * 4 + 1);
      Complex a = detail::sample_disk(g, 0.9);
      Complex z1 = detail::sample_disk(g);
      Complex z2 = detail::sample_disk(g);
      if (z1 == z2) continue;
      double bv = b(disk, pe, z1, z2).value;
      double lhs = b(disk, pe, mobius_disk(a, z1), mobius_disk(a, z2)).value;
      double L = (1.0 + std::abs(a)) / (1.0 - std::abs(a));
      m.observe(std::min(L * bv - lhs, lhs - bv / L), [&] {
        return nlohmann::ordered_json::array({"bilipschitz envelope p=" + pe.str(),
                                              detail::j_point(a), detail::j_point(z1),
                                              detail::j_point(z2)});
      });
      // Cayley transfer H -> D
      Complex w1 = detail::sample_halfplane(g);
      Complex w2 = detail::sample_halfplane(g);
      if (w1 == w2) continue;
      double cap = (pe.is_infinity() ? 4.0 : std::pow(2.0, 2.0 - 1.0 / pe.value())) *
                   b(h, pe, w1, w2).value;
      m.observe(cap - b(disk, pe, cayley(w1), cayley(w2)).value, [&] {
        return nlohmann::ordered_json::array({"cayley transfer p=" + pe.str(),
                                              detail::j_point(w1), detail::j_point(w2)});
      });
    }
  }

  // observed Lipschitz constants
  std::uint64_t exp_trials = std::min<std::uint64_t>(trials, 2000);
  for (PExponent pe : envelope_ps) {
    LipschitzExperiment at0 = lipschitz_sup_estimate(pe, Complex(0.0), exp_trials, seed);
    m.observe(-std::abs(at0.observed_sup - 1.0), [&] {
      return nlohmann::ordered_json::array({"R(p,0) p=" + pe.str()});
    });
    for (double av : {0.2, 0.5, 0.8}) {
      LipschitzExperiment e = lipschitz_sup_estimate(pe, Complex(av, 0.0), exp_trials, seed);
      m.observe(e.observed_sup - (1.0 + av - 1e-3), [&] {
        return nlohmann::ordered_json::array({"R lower bound p=" + pe.str() + " a=" +
                                              std::to_string(av)});
      });
      m.observe((1.0 + av) / (1.0 - av) + 1e-9 - e.observed_sup, [&] {
        return nlohmann::ordered_json::array({"R ceiling p=" + pe.str() + " a=" +
                                              std::to_string(av)});
      });
    }
  }
  return detail::finish("mobius-experiments", trials, seed, m, timer, 1e-9);
}

// ---------------------------------------------------------- conjectures

/// Randomized search for a triangle-inequality violation of artanh s_D,
/// with the collinear addition identity as an exact sub-check. Evidence
/// only; reported, never asserted.
inline VerificationReport search_artanh_triangle(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto g = detail::trial_rng(seed, i);
    Complex x = detail::sample_disk(g);
    Complex y = detail::sample_disk(g);
    Complex z = detail::sample_disk(g);
    double axz = std::atanh(s_disk(x, z).value);
    double axy = std::atanh(s_disk(x, y).value);
    double ayz = std::atanh(s_disk(y, z).value);
    m.observe(axy + ayz - axz, [&] {
      return nlohmann::ordered_json::array({"triangle", detail::j_point(x), detail::j_point(y),
                                            detail::j_point(z)});
    });
    // collinear diagonal triple 0 < r < s < t < 1: exact addition identity
    double v0 = 0.998 * g.unit(), v1 = 0.998 * g.unit(), v2 = 0.998 * g.unit();
    double r = std::min({v0, v1, v2}) + 1e-4;
    double t = std::max({v0, v1, v2}) + 2e-4;
    double s = v0 + v1 + v2 - std::min({v0, v1, v2}) - std::max({v0, v1, v2}) + 1.5e-4;
    if (r < s && s < t && t < 1.0) {
      double lhs = std::atanh(s_disk(Complex(r, 0), Complex(t, 0)).value);
      double rhs = std::atanh(s_disk(Complex(r, 0), Complex(s, 0)).value) +
                   std::atanh(s_disk(Complex(s, 0), Complex(t, 0)).value);
      m.observe(-std::abs(lhs - rhs), [&] {
        return nlohmann::ordered_json::array({"collinear addition", r, s, t});
      });
      m.observe(-std::abs(std::atanh(s_disk(Complex(r, 0), Complex(s, 0)).value) -
                          0.5 * std::log((1.0 - r) / (1.0 - s))),
                [&] { return nlohmann::ordered_json::array({"diagonal closed form", r, s}); });
    }
  }
  VerificationReport rep = detail::finish("conjecture-artanh", trials, seed, m, timer, 1e-9, true);
  return rep;
}

/// Randomized search for R(p, a) > 1 + |a| over a grid of centers, p = 1, 2.
/// Evidence only; reported, never asserted.
inline VerificationReport search_mobius_ratio(std::uint64_t trials, std::uint64_t seed) {
  detail::SuiteTimer timer;
  detail::MarginTracker m;
  const double centers[] = {0.2, 0.5, 0.8};
  const double ps[] = {1.0, 2.0};
  std::uint64_t per_combo = std::max<std::uint64_t>(1, trials / 6);
  std::uint64_t combo = 0;
  for (double p : ps) {
    for (double av : centers) {
      LipschitzExperiment e =
          lipschitz_sup_estimate(PExponent::finite(p), Complex(av, 0.0), per_combo, seed + combo);
      m.observe(1.0 + av - e.observed_sup, [&] {
        return nlohmann::ordered_json::array({"R(p,a) vs 1+|a| p=" + std::to_string(p) +
                                                  " a=" + std::to_string(av),
                                              detail::j_point(e.witness.first),
                                              detail::j_point(e.witness.second)});
      });
      ++combo;
    }
  }
  return detail::finish("conjecture-mobius", trials, seed, m, timer, 1e-9, true);
}

// ------------------------------------------------------------ registry

using SuiteFn = std::function<VerificationReport(std::uint64_t, std::uint64_t)>;

inline const std::map<std::string, SuiteFn>& suite_registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"sandwich", suite_sandwich},
      {"p-monotonicity", suite_p_monotonicity},
      {"inf-bracketing", suite_inf_bracketing},
      {"s-vs-m", suite_s_vs_m},
      {"hyperbolic-bounds", suite_hyperbolic_bounds},
      {"s-vs-pointpair", suite_s_vs_pointpair},
      {"halfplane-lower-bounds", suite_halfplane_lower_bounds},
      {"halfplane-upper-bound", suite_halfplane_upper_bound},
      {"inversion-comparison", suite_inversion_comparison},
      {"metric-axioms", suite_metric_axioms},
      {"oracle-agreement", suite_oracle_agreement},
      {"equality-attainment", suite_equality_attainment},
      {"domain-monotonicity", suite_domain_monotonicity},
      {"ball-inclusions", suite_ball_inclusions},
      {"distortion", suite_distortion},
      {"mobius-experiments", suite_mobius_experiments},
      {"conjecture-artanh", search_artanh_triangle},
      {"conjecture-mobius", search_mobius_ratio},
  };
  return reg;
}

inline VerificationReport run_suite(const std::string& name, std::uint64_t trials,
                                    std::uint64_t seed) {
  auto it = suite_registry().find(name);
  if (it == suite_registry().end())
    throw std::invalid_argument("run_suite: unknown suite \"" + name + "\"");
  return it->second(trials, seed);
}

/// One report per named inequality (all non-conjecture suites).
inline std::vector<VerificationReport> run_inequality_suite(std::uint64_t trials,
                                                            std::uint64_t seed) {
  std::vector<VerificationReport> out;
  for (const auto& [name, fn] : suite_registry()) {
    if (name.rfind("conjecture-", 0) == 0) continue;
    out.push_back(fn(trials, seed));
  }
  return out;
}

}  // namespace barrmet
