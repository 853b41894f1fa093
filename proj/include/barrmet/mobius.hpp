#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include "barrmet/barrlund.hpp"
#include "barrmet/core.hpp"
#include "barrmet/numerics.hpp"

namespace barrmet {

// ------------------------------------------------------ conformal maps

/// Disk automorphism T_a(z) = (z - a) / (1 - conj(a) z); a hyperbolic
/// isometry with T_a(a) = 0.
inline Complex mobius_disk(Complex a, Complex z) {
  detail::require_in_disk(a, "mobius_disk");
  detail::require_in_disk(z, "mobius_disk");
  return (z - a) / (1.0 - std::conj(a) * z);
}

/// Cayley map H -> D, z -> (z - i)/(z + i), and its inverse.
inline Complex cayley(Complex z, bool inverse = false) {
  static const Complex i(0.0, 1.0);
  if (inverse) {
    detail::require_in_disk(z, "cayley (inverse)");
    return i * (1.0 + z) / (1.0 - z);
  }
  detail::require_in_halfplane(z, "cayley");
  return (z - i) / (z + i);
}

/// K-quasiconformal radial stretch z -> |z|^(1/K - 1) z; fixes arguments and
/// maps the upper half-plane onto itself.
inline Complex radial_stretch(double K, Complex z) {
  if (!(K >= 1.0)) throw OutOfRange("radial_stretch: requires K >= 1");
  require_finite(z, "radial_stretch");
  if (z == Complex(0.0)) throw ZeroInput("radial_stretch: z must be nonzero");
  return std::pow(std::abs(z), 1.0 / K - 1.0) * z;
}

/// z -> z/|z|^2, an anticonformal self-map of the upper half-plane.
inline Complex inversion(Complex z) {
  require_finite(z, "inversion");
  if (z == Complex(0.0)) throw ZeroInput("inversion: z must be nonzero");
  return z / std::norm(z);
}

// -------------------------------------------------- special functions

/// Modulus of the planar Groetzsch ring, mu(r) = (pi/2) K(r') / K(r),
/// through the arithmetic-geometric mean. Arguments too close to 0 or 1 are
/// refused rather than extrapolated.
inline double grotzsch_mu(double r) {
  if (!(r >= 1e-8 && r <= 1.0 - 1e-8))
    throw OutOfRange("grotzsch_mu: r must lie in [1e-8, 1 - 1e-8]");
  double rp = std::sqrt((1.0 - r) * (1.0 + r));
  // K(r) = pi / (2 agm(1, r')), hence mu(r) = (pi/2) agm(1, r') / agm(1, r)
  return (std::numbers::pi / 2.0) * agm(1.0, rp) / agm(1.0, r);
}

/// d mu / dr = -agm(1, r')^2 / (r r'^2).
inline double grotzsch_mu_deriv(double r) {
  double rp2 = (1.0 - r) * (1.0 + r);
  double g = agm(1.0, std::sqrt(rp2));
  return -g * g / (r * rp2);
}

/// Distortion function phi_K(r) = mu^{-1}(mu(r)/K), solved by bisection with
/// Newton polishing (mu' steepens like 1/(1-x^2) toward 1, so the bisection
/// bracket alone does not pin the residual); phi_1 is the identity.
inline double phi_k(double K, double r) {
  if (!(K >= 1.0)) throw OutOfRange("phi_k: requires K >= 1");
  if (!(r > 0.0 && r < 1.0)) throw OutOfRange("phi_k: requires 0 < r < 1");
  if (K == 1.0) return r;
  double target = grotzsch_mu(r) / K;
  double lo = 1e-8, hi = 1.0 - 1e-8;
  if (grotzsch_mu(hi) > target)
    throw OutOfRange("phi_k: result closer to 1 than the evaluation guard");
  auto f = [&](double x) { return grotzsch_mu(x) - target; };
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    double step = f(x) / grotzsch_mu_deriv(x);
    double next = x - step;
    if (!(next > lo - 1e-9 && next < hi + 1e-9)) break;
    x = std::clamp(next, 1e-8, 1.0 - 1e-8);
  }
  return x;
}

// ------------------------------------------------- Lipschitz experiment

/// Result of a randomized search for the smallest Lipschitz constant of T_a
/// with respect to b_{D,p}.
struct LipschitzExperiment {
  PExponent p;
  Complex a;
  std::uint64_t trials;
  std::uint64_t seed;
  double observed_sup;
  std::pair<Complex, Complex> witness;
};

namespace detail {

struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Generator for trial `index` of run `seed`; parallel and serial runs see
/// identical streams.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed);
  std::uint64_t base = mix.next();
  return SplitMix64(base ^ (index * 0xA24BAED4963EE407ull + 0x9FB21C651E98DF25ull));
}

inline Complex sample_disk(SplitMix64& g, double radius = 0.999) {
  double r = radius * std::sqrt(g.unit());
  return std::polar(r, 2.0 * std::numbers::pi * g.unit());
}

inline Complex sample_halfplane(SplitMix64& g) {
  return {-10.0 + 20.0 * g.unit(), 0.001 + (10.0 - 0.001) * g.unit()};
}

}  // namespace detail

/// Seeded search for sup b_{D,p}(T_a z1, T_a z2) / b_{D,p}(z1, z2) over
/// random pairs plus the near-extremal radial family along arg(-a).
inline LipschitzExperiment lipschitz_sup_estimate(PExponent p, Complex a, std::uint64_t trials,
                                                  std::uint64_t seed) {
  detail::require_in_disk(a, "lipschitz_sup_estimate");
  if (trials < 1) throw std::invalid_argument("lipschitz_sup_estimate: trials must be >= 1");
  const Domain disk = UnitDisk{};

  double sup = 0.0;
  std::pair<Complex, Complex> witness{Complex(0.0), Complex(0.0)};
  auto consider = [&](Complex z1, Complex z2) {
    if (z1 == z2) return;
    double denom = b(disk, p, z1, z2).value;
    if (denom == 0.0) return;
    double ratio = b(disk, p, mobius_disk(a, z1), mobius_disk(a, z2)).value / denom;
    if (ratio > sup) {
      sup = ratio;
      witness = {z1, z2};
    }
  };

  for (std::uint64_t i = 0; i < trials; ++i) {
    auto g = detail::trial_rng(seed, i);
    consider(detail::sample_disk(g), detail::sample_disk(g));
  }
  if (a != Complex(0.0)) {
    double alpha = std::arg(-a);
    for (double r : {1e-2, 1e-3, 1e-4, 1e-5})
      consider(std::polar(r, alpha), std::polar(2.0 * r, alpha));
  }
  return {p, a, trials, seed, sup, witness};
}

}  // namespace barrmet
