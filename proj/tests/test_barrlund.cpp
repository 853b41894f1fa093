#include <cmath>
#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "barrmet/barrlund.hpp"
#include "barrmet/oracle.hpp"

using namespace barrmet;
using Catch::Approx;

namespace {

std::mt19937_64 gen(99);

Complex random_disk_point(double radius = 0.95) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  return std::polar(radius * std::sqrt(u01(gen)), 2.0 * std::numbers::pi * u01(gen));
}

Complex random_halfplane_point() {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  return {-10.0 + 20.0 * u01(gen), 0.01 + 10.0 * u01(gen)};
}

Ring square(double a) {
  return {{a, -a}, {a, a}, {-a, a}, {-a, -a}};
}

}  // namespace

TEST_CASE("b on the punctured plane attains the p-sup at symmetric pairs") {
  for (double p : {1.0, 2.0, 3.0, 10.0}) {
    for (double t : {0.5, 1.0, 2.0}) {
      MetricResult r =
          b(PuncturedPlane{}, PExponent::finite(p), Complex(t, 0.0), Complex(-t, 0.0));
      CHECK(r.value == Approx(std::pow(2.0, 1.0 - 1.0 / p)).epsilon(1e-13));
    }
  }
}

TEST_CASE("square annuli: the two exact values") {
  Domain wide = PolygonWithHoles(square(4.0), {square(1.0)});
  Domain narrow = PolygonWithHoles(square(4.0), {square(2.0)});
  const PExponent two = PExponent::finite(2.0);
  double b_wide = b(wide, two, Complex(3, 0), Complex(-3, 0)).value;
  double b_narrow = b(narrow, two, Complex(3, 0), Complex(-3, 0)).value;
  CHECK(b_wide == Approx(6.0 / std::sqrt(20.0)).epsilon(1e-13));
  CHECK(b_narrow == Approx(6.0 / std::sqrt(26.0)).epsilon(1e-13));
  CHECK(b_narrow < b_wide);  // monotonicity reversal on a non-convex pair of domains
}

TEST_CASE("b dispatcher: disk p = 1 hits the reflection solver") {
  MetricResult r = b(UnitDisk{}, PExponent::finite(1.0), Complex(0.3, 0), Complex(0.5, 0));
  CHECK(r.value == Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(r.method == Method::QuarticSolve);
}

TEST_CASE("b rejects boundary and exterior points, accepts coincident ones") {
  CHECK_THROWS_AS(b(UnitDisk{}, PExponent::finite(2.0), Complex(1.0, 0), Complex(0, 0)),
                  OutOfDomain);
  CHECK_THROWS_AS(b(UnitDisk{}, PExponent::finite(2.0), Complex(2.0, 0), Complex(0, 0)),
                  OutOfDomain);
  Domain annulus = PolygonWithHoles(square(4.0), {square(1.0)});
  CHECK_THROWS_AS(b(annulus, PExponent::finite(2.0), Complex(4.0, 0), Complex(3, 0)),
                  OutOfDomain);
  CHECK(b(UnitDisk{}, PExponent::finite(2.0), Complex(0.4, 0.1), Complex(0.4, 0.1)).value == 0.0);
}

TEST_CASE("b_p2_midpoint") {
  MetricResult disk = b_p2_midpoint(UnitDisk{}, Complex(0.3, 0), Complex(0.5, 0));
  CHECK(disk.value == Approx(0.2 / std::sqrt(0.74)).epsilon(1e-14));
  REQUIRE(disk.extremal_point.has_value());
  CHECK(std::abs(*disk.extremal_point - Complex(1.0, 0.0)) < 1e-14);

  MetricResult half = b_p2_midpoint(UpperHalfPlane{}, Complex(0, 1), Complex(2, 1));
  CHECK(half.value == Approx(1.0).epsilon(1e-14));
  REQUIRE(half.extremal_point.has_value());
  CHECK(std::abs(*half.extremal_point - Complex(1.0, 0.0)) < 1e-14);

  CHECK(b_p2_midpoint(UnitDisk{}, Complex(0.2, 0.2), Complex(0.2, 0.2)).value == 0.0);
}

TEST_CASE("b_disk_p2_closed") {
  // radial limit toward the boundary
  auto radial = [](double r) { return b_disk_p2_closed(Complex(r, 0), Complex(0, 0)).value; };
  CHECK(radial(0.5) == Approx(0.5 / std::sqrt(1.0 + 0.25)).epsilon(1e-14));
  CHECK(std::abs(radial(0.99999) - 1.0) < 1e-4);

  for (double t : {0.2, 0.6, 0.9}) {
    CHECK(b_disk_p2_closed(Complex(t, 0), Complex(-t, 0)).value ==
          Approx(2.0 * t / std::sqrt(2.0 + 2.0 * t * t)).epsilon(1e-14));
  }

  // algebraic identity with the midpoint route
  for (int trial = 0; trial < 1000; ++trial) {
    Complex z1 = random_disk_point(0.999), z2 = random_disk_point(0.999);
    CHECK(b_disk_p2_closed(z1, z2).value ==
          Approx(b_p2_midpoint(UnitDisk{}, z1, z2).value).epsilon(1e-12).margin(1e-12));
  }

  MetricResult r = b_disk_p2_closed(Complex(0.1, 0.2), Complex(0.3, 0.1));
  REQUIRE(r.extremal_point.has_value());
  Complex s = Complex(0.4, 0.3);
  CHECK(std::abs(*r.extremal_point - s / std::abs(s)) < 1e-14);
}

TEST_CASE("b_halfplane_p2_closed") {
  CHECK(b_halfplane_p2_closed(Complex(0, 1), Complex(2, 1)).value == Approx(1.0).epsilon(1e-14));
  CHECK(b_halfplane_p2_closed(Complex(0.3, 2), Complex(0.3, 2)).value == 0.0);

  for (int trial = 0; trial < 1000; ++trial) {
    Complex z1 = random_halfplane_point(), z2 = random_halfplane_point();
    CHECK(b_halfplane_p2_closed(z1, z2).value ==
          Approx(b_p2_midpoint(UpperHalfPlane{}, z1, z2).value).epsilon(1e-12).margin(1e-12));
    // equal heights attain sqrt(2) s_H
    Complex w1(z1.real(), z1.imag()), w2(z2.real(), z1.imag());
    if (w1 != w2) {
      CHECK(b_halfplane_p2_closed(w1, w2).value ==
            Approx(std::numbers::sqrt2 * s_halfplane(w1, w2).value).epsilon(1e-12));
    }
  }
}

TEST_CASE("b_halfplane_p") {
  // p = 1 recovers the triangular ratio metric
  for (int trial = 0; trial < 500; ++trial) {
    Complex z1 = random_halfplane_point(), z2 = random_halfplane_point();
    CHECK(b_halfplane_p(1.0, z1, z2).value ==
          Approx(s_halfplane(z1, z2).value).epsilon(1e-10).margin(1e-12));
    CHECK(b_halfplane_p(2.0, z1, z2).value ==
          Approx(b_halfplane_p2_closed(z1, z2).value).epsilon(1e-10).margin(1e-12));
  }

  // equal heights attain 2^(1-1/p) s_H
  for (double p : {1.0, 2.0, 5.0}) {
    for (int trial = 0; trial < 200; ++trial) {
      Complex z1 = random_halfplane_point();
      Complex z2(z1.real() + 3.0, z1.imag());
      CHECK(b_halfplane_p(p, z1, z2).value ==
            Approx(std::pow(2.0, 1.0 - 1.0 / p) * s_halfplane(z1, z2).value).epsilon(1e-10));
    }
  }

  // the critical point sits between the real parts and the residual is tiny
  MetricResult r = b_halfplane_p(3.0, Complex(1, 1), Complex(3, 2));
  REQUIRE(r.extremal_point.has_value());
  CHECK(r.extremal_point->real() > 1.0);
  CHECK(r.extremal_point->real() < 3.0);
  CHECK(r.method == Method::RootSolve);
  CHECK(r.residual < 1e-10);

  // vertical pair: closed-form branch
  MetricResult v = b_halfplane_p(3.0, Complex(0.5, 1.0), Complex(0.5, 4.0));
  CHECK(v.value == Approx(3.0 / std::pow(1.0 + 64.0, 1.0 / 3.0)).epsilon(1e-13));
  CHECK(v.method == Method::ClosedForm);
}

TEST_CASE("b_circle_p agrees with the independent p = 1, 2 routes") {
  for (int trial = 0; trial < 1000; ++trial) {
    Complex z1 = random_disk_point(0.999), z2 = random_disk_point(0.999);
    CHECK(b_circle_p(false, 2.0, z1, z2).value ==
          Approx(b_disk_p2_closed(z1, z2).value).epsilon(1e-9).margin(1e-9));
    CHECK(b_circle_p(false, 1.0, z1, z2).value ==
          Approx(s_disk(z1, z2).value).epsilon(1e-9).margin(1e-9));
  }
  CHECK_THROWS_AS(b_circle_p(false, 2.0, Complex(1.5, 0), Complex(0, 0)), OutOfDomain);
  CHECK_THROWS_AS(b_circle_p(true, 2.0, Complex(0.5, 0), Complex(2, 0)), OutOfDomain);
}

TEST_CASE("inversion comparison: interior b < exterior b at reciprocal points") {
  for (double p : {1.0, 2.0, 3.0}) {
    for (int trial = 0; trial < 200; ++trial) {
      Complex z1 = random_disk_point(), z2 = random_disk_point();
      if (std::abs(z1) < 1e-2 || std::abs(z2) < 1e-2 || z1 == z2) continue;
      double inner = b(UnitDisk{}, PExponent::finite(p), z1, z2).value;
      double outer = b(ExteriorUnitDisk{}, PExponent::finite(p), 1.0 / z1, 1.0 / z2).value;
      CHECK(outer > inner);
    }
  }
}

TEST_CASE("b_halfplane_inf") {
  MetricResult r = b_halfplane_inf(Complex(0, 1), Complex(2, 1));
  CHECK(r.value == Approx(std::numbers::sqrt2).epsilon(1e-14));
  REQUIRE(r.extremal_point.has_value());
  CHECK(std::abs(*r.extremal_point - Complex(1.0, 0.0)) < 1e-14);

  // vertical pair takes the max-height branch
  CHECK(b_halfplane_inf(Complex(0, 1), Complex(0, 3)).value == Approx(2.0 / 3.0).epsilon(1e-14));

  // bisector foot outside the real-part interval
  MetricResult far = b_halfplane_inf(Complex(0, 2), Complex(1, 0.1));
  CHECK(far.value == Approx(std::abs(Complex(0, 2) - Complex(1, 0.1)) / 2.0).epsilon(1e-14));
  REQUIRE(far.extremal_point.has_value());
  CHECK(far.extremal_point->real() == 0.0);

  for (double p : {1.0, 2.0, 3.0}) {
    for (int trial = 0; trial < 300; ++trial) {
      Complex z1 = random_halfplane_point(), z2 = random_halfplane_point();
      double bp = b(UpperHalfPlane{}, PExponent::finite(p), z1, z2).value;
      double bi = b_halfplane_inf(z1, z2).value;
      CHECK(bi >= bp - 1e-10);
      CHECK(bi <= std::pow(2.0, 1.0 / p) * bp + 1e-10);
    }
  }
}

TEST_CASE("b_disk_inf") {
  // tangency branch
  MetricResult t = b_disk_inf(Complex(0.5, 0), Complex(0.6, 0));
  CHECK(t.value == Approx(0.2).epsilon(1e-14));
  REQUIRE(t.extremal_point.has_value());
  CHECK(std::abs(*t.extremal_point - Complex(1.0, 0.0)) < 1e-14);

  // bisector branch: antipodal pair
  MetricResult a = b_disk_inf(Complex(0.5, 0), Complex(-0.5, 0));
  CHECK(a.value == Approx(1.0 / std::sqrt(1.25)).epsilon(1e-14));
  REQUIRE(a.extremal_point.has_value());
  CHECK(std::abs(std::abs(a.extremal_point->imag()) - 1.0) < 1e-14);

  // a focus at the origin
  CHECK(b_disk_inf(Complex(0, 0), Complex(0.3, 0.4)).value == Approx(0.5).epsilon(1e-14));
  CHECK(b_disk_inf(Complex(0.2, 0.1), Complex(0.2, 0.1)).value == 0.0);

  // the reported extremal point realizes the max-distance minimum
  for (int trial = 0; trial < 500; ++trial) {
    Complex z1 = random_disk_point(), z2 = random_disk_point();
    if (z1 == z2) continue;
    MetricResult r = b_disk_inf(z1, z2);
    REQUIRE(r.extremal_point.has_value());
    double at_reported = std::max(std::abs(z1 - *r.extremal_point),
                                  std::abs(z2 - *r.extremal_point));
    CHECK(std::abs(z1 - z2) / at_reported == Approx(r.value).epsilon(1e-12));
  }
}

TEST_CASE("b dispatcher: oracle fallback for the unsupported combinations") {
  Domain annulus = PolygonWithHoles(square(4.0), {square(1.0)});
  MetricResult r = b(annulus, PExponent::finite(3.0), Complex(3, 0), Complex(-3, 0));
  CHECK(r.method == Method::Scan);
  CHECK(r.value == Approx(oracle_b(annulus, PExponent::finite(3.0), Complex(3, 0), Complex(-3, 0))
                              .value));

  MetricResult s = b(annulus, PExponent::finite(1.0), Complex(3, 0), Complex(3, 2));
  CHECK(s.method == Method::Scan);
  CHECK(s.value ==
        Approx(oracle_b(annulus, PExponent::finite(1.0), Complex(3, 0), Complex(3, 2)).value));

  MetricResult e = b(ExteriorUnitDisk{}, PExponent::infinity(), Complex(3, 0), Complex(0, 2));
  CHECK(e.method == Method::Scan);

  MetricResult p = b(PuncturedPlane{}, PExponent::infinity(), Complex(1, 0), Complex(-1, 0));
  CHECK(p.method == Method::Scan);
  CHECK(p.value == Approx(2.0).epsilon(1e-13));  // |z1-z2| / max(|z1|, |z2|)
}

TEST_CASE("sandwich and p-monotonicity spot checks") {
  const Domain domains[] = {Domain{UnitDisk{}}, Domain{UpperHalfPlane{}}};
  for (const Domain& d : domains) {
    bool disk = std::holds_alternative<UnitDisk>(d);
    for (int trial = 0; trial < 100; ++trial) {
      Complex z1 = disk ? random_disk_point() : random_halfplane_point();
      Complex z2 = disk ? random_disk_point() : random_halfplane_point();
      double s = b(d, PExponent::finite(1.0), z1, z2).value;
      double prev = s;
      for (double p : {1.5, 2.0, 3.0, 10.0}) {
        double bp = b(d, PExponent::finite(p), z1, z2).value;
        CHECK(bp >= s - 1e-10);
        CHECK(bp <= std::pow(2.0, 1.0 - 1.0 / p) * s + 1e-10);
        CHECK(bp >= prev - 1e-10);  // monotone in p
        prev = bp;
      }
    }
  }
}

TEST_CASE("b values stay below the universal supremum") {
  const PExponent ps[] = {PExponent::finite(1.0), PExponent::finite(2.5), PExponent::infinity()};
  for (PExponent p : ps) {
    for (int trial = 0; trial < 200; ++trial) {
      Complex z1 = random_disk_point(0.999), z2 = random_disk_point(0.999);
      CHECK(b(UnitDisk{}, p, z1, z2).value <= p.sup_value() + 1e-10);
    }
  }
}
