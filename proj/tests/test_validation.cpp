#include <cmath>
#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "barrmet/validation.hpp"

using namespace barrmet;
using Catch::Approx;

namespace {

Ring square(double a) {
  return {{a, -a}, {a, a}, {-a, a}, {-a, -a}};
}

nlohmann::ordered_json report_without_runtime(const VerificationReport& r) {
  auto j = r.to_json();
  j.erase("runtime_ms");
  return j;
}

}  // namespace

TEST_CASE("oracle_b matches the p = 2 closed form on the disk") {
  MetricResult o = oracle_b(UnitDisk{}, PExponent::finite(2.0), Complex(0.3, 0), Complex(0.5, 0),
                            8192);
  CHECK(o.value == Approx(0.2 / std::sqrt(0.74)).epsilon(1e-7));
  CHECK(o.method == Method::Scan);
  REQUIRE(o.extremal_point.has_value());
  CHECK(std::abs(*o.extremal_point - Complex(1.0, 0.0)) < 1e-4);
}

TEST_CASE("oracle_b on the half-plane at p = infinity") {
  MetricResult o = oracle_b(UpperHalfPlane{}, PExponent::infinity(), Complex(0, 1), Complex(2, 1),
                            8192);
  CHECK(o.value == Approx(std::numbers::sqrt2).epsilon(1e-6));
}

TEST_CASE("oracle_b is exact on the punctured plane") {
  for (double p : {1.0, 2.0, 3.0}) {
    MetricResult o = oracle_b(PuncturedPlane{}, PExponent::finite(p), Complex(1, 0),
                              Complex(-1, 0), 64);
    CHECK(o.value == Approx(std::pow(2.0, 1.0 - 1.0 / p)).epsilon(1e-14));
  }
}

TEST_CASE("oracle_b guards") {
  CHECK_THROWS_AS(oracle_b(UnitDisk{}, PExponent::finite(2.0), Complex(2, 0), Complex(0, 0), 128),
                  OutOfDomain);
  CHECK_THROWS_AS(oracle_b(UnitDisk{}, PExponent::finite(2.0), Complex(0.2, 0), Complex(0, 0), 8),
                  std::invalid_argument);
  CHECK(oracle_b(UnitDisk{}, PExponent::finite(2.0), Complex(0.2, 0), Complex(0.2, 0), 128).value ==
        0.0);
}

TEST_CASE("oracle extremal point: tangency configurations on the disk at p = inf") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    Complex z1 = std::polar(0.2 + 0.7 * u01(gen), 2.0 * std::numbers::pi * u01(gen));
    Complex u = z1 / std::abs(z1);
    // place z2 inside the tangency disk around the radial boundary point
    Complex z2 = u + std::polar((1.0 - std::abs(z1)) * 0.9 * u01(gen),
                                2.0 * std::numbers::pi * u01(gen));
    if (!(std::abs(z2) < 1.0) || z1 == z2) continue;
    if (!(std::abs(z2 - u) <= 1.0 - std::abs(z1))) continue;
    ++checked;
    MetricResult o = oracle_b(UnitDisk{}, PExponent::infinity(), z1, z2, 8192);
    REQUIRE(o.extremal_point.has_value());
    CHECK(std::abs(*o.extremal_point - u) < 1e-6);
  }
  CHECK(checked >= 30);
}

TEST_CASE("complement variant dominates the boundary variant and is monotone") {
  Domain wide = PolygonWithHoles(square(4.0), {square(1.0)});
  Domain narrow = PolygonWithHoles(square(4.0), {square(2.0)});
  const PExponent two = PExponent::finite(2.0);
  const Complex z1(3, 0), z2(-3, 0);

  double b_wide = oracle_b(wide, two, z1, z2, 4096).value;
  double bc_wide = oracle_b(wide, two, z1, z2, 4096, SupremumOver::Complement).value;
  double bc_narrow = oracle_b(narrow, two, z1, z2, 4096, SupremumOver::Complement).value;
  CHECK(bc_wide >= b_wide - 1e-12);
  // midpoint 0 lies in both complements: both variants see the unconstrained minimum
  CHECK(bc_wide == Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(bc_narrow == Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(bc_narrow >= bc_wide - 1e-9);

  // a pair whose midpoint stays in the domain: complement = boundary variant
  Complex w1(3, 0), w2(3, 2);
  CHECK(oracle_b(wide, two, w1, w2, 4096, SupremumOver::Complement).value ==
        Approx(oracle_b(wide, two, w1, w2, 4096).value).epsilon(1e-12));
}

TEST_CASE("reports are deterministic given the seed (runtime aside)") {
  VerificationReport a = suite_sandwich(60, 123);
  VerificationReport bb = suite_sandwich(60, 123);
  CHECK(report_without_runtime(a) == report_without_runtime(bb));
  VerificationReport c = suite_sandwich(60, 124);
  CHECK(a.seed != c.seed);

  VerificationReport s1 = search_artanh_triangle(100, 5);
  VerificationReport s2 = search_artanh_triangle(100, 5);
  CHECK(report_without_runtime(s1) == report_without_runtime(s2));
}

TEST_CASE("report JSON carries the documented fields in order") {
  VerificationReport r = suite_s_vs_pointpair(50, 9);
  auto j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() >= 7);
  CHECK(keys[0] == "suite");
  CHECK(keys[1] == "trials");
  CHECK(keys[2] == "seed");
  CHECK(keys[3] == "worst_margin");
  CHECK(keys[4] == "witness");
  CHECK(keys[5] == "passed");
  CHECK(keys[6] == "runtime_ms");
  CHECK_FALSE(j.contains("conjecture"));

  auto cj = search_artanh_triangle(20, 2).to_json();
  CHECK(cj.at("conjecture") == true);
}

TEST_CASE("every registered suite passes a quick run") {
  for (const auto& [name, fn] : suite_registry()) {
    INFO(name);
    VerificationReport r = fn(name == "oracle-agreement" ? 40 : 150, 77);
    INFO(r.to_json().dump());
    CHECK(r.passed);
  }
}

TEST_CASE("run_suite and run_inequality_suite") {
  CHECK_THROWS_AS(run_suite("no-such-suite", 10, 1), std::invalid_argument);
  VerificationReport r = run_suite("s-vs-m", 100, 3);
  CHECK(r.suite == "s-vs-m");
  CHECK(r.passed);

  auto all = run_inequality_suite(30, 4);
  CHECK(all.size() == suite_registry().size() - 2);  // conjectures excluded
  for (const auto& rep : all) CHECK(rep.conjecture == false);
}

TEST_CASE("artanh-triangle search: collinear identity and degenerate triples") {
  VerificationReport r = search_artanh_triangle(2000, 11);
  CHECK(r.passed);
  CHECK(r.conjecture);
  CHECK(r.worst_margin >= -1e-9);

  // degenerate triple x = y gives exactly zero slack
  Complex x(0.2, 0.1), z(0.5, -0.3);
  double axz = std::atanh(s_disk(x, z).value);
  CHECK(axz + 0.0 >= axz);
}

TEST_CASE("mobius-ratio search stays below 1 + |a|") {
  VerificationReport r = search_mobius_ratio(600, 13);
  CHECK(r.passed);
  CHECK(r.conjecture);
  CHECK(r.worst_margin >= 0.0);  // no observed violation of the conjectured bound
}

TEST_CASE("check_ball_inclusions") {
  VerificationReport ok = check_ball_inclusions(0.3, 0.4, PExponent::finite(2.0), 2000);
  CHECK(ok.passed);
  CHECK(ok.worst_margin >= 0.0);

  VerificationReport p3 = check_ball_inclusions(0.4, 0.3, PExponent::finite(3.0), 1000);
  CHECK(p3.passed);

  VerificationReport tiny = check_ball_inclusions(0.3, 1e-6, PExponent::finite(2.0), 500);
  CHECK(tiny.passed);

  CHECK_THROWS_AS(check_ball_inclusions(0.0, 0.4, PExponent::finite(2.0), 100),
                  BadConfiguration);
  CHECK_THROWS_AS(check_ball_inclusions(0.5, 0.6, PExponent::finite(2.0), 100),
                  BadConfiguration);
  CHECK_THROWS_AS(check_ball_inclusions(0.5, -0.1, PExponent::finite(2.0), 100),
                  BadConfiguration);
}
