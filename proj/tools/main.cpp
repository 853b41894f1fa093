// Command-line front end: distance queries, level-set polylines, property
// suites and conjecture searches.
//
// Exit codes: 0 success, 1 argument/parse error, 2 out-of-domain or invalid
// request, 3 a selected verification suite failed.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "barrmet/barrmet.hpp"

namespace {

using barrmet::Complex;
using barrmet::Domain;
using barrmet::MetricResult;
using barrmet::PExponent;
using json = nlohmann::ordered_json;

Complex parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("point", "expected \"x,y\", got \"" + s + "\"");
  std::size_t used = 0;
  double x = std::stod(s.substr(0, comma), &used);
  double y = std::stod(s.substr(comma + 1));
  return {x, y};
}

PExponent parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity") return PExponent::infinity();
  return PExponent::finite(std::stod(s));
}

Domain build_domain(const std::string& name, const std::string& center,
                    const std::string& polygon_file) {
  if (name == "disk") return barrmet::UnitDisk{};
  if (name == "halfplane") return barrmet::UpperHalfPlane{};
  if (name == "exterior") return barrmet::ExteriorUnitDisk{};
  if (name == "punctured") return barrmet::PuncturedPlane{parse_point(center)};
  if (name == "polygon") {
    if (polygon_file.empty())
      throw CLI::ValidationError("--domain", "polygon domain needs --polygon FILE");
    return barrmet::load_polygon(polygon_file);
  }
  throw CLI::ValidationError("--domain", "unknown domain \"" + name + "\"");
}

json point_json(const std::optional<Complex>& z) {
  if (!z) return nullptr;
  return json::array({z->real(), z->imag()});
}

MetricResult evaluate_metric(const Domain& d, const std::string& metric, PExponent p,
                             Complex z1, Complex z2) {
  if (metric == "b") return barrmet::b(d, p, z1, z2);
  if (metric == "s") return barrmet::b(d, PExponent::finite(1.0), z1, z2);
  if (metric == "rho") {
    if (std::holds_alternative<barrmet::UnitDisk>(d))
      return {barrmet::hyperbolic_disk(z1, z2), std::nullopt, barrmet::Method::ClosedForm, 0.0};
    if (std::holds_alternative<barrmet::UpperHalfPlane>(d))
      return {barrmet::hyperbolic_halfplane(z1, z2), std::nullopt, barrmet::Method::ClosedForm,
              0.0};
    throw CLI::ValidationError("--metric", "rho needs the disk or the half-plane");
  }
  if (metric == "pp")
    return {barrmet::point_pair(d, z1, z2), std::nullopt, barrmet::Method::ClosedForm, 0.0};
  if (metric == "m") {
    if (!std::holds_alternative<barrmet::UnitDisk>(d))
      throw CLI::ValidationError("--metric", "m is defined on the disk");
    return {barrmet::m_disk(z1, z2), std::nullopt, barrmet::Method::ClosedForm, 0.0};
  }
  throw CLI::ValidationError("--metric", "unknown metric \"" + metric + "\"");
}

int stream_reports(const std::vector<barrmet::VerificationReport>& reports) {
  bool all_passed = true;
  for (const auto& r : reports) {
    std::cout << r.to_json().dump() << "\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barrlund p-relative distances and companion intrinsic metrics"};
  app.require_subcommand(1);

  std::string domain_name = "disk", center = "0,0", polygon_file, metric = "b";
  std::string p_str = "1", z1_str, z2_str;

  auto* dist = app.add_subcommand("dist", "distance between two points (JSON on stdout)");
  dist->add_option("--domain", domain_name, "disk|halfplane|exterior|punctured|polygon");
  dist->add_option("--center", center, "puncture location for --domain punctured");
  dist->add_option("--polygon", polygon_file, "polygon JSON file");
  dist->add_option("--metric", metric, "b|s|rho|pp|m");
  dist->add_option("--p", p_str, "exponent (decimal or \"inf\")");
  dist->add_option("--z1", z1_str, "first point \"x,y\"")->required();
  dist->add_option("--z2", z2_str, "second point \"x,y\"")->required();

  std::string levels_str = "0.4,0.6,0.8,1.0";
  std::size_t grid = 128;
  std::string ls_center = "0,0";
  auto* levelset = app.add_subcommand("levelset", "level-set polylines as CSV (level,x,y)");
  levelset->add_option("--domain", domain_name, "disk|halfplane|exterior|punctured|polygon");
  levelset->add_option("--center", center, "puncture location for --domain punctured");
  levelset->add_option("--polygon", polygon_file, "polygon JSON file");
  levelset->add_option("--metric", metric, "b|s|rho|pp|m");
  levelset->add_option("--p", p_str, "exponent (decimal or \"inf\")");
  levelset->add_option("--at", ls_center, "metric center \"x,y\"")->required();
  levelset->add_option("--levels", levels_str, "comma-separated increasing levels");
  levelset->add_option("--grid", grid, "grid resolution (>= 16)");

  std::string suite = "all";
  std::uint64_t trials = 10000, seed = 1;
  auto* verify = app.add_subcommand("verify", "run property suites (JSON report per line)");
  verify->add_option("--suite", suite, "suite name or \"all\"");
  verify->add_option("--trials", trials, "trials per suite");
  verify->add_option("--seed", seed, "random seed");

  std::string conjecture = "all";
  std::uint64_t search_trials = 100000, search_seed = 1;
  auto* search = app.add_subcommand("search", "conjecture searches (evidence only)");
  search->add_option("--conjecture", conjecture, "artanh|mobius|all");
  search->add_option("--trials", search_trials, "trials");
  search->add_option("--seed", search_seed, "random seed");

  double phi_K = 2.0, phi_r = 0.5;
  auto* phi = app.add_subcommand("phi", "distortion function and its growth bound");
  phi->add_option("--K", phi_K, "maximal dilatation (>= 1)")->required();
  phi->add_option("--r", phi_r, "argument in (0,1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*dist) {
      Domain d = build_domain(domain_name, center, polygon_file);
      MetricResult r =
          evaluate_metric(d, metric, parse_p(p_str), parse_point(z1_str), parse_point(z2_str));
      json out;
      out["value"] = r.value;
      out["extremal_point"] = point_json(r.extremal_point);
      out["method"] = barrmet::method_name(r.method);
      out["residual"] = r.residual;
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (*levelset) {
      Domain d = build_domain(domain_name, center, polygon_file);
      Complex at = parse_point(ls_center);
      PExponent p = parse_p(p_str);
      if (!barrmet::contains(d, at)) {
        std::cerr << "levelset: center is not in the domain\n";
        return 2;
      }
      std::vector<double> levels;
      for (std::size_t pos = 0; pos < levels_str.size();) {
        auto next = levels_str.find(',', pos);
        if (next == std::string::npos) next = levels_str.size();
        levels.push_back(std::stod(levels_str.substr(pos, next - pos)));
        pos = next + 1;
      }
      std::vector<barrmet::LevelPolyline> lines;
      try {
        auto [lo, hi] = barrmet::domain_bbox(d, at);
        lines = barrmet::extract_level_sets(
            d, [&](Complex z) { return evaluate_metric(d, metric, p, at, z).value; }, lo, hi,
            grid, levels);
      } catch (const std::invalid_argument& e) {
        std::cerr << "levelset: " << e.what() << "\n";
        return 2;
      }
      bool first = true;
      for (const auto& line : lines) {
        if (!first) std::printf("\n");
        first = false;
        for (Complex z : line.points)
          std::printf("%.12g,%.12g,%.12g\n", line.level, z.real(), z.imag());
      }
      return 0;
    }

    if (*verify) {
      std::vector<barrmet::VerificationReport> reports;
      if (suite == "all") {
        for (const auto& [name, fn] : barrmet::suite_registry()) reports.push_back(fn(trials, seed));
      } else {
        reports.push_back(barrmet::run_suite(suite, trials, seed));
      }
      return stream_reports(reports);
    }

    if (*search) {
      std::vector<barrmet::VerificationReport> reports;
      if (conjecture == "artanh" || conjecture == "all")
        reports.push_back(barrmet::search_artanh_triangle(search_trials, search_seed));
      if (conjecture == "mobius" || conjecture == "all")
        reports.push_back(barrmet::search_mobius_ratio(search_trials, search_seed));
      if (reports.empty()) {
        std::cerr << "search: unknown conjecture \"" << conjecture << "\"\n";
        return 1;
      }
      return stream_reports(reports);
    }

    if (*phi) {
      json out;
      out["K"] = phi_K;
      out["r"] = phi_r;
      out["phi"] = barrmet::phi_k(phi_K, phi_r);
      out["bound"] = std::pow(4.0, 1.0 - 1.0 / phi_K) * std::pow(phi_r, 1.0 / phi_K);
      std::cout << out.dump() << "\n";
      return 0;
    }
  } catch (const barrmet::OutOfDomain& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const barrmet::OutOfRange& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const barrmet::InvalidPolygon& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
