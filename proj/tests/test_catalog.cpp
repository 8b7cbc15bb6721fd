// Named catalog: entries, generators, published-data cross-checks, the
// errata registry, graph resolution, and text rendering.

#include "pstnet/pstnet.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

using namespace pstnet;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> sign_pattern(const Pipeline& pl) {
  const auto fs = feasibility(pl.spec, pl.params);
  REQUIRE(std::holds_alternative<std::vector<int>>(fs));
  return std::get<std::vector<int>>(fs);
}

// Published couplings at theta = 0 with registered corrections applied.
std::vector<double> corrected_printed_J(const CatalogEntry& e, int d) {
  std::vector<double> J;
  for (const auto& [c0, c1] : e.printed_J) J.push_back(c0);
  for (const auto& err : e.errata) {
    if (err.kind == Erratum::TypoCoefficient) J[static_cast<std::size_t>(err.index)] = err.corrected;
    if (err.kind == Erratum::MissingCoupling) {
      REQUIRE(err.index == static_cast<int>(J.size()));
      J.push_back(err.corrected);
    }
  }
  REQUIRE(static_cast<int>(J.size()) == d + 1);
  return J;
}

}  // namespace

TEST_CASE("catalog has sixteen uniquely named antipodal entries") {
  const auto& cat = catalog();
  REQUIRE(cat.size() == 16);
  std::set<std::string> names;
  for (const auto& e : cat) {
    names.insert(e.name);
    const auto params = derive_parameters(validate_intersection_array(e.array));
    CHECK(params.antipodal);
    REQUIRE(catalog_lookup(e.name).has_value());
    CHECK(catalog_lookup(e.name)->array.d == e.array.d);
  }
  CHECK(names.size() == 16);
}

TEST_CASE("generator names expand to parametric arrays") {
  CHECK(format_intersection_array(catalog_lookup("cycle:2")->array) == "{2,1;1,2}");
  CHECK(format_intersection_array(catalog_lookup("cycle:5")->array) == "{2,1,1,1,1;1,1,1,1,2}");
  CHECK(format_intersection_array(catalog_lookup("cube:1")->array) == "{1;1}");
  CHECK(format_intersection_array(catalog_lookup("cube:4")->array) == "{4,3,2,1;1,2,3,4}");
  // Well-formed generator names with out-of-range parameters are errors;
  // anything else is simply not a catalog name.
  CHECK_THROWS_WITH(catalog_lookup("cycle:1"), Catch::Matchers::ContainsSubstring("m >= 2"));
  CHECK_THROWS_WITH(catalog_lookup("cube:0"), Catch::Matchers::ContainsSubstring("d >= 1"));
  CHECK_FALSE(catalog_lookup("cycle:x").has_value());
  CHECK_FALSE(catalog_lookup("cycle:").has_value());
  CHECK_FALSE(catalog_lookup("no_such_entry").has_value());
}

TEST_CASE("published spectra match the computed spectra") {
  for (const auto& e : catalog()) {
    REQUIRE_FALSE(e.printed_mu.empty());
    const auto pl = make_pipeline(e.array);
    double total = 0.0;
    for (const auto& [px, pm] : e.printed_mu) {
      bool matched = false;
      for (std::size_t k = 0; k < pl.spec.x.size(); ++k)
        if (std::abs(pl.spec.x[k] - px) < 1e-6 && std::abs(pl.spec.m[k] - pm) < 1e-9)
          matched = true;
      INFO(e.name << " eigenvalue " << px);
      CHECK(matched);
      total += pm;
    }
    CHECK(total == static_cast<double>(pl.params.v));
  }
}

TEST_CASE("published couplings solve the phase equations after corrections") {
  for (const auto& e : catalog()) {
    REQUIRE_FALSE(e.printed_J.empty());
    const auto pl = make_pipeline(e.array);
    const auto s = sign_pattern(pl);
    const auto J = corrected_printed_J(e, pl.params.d());
    INFO(e.name);
    CHECK(check_solution(pl.spec, s, J, 0.0, 1.0).max_delta < 1e-9);
  }
}

TEST_CASE("registered errata reproduce the published discrepancies") {
  const auto desargues = *catalog_lookup("desargues");
  REQUIRE(desargues.errata.size() == 1);
  CHECK(desargues.errata[0].kind == Erratum::TypoCoefficient);
  CHECK(desargues.errata[0].index == 1);
  CHECK(desargues.errata[0].corrected == 0.0);
  CHECK(std::abs(desargues.printed_J[1].first - kPi / 10) < 1e-15);

  const auto doubled = *catalog_lookup("doubled_odd_4");
  REQUIRE(doubled.errata.size() == 1);
  CHECK(doubled.errata[0].kind == Erratum::TypoCoefficient);
  CHECK(doubled.errata[0].index == 5);
  CHECK(doubled.errata[0].corrected == 0.0);
  CHECK(std::abs(doubled.printed_J[5].first + kPi / 70) < 1e-15);

  const auto dodeca = *catalog_lookup("dodecahedron");
  REQUIRE(dodeca.errata.size() == 1);
  CHECK(dodeca.errata[0].kind == Erratum::MissingCoupling);
  CHECK(dodeca.errata[0].index == 5);
  CHECK(std::abs(dodeca.errata[0].corrected - 2 * kPi / 5) < 1e-15);
  CHECK(dodeca.printed_J.size() == 5);

  const auto ico = *catalog_lookup("icosahedron");
  REQUIRE(ico.errata.size() == 1);
  CHECK(ico.errata[0].kind == Erratum::InconsistentT0Line);

  // The published-as-is values fail exactly where the errata say they do.
  for (const std::string name : {"desargues", "doubled_odd_4"}) {
    const auto e = *catalog_lookup(name);
    const auto pl = make_pipeline(e.array);
    std::vector<double> as_printed;
    for (const auto& [c0, c1] : e.printed_J) as_printed.push_back(c0);
    CHECK(check_solution(pl.spec, sign_pattern(pl), as_printed, 0.0, 1.0).max_delta > 1e-2);
  }
}

TEST_CASE("catalog graphs resolve for constructible entries") {
  for (const std::string name : {"icosahedron", "desargues", "dodecahedron"}) {
    const auto e = *catalog_lookup(name);
    const auto g = catalog_graph(e);
    REQUIRE(g.has_value());
    const auto r = check_distance_regular(*g);
    REQUIRE(std::holds_alternative<IntersectionArray>(r));
    CHECK(format_intersection_array(std::get<IntersectionArray>(r)) ==
          format_intersection_array(e.array));
  }
  CHECK(catalog_graph(*catalog_lookup("cycle:6")).has_value());
  CHECK(catalog_graph(*catalog_lookup("cube:5")).has_value());
  CHECK_FALSE(catalog_graph(*catalog_lookup("taylor_p13")).has_value());
  CHECK_FALSE(catalog_graph(*catalog_lookup("wells")).has_value());
}

TEST_CASE("environment directory overrides the built-in constructions") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pstnet_catalog_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "taylor_p13.edges");
    out << "0 1\n1 2\n2 3\n3 0\n";  // stand-in graph; resolution only
  }
  REQUIRE(setenv(kCatalogEnvVar, dir.c_str(), 1) == 0);
  const auto g = catalog_graph(*catalog_lookup("taylor_p13"));
  unsetenv(kCatalogEnvVar);
  fs::remove_all(dir);
  REQUIRE(g.has_value());
  CHECK(g->n == 4);
}

TEST_CASE("fifteen-digit formatting is canonical") {
  CHECK(fmt15(0.1) == "0.1");
  CHECK(fmt15(-0.0) == "0");
  CHECK(fmt15(3.141592653589793) == "3.14159265358979");
  CHECK(fmt15(1.0) == "1");
  CHECK(fmt15(-2.5e-13) == "-2.5e-13");
  // Distinct doubles must not collide at 15 significant digits.
  CHECK(fmt15(1.0 + 1e-14) != fmt15(1.0));
}

TEST_CASE("angles render as exact fractions of pi when close enough") {
  CHECK(render_angle(0.0, true) == "0");
  CHECK(render_angle(kPi, true) == "pi");
  CHECK(render_angle(-kPi, true) == "-pi");
  CHECK(render_angle(kPi / 4, true) == "pi/4");
  CHECK(render_angle(-3 * kPi / 4, true) == "-3*pi/4");
  CHECK(render_angle(2 * kPi / 5, true) == "2*pi/5");
  CHECK(render_angle(2 * kPi, true) == "2*pi");
  CHECK(render_angle(kPi / 419, true) == "pi/419");
  CHECK(render_angle(kPi / 421, true) == fmt15(kPi / 421));
  // Irrational multiples fall back to plain digits.
  const double v = (3 * std::sqrt(5.0) - 5) * kPi / 60;
  CHECK(render_angle(v, true) == fmt15(v));
  // Rendering only activates in pi mode.
  CHECK(render_angle(kPi / 4, false) == fmt15(kPi / 4));
}

TEST_CASE("records serialize deterministically") {
  CHECK(std::string(kSweepCsvHeader) == "t,abs_f_d,arg_f_d,abs_f_0");
  const auto pl = make_pipeline(catalog_lookup("cycle:2")->array);
  const auto s = sign_pattern(pl);
  const auto sol = solve_couplings(pl.spec, s, 0.0, 1.0, {0, 0, 0});
  const std::string rec = solution_record("cycle:2", pl.params.d(), pl.params.v, sol, true);
  CHECK(rec.find("name = cycle:2") != std::string::npos);
  CHECK(rec.find("J = [-pi/4, 0, pi/4]") != std::string::npos);
  CHECK(rec.find("l = [0, 0, 0]") != std::string::npos);
  CHECK(rec == solution_record("cycle:2", pl.params.d(), pl.params.v, sol, true));

  const std::string csv = solution_csv_row("cycle:2", sol);
  CHECK(csv.rfind("cycle:2,0,1,", 0) == 0);
  CHECK(csv.back() == '\n');

  const std::string spec_text = spectral_record(pl.spec);
  CHECK(spec_text.rfind("spectrum {\n  x = [2, ", 0) == 0);  // x_1 ~ 1e-17, printed honestly
  CHECK(spec_text.find("gamma = [0.25, 0.5, 0.25]") != std::string::npos);
}
