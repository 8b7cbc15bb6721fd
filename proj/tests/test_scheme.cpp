// Intersection-array validation, scheme parameters, and the exact
// three-term-recurrence polynomial families.

#include "pstnet/pstnet.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace pstnet;

namespace {

Poly poly(std::initializer_list<Rational> ascending) {
  return Poly(std::vector<Rational>(ascending));
}

Rational binom(long long n, long long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (long long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

// Independent Krawtchouk oracle: K_i(j; d) = sum_s (-1)^s C(j,s) C(d-j, i-s).
Rational krawtchouk(long long i, long long j, long long d) {
  Rational acc(0);
  for (long long s = 0; s <= i; ++s) {
    Rational term = binom(j, s) * binom(d - j, i - s);
    if (s % 2 == 1) term = Rational(-1) * term;
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("catalog arrays and generators validate") {
  for (const auto& e : catalog()) REQUIRE_NOTHROW(validate_intersection_array(e.array));
  for (int m = 2; m <= 8; ++m)
    REQUIRE_NOTHROW(validate_intersection_array(catalog_lookup("cycle:" + std::to_string(m))->array));
  for (int d = 1; d <= 8; ++d)
    REQUIRE_NOTHROW(validate_intersection_array(catalog_lookup("cube:" + std::to_string(d))->array));
}

TEST_CASE("validation errors name the violated identity") {
  IntersectionArray arr;
  CHECK_THROWS_WITH(validate_intersection_array(arr),
                    Catch::Matchers::ContainsSubstring("nonempty"));

  arr = parse_intersection_array("{2,1;1,2}");
  arr.b.push_back(1);
  CHECK_THROWS_WITH(validate_intersection_array(arr),
                    Catch::Matchers::ContainsSubstring("equal length"));

  CHECK_THROWS_WITH(validate_intersection_array(parse_intersection_array("{2,0;1,2}")),
                    Catch::Matchers::ContainsSubstring(">= 1"));

  CHECK_THROWS_WITH(validate_intersection_array(parse_intersection_array("{2,1;2,2}")),
                    Catch::Matchers::ContainsSubstring("c_1 = 1 violated"));

  // kappa_1 b_1 = kappa_2 c_2 would need kappa_2 = 3*2/2 = 3, fine; pick one
  // that fails integrality: {3,1;1,2} needs kappa_2 = 3/2.
  CHECK_THROWS_WITH(validate_intersection_array(parse_intersection_array("{3,1;1,2}")),
                    Catch::Matchers::ContainsSubstring("no integer solution"));

  // {2,2;1,1}: a_1 = 2 - 2 - 1 = -1.
  CHECK_THROWS_WITH(validate_intersection_array(parse_intersection_array("{2,2;1,1}")),
                    Catch::Matchers::ContainsSubstring("a_1 = kappa - b_1 - c_1 >= 0 violated"));
}

TEST_CASE("parsing round trips and rejects malformed text") {
  const std::string text = "{5,2,1;1,2,5}";
  const IntersectionArray arr = parse_intersection_array(text);
  CHECK(arr.d == 3);
  CHECK(format_intersection_array(arr) == text);
  CHECK(format_intersection_array(parse_intersection_array(" 5, 2, 1 ; 1, 2, 5 ")) == text);
  CHECK_THROWS_WITH(parse_intersection_array("5,2,1"),
                    Catch::Matchers::ContainsSubstring("missing ';' separator"));
  CHECK_THROWS(parse_intersection_array("{a,1;1,2}"));
  CHECK_THROWS(parse_intersection_array("{;}"));
}

TEST_CASE("icosahedron scheme parameters") {
  const auto p = derive_parameters(parse_intersection_array("{5,2,1;1,2,5}"));
  CHECK(p.d() == 3);
  CHECK(p.v == 12);
  CHECK(p.kappa == std::vector<long long>{1, 5, 5, 1});
  CHECK(p.a == std::vector<long long>{0, 2, 2, 0});
  CHECK(p.alpha == p.a);
  CHECK(p.omega == std::vector<long long>{5, 4, 5});
  CHECK(p.antipodal);
  CHECK(p.c_at(0) == 0);
  CHECK(p.b_at(3) == 0);
}

TEST_CASE("non-antipodal arrays are flagged") {
  // C_5 as a distance-regular graph: {2,1;1,1}, kappa_2 = 2.
  const auto p = derive_parameters(parse_intersection_array("{2,1;1,1}"));
  CHECK(p.kappa == std::vector<long long>{1, 2, 2});
  CHECK_FALSE(p.antipodal);
}

TEST_CASE("exact polynomials for the icosahedron") {
  const auto p = derive_parameters(parse_intersection_array("{5,2,1;1,2,5}"));
  const auto sys = build_polynomials(p);
  REQUIRE(sys.P.size() == 4);
  CHECK(sys.P[0] == poly({Rational(1)}));
  CHECK(sys.P[1] == Poly::x());
  CHECK(sys.P[2] == poly({Rational(-5, 2), Rational(-1), Rational(1, 2)}));
  CHECK(sys.P[3] == poly({Rational(1), Rational(-1, 2), Rational(-2, 5), Rational(1, 10)}));
}

TEST_CASE("exact polynomials for the 4-cycle") {
  const auto p = derive_parameters(parse_intersection_array("{2,1;1,2}"));
  const auto sys = build_polynomials(p);
  CHECK(sys.P[2] == poly({Rational(-1), Rational(0), Rational(1, 2)}));
}

TEST_CASE("monic family equals scaled vertex family") {
  for (const std::string name :
       {"icosahedron", "desargues", "dodecahedron", "doubled_odd_4", "johnson_8_4", "cube:5"}) {
    const auto p = derive_parameters(catalog_lookup(name)->array);
    const auto sys = build_polynomials(p);
    Rational cprod(1);
    for (int i = 1; i <= p.d(); ++i) {
      cprod *= Rational(p.arr.c[static_cast<std::size_t>(i - 1)]);
      CHECK(sys.Q[static_cast<std::size_t>(i)] == cprod * sys.P[static_cast<std::size_t>(i)]);
      CHECK(sys.P[static_cast<std::size_t>(i)].leading() == Rational(1) / cprod);
    }
    // Q_{d+1} and the shifted family are monic.
    CHECK(sys.Q[static_cast<std::size_t>(p.d() + 1)].leading() == Rational(1));
    for (std::size_t k = 1; k < sys.Q1.size(); ++k) CHECK(sys.Q1[k].leading() == Rational(1));
  }
}

TEST_CASE("P_i at the valency point gives the i-th valency") {
  for (const auto& e : catalog()) {
    const auto p = derive_parameters(e.array);
    const auto sys = build_polynomials(p);
    const Rational kappa(p.degree());
    for (int i = 0; i <= p.d(); ++i)
      CHECK(sys.P[static_cast<std::size_t>(i)].eval(kappa) == Rational(p.kappa[static_cast<std::size_t>(i)]));
    // x = kappa is a root of the closing polynomial.
    CHECK(sys.Q[static_cast<std::size_t>(p.d() + 1)].eval(kappa) == Rational(0));
  }
}

TEST_CASE("even-cycle polynomials reduce to cosines") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(0.05, std::numbers::pi - 0.05);
  for (int m : {2, 3, 5, 8}) {
    const auto p = derive_parameters(catalog_lookup("cycle:" + std::to_string(m))->array);
    const auto sys = build_polynomials(p);
    for (int trial = 0; trial < 20; ++trial) {
      const double phi = U(rng);
      const double x = 2.0 * std::cos(phi);
      for (int i = 1; i < m; ++i)
        CHECK(std::abs(sys.P[static_cast<std::size_t>(i)].eval(x) - 2.0 * std::cos(i * phi)) < 1e-12);
      CHECK(std::abs(sys.P[static_cast<std::size_t>(m)].eval(x) - std::cos(m * phi)) < 1e-12);
    }
  }
}

TEST_CASE("hypercube polynomials are Krawtchouk polynomials") {
  for (int d : {1, 2, 3, 4, 6, 9}) {
    const auto p = derive_parameters(catalog_lookup("cube:" + std::to_string(d))->array);
    const auto sys = build_polynomials(p);
    for (long long j = 0; j <= d; ++j) {
      const Rational x(d - 2 * j);
      for (long long i = 0; i <= d; ++i)
        CHECK(sys.P[static_cast<std::size_t>(i)].eval(x) == krawtchouk(i, j, d));
    }
  }
}

TEST_CASE("polynomial arithmetic invariants") {
  const Poly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  const Poly x = Poly::x();
  CHECK((x - x).is_zero());
  CHECK((x * z).is_zero());
  const Poly q = poly({Rational(2), Rational(0), Rational(3)});
  CHECK(q.derivative() == poly({Rational(0), Rational(6)}));
  CHECK(q.eval(Rational(2)) == Rational(14));
  CHECK(q.eval_abs(2.0) == Catch::Approx(14.0));
  CHECK((Rational(1, 3) * q).coeff(2) == Rational(1));
}
