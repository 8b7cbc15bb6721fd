#pragma once

#include "pstnet/polynomial.hpp"
#include "pstnet/rational.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pstnet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Intersection-array validation failure; message names the violated identity.
struct SchemeError : Error {
  using Error::Error;
};

// {b_0..b_{d-1}; c_1..c_d}. Implicit boundary values c_0 = 0 and b_d = 0 are
// supplied by SchemeParameters accessors, never stored.
struct IntersectionArray {
  int d = 0;
  std::vector<long long> b;  // b_0..b_{d-1}
  std::vector<long long> c;  // c_1..c_d
};

inline IntersectionArray validate_intersection_array(const std::vector<long long>& b,
                                                     const std::vector<long long>& c) {
  if (b.empty() || c.empty()) throw SchemeError("intersection array: b and c must be nonempty");
  if (b.size() != c.size())
    throw SchemeError("intersection array: b and c must have equal length d");
  const int d = static_cast<int>(b.size());
  for (int i = 0; i < d; ++i) {
    if (b[i] < 1)
      throw SchemeError("intersection array: b_" + std::to_string(i) + " >= 1 violated");
    if (c[i] < 1)
      throw SchemeError("intersection array: c_" + std::to_string(i + 1) + " >= 1 violated");
  }
  if (c[0] != 1) throw SchemeError("intersection array: c_1 = 1 violated");
  const long long kappa = b[0];
  // kappa_{i-1} b_{i-1} = kappa_i c_i forces every valency to a positive integer.
  long long ki = 1;
  for (int i = 1; i <= d; ++i) {
    const long long num = ki * b[i - 1];
    const long long ci = c[i - 1];
    if (num % ci != 0)
      throw SchemeError("intersection array: kappa_" + std::to_string(i - 1) + " b_" +
                        std::to_string(i - 1) + " = kappa_" + std::to_string(i) + " c_" +
                        std::to_string(i) + " has no integer solution (" + std::to_string(num) +
                        "/" + std::to_string(ci) + ")");
    ki = num / ci;
  }
  // a_i = kappa - b_i - c_i >= 0 for i = 1..d, with b_d = 0.
  for (int i = 1; i <= d; ++i) {
    const long long bi = (i < d) ? b[i] : 0;
    const long long ai = kappa - bi - c[i - 1];
    if (ai < 0)
      throw SchemeError("intersection array: a_" + std::to_string(i) +
                        " = kappa - b_" + std::to_string(i) + " - c_" + std::to_string(i) +
                        " >= 0 violated (" + std::to_string(ai) + ")");
  }
  return IntersectionArray{d, b, c};
}

inline IntersectionArray validate_intersection_array(const IntersectionArray& arr) {
  return validate_intersection_array(arr.b, arr.c);
}

// Compact text form "b0,b1,...;c1,c2,..."; whitespace ignored; optional braces.
inline IntersectionArray parse_intersection_array(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '{' && ch != '}') s.push_back(ch);
  const auto semi = s.find(';');
  if (semi == std::string::npos)
    throw SchemeError("intersection array text: missing ';' separator in \"" + s + "\"");
  auto parse_list = [](std::string_view part, const char* which) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= part.size()) {
      const auto comma = part.find(',', pos);
      const auto token = part.substr(pos, comma == std::string_view::npos ? part.size() - pos
                                                                          : comma - pos);
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw SchemeError(std::string("intersection array text: bad integer \"") +
                          std::string(token) + "\" in " + which + " list");
      out.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  const auto b = parse_list(std::string_view(s).substr(0, semi), "b");
  const auto c = parse_list(std::string_view(s).substr(semi + 1), "c");
  return validate_intersection_array(b, c);
}

inline std::string format_intersection_array(const IntersectionArray& arr) {
  std::string s = "{";
  for (int i = 0; i < arr.d; ++i) s += (i ? "," : "") + std::to_string(arr.b[i]);
  s += ";";
  for (int i = 0; i < arr.d; ++i) s += (i ? "," : "") + std::to_string(arr.c[i]);
  s += "}";
  return s;
}

// Scalar data of the P-polynomial scheme. a_i kept alongside alpha_i even
// though equal. omega_k = b_{k-1} c_k is the squared Jacobi off-diagonal.
struct SchemeParameters {
  IntersectionArray arr;
  std::vector<long long> kappa;  // kappa_0..kappa_d
  std::vector<long long> a;      // a_0..a_d
  std::vector<long long> alpha;  // alpha_0..alpha_d
  std::vector<long long> omega;  // omega_1..omega_d
  long long v = 0;
  bool antipodal = false;

  int d() const { return arr.d; }
  long long degree() const { return arr.b[0]; }
  // Boundary accessors: c_0 = 0, b_d = 0.
  long long c_at(int i) const { return (i <= 0 || i > arr.d) ? 0 : arr.c[i - 1]; }
  long long b_at(int i) const { return (i < 0 || i >= arr.d) ? 0 : arr.b[i]; }
};

inline SchemeParameters derive_parameters(const IntersectionArray& arr) {
  SchemeParameters p;
  p.arr = arr;
  const int d = arr.d;
  const long long kappa = arr.b[0];
  p.kappa.assign(static_cast<std::size_t>(d) + 1, 1);
  for (int i = 1; i <= d; ++i) p.kappa[i] = p.kappa[i - 1] * arr.b[i - 1] / arr.c[i - 1];
  p.a.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 1; i <= d; ++i) p.a[i] = kappa - p.b_at(i) - arr.c[i - 1];
  p.alpha = p.a;
  p.omega.resize(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) p.omega[k - 1] = arr.b[k - 1] * arr.c[k - 1];
  p.v = 0;
  for (long long k : p.kappa) p.v += k;
  p.antipodal = (p.kappa[d] == 1);
  return p;
}

// P_i: the scheme polynomials with A_i = P_i(A); Q_0..Q_{d+1}: monic orthogonal
// polynomials of the Jacobi recursion; Q1: the once-shifted family used by the
// residue formula for the Gauss weights.
struct PolynomialSystem {
  std::vector<Poly> P;   // P_0..P_d
  std::vector<Poly> Q;   // Q_0..Q_{d+1}
  std::vector<Poly> Q1;  // Q^(1)_0..Q^(1)_d
};

inline PolynomialSystem build_polynomials(const SchemeParameters& p) {
  const int d = p.d();
  PolynomialSystem sys;
  const Poly X = Poly::x();

  // c_{i+1} P_{i+1}(x) = (x - a_i) P_i(x) - b_{i-1} P_{i-1}(x), P_0 = 1, P_1 = x.
  sys.P.resize(static_cast<std::size_t>(d) + 1);
  sys.P[0] = Poly::constant(Rational(1));
  if (d >= 1) sys.P[1] = X;
  for (int i = 1; i < d; ++i) {
    const Poly t = (X - Poly::constant(Rational(p.a[i]))) * sys.P[i] -
                   Rational(p.b_at(i - 1)) * sys.P[i - 1];
    sys.P[i + 1] = t / Rational(p.c_at(i + 1));
  }

  // Q_{k+1}(x) = (x - alpha_k) Q_k(x) - omega_k Q_{k-1}(x), Q_0 = 1, Q_1 = x.
  sys.Q.resize(static_cast<std::size_t>(d) + 2);
  sys.Q[0] = Poly::constant(Rational(1));
  sys.Q[1] = X;  // alpha_0 = 0
  for (int k = 1; k <= d; ++k)
    sys.Q[k + 1] = (X - Poly::constant(Rational(p.alpha[k]))) * sys.Q[k] -
                   Rational(p.omega[k - 1]) * sys.Q[k - 1];

  // Shifted family: coefficients alpha_{k+1}, omega_{k+1}.
  sys.Q1.resize(static_cast<std::size_t>(d) + 1);
  sys.Q1[0] = Poly::constant(Rational(1));
  if (d >= 1) sys.Q1[1] = X - Poly::constant(Rational(p.alpha[1]));
  for (int k = 1; k < d; ++k)
    sys.Q1[k + 1] = (X - Poly::constant(Rational(p.alpha[k + 1]))) * sys.Q1[k] -
                    Rational(p.omega[k]) * sys.Q1[k - 1];
  return sys;
}

}  // namespace pstnet
