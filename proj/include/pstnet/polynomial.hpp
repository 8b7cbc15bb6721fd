#pragma once

#include "pstnet/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pstnet {

// Dense univariate polynomial with exact rational coefficients.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Rational v) { return Poly(std::vector<Rational>{std::move(v)}); }

  static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
  }

  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  bool is_zero() const { return c_.empty(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> r(p.c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
  }

  friend Poly operator/(const Poly& p, const Rational& s) {
    std::vector<Rational> r(p.c_);
    for (auto& v : r) v /= s;
    return Poly(std::move(r));
  }

  bool operator==(const Poly&) const = default;

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
    return acc;
  }

  // Horner magnitude bound sum |c_i| |x|^i, used to scale root residual checks.
  double eval_abs(double x) const {
    double acc = 0.0;
    const double ax = x < 0 ? -x : x;
    for (std::size_t i = c_.size(); i-- > 0;) {
      double ci = to_double(c_[i]);
      acc = acc * ax + (ci < 0 ? -ci : ci);
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long long>(i)) * c_[i];
    return Poly(std::move(r));
  }

  // Human-readable form for diagnostics, lowest degree first: "c0 + c1 x + ...".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += c_[i].str();
      if (i >= 1) s += "*x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace pstnet
