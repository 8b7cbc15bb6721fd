#pragma once

#include "pstnet/pst.hpp"
#include "pstnet/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace pstnet {

// Fixed 15-significant-digit rendering; byte-identical for identical inputs.
inline std::string fmt15(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// Render v as the exact multiple p*pi/q (q <= qmax, within 1e-9) when
// requested and possible, else numerically. Smallest q wins.
inline std::string render_angle(double v, bool pi_mode, int qmax = 420) {
  if (pi_mode) {
    for (int q = 1; q <= qmax; ++q) {
      const double scaled = v * q / std::numbers::pi;
      const long long p = std::llround(scaled);
      if (std::abs(v - static_cast<double>(p) * std::numbers::pi / q) <= 1e-9) {
        if (p == 0) return "0";
        const long long g = std::gcd(std::llabs(p), static_cast<long long>(q));
        const long long pr = p / g, qr = q / g;
        std::string s = (pr < 0 ? "-" : "");
        if (std::llabs(pr) != 1) s += std::to_string(std::llabs(pr)) + "*";
        s += "pi";
        if (qr != 1) s += "/" + std::to_string(qr);
        return s;
      }
    }
  }
  return fmt15(v);
}

template <typename T>
inline std::string join_list(const std::vector<T>& xs, std::string (*fmt)(T)) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + fmt(xs[i]);
  return s + "]";
}

inline std::string format_double_list(const std::vector<double>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + fmt15(xs[i]);
  return s + "]";
}

inline std::string format_angle_list(const std::vector<double>& xs, bool pi_mode) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + render_angle(xs[i], pi_mode);
  return s + "]";
}

template <typename Int>
inline std::string format_int_list(const std::vector<Int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "]";
}

inline std::string format_matrix(const Eigen::MatrixXd& M, const std::string& indent) {
  std::string s;
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    s += indent + "[";
    for (Eigen::Index c = 0; c < M.cols(); ++c) s += (c ? ", " : "") + fmt15(M(r, c));
    s += "]\n";
  }
  return s;
}

// Structured record {name, d, v, theta, t0, l[], s[], J[], residual}.
inline std::string solution_record(const std::string& name, int d, long long v,
                                   const CouplingSolution& sol, bool pi_mode) {
  std::string s = "solution {\n";
  s += "  name = " + name + "\n";
  s += "  d = " + std::to_string(d) + "\n";
  s += "  v = " + std::to_string(v) + "\n";
  s += "  theta = " + fmt15(sol.theta) + "\n";
  s += "  t0 = " + fmt15(sol.t0) + "\n";
  s += "  l = " + format_int_list(sol.l) + "\n";
  s += "  s = " + format_int_list(sol.s) + "\n";
  s += "  J = " + format_angle_list(sol.J, pi_mode) + "\n";
  s += "  residual = " + fmt15(sol.residual) + "\n";
  s += "}\n";
  return s;
}

// One-line CSV row for batch runs: name,theta,t0,residual,J0,...,Jd.
inline std::string solution_csv_row(const std::string& name, const CouplingSolution& sol) {
  std::string s = name + "," + fmt15(sol.theta) + "," + fmt15(sol.t0) + "," + fmt15(sol.residual);
  for (double j : sol.J) s += "," + fmt15(j);
  return s + "\n";
}

// Structured record {x[], gamma[], m[], Pmat, Qmat}.
inline std::string spectral_record(const SpectralData& spec) {
  std::string s = "spectrum {\n";
  s += "  x = " + format_double_list(spec.x) + "\n";
  s += "  gamma = " + format_double_list(spec.gamma) + "\n";
  s += "  m = " + format_double_list(spec.m) + "\n";
  s += "  Pmat =\n" + format_matrix(spec.Pmat, "    ");
  s += "  Qmat =\n" + format_matrix(spec.Qmat, "    ");
  s += "}\n";
  return s;
}

inline constexpr const char* kSweepCsvHeader = "t,abs_f_d,arg_f_d,abs_f_0";

}  // namespace pstnet
