#pragma once

#include "pstnet/scheme.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

namespace pstnet {

// Numerical failure in the spectral layer: dual-path disagreement, eigenvalue
// collision, pole proximity, or a singular eigenmatrix.
struct SpectraError : Error {
  using Error::Error;
};

// Eigenvalues descending with x_0 = kappa; gamma are the Gauss weights of the
// spectral distribution; m_k = v gamma_k; Pmat[k][i] = P_i(x_k); Qmat is the
// dual eigenmatrix with Pmat * Qmat = v I.
struct SpectralData {
  std::vector<double> x;
  std::vector<double> gamma;
  std::vector<double> m;
  Eigen::MatrixXd Pmat;
  Eigen::MatrixXd Qmat;
};

inline Eigen::MatrixXd jacobi_matrix(const SchemeParameters& p) {
  const int n = p.d() + 1;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) T(i, i) = static_cast<double>(p.alpha[i]);
  for (int k = 1; k <= p.d(); ++k) {
    const double beta = std::sqrt(static_cast<double>(p.omega[k - 1]));
    T(k - 1, k) = beta;
    T(k, k - 1) = beta;
  }
  return T;
}

// Roots of Q_{d+1} by bisection, independent of the eigensolver path: the
// monic Q_k have simple interlacing roots (omega_k > 0), so each level's roots
// bracket the next inside the Gershgorin interval of the Jacobi matrix.
inline std::vector<double> bisection_roots(const SchemeParameters& p, const PolynomialSystem& sys) {
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i <= p.d(); ++i) {
    const double bl = (i >= 1) ? std::sqrt(static_cast<double>(p.omega[i - 1])) : 0.0;
    const double br = (i < p.d()) ? std::sqrt(static_cast<double>(p.omega[i])) : 0.0;
    lo = std::min(lo, static_cast<double>(p.alpha[i]) - bl - br);
    hi = std::max(hi, static_cast<double>(p.alpha[i]) + bl + br);
  }
  lo -= 1.0;
  hi += 1.0;
  std::vector<double> roots;  // ascending roots of Q_k, grown level by level
  for (int k = 1; k <= p.d() + 1; ++k) {
    const Poly& q = sys.Q[static_cast<std::size_t>(k)];
    std::vector<double> brackets{lo};
    brackets.insert(brackets.end(), roots.begin(), roots.end());
    brackets.push_back(hi);
    std::vector<double> next;
    for (std::size_t j = 0; j + 1 < brackets.size(); ++j) {
      double a = brackets[j], b = brackets[j + 1];
      double fa = q.eval(a), fb = q.eval(b);
      if (fa == 0.0) {  // bracket endpoint is a previous-level root; nudge inward
        a = std::nextafter(a, b);
        fa = q.eval(a);
      }
      if (fb == 0.0) {
        b = std::nextafter(b, a);
        fb = q.eval(b);
      }
      if (fa * fb > 0.0)
        throw SpectraError("bisection_roots: interlacing bracket lost at level " +
                           std::to_string(k));
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a) + std::abs(b));
           ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = q.eval(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (fa * fm < 0.0) {
          b = mid;
          fb = fm;
        } else {
          a = mid;
          fa = fm;
        }
      }
      next.push_back(0.5 * (a + b));
    }
    roots = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;  // descending, matching SpectralData ordering
}

// Spectrum from the Jacobi eigenproblem; weights cross-checked against the
// residue formula gamma_k = Q1_d(x_k) / Q'_{d+1}(x_k).
inline SpectralData compute_spectrum(const SchemeParameters& p, const PolynomialSystem& sys) {
  const int n = p.d() + 1;
  Eigen::VectorXd diag(n), sub(n - 1 > 0 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag(i) = static_cast<double>(p.alpha[i]);
  for (int k = 1; k <= p.d(); ++k) sub(k - 1) = std::sqrt(static_cast<double>(p.omega[k - 1]));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw SpectraError("compute_spectrum: eigensolver failed");

  SpectralData s;
  s.x.resize(static_cast<std::size_t>(n));
  s.gamma.resize(static_cast<std::size_t>(n));
  // Eigen returns ascending eigenvalues; reorder descending so x_0 = kappa.
  for (int k = 0; k < n; ++k) {
    const int src = n - 1 - k;
    s.x[static_cast<std::size_t>(k)] = es.eigenvalues()(src);
    const double first = es.eigenvectors()(0, src);
    s.gamma[static_cast<std::size_t>(k)] = first * first;
  }

  for (int k = 0; k + 1 < n; ++k)
    if (s.x[k] - s.x[k + 1] < 1e-9)
      throw SpectraError("compute_spectrum: eigenvalue collision at k = " + std::to_string(k) +
                         " (omega_k > 0 guarantees simplicity; numerics bug)");

  // Independent weight path: residues of the Stieltjes function.
  const Poly dQ = sys.Q[static_cast<std::size_t>(p.d() + 1)].derivative();
  for (int k = 0; k < n; ++k) {
    const double xr = s.x[static_cast<std::size_t>(k)];
    const double res = sys.Q1[static_cast<std::size_t>(p.d())].eval(xr) / dQ.eval(xr);
    if (std::abs(res - s.gamma[static_cast<std::size_t>(k)]) > 1e-10)
      throw SpectraError("compute_spectrum: eigenvector and residue weight paths disagree at k = " +
                         std::to_string(k));
  }

  // Eigenvalues are the roots of Q_{d+1}. Allowed residual combines Horner
  // roundoff (scaled by eval_abs) with first-order propagation of the
  // eigenvalue's own absolute error (scaled by |Q'| and the spectral radius).
  const Poly& Qtop = sys.Q[static_cast<std::size_t>(p.d() + 1)];
  const Poly dQtop = Qtop.derivative();
  const double radius = std::max(1.0, std::abs(s.x[0]));
  for (double xr : s.x) {
    const double slack = 1e-9 * std::max(1.0, Qtop.eval_abs(xr)) +
                         1e-11 * radius * std::abs(dQtop.eval(xr));
    if (std::abs(Qtop.eval(xr)) > slack)
      throw SpectraError("compute_spectrum: eigenvalue is not a root of Q_{d+1}");
  }

  s.m.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    s.m[static_cast<std::size_t>(k)] = static_cast<double>(p.v) * s.gamma[static_cast<std::size_t>(k)];
  return s;
}

// Fill Pmat/Qmat. Qmat = v Pmat^{-1} (so Pmat Qmat = v I); cross-checked
// against the duality identity Qmat[j][i] kappa_j = m_i Pmat[i][j].
inline void eigenmatrices(SpectralData& s, const PolynomialSystem& sys, const SchemeParameters& p) {
  const int n = p.d() + 1;
  s.Pmat.resize(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      s.Pmat(k, i) = sys.P[static_cast<std::size_t>(i)].eval(s.x[static_cast<std::size_t>(k)]);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(s.Pmat);
  if (std::abs(lu.determinant()) < 1e-300)
    throw SpectraError("eigenmatrices: singular eigenmatrix (internal error)");
  s.Qmat = lu.solve(Eigen::MatrixXd::Identity(n, n) * static_cast<double>(p.v));

  double scale = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(s.Qmat(j, i)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double lhs = s.Qmat(j, i) * static_cast<double>(p.kappa[static_cast<std::size_t>(j)]);
      const double rhs = s.m[static_cast<std::size_t>(i)] * s.Pmat(i, j);
      if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, scale))
        throw SpectraError("eigenmatrices: duality identity Q[j][i] kappa_j = m_i P[i][j] violated");
    }
}

// Partial-fraction value sum gamma_l / (z - x_l).
inline std::complex<double> stieltjes_partial_fraction(const SpectralData& s,
                                                       std::complex<double> z) {
  for (double xl : s.x)
    if (std::abs(z - xl) <= 1e-8)
      throw SpectraError("stieltjes: probe point within 1e-8 of a spectrum point");
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < s.x.size(); ++k) acc += s.gamma[k] / (z - s.x[k]);
  return acc;
}

// Finite continued fraction 1/(z - alpha_0 - omega_1/(z - alpha_1 - ...)), depth d+1.
inline std::complex<double> stieltjes_continued_fraction(const SchemeParameters& p,
                                                         std::complex<double> z) {
  std::complex<double> tail(0.0, 0.0);
  for (int k = p.d(); k >= 1; --k)
    tail = static_cast<double>(p.omega[k - 1]) / (z - static_cast<double>(p.alpha[k]) - tail);
  return 1.0 / (z - static_cast<double>(p.alpha[0]) - tail);
}

// Both evaluators, cross-checked to 1e-10 relative; returns the partial-fraction value.
inline std::complex<double> stieltjes(const SchemeParameters& p, const SpectralData& s,
                                      std::complex<double> z) {
  const auto pf = stieltjes_partial_fraction(s, z);
  const auto cf = stieltjes_continued_fraction(p, z);
  if (std::abs(pf - cf) > 1e-10 * std::max(1.0, std::abs(pf)))
    throw SpectraError("stieltjes: continued-fraction and partial-fraction paths disagree");
  return pf;
}

// Convenience bundle for the array -> spectrum pipeline.
struct Pipeline {
  IntersectionArray arr;
  SchemeParameters params;
  PolynomialSystem polys;
  SpectralData spec;
};

inline Pipeline make_pipeline(const IntersectionArray& arr) {
  Pipeline pl;
  pl.arr = arr;
  pl.params = derive_parameters(arr);
  pl.polys = build_polynomials(pl.params);
  pl.spec = compute_spectrum(pl.params, pl.polys);
  eigenmatrices(pl.spec, pl.polys, pl.params);
  return pl;
}

}  // namespace pstnet
