#pragma once

#include "pstnet/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

namespace pstnet {

// A solved coupling set. J_m t_0 depends only on theta and the branch vector l;
// residual is the max phase deviation from the transfer condition, radians.
struct CouplingSolution {
  double theta = 0.0;
  double t0 = 1.0;
  std::vector<double> J;      // J_0..J_d
  std::vector<long long> l;   // branch integers l_0..l_d
  std::vector<int> s;         // sign pattern sign(P_d(x_k)), values +1/-1
  double residual = 0.0;
};

// Expected infeasibility outcome (not an exception): the pipeline declines.
struct Infeasibility {
  enum Kind { NotAntipodal, ModulusMismatch } kind;
  long long kappa_d = 0;        // NotAntipodal
  int k = -1;                   // ModulusMismatch: offending eigenvalue index
  double modulus = 0.0;         // |P_d(x_k)| there
  std::vector<double> moduli;   // full |P_d(x_k)| table

  std::string to_string() const {
    if (kind == NotAntipodal)
      return "NotAntipodal: kappa_d = " + std::to_string(kappa_d) + " != 1";
    return "ModulusMismatch: |P_d(x_" + std::to_string(k) + ")| = " + std::to_string(modulus) +
           " != 1";
  }
};

// Transfer demands kappa_d = 1 and |P_d(x_k)| = 1 for every eigenvalue; the
// sign pattern s_k = sign(P_d(x_k)) fixes the parity of each phase equation.
inline std::variant<std::vector<int>, Infeasibility> feasibility(const SpectralData& s,
                                                                 const SchemeParameters& p) {
  const int d = p.d();
  if (p.kappa[static_cast<std::size_t>(d)] != 1) {
    Infeasibility inf;
    inf.kind = Infeasibility::NotAntipodal;
    inf.kappa_d = p.kappa[static_cast<std::size_t>(d)];
    return inf;
  }
  std::vector<int> sign(static_cast<std::size_t>(d) + 1);
  std::vector<double> moduli(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    const double pd = s.Pmat(k, d);
    moduli[static_cast<std::size_t>(k)] = std::abs(pd);
    if (std::abs(std::abs(pd) - 1.0) > 1e-8) {
      Infeasibility inf;
      inf.kind = Infeasibility::ModulusMismatch;
      inf.k = k;
      inf.modulus = std::abs(pd);
      inf.moduli = moduli;
      return inf;
    }
    sign[static_cast<std::size_t>(k)] = pd >= 0 ? 1 : -1;
  }
  return sign;
}

// Distance of x from the nearest multiple of 2*pi, using the representative
// in (-pi, pi].
inline double mod_2pi_distance(double x) {
  return std::abs(std::remainder(x, 2.0 * std::numbers::pi));
}

struct ResidualReport {
  double max_delta = 0.0;
  std::vector<double> delta;
};

inline ResidualReport check_solution(const SpectralData& spec, const std::vector<int>& s,
                                     const std::vector<double>& J, double theta, double t0) {
  const int n = static_cast<int>(spec.x.size());
  ResidualReport rep;
  rep.delta.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double phase = 0.0;
    for (int m = 0; m < n; ++m) phase += J[static_cast<std::size_t>(m)] * spec.Pmat(k, m);
    phase = -2.0 * t0 * phase - theta -
            (s[static_cast<std::size_t>(k)] < 0 ? std::numbers::pi : 0.0);
    rep.delta[static_cast<std::size_t>(k)] = mod_2pi_distance(phase);
    rep.max_delta = std::max(rep.max_delta, rep.delta[static_cast<std::size_t>(k)]);
  }
  return rep;
}

// Solve sum_m P_m(x_k) u_m = -(theta + pi [s_k = -1] + 2 pi l_k) for
// u_m = 2 t_0 J_m. The branch vector is reduced by l_0 internally and the
// identity column absorbs the shift exactly, so a uniform change of l moves
// u_0 by exactly -2 pi per unit and nothing else.
inline CouplingSolution solve_couplings(const SpectralData& spec, const std::vector<int>& s,
                                        double theta, double t0, std::vector<long long> l) {
  const int n = static_cast<int>(spec.x.size());
  const long long l0 = l[0];
  Eigen::VectorXd rhs(n);
  for (int k = 0; k < n; ++k)
    rhs(k) = -(theta + (s[static_cast<std::size_t>(k)] < 0 ? std::numbers::pi : 0.0) +
               2.0 * std::numbers::pi * static_cast<double>(l[static_cast<std::size_t>(k)] - l0));
  Eigen::VectorXd u = Eigen::PartialPivLU<Eigen::MatrixXd>(spec.Pmat).solve(rhs);
  u(0) -= 2.0 * std::numbers::pi * static_cast<double>(l0);

  CouplingSolution sol;
  sol.theta = theta;
  sol.t0 = t0;
  sol.l = std::move(l);
  sol.s = s;
  sol.J.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) sol.J[static_cast<std::size_t>(m)] = u(m) / (2.0 * t0);
  sol.residual = check_solution(spec, s, sol.J, theta, t0).max_delta;
  return sol;
}

// Enumerate branch vectors in [-L, L]^{d+1} modulo the global shift (dedup by
// l_0 = 0) and rank: more zero couplings first, then smaller max |J_m| t_0,
// then lexicographic l. Depth 0 yields the single l = 0 solution.
inline std::vector<CouplingSolution> search_branches(const SpectralData& spec,
                                                     const std::vector<int>& s, double theta,
                                                     double t0, int depth) {
  const int n = static_cast<int>(spec.x.size());
  std::vector<CouplingSolution> out;
  std::vector<long long> l(static_cast<std::size_t>(n), 0);
  if (depth <= 0) {
    out.push_back(solve_couplings(spec, s, theta, t0, l));
    return out;
  }
  for (std::size_t i = 1; i < l.size(); ++i) l[i] = -depth;
  for (;;) {
    out.push_back(solve_couplings(spec, s, theta, t0, l));
    std::size_t i = l.size() - 1;
    for (; i >= 1; --i) {
      if (l[i] < depth) {
        ++l[i];
        break;
      }
      l[i] = -depth;
    }
    if (i == 0) break;
  }
  auto zero_count = [t0](const CouplingSolution& c) {
    int z = 0;
    for (double j : c.J)
      if (std::abs(j) * t0 < 1e-9) ++z;
    return z;
  };
  auto max_j = [t0](const CouplingSolution& c) {
    double m = 0.0;
    for (double j : c.J) m = std::max(m, std::abs(j) * t0);
    return m;
  };
  std::sort(out.begin(), out.end(),
            [&](const CouplingSolution& a, const CouplingSolution& b) {
              const int za = zero_count(a), zb = zero_count(b);
              if (za != zb) return za > zb;
              const double ma = max_j(a), mb = max_j(b);
              if (ma != mb) return ma < mb;
              return a.l < b.l;
            });
  return out;
}

}  // namespace pstnet
