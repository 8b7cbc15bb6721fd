#pragma once

#include "pstnet/graph.hpp"
#include "pstnet/pst.hpp"
#include "pstnet/spectra.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pstnet {

// Engine disagreement, oracle size limit, or dimension mismatch.
struct DynamicsError : Error {
  using Error::Error;
};

// PST is declared when every engine reports |f_d(t0)| >= 1 - kCertifyMargin.
inline constexpr double kCertifyMargin = 1e-9;
// Independent engines must agree on f_d to this absolute tolerance.
inline constexpr double kEngineTolerance = 1e-8;

// Global energy shift c = (N-4)/2 sum_m J_m kappa_m; retained so reported
// transfer phases stay comparable to the theta bookkeeping.
inline double global_constant(long long v, const std::vector<long long>& kappa,
                              const std::vector<double>& J) {
  double acc = 0.0;
  for (std::size_t m = 0; m < J.size(); ++m) acc += J[m] * static_cast<double>(kappa[m]);
  return 0.5 * static_cast<double>(v - 4) * acc;
}

// Single-excitation Hamiltonian, either on the stratum (quotient) space or the
// full vertex space.
struct Hamiltonian {
  enum Form { Quotient, Full };
  Eigen::MatrixXd H;
  double c = 0.0;
  Form form = Quotient;
};

namespace detail {

// Matrix Horner for a rational-coefficient polynomial of a symmetric matrix.
inline Eigen::MatrixXd poly_of_matrix(const Poly& p, const Eigen::MatrixXd& T) {
  const int n = static_cast<int>(T.rows());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * T;
    acc += to_double(p.coeff(i)) * Eigen::MatrixXd::Identity(n, n);
  }
  return acc;
}

}  // namespace detail

// H_q = 2 sum_m J_m P_m(T) + c I on the d+1 strata.
inline Hamiltonian quotient_hamiltonian(const SchemeParameters& p, const PolynomialSystem& sys,
                                        const std::vector<double>& J) {
  if (static_cast<int>(J.size()) != p.d() + 1)
    throw DynamicsError("quotient_hamiltonian: J must have d+1 entries");
  const Eigen::MatrixXd T = jacobi_matrix(p);
  const int n = p.d() + 1;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m <= p.d(); ++m)
    H += 2.0 * J[static_cast<std::size_t>(m)] *
         detail::poly_of_matrix(sys.P[static_cast<std::size_t>(m)], T);
  const double c = global_constant(p.v, p.kappa, J);
  H += c * Eigen::MatrixXd::Identity(n, n);
  return Hamiltonian{std::move(H), c, Hamiltonian::Quotient};
}

// H = 2 sum_m J_m A_m + c I on the vertex space, from explicit distance matrices.
inline Hamiltonian full_hamiltonian(const LabeledGraph& g, const DistancePartition& dp,
                                    const std::vector<double>& J) {
  if (J.size() != dp.Amats.size() || static_cast<int>(J.size()) != dp.d + 1)
    throw DynamicsError("full_hamiltonian: J length does not match the graph diameter");
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(g.n, g.n);
  for (std::size_t m = 0; m < J.size(); ++m) H += 2.0 * J[m] * dp.Amats[m];
  std::vector<long long> kappa;
  for (const auto& cls : dp.classes) kappa.push_back(static_cast<long long>(cls.size()));
  const double c = global_constant(g.n, kappa, J);
  H += c * Eigen::MatrixXd::Identity(g.n, g.n);
  return Hamiltonian{std::move(H), c, Hamiltonian::Full};
}

// Spectral-decomposition propagator for a real symmetric Hamiltonian; exact
// unitarity by construction, reusable across times.
class Evolver {
 public:
  explicit Evolver(const Eigen::MatrixXd& H) : es_(H) {
    if (es_.info() != Eigen::Success) throw DynamicsError("evolve: eigendecomposition failed");
  }

  // Column psi(t) = e^{-iHt} e_source.
  Eigen::VectorXcd column(double t, int source) const {
    const auto& V = es_.eigenvectors();
    const auto& E = es_.eigenvalues();
    const int n = static_cast<int>(E.size());
    Eigen::VectorXcd phases(n);
    for (int k = 0; k < n; ++k)
      phases(k) = std::polar(1.0, -E(k) * t) * V(source, k);
    return V * phases;
  }

 private:
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_;
};

// Stratum amplitudes f_i(t) = <phi_i| e^{-iHt} |phi_0>. The quotient form acts
// on the strata directly; the full form is projected through the partition.
inline std::vector<std::complex<double>> evolve(const Hamiltonian& h, double t,
                                                const DistancePartition* dp = nullptr) {
  if (h.form == Hamiltonian::Quotient) {
    const Eigen::VectorXcd psi = Evolver(h.H).column(t, 0);
    return {psi.data(), psi.data() + psi.size()};
  }
  if (dp == nullptr) throw DynamicsError("evolve: full form requires a distance partition");
  const Eigen::VectorXcd psi = Evolver(h.H).column(t, dp->base);
  std::vector<std::complex<double>> f(static_cast<std::size_t>(dp->d) + 1);
  for (int i = 0; i <= dp->d; ++i) {
    std::complex<double> acc(0.0, 0.0);
    for (int v : dp->classes[static_cast<std::size_t>(i)]) acc += psi(v);
    f[static_cast<std::size_t>(i)] =
        acc / std::sqrt(static_cast<double>(dp->classes[static_cast<std::size_t>(i)].size()));
  }
  return f;
}

// Closed-form quadrature amplitude
// f_i(t) = e^{-ict} (1/sqrt kappa_i) sum_k gamma_k P_i(x_k) e^{-2it sum_m J_m P_m(x_k)}.
inline std::complex<double> amplitude_quadrature(const SpectralData& spec,
                                                 const SchemeParameters& p,
                                                 const std::vector<double>& J, int i, double t) {
  const int n = p.d() + 1;
  const double c = global_constant(p.v, p.kappa, J);
  std::complex<double> acc(0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    double phase = 0.0;
    for (int m = 0; m < n; ++m) phase += J[static_cast<std::size_t>(m)] * spec.Pmat(k, m);
    acc += spec.gamma[static_cast<std::size_t>(k)] * spec.Pmat(k, i) *
           std::polar(1.0, -2.0 * t * phase);
  }
  return std::polar(1.0, -c * t) * acc /
         std::sqrt(static_cast<double>(p.kappa[static_cast<std::size_t>(i)]));
}

// Spin-network oracle: the Hamiltonian sum over unordered vertex pairs at
// distance m weighted J_m, acting on sparse expansions over the 2^n spin basis
// (bit v set = spin down at v). Never densifies the 2^n space. Action per pair:
// equal spins +1, unequal spins -1 plus +2 on the swapped state; the
// distance-0 self term is the identity per vertex, i.e. a J_0 N/2 shift.
// Coefficients are held as doubled integers so checks are exact.
class SpinOracle {
 public:
  SpinOracle(const LabeledGraph& g, int limit = 14) : n_(g.n) {
    if (g.n > limit)
      throw DynamicsError("spin_oracle: vertex count " + std::to_string(g.n) +
                          " exceeds limit " + std::to_string(limit));
    std::vector<std::vector<int>> all(static_cast<std::size_t>(g.n));
    int diam = 0;
    for (int s = 0; s < g.n; ++s) {
      all[static_cast<std::size_t>(s)] = detail::bfs_distances(g, s);
      for (int x : all[static_cast<std::size_t>(s)]) diam = std::max(diam, x);
    }
    d_ = diam;
    pairs_.resize(static_cast<std::size_t>(diam) + 1);
    for (int u = 0; u < g.n; ++u)
      for (int w = u + 1; w < g.n; ++w)
        pairs_[static_cast<std::size_t>(all[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)])]
            .push_back({u, w});
  }

  int n() const { return n_; }
  int diameter() const { return d_; }

  // Exact action of the distance-m term on one basis state:
  // returns (mask', coeff2) with H_m |mask> = (1/2) sum coeff2 |mask'>, so that
  // H |mask> = (1/2) sum_m J_m (term action). All coeff2 are integers.
  std::vector<std::pair<std::uint32_t, long long>> apply_term(int m, std::uint32_t mask) const {
    std::vector<std::pair<std::uint32_t, long long>> out;
    if (m == 0) {
      out.push_back({mask, static_cast<long long>(n_)});
      return out;
    }
    long long diag2 = 0;
    for (const auto& [u, w] : pairs_[static_cast<std::size_t>(m)]) {
      const std::uint32_t bu = (mask >> u) & 1u, bw = (mask >> w) & 1u;
      if (bu == bw) {
        diag2 += 2;
      } else {
        diag2 -= 2;
        out.push_back({mask ^ ((1u << u) | (1u << w)), 4});
      }
    }
    out.push_back({mask, diag2});
    return out;
  }

  // H applied to a sparse state expansion.
  std::vector<std::pair<std::uint32_t, double>> apply(const std::vector<double>& J,
                                                      std::uint32_t mask) const {
    std::vector<std::pair<std::uint32_t, double>> out;
    for (int m = 0; m <= d_ && m < static_cast<int>(J.size()); ++m)
      for (const auto& [mk, c2] : apply_term(m, mask))
        out.push_back({mk, 0.5 * J[static_cast<std::size_t>(m)] * static_cast<double>(c2)});
    return out;
  }

  // n x n block on the single-down-spin states |v> = |...down_v...>.
  Eigen::MatrixXd single_excitation_block(const std::vector<double>& J) const {
    if (static_cast<int>(J.size()) != d_ + 1)
      throw DynamicsError("spin_oracle: J must have diameter+1 entries");
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n_, n_);
    for (int v = 0; v < n_; ++v)
      for (const auto& [mask, amp] : apply(J, 1u << v)) {
        if ((mask & (mask - 1)) != 0 || mask == 0)
          throw DynamicsError("spin_oracle: excitation number not conserved");
        int w = 0;
        while ((mask >> w) != 1u) ++w;
        B(w, v) += amp;
      }
    return B;
  }

  // [sigma^z_tot, H] = 0: the action of every distance term maps a basis state
  // to states of identical down-spin count, with integer coefficients.
  void conservation_check(int trials, unsigned seed) const {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, (1u << n_) - 1);
    for (int t = 0; t < trials; ++t) {
      const std::uint32_t mask = dist(rng);
      const int pc = std::popcount(mask);
      for (int m = 0; m <= d_; ++m)
        for (const auto& [mk, c2] : apply_term(m, mask)) {
          (void)c2;
          if (std::popcount(mk) != pc)
            throw DynamicsError("spin_oracle: conservation violated on mask " +
                                std::to_string(mask));
        }
    }
  }

 private:
  int n_;
  int d_ = 0;
  std::vector<std::vector<std::pair<int, int>>> pairs_;  // by distance
};

// Per-engine transfer data at t0.
struct FidelityReport {
  double theta = 0.0;
  double t0 = 1.0;
  double c = 0.0;  // global constant, for phase bookkeeping
  std::vector<std::string> engines;
  std::vector<double> abs_fd;
  std::vector<double> arg_fd;
  double max_pairwise = 0.0;
  bool certified = false;
};

// |f_d(t0)| by all applicable engines: quadrature and quotient always, full
// graph when an edge list exists, spin oracle when the graph is small enough.
inline FidelityReport fidelity_report(const SchemeParameters& p, const PolynomialSystem& sys,
                                      const SpectralData& spec,
                                      const std::optional<LabeledGraph>& graph,
                                      const std::vector<double>& J, double theta, double t0,
                                      int oracle_limit = 14) {
  FidelityReport rep;
  rep.theta = theta;
  rep.t0 = t0;
  rep.c = global_constant(p.v, p.kappa, J);
  const int d = p.d();
  std::vector<std::complex<double>> fd;

  rep.engines.push_back("quadrature");
  fd.push_back(amplitude_quadrature(spec, p, J, d, t0));

  rep.engines.push_back("quotient");
  fd.push_back(evolve(quotient_hamiltonian(p, sys, J), t0)[static_cast<std::size_t>(d)]);

  if (graph) {
    const DistancePartition dp = distance_partition(*graph, 0);
    if (dp.d != d)
      throw DynamicsError("fidelity_report: graph diameter does not match the array");
    rep.engines.push_back("full");
    fd.push_back(evolve(full_hamiltonian(*graph, dp, J), t0, &dp)[static_cast<std::size_t>(d)]);
    if (graph->n <= oracle_limit) {
      SpinOracle oracle(*graph, oracle_limit);
      rep.engines.push_back("oracle");
      const Eigen::VectorXcd psi = Evolver(oracle.single_excitation_block(J)).column(t0, 0);
      std::complex<double> acc(0.0, 0.0);
      for (int v : dp.classes[static_cast<std::size_t>(d)]) acc += psi(v);
      fd.push_back(acc / std::sqrt(static_cast<double>(
                             dp.classes[static_cast<std::size_t>(d)].size())));
    }
  }

  for (std::size_t a = 0; a < fd.size(); ++a)
    for (std::size_t b = a + 1; b < fd.size(); ++b)
      rep.max_pairwise = std::max(rep.max_pairwise, std::abs(fd[a] - fd[b]));
  if (rep.max_pairwise > kEngineTolerance)
    throw DynamicsError("fidelity_report: engines disagree by " +
                        std::to_string(rep.max_pairwise));

  rep.certified = true;
  for (const auto& f : fd) {
    rep.abs_fd.push_back(std::abs(f));
    rep.arg_fd.push_back(std::arg(f));
    if (std::abs(f) < 1.0 - kCertifyMargin) rep.certified = false;
  }
  return rep;
}

// One fidelity-sweep sample row.
struct SweepRow {
  double t = 0.0;
  double abs_fd = 0.0;
  double arg_fd = 0.0;
  double abs_f0 = 0.0;
};

// Uniform samples of |f_d(t)|, arg f_d(t), |f_0(t)| on [0, t_max] via the
// quotient engine; samples = 1 degenerates to the single row t = 0.
inline std::vector<SweepRow> sweep(const SchemeParameters& p, const PolynomialSystem& sys,
                                   const std::vector<double>& J, double t_max, int samples) {
  if (samples < 1) throw DynamicsError("sweep: samples >= 1 required");
  const Hamiltonian h = quotient_hamiltonian(p, sys, J);
  const Evolver ev(h.H);
  const int d = p.d();
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double t = samples == 1 ? 0.0 : t_max * static_cast<double>(j) / (samples - 1);
    const Eigen::VectorXcd psi = ev.column(t, 0);
    rows.push_back(SweepRow{t, std::abs(psi(d)), std::arg(psi(d)), std::abs(psi(0))});
  }
  return rows;
}

}  // namespace pstnet
