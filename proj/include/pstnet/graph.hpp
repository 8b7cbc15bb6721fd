#pragma once

#include "pstnet/scheme.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace pstnet {

// Edge-list ingestion failure; line is 1-based when a specific line is at fault.
struct GraphError : Error {
  explicit GraphError(const std::string& msg, int line_no = -1) : Error(msg), line(line_no) {}
  int line;
};

// Simple connected undirected graph with dense 0-based labels.
struct LabeledGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::string name;
};

namespace detail {

inline std::vector<int> bfs_distances(const LabeledGraph& g, int base) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(base)] = 0;
  q.push(base);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : g.adj[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
  }
  return dist;
}

inline void finalize_graph(LabeledGraph& g) {
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  const auto dist = bfs_distances(g, 0);
  for (int v = 0; v < g.n; ++v)
    if (dist[static_cast<std::size_t>(v)] < 0)
      throw GraphError("graph is disconnected (vertex " + std::to_string(v) + " unreachable)");
}

}  // namespace detail

// Even cycle C_{2m}.
inline LabeledGraph build_cycle(int m) {
  if (m < 2) throw GraphError("build_cycle: m >= 2 required");
  LabeledGraph g;
  g.n = 2 * m;
  g.name = "C_" + std::to_string(2 * m);
  g.adj.resize(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) {
    g.adj[static_cast<std::size_t>(i)].push_back((i + 1) % g.n);
    g.adj[static_cast<std::size_t>(i)].push_back((i + g.n - 1) % g.n);
  }
  detail::finalize_graph(g);
  return g;
}

// Hypercube H(d,2): vertices are bitstrings by binary value, edges at Hamming
// distance 1.
inline LabeledGraph build_hypercube(int d) {
  if (d < 1) throw GraphError("build_hypercube: d >= 1 required");
  LabeledGraph g;
  g.n = 1 << d;
  g.name = "H(" + std::to_string(d) + ",2)";
  g.adj.resize(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v)
    for (int bit = 0; bit < d; ++bit) g.adj[static_cast<std::size_t>(v)].push_back(v ^ (1 << bit));
  detail::finalize_graph(g);
  return g;
}

// Generalized Petersen GP(n,k): outer n-cycle 0..n-1, inner step-k cycle
// n..2n-1, spokes i -- n+i.
inline LabeledGraph build_generalized_petersen(int n, int k) {
  LabeledGraph g;
  g.n = 2 * n;
  g.name = "GP(" + std::to_string(n) + "," + std::to_string(k) + ")";
  g.adj.resize(static_cast<std::size_t>(g.n));
  auto add = [&g](int u, int v) {
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  };
  for (int i = 0; i < n; ++i) {
    add(i, (i + 1) % n);
    add(n + i, n + (i + k) % n);
    add(i, n + i);
  }
  detail::finalize_graph(g);
  return g;
}

inline LabeledGraph build_petersen() {
  auto g = build_generalized_petersen(5, 2);
  g.name = "Petersen";
  return g;
}

inline LabeledGraph build_desargues() {
  auto g = build_generalized_petersen(10, 3);
  g.name = "Desargues";
  return g;
}

inline LabeledGraph build_dodecahedron() {
  auto g = build_generalized_petersen(10, 2);
  g.name = "Dodecahedron";
  return g;
}

// Icosahedron: apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11.
inline LabeledGraph build_icosahedron() {
  LabeledGraph g;
  g.n = 12;
  g.name = "Icosahedron";
  g.adj.resize(12);
  auto add = [&g](int u, int v) {
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  };
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, un = 1 + (i + 1) % 5;
    const int l = 6 + i, ln = 6 + (i + 1) % 5;
    add(0, u);
    add(u, un);
    add(l, ln);
    add(u, l);
    add(u, ln);
    add(11, l);
  }
  detail::finalize_graph(g);
  return g;
}

// Lines "u v" with 0-based labels; '#' starts a comment; duplicate edges are
// deduped with a warning; self-loops, parse errors, and disconnection reject.
inline LabeledGraph ingest_edge_list(std::istream& in, std::vector<std::string>* warnings = nullptr) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  int max_v = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    long long u, w;
    if (!(ls >> u >> w))
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected \"u v\"", line_no);
    std::string extra;
    if (ls >> extra)
      throw GraphError("edge list line " + std::to_string(line_no) + ": trailing token \"" +
                           extra + "\"",
                       line_no);
    if (u < 0 || w < 0)
      throw GraphError("edge list line " + std::to_string(line_no) + ": negative vertex label",
                       line_no);
    if (u == w)
      throw GraphError("edge list line " + std::to_string(line_no) + ": self-loop at vertex " +
                           std::to_string(u),
                       line_no);
    const int lo = static_cast<int>(std::min(u, w));
    const int hi = static_cast<int>(std::max(u, w));
    if (!seen.insert({lo, hi}).second) {
      if (warnings)
        warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                            std::to_string(lo) + " " + std::to_string(hi) + " (deduped)");
      continue;
    }
    edges.push_back({lo, hi});
    max_v = std::max(max_v, hi);
  }
  if (edges.empty()) throw GraphError("edge list contains no edges");
  LabeledGraph g;
  g.n = max_v + 1;
  g.adj.resize(static_cast<std::size_t>(g.n));
  for (auto [u, w] : edges) {
    g.adj[static_cast<std::size_t>(u)].push_back(w);
    g.adj[static_cast<std::size_t>(w)].push_back(u);
  }
  for (int v = 0; v < g.n; ++v)
    if (g.adj[static_cast<std::size_t>(v)].empty())
      throw GraphError("graph is disconnected (vertex " + std::to_string(v) + " isolated)");
  detail::finalize_graph(g);
  return g;
}

inline LabeledGraph ingest_edge_list(const std::string& text,
                                     std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  return ingest_edge_list(in, warnings);
}

// BFS strata from a base vertex plus the global 0/1 distance matrices
// (A_i)_{uv} = [dist(u,v) = i]. A_0 = I and sum_i A_i = J. For a
// distance-regular graph the base eccentricity d equals the global diameter
// and Amats has exactly d+1 entries; in general Amats covers the diameter.
struct DistancePartition {
  int base = 0;
  int d = 0;                             // eccentricity of the base
  std::vector<int> dist;                 // from base
  std::vector<std::vector<int>> classes; // Gamma_0..Gamma_d, all nonempty
  std::vector<Eigen::MatrixXd> Amats;    // global distance matrices A_0..A_diam
};

inline DistancePartition distance_partition(const LabeledGraph& g, int base) {
  if (base < 0 || base >= g.n) throw GraphError("distance_partition: invalid base vertex");
  DistancePartition dp;
  dp.base = base;
  dp.dist = detail::bfs_distances(g, base);
  dp.d = *std::max_element(dp.dist.begin(), dp.dist.end());
  dp.classes.resize(static_cast<std::size_t>(dp.d) + 1);
  for (int v = 0; v < g.n; ++v)
    dp.classes[static_cast<std::size_t>(dp.dist[static_cast<std::size_t>(v)])].push_back(v);

  std::vector<std::vector<int>> all(static_cast<std::size_t>(g.n));
  int diam = 0;
  for (int s = 0; s < g.n; ++s) {
    all[static_cast<std::size_t>(s)] = detail::bfs_distances(g, s);
    for (int w : all[static_cast<std::size_t>(s)]) diam = std::max(diam, w);
  }
  dp.Amats.assign(static_cast<std::size_t>(diam) + 1, Eigen::MatrixXd::Zero(g.n, g.n));
  for (int u = 0; u < g.n; ++u)
    for (int w = 0; w < g.n; ++w)
      dp.Amats[static_cast<std::size_t>(all[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)])](u, w) = 1.0;
  return dp;
}

inline Eigen::MatrixXd adjacency_matrix(const LabeledGraph& g) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int u = 0; u < g.n; ++u)
    for (int w : g.adj[static_cast<std::size_t>(u)]) A(u, w) = 1.0;
  return A;
}

// First observed violation of distance-regularity.
struct DRWitness {
  int base = 0, w = 0, i = 0;
  long long c_obs = 0, a_obs = 0, b_obs = 0;
  long long c_expect = 0, a_expect = 0, b_expect = 0;

  std::string to_string() const {
    return "NotDistanceRegular: from base " + std::to_string(base) + ", vertex " +
           std::to_string(w) + " at distance " + std::to_string(i) + " sees (c,a,b) = (" +
           std::to_string(c_obs) + "," + std::to_string(a_obs) + "," + std::to_string(b_obs) +
           ") but (" + std::to_string(c_expect) + "," + std::to_string(a_expect) + "," +
           std::to_string(b_expect) + ") elsewhere";
  }
};

// Exhaustive check: for every base and every vertex at distance i, the counts
// of neighbors one step closer/same/farther must be the constants c_i, a_i, b_i.
inline std::variant<IntersectionArray, DRWitness> check_distance_regular(const LabeledGraph& g) {
  std::vector<std::vector<int>> all(static_cast<std::size_t>(g.n));
  int diam = 0;
  for (int s = 0; s < g.n; ++s) {
    all[static_cast<std::size_t>(s)] = detail::bfs_distances(g, s);
    for (int x : all[static_cast<std::size_t>(s)]) diam = std::max(diam, x);
  }
  std::vector<long long> b(static_cast<std::size_t>(diam) + 1, -1), c(b), a(b);
  for (int s = 0; s < g.n; ++s) {
    const auto& ds = all[static_cast<std::size_t>(s)];
    for (int w = 0; w < g.n; ++w) {
      const int i = ds[static_cast<std::size_t>(w)];
      long long ci = 0, ai = 0, bi = 0;
      for (int y : g.adj[static_cast<std::size_t>(w)]) {
        const int dy = ds[static_cast<std::size_t>(y)];
        if (dy == i - 1)
          ++ci;
        else if (dy == i)
          ++ai;
        else
          ++bi;
      }
      const auto idx = static_cast<std::size_t>(i);
      if (b[idx] < 0) {
        b[idx] = bi;
        a[idx] = ai;
        c[idx] = ci;
      } else if (b[idx] != bi || a[idx] != ai || c[idx] != ci) {
        DRWitness wit;
        wit.base = s;
        wit.w = w;
        wit.i = i;
        wit.c_obs = ci;
        wit.a_obs = ai;
        wit.b_obs = bi;
        wit.c_expect = c[idx];
        wit.a_expect = a[idx];
        wit.b_expect = b[idx];
        return wit;
      }
    }
  }
  std::vector<long long> bs(b.begin(), b.end() - 1);        // b_0..b_{d-1}
  std::vector<long long> cs(c.begin() + 1, c.end());        // c_1..c_d
  return validate_intersection_array(bs, cs);
}

// Orthonormal stratum basis phi_i = (1/sqrt kappa_i) sum_{beta in Gamma_i} e_beta,
// stored as columns of an n x (d+1) matrix.
struct StratumBasis {
  Eigen::MatrixXd phi;
};

inline StratumBasis stratum_vectors(const DistancePartition& dp) {
  const int n = static_cast<int>(dp.dist.size());
  StratumBasis sb;
  sb.phi = Eigen::MatrixXd::Zero(n, dp.d + 1);
  for (int i = 0; i <= dp.d; ++i) {
    const auto& cls = dp.classes[static_cast<std::size_t>(i)];
    const double inv = 1.0 / std::sqrt(static_cast<double>(cls.size()));
    for (int v : cls) sb.phi(v, i) = inv;
  }
  return sb;
}

}  // namespace pstnet
