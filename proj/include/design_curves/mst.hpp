#pragma once

#include <algorithm>
#include <numeric>

#include "design_curves/projective.hpp"

namespace design_curves {

/// Rooted minimal spanning tree of Y under the Fubini-Study metric.
struct SpanningTree {
  struct Edge {
    int parent, child;
    double weight;
  };
  int root = 0;
  std::vector<Edge> edges;                 // one per non-root node, child order
  std::vector<int> parent;                 // -1 for root
  std::vector<std::vector<int>> children;  // sorted by index
  double total_weight = 0.0;
  int max_degree = 0;                      // tree degree (children + parent edge)

  int degree(int v) const {
    return static_cast<int>(children[v].size()) + (v == root ? 0 : 1);
  }
};

/// Kruskal on the complete graph with deterministic (weight, i, j) tie-break.
/// Asserts that no third point lies on a chosen edge's minimal geodesic
/// interior (within 1e-9), matching the paper's edge admissibility.
inline SpanningTree build_mst(const ProjectiveDesignSet& y) {
  int n = static_cast<int>(y.size());
  if (n < 2) throw Error(ErrorKind::InvariantViolation, "spanning tree needs at least 2 points");
  y.validate();  // DuplicatePoints

  Mat d(n, n);
  for (int i = 0; i < n; ++i) {
    d(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = cp_distance(y.points[i], y.points[j]);
  }

  struct E {
    double w;
    int i, j;
  };
  std::vector<E> all;
  all.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.push_back({d(i, j), i, j});
  std::sort(all.begin(), all.end(), [](const E& a, const E& b) {
    return std::tie(a.w, a.i, a.j) < std::tie(b.w, b.i, b.j);
  });

  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };

  std::vector<std::pair<int, int>> chosen;
  for (const auto& e : all) {
    int a = find(e.i), b = find(e.j);
    if (a == b) continue;
    comp[a] = b;
    chosen.emplace_back(e.i, e.j);
    if (static_cast<int>(chosen.size()) == n - 1) break;
  }

  for (auto [i, j] : chosen)
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      double through = d(i, k) + d(k, j);
      if (std::abs(through - d(i, j)) < 1e-9 && d(i, k) > 1e-9 && d(k, j) > 1e-9)
        throw Error(ErrorKind::EdgeInteriorBlocked,
                    "point " + std::to_string(k) + " lies on the geodesic interior of edge (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
    }

  SpanningTree t;
  t.root = 0;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : chosen) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> stack{t.root};
  std::vector<bool> seen(n, false);
  seen[t.root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    std::sort(adj[v].begin(), adj[v].end());
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.children[v].push_back(w);
      t.edges.push_back({v, w, d(v, w)});
      stack.push_back(w);
    }
  }
  for (const auto& e : t.edges) t.total_weight += e.weight;
  for (int v = 0; v < n; ++v) t.max_degree = std::max(t.max_degree, t.degree(v));
  return t;
}

/// W_Y (double the MST weight), N_Y (max tree degree), M_Y, and delta-tilde.
struct AssemblyConstants {
  double W = 0.0;
  int N = 0;
  double M = 0.0;
  double delta = 0.0;
  double delta_tilde = 0.0;
};

inline AssemblyConstants tree_constants(const SpanningTree& t, size_t y_size, double delta) {
  AssemblyConstants c;
  c.W = 2.0 * t.total_weight;
  c.N = t.max_degree;
  c.M = 2.0 * kPi * static_cast<double>(y_size - 1) / c.N;
  if (!(delta > 0.0) || !(delta < c.M))
    throw Error(ErrorKind::DeltaOutOfRange,
                "delta must lie in (0, M) with M = " + std::to_string(c.M));
  c.delta = delta;
  c.delta_tilde = delta / (2.0 * static_cast<double>(y_size - 1));
  return c;
}

}  // namespace design_curves
