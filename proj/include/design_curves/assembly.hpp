#pragma once

#include <random>

#include "design_curves/assemble.hpp"
#include "design_curves/intersect.hpp"
#include "design_curves/mst.hpp"

namespace design_curves {

/// Outcome of the fiber-trimming / lift-doubling assembly of the simple
/// geodesic cycle gamma_Y.
struct AssemblyResult {
  Curve cycle;
  AssemblyConstants constants;
  double length = 0.0;
  SimplicityResult simplicity;
  std::uint64_t seed = 0;
  int retries = 0;
  /// Per-node sorted gap start phases (relative to the node's arrival point),
  /// each gap spanning delta_tilde; exposes the removed-arc disjointness data.
  std::vector<std::vector<double>> gap_phases;
  /// Chosen child phase offsets delta_{d_{y,j}}, indexed by child node.
  std::vector<double> child_offsets;
};

namespace detail {

inline CVec phase_mul(const CVec& z, double theta) {
  return z * std::complex<double>(std::cos(theta), std::sin(theta));
}

struct Gap {
  double start;  // phase relative to the fiber's arrival point, in [0, 2 pi)
  NodeId id_start, id_end;
};

}  // namespace detail

/// Builds the geodesic cycle of the fiber-connecting construction: each tree
/// edge contributes a doubled horizontal lift (the lift and its
/// delta-tilde-rotated twin), each incident fiber loses a delta-tilde arc,
/// and the depth-first gluing closes everything into one cycle of length
/// 2 pi |Y| + W - delta.
inline AssemblyResult assemble_gamma(const ProjectiveDesignSet& y, const SpanningTree& tree,
                                     double delta,
                                     const std::vector<double>* child_offsets = nullptr,
                                     std::uint64_t seed = 0, int max_retries = 16) {
  int n = static_cast<int>(y.size());
  AssemblyConstants consts = tree_constants(tree, y.size(), delta);
  for (const auto& e : tree.edges)
    if (e.weight >= kPi / 2.0 - 1e-9)
      throw Error(ErrorKind::EdgeTooLong, "tree edge of weight >= pi/2: lift not unique");

  const double dt = consts.delta_tilde;
  const double window = 2.0 * kPi / consts.N - dt;  // admissible offset window [0, window)
  std::mt19937_64 rng(seed);

  std::vector<double> offsets(n, 0.0);
  if (child_offsets) {
    if (static_cast<int>(child_offsets->size()) != n)
      throw Error(ErrorKind::InvariantViolation, "need one phase offset per node");
    for (int v = 0; v < n; ++v)
      if (v != tree.root && ((*child_offsets)[v] < 0.0 || (*child_offsets)[v] >= window))
        throw Error(ErrorKind::InvariantViolation, "phase offset outside [0, 2 pi / N - delta~)");
    offsets = *child_offsets;
  } else {
    std::fill(offsets.begin(), offsets.end(), 0.5 * window);
  }

  AssemblyResult result;
  result.seed = seed;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    result.retries = attempt;
    bool gaps_ok = true;

    // Anchor (arrival) representative per fiber, filled along a preorder walk.
    std::vector<CVec> arrival(n);
    arrival[tree.root] = y.points[tree.root].z;
    std::vector<std::vector<detail::Gap>> gaps(n);
    std::vector<Segment> lifts;

    std::vector<int> order{tree.root};
    for (size_t q = 0; q < order.size(); ++q)
      for (int c : tree.children[order[q]]) order.push_back(c);

    for (int v : order) {
      const auto& kids = tree.children[v];
      int m = static_cast<int>(kids.size());
      for (int j = 1; j <= m; ++j) {
        int c = kids[j - 1];
        double phi = 2.0 * kPi * j / m + offsets[c];
        phi = std::fmod(phi, 2.0 * kPi);
        CVec anchor = detail::phase_mul(arrival[v], phi);
        // horizontal lift from the anchor to the child's fiber
        std::complex<double> h = detail::hermitian(anchor, y.points[c].z);
        CVec arr = y.points[c].z * (h / std::abs(h));
        arrival[c] = arr;

        NodeId p0 = next_node_id(), p1 = next_node_id();
        NodeId c0 = next_node_id(), c1 = next_node_id();
        gaps[v].push_back({phi, p0, p1});
        gaps[c].push_back({0.0, c0, c1});

        Segment l0 = great_arc(Point(to_real(anchor), 1e-10), Point(to_real(arr), 1e-10), p0, c0);
        CVec anchor_t = detail::phase_mul(anchor, dt);
        CVec arr_t = detail::phase_mul(arr, dt);
        Segment l1 = great_arc(Point(to_real(anchor_t), 1e-10), Point(to_real(arr_t), 1e-10), p1, c1);
        lifts.push_back(std::move(l0));
        lifts.push_back(std::move(l1));
      }
    }

    // Trimmed fiber arcs between consecutive gaps.
    std::vector<Segment> fiber_arcs;
    result.gap_phases.assign(n, {});
    for (int v = 0; v < n && gaps_ok; ++v) {
      auto& gs = gaps[v];
      if (gs.empty())
        throw Error(ErrorKind::Disconnected, "isolated fiber without tree edges");
      std::sort(gs.begin(), gs.end(),
                [](const detail::Gap& a, const detail::Gap& b) { return a.start < b.start; });
      for (const auto& g : gs) result.gap_phases[v].push_back(g.start);
      for (size_t i = 0; i < gs.size(); ++i) {
        double next_start = (i + 1 < gs.size()) ? gs[i + 1].start : gs[0].start + 2.0 * kPi;
        if (next_start - gs[i].start <= dt + 1e-12) {
          gaps_ok = false;  // removed arcs would overlap; redraw offsets
          break;
        }
      }
      if (!gaps_ok) break;
      Vec u = to_real(arrival[v]);
      Vec w = to_real(detail::phase_mul(arrival[v], kPi / 2.0));
      for (size_t i = 0; i < gs.size(); ++i) {
        size_t nx = (i + 1) % gs.size();
        double a = gs[i].start + dt;
        double b = (nx == 0) ? gs[0].start + 2.0 * kPi : gs[nx].start;
        Segment s;
        s.kind = SegmentKind{ArcPiece{u, w, a, b}};
        s.weight = b - a;
        s.start_node = gs[i].id_end;
        s.end_node = gs[nx].id_start;
        fiber_arcs.push_back(std::move(s));
      }
    }

    if (gaps_ok) {
      std::vector<Segment> all = fiber_arcs;
      all.insert(all.end(), lifts.begin(), lifts.end());
      Curve cycle = assemble_cycle(std::move(all));
      double len = curve_length(cycle);
      double expected = 2.0 * kPi * n + consts.W - delta;
      if (std::abs(len - expected) > 1e-9)
        throw Error(ErrorKind::InvariantViolation,
                    "assembled length " + std::to_string(len) + " != 2 pi |Y| + W - delta");
      SimplicityResult simp = is_simple(cycle);
      if (simp.simple) {
        result.cycle = std::move(cycle);
        result.constants = consts;
        result.length = len;
        result.simplicity = simp;
        result.child_offsets = offsets;
        return result;
      }
    }

    // redraw offsets and retry, as in the proof's perturbation of delta_y
    std::uniform_real_distribution<double> unif(0.0, window);
    for (int v = 0; v < n; ++v) offsets[v] = unif(rng);
  }
  throw Error(ErrorKind::SimplicityFailure,
              "no simple assembly after " + std::to_string(max_retries) + " offset redraws");
}

inline AssemblyResult assemble_gamma(const ProjectiveDesignSet& y, double delta,
                                     std::uint64_t seed = 0) {
  SpanningTree tree = build_mst(y);
  return assemble_gamma(y, tree, delta, nullptr, seed);
}

}  // namespace design_curves
