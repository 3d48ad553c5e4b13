#pragma once

#include <map>

#include "design_curves/quadrature.hpp"

namespace design_curves {

/// Chains a segment set into a single closed curve. Every node id must have
/// degree exactly 2; orientation is flipped as needed so consecutive
/// endpoints match. Parameter weights of the result are proportional to
/// segment arc lengths.
inline Curve assemble_cycle(std::vector<Segment> segments) {
  if (segments.empty()) throw Error(ErrorKind::Disconnected, "no segments");
  std::map<NodeId, std::vector<size_t>> at_node;
  for (size_t i = 0; i < segments.size(); ++i) {
    at_node[segments[i].start_node].push_back(i);
    at_node[segments[i].end_node].push_back(i);
  }
  for (const auto& [id, incident] : at_node)
    if (incident.size() != 2)
      throw Error(ErrorKind::DegreeViolation,
                  "node " + std::to_string(id) + " has degree " + std::to_string(incident.size()));

  std::vector<bool> used(segments.size(), false);
  std::vector<Segment> chain;
  chain.reserve(segments.size());
  Segment first = segments[0];
  first.reversed = false;
  used[0] = true;
  chain.push_back(first);
  NodeId begin = chain.front().from();
  NodeId cursor = chain.front().to();
  while (cursor != begin) {
    const auto& incident = at_node[cursor];
    size_t next = used[incident[0]] ? incident[1] : incident[0];
    if (used[next]) throw Error(ErrorKind::Disconnected, "walk revisits a used segment");
    Segment s = segments[next];
    s.reversed = (s.start_node != cursor);
    used[next] = true;
    cursor = s.reversed ? s.start_node : s.end_node;
    chain.push_back(std::move(s));
  }
  for (bool u : used)
    if (!u) throw Error(ErrorKind::Disconnected, "segment set contains more than one cycle");

  for (auto& s : chain) {
    if (auto ex = s.kind.exact_length())
      s.weight = *ex;
    else
      s.weight = detail::adaptive_gl([&](double v) { return s.kind.deriv(v).norm(); });
  }
  // chain orientation uses from()/to(); Curve validates via start/end nodes
  // of the traversal, so re-express the chain in traversal order.
  std::vector<Segment> oriented = std::move(chain);
  double total = 0.0;
  for (const auto& s : oriented) total += s.weight;
  for (auto& s : oriented) s.weight /= total;
  return Curve(std::move(oriented), true);
}

}  // namespace design_curves
