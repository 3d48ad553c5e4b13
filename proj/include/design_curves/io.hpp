#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "design_curves/design_set.hpp"
#include "design_curves/hybrid.hpp"
#include "design_curves/projective.hpp"
#include "design_curves/quadrature.hpp"

namespace design_curves {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Weighted design sets: {"dimension": d (sphere), "strength": t,
//                        "points": [[...], ...], "weights": [...]}
// ---------------------------------------------------------------------------

inline json set_to_json(const WeightedDesignSet& x) {
  json j;
  j["dimension"] = x.sphere_dim();
  j["strength"] = x.claimed_strength;
  json pts = json::array();
  for (const auto& p : x.points) {
    json row = json::array();
    for (int i = 0; i < p.dim(); ++i) row.push_back(p[i]);
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  j["weights"] = x.weights;
  return j;
}

inline WeightedDesignSet set_from_json(const json& j) {
  try {
    int d = j.at("dimension").get<int>();
    int t = j.at("strength").get<int>();
    std::vector<Point> pts;
    for (const auto& row : j.at("points")) {
      Vec v(row.size());
      for (size_t i = 0; i < row.size(); ++i) v[static_cast<Eigen::Index>(i)] = row[i].get<double>();
      if (v.size() != d + 1)
        throw Error(ErrorKind::InvariantViolation, "point dimension disagrees with header");
      pts.emplace_back(v);  // throws InvariantViolation for non-unit rows
    }
    std::vector<double> ws = j.at("weights").get<std::vector<double>>();
    return WeightedDesignSet(std::move(pts), std::move(ws), t);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline void save_set(const WeightedDesignSet& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path);
  out << std::setprecision(17) << set_to_json(x).dump(2) << "\n";
}

inline WeightedDesignSet load_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return set_from_json(j);
}

// ---------------------------------------------------------------------------
// Projective sets: {"n": n, "strength": t, "points": [[re, im, ...], ...]}
// ---------------------------------------------------------------------------

inline json projective_to_json(const ProjectiveDesignSet& y) {
  json j;
  j["n"] = y.n();
  j["strength"] = y.claimed_strength;
  json pts = json::array();
  for (const auto& p : y.points) {
    Vec v = to_real(p.z);
    json row = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v[i]);
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j;
}

inline ProjectiveDesignSet projective_from_json(const json& j) {
  try {
    int n = j.at("n").get<int>();
    int t = j.at("strength").get<int>();
    std::vector<ProjPoint> pts;
    for (const auto& row : j.at("points")) {
      if (static_cast<int>(row.size()) != 2 * n + 2)
        throw Error(ErrorKind::InvariantViolation, "representative dimension disagrees with n");
      Vec v(row.size());
      for (size_t i = 0; i < row.size(); ++i) v[static_cast<Eigen::Index>(i)] = row[i].get<double>();
      pts.emplace_back(to_complex(v));
    }
    return ProjectiveDesignSet(std::move(pts), t);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline void save_projective(const ProjectiveDesignSet& y, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path);
  out << std::setprecision(17) << projective_to_json(y).dump(2) << "\n";
}

inline ProjectiveDesignSet load_projective(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return projective_from_json(j);
}

// ---------------------------------------------------------------------------
// Curves (geodesic arcs and circles only) and hybrid designs
// ---------------------------------------------------------------------------

inline json curve_to_json(const Curve& gamma) {
  json segs = json::array();
  auto vec_json = [](const Vec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
  };
  for (const auto& s : gamma.segments()) {
    json e;
    if (const auto* arc = std::get_if<ArcPiece>(&s.kind.k)) {
      e["kind"] = "arc";
      e["u"] = vec_json(arc->u);
      e["v"] = vec_json(arc->w);
      e["angles"] = {arc->a, arc->b};
    } else if (const auto* cir = std::get_if<CirclePiece>(&s.kind.k)) {
      e["kind"] = "circle";
      e["center"] = vec_json(cir->center);
      e["e1"] = vec_json(cir->e1);
      e["e2"] = vec_json(cir->e2);
      e["radius"] = cir->r;
      e["angles"] = {cir->a, cir->b};
    } else {
      throw Error(ErrorKind::InvariantViolation,
                  "only geodesic and circle segments serialize to JSON");
    }
    e["weight"] = s.weight;
    e["reversed"] = s.reversed;
    segs.push_back(std::move(e));
  }
  json j;
  j["closed"] = gamma.closed();
  j["segments"] = std::move(segs);
  return j;
}

inline Curve curve_from_json(const json& j) {
  auto vec_from = [](const json& a) {
    Vec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
    return v;
  };
  try {
    std::vector<Segment> segs;
    NodeId prev = next_node_id();
    NodeId first = prev;
    const auto& arr = j.at("segments");
    for (size_t i = 0; i < arr.size(); ++i) {
      const auto& e = arr[i];
      Segment s;
      std::string kind = e.at("kind").get<std::string>();
      if (kind == "arc") {
        s.kind = SegmentKind{ArcPiece{vec_from(e.at("u")), vec_from(e.at("v")),
                                      e.at("angles")[0].get<double>(),
                                      e.at("angles")[1].get<double>()}};
      } else if (kind == "circle") {
        s.kind = SegmentKind{CirclePiece{vec_from(e.at("center")), vec_from(e.at("e1")),
                                         vec_from(e.at("e2")), e.at("radius").get<double>(),
                                         e.at("angles")[0].get<double>(),
                                         e.at("angles")[1].get<double>()}};
      } else {
        throw Error(ErrorKind::ParseError, "unknown segment kind '" + kind + "'");
      }
      s.weight = e.at("weight").get<double>();
      s.reversed = e.value("reversed", false);
      bool last = (i + 1 == arr.size());
      if (s.reversed) {
        s.end_node = prev;
        s.start_node = last ? first : next_node_id();
        prev = s.start_node;
      } else {
        s.start_node = prev;
        s.end_node = last ? first : next_node_id();
        prev = s.end_node;
      }
      segs.push_back(std::move(s));
    }
    bool closed = j.at("closed").get<bool>();
    return Curve(std::move(segs), closed);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline json hybrid_to_json(const HybridDesign& h) {
  json j;
  j["dimension"] = h.curve.dim() - 1;
  j["strength"] = h.claimed_strength;
  j["rho"] = h.rho;
  json pts = json::array();
  for (const auto& p : h.points) {
    json row = json::array();
    for (int i = 0; i < p.dim(); ++i) row.push_back(p[i]);
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  j["curve"] = curve_to_json(h.curve);
  return j;
}

inline HybridDesign hybrid_from_json(const json& j) {
  try {
    HybridDesign h;
    h.claimed_strength = j.at("strength").get<int>();
    h.rho = j.at("rho").get<double>();
    for (const auto& row : j.at("points")) {
      Vec v(row.size());
      for (size_t i = 0; i < row.size(); ++i) v[static_cast<Eigen::Index>(i)] = row[i].get<double>();
      h.points.emplace_back(v);
    }
    h.curve = curve_from_json(j.at("curve"));
    h.validate();
    return h;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

// ---------------------------------------------------------------------------
// CSV sample export: header "s,x1,...,xD", 17 significant digits.
// ---------------------------------------------------------------------------

inline void export_samples(const Curve& gamma, int n_samples, bool by_arclength,
                           std::ostream& out) {
  if (n_samples < 2) throw Error(ErrorKind::InvariantViolation, "need at least 2 samples");
  int D = gamma.dim();
  out << "s";
  for (int i = 1; i <= D; ++i) out << ",x" << i;
  out << "\n";
  std::vector<double> params(n_samples);
  if (!by_arclength) {
    for (int i = 0; i < n_samples; ++i) params[i] = static_cast<double>(i) / (n_samples - 1);
  } else {
    // chord-length table inversion (plot-grade approximation)
    const int M = 16384;
    std::vector<double> cum(M + 1, 0.0);
    Vec prev = gamma.eval(0.0);
    for (int i = 1; i <= M; ++i) {
      Vec cur = gamma.eval(static_cast<double>(i) / M);
      cum[i] = cum[i - 1] + (cur - prev).norm();
      prev = cur;
    }
    for (int i = 0; i < n_samples; ++i) {
      double target = cum[M] * i / (n_samples - 1);
      auto it = std::lower_bound(cum.begin(), cum.end(), target);
      size_t hi = std::min<size_t>(it - cum.begin(), M);
      if (hi == 0) {
        params[i] = 0.0;
      } else {
        double frac = (target - cum[hi - 1]) / std::max(1e-300, cum[hi] - cum[hi - 1]);
        params[i] = (static_cast<double>(hi - 1) + frac) / M;
      }
    }
  }
  out << std::setprecision(17);
  for (double s : params) {
    Vec p = gamma.eval(s);
    out << s;
    for (int i = 0; i < D; ++i) out << "," << p[i];
    out << "\n";
  }
}

}  // namespace design_curves
