#pragma once

/**
 * @file curve.hpp
 * @brief Resolving tropical curves in (x, y_1, ..., y_{n-1}) by paths in
 *        the directed graph of their non-vertical edges.
 *
 * An arc e- -> e+ joins two edges meeting at a point with x- < x < x+ when
 * every coordinate slope dy_j/dx does not increase across the joint. Paths
 * from left-unbounded to right-unbounded edges are exactly the resolutions
 * by (min-convex) Newton-Puiseux polynomials. Dropping the slope condition
 * gives resolutions by differences of such polynomials, obtained through a
 * univariate DC decomposition.
 */

#include "tropnp/resolver.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tnp {

/// Continuous univariate piecewise-linear function.
///
/// `anchor` is the value at the first breakpoint, or at x = 0 when there
/// are no breakpoints.
struct PL1D {
  std::vector<Rational> breakpoints;  // strictly increasing
  std::vector<Rational> slopes;       // breakpoints.size() + 1
  Rational anchor;

  PL1D() : slopes{Rational(0)} {}
  PL1D(std::vector<Rational> bp, std::vector<Rational> sl, Rational a)
      : breakpoints(std::move(bp)), slopes(std::move(sl)), anchor(std::move(a)) {
    if (slopes.size() != breakpoints.size() + 1)
      throw std::invalid_argument("PL1D: need exactly one more slope than breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i - 1] < breakpoints[i])) throw std::invalid_argument("PL1D: breakpoints must increase");
  }

  static PL1D affine(Rational value_at_0, Rational slope) { return PL1D({}, {std::move(slope)}, std::move(value_at_0)); }

  Rational origin() const { return breakpoints.empty() ? Rational(0) : breakpoints.front(); }

  /// Values at every breakpoint.
  std::vector<Rational> knot_values() const {
    std::vector<Rational> v;
    v.reserve(breakpoints.size());
    for (std::size_t i = 0; i < breakpoints.size(); ++i)
      v.push_back(i == 0 ? anchor : v.back() + slopes[i] * (breakpoints[i] - breakpoints[i - 1]));
    return v;
  }

  Rational eval(const Rational& x) const {
    if (breakpoints.empty()) return anchor + slopes[0] * x;
    if (x <= breakpoints.front()) return anchor + slopes[0] * (x - breakpoints.front());
    Rational v = anchor;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
      if (x <= breakpoints[i]) return v + slopes[i] * (x - breakpoints[i - 1]);
      v += slopes[i] * (breakpoints[i] - breakpoints[i - 1]);
    }
    return v + slopes.back() * (x - breakpoints.back());
  }

  bool is_min_convex() const {
    for (std::size_t i = 1; i < slopes.size(); ++i)
      if (slopes[i] > slopes[i - 1]) return false;
    return true;
  }

  /// Same function without breakpoints between equal slopes.
  PL1D simplified() const {
    const auto values = knot_values();
    std::vector<Rational> bp, sl{slopes[0]};
    std::optional<Rational> first_value;
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
      if (slopes[i + 1] == sl.back()) continue;
      bp.push_back(breakpoints[i]);
      sl.push_back(slopes[i + 1]);
      if (!first_value) first_value = values[i];
    }
    if (bp.empty()) return affine(eval(Rational(0)), sl[0]);
    return PL1D(std::move(bp), std::move(sl), *first_value);
  }

  friend bool operator==(const PL1D&, const PL1D&) = default;
};

/// f = g - h with g, h min-convex; h(origin) = 0. A min-convex f is returned
/// as (f, 0). Otherwise slope drops go to g, slope rises (negated) to h, and
/// a negative initial slope is carried by h.
inline std::pair<PL1D, PL1D> dc_decompose(const PL1D& f) {
  if (f.is_min_convex()) return {f, PL1D::affine(0, 0)};
  const std::size_t k = f.slopes.size();
  std::vector<Rational> gs(k), hs(k);
  gs[0] = std::max(f.slopes[0], Rational(0));
  hs[0] = gs[0] - f.slopes[0];
  for (std::size_t i = 1; i < k; ++i) {
    const Rational delta = f.slopes[i] - f.slopes[i - 1];
    gs[i] = gs[i - 1] + std::min(delta, Rational(0));
    hs[i] = hs[i - 1] - std::max(delta, Rational(0));
  }
  PL1D g(f.breakpoints, std::move(gs), f.anchor);
  PL1D h(f.breakpoints, std::move(hs), Rational(0));
  return {g.simplified(), h.simplified()};
}

/// One monomial per affine piece: exponent = slope, coefficient = intercept.
inline NPPoly pl_to_np(const PL1D& f) {
  if (!f.is_min_convex()) throw std::domain_error("pl_to_np: slopes must be non-increasing");
  if (f.breakpoints.empty()) return NPPoly(1, {Monomial{f.anchor, {f.slopes[0]}}});
  const auto values = f.knot_values();
  std::vector<Monomial> ms;
  ms.push_back({values[0] - f.slopes[0] * f.breakpoints[0], {f.slopes[0]}});
  for (std::size_t i = 0; i < f.breakpoints.size(); ++i)
    ms.push_back({values[i] - f.slopes[i + 1] * f.breakpoints[i], {f.slopes[i + 1]}});
  return NPPoly(1, std::move(ms));
}

// ---------------------------------------------------------------------------

struct CurveEdge {
  std::size_t skeleton_edge = 0;
  bool vertical = false;
  bool left_unbounded = false;
  bool right_unbounded = false;
  bool full_line = false;
  std::optional<Point> left;   // endpoint with smaller x
  std::optional<Point> right;  // endpoint with larger x
  Point sample;                // any point of the edge
  std::vector<Rational> slopes;  // dy_j/dx, j = 1..n-1 (non-vertical only)
};

struct CurveModel {
  std::size_t dim = 0;  // ambient n; coordinate 0 is x
  std::vector<NPPoly> system;
  Skeleton skeleton;
  std::vector<CurveEdge> edges;
};

/// Throws NotACurve when T has a cell of dimension above one.
inline CurveModel build_curve(const Prevariety& pv) {
  CurveModel c;
  c.dim = pv.dim;
  c.system = pv.system;
  if (c.dim < 2) throw std::invalid_argument("build_curve: need variables (x, y_1, ...)");
  c.skeleton = extract_skeleton(pv);
  for (std::size_t k = 0; k < c.skeleton.edges.size(); ++k) {
    const auto& se = c.skeleton.edges[k];
    CurveEdge e;
    e.skeleton_edge = k;
    e.sample = se.base;
    Point d = se.direction;
    e.vertical = d[0].sign() == 0;
    if (!e.vertical) {
      for (std::size_t j = 1; j < c.dim; ++j) e.slopes.push_back(d[j] / d[0]);
      switch (se.kind) {
        case SkeletonEdge::Kind::Segment: {
          Point a = se.base, b = se.end();
          if (b[0] < a[0]) std::swap(a, b);
          e.left = std::move(a);
          e.right = std::move(b);
          break;
        }
        case SkeletonEdge::Kind::Ray:
          if (d[0].sign() < 0) {
            e.left_unbounded = true;
            e.right = se.base;
          } else {
            e.right_unbounded = true;
            e.left = se.base;
          }
          break;
        case SkeletonEdge::Kind::Line:
          e.full_line = e.left_unbounded = e.right_unbounded = true;
          break;
      }
    }
    c.edges.push_back(std::move(e));
  }
  return c;
}

struct ResolutionGraph {
  std::vector<std::size_t> nodes;              // curve edge indices (non-vertical)
  std::vector<std::vector<std::size_t>> arcs;  // by node position, sorted, unique
  std::vector<std::size_t> sources;            // node positions, left-unbounded
  std::vector<bool> sink;                      // right-unbounded
};

/// With require_convex = false the slope condition is dropped (any monotone
/// joint is allowed), which is the graph used for rational resolutions.
inline ResolutionGraph build_resolution_graph(const CurveModel& c, bool require_convex = true) {
  ResolutionGraph g;
  for (std::size_t k = 0; k < c.edges.size(); ++k)
    if (!c.edges[k].vertical) g.nodes.push_back(k);
  g.arcs.resize(g.nodes.size());
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    const auto& em = c.edges[g.nodes[u]];
    if (em.left_unbounded) g.sources.push_back(u);
    g.sink.push_back(em.right_unbounded);
    if (!em.right) continue;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      const auto& ep = c.edges[g.nodes[v]];
      if (!ep.left || *ep.left != *em.right) continue;
      bool ok = true;
      if (require_convex)
        for (std::size_t j = 0; j < em.slopes.size() && ok; ++j) ok = em.slopes[j] >= ep.slopes[j];
      if (ok) g.arcs[u].push_back(v);
    }
    std::sort(g.arcs[u].begin(), g.arcs[u].end());
    g.arcs[u].erase(std::unique(g.arcs[u].begin(), g.arcs[u].end()), g.arcs[u].end());
  }
  return g;
}

/// Source-to-sink paths (as node positions) in lexicographic order, at most `limit`.
inline std::vector<std::vector<std::size_t>> resolution_paths(const ResolutionGraph& g, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::function<void(std::size_t)> dfs = [&](std::size_t u) {
    if (out.size() >= limit) return;
    path.push_back(u);
    if (g.sink[u]) out.push_back(path);
    for (auto v : g.arcs[u]) dfs(v);
    path.pop_back();
  };
  for (auto s : g.sources) dfs(s);
  return out;
}

/// The coordinate functions y_j(x) traced by a path of curve edges.
inline std::vector<PL1D> path_functions(const CurveModel& c, const std::vector<std::size_t>& edge_path) {
  std::vector<PL1D> ys;
  for (std::size_t j = 1; j < c.dim; ++j) {
    std::vector<Rational> bp, sl;
    Rational anchor;
    for (std::size_t k = 0; k < edge_path.size(); ++k) {
      const auto& e = c.edges[edge_path[k]];
      sl.push_back(e.slopes[j - 1]);
      if (k + 1 < edge_path.size()) {
        if (bp.empty()) anchor = (*e.right)[j];
        bp.push_back((*e.right)[0]);
      }
    }
    if (bp.empty()) {
      const auto& e = c.edges[edge_path.front()];
      anchor = e.sample[j] - e.sample[0] * sl[0];
    }
    ys.push_back(PL1D(std::move(bp), std::move(sl), std::move(anchor)).simplified());
  }
  return ys;
}

inline std::vector<std::size_t> to_edges(const ResolutionGraph& g, const std::vector<std::size_t>& path) {
  std::vector<std::size_t> e;
  for (auto u : path) e.push_back(g.nodes[u]);
  return e;
}

/// A resolution (one min-convex y_j per coordinate), if any. A full line
/// wins outright; otherwise the lexicographically first path is used.
inline std::optional<std::vector<PL1D>> resolve_curve(const CurveModel& c) {
  for (std::size_t k = 0; k < c.edges.size(); ++k)
    if (c.edges[k].full_line) return path_functions(c, {k});
  auto g = build_resolution_graph(c);
  auto paths = resolution_paths(g, 1);
  if (paths.empty()) return std::nullopt;
  return path_functions(c, to_edges(g, paths.front()));
}

inline std::vector<std::vector<PL1D>> enumerate_resolutions(const CurveModel& c, std::size_t limit) {
  auto g = build_resolution_graph(c);
  std::vector<std::vector<PL1D>> out;
  for (const auto& p : resolution_paths(g, limit)) out.push_back(path_functions(c, to_edges(g, p)));
  return out;
}

inline std::optional<std::vector<RationalPL>> resolve_curve_rational(const CurveModel& c) {
  auto g = build_resolution_graph(c, false);
  auto paths = resolution_paths(g, 1);
  if (paths.empty()) return std::nullopt;
  std::vector<RationalPL> out;
  for (const auto& y : path_functions(c, to_edges(g, paths.front()))) {
    auto [pos, neg] = dc_decompose(y);
    out.emplace_back(pl_to_np(pos), pl_to_np(neg));
  }
  return out;
}

inline std::vector<NPPoly> to_np(const std::vector<PL1D>& ys) {
  std::vector<NPPoly> out;
  for (const auto& y : ys) out.push_back(pl_to_np(y));
  return out;
}

/// Re-checks a curve resolution against every polynomial of the system.
inline Verdict verify_curve_resolution(const CurveModel& c, const std::vector<PL1D>& ys) {
  return verify_system(c.system, 1, to_np(ys));
}

}  // namespace tnp
