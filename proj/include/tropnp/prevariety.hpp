#pragma once

/**
 * @file prevariety.hpp
 * @brief Tropical prevarieties as labelled unions of sign-partition cells,
 *        functional reduction of polynomials, and 1-skeleton extraction.
 */

#include "tropnp/arrangement.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tnp {

/// Index of the difference m_a - m_b (a < b) of polynomial `poly`.
struct Difference {
  std::size_t poly;
  std::size_t a;
  std::size_t b;
};

struct Prevariety {
  std::size_t dim = 0;
  std::vector<NPPoly> system;
  std::vector<Difference> differences;
  std::vector<Cell> cells;
  /// labels[c][k] = argmin monomials of system[k] on cell c
  std::vector<std::vector<std::vector<std::size_t>>> labels;
  std::vector<bool> in_T;

  std::vector<std::size_t> t_cells() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (in_T[c]) out.push_back(c);
    return out;
  }

  /// Dimension of T, -1 when T is empty.
  int dimension() const {
    int d = -1;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (in_T[c]) d = std::max(d, cells[c].dim);
    return d;
  }
};

inline Prevariety prevariety(const std::vector<NPPoly>& system) {
  if (system.empty()) throw std::invalid_argument("prevariety: empty system");
  Prevariety pv;
  pv.dim = system.front().arity();
  pv.system = system;
  std::vector<AffineFunc> funcs;
  for (std::size_t k = 0; k < system.size(); ++k) {
    check_dim(pv.dim, system[k].arity(), "prevariety");
    const auto& ms = system[k].monomials();
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a + 1; b < ms.size(); ++b) {
        pv.differences.push_back({k, a, b});
        funcs.push_back(ms[a].affine() - ms[b].affine());
      }
  }
  pv.cells = sign_partition(pv.dim, funcs);

  // sign of m_a - m_b per (poly, a, b)
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> where(system.size());
  for (std::size_t i = 0; i < pv.differences.size(); ++i) {
    const auto& d = pv.differences[i];
    where[d.poly][{d.a, d.b}] = i;
  }
  for (const auto& cell : pv.cells) {
    std::vector<std::vector<std::size_t>> lab(system.size());
    bool all_roots = true;
    for (std::size_t k = 0; k < system.size(); ++k) {
      const std::size_t m = system[k].size();
      for (std::size_t j = 0; j < m; ++j) {
        bool minimal = true;
        for (std::size_t o = 0; o < m && minimal; ++o) {
          if (o == j) continue;
          int s = j < o ? cell.signs[where[k].at({j, o})] : -cell.signs[where[k].at({o, j})];
          minimal = s <= 0;
        }
        if (minimal) lab[k].push_back(j);
      }
      all_roots = all_roots && lab[k].size() >= 2;
    }
    pv.labels.push_back(std::move(lab));
    pv.in_T.push_back(all_roots);
  }
  return pv;
}

/// Monomials that are strictly below all others somewhere.
inline std::vector<std::size_t> essential_monomials(const NPPoly& p) {
  const auto& ms = p.monomials();
  if (ms.size() == 1) return {0};
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < ms.size(); ++j) {
    std::vector<LinConstraint> cons;
    for (std::size_t k = 0; k < ms.size(); ++k)
      if (k != j) cons.push_back(gt0(ms[k].affine() - ms[j].affine()));
    if (relative_interior_feasible(p.arity(), cons).feasible) keep.push_back(j);
  }
  return keep;
}

/// p with its non-essential monomials removed (same function).
inline NPPoly reduce(const NPPoly& p) {
  std::vector<Monomial> ms;
  for (auto j : essential_monomials(p)) ms.push_back(p[j]);
  return NPPoly(p.arity(), std::move(ms));
}

/// Equality as functions.
inline bool poly_equal(const NPPoly& p, const NPPoly& q) {
  check_dim(p.arity(), q.arity(), "poly_equal");
  return reduce(p) == reduce(q);
}

// ---------------------------------------------------------------------------

struct SkeletonEdge {
  enum class Kind { Segment, Ray, Line };
  Kind kind = Kind::Segment;
  /// Segment: from base to base + direction. Ray: base + s·direction, s ≥ 0.
  /// Line: base + s·direction for all s.
  Point base;
  Point direction;
  std::optional<std::size_t> start_vertex;
  std::optional<std::size_t> end_vertex;
  std::size_t cell = 0;

  Point end() const {
    Point e = base;
    for (std::size_t j = 0; j < e.size(); ++j) e[j] += direction[j];
    return e;
  }
};

struct Skeleton {
  std::vector<Point> vertices;
  std::vector<std::size_t> vertex_cells;
  std::vector<SkeletonEdge> edges;
};

struct NotACurve : std::runtime_error {
  Cell cell;
  explicit NotACurve(Cell c)
      : std::runtime_error("prevariety has a cell of dimension " + std::to_string(c.dim) + " (not a curve)"),
        cell(std::move(c)) {}
};

namespace detail {

inline void normalize_direction(Point& d) {
  for (const auto& v : d)
    if (v.sign() != 0) {
      const Rational s = abs(v);
      for (auto& w : d) w /= s;
      return;
    }
}

}  // namespace detail

/// Vertices are the 0-cells of T, edges its 1-cells (segment, ray or line).
inline Skeleton extract_skeleton(const Prevariety& pv) {
  Skeleton sk;
  std::map<Point, std::size_t> vertex_index;
  for (std::size_t c = 0; c < pv.cells.size(); ++c) {
    if (!pv.in_T[c]) continue;
    if (pv.cells[c].dim > 1) throw NotACurve(pv.cells[c]);
    if (pv.cells[c].dim == 0) {
      vertex_index.emplace(pv.cells[c].witness, sk.vertices.size());
      sk.vertices.push_back(pv.cells[c].witness);
      sk.vertex_cells.push_back(c);
    }
  }
  auto vertex_of = [&](const Point& p) -> std::size_t {
    auto [it, fresh] = vertex_index.emplace(p, sk.vertices.size());
    if (fresh) {
      sk.vertices.push_back(p);
      sk.vertex_cells.push_back(pv.cells.size());
    }
    return it->second;
  };

  const std::size_t n = pv.dim;
  for (std::size_t c = 0; c < pv.cells.size(); ++c) {
    const Cell& cell = pv.cells[c];
    if (!pv.in_T[c] || cell.dim != 1) continue;
    std::vector<std::vector<Rational>> eq_rows;
    for (const auto& con : cell.region.constraints)
      if (con.relation == Relation::Equal) eq_rows.push_back(con.func.gradient);
    auto ns = nullspace(eq_rows, n);
    Point d = ns.at(0);
    detail::normalize_direction(d);

    // extent of {witness + s·d} inside the strict constraints
    std::optional<Rational> lo, hi;
    for (const auto& con : cell.region.constraints) {
      if (con.relation != Relation::Greater) continue;
      Rational at = con.func.eval(cell.witness);
      Rational slope = 0;
      for (std::size_t j = 0; j < n; ++j) slope += con.func.gradient[j] * d[j];
      if (slope.sign() == 0) continue;
      Rational s = -at / slope;
      if (slope.sign() > 0) {
        if (!lo || s > *lo) lo = s;
      } else {
        if (!hi || s < *hi) hi = s;
      }
    }
    auto at_param = [&](const Rational& s) {
      Point q = cell.witness;
      for (std::size_t j = 0; j < n; ++j) q[j] += s * d[j];
      return q;
    };
    SkeletonEdge e;
    e.cell = c;
    if (lo && hi) {
      e.kind = SkeletonEdge::Kind::Segment;
      e.base = at_param(*lo);
      Point b = at_param(*hi);
      e.direction = Point(n);
      for (std::size_t j = 0; j < n; ++j) e.direction[j] = b[j] - e.base[j];
      e.start_vertex = vertex_of(e.base);
      e.end_vertex = vertex_of(b);
    } else if (lo || hi) {
      e.kind = SkeletonEdge::Kind::Ray;
      e.base = at_param(lo ? *lo : *hi);
      e.direction = d;
      if (!lo)
        for (auto& v : e.direction) v = -v;
      e.start_vertex = vertex_of(e.base);
    } else {
      e.kind = SkeletonEdge::Kind::Line;
      e.base = cell.witness;
      e.direction = d;
    }
    sk.edges.push_back(std::move(e));
  }
  return sk;
}

}  // namespace tnp
