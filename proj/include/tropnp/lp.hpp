#pragma once

/**
 * @file lp.hpp
 * @brief Exact rational linear programming and polyhedra.
 *
 * lp_solve is a dense two-phase tableau simplex with Bland's anti-cycling
 * rule. Free variables are split as x = p - q. Strict inequalities are only
 * accepted by relative_interior_feasible, which maximizes a slack t bounded
 * by every strict constraint (and by 1); the system is strictly feasible iff
 * the optimum is positive.
 */

#include "tropnp/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tnp {

enum class Relation { GreaterEq, Equal, Greater };

/// func ≥ 0, func = 0 or func > 0
struct LinConstraint {
  AffineFunc func;
  Relation relation = Relation::GreaterEq;

  bool holds(const Point& p) const {
    int s = func.eval(p).sign();
    switch (relation) {
      case Relation::GreaterEq: return s >= 0;
      case Relation::Equal: return s == 0;
      case Relation::Greater: return s > 0;
    }
    return false;
  }
};

inline LinConstraint geq0(AffineFunc f) { return {std::move(f), Relation::GreaterEq}; }
inline LinConstraint eq0(AffineFunc f) { return {std::move(f), Relation::Equal}; }
inline LinConstraint gt0(AffineFunc f) { return {std::move(f), Relation::Greater}; }

struct Polyhedron {
  std::size_t dim_ambient = 0;
  std::vector<LinConstraint> constraints;

  bool contains(const Point& p) const {
    check_dim(dim_ambient, p.size(), "Polyhedron::contains");
    for (const auto& c : constraints)
      if (!c.holds(p)) return false;
    return true;
  }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };
enum class Sense { Minimize, Maximize };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Rational> value;
  std::optional<Point> witness;
};

namespace detail {

class Tableau {
public:
  // rows: A z = b (b ≥ 0 after normalisation), z ≥ 0. A row whose column in
  // [first_slack, ncols) has coefficient +1 after normalisation starts with
  // that column basic; the others get an artificial column.
  Tableau(std::size_t ncols, std::size_t first_slack, std::vector<std::vector<Rational>> a, std::vector<Rational> b)
      : m_(a.size()), n_(ncols) {
    for (std::size_t i = 0; i < m_; ++i)
      if (b[i].sign() < 0) {
        for (auto& v : a[i]) v = -v;
        b[i] = -b[i];
      }
    basis_.assign(m_, 0);
    std::vector<bool> needs_art(m_, true);
    std::size_t arts = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = first_slack; j < n_; ++j)
        if (a[i][j] == Rational(1)) {
          basis_[i] = j;
          needs_art[i] = false;
          break;
        }
      arts += needs_art[i];
    }
    // columns: n_ structural, arts artificial, then rhs
    width_ = n_ + arts + 1;
    t_.assign(m_ + 1, std::vector<Rational>(width_));
    std::size_t k = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = a[i][j];
      t_[i][width_ - 1] = b[i];
      if (needs_art[i]) {
        t_[i][k] = 1;
        basis_[i] = k++;
      }
    }
    active_.assign(m_, true);
  }

  /// Phase 1; false when infeasible.
  bool find_feasible() {
    auto& z = t_[m_];
    std::fill(z.begin(), z.end(), Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) z[j] -= t_[i][j];
      z[width_ - 1] -= t_[i][width_ - 1];
    }
    run(width_ - 1);
    if (z[width_ - 1].sign() != 0) return false;
    // drive artificials out of the basis; rows without a structural pivot are redundant
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (t_[i][j].sign() != 0) {
          col = j;
          break;
        }
      if (col == n_)
        active_[i] = false;
      else
        pivot(i, col);
    }
    return true;
  }

  /// Phase 2: minimise cost·z; false when unbounded.
  bool minimize(const std::vector<Rational>& cost) {
    auto& z = t_[m_];
    std::fill(z.begin(), z.end(), Rational(0));
    for (std::size_t j = 0; j < n_; ++j) z[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = cost[basis_[i]];
      if (cb.sign() == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (t_[i][j].sign() != 0) z[j] -= cb * t_[i][j];
    }
    return run(n_);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> z(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] < n_) z[basis_[i]] = t_[i][width_ - 1];
    return z;
  }

private:
  // Bland's rule over the first `ncols` columns; returns false when unbounded.
  bool run(std::size_t ncols) {
    auto& z = t_[m_];
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (z[j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter == ncols) return true;
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || t_[i][enter].sign() <= 0) continue;
        Rational ratio = t_[i][width_ - 1] / t_[i][enter];
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / t_[r][c];
    for (auto& v : t_[r])
      if (v.sign() != 0) v *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c].sign() == 0) continue;
      if (i < m_ && !active_[i]) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < width_; ++j)
        if (t_[r][j].sign() != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_, n_, width_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace detail

/// Optimises an affine objective over non-strict constraints in R^dim.
/// `start` may be any point; constraints it satisfies need no phase-1 work.
inline LpResult lp_solve(std::size_t dim, const std::vector<LinConstraint>& constraints, const AffineFunc& objective,
                         Sense sense, const std::optional<Point>& start = std::nullopt) {
  check_dim(dim, objective.dim(), "lp_solve objective");
  if (start) check_dim(dim, start->size(), "lp_solve start");
  std::size_t slacks = 0;
  for (const auto& c : constraints) {
    check_dim(dim, c.func.dim(), "lp_solve constraint");
    if (c.relation == Relation::Greater) throw std::invalid_argument("lp_solve: strict constraint (use relative_interior_feasible)");
    if (c.relation == Relation::GreaterEq) ++slacks;
  }
  const std::size_t ncols = 2 * dim + slacks;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(constraints.size());
  std::size_t s = 0;
  for (const auto& c : constraints) {
    // g·x + c0 (≥|=) 0 at x = start + x'
    const Rational c0 = start ? c.func.eval(*start) : c.func.constant;
    const bool flip = c.relation == Relation::GreaterEq && c0.sign() >= 0;
    const Rational sg = flip ? Rational(-1) : Rational(1);
    std::vector<Rational> row(ncols);
    for (std::size_t j = 0; j < dim; ++j) {
      row[j] = sg * c.func.gradient[j];
      row[dim + j] = -row[j];
    }
    if (c.relation == Relation::GreaterEq) row[2 * dim + s++] = -sg;
    a.push_back(std::move(row));
    b.push_back(-sg * c0);
  }

  LpResult res;
  detail::Tableau tab(ncols, 2 * dim, std::move(a), std::move(b));
  if (!tab.find_feasible()) return res;

  std::vector<Rational> cost(ncols);
  const Rational sgn = sense == Sense::Minimize ? Rational(1) : Rational(-1);
  for (std::size_t j = 0; j < dim; ++j) {
    cost[j] = sgn * objective.gradient[j];
    cost[dim + j] = -cost[j];
  }
  if (!tab.minimize(cost)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  auto z = tab.solution();
  Point x(dim);
  for (std::size_t j = 0; j < dim; ++j) x[j] = z[j] - z[dim + j] + (start ? (*start)[j] : Rational(0));
  res.status = LpStatus::Optimal;
  res.value = objective.eval(x);
  res.witness = std::move(x);
  return res;
}

struct Feasibility {
  bool feasible = false;
  std::optional<Point> witness;
};

/// Decides whether some point satisfies every constraint, strict ones strictly.
/// `start` is an optional hint as for lp_solve.
inline Feasibility relative_interior_feasible(std::size_t dim, const std::vector<LinConstraint>& constraints,
                                              const std::optional<Point>& start = std::nullopt) {
  bool strict = false;
  for (const auto& c : constraints) {
    check_dim(dim, c.func.dim(), "relative_interior_feasible");
    strict = strict || c.relation == Relation::Greater;
  }
  if (!strict) {
    auto r = lp_solve(dim, constraints, AffineFunc::zero(dim), Sense::Minimize, start);
    if (r.status == LpStatus::Infeasible) return {};
    return {true, r.witness};
  }
  std::vector<LinConstraint> lifted;
  lifted.reserve(constraints.size() + 1);
  for (const auto& c : constraints) {
    AffineFunc f = c.func;
    f.gradient.emplace_back(0);
    if (c.relation == Relation::Greater) {
      f.gradient.back() = -1;
      lifted.push_back(geq0(std::move(f)));
    } else {
      lifted.push_back({std::move(f), c.relation});
    }
  }
  std::vector<Rational> cap(dim + 1);
  cap.back() = -1;
  lifted.push_back(geq0(AffineFunc(1, cap)));
  std::vector<Rational> obj(dim + 1);
  obj.back() = 1;
  std::optional<Point> lifted_start;
  if (start) {
    lifted_start = *start;
    lifted_start->emplace_back(0);
  }
  auto r = lp_solve(dim + 1, lifted, AffineFunc(0, obj), Sense::Maximize, lifted_start);
  if (r.status != LpStatus::Optimal || r.value->sign() <= 0) return {};
  Point x(r.witness->begin(), r.witness->end() - 1);
  return {true, std::move(x)};
}

inline Feasibility relative_interior_feasible(const Polyhedron& p) {
  return relative_interior_feasible(p.dim_ambient, p.constraints);
}

// ---------------------------------------------------------------------------
// Exact linear algebra on gradient rows.

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].sign() == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].sign() == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::size_t rank(std::vector<std::vector<Rational>> rows, std::size_t ncols) {
  return rref(rows, ncols).size();
}

/// Basis of {v : row·v = 0 for every row}.
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t ncols) {
  auto pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// True iff g lies in the span of rows.
inline bool in_span(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& g, std::size_t ncols) {
  auto with = rows;
  with.push_back(g);
  return rank(with, ncols) == rank(rows, ncols);
}

/// Affine-hull dimension of P, or -1 when P is empty.
///
/// Inequalities that cannot be made strict simultaneously are detected by
/// LP and promoted to equalities; what remains can all be strict at once,
/// so the dimension is n minus the rank of the equality gradients.
inline int polyhedron_dim(const Polyhedron& p) {
  const std::size_t n = p.dim_ambient;
  std::vector<LinConstraint> closed;
  std::vector<std::vector<Rational>> eq_rows;
  std::vector<std::size_t> ineq;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    check_dim(n, c.func.dim(), "polyhedron_dim");
    closed.push_back({c.func, c.relation == Relation::Equal ? Relation::Equal : Relation::GreaterEq});
    if (c.relation == Relation::Equal)
      eq_rows.push_back(c.func.gradient);
    else
      ineq.push_back(i);
  }
  auto base = lp_solve(n, closed, AffineFunc::zero(n), Sense::Minimize);
  if (base.status == LpStatus::Infeasible) return -1;

  std::vector<LinConstraint> all_strict = closed;
  for (auto i : ineq) all_strict[i].relation = Relation::Greater;
  if (!relative_interior_feasible(n, all_strict).feasible) {
    for (auto i : ineq) {
      auto r = lp_solve(n, closed, p.constraints[i].func, Sense::Maximize);
      bool can_be_positive = r.status == LpStatus::Unbounded || (r.status == LpStatus::Optimal && r.value->sign() > 0);
      if (can_be_positive) continue;
      if (p.constraints[i].relation == Relation::Greater) return -1;
      eq_rows.push_back(p.constraints[i].func.gradient);
    }
  }
  if (std::any_of(p.constraints.begin(), p.constraints.end(),
                  [](const LinConstraint& c) { return c.relation == Relation::Greater; }) &&
      !relative_interior_feasible(p).feasible)
    return -1;
  return static_cast<int>(n) - static_cast<int>(rank(eq_rows, n));
}

}  // namespace tnp
