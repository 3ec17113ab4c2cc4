#pragma once

/**
 * @file arrangement.hpp
 * @brief Partition of R^n by the sign vectors of a list of affine functions.
 *
 * The partition is built by recursion on the functions: every current cell
 * is split by the next function into the sign classes that are feasible on
 * it. Each cell is relatively open and carries a witness point from its
 * relative interior; the witness often settles a sign class without an LP.
 */

#include "tropnp/lp.hpp"

#include <vector>

namespace tnp {

struct Cell {
  std::vector<int> signs;  // one of -1, 0, +1 per function
  Polyhedron region;
  Point witness;
  int dim = 0;
};

inline LinConstraint sign_constraint(const AffineFunc& f, int sign) {
  if (sign > 0) return gt0(f);
  if (sign < 0) return gt0(-f);
  return eq0(f);
}

namespace detail {

// Point on the far side of `pivot` as seen from `from`, still strictly inside
// every strict constraint of the region (pivot is a relative interior point).
inline Point step_beyond(const std::vector<LinConstraint>& region, const Point& pivot, const Point& from) {
  Rational lambda = 1;
  for (const auto& c : region) {
    if (c.relation != Relation::Greater) continue;
    Rational at_pivot = c.func.eval(pivot);
    Rational drop = c.func.eval(from) - at_pivot;  // value decreases by lambda·drop
    if (drop.sign() > 0) {
      Rational bound = at_pivot / drop / Rational(2);
      if (bound < lambda) lambda = bound;
    }
  }
  Point q(pivot.size());
  for (std::size_t j = 0; j < q.size(); ++j) q[j] = pivot[j] + lambda * (pivot[j] - from[j]);
  return q;
}

struct PartialCell {
  std::vector<int> signs;
  std::vector<LinConstraint> constraints;
  std::vector<std::vector<Rational>> eq_rows;
  Point witness;
};

}  // namespace detail

/// Every point of R^dim lies in exactly one returned cell. Cells are listed
/// in lexicographic order of their sign vectors (-1 < 0 < +1).
inline std::vector<Cell> sign_partition(std::size_t dim, const std::vector<AffineFunc>& funcs) {
  for (const auto& f : funcs) check_dim(dim, f.dim(), "sign_partition");
  std::vector<detail::PartialCell> cells(1);
  cells[0].witness = Point(dim);

  for (const auto& f : funcs) {
    std::vector<detail::PartialCell> next;
    next.reserve(cells.size() * 2);
    for (auto& cell : cells) {
      const int at_witness = f.eval(cell.witness).sign();
      const bool constant_on_cell = in_span(cell.eq_rows, f.gradient, dim);
      std::optional<Point> found[3];  // indexed by sign + 1
      if (constant_on_cell) {
        found[at_witness + 1] = cell.witness;
      } else if (at_witness == 0) {
        // f spans an open interval around 0 on the cell
        found[1] = cell.witness;
        auto cons = cell.constraints;
        cons.push_back(gt0(f));
        auto pos = relative_interior_feasible(dim, cons, cell.witness);
        found[2] = *pos.witness;
        found[0] = detail::step_beyond(cell.constraints, cell.witness, *pos.witness);
      } else {
        found[at_witness + 1] = cell.witness;
        auto cons = cell.constraints;
        cons.push_back(eq0(f));
        auto zero = relative_interior_feasible(dim, cons, cell.witness);
        if (zero.feasible) {
          found[1] = *zero.witness;
          found[-at_witness + 1] = detail::step_beyond(cell.constraints, *zero.witness, cell.witness);
        }
      }
      const bool split = int(found[0].has_value()) + int(found[1].has_value()) + int(found[2].has_value()) > 1;
      for (int s = -1; s <= 1; ++s) {
        if (!found[s + 1]) continue;
        detail::PartialCell c{cell.signs, cell.constraints, cell.eq_rows, std::move(*found[s + 1])};
        c.signs.push_back(s);
        // a sign that holds on the whole cell adds nothing to its description
        if (split) c.constraints.push_back(sign_constraint(f, s));
        if (s == 0 && !constant_on_cell) c.eq_rows.push_back(f.gradient);
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }

  std::vector<Cell> out;
  out.reserve(cells.size());
  for (auto& c : cells) {
    Cell cell;
    cell.signs = std::move(c.signs);
    cell.dim = static_cast<int>(dim) - static_cast<int>(rank(c.eq_rows, dim));
    cell.region = Polyhedron{dim, std::move(c.constraints)};
    cell.witness = std::move(c.witness);
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace tnp
