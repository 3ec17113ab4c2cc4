#pragma once

/**
 * @file resolver.hpp
 * @brief Resolutions of tropical hypersurfaces: exact verification, the
 *        minimal-resolution formulas, candidate coefficients and a
 *        brute-force oracle over candidate supports.
 *
 * Verification reduces to one question: given min-of-affine functions
 * t_1, ..., t_m ("groups"), is min_k t_k(x) attained by two different groups
 * at every x? It fails iff some affine piece p of some group t_k lies
 * strictly below every piece of every other group somewhere, which is one
 * strict-feasibility LP per piece. The LP witness is a relative interior
 * point of the violating region.
 */

#include "tropnp/prevariety.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace tnp {

/// Classical difference g - h of two Newton-Puiseux polynomials.
struct RationalPL {
  NPPoly g;
  NPPoly h;

  RationalPL() = default;
  RationalPL(NPPoly g_, NPPoly h_) : g(std::move(g_)), h(std::move(h_)) {
    check_dim(g.arity(), h.arity(), "RationalPL");
  }
  static RationalPL of(const NPPoly& p) { return {p, NPPoly::constant(p.arity(), 0)}; }

  std::size_t arity() const { return g.arity(); }
  Rational eval(const Point& x) const { return g.eval(x) - h.eval(x); }
  bool h_is_unit() const { return h == NPPoly::constant(h.arity(), 0); }

  friend bool operator==(const RationalPL&, const RationalPL&) = default;
};

struct Verdict {
  bool ok = false;
  std::optional<Point> witness;
  explicit operator bool() const { return ok; }
};

/// Is min over groups attained by at least two groups at every point?
inline Verdict ties_everywhere(std::size_t dim, const std::vector<NPPoly>& groups) {
  if (groups.empty()) throw std::invalid_argument("ties_everywhere: no groups");
  for (const auto& g : groups) check_dim(dim, g.arity(), "ties_everywhere");
  for (std::size_t k = 0; k < groups.size(); ++k) {
    for (const auto& piece : groups[k].monomials()) {
      std::vector<LinConstraint> cons;
      const AffineFunc p = piece.affine();
      for (std::size_t o = 0; o < groups.size(); ++o) {
        if (o == k) continue;
        for (const auto& q : groups[o].monomials()) cons.push_back(gt0(q.affine() - p));
      }
      auto r = relative_interior_feasible(dim, cons);
      if (r.feasible) return {false, std::move(r.witness)};
    }
  }
  return {true, std::nullopt};
}

/// Pointwise version of ties_everywhere.
inline bool ties_at(const std::vector<NPPoly>& groups, const Point& x) {
  std::optional<Rational> best;
  int count = 0;
  for (const auto& g : groups) {
    Rational v = g.eval(x);
    if (!best || v < *best) {
      best = std::move(v);
      count = 1;
    } else if (v == *best) {
      ++count;
    }
  }
  return count >= 2;
}

namespace detail {

// f_i ⊗ g^{⊗i} ⊗ h^{⊗(d-i)} for every present i: the terms f_i + i·(g - h)
// shifted by the common function d·h, so ties are unchanged.
inline std::vector<NPPoly> resolution_groups(const PolyInY& f, const RationalPL& y) {
  check_dim(f.arity(), y.arity(), "resolution");
  const bool unit_h = y.h_is_unit();
  const std::size_t d = f.degree();
  std::vector<NPPoly> groups;
  for (auto i : f.present()) {
    NPPoly t = trop_mul(f.coeff(i), trop_ipow(y.g, static_cast<unsigned>(i)));
    if (!unit_h && d > i) t = trop_mul(t, trop_ipow(y.h, static_cast<unsigned>(d - i)));
    groups.push_back(t.size() > 2 ? reduce(t) : std::move(t));
  }
  return groups;
}

}  // namespace detail

inline Verdict verify_rational_resolution(const PolyInY& f, const RationalPL& y) {
  return ties_everywhere(f.arity(), detail::resolution_groups(f, y));
}

inline Verdict verify_resolution(const PolyInY& f, const NPPoly& y) {
  return verify_rational_resolution(f, RationalPL::of(y));
}

/// (x, y(x)) is a tropical root of f read in n+1 variables, for each sample.
inline bool graph_in_hypersurface(const PolyInY& f, const NPPoly& y, const std::vector<Point>& samples) {
  const NPPoly full = f.as_poly();
  for (const auto& x : samples) {
    Point p = x;
    p.push_back(y.eval(x));
    if (!full.is_root(p)) return false;
  }
  return true;
}

/// Substitutes indeterminate values into a polynomial over (x..., u_1...),
/// one group per monomial. All groups are shifted by the same function so
/// that each stays a min of affine functions even with negative or
/// rational exponents on the indeterminates.
inline std::vector<NPPoly> substitute_indeterminates(const NPPoly& poly, std::size_t x_arity,
                                                     const std::vector<RationalPL>& values) {
  check_dim(x_arity + values.size(), poly.arity(), "substitute_indeterminates");
  for (const auto& v : values) check_dim(x_arity, v.arity(), "indeterminate value");
  const std::size_t m = values.size();
  std::vector<Rational> lo(m), hi(m);
  for (const auto& mono : poly.monomials())
    for (std::size_t j = 0; j < m; ++j) {
      lo[j] = std::min(lo[j], mono.exps[x_arity + j]);
      hi[j] = std::max(hi[j], mono.exps[x_arity + j]);
    }
  std::vector<NPPoly> groups;
  for (const auto& mono : poly.monomials()) {
    std::vector<Rational> xe(mono.exps.begin(), mono.exps.begin() + static_cast<std::ptrdiff_t>(x_arity));
    NPPoly t(x_arity, {Monomial{mono.coeff, std::move(xe)}});
    for (std::size_t j = 0; j < m; ++j) {
      const Rational k = mono.exps[x_arity + j];
      if (Rational up = k - lo[j]; up.sign() > 0) t = trop_mul(t, trop_pow(values[j].g, up));
      if (!values[j].h_is_unit())
        if (Rational down = hi[j] - k; down.sign() > 0) t = trop_mul(t, trop_pow(values[j].h, down));
    }
    groups.push_back(std::move(t));
  }
  return groups;
}

/// Every polynomial's monomial minimum is attained twice at every x after
/// substituting the indeterminates.
inline Verdict verify_system(const std::vector<NPPoly>& system, std::size_t x_arity,
                             const std::vector<RationalPL>& values) {
  for (const auto& p : system) {
    auto v = ties_everywhere(x_arity, substitute_indeterminates(p, x_arity, values));
    if (!v.ok) return v;
  }
  return {true, std::nullopt};
}

inline Verdict verify_system(const std::vector<NPPoly>& system, std::size_t x_arity,
                             const std::vector<NPPoly>& values) {
  std::vector<RationalPL> r;
  for (const auto& v : values) r.push_back(RationalPL::of(v));
  return verify_system(system, x_arity, r);
}

/// Monomial-wise minimum of two resolutions of f (again a resolution).
inline NPPoly combine_min(const PolyInY& f, const NPPoly& y1, const NPPoly& y2) {
  if (!verify_resolution(f, y1) || !verify_resolution(f, y2))
    throw std::invalid_argument("combine_min: inputs must both resolve f");
  return trop_add(y1, y2);
}

/// ⊕_{1≤i≤d} f_{d-i}^{⊗(1/i)} for monic f.
inline NPPoly minimal_resolution_monic(const PolyInY& f) {
  if (!f.is_monic()) throw std::domain_error("minimal_resolution_monic: f is not monic");
  const std::size_t d = f.degree();
  std::optional<NPPoly> y;
  for (std::size_t i = 1; i <= d; ++i) {
    if (!f.has(d - i)) continue;
    NPPoly term = trop_pow(f.coeff(d - i), Rational(1, static_cast<long>(i)));
    y = y ? trop_add(*y, term) : term;
  }
  if (!y) throw std::domain_error("minimal_resolution_monic: no lower-degree terms");
  return *y;
}

/// ⊕_{1≤i≤d} (f_{d-i} ⊘ f_d)^{⊗(1/i)} assembled as one difference g - h via
/// min_i(g_i - h_i) = min_i(g_i + Σ_{j≠i} h_j) - Σ_j h_j.
inline RationalPL minimal_resolution_rational(const PolyInY& f) {
  const std::size_t d = f.degree();
  std::vector<NPPoly> gs, hs;
  for (std::size_t i = 1; i <= d; ++i) {
    if (!f.has(d - i)) continue;
    const Rational r(1, static_cast<long>(i));
    gs.push_back(trop_pow(f.coeff(d - i), r));
    hs.push_back(trop_pow(f.coeff(d), r));
  }
  const NPPoly unit = NPPoly::constant(f.arity(), 0);
  NPPoly h_all = unit;
  for (const auto& h : hs) h_all = trop_mul(h_all, h);
  std::optional<NPPoly> g_all;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    NPPoly t = gs[i];
    for (std::size_t j = 0; j < hs.size(); ++j)
      if (j != i) t = trop_mul(t, hs[j]);
    g_all = g_all ? trop_add(*g_all, t) : t;
  }
  return {reduce(*g_all), reduce(h_all)};
}

// ---------------------------------------------------------------------------

struct Candidate {
  std::vector<Rational> exps;
  Rational coeff;
  std::size_t i1 = 0, m1 = 0, i2 = 0, m2 = 0;  // source degrees and monomial indices

  Monomial monomial() const { return {coeff, exps}; }
};

/// Coefficient/exponent pairs making two composite monomials coincide:
/// I = (I1 - I2)/(i2 - i1), a = (c1 - c2)/(i2 - i1) for i1 < i2.
inline std::vector<Candidate> candidate_coeffs(const PolyInY& f) {
  std::vector<Candidate> out;
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  const auto deg = f.present();
  for (std::size_t u = 0; u < deg.size(); ++u)
    for (std::size_t v = u + 1; v < deg.size(); ++v) {
      const std::size_t i1 = deg[u], i2 = deg[v];
      const Rational gap(static_cast<long>(i2 - i1));
      const auto& p1 = f.coeff(i1).monomials();
      const auto& p2 = f.coeff(i2).monomials();
      for (std::size_t a = 0; a < p1.size(); ++a)
        for (std::size_t b = 0; b < p2.size(); ++b) {
          Candidate c;
          c.exps.resize(f.arity());
          for (std::size_t j = 0; j < f.arity(); ++j) c.exps[j] = (p1[a].exps[j] - p2[b].exps[j]) / gap;
          c.coeff = (p1[a].coeff - p2[b].coeff) / gap;
          c.i1 = i1, c.m1 = a, c.i2 = i2, c.m2 = b;
          if (seen.insert({c.exps, c.coeff}).second) out.push_back(std::move(c));
        }
    }
  return out;
}

/// Deterministic spread of sample points used to reject candidates cheaply.
inline std::vector<Point> probe_points(std::size_t dim, std::size_t count = 12, unsigned seed = 7) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-400, 400);
  std::uniform_int_distribution<long> den(1, 37);
  std::vector<Point> pts;
  pts.emplace_back(dim);
  for (std::size_t k = 1; k < count; ++k) {
    Point p(dim);
    for (auto& v : p) v = Rational(num(rng), den(rng));
    pts.push_back(std::move(p));
  }
  return pts;
}

/// All resolutions supported on at most `max_support` candidates, reduced
/// and deduplicated by functional equality, in lexicographic order of the
/// first candidate subset producing each.
inline std::vector<NPPoly> brute_force_resolutions(const PolyInY& f, std::size_t max_support) {
  const auto cands = candidate_coeffs(f);
  const auto probes = probe_points(f.arity());
  std::vector<NPPoly> found;
  std::vector<std::size_t> pick;

  auto quick_reject = [&](const NPPoly& y) {
    for (const auto& x : probes) {
      const Rational yx = y.eval(x);
      std::optional<Rational> best;
      int count = 0;
      for (auto i : f.present()) {
        Rational v = f.coeff(i).eval(x) + Rational(static_cast<long>(i)) * yx;
        if (!best || v < *best) {
          best = std::move(v);
          count = 1;
        } else if (v == *best) {
          ++count;
        }
      }
      if (count < 2) return true;
    }
    return false;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) {
      std::vector<Monomial> ms;
      for (auto k : pick) ms.push_back(cands[k].monomial());
      NPPoly y(f.arity(), std::move(ms));
      if (!quick_reject(y) && verify_resolution(f, y)) {
        NPPoly r = reduce(y);
        if (std::find(found.begin(), found.end(), r) == found.end()) found.push_back(std::move(r));
      }
    }
    if (pick.size() == max_support) return;
    for (std::size_t k = start; k < cands.size(); ++k) {
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return found;
}

// ---------------------------------------------------------------------------

struct PartitionReport {
  std::size_t full_cells = 0;      // full-dimensional linearity cells M_I of y
  std::size_t subcells = 0;        // full-dimensional M_{I,i1,I1,i2,I2}
  bool covered = true;             // subcells cover every M_I
  bool thin_overlaps = true;       // distinct subcells meet in lower dimension
};

/// Checks that on every full-dimensional linearity cell M_I of y the
/// full-dimensional subcells where a coinciding pair of composite monomials
/// is minimal partition M_I.
inline PartitionReport lemma_partition_check(const PolyInY& f, const NPPoly& y) {
  const std::size_t n = f.arity();
  PartitionReport rep;
  const auto& ym = y.monomials();

  struct Composite {
    AffineFunc func;
    std::size_t degree;
  };
  for (std::size_t I = 0; I < ym.size(); ++I) {
    Polyhedron cell{n, {}};
    for (std::size_t J = 0; J < ym.size(); ++J)
      if (J != I) cell.constraints.push_back(geq0(ym[J].affine() - ym[I].affine()));
    if (polyhedron_dim(cell) != static_cast<int>(n)) continue;
    ++rep.full_cells;

    std::vector<Composite> comps;
    for (auto i : f.present())
      for (const auto& m : f.coeff(i).monomials())
        comps.push_back({m.affine() + ym[I].affine() * Rational(static_cast<long>(i)), i});

    auto region_of = [&](const AffineFunc& minimal) {
      Polyhedron r = cell;
      for (const auto& c : comps) r.constraints.push_back(geq0(c.func - minimal));
      return r;
    };

    // distinct minimal composite functions whose region in M_I is full-dimensional
    std::vector<AffineFunc> full_funcs;
    std::vector<bool> paired;
    for (std::size_t a = 0; a < comps.size(); ++a) {
      if (std::find(full_funcs.begin(), full_funcs.end(), comps[a].func) != full_funcs.end()) continue;
      if (polyhedron_dim(region_of(comps[a].func)) != static_cast<int>(n)) continue;
      bool has_partner = false;
      for (std::size_t b = 0; b < comps.size(); ++b)
        if (comps[b].degree != comps[a].degree && comps[b].func == comps[a].func) has_partner = true;
      full_funcs.push_back(comps[a].func);
      paired.push_back(has_partner);
    }
    for (std::size_t k = 0; k < full_funcs.size(); ++k) {
      if (!paired[k]) {
        rep.covered = false;
        continue;
      }
      ++rep.subcells;
      for (std::size_t l = k + 1; l < full_funcs.size(); ++l) {
        if (!paired[l]) continue;
        Polyhedron both = region_of(full_funcs[k]);
        auto other = region_of(full_funcs[l]).constraints;
        both.constraints.insert(both.constraints.end(), other.begin(), other.end());
        if (polyhedron_dim(both) >= static_cast<int>(n)) rep.thin_overlaps = false;
      }
    }
  }
  return rep;
}

}  // namespace tnp
