#pragma once

/**
 * @file divider.hpp
 * @brief Polynomial-time test of f1 ⊗ y = f0 for tropical Laurent polynomials.
 *
 * Candidate exponents are differences B - C of monomials of the reduced
 * f0 and f1. For each candidate I the smallest admissible coefficient is
 *
 *     a_I = max over monomials (c, C) of f1 of  max_x [ f0(x) - c - (C+I)·x ],
 *
 * i.e. the least shift keeping every composite monomial above the graph of
 * f0. The inner maximum is the LP  max t  s.t.  t ≤ b - c + (B - C - I)·x
 * over the monomials (b, B) of f0; an unbounded LP rules the candidate out.
 * The quotient exists iff every reduced monomial of f0 is realised by some
 * composite, and then its reduction is unique.
 */

#include "tropnp/prevariety.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace tnp {

namespace detail {

/// Looks for a strict convex bend of r = f0 - f1, i.e. points x ± h with
/// r(x - h) + r(x + h) > 2 r(x), along a fixed family of segments. Candidates
/// are screened in floating point and confirmed exactly.
inline bool convex_bend(const NPPoly& f0, const NPPoly& f1) {
  const std::size_t n = f0.arity();
  constexpr int kSegments = 8, kSteps = 8;
  auto approx = [](const NPPoly& p) {
    std::vector<std::vector<double>> out;
    for (const auto& m : p.monomials()) {
      std::vector<double> v{m.coeff.to_double()};
      for (const auto& e : m.exps) v.push_back(e.to_double());
      out.push_back(std::move(v));
    }
    return out;
  };
  const auto a0 = approx(f0), a1 = approx(f1);
  auto eval = [n](const std::vector<std::vector<double>>& p, const std::vector<double>& x) {
    double best = HUGE_VAL;
    for (const auto& m : p) {
      double v = m[0];
      for (std::size_t j = 0; j < n; ++j) v += m[j + 1] * x[j];
      best = std::min(best, v);
    }
    return best;
  };
  auto at = [](const Point& a, const Point& b, int k) {
    Point x(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) x[j] = a[j] + (b[j] - a[j]) * Rational(k, kSteps);
    return x;
  };

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coord(-6, 6);
  for (int s = 0; s < kSegments; ++s) {
    Point a(n), b(n);
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = Rational(coord(rng));
      b[j] = Rational(coord(rng));
    }
    std::vector<double> r;
    for (int k = 0; k <= kSteps; ++k) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = a[j].to_double() + (b[j] - a[j]).to_double() * k / kSteps;
      r.push_back(eval(a0, x) - eval(a1, x));
    }
    for (int k = 1; k < kSteps; ++k) {
      if (r[k - 1] + r[k + 1] - 2 * r[k] <= 1e-9 * (1 + std::abs(r[k]))) continue;
      auto exact = [&](int i) {
        const Point x = at(a, b, i);
        return f0.eval(x) - f1.eval(x);
      };
      if (exact(k - 1) + exact(k + 1) > Rational(2) * exact(k)) return true;
    }
  }
  return false;
}

}  // namespace detail

inline std::optional<NPPoly> divide(const NPPoly& f0, const NPPoly& f1) {
  check_dim(f0.arity(), f1.arity(), "divide");
  if (!f0.has_integer_exponents() || !f1.has_integer_exponents())
    throw std::domain_error("divide: exponents must be integers");
  const std::size_t n = f0.arity();
  if (detail::convex_bend(f0, f1)) return std::nullopt;
  const NPPoly r0 = reduce(f0);
  const NPPoly r1 = reduce(f1);

  std::set<std::vector<Rational>> exps;
  for (const auto& b : r0.monomials())
    for (const auto& c : r1.monomials()) {
      std::vector<Rational> e(n);
      for (std::size_t j = 0; j < n; ++j) e[j] = b.exps[j] - c.exps[j];
      exps.insert(std::move(e));
    }

  std::vector<Monomial> quotient;
  for (const auto& I : exps) {
    std::optional<Rational> a;
    for (const auto& c : r1.monomials()) {
      std::vector<LinConstraint> cons;
      for (const auto& b : r0.monomials()) {
        AffineFunc g(b.coeff - c.coeff, std::vector<Rational>(n + 1));
        for (std::size_t j = 0; j < n; ++j) g.gradient[j] = b.exps[j] - c.exps[j] - I[j];
        g.gradient[n] = -1;
        cons.push_back(geq0(std::move(g)));
      }
      std::vector<Rational> obj(n + 1);
      obj[n] = 1;
      auto r = lp_solve(n + 1, cons, AffineFunc(0, obj), Sense::Maximize);
      if (r.status != LpStatus::Optimal) {
        a.reset();
        break;
      }
      if (!a || *r.value > *a) a = *r.value;
    }
    if (a) quotient.push_back({*a, I});
  }
  if (quotient.empty()) return std::nullopt;

  for (const auto& b : r0.monomials()) {
    bool realised = false;
    for (const auto& q : quotient) {
      for (const auto& c : r1.monomials()) {
        if (q.coeff + c.coeff != b.coeff) continue;
        bool same = true;
        for (std::size_t j = 0; j < n && same; ++j) same = q.exps[j] + c.exps[j] == b.exps[j];
        if (same) {
          realised = true;
          break;
        }
      }
      if (realised) break;
    }
    if (!realised) return std::nullopt;
  }
  return reduce(NPPoly(n, std::move(quotient)));
}

inline bool is_divisible(const NPPoly& f0, const NPPoly& f1) { return divide(f0, f1).has_value(); }

}  // namespace tnp
