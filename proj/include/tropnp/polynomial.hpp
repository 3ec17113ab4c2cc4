#pragma once

/**
 * @file polynomial.hpp
 * @brief Tropical Newton-Puiseux polynomials over the min-plus semiring.
 *
 * A monomial a ⊗ x^{⊗I} is classically the affine function a + I·x, with the
 * multiindex I allowed to be rational. A polynomial is the pointwise minimum
 * of its monomials. Monomials are kept sorted lexicographically by exponent
 * vector and duplicates are merged keeping the smaller coefficient, so two
 * polynomials with the same monomial set compare equal as values.
 * Functional equality (same function, different monomials) lives in
 * prevariety.hpp (poly_equal).
 */

#include "tropnp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tnp {

using Point = std::vector<Rational>;

inline void check_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (expected " +
                                std::to_string(expected) + ", got " + std::to_string(got) + ")");
}

/// constant + gradient·x
struct AffineFunc {
  Rational constant;
  std::vector<Rational> gradient;

  AffineFunc() = default;
  AffineFunc(Rational c, std::vector<Rational> g) : constant(std::move(c)), gradient(std::move(g)) {}

  static AffineFunc zero(std::size_t dim) { return {Rational(0), std::vector<Rational>(dim)}; }

  std::size_t dim() const { return gradient.size(); }

  Rational eval(const Point& p) const {
    check_dim(gradient.size(), p.size(), "AffineFunc::eval");
    Rational v = constant;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (gradient[j].sign() != 0) v += gradient[j] * p[j];
    return v;
  }

  bool is_constant() const {
    return std::all_of(gradient.begin(), gradient.end(), [](const Rational& r) { return r.sign() == 0; });
  }

  AffineFunc& operator+=(const AffineFunc& o) {
    check_dim(dim(), o.dim(), "AffineFunc::+");
    constant += o.constant;
    for (std::size_t j = 0; j < gradient.size(); ++j) gradient[j] += o.gradient[j];
    return *this;
  }
  AffineFunc& operator-=(const AffineFunc& o) {
    check_dim(dim(), o.dim(), "AffineFunc::-");
    constant -= o.constant;
    for (std::size_t j = 0; j < gradient.size(); ++j) gradient[j] -= o.gradient[j];
    return *this;
  }
  AffineFunc& operator*=(const Rational& s) {
    constant *= s;
    for (auto& g : gradient) g *= s;
    return *this;
  }
  friend AffineFunc operator+(AffineFunc a, const AffineFunc& b) { return a += b; }
  friend AffineFunc operator-(AffineFunc a, const AffineFunc& b) { return a -= b; }
  friend AffineFunc operator*(AffineFunc a, const Rational& s) { return a *= s; }
  AffineFunc operator-() const { return *this * Rational(-1); }

  friend bool operator==(const AffineFunc&, const AffineFunc&) = default;
};

struct Monomial {
  Rational coeff;
  std::vector<Rational> exps;

  AffineFunc affine() const { return {coeff, exps}; }
  Rational eval(const Point& p) const { return affine().eval(p); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class NPPoly {
public:
  NPPoly() = default;

  NPPoly(std::size_t arity, std::vector<Monomial> monomials) : arity_(arity) {
    if (monomials.empty()) throw std::invalid_argument("NPPoly needs at least one monomial");
    for (const auto& m : monomials) check_dim(arity, m.exps.size(), "NPPoly monomial");
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps < b.exps || (a.exps == b.exps && a.coeff < b.coeff); });
    // after sorting, the first of each equal-exponent run carries the minimum coefficient
    for (auto& m : monomials)
      if (monos_.empty() || monos_.back().exps != m.exps) monos_.push_back(std::move(m));
  }

  static NPPoly constant(std::size_t arity, Rational c) {
    return NPPoly(arity, {Monomial{std::move(c), std::vector<Rational>(arity)}});
  }
  /// c ⊗ x_var
  static NPPoly variable(std::size_t arity, std::size_t var, Rational c = 0) {
    std::vector<Rational> e(arity);
    e.at(var) = 1;
    return NPPoly(arity, {Monomial{std::move(c), std::move(e)}});
  }

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }

  Rational eval(const Point& p) const {
    check_dim(arity_, p.size(), "eval");
    Rational best = monos_.front().eval(p);
    for (std::size_t i = 1; i < monos_.size(); ++i) {
      Rational v = monos_[i].eval(p);
      if (v < best) best = std::move(v);
    }
    return best;
  }

  /// Indices of all monomials attaining the minimum at p.
  std::vector<std::size_t> argmin(const Point& p) const {
    check_dim(arity_, p.size(), "argmin_monomials");
    std::vector<Rational> vals;
    vals.reserve(monos_.size());
    for (const auto& m : monos_) vals.push_back(m.eval(p));
    const Rational best = *std::min_element(vals.begin(), vals.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] == best) out.push_back(i);
    return out;
  }

  bool is_root(const Point& p) const { return argmin(p).size() >= 2; }

  bool has_integer_exponents() const {
    for (const auto& m : monos_)
      for (const auto& e : m.exps)
        if (!e.is_integer()) return false;
    return true;
  }

  /// Largest ℓ1 norm of an exponent vector (the tropical degree for
  /// polynomials with non-negative exponents).
  Rational degree() const {
    Rational best = 0;
    for (const auto& m : monos_) {
      Rational s = 0;
      for (const auto& e : m.exps) s += abs(e);
      if (s > best) best = s;
    }
    return best;
  }

  friend bool operator==(const NPPoly&, const NPPoly&) = default;

private:
  std::size_t arity_ = 0;
  std::vector<Monomial> monos_;
};

inline Rational eval(const NPPoly& p, const Point& x) { return p.eval(x); }
inline std::vector<std::size_t> argmin_monomials(const NPPoly& p, const Point& x) { return p.argmin(x); }
inline bool is_tropical_root(const NPPoly& p, const Point& x) { return p.is_root(x); }

inline NPPoly trop_add(const NPPoly& p, const NPPoly& q) {
  check_dim(p.arity(), q.arity(), "trop_add");
  std::vector<Monomial> ms = p.monomials();
  ms.insert(ms.end(), q.monomials().begin(), q.monomials().end());
  return NPPoly(p.arity(), std::move(ms));
}

inline NPPoly trop_mul(const NPPoly& p, const NPPoly& q) {
  check_dim(p.arity(), q.arity(), "trop_mul");
  std::map<std::vector<Rational>, Rational> best;
  for (const auto& a : p.monomials())
    for (const auto& b : q.monomials()) {
      std::vector<Rational> e = a.exps;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += b.exps[j];
      Rational c = a.coeff + b.coeff;
      auto [it, fresh] = best.try_emplace(std::move(e), c);
      if (!fresh && c < it->second) it->second = std::move(c);
    }
  std::vector<Monomial> ms;
  ms.reserve(best.size());
  for (auto& [e, c] : best) ms.push_back({c, e});
  return NPPoly(p.arity(), std::move(ms));
}

/// Monomial-wise scaling: every coefficient and exponent is multiplied by r.
inline NPPoly trop_pow(const NPPoly& p, const Rational& r) {
  if (r.sign() <= 0) throw std::domain_error("trop_pow: exponent must be positive");
  std::vector<Monomial> ms = p.monomials();
  for (auto& m : ms) {
    m.coeff *= r;
    for (auto& e : m.exps) e *= r;
  }
  return NPPoly(p.arity(), std::move(ms));
}

/// p^{⊗k} for integer k ≥ 0 by repeated multiplication; k = 0 gives the unit.
inline NPPoly trop_ipow(const NPPoly& p, unsigned k) {
  NPPoly acc = NPPoly::constant(p.arity(), 0);
  for (unsigned i = 0; i < k; ++i) acc = trop_mul(acc, p);
  return acc;
}

struct ClearedPoly {
  mpz_class multiplier;
  NPPoly poly;
};

/// N = lcm of exponent denominators and q = p^{⊗N}, so that q has integer
/// exponents and q(x) = N·p(x).
inline ClearedPoly clear_denominators(const NPPoly& p) {
  mpz_class n = 1;
  for (const auto& m : p.monomials())
    for (const auto& e : m.exps) n = lcm(n, e.den());
  return {n, trop_pow(p, Rational(mpq_class(n)))};
}

/// f = ⊕_i f_i ⊗ y^{⊗i}; absent entries stand for missing terms.
class PolyInY {
public:
  PolyInY() = default;
  PolyInY(std::size_t arity, std::vector<std::optional<NPPoly>> coeffs) : arity_(arity), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && !coeffs_.back()) coeffs_.pop_back();
    std::size_t present = 0;
    for (const auto& c : coeffs_)
      if (c) {
        check_dim(arity_, c->arity(), "PolyInY coefficient");
        ++present;
      }
    if (present < 2) throw std::invalid_argument("PolyInY needs at least two present terms");
  }

  std::size_t arity() const { return arity_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool has(std::size_t i) const { return i < coeffs_.size() && coeffs_[i].has_value(); }
  const NPPoly& coeff(std::size_t i) const {
    if (!has(i)) throw std::out_of_range("PolyInY: term " + std::to_string(i) + " is absent");
    return *coeffs_[i];
  }
  const std::vector<std::optional<NPPoly>>& coeffs() const { return coeffs_; }
  std::vector<std::size_t> present() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i]) out.push_back(i);
    return out;
  }

  /// Leading coefficient is the tropical unit (the constant 0 monomial).
  bool is_monic() const {
    const auto& lead = *coeffs_.back();
    return lead == NPPoly::constant(arity_, 0);
  }

  /// The same polynomial read in arity+1 variables with y last.
  NPPoly as_poly() const {
    std::vector<Monomial> ms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i]) continue;
      for (const auto& m : coeffs_[i]->monomials()) {
        Monomial e = m;
        e.exps.push_back(Rational(static_cast<long>(i)));
        ms.push_back(std::move(e));
      }
    }
    return NPPoly(arity_ + 1, std::move(ms));
  }

  friend bool operator==(const PolyInY&, const PolyInY&) = default;

private:
  std::size_t arity_ = 0;
  std::vector<std::optional<NPPoly>> coeffs_;
};

/// Entry i is f_i ⊗ y^{⊗i} (absent where f_i is absent).
inline std::vector<std::optional<NPPoly>> substitute_y(const PolyInY& f, const NPPoly& y) {
  check_dim(f.arity(), y.arity(), "substitute_y");
  std::vector<std::optional<NPPoly>> out(f.degree() + 1);
  NPPoly power = NPPoly::constant(f.arity(), 0);
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    if (i > 0) power = trop_mul(power, y);
    if (f.has(i)) out[i] = trop_mul(f.coeff(i), power);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form: terms joined by "⊕" (or "|"), factors by "⊗" (or "*"), e.g.
// "2⊗x^(1/2)⊗y ⊕ 0" or "x^2 | x | 0".

inline std::vector<std::string> default_var_names(std::size_t arity) {
  if (arity == 1) return {"x"};
  if (arity == 2) return {"x", "y"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arity; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

inline std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  bool all_zero = std::all_of(m.exps.begin(), m.exps.end(), [](const Rational& e) { return e.sign() == 0; });
  if (m.coeff.sign() != 0 || all_zero) out = m.coeff.str();
  for (std::size_t j = 0; j < m.exps.size(); ++j) {
    const auto& e = m.exps[j];
    if (e.sign() == 0) continue;
    if (!out.empty()) out += "⊗";
    out += vars.at(j);
    if (e != Rational(1)) out += e.is_integer() && e.sign() > 0 ? "^" + e.str() : "^(" + e.str() + ")";
  }
  return out;
}

/// Monomials printed from the largest exponent vector down.
inline std::string to_string(const NPPoly& p, const std::vector<std::string>& vars) {
  check_dim(p.arity(), vars.size(), "to_string");
  std::string out;
  for (auto it = p.monomials().rbegin(); it != p.monomials().rend(); ++it) {
    if (!out.empty()) out += " ⊕ ";
    out += to_string(*it, vars);
  }
  return out;
}

inline std::string to_string(const NPPoly& p) { return to_string(p, default_var_names(p.arity())); }

namespace detail {

inline std::vector<std::string> split_on(const std::string& s, const std::vector<std::string>& seps) {
  std::vector<std::string> parts;
  std::size_t start = 0, i = 0;
  int depth = 0;
  while (i < s.size()) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    bool hit = false;
    if (depth == 0)
      for (const auto& sep : seps)
        if (s.compare(i, sep.size(), sep) == 0) {
          parts.push_back(s.substr(start, i - start));
          i += sep.size();
          start = i;
          hit = true;
          break;
        }
    if (!hit) ++i;
  }
  parts.push_back(s.substr(start));
  return parts;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline NPPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  std::vector<Monomial> ms;
  for (auto term : detail::split_on(text, {"⊕", "|"})) {
    term = detail::trim(term);
    if (term.empty()) throw std::invalid_argument("empty term in polynomial '" + text + "'");
    Monomial m{Rational(0), std::vector<Rational>(vars.size())};
    for (auto factor : detail::split_on(term, {"⊗", "*"})) {
      factor = detail::trim(factor);
      if (factor.empty()) throw std::invalid_argument("empty factor in '" + term + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0])) || factor[0] == '-' || factor[0] == '+') {
        m.coeff += Rational::parse(factor);
        continue;
      }
      std::string name = factor, power = "1";
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        name = detail::trim(factor.substr(0, caret));
        power = detail::trim(factor.substr(caret + 1));
        if (power.size() >= 2 && power.front() == '(' && power.back() == ')') power = power.substr(1, power.size() - 2);
      }
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw std::invalid_argument("unknown variable '" + name + "'");
      m.exps[static_cast<std::size_t>(it - vars.begin())] += Rational::parse(power);
    }
    ms.push_back(std::move(m));
  }
  return NPPoly(vars.size(), std::move(ms));
}

inline NPPoly parse_poly(const std::string& text, std::size_t arity) {
  return parse_poly(text, default_var_names(arity));
}

}  // namespace tnp
