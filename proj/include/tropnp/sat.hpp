#pragma once

/**
 * @file sat.hpp
 * @brief Reduction from 3-SAT to resolubility of tropical systems in one
 *        variable x and several indeterminates.
 *
 * For variables u_1..u_n the system has indeterminates y_i, z_i (u_i and its
 * negation) and, per clause j, v_j and w_j:
 *
 *     y_i ⊗ z_i ⊕ x              forces y_i, z_i to be monomials in x
 *     lit_1 ⊕ lit_2 ⊕ lit_3 ⊕ v_j
 *     v_j ⊕ x ⊕ w_j
 *     w_j ⊕ x ⊕ 0                forces w_j = x ⊕ 0
 *
 * The constant 0 encodes "true" and x encodes "false".
 */

#include "tropnp/resolver.hpp"

#include <array>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tnp {

struct Literal {
  std::size_t var = 0;  // 0-based
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CNF3 {
  std::size_t num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;

  void validate() const {
    for (const auto& c : clauses)
      for (const auto& l : c)
        if (l.var >= num_vars) throw std::invalid_argument("CNF literal out of range");
  }

  bool satisfied_by(const std::vector<bool>& a) const {
    if (a.size() != num_vars) throw std::invalid_argument("assignment length differs from variable count");
    for (const auto& c : clauses) {
      bool any = false;
      for (const auto& l : c) any = any || (a[l.var] != l.negated);
      if (!any) return false;
    }
    return true;
  }

  bool satisfiable() const {
    for (unsigned long bits = 0; bits < (1ul << num_vars); ++bits) {
      std::vector<bool> a(num_vars);
      for (std::size_t i = 0; i < num_vars; ++i) a[i] = (bits >> i) & 1u;
      if (satisfied_by(a)) return true;
    }
    return false;
  }

  friend bool operator==(const CNF3&, const CNF3&) = default;
};

/// DIMACS "p cnf V C" with every clause holding exactly three literals.
inline CNF3 parse_dimacs(std::istream& in) {
  CNF3 cnf;
  bool header = false;
  std::vector<long> pending;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      long v = -1, c = -1;
      if (!(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0) throw std::invalid_argument("malformed DIMACS header");
      cnf.num_vars = static_cast<std::size_t>(v);
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("DIMACS clause before 'p cnf' header");
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed DIMACS literal '" + tok + "'");
      }
      if (lit != 0) {
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3)
        throw std::invalid_argument("clause " + std::to_string(cnf.clauses.size() + 1) + " has " +
                                    std::to_string(pending.size()) + " literals, expected 3");
      std::array<Literal, 3> cl;
      for (std::size_t k = 0; k < 3; ++k) {
        long v = pending[k] < 0 ? -pending[k] : pending[k];
        if (static_cast<std::size_t>(v) > cnf.num_vars) throw std::invalid_argument("DIMACS literal out of range");
        cl[k] = {static_cast<std::size_t>(v - 1), pending[k] < 0};
      }
      cnf.clauses.push_back(cl);
      pending.clear();
    }
  }
  if (!header) throw std::invalid_argument("missing 'p cnf' header");
  if (!pending.empty()) throw std::invalid_argument("unterminated DIMACS clause");
  return cnf;
}

inline CNF3 parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline std::string to_dimacs(const CNF3& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (const auto& l : c) os << (l.negated ? "-" : "") << l.var + 1 << ' ';
    os << "0\n";
  }
  return os.str();
}

/// Polynomials over (x, indeterminates...) in that variable order.
struct TropicalSystem {
  std::vector<std::string> indeterminates;
  std::vector<NPPoly> polys;

  std::size_t arity() const { return 1 + indeterminates.size(); }
  std::vector<std::string> variable_names() const {
    std::vector<std::string> v{"x"};
    v.insert(v.end(), indeterminates.begin(), indeterminates.end());
    return v;
  }
  friend bool operator==(const TropicalSystem&, const TropicalSystem&) = default;
};

using IndeterminateMap = std::map<std::string, NPPoly>;

inline TropicalSystem reduce_3sat(const CNF3& cnf) {
  cnf.validate();
  const std::size_t n = cnf.num_vars, m = cnf.clauses.size();
  TropicalSystem sys;
  for (std::size_t i = 1; i <= n; ++i) sys.indeterminates.push_back("y" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) sys.indeterminates.push_back("z" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) sys.indeterminates.push_back("v" + std::to_string(j));
  for (std::size_t j = 1; j <= m; ++j) sys.indeterminates.push_back("w" + std::to_string(j));
  const std::size_t ar = sys.arity();
  auto y = [&](std::size_t i) { return 1 + i; };
  auto z = [&](std::size_t i) { return 1 + n + i; };
  auto v = [&](std::size_t j) { return 1 + 2 * n + j; };
  auto w = [&](std::size_t j) { return 1 + 2 * n + m + j; };
  auto mono = [&](std::initializer_list<std::size_t> vars) {
    Monomial mo{Rational(0), std::vector<Rational>(ar)};
    for (auto k : vars) mo.exps[k] += 1;
    return mo;
  };
  const Monomial x = mono({0}), unit = mono({});

  for (std::size_t i = 0; i < n; ++i) sys.polys.push_back(NPPoly(ar, {mono({y(i), z(i)}), x}));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Monomial> lits;
    for (const auto& l : cnf.clauses[j]) lits.push_back(mono({l.negated ? z(l.var) : y(l.var)}));
    lits.push_back(mono({v(j)}));
    sys.polys.push_back(NPPoly(ar, std::move(lits)));
    sys.polys.push_back(NPPoly(ar, {mono({v(j)}), x, mono({w(j)})}));
    sys.polys.push_back(NPPoly(ar, {mono({w(j)}), x, unit}));
  }
  return sys;
}

/// y_i = 0, z_i = x for true u_i (swapped for false), v_j = ⊕ of the clause
/// literals, w_j = x ⊕ 0.
inline IndeterminateMap assignment_to_resolution(const CNF3& cnf, const std::vector<bool>& assignment) {
  if (!cnf.satisfied_by(assignment)) throw std::invalid_argument("assignment does not satisfy the CNF");
  const NPPoly zero = NPPoly::constant(1, 0), x = NPPoly::variable(1, 0);
  IndeterminateMap out;
  std::vector<NPPoly> yv, zv;
  for (std::size_t i = 0; i < cnf.num_vars; ++i) {
    yv.push_back(assignment[i] ? zero : x);
    zv.push_back(assignment[i] ? x : zero);
    out["y" + std::to_string(i + 1)] = yv.back();
    out["z" + std::to_string(i + 1)] = zv.back();
  }
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    std::optional<NPPoly> vj;
    for (const auto& l : cnf.clauses[j]) {
      const NPPoly& lit = l.negated ? zv[l.var] : yv[l.var];
      vj = vj ? trop_add(*vj, lit) : lit;
    }
    out["v" + std::to_string(j + 1)] = *vj;
    out["w" + std::to_string(j + 1)] = trop_add(x, zero);
  }
  return out;
}

inline std::vector<NPPoly> ordered_values(const TropicalSystem& sys, const IndeterminateMap& map) {
  std::vector<NPPoly> vals;
  for (const auto& name : sys.indeterminates) {
    auto it = map.find(name);
    if (it == map.end()) throw std::invalid_argument("no value for indeterminate '" + name + "'");
    check_dim(1, it->second.arity(), "indeterminate value");
    vals.push_back(it->second);
  }
  return vals;
}

inline Verdict verify_system_resolution(const TropicalSystem& sys, const IndeterminateMap& map) {
  return verify_system(sys.polys, 1, ordered_values(sys, map));
}

/// u_i is true iff y_i reduces to the constant 0 and false iff it reduces to x.
inline std::vector<bool> extract_assignment(const IndeterminateMap& map, std::size_t num_vars) {
  const NPPoly zero = NPPoly::constant(1, 0), x = NPPoly::variable(1, 0);
  std::vector<bool> a(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    const std::string name = "y" + std::to_string(i + 1);
    auto it = map.find(name);
    if (it == map.end()) throw std::invalid_argument("no value for indeterminate '" + name + "'");
    NPPoly r = reduce(it->second);
    if (r == zero)
      a[i] = true;
    else if (r == x)
      a[i] = false;
    else
      throw std::invalid_argument("non-canonical certificate: " + name + " = " + to_string(r));
  }
  return a;
}

/// Exhaustive search over values built from the monomials x^{k/degree_bound},
/// 0 ≤ k ≤ degree_bound, with at most support_bound monomials each.
/// Polynomials are checked as soon as all their indeterminates are set.
inline std::optional<IndeterminateMap> brute_force_system(const TropicalSystem& sys, unsigned degree_bound,
                                                          std::size_t support_bound) {
  if (degree_bound == 0) throw std::invalid_argument("degree_bound must be positive");
  std::vector<Monomial> menu;
  for (unsigned k = 0; k <= degree_bound; ++k)
    menu.push_back({Rational(0), {Rational(static_cast<long>(k), static_cast<long>(degree_bound))}});
  std::vector<NPPoly> options;
  std::vector<Monomial> pick;
  std::function<void(std::size_t)> subsets = [&](std::size_t start) {
    if (!pick.empty()) options.emplace_back(1, pick);
    if (pick.size() == support_bound) return;
    for (std::size_t k = start; k < menu.size(); ++k) {
      pick.push_back(menu[k]);
      subsets(k + 1);
      pick.pop_back();
    }
  };
  subsets(0);

  const std::size_t m = sys.indeterminates.size();
  // order indeterminates by first use; a polynomial is checked after its last one
  std::vector<std::size_t> order;
  std::vector<bool> placed(m, false);
  std::vector<std::vector<std::size_t>> due(m + 1);
  for (std::size_t p = 0; p < sys.polys.size(); ++p) {
    for (const auto& mono : sys.polys[p].monomials())
      for (std::size_t j = 0; j < m; ++j)
        if (mono.exps[1 + j].sign() != 0 && !placed[j]) {
          placed[j] = true;
          order.push_back(j);
        }
    due[order.size()].push_back(p);
  }
  for (std::size_t j = 0; j < m; ++j)
    if (!placed[j]) order.push_back(j);

  const auto probes = probe_points(1);
  std::vector<RationalPL> values(m, RationalPL::of(NPPoly::constant(1, 0)));
  auto check = [&](std::size_t p) {
    auto groups = substitute_indeterminates(sys.polys[p], 1, values);
    for (const auto& x : probes)
      if (!ties_at(groups, x)) return false;
    return ties_everywhere(1, groups).ok;
  };
  for (auto p : due[0])
    if (!check(p)) return std::nullopt;

  std::vector<std::size_t> choice(m);
  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t j = order[depth];
    for (std::size_t o = 0; o < options.size(); ++o) {
      values[j] = RationalPL::of(options[o]);
      choice[j] = o;
      bool ok = true;
      for (auto p : due[depth + 1])
        if (!(ok = check(p))) break;
      if (ok && search(depth + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  IndeterminateMap out;
  for (std::size_t j = 0; j < m; ++j) out[sys.indeterminates[j]] = options[choice[j]];
  return out;
}

}  // namespace tnp
