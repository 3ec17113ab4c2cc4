#pragma once

#include "tropnp/tropnp.hpp"

#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace tnp {

inline void PrintTo(const NPPoly& p, std::ostream* os) { *os << to_string(p); }

}  // namespace tnp

namespace tnp::testing {

inline NPPoly P(const std::string& text, std::size_t arity = 1) { return parse_poly(text, arity); }

inline Rational Q(long n, long d = 1) { return Rational(n, d); }

inline Point random_point(std::mt19937& rng, std::size_t dim, long range = 50, long max_den = 11) {
  std::uniform_int_distribution<long> num(-range * max_den, range * max_den), den(1, max_den);
  Point p(dim);
  for (auto& v : p) v = Rational(num(rng), den(rng));
  return p;
}

/// Random polynomial with 1..max_terms monomials, coefficients and
/// exponents drawn from [lo, hi].
inline NPPoly random_poly(std::mt19937& rng, std::size_t arity, std::size_t max_terms, long lo, long hi) {
  std::uniform_int_distribution<long> val(lo, hi);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::vector<Monomial> ms;
  const std::size_t k = count(rng);
  for (std::size_t t = 0; t < k; ++t) {
    Monomial m{Rational(val(rng)), std::vector<Rational>(arity)};
    for (auto& e : m.exps) e = Rational(val(rng));
    ms.push_back(std::move(m));
  }
  return NPPoly(arity, std::move(ms));
}

}  // namespace tnp::testing
