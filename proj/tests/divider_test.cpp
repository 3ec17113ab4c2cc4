#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using tnp::testing::P;

namespace {

// Independent oracle: any quotient is (up to redundant monomials) made of
// candidates b - c with exponent B - C; search subsets for an exact match.
std::optional<NPPoly> divide_by_search(const NPPoly& f0, const NPPoly& f1) {
  std::vector<Monomial> cands;
  for (const auto& b : f0.monomials())
    for (const auto& c : f1.monomials()) {
      Monomial m{b.coeff - c.coeff, {}};
      for (std::size_t j = 0; j < f0.arity(); ++j) m.exps.push_back(b.exps[j] - c.exps[j]);
      cands.push_back(std::move(m));
    }
  const std::size_t k = cands.size();
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    std::vector<Monomial> ms;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) ms.push_back(cands[i]);
    NPPoly q(f0.arity(), ms);
    if (poly_equal(trop_mul(q, f1), f0)) return reduce(q);
  }
  return std::nullopt;
}

}  // namespace

TEST(Divide, Examples) {
  auto q = divide(P("x^2 | 0"), P("x | 0"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("x | 0"));
  EXPECT_FALSE(divide(P("x | 0"), P("x^2 | 0")));
  NPPoly f = P("2*x^2 | x | -1");
  EXPECT_EQ(*divide(f, f), P("0"));
  EXPECT_THROW(divide(P("x^(1/2) | 0"), P("0")), std::domain_error);
  EXPECT_THROW(divide(P("x"), P("x", 2)), std::invalid_argument);
}

TEST(IsDivisible, Examples) {
  EXPECT_TRUE(is_divisible(P("x^2 | 0"), P("x | 0")));
  EXPECT_FALSE(is_divisible(P("0"), P("x | 0")));
  NPPoly f = P("x^2 | 1*x | 0");
  EXPECT_TRUE(is_divisible(f, P("0")));
  EXPECT_EQ(*divide(f, P("0")), reduce(f));
}

TEST(Divide, ProductsAreDivisible) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 2;
    NPPoly a = tnp::testing::random_poly(rng, n, 3, 0, 2), b = tnp::testing::random_poly(rng, n, 3, 0, 2);
    NPPoly f0 = trop_mul(a, b);
    auto q = divide(f0, b);
    ASSERT_TRUE(q);
    EXPECT_TRUE(poly_equal(*q, a));
    EXPECT_TRUE(poly_equal(trop_mul(*q, b), f0));
  }
}

TEST(Divide, AgreesWithSearchOracle) {
  std::mt19937 rng(32);
  int divisible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 2;
    NPPoly f0 = tnp::testing::random_poly(rng, n, 3, 0, 2), f1 = tnp::testing::random_poly(rng, n, 2, 0, 2);
    if (trial % 3 == 0) f0 = trop_mul(f0, f1);
    auto q = divide(f0, f1);
    auto o = divide_by_search(f0, f1);
    ASSERT_EQ(q.has_value(), o.has_value()) << to_string(f0) << " / " << to_string(f1);
    if (q) {
      EXPECT_EQ(*q, *o);
      ++divisible;
    }
  }
  EXPECT_GT(divisible, 0);
}

TEST(ConvexBend, NeverFiresOnProducts) {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 3;
    NPPoly a = tnp::testing::random_poly(rng, n, 4, -3, 3), b = tnp::testing::random_poly(rng, n, 4, -3, 3);
    EXPECT_FALSE(detail::convex_bend(trop_mul(a, b), b)) << to_string(a) << " ; " << to_string(b);
  }
}

TEST(ConvexBend, FindsKinkOfDivisor) {
  EXPECT_TRUE(detail::convex_bend(P("0", 1), P("x | 0", 1)));
  EXPECT_TRUE(detail::convex_bend(P("x | y", 2), P("x | 0", 2)));
  EXPECT_FALSE(detail::convex_bend(P("x | 0", 1), P("0", 1)));
}
