#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using tnp::testing::Q;

namespace {
AffineFunc af(long c, std::vector<long> g) {
  std::vector<Rational> gr(g.begin(), g.end());
  return {Rational(c), gr};
}
}  // namespace

TEST(LpSolve, Examples) {
  // max x s.t. 3 - x ≥ 0
  auto r = lp_solve(1, {geq0(af(3, {-1}))}, af(0, {1}), Sense::Maximize);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(*r.value, Q(3));
  EXPECT_EQ((*r.witness)[0], Q(3));

  EXPECT_EQ(lp_solve(1, {geq0(af(0, {1})), geq0(af(-1, {-1}))}, af(0, {1}), Sense::Minimize).status,
            LpStatus::Infeasible);
  EXPECT_EQ(lp_solve(1, {geq0(af(0, {1}))}, af(0, {1}), Sense::Maximize).status, LpStatus::Unbounded);
}

TEST(LpSolve, TwoDimensionalWithEquality) {
  // min x + 2y  s.t. x + y = 4, x ≥ 1, y ≥ 1/2
  std::vector<LinConstraint> cons{eq0(af(-4, {1, 1})), geq0(af(-1, {1, 0})), geq0({Q(-1, 2), {Q(0), Q(1)}})};
  auto r = lp_solve(2, cons, af(0, {1, 2}), Sense::Minimize);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(*r.value, Q(9, 2));
  EXPECT_EQ(*r.witness, (Point{Q(7, 2), Q(1, 2)}));
}

TEST(LpSolve, DegenerateRedundantRows) {
  // duplicated equalities and a degenerate vertex
  std::vector<LinConstraint> cons{eq0(af(-1, {1, 1})), eq0(af(-2, {2, 2})), geq0(af(0, {1, 0})), geq0(af(0, {0, 1})),
                                  geq0(af(0, {1, -1})), geq0(af(0, {-1, 1}))};
  auto r = lp_solve(2, cons, af(0, {1, 0}), Sense::Maximize);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(*r.value, Q(1, 2));
}

TEST(LpSolve, RejectsStrictAndMismatch) {
  EXPECT_THROW(lp_solve(1, {gt0(af(0, {1}))}, af(0, {1}), Sense::Maximize), std::invalid_argument);
  EXPECT_THROW(lp_solve(2, {geq0(af(0, {1}))}, af(0, {1, 0}), Sense::Maximize), std::invalid_argument);
}

TEST(LpSolve, AgreesWithVertexEnumerationOn2D) {
  // independent oracle: optimum of a bounded 2-D LP is attained at a vertex,
  // i.e. at the intersection of two tight constraints
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> v(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<LinConstraint> cons{geq0(af(10, {-1, 0})), geq0(af(10, {1, 0})), geq0(af(10, {0, -1})),
                                    geq0(af(10, {0, 1}))};
    for (int k = 0; k < 4; ++k) cons.push_back(geq0(af(v(rng) + 6, {v(rng), v(rng)})));
    AffineFunc obj = af(0, {v(rng), v(rng)});
    auto r = lp_solve(2, cons, obj, Sense::Maximize);

    std::optional<Rational> best;
    for (std::size_t a = 0; a < cons.size(); ++a)
      for (std::size_t b = a + 1; b < cons.size(); ++b) {
        const auto& f = cons[a].func;
        const auto& g = cons[b].func;
        Rational det = f.gradient[0] * g.gradient[1] - f.gradient[1] * g.gradient[0];
        if (det.sign() == 0) continue;
        Point p{(-f.constant * g.gradient[1] + g.constant * f.gradient[1]) / det,
                (-f.gradient[0] * g.constant + g.gradient[0] * f.constant) / det};
        bool ok = true;
        for (const auto& c : cons) ok = ok && c.holds(p);
        if (ok && (!best || obj.eval(p) > *best)) best = obj.eval(p);
      }
    if (!best) {
      EXPECT_EQ(r.status, LpStatus::Infeasible);
    } else {
      ASSERT_EQ(r.status, LpStatus::Optimal);
      EXPECT_EQ(*r.value, *best);
    }
  }
}

TEST(RelativeInterior, Examples) {
  auto a = relative_interior_feasible(1, {gt0(af(0, {1})), gt0(af(1, {-1}))});
  ASSERT_TRUE(a.feasible);
  EXPECT_GT((*a.witness)[0], Q(0));
  EXPECT_LT((*a.witness)[0], Q(1));

  EXPECT_FALSE(relative_interior_feasible(1, {gt0(af(0, {1})), gt0(af(0, {-1}))}).feasible);

  auto c = relative_interior_feasible(1, {eq0(af(0, {1})), gt0(af(1, {1}))});
  ASSERT_TRUE(c.feasible);
  EXPECT_EQ((*c.witness)[0], Q(0));
}

TEST(PolyhedronDim, Examples) {
  Polyhedron half_line{2, {eq0(af(0, {0, 1})), geq0(af(0, {1, 0}))}};
  EXPECT_EQ(polyhedron_dim(half_line), 1);
  Polyhedron point{2, {eq0(af(0, {1, 0})), eq0(af(0, {0, 1}))}};
  EXPECT_EQ(polyhedron_dim(point), 0);
  Polyhedron empty{2, {geq0(af(-1, {1, 0})), geq0(af(0, {-1, 0}))}};
  EXPECT_EQ(polyhedron_dim(empty), -1);
  // implicit equality: x ≥ 0 and -x ≥ 0
  Polyhedron implicit{2, {geq0(af(0, {1, 0})), geq0(af(0, {-1, 0}))}};
  EXPECT_EQ(polyhedron_dim(implicit), 1);
  EXPECT_EQ(polyhedron_dim(Polyhedron{3, {}}), 3);
  Polyhedron open_empty{1, {gt0(af(0, {1})), geq0(af(0, {-1}))}};
  EXPECT_EQ(polyhedron_dim(open_empty), -1);
}

TEST(LinearAlgebra, NullspaceAndRank) {
  std::vector<std::vector<Rational>> rows{{Q(1), Q(1), Q(0)}, {Q(2), Q(2), Q(0)}};
  EXPECT_EQ(rank(rows, 3), 1u);
  auto ns = nullspace(rows, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(v[0] + v[1], Q(0));
}
