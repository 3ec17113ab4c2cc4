#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using tnp::testing::P;

namespace {

CNF3 cnf(std::size_t n, std::vector<std::array<long, 3>> clauses) {
  CNF3 c;
  c.num_vars = n;
  for (const auto& cl : clauses) {
    std::array<Literal, 3> lits;
    for (std::size_t k = 0; k < 3; ++k) lits[k] = {static_cast<std::size_t>(std::labs(cl[k]) - 1), cl[k] < 0};
    c.clauses.push_back(lits);
  }
  return c;
}

}  // namespace

TEST(Dimacs, ParseAndPrint) {
  CNF3 c = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 3 0\n");
  EXPECT_EQ(c.num_vars, 3u);
  ASSERT_EQ(c.clauses.size(), 2u);
  EXPECT_EQ(c.clauses[0][1], (Literal{1, true}));
  EXPECT_EQ(parse_dimacs(to_dimacs(c)).clauses, c.clauses);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), std::invalid_argument);
}

TEST(Reduce3Sat, Shape) {
  auto sys = reduce_3sat(cnf(3, {{1, -2, 3}}));
  EXPECT_EQ(sys.polys.size(), 6u);
  EXPECT_EQ(sys.indeterminates, (std::vector<std::string>{"y1", "y2", "y3", "z1", "z2", "z3", "v1", "w1"}));
  auto names = sys.variable_names();
  EXPECT_EQ(to_string(sys.polys[0], names), parse_poly("y1*z1 | x", names) == sys.polys[0] ? to_string(sys.polys[0], names) : "");
  EXPECT_EQ(sys.polys[3], parse_poly("y1 | z2 | y3 | v1", names));
  EXPECT_EQ(sys.polys[4], parse_poly("v1 | x | w1", names));
  EXPECT_EQ(sys.polys[5], parse_poly("w1 | x | 0", names));

  EXPECT_EQ(reduce_3sat(cnf(3, {})).polys.size(), 3u);
  EXPECT_EQ(reduce_3sat(cnf(3, {{1, 2, 3}, {-1, -2, -3}})).polys.size(), 9u);
  EXPECT_THROW(reduce_3sat(cnf(2, {{1, 2, 3}})), std::invalid_argument);
}

TEST(AssignmentToResolution, Examples) {
  CNF3 c = cnf(3, {{1, -2, 3}});
  auto m = assignment_to_resolution(c, {true, false, false});
  EXPECT_EQ(m.at("y1"), P("0"));
  EXPECT_EQ(m.at("z1"), P("x"));
  EXPECT_EQ(m.at("y2"), P("x"));
  EXPECT_EQ(m.at("z2"), P("0"));
  EXPECT_EQ(m.at("y3"), P("x"));
  EXPECT_EQ(m.at("z3"), P("0"));
  EXPECT_EQ(m.at("w1"), P("x | 0"));
  EXPECT_EQ(m.at("v1"), P("x | 0"));
  EXPECT_TRUE(verify_system_resolution(reduce_3sat(c), m).ok);
  // v1 = 0 breaks the clause gadget at x < 0
  auto bad = m;
  bad["v1"] = P("0");
  EXPECT_FALSE(verify_system_resolution(reduce_3sat(c), bad).ok);

  CNF3 pos = cnf(3, {{1, 2, 3}});
  auto all = assignment_to_resolution(pos, {true, true, true});
  for (const char* y : {"y1", "y2", "y3", "v1"}) EXPECT_EQ(all.at(y), P("0"));
  EXPECT_THROW(assignment_to_resolution(pos, {false, false, false}), std::invalid_argument);
}

TEST(VerifySystemResolution, Failures) {
  CNF3 c = cnf(3, {{1, 2, 3}});
  auto sys = reduce_3sat(c);
  auto m = assignment_to_resolution(c, {true, true, true});
  m["w1"] = P("0");
  auto v = verify_system_resolution(sys, m);
  EXPECT_FALSE(v.ok);
  EXPECT_TRUE(v.witness);
  m.erase("w1");
  EXPECT_THROW(verify_system_resolution(sys, m), std::invalid_argument);
}

TEST(VerifySystemResolution, AcceptsExtraClauseMonomials) {
  CNF3 c = cnf(3, {{1, 2, 3}});
  auto m = assignment_to_resolution(c, {true, false, false});
  m["v1"] = trop_add(m.at("v1"), P("1*x^(1/2)"));
  EXPECT_TRUE(verify_system_resolution(reduce_3sat(c), m).ok);
}

TEST(TruthEncoding, BothMonomialsSatisfyPairGadget) {
  TropicalSystem sys = reduce_3sat(cnf(1, {}));
  EXPECT_TRUE(verify_system_resolution(sys, {{"y1", P("0")}, {"z1", P("x")}}).ok);
  EXPECT_TRUE(verify_system_resolution(sys, {{"y1", P("x")}, {"z1", P("0")}}).ok);
  EXPECT_FALSE(verify_system_resolution(sys, {{"y1", P("x | 0")}, {"z1", P("0")}}).ok);
}

TEST(ExtractAssignment, RoundTrip) {
  CNF3 c = cnf(3, {{1, -2, 3}, {-1, 2, 2}});
  for (unsigned bits = 0; bits < 8; ++bits) {
    std::vector<bool> a{bool(bits & 1), bool(bits & 2), bool(bits & 4)};
    if (!c.satisfied_by(a)) continue;
    EXPECT_EQ(extract_assignment(assignment_to_resolution(c, a), 3), a);
  }
  auto m = assignment_to_resolution(c, {true, true, true});
  m["y2"] = P("x | 0");
  EXPECT_THROW(extract_assignment(m, 3), std::invalid_argument);
}

TEST(BruteForceSystem, Examples) {
  CNF3 sat = cnf(3, {{1, -2, 3}});
  auto found = brute_force_system(reduce_3sat(sat), 1, 2);
  ASSERT_TRUE(found);
  EXPECT_TRUE(verify_system_resolution(reduce_3sat(sat), *found).ok);
  EXPECT_TRUE(sat.satisfied_by(extract_assignment(*found, 3)));

  CNF3 unsat = cnf(1, {{1, 1, 1}, {-1, -1, -1}});
  EXPECT_FALSE(unsat.satisfiable());
  EXPECT_FALSE(brute_force_system(reduce_3sat(unsat), 1, 2));

  auto empty = brute_force_system(TropicalSystem{}, 1, 2);
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->empty());
}

TEST(BruteForceSystem, CertificatesHaveMonomialLiterals) {
  CNF3 c = cnf(2, {{1, 2, -1}, {-2, -2, 1}});
  auto m = brute_force_system(reduce_3sat(c), 1, 2);
  ASSERT_TRUE(m);
  for (const char* k : {"y1", "y2", "z1", "z2"}) EXPECT_EQ(reduce(m->at(k)).size(), 1u) << k;
}
