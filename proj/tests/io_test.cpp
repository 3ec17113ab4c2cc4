#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using tnp::testing::P;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Document, PolynomialForms) {
  auto a = parse_document(R"({"format":"tnp/1","kind":"polynomial","variables":["x"],
    "monomials":[{"coeff":"0","exps":["1"]},{"coeff":"0","exps":["0"]}]})");
  auto b = parse_document(R"({"format":"tnp/1","kind":"polynomial","variables":["x"],"text":"x ⊕ 0"})");
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::get<PolyDoc>(a.payload).poly, P("x | 0"));
}

TEST(Document, RoundTripEveryKind) {
  std::vector<Document> docs;
  docs.push_back({kFormatVersion, PolyDoc{{"x", "y"}, P("1/2*x^(3/2)*y | -1", 2)}});
  docs.push_back({kFormatVersion, PolyInYDoc{{"x"}, "y", PolyInY(1, {P("x | 0"), std::nullopt, P("0")})}});
  docs.push_back({kFormatVersion, SystemDoc{{"x", "y"}, 1, {P("y | x | 0", 2), P("y | 1", 2)}}});
  CNF3 c;
  c.num_vars = 3;
  c.clauses.push_back({Literal{0, false}, Literal{1, true}, Literal{2, false}});
  docs.push_back({kFormatVersion, c});
  docs.push_back({kFormatVersion, RationalDoc{{"x"}, RationalPL(P("0"), P("x | 0"))}});
  for (const auto& d : docs) EXPECT_EQ(parse_document(print_document(d)), d);
}

TEST(Document, ErrorsNameTheField) {
  EXPECT_NE(error_of("{"), "");
  EXPECT_NE(error_of(R"({"format":"tnp/2","kind":"polynomial"})").find("document.format"), std::string::npos);
  EXPECT_NE(error_of(R"({"format":"tnp/1","kind":"polynomial","variables":["x"],
    "monomials":[{"coeff":"1/0","exps":["1"]}]})").find("monomials[0].coeff"), std::string::npos);
  EXPECT_NE(error_of(R"({"format":"tnp/1","kind":"polynomial","variables":["x"],
    "monomials":[{"coeff":"1","exps":["1","2"]}]})").find("monomials[0].exps"), std::string::npos);
  EXPECT_NE(error_of(R"({"format":"tnp/1","kind":"cnf","num_vars":2,"clauses":[[1,2,3]]})").find("clauses[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":"tnp/1","kind":"polynomial-in-y","variables":["x"],
    "terms":[{"degree":0,"text":"x"}]})").find("document.terms"), std::string::npos);
  EXPECT_NE(error_of(R"({"format":"tnp/1","kind":"nope"})").find("document.kind"), std::string::npos);
}

TEST(Document, SystemFromReduction) {
  CNF3 c;
  c.num_vars = 1;
  auto d = system_document(reduce_3sat(c));
  const auto& s = std::get<SystemDoc>(d.payload);
  EXPECT_EQ(s.variables, (std::vector<std::string>{"x", "y1", "z1"}));
  EXPECT_EQ(s.x_variables, 1u);
  EXPECT_EQ(parse_document(print_document(d)), d);
}

TEST(Svg, DeterministicAndPlanarOnly) {
  auto pv = prevariety({P("y | x | 0", 2)});
  std::string a = render_svg(pv), b = render_svg(prevariety({P("y | x | 0", 2)}));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n') > 3, true);
  EXPECT_THROW(render_svg(prevariety({P("x | 0")})), std::invalid_argument);
}
