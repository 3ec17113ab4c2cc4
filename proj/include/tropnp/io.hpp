#pragma once

/**
 * @file io.hpp
 * @brief "tnp/1" JSON documents and SVG plots of planar prevarieties.
 *
 * Every document is an object with "format": "tnp/1" and a "kind":
 *
 *   polynomial         variables, monomials | text
 *   polynomial-in-y    variables, indeterminate, terms[{degree, monomials | text}]
 *   system             variables, x_variables, polynomials[{monomials | text}]
 *   cnf                num_vars, clauses[[int, int, int]...]
 *   rational-function  variables, g{monomials | text}, h{monomials | text}
 *
 * A monomial is {"coeff": "p/q", "exps": ["p/q", ...]}. Rationals are written
 * as strings; plain JSON integers are accepted on input.
 */

#include "tropnp/resolver.hpp"
#include "tropnp/sat.hpp"

#include <json.hpp>

#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tnp {

inline constexpr const char* kFormatVersion = "tnp/1";

/// Malformed input; the message names the offending field.
struct DocumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PolyDoc {
  std::vector<std::string> variables;
  NPPoly poly;
  friend bool operator==(const PolyDoc&, const PolyDoc&) = default;
};

struct PolyInYDoc {
  std::vector<std::string> variables;
  std::string indeterminate = "y";
  PolyInY poly;
  friend bool operator==(const PolyInYDoc&, const PolyInYDoc&) = default;
};

struct SystemDoc {
  std::vector<std::string> variables;
  std::size_t x_variables = 1;
  std::vector<NPPoly> polys;
  friend bool operator==(const SystemDoc&, const SystemDoc&) = default;
};

struct RationalDoc {
  std::vector<std::string> variables;
  RationalPL value;
  friend bool operator==(const RationalDoc&, const RationalDoc&) = default;
};

struct Document {
  std::string format_version = kFormatVersion;
  std::variant<PolyDoc, PolyInYDoc, SystemDoc, CNF3, RationalDoc> payload;
  friend bool operator==(const Document&, const Document&) = default;
};

namespace detail {

using nlohmann::json;

inline Rational rational_field(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
  throw DocumentError(where + ": expected a rational string such as \"3/2\"");
}

inline const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw DocumentError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::vector<std::string> variables_field(const json& j, const std::string& where) {
  const auto& v = require(j, "variables", where);
  if (!v.is_array()) throw DocumentError(where + ".variables: expected an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_string()) throw DocumentError(where + ".variables[" + std::to_string(k) + "]: expected a string");
    out.push_back(v[k].get<std::string>());
    if (!seen.insert(out.back()).second) throw DocumentError(where + ".variables: duplicate name '" + out.back() + "'");
  }
  return out;
}

inline NPPoly poly_field(const json& j, const std::vector<std::string>& vars, const std::string& where) {
  if (j.is_object() && j.contains("text")) {
    try {
      return parse_poly(j.at("text").get<std::string>(), vars);
    } catch (const std::exception& e) {
      throw DocumentError(where + ".text: " + e.what());
    }
  }
  const auto& ms = require(j, "monomials", where);
  if (!ms.is_array() || ms.empty()) throw DocumentError(where + ".monomials: expected a non-empty array");
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const std::string at = where + ".monomials[" + std::to_string(k) + "]";
    Monomial m;
    m.coeff = rational_field(require(ms[k], "coeff", at), at + ".coeff");
    const auto& ex = require(ms[k], "exps", at);
    if (!ex.is_array() || ex.size() != vars.size())
      throw DocumentError(at + ".exps: expected " + std::to_string(vars.size()) + " entries");
    for (std::size_t e = 0; e < ex.size(); ++e)
      m.exps.push_back(rational_field(ex[e], at + ".exps[" + std::to_string(e) + "]"));
    out.push_back(std::move(m));
  }
  return NPPoly(vars.size(), std::move(out));
}

inline json poly_json(const NPPoly& p) {
  json ms = json::array();
  for (const auto& m : p.monomials()) {
    json ex = json::array();
    for (const auto& e : m.exps) ex.push_back(e.str());
    ms.push_back({{"coeff", m.coeff.str()}, {"exps", ex}});
  }
  return {{"monomials", ms}};
}

}  // namespace detail

inline Document parse_document(const nlohmann::json& j) {
  using detail::require;
  const std::string root = "document";
  if (!j.is_object()) throw DocumentError("document: expected a JSON object");
  const auto& fmt = require(j, "format", root);
  if (!fmt.is_string() || fmt.get<std::string>() != kFormatVersion)
    throw DocumentError("document.format: expected \"" + std::string(kFormatVersion) + "\"");
  const auto& kind_j = require(j, "kind", root);
  if (!kind_j.is_string()) throw DocumentError("document.kind: expected a string");
  const std::string kind = kind_j.get<std::string>();

  Document doc;
  if (kind == "polynomial") {
    auto vars = detail::variables_field(j, root);
    doc.payload = PolyDoc{vars, detail::poly_field(j, vars, root)};
  } else if (kind == "polynomial-in-y") {
    auto vars = detail::variables_field(j, root);
    PolyInYDoc d;
    d.variables = vars;
    if (j.contains("indeterminate")) d.indeterminate = j.at("indeterminate").get<std::string>();
    const auto& terms = require(j, "terms", root);
    if (!terms.is_array()) throw DocumentError("document.terms: expected an array");
    std::vector<std::optional<NPPoly>> coeffs;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string at = "document.terms[" + std::to_string(k) + "]";
      const auto& deg = require(terms[k], "degree", at);
      if (!deg.is_number_integer() || deg.get<long>() < 0) throw DocumentError(at + ".degree: expected a natural number");
      const auto i = static_cast<std::size_t>(deg.get<long>());
      if (coeffs.size() <= i) coeffs.resize(i + 1);
      if (coeffs[i]) throw DocumentError(at + ".degree: duplicate degree " + std::to_string(i));
      coeffs[i] = detail::poly_field(terms[k], vars, at);
    }
    try {
      d.poly = PolyInY(vars.size(), std::move(coeffs));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(std::string("document.terms: ") + e.what());
    }
    doc.payload = std::move(d);
  } else if (kind == "system") {
    SystemDoc d;
    d.variables = detail::variables_field(j, root);
    if (j.contains("x_variables")) {
      const auto& xv = j.at("x_variables");
      if (!xv.is_number_integer() || xv.get<long>() < 1 || static_cast<std::size_t>(xv.get<long>()) > d.variables.size())
        throw DocumentError("document.x_variables: expected an integer between 1 and the variable count");
      d.x_variables = static_cast<std::size_t>(xv.get<long>());
    }
    const auto& ps = require(j, "polynomials", root);
    if (!ps.is_array() || ps.empty()) throw DocumentError("document.polynomials: expected a non-empty array");
    for (std::size_t k = 0; k < ps.size(); ++k)
      d.polys.push_back(detail::poly_field(ps[k], d.variables, "document.polynomials[" + std::to_string(k) + "]"));
    doc.payload = std::move(d);
  } else if (kind == "cnf") {
    CNF3 cnf;
    const auto& nv = require(j, "num_vars", root);
    if (!nv.is_number_integer() || nv.get<long>() < 0) throw DocumentError("document.num_vars: expected a natural number");
    cnf.num_vars = static_cast<std::size_t>(nv.get<long>());
    const auto& cl = require(j, "clauses", root);
    if (!cl.is_array()) throw DocumentError("document.clauses: expected an array");
    for (std::size_t k = 0; k < cl.size(); ++k) {
      const std::string at = "document.clauses[" + std::to_string(k) + "]";
      if (!cl[k].is_array() || cl[k].size() != 3) throw DocumentError(at + ": expected exactly 3 literals");
      std::array<Literal, 3> c;
      for (std::size_t l = 0; l < 3; ++l) {
        if (!cl[k][l].is_number_integer()) throw DocumentError(at + ": literals must be integers");
        long v = cl[k][l].get<long>();
        long a = v < 0 ? -v : v;
        if (v == 0 || static_cast<std::size_t>(a) > cnf.num_vars)
          throw DocumentError(at + "[" + std::to_string(l) + "]: literal out of range");
        c[l] = {static_cast<std::size_t>(a - 1), v < 0};
      }
      cnf.clauses.push_back(c);
    }
    doc.payload = std::move(cnf);
  } else if (kind == "rational-function") {
    RationalDoc d;
    d.variables = detail::variables_field(j, root);
    d.value = RationalPL(detail::poly_field(require(j, "g", root), d.variables, "document.g"),
                         detail::poly_field(require(j, "h", root), d.variables, "document.h"));
    doc.payload = std::move(d);
  } else {
    throw DocumentError("document.kind: unknown kind '" + kind + "'");
  }
  return doc;
}

inline Document parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("document: invalid JSON (") + e.what() + ")");
  }
  return parse_document(j);
}

inline Document parse_document(const char* text) { return parse_document(std::string(text)); }

inline nlohmann::json to_json(const Document& doc) {
  using nlohmann::json;
  json j{{"format", doc.format_version}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PolyDoc>) {
          j["kind"] = "polynomial";
          j["variables"] = p.variables;
          j["monomials"] = detail::poly_json(p.poly)["monomials"];
        } else if constexpr (std::is_same_v<T, PolyInYDoc>) {
          j["kind"] = "polynomial-in-y";
          j["variables"] = p.variables;
          j["indeterminate"] = p.indeterminate;
          json terms = json::array();
          for (auto i : p.poly.present()) {
            json t = detail::poly_json(p.poly.coeff(i));
            t["degree"] = i;
            terms.push_back(t);
          }
          j["terms"] = terms;
        } else if constexpr (std::is_same_v<T, SystemDoc>) {
          j["kind"] = "system";
          j["variables"] = p.variables;
          j["x_variables"] = p.x_variables;
          json ps = json::array();
          for (const auto& q : p.polys) ps.push_back(detail::poly_json(q));
          j["polynomials"] = ps;
        } else if constexpr (std::is_same_v<T, CNF3>) {
          j["kind"] = "cnf";
          j["num_vars"] = p.num_vars;
          json cl = json::array();
          for (const auto& c : p.clauses) {
            json lits = json::array();
            for (const auto& l : c) lits.push_back((l.negated ? -1 : 1) * static_cast<long>(l.var + 1));
            cl.push_back(lits);
          }
          j["clauses"] = cl;
        } else {
          j["kind"] = "rational-function";
          j["variables"] = p.variables;
          j["g"] = detail::poly_json(p.value.g);
          j["h"] = detail::poly_json(p.value.h);
        }
      },
      doc.payload);
  return j;
}

inline std::string print_document(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

inline Document system_document(const TropicalSystem& sys) {
  return Document{kFormatVersion, SystemDoc{sys.variable_names(), 1, sys.polys}};
}

// ---------------------------------------------------------------------------
// SVG

namespace detail {

inline std::string fmt3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace detail

/// Plots the 0- and 1-dimensional cells of T for a system in two variables.
/// The window is the bounding box of the vertices padded by one unit; rays
/// and lines are clipped to it.
inline std::string render_svg(const Prevariety& pv) {
  if (pv.dim != 2) throw std::invalid_argument("render_svg: ambient dimension must be 2");
  Prevariety low = pv;
  for (std::size_t c = 0; c < low.cells.size(); ++c)
    if (low.cells[c].dim > 1) low.in_T[c] = false;
  const Skeleton sk = extract_skeleton(low);

  std::vector<Point> anchors = sk.vertices;
  if (anchors.empty())
    for (const auto& e : sk.edges) anchors.push_back(e.base);
  if (anchors.empty()) anchors.push_back(Point(2));
  Rational lo[2] = {anchors[0][0], anchors[0][1]}, hi[2] = {anchors[0][0], anchors[0][1]};
  for (const auto& p : anchors)
    for (int k = 0; k < 2; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  for (int k = 0; k < 2; ++k) {
    lo[k] -= 1;
    hi[k] += 1;
  }

  // largest s ≥ 0 keeping base + s·dir inside the window
  auto reach = [&](const Point& base, const Point& dir) {
    std::optional<Rational> s;
    for (int k = 0; k < 2; ++k) {
      if (dir[k].sign() == 0) continue;
      Rational bound = ((dir[k].sign() > 0 ? hi[k] : lo[k]) - base[k]) / dir[k];
      if (!s || bound < *s) s = bound;
    }
    return s.value_or(Rational(0));
  };
  auto along = [](const Point& base, const Point& dir, const Rational& s) {
    return Point{base[0] + s * dir[0], base[1] + s * dir[1]};
  };

  const double size = 400.0, margin = 20.0;
  const double w = (hi[0] - lo[0]).to_double(), h = (hi[1] - lo[1]).to_double();
  const double scale = (size - 2 * margin) / std::max(w, h);
  auto px = [&](const Point& p) {
    return std::pair{margin + ((p[0] - lo[0]).to_double()) * scale,
                     size - margin - ((p[1] - lo[1]).to_double()) * scale};
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"#ffffff\"/>\n";
  for (const auto& e : sk.edges) {
    Point a, b;
    const char* colour = "#1f77b4";
    switch (e.kind) {
      case SkeletonEdge::Kind::Segment:
        a = e.base;
        b = e.end();
        break;
      case SkeletonEdge::Kind::Ray:
        a = e.base;
        b = along(e.base, e.direction, reach(e.base, e.direction));
        colour = "#ff7f0e";
        break;
      case SkeletonEdge::Kind::Line: {
        Point back{-e.direction[0], -e.direction[1]};
        a = along(e.base, back, reach(e.base, back));
        b = along(e.base, e.direction, reach(e.base, e.direction));
        colour = "#2ca02c";
        break;
      }
    }
    auto [x1, y1] = px(a);
    auto [x2, y2] = px(b);
    os << "<line x1=\"" << detail::fmt3(x1) << "\" y1=\"" << detail::fmt3(y1) << "\" x2=\"" << detail::fmt3(x2)
       << "\" y2=\"" << detail::fmt3(y2) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
  }
  for (const auto& v : sk.vertices) {
    auto [x, y] = px(v);
    os << "<circle cx=\"" << detail::fmt3(x) << "\" cy=\"" << detail::fmt3(y) << "\" r=\"3\" fill=\"#d62728\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tnp
