// Command-line front end for the tropnp library.
//
// Exit codes: 0 positive answer, 1 negative answer, 2 malformed input.

#include "tropnp/tropnp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tnp;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << text;
}

Document load(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const DocumentError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class T>
T expect(const Document& d, const std::string& path, const char* kind) {
  if (const T* p = std::get_if<T>(&d.payload)) return *p;
  throw InputError(path + ": document.kind: expected '" + kind + "'");
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t j = 0; j < p.size(); ++j) s += (j ? ", " : "") + p[j].str();
  return s + ")";
}

json point_json(const Point& p) {
  json a = json::array();
  for (const auto& v : p) a.push_back(v.str());
  return a;
}

std::string rational_str(const RationalPL& y, const std::vector<std::string>& vars) {
  if (y.h_is_unit()) return to_string(y.g, vars);
  auto wrap = [&](const NPPoly& p) {
    std::string t = to_string(p, vars);
    return p.size() > 1 ? "(" + t + ")" : t;
  };
  return wrap(y.g) + " ⊘ " + wrap(y.h);
}

// A system document, or a single polynomial read as a one-element system.
SystemDoc load_system(const std::string& path) {
  Document d = load(path);
  if (auto* p = std::get_if<PolyDoc>(&d.payload)) return SystemDoc{p->variables, 1, {p->poly}};
  return expect<SystemDoc>(d, path, "system");
}

std::string edge_str(const SkeletonEdge& e) {
  switch (e.kind) {
    case SkeletonEdge::Kind::Segment:
      return "segment " + point_str(e.base) + " -- " + point_str(e.end());
    case SkeletonEdge::Kind::Ray:
      return "ray " + point_str(e.base) + " + t" + point_str(e.direction);
    case SkeletonEdge::Kind::Line:
      break;
  }
  return "line " + point_str(e.base) + " + t" + point_str(e.direction);
}

const char* kind_name(SkeletonEdge::Kind k) {
  switch (k) {
    case SkeletonEdge::Kind::Segment:
      return "segment";
    case SkeletonEdge::Kind::Ray:
      return "ray";
    case SkeletonEdge::Kind::Line:
      break;
  }
  return "line";
}

struct Options {
  bool as_json = false;
  std::string out;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void save(const Options& o, const Document& d) {
  if (!o.out.empty()) write_file(o.out, print_document(d));
}

Point parse_point(const std::string& text, std::size_t dim) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.push_back(Rational::parse(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--point: ") + e.what());
    }
  }
  if (p.size() != dim)
    throw InputError("--point: expected " + std::to_string(dim) + " coordinates, got " + std::to_string(p.size()));
  return p;
}

// --- subcommands -----------------------------------------------------------

int cmd_eval(const Options& o, const std::string& file, const std::string& point) {
  const auto& d = expect<PolyDoc>(load(file), file, "polynomial");
  Point x = parse_point(point, d.variables.size());
  Rational v = d.poly.eval(x);
  json mins = json::array();
  for (auto i : d.poly.argmin(x)) mins.push_back(to_string(NPPoly(d.poly.arity(), {d.poly.monomials()[i]}), d.variables));
  emit(o, {{"value", v.str()}, {"argmin", mins}}, v.str() + "\n");
  return 0;
}

int cmd_reduce(const Options& o, const std::string& file) {
  const auto& d = expect<PolyDoc>(load(file), file, "polynomial");
  NPPoly r = reduce(d.poly);
  emit(o, {{"polynomial", to_string(r, d.variables)}, {"monomials", r.size()}}, to_string(r, d.variables) + "\n");
  save(o, Document{kFormatVersion, PolyDoc{d.variables, r}});
  return 0;
}

int cmd_divide(const Options& o, const std::string& f0, const std::string& f1) {
  const auto& a = expect<PolyDoc>(load(f0), f0, "polynomial");
  const auto& b = expect<PolyDoc>(load(f1), f1, "polynomial");
  if (a.variables != b.variables) throw InputError(f1 + ": document.variables: must match " + f0);
  std::optional<NPPoly> q;
  try {
    q = divide(a.poly, b.poly);
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  if (!q) {
    emit(o, {{"divisible", false}}, "not divisible\n");
    return 1;
  }
  emit(o, {{"divisible", true}, {"quotient", to_string(*q, a.variables)}}, to_string(*q, a.variables) + "\n");
  save(o, Document{kFormatVersion, PolyDoc{a.variables, *q}});
  return 0;
}

int cmd_verify(const Options& o, const std::string& ffile, const std::string& yfile, bool rational) {
  const auto& f = expect<PolyInYDoc>(load(ffile), ffile, "polynomial-in-y");
  Document yd = load(yfile);
  std::optional<RationalPL> y;
  std::vector<std::string> yvars;
  if (auto* p = std::get_if<PolyDoc>(&yd.payload)) {
    y = RationalPL::of(p->poly);
    yvars = p->variables;
  } else if (auto* r = std::get_if<RationalDoc>(&yd.payload)) {
    if (!rational) throw InputError(yfile + ": document.kind: a rational function needs --rational");
    y = r->value;
    yvars = r->variables;
  } else {
    throw InputError(yfile + ": document.kind: expected 'polynomial' or 'rational-function'");
  }
  if (yvars != f.variables) throw InputError(yfile + ": document.variables: must match " + ffile);
  Verdict v = verify_rational_resolution(f.poly, *y);
  if (v.ok) {
    emit(o, {{"ok", true}}, "ok\n");
    return 0;
  }
  emit(o, {{"ok", false}, {"witness", point_json(*v.witness)}},
       "not a resolution: the minimum is attained once at " + point_str(*v.witness) + "\n");
  return 1;
}

int cmd_resolve_monic(const Options& o, const std::string& file) {
  const auto& f = expect<PolyInYDoc>(load(file), file, "polynomial-in-y");
  NPPoly y;
  try {
    y = reduce(minimal_resolution_monic(f.poly));
  } catch (const std::domain_error& e) {
    throw InputError(file + ": " + e.what());
  }
  const std::string t = to_string(y, f.variables);
  emit(o, {{"resolution", t}}, f.indeterminate + " = " + t + "\n");
  save(o, Document{kFormatVersion, PolyDoc{f.variables, y}});
  return 0;
}

int cmd_resolve_rational(const Options& o, const std::string& file) {
  const auto& f = expect<PolyInYDoc>(load(file), file, "polynomial-in-y");
  RationalPL y = minimal_resolution_rational(f.poly);
  emit(o, {{"g", to_string(y.g, f.variables)}, {"h", to_string(y.h, f.variables)}},
       f.indeterminate + " = " + rational_str(y, f.variables) + "\n");
  save(o, Document{kFormatVersion, RationalDoc{f.variables, y}});
  return 0;
}

int cmd_prevariety(const Options& o, const std::string& file, const std::string& svg) {
  SystemDoc s = load_system(file);
  Prevariety pv = prevariety(s.polys);
  if (!svg.empty()) {
    if (pv.dim != 2) throw InputError(file + ": document.variables: --svg needs exactly two variables");
    write_file(svg, render_svg(pv));
  }
  const auto t = pv.t_cells();
  std::ostringstream os;
  json j{{"cells", pv.cells.size()}, {"t_cells", t.size()}, {"dimension", pv.dimension()}};
  os << "cells: " << pv.cells.size() << ", in T: " << t.size() << ", dim T: " << pv.dimension() << "\n";
  json tc = json::array();
  for (auto c : t) {
    os << "  cell " << c << ": dim " << pv.cells[c].dim << " at " << point_str(pv.cells[c].witness) << "\n";
    tc.push_back({{"index", c}, {"dim", pv.cells[c].dim}, {"witness", point_json(pv.cells[c].witness)}});
  }
  j["t"] = tc;
  if (pv.dimension() <= 1) {
    Skeleton sk = extract_skeleton(pv);
    json vs = json::array(), es = json::array();
    for (const auto& v : sk.vertices) {
      os << "vertex " << point_str(v) << "\n";
      vs.push_back(point_json(v));
    }
    for (const auto& e : sk.edges) {
      os << edge_str(e) << "\n";
      es.push_back({{"kind", kind_name(e.kind)}, {"base", point_json(e.base)}, {"direction", point_json(e.direction)}});
    }
    j["vertices"] = vs;
    j["edges"] = es;
  }
  emit(o, j, os.str());
  return t.empty() ? 1 : 0;
}

int cmd_resolve_curve(const Options& o, const std::string& file, bool rational, std::size_t enumerate) {
  SystemDoc s = load_system(file);
  if (s.variables.size() < 2) throw InputError(file + ": document.variables: need x and at least one indeterminate");
  if (s.x_variables != 1) throw InputError(file + ": document.x_variables: curves need exactly one x variable");
  CurveModel c;
  try {
    c = build_curve(prevariety(s.polys));
  } catch (const NotACurve& e) {
    throw InputError(file + ": " + e.what());
  }
  const std::vector<std::string> xv{s.variables[0]};
  auto names = [&](std::size_t j) { return s.variables[j + 1]; };

  std::ostringstream os;
  json res = json::array();
  if (rational) {
    auto ys = resolve_curve_rational(c);
    if (!ys) {
      emit(o, {{"resolvable", false}}, "not resolvable\n");
      return 1;
    }
    json one = json::object();
    for (std::size_t j = 0; j < ys->size(); ++j) {
      os << names(j) << " = " << rational_str((*ys)[j], xv) << "\n";
      one[names(j)] = {{"g", to_string((*ys)[j].g, xv)}, {"h", to_string((*ys)[j].h, xv)}};
    }
    res.push_back(one);
  } else {
    std::vector<std::vector<PL1D>> all;
    if (enumerate > 0) {
      all = enumerate_resolutions(c, enumerate);
    } else if (auto ys = resolve_curve(c)) {
      all.push_back(*ys);
    }
    if (all.empty()) {
      emit(o, {{"resolvable", false}}, "not resolvable\n");
      return 1;
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (all.size() > 1) os << "resolution " << k + 1 << ":\n";
      json one = json::object();
      for (std::size_t j = 0; j < all[k].size(); ++j) {
        const std::string t = to_string(pl_to_np(all[k][j]), xv);
        os << (all.size() > 1 ? "  " : "") << names(j) << " = " << t << "\n";
        one[names(j)] = t;
      }
      res.push_back(one);
    }
  }
  emit(o, {{"resolvable", true}, {"resolutions", res}}, os.str());
  return 0;
}

int cmd_reduce_3sat(const Options& o, const std::string& file) {
  const std::string text = read_file(file);
  CNF3 cnf;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Document d = load(file);
    cnf = expect<CNF3>(d, file, "cnf");
  } else {
    try {
      cnf = parse_dimacs(text);
    } catch (const std::invalid_argument& e) {
      throw InputError(file + ": " + e.what());
    }
  }
  Document d = system_document(reduce_3sat(cnf));
  if (o.out.empty())
    std::cout << print_document(d);
  else
    save(o, d);
  return 0;
}

int cmd_brute(const Options& o, const std::string& file, std::size_t k) {
  const auto& f = expect<PolyInYDoc>(load(file), file, "polynomial-in-y");
  auto ys = brute_force_resolutions(f.poly, k);
  std::ostringstream os;
  json arr = json::array();
  for (const auto& y : ys) {
    os << f.indeterminate << " = " << to_string(y, f.variables) << "\n";
    arr.push_back(to_string(y, f.variables));
  }
  if (ys.empty()) os << "no resolution with at most " << k << " monomials\n";
  emit(o, {{"resolutions", arr}}, os.str());
  return ys.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical Newton-Puiseux resolutions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.as_json, "Print results as JSON");

  std::string file, file2, point, svg;
  bool rational = false;
  std::size_t enumerate = 0, max_support = 2;
  std::function<int()> run;

  auto out_opt = [&](CLI::App* c) { c->add_option("--out", opt.out, "Write the result document to a file"); };

  auto* ev = app.add_subcommand("eval", "Evaluate a polynomial at a point");
  ev->add_option("FILE", file)->required();
  ev->add_option("--point", point, "Comma-separated rationals")->required();
  ev->callback([&] { run = [&] { return cmd_eval(opt, file, point); }; });

  auto* rd = app.add_subcommand("reduce", "Drop monomials that never attain the minimum alone");
  rd->add_option("FILE", file)->required();
  out_opt(rd);
  rd->callback([&] { run = [&] { return cmd_reduce(opt, file); }; });

  auto* dv = app.add_subcommand("divide", "Exact quotient F0 ⊘ F1 if it is a polynomial");
  dv->add_option("F0", file)->required();
  dv->add_option("F1", file2)->required();
  out_opt(dv);
  dv->callback([&] { run = [&] { return cmd_divide(opt, file, file2); }; });

  auto* vr = app.add_subcommand("verify-resolution", "Check that Y resolves F");
  vr->add_option("F", file)->required();
  vr->add_option("Y", file2)->required();
  vr->add_flag("--rational", rational, "Allow a rational-function Y");
  vr->callback([&] { run = [&] { return cmd_verify(opt, file, file2, rational); }; });

  auto* rm = app.add_subcommand("resolve-monic", "Minimal resolution of a monic F");
  rm->add_option("F", file)->required();
  out_opt(rm);
  rm->callback([&] { run = [&] { return cmd_resolve_monic(opt, file); }; });

  auto* rr = app.add_subcommand("resolve-rational", "Minimal rational resolution of F");
  rr->add_option("F", file)->required();
  out_opt(rr);
  rr->callback([&] { run = [&] { return cmd_resolve_rational(opt, file); }; });

  auto* pv = app.add_subcommand("prevariety", "List the cells of the tropical prevariety");
  pv->add_option("SYSTEM", file)->required();
  pv->add_option("--svg", svg, "Plot a planar prevariety");
  pv->callback([&] { run = [&] { return cmd_prevariety(opt, file, svg); }; });

  auto* rc = app.add_subcommand("resolve-curve", "Resolve a tropical curve over the x-axis");
  rc->add_option("SYSTEM", file)->required();
  rc->add_flag("--rational", rational, "Allow rational resolutions");
  rc->add_option("--enumerate", enumerate, "List up to N resolutions");
  rc->callback([&] { run = [&] { return cmd_resolve_curve(opt, file, rational, enumerate); }; });

  auto* r3 = app.add_subcommand("reduce-3sat", "Tropical system for a 3-CNF (DIMACS or JSON)");
  r3->add_option("CNF", file)->required();
  out_opt(r3);
  r3->callback([&] { run = [&] { return cmd_reduce_3sat(opt, file); }; });

  auto* bf = app.add_subcommand("brute-resolve", "All resolutions with bounded support");
  bf->add_option("F", file)->required();
  bf->add_option("--max-support", max_support, "Monomials per candidate")->check(CLI::PositiveNumber);
  bf->callback([&] { run = [&] { return cmd_brute(opt, file, max_support); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
