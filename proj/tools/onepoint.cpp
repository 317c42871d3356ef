// onepoint: command-line front end for pencils of cubics with one base point.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "onepoint/construct.hpp"
#include "onepoint/fibration.hpp"
#include "onepoint/report.hpp"

using namespace onepoint;

namespace {

enum Exit { kOk = 0, kInput = 2, kPrecondition = 3, kInternal = 4 };

int exit_code(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::NotHomogeneous:
    case Errc::UnsupportedField:
    case Errc::FieldMismatch:
    case Errc::NotAPencilOfCurves:
    case Errc::UnknownName:
    case Errc::BadParam:
    case Errc::ZeroInput:
    case Errc::UnknownCurve:
      return kInput;
    case Errc::Internal:
    case Errc::ClassificationContradiction:
    case Errc::InconsistentInput:
    case Errc::TranscriptionMismatch:
      return kInternal;
    default:
      return kPrecondition;
  }
}

struct PencilArgs {
  std::vector<std::string> forms;
  std::string named;
  std::string field = "Q";
};

void add_pencil_options(CLI::App* cmd, PencilArgs& a) {
  auto* p = cmd->add_option("--pencil", a.forms, "two generators F G")->expected(2);
  auto* n = cmd->add_option("--named", a.named, "named pencil")->excludes(p);
  p->excludes(n);
  cmd->add_option("--field", a.field, "Q or cyclotomic:N");
}

Pencil load_pencil(const PencilArgs& a) {
  if (!a.named.empty()) return named_pencil(a.named);
  if (a.forms.size() != 2) throw Error(Errc::ParseError, "give --pencil F G or --named NAME");
  FieldPtr k = NumberField::from_spec(a.field);
  return Pencil(parse_form(a.forms[0], k), parse_form(a.forms[1], k));
}

Param parse_param(const std::string& s, const FieldPtr& k) {
  if (s == "inf" || s == "oo") return Param::infinity(k);
  return Param::affine(AlgNum(k, parse_rat(s)));
}

int cmd_analyze(const PencilArgs& a, const std::string& json_path) {
  Report r = analyze_pencil(load_pencil(a));
  std::cout << format_report(r);
  if (!json_path.empty()) {
    std::string text = to_json(r).dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(json_path);
      if (!out) throw Error(Errc::ParseError, "cannot write " + json_path);
      out << text;
    }
  }
  return kOk;
}

int cmd_construct(const std::string& curve, const std::string& point, const std::string& field) {
  FieldPtr k = NumberField::from_spec(field);
  Cubic c(parse_form(curve, k));
  Point2 p = parse_point(point, k);
  Pencil P = pencil_from_contact(c, p);
  PencilClass pc = classify(P);
  std::cout << "pencil:         <" << format_form(P.gen0()) << ", " << format_form(P.gen1()) << ">\n";
  std::cout << "classification: " << pencil_kind_name(pc.kind) << "\n";
  if (pc.base_point) std::cout << "base point:     " << pc.base_point->to_string() << "\n";
  if (pc.flex_line) std::cout << "3l member:      3*(" << pc.flex_line->to_string() << ") at " << pc.triple_line_param->to_string() << "\n";
  return kOk;
}

int cmd_gattazzo(const std::string& curve, const std::string& point, const std::string& field) {
  FieldPtr k = NumberField::from_spec(field);
  Cubic c(parse_form(curve, k));
  Triangle t = tangential_triangle(c, parse_point(point, k));
  Pencil P = gattazzo_pencil(c, t);
  std::cout << "triangle:";
  for (const auto& v : t.vertices) std::cout << " " << v.to_string();
  std::cout << "\ntangents:";
  for (const auto& l : t.tangents) std::cout << " " << l.to_string();
  std::cout << "\ncompanion cubic (mod F): " << format_form(reduce_against(P.gen1(), c.form())) << "\n";
  auto bl = base_locus(P);
  if (bl.single_nine_point) std::cout << "base point: " << bl.single_nine_point->to_string() << "\n";
  return kOk;
}

int cmd_canonical(const PencilArgs& a) {
  Pencil P = load_pencil(a);
  Canonicalization cz = canonicalize(P);
  std::cout << "j=0 member:   " << cz.j0_param.to_string() << "\n";
  std::cout << "triangle form: a=" << cz.a.to_string() << " b=" << cz.b.to_string() << " c=" << cz.c.to_string()
            << " d=" << cz.d.to_string() << "\n";
  std::cout << "scaling:      alpha=" << cz.scale.alpha.to_string() << " beta=" << cz.scale.beta.to_string()
            << " gamma=" << cz.scale.gamma.to_string() << " zeta=" << cz.scale.zeta.to_string() << "\n";
  std::cout << "map:          " << cz.map.to_string() << "\n";
  Pencil moved = transform(P, cz.map);
  std::cout << "image:        <" << format_form(moved.gen0()) << ", " << format_form(moved.gen1()) << ">\n";
  return kOk;
}

int cmd_resolve(const PencilArgs& a) {
  Pencil P = load_pencil(a);
  Ledger l = resolve_base_point(P);
  std::cout << "base point: " << l.base_point().to_string() << "\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& s = l.steps()[i];
    std::cout << "step " << i + 1 << ": " << (s.chart_b ? std::string("chart u = u*v") : "chart v = u*(v + c), c = " + s.slope.to_string())
              << "  I = " << l.reference_intersections()[i + 1] << "\n";
  }
  for (const auto& [name, c] : l.curves()) {
    std::cout << name << " = " << format_form(c.form) << "\n  multiplicities";
    for (int m : c.mult) std::cout << " " << m;
    std::cout << "\n  total transform";
    for (int m : total_transform(l, name)) std::cout << " " << m;
    std::cout << "\n";
  }
  return kOk;
}

// Cells of a real affine grid (z = 1) where the member changes sign.
int cmd_plot(const PencilArgs& a, const std::string& params, const std::string& out_path, double radius, int grid) {
  Pencil P = load_pencil(a);
  if (P.field()->degree() != 1) throw Error(Errc::PreconditionFailed, "plotting needs rational coefficients");
  std::vector<Param> ps;
  std::stringstream ss(params);
  for (std::string item; std::getline(ss, item, ',');) ps.push_back(parse_param(item, P.field()));
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  const double size = 600.0, cell = size / grid;
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + out_path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    Form3 f = P.member_form(ps[pi]);
    std::vector<std::pair<std::array<int, 3>, double>> terms;
    for (const auto& [e, c] : f.poly().terms()) terms.push_back({{e[0], e[1], e[2]}, c.rational().get_d()});
    auto eval = [&](double x, double y) {
      double s = 0;
      for (const auto& [e, c] : terms) s += c * std::pow(x, e[0]) * std::pow(y, e[1]);
      return s;
    };
    std::vector<std::vector<double>> v(grid + 1, std::vector<double>(grid + 1));
    for (int i = 0; i <= grid; ++i)
      for (int j = 0; j <= grid; ++j) v[i][j] = eval(-radius + 2 * radius * i / grid, radius - 2 * radius * j / grid);
    out << "<g fill=\"" << colors[pi % 6] << "\"><title>" << ps[pi].to_string() << "</title>\n";
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        double lo = std::min({v[i][j], v[i + 1][j], v[i][j + 1], v[i + 1][j + 1]});
        double hi = std::max({v[i][j], v[i + 1][j], v[i][j + 1], v[i + 1][j + 1]});
        if (lo <= 0 && hi >= 0) out << "<rect x=\"" << i * cell << "\" y=\"" << j * cell << "\" width=\"" << cell << "\" height=\"" << cell << "\"/>\n";
      }
    out << "</g>\n";
  }
  out << "</svg>\n";
  std::cout << "wrote " << out_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pencils of plane cubics with a single 9-fold base point"};
  app.require_subcommand(1);

  PencilArgs pa;
  std::string json_path;
  auto* analyze = app.add_subcommand("analyze", "classify a pencil and describe its fibration");
  add_pencil_options(analyze, pa);
  analyze->add_option("--json", json_path, "write the JSON report to PATH (- for stdout)");

  std::string curve, point, field = "Q";
  auto* construct = app.add_subcommand("construct", "pencil of cubics meeting a cubic 9 times at a point");
  construct->add_option("--curve", curve)->required();
  construct->add_option("--point", point)->required();
  construct->add_option("--field", field);

  auto* gattazzo = app.add_subcommand("gattazzo", "pencil from a tangential triangle");
  gattazzo->add_option("--curve", curve)->required();
  gattazzo->add_option("--point", point)->required();
  gattazzo->add_option("--field", field);

  PencilArgs ca;
  auto* canonical = app.add_subcommand("canonical", "projective map onto the canonical pencil");
  add_pencil_options(canonical, ca);

  PencilArgs ra;
  auto* resolve = app.add_subcommand("resolve", "blow up the base point nine times");
  add_pencil_options(resolve, ra);

  PencilArgs pl;
  std::string params = "0,inf", out_path = "pencil.svg";
  double radius = 3.0;
  int grid = 300;
  auto* plot = app.add_subcommand("plot", "SVG of real members in the chart z = 1");
  add_pencil_options(plot, pl);
  plot->add_option("--params", params, "comma-separated parameters t or inf");
  plot->add_option("--out", out_path);
  plot->add_option("--radius", radius);
  plot->add_option("--grid", grid)->check(CLI::Range(10, 2000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) return cmd_analyze(pa, json_path);
    if (*construct) return cmd_construct(curve, point, field);
    if (*gattazzo) return cmd_gattazzo(curve, point, field);
    if (*canonical) return cmd_canonical(ca);
    if (*resolve) return cmd_resolve(ra);
    if (*plot) return cmd_plot(pl, params, out_path, radius, grid);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
