#include "onepoint/cubiccurve.hpp"

#include <algorithm>

#include "onepoint/elimination.hpp"
#include "onepoint/upoly.hpp"

namespace onepoint {

// ---------------------------------------------------------------- Line

Line Line::from_coeffs(const AlgNum& a, const AlgNum& b, const AlgNum& c) {
  Form3 f = Form3::linear(a, b, c);
  if (f.is_zero()) throw Error(Errc::ZeroInput, "zero line");
  return Line{f};
}

Line Line::through(const Point2& p, const Point2& q) {
  if (p == q) throw Error(Errc::PreconditionFailed, "line through a repeated point");
  const auto& a = p.coords();
  const auto& b = q.coords();
  return Line::from_coeffs(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]).normalized();
}

AlgNum Line::coeff(std::size_t i) const {
  Exp e{0, 0, 0};
  e[i] = 1;
  return form.poly().coeff(e);
}

std::pair<Point2, Point2> Line::spanning_points() const {
  AlgNum a = coeff(0), b = coeff(1), c = coeff(2), z(form.field());
  std::vector<std::array<AlgNum, 3>> cands{{b, -a, z}, {c, z, -a}, {z, c, -b}};
  std::vector<Point2> pts;
  for (const auto& v : cands) {
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    Point2 p(v);
    if (pts.empty() || !(pts[0] == p)) pts.push_back(p);
    if (pts.size() == 2) return {pts[0], pts[1]};
  }
  throw Error(Errc::Internal, "line has no two spanning points");
}

// ---------------------------------------------------------------- Cubic

Cubic::Cubic(Form3 f) : f_(std::move(f)) {
  if (f_.is_zero() || f_.degree() != 3) throw Error(Errc::PreconditionFailed, "a cubic needs a nonzero degree-3 form");
  for (std::size_t i = 0; i < 3; ++i) d_[i] = f_.diff(i);
}

bool on_curve(const Cubic& c, const Point2& p) { return c.form().eval(p.coords()).is_zero(); }

bool is_smooth_at(const Cubic& c, const Point2& p) {
  for (std::size_t i = 0; i < 3; ++i)
    if (!c.partial(i).eval(p.coords()).is_zero()) return true;
  return false;
}

AlgNum cubic_discriminant(const Form3& f) {
  if (f.degree() != 3) throw Error(Errc::PreconditionFailed, "discriminant needs a cubic");
  Form3 h = hessian_det(f);
  Mat rows;
  for (std::size_t i = 0; i < 3; ++i) rows.push_back(f.diff(i).coeffs());
  for (std::size_t i = 0; i < 3; ++i) {
    Form3 d = h.is_zero() ? Form3::zero(f.field(), 2) : h.diff(i);
    rows.push_back(Form3(d.poly(), 2).coeffs());
  }
  return det(std::move(rows), f.field());
}

bool is_smooth(const Cubic& c) { return !cubic_discriminant(c.form()).is_zero(); }

namespace {

// Singular points from the gcd of two resultants of the partials: the
// spurious intersections of a single pair drop out, so a lone singular
// point is found even when it is not of the root-policy shape.
void refine_singular(const Cubic& c, SingularPoints& out) {
  const FieldPtr& field = c.field();
  for (std::size_t i = 0; i < 3; ++i)
    if (c.partial(i).is_zero()) return;
  ProjMap M = shear_for({c.partial(0), c.partial(1), c.partial(2)});
  std::array<Form3, 3> d;
  for (std::size_t i = 0; i < 3; ++i) d[i] = substitute_linear(c.partial(i), M);
  BinForm r1 = resultant_z(d[0], d[1]), r2 = resultant_z(d[0], d[2]), r3 = resultant_z(d[1], d[2]);
  if (r1.is_zero() || r2.is_zero() || r3.is_zero()) return;
  UPoly g = gcd(gcd(r1.affine, r2.affine), r3.affine);
  bool at_inf = r1.mult_at_infinity() > 0 && r2.mult_at_infinity() > 0 && r3.mult_at_infinity() > 0;
  RootSet rs = find_roots(g);
  bool complete = rs.complete;
  std::vector<std::pair<AlgNum, AlgNum>> xy;
  for (const auto& [t, m] : rs.roots) xy.emplace_back(AlgNum(field, 1L), t);
  if (at_inf) xy.emplace_back(AlgNum(field), AlgNum(field, 1L));
  std::vector<Point2> pts;
  for (const auto& [x0, y0] : xy) {
    UPoly h = gcd(gcd(restrict_z(d[0], x0, y0), restrict_z(d[1], x0, y0)), restrict_z(d[2], x0, y0));
    RootSet zs = find_roots(h);
    complete = complete && zs.complete;
    for (const auto& [z0, m] : zs.roots) {
      Point2 p = map_point(Point2(x0, y0, z0), M);
      if (on_curve(c, p) && !is_smooth_at(c, p) && std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
  }
  if (!complete) return;
  out.points = std::move(pts);
  out.complete = true;
}

}  // namespace

SingularPoints singular_points(const Cubic& c) {
  SingularPoints out;
  const FieldPtr& field = c.field();
  // Pairs of partials first, then fixed combinations for curves whose
  // partials pairwise share a component (e.g. xyz).
  std::vector<std::pair<Form3, Form3>> candidates;
  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : pairs) candidates.emplace_back(c.partial(i), c.partial(j));
  const std::array<std::array<long, 4>, 3> combos{{{2, 3, -1, 5}, {1, -2, 3, 1}, {5, 7, -3, 2}}};
  for (const auto& k : combos) {
    candidates.emplace_back(c.partial(0) + c.partial(1) * AlgNum(field, k[0]) + c.partial(2) * AlgNum(field, k[1]),
                            c.partial(0) + c.partial(1) * AlgNum(field, k[2]) + c.partial(2) * AlgNum(field, k[3]));
  }
  for (const auto& [g, h] : candidates) {
    if (g.is_zero() || h.is_zero()) continue;
    try {
      CommonZeros cz = common_zeros(g, h);
      for (const auto& p : cz.points)
        if (!is_smooth_at(c, p)) out.points.push_back(p);
      out.complete = cz.complete;
      if (!out.complete) refine_singular(c, out);
      return out;
    } catch (const Error& e) {
      if (e.code() != Errc::CommonComponent) throw;
    }
  }
  out.positive_dimensional = true;
  return out;
}

const char* sing_kind_name(SingKind k) {
  switch (k) {
    case SingKind::Node: return "Node";
    case SingKind::Cusp: return "Cusp";
    case SingKind::Other: return "Other";
  }
  return "Other";
}

namespace {

Chart chart_at(const Point2& p) {
  std::size_t d = p.chart();
  std::size_t a = d == 0 ? 1 : 0;
  std::size_t b = d == 2 ? 1 : 2;
  return Chart{d, a, b, p.coords()};
}

// alpha*u + beta*v in the chart at p, as a projective line.
Line local_line(const Chart& ch, const AlgNum& alpha, const AlgNum& beta) {
  std::array<AlgNum, 3> l{AlgNum(alpha.field()), AlgNum(alpha.field()), AlgNum(alpha.field())};
  l[ch.indep] += alpha;
  l[ch.dep] += beta;
  l[ch.dehom] -= alpha * ch.point[ch.indep] + beta * ch.point[ch.dep];
  return Line::from_coeffs(l[0], l[1], l[2]).normalized();
}

}  // namespace

int mult_at(const Form3& f, const Point2& p) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "multiplicity of the zero form");
  return chart_poly(f, chart_at(p)).low_degree();
}

SingInfo sing_type(const Cubic& c, const Point2& p) {
  if (!on_curve(c, p)) throw Error(Errc::NotOnCurve, p.to_string());
  if (is_smooth_at(c, p)) throw Error(Errc::NotSingular, p.to_string() + " is a smooth point");
  Chart ch = chart_at(p);
  MPoly g = chart_poly(c.form(), ch);
  AlgNum a = g.coeff({2, 0}), b = g.coeff({1, 1}), cc = g.coeff({0, 2});
  SingInfo info{p, SingKind::Other, {}};
  const FieldPtr& field = c.field();
  if (a.is_zero() && b.is_zero() && cc.is_zero()) return info;
  AlgNum disc = b * b - AlgNum(field, 4L) * a * cc;
  AlgNum one(field, 1L);
  if (!disc.is_zero()) {
    info.kind = SingKind::Node;
    if (a.is_zero()) {
      // q = v (b u + c v)
      info.tangents.push_back(local_line(ch, AlgNum(field), one));
      info.tangents.push_back(local_line(ch, b, cc));
    } else {
      // q = a (u - r1 v)(u - r2 v) with a r^2 + b r + c = 0
      UPoly quad(field, {cc, b, a});
      auto roots = find_simple_roots(quad);
      if (roots.size() == 2)
        for (const auto& r : roots) info.tangents.push_back(local_line(ch, one, -r));
    }
    return info;
  }
  Line dbl = a.is_zero() ? local_line(ch, AlgNum(field), one) : local_line(ch, one, b / (a * Rat(2)));
  info.tangents.push_back(dbl);
  info.kind = divides(dbl.form, c.form()) ? SingKind::Other : SingKind::Cusp;
  return info;
}

Line tangent_line(const Cubic& c, const Point2& p) {
  if (!on_curve(c, p)) throw Error(Errc::NotOnCurve, p.to_string());
  std::array<AlgNum, 3> g;
  for (std::size_t i = 0; i < 3; ++i) g[i] = c.partial(i).eval(p.coords());
  if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
    throw Error(Errc::SingularPoint, p.to_string() + " is singular");
  return Line::from_coeffs(g[0], g[1], g[2]).normalized();
}

namespace {

// Parameter (s : t) of k on the line s*A + t*B.
std::pair<AlgNum, AlgNum> line_param(const Point2& A, const Point2& B, const Point2& k) {
  const auto& a = A.coords();
  const auto& b = B.coords();
  const auto& v = k.coords();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      AlgNum d = a[i] * b[j] - a[j] * b[i];
      if (d.is_zero()) continue;
      AlgNum s = (v[i] * b[j] - v[j] * b[i]) / d;
      AlgNum t = (a[i] * v[j] - a[j] * v[i]) / d;
      for (std::size_t m = 0; m < 3; ++m)
        if (s * a[m] + t * b[m] != v[m])
          throw Error(Errc::InconsistentKnownPoints, k.to_string() + " is not on the line");
      return {s, t};
    }
  throw Error(Errc::Internal, "degenerate line parametrization");
}

UPoly restrict_to_line(const Form3& f, const Point2& A, const Point2& B) {
  const FieldPtr& field = f.field();
  std::array<UPoly, 3> X;
  for (std::size_t i = 0; i < 3; ++i) X[i] = UPoly(field, {A[i], B[i]});
  UPoly out(field);
  for (const auto& [e, c] : f.poly().terms()) {
    UPoly t(field, {c});
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) t *= X[i];
    out += t;
  }
  return out;
}

}  // namespace

Point2 third_intersection(const Cubic& c, const Line& line, const std::vector<Point2>& known) {
  if (known.size() != 2) throw Error(Errc::PreconditionFailed, "third_intersection needs two known points");
  auto [A, B] = line.spanning_points();
  BinForm h{restrict_to_line(c.form(), A, B), 3};
  if (h.is_zero()) throw Error(Errc::LineComponent, line.to_string() + " is a component");
  for (const auto& k : known) {
    if (!on_curve(c, k)) throw Error(Errc::InconsistentKnownPoints, k.to_string() + " is not on the curve");
    auto [s, t] = line_param(A, B, k);
    if (!s.is_zero()) {
      UPoly q, r;
      divmod(h.affine, UPoly::x_minus(t / s), q, r);
      if (!r.is_zero()) throw Error(Errc::InconsistentKnownPoints, "known points do not divide the restriction");
      h.affine = q;
    } else if (h.affine.degree() >= h.degree) {
      throw Error(Errc::InconsistentKnownPoints, "known points do not divide the restriction");
    }
    h.degree -= 1;
  }
  if (h.affine.degree() == 1) {
    AlgNum t = -(h.affine[0] / h.affine[1]);
    std::array<AlgNum, 3> v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = A[i] + t * B[i];
    return Point2(v);
  }
  return B;
}

bool is_flex(const Cubic& c, const Point2& p) {
  if (!on_curve(c, p)) throw Error(Errc::NotOnCurve, p.to_string());
  if (!is_smooth_at(c, p)) throw Error(Errc::NotSmoothPoint, p.to_string() + " is singular");
  return hessian_det(c.form()).eval(p.coords()).is_zero();
}

std::vector<Vec> contact_kernel(const Cubic& c, const Point2& p) {
  Branch br = series_branch(c.form(), p, 9);
  for (const auto& v : restrict_to_branch(c.form(), br))
    if (!v.is_zero()) throw Error(Errc::Internal, "branch does not parametrize the curve");
  const auto& mons = Form3::monomials(3);
  Mat m(9, Vec(mons.size(), AlgNum(c.field())));
  for (std::size_t j = 0; j < mons.size(); ++j) {
    auto r = restrict_to_branch(Form3::monomial(c.field(), mons[j], AlgNum(c.field(), 1L)), br);
    for (std::size_t k = 0; k < 9; ++k) m[k][j] = r[k];
  }
  return kernel(m, c.field(), mons.size());
}

const char* point_type_name(PointType t) {
  switch (t) {
    case PointType::Type9: return "Type9";
    case PointType::Flex: return "Flex";
    case PointType::Neither: return "Neither";
  }
  return "Neither";
}

PointType type9_test(const Cubic& c, const Point2& p) {
  if (!is_smooth(c)) throw Error(Errc::NotSmoothCurve, "type9_test needs a smooth cubic");
  if (!on_curve(c, p)) throw Error(Errc::NotOnCurve, p.to_string());
  std::size_t dim = contact_kernel(c, p).size();
  if (dim == 1) return PointType::Neither;
  if (dim != 2) throw Error(Errc::Internal, "contact kernel of dimension " + std::to_string(dim));
  return hessian_det(c.form()).eval(p.coords()).is_zero() ? PointType::Flex : PointType::Type9;
}

LinearFactorResult linear_factor(const Form3& f) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "linear_factor of zero");
  const FieldPtr& field = f.field();
  LinearFactorResult out;
  if (f.degree() == 1) {
    Line l{f.normalized()};
    Form3 q;
    divides(l.form, f, &q);
    out.factor = LinearFactor{l, q};
    out.certified = true;
    return out;
  }
  if (f.degree() < 1) {
    out.certified = true;
    return out;
  }
  ProjMap M = shear_for({f});
  ProjMap Minv = M.inverse();
  Form3 fs = substitute_linear(f, M);
  AlgNum one(field, 1L), zero(field);
  // A factor z - a x - b y gives fs(1,0,a) = 0 and fs(0,1,b) = 0.
  RootSet as = find_roots(restrict_z(fs, one, zero));
  RootSet bs = find_roots(restrict_z(fs, zero, one));
  // Over Q the rational root search is exhaustive; in an extension only a
  // fully split restriction rules out missed roots.
  out.certified = field->degree() == 1 || (as.complete && bs.complete);
  for (const auto& [a, ma] : as.roots) {
    for (const auto& [b, mb] : bs.roots) {
      Form3 ls = Form3::linear(-a, -b, one);
      if (!divides(ls, fs)) continue;
      Line l{substitute_linear(ls, Minv).normalized()};
      Form3 q;
      if (!divides(l.form, f, &q)) throw Error(Errc::Internal, "linear factor lost under shear");
      out.factor = LinearFactor{l, q};
      out.certified = true;
      return out;
    }
  }
  return out;
}

}  // namespace onepoint
