#include "onepoint/construct.hpp"

#include <map>

namespace onepoint {

namespace {

std::size_t leading_index(const Form3& f) {
  auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return i;
  throw Error(Errc::ZeroInput, "zero form has no leading monomial");
}

std::optional<Int> exact_int_root(const Int& v, unsigned n) {
  Int r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

std::map<Int, int> factor_int(Int n) {
  std::map<Int, int> out;
  n = abs(n);
  for (Int p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

const char* kRicGen0 =
    "9*w^8*y*z^2 + (84*w^6 - 3)*y^3 - (84*w^3 - 3)*x^3 - 9*(w^8 - 4*w^2)*x^2*z - 9*w*x*z^2"
    " - 9*(4*w^7 - 14*w^4 + w)*x^2*y + z^3 + 9*(w^8 - 14*w^5 + 4*w^2)*x*y^2 + 9*(4*w^7 - w)*y^2*z";

Pencil ric_pencil() {
  FieldPtr f9 = NumberField::cyclotomic(9);
  Pencil P(parse_form(kRicGen0, f9), parse_form("x^3 - y^3 - x*y*z", f9));
  AlgNum w = AlgNum::generator(f9);
  Point2 expected(w, AlgNum(f9, 1L), (w.pow(3) - AlgNum(f9, 1L)) / w);
  BaseLocus bl = base_locus(P);
  if (!bl.single_nine_point || *bl.single_nine_point != expected)
    throw Error(Errc::TranscriptionMismatch, "transcribed pencil does not have the 9-fold point " + expected.to_string());
  return P;
}

Pencil gattazzo_family(const std::string& arg) {
  FieldPtr Q = NumberField::rationals();
  Rat b = parse_rat(arg);
  if (b * b * b == -1) throw Error(Errc::DegenerateFamilyMember, "b^3 = -1 gives a singular member");
  Form3 f = parse_form("x*y^2 + y*z^2 + z*x^2", Q) + Form3::monomial(Q, {1, 1, 1}, AlgNum(Q, Rat(3) * b));
  Cubic c(f);
  return gattazzo_pencil(c, tangential_triangle(c, Point2::rational(Q, 0, 0, 1)));
}

}  // namespace

Form3 reduce_against(const Form3& g, const Form3& f) {
  std::size_t k = leading_index(f);
  Form3 r = g - f * (g.coeffs()[k] / f.coeffs()[k]);
  return r.normalized();
}

Pencil pencil_from_contact(const Cubic& c, const Point2& p) {
  if (!is_smooth(c)) throw Error(Errc::NotSmoothCurve, "contact pencil needs a smooth cubic");
  if (!on_curve(c, p)) throw Error(Errc::NotOnCurve, p.to_string());
  auto ker = contact_kernel(c, p);
  if (ker.size() == 1) throw Error(Errc::NotNineTorsion, p.to_string() + " is not a 9-torsion point");
  if (ker.size() != 2) throw Error(Errc::Internal, "contact kernel of dimension " + std::to_string(ker.size()));
  for (const auto& v : ker) {
    Form3 g = reduce_against(Form3::from_coeffs(c.field(), 3, v), c.form());
    if (!g.is_zero()) return Pencil(c.form(), g);
  }
  throw Error(Errc::Internal, "contact kernel does not contain a second cubic");
}

Triangle tangential_triangle(const Cubic& c, const Point2& p) {
  if (type9_test(c, p) != PointType::Type9) throw Error(Errc::NotType9, p.to_string() + " is not of type 9");
  Triangle t{{p, p, p}, {Line{}, Line{}, Line{}}};
  for (std::size_t i = 0; i < 3; ++i) {
    t.tangents[i] = tangent_line(c, t.vertices[i]);
    Point2 next = third_intersection(c, t.tangents[i], {t.vertices[i], t.vertices[i]});
    if (i < 2) {
      t.vertices[i + 1] = next;
    } else if (next != p) {
      throw Error(Errc::NotType9, "tangent chain from " + p.to_string() + " does not close");
    }
  }
  return t;
}

Pencil gattazzo_pencil(const Cubic& c, const Triangle& t) {
  const FieldPtr& field = c.field();
  const Form3& f = c.form();
  Form3 t2sq = pow(t.tangents[1].form, 2);
  Form3 rhs = pow(t.tangents[0].form, 4) * t.tangents[2].form;
  const auto& cub = Form3::monomials(3);
  const auto& quad = Form3::monomials(2);
  const std::size_t nq = Form3::monomials(5).size();
  const std::size_t ncols = cub.size() + quad.size() + 1;
  Mat m(nq, Vec(ncols, AlgNum(field)));
  AlgNum one(field, 1L);
  auto put = [&](std::size_t col, const Form3& g) {
    auto cs = g.coeffs();
    for (std::size_t i = 0; i < nq; ++i) m[i][col] = cs[i];
  };
  // t2^2 G - Q F - s t1^4 t3 = 0
  for (std::size_t j = 0; j < cub.size(); ++j) put(j, t2sq * Form3::monomial(field, cub[j], one));
  for (std::size_t j = 0; j < quad.size(); ++j)
    put(cub.size() + j, -(Form3::monomial(field, quad[j], one) * f));
  put(ncols - 1, -rhs);
  auto ker = kernel(m, field, ncols);
  if (ker.size() != 2) throw Error(Errc::NotTangentialTriangle, "solution space of dimension " + std::to_string(ker.size()));
  for (const auto& v : ker) {
    if (v.back().is_zero()) continue;
    Form3 g = Form3::from_coeffs(field, 3, Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cub.size())));
    return Pencil(f, reduce_against(g, f));
  }
  throw Error(Errc::NotTangentialTriangle, "no solution with a nonzero section term");
}

TriangleNormal triangle_normalize(const Form3& f, const Triangle& t) {
  ProjMap M(ProjMap::Rows{t.vertices[0].coords(), t.vertices[1].coords(), t.vertices[2].coords()});
  Form3 g = substitute_linear(f, M);
  TriangleNormal out{M, g.coeff(1, 2, 0), g.coeff(0, 1, 2), g.coeff(2, 0, 1), g.coeff(1, 1, 1)};
  Form3 rest = g - Form3::monomial(f.field(), {1, 2, 0}, out.a) - Form3::monomial(f.field(), {0, 1, 2}, out.b) -
               Form3::monomial(f.field(), {2, 0, 1}, out.c) - Form3::monomial(f.field(), {1, 1, 1}, out.d);
  if (!rest.is_zero() || out.a.is_zero() || out.b.is_zero() || out.c.is_zero())
    throw Error(Errc::NormalizationFailed, "not a tangential triangle of the curve: " + g.to_string());
  return out;
}

std::optional<AlgNum> field_root(const AlgNum& x, unsigned n) {
  const FieldPtr& field = x.field();
  if (x.is_zero()) return x;
  if (x.is_rational()) {
    Rat r = x.rational();
    bool neg = sgn(r) < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    auto num = exact_int_root(abs(r.get_num()), n), den = exact_int_root(r.get_den(), n);
    if (num && den) return AlgNum(field, Rat(neg ? -*num : *num, *den));
    if (field->degree() == 1) return std::nullopt;
  }
  std::vector<AlgNum> c(n + 1, AlgNum(field));
  c[0] = -x;
  c[n] = AlgNum(field, 1L);
  auto rs = find_roots(UPoly(field, c));
  if (rs.roots.empty()) return std::nullopt;
  return rs.roots.front().first;
}

CanonicalScale scale_to_canonical(const AlgNum& a, const AlgNum& b, const AlgNum& c, const AlgNum& d) {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw Error(Errc::PreconditionFailed, "scale_to_canonical needs a, b, c nonzero");
  AlgNum r = a * a / (c * b.pow(4));
  auto gamma = field_root(r, 9);
  if (!gamma) throw Error(Errc::RootNotInField, "need a ninth root of " + r.to_string());
  CanonicalScale out{d * b * gamma->pow(3) / a, b * b * gamma->pow(4) / a, (b * gamma->pow(2)).inverse(), *gamma,
                     ProjMap::identity(a.field())};
  out.map = ProjMap::diag(out.alpha, out.beta, out.gamma);
  return out;
}

Rat lambda_class(const Rat& lambda) {
  if (lambda == 0) throw Error(Errc::BadLambda, "lambda must be nonzero");
  Int rep = 1;
  for (const auto& [p, e] : factor_int(lambda.get_num()))
    for (int i = 0; i < e % 3; ++i) rep *= p;
  for (const auto& [p, e] : factor_int(lambda.get_den()))
    for (int i = 0; i < (3 - e % 3) % 3; ++i) rep *= p;
  return Rat(rep);
}

bool lambda_equiv(const Rat& lambda, const Rat& other) {
  if (lambda == 0 || other == 0) throw Error(Errc::BadLambda, "lambda must be nonzero");
  return field_root(AlgNum(NumberField::rationals(), Rat(lambda / other)), 3).has_value();
}

Canonicalization canonicalize(const Pencil& P) {
  PencilClass pc = classify(P);
  if (pc.kind != PencilKind::TypeV) throw Error(Errc::PreconditionFailed, "canonicalization needs a TypeV pencil");
  const FieldPtr& field = P.field();
  const Point2 p = *pc.base_point;
  const Pencil target = named_pencil("canonical");

  // j = 0 members: roots of S(member(1:t)), degree <= 4, and possibly (0:1).
  std::vector<Rat> nodes;
  std::vector<AlgNum> values;
  for (long t = 0; t <= 4; ++t) {
    nodes.emplace_back(t);
    values.push_back(aronhold_ST(P.gen0() + P.gen1() * AlgNum(field, t)).S);
  }
  UPoly s = interpolate(nodes, values);
  std::vector<Param> candidates;
  if (!s.is_zero()) {
    for (const auto& [t, mult] : find_roots(s).roots) candidates.push_back(Param::affine(t));
    if (s.degree() < 4) candidates.push_back(Param::infinity(field));
  }

  // Cyclic relabeling (x,y,z) -> (z,x,y): moves the base point from (1:0:0) to (0:0:1).
  AlgNum o(field, 1L), z(field);
  const ProjMap rot(ProjMap::Rows{{{z, o, z}, {z, z, o}, {o, z, z}}});
  std::string why = "no smooth j = 0 member with parameter in the field";
  for (const auto& prm : candidates) {
    Cubic c0 = member(P, prm);
    if (!is_smooth(c0)) continue;
    try {
      Triangle tri = tangential_triangle(c0, p);
      TriangleNormal tn = triangle_normalize(c0.form(), tri);
      auto lam = field_root(tn.a * tn.a / (tn.c * tn.b.pow(4)), 3);
      if (!lam) throw Error(Errc::RootNotInField, "a^2/(c b^4) is not a cube");
      AlgNum a = *lam * tn.a, b = *lam * tn.b, c = *lam * tn.c, d = *lam * tn.d;
      Canonicalization out{ProjMap::identity(field), prm, a, b, c, d, scale_to_canonical(a, b, c, d)};
      out.map = rot * out.scale.map * tn.map;
      if (!transform(P, out.map).same_span(target))
        throw Error(Errc::NormalizationFailed, "image of the member has zeta = " + out.scale.zeta.to_string());
      return out;
    } catch (const Error& e) {
      if (e.code() != Errc::RootNotInField && e.code() != Errc::NormalizationFailed) throw;
      why = e.what();
    }
  }
  throw Error(Errc::UnresolvedParameter, why);
}

const std::vector<std::string>& named_pencil_names() {
  static const std::vector<std::string> names{"canonical", "gattazzo:<b>", "fermat-flex", "fermat-weier",
                                              "ric",       "hesse",        "nodal-flex"};
  return names;
}

Pencil named_pencil(const std::string& name) {
  FieldPtr Q = NumberField::rationals();
  auto F = [&](const char* s) { return parse_form(s, Q); };
  if (name == "canonical") return Pencil(F("x*y^2 + y*z^2 + z*x^2"), F("x^3 + x*y*z - y^3"));
  if (name.rfind("gattazzo:", 0) == 0) return gattazzo_family(name.substr(9));
  if (name == "fermat-flex") return Pencil(F("x^3 + y^3 + z^3"), F("(x + y)^3"));
  if (name == "fermat-weier") return Pencil(F("y^2*z - x^3 + z^3"), F("z^3"));
  if (name == "ric") return ric_pencil();
  if (name == "hesse") return Pencil(F("x^3 + y^3 + z^3"), F("x*y*z"));
  if (name == "nodal-flex") return Pencil(F("x^3 - y^3 - x*y*z"), F("(3*x - 3*y - z)^3"));
  throw Error(Errc::UnknownName, "unknown pencil name '" + name + "'");
}

}  // namespace onepoint
