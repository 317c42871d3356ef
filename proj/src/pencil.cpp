#include "onepoint/pencil.hpp"

#include <algorithm>

#include "onepoint/elimination.hpp"

namespace onepoint {

namespace {

Mat columns_matrix(const std::vector<Form3>& forms) {
  const auto& mons = Form3::monomials(3);
  Mat m(mons.size(), Vec(forms.size(), AlgNum(forms[0].field())));
  for (std::size_t j = 0; j < forms.size(); ++j) {
    auto c = forms[j].coeffs();
    for (std::size_t i = 0; i < mons.size(); ++i) m[i][j] = c[i];
  }
  return m;
}

// Coefficients of b^k in f(u + b v), k = 0..3.
std::vector<AlgNum> binary_restriction(const Form3& f, const std::array<AlgNum, 3>& u,
                                       const std::array<AlgNum, 3>& v) {
  const FieldPtr& field = f.field();
  std::vector<Rat> nodes;
  std::vector<AlgNum> values;
  for (long b = 0; b <= 3; ++b) {
    AlgNum bb(field, b);
    values.push_back(f.eval({u[0] + bb * v[0], u[1] + bb * v[1], u[2] + bb * v[2]}));
    nodes.emplace_back(b);
  }
  UPoly p = interpolate(nodes, values);
  std::vector<AlgNum> out(4, AlgNum(field));
  for (int k = 0; k <= p.degree(); ++k) out[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)];
  return out;
}

std::array<AlgNum, 3> unit(const FieldPtr& field, std::size_t i) {
  std::array<AlgNum, 3> e{AlgNum(field), AlgNum(field), AlgNum(field)};
  e[i] = AlgNum(field, 1L);
  return e;
}

}  // namespace

Param Param::of(const AlgNum& l, const AlgNum& m) {
  if (l.is_zero() && m.is_zero()) throw Error(Errc::BadParam, "parameter (0 : 0)");
  if (!l.is_zero()) return Param{AlgNum(l.field(), 1L), m / l};
  return Param{l, AlgNum(m.field(), 1L)};
}

Pencil::Pencil(Form3 gen0, Form3 gen1) : g0_(std::move(gen0)), g1_(std::move(gen1)) {
  if (g0_.degree() != 3 || g1_.degree() != 3)
    throw Error(Errc::NotAPencilOfCurves, "generators must be cubic forms");
  if (!same_field(g0_.field(), g1_.field())) throw Error(Errc::FieldMismatch, "generators over different fields");
  if (rank(columns_matrix({g0_, g1_}), field(), 2) != 2)
    throw Error(Errc::NotAPencilOfCurves, "generators are linearly dependent");
}

std::optional<Param> Pencil::param_of(const Form3& f) const {
  if (f.is_zero() || f.degree() != 3) return std::nullopt;
  auto ker = kernel(columns_matrix({g0_, g1_, f}), field(), 3);
  if (ker.size() != 1 || ker[0][2].is_zero()) return std::nullopt;
  return Param::of(-ker[0][0], -ker[0][1]);
}

Cubic member(const Pencil& P, const Param& p) { return Cubic(P.member_form(p)); }

Pencil transform(const Pencil& P, const ProjMap& M) {
  return Pencil(substitute_linear(P.gen0(), M), substitute_linear(P.gen1(), M));
}

BaseLocus base_locus(const Pencil& P) {
  BaseLocus out;
  CommonZeros cz;
  try {
    cz = common_zeros(P.gen0(), P.gen1());
  } catch (const Error& e) {
    if (e.code() == Errc::CommonComponent) throw Error(Errc::NotAPencilOfCurves, "generators share a component");
    throw;
  }
  int total = 0;
  for (const auto& p : cz.points) {
    IMult m = intersection_multiplicity(P.gen0(), P.gen1(), p);
    if (m.infinite) throw Error(Errc::NotAPencilOfCurves, "generators share a component");
    total += m.value;
    out.points.emplace_back(p, m);
  }
  out.complete = total == 9;
  if (out.points.size() == 1 && out.points[0].second.value == 9) {
    // Second elimination direction.
    auto other = single_common_point(P.gen0(), P.gen1(), 1);
    if (!other || *other != out.points[0].first)
      throw Error(Errc::Internal, "eliminations in two directions disagree on the base point");
    out.single_nine_point = out.points[0].first;
  }
  return out;
}

BinForm pencil_discriminant(const Pencil& P) {
  std::vector<Rat> nodes;
  std::vector<AlgNum> values;
  for (long t = 0; t <= 12; ++t) {
    nodes.emplace_back(t);
    values.push_back(cubic_discriminant(P.gen0() + P.gen1() * AlgNum(P.field(), t)));
  }
  return BinForm{interpolate(nodes, values), 12};
}

std::vector<int> DiscProfile::multiplicities() const {
  std::vector<int> out;
  for (const auto& [mult, deg] : profile) out.insert(out.end(), static_cast<std::size_t>(deg), mult);
  std::sort(out.rbegin(), out.rend());
  return out;
}

int DiscProfile::distinct_roots() const {
  int n = 0;
  for (const auto& [mult, deg] : profile) n += deg;
  return n;
}

DiscProfile discriminant_profile(const Pencil& P) {
  DiscProfile out;
  out.disc = pencil_discriminant(P);
  if (out.disc.is_zero()) throw Error(Errc::GenericSingular, "every member of the pencil is singular");
  out.profile = squarefree_profile(out.disc.affine);
  RootSet rs = find_roots(out.disc.affine);
  for (const auto& [t, m] : rs.roots) out.roots.emplace_back(Param::affine(t), m);
  if (int mi = out.disc.mult_at_infinity(); mi > 0) {
    out.profile[mi] += 1;
    out.roots.emplace_back(Param::infinity(P.field()), mi);
  }
  out.complete = rs.complete;
  return out;
}

SingularMembers singular_members(const Pencil& P) {
  SingularMembers out;
  DiscProfile dp = discriminant_profile(P);
  out.unresolved = dp.profile;
  for (const auto& [param, mult] : dp.roots) {
    SingularMember sm{param, P.member_form(param), mult, {}, true, false};
    Cubic c(sm.form);
    SingularPoints sp = singular_points(c);
    for (const auto& q : sp.points) sm.singularities.push_back(sing_type(c, q));
    LinearFactorResult lf = linear_factor(sm.form);
    sm.irreducible = !lf.factor.has_value();
    sm.irreducible_certified = lf.certified;
    if (--out.unresolved[mult] == 0) out.unresolved.erase(mult);
    out.members.push_back(std::move(sm));
  }
  return out;
}

std::optional<Param> member_singular_at(const Pencil& P, const Point2& q) {
  Cubic c0(P.gen0()), c1(P.gen1());
  Mat m(3, Vec(2, AlgNum(P.field())));
  for (std::size_t i = 0; i < 3; ++i) {
    m[i][0] = c0.partial(i).eval(q.coords());
    m[i][1] = c1.partial(i).eval(q.coords());
  }
  auto ker = kernel(m, P.field(), 2);
  if (ker.empty()) return std::nullopt;
  if (ker.size() == 2) throw Error(Errc::GenericSingular, "every member is singular at " + q.to_string());
  return Param::of(ker[0][0], ker[0][1]);
}

std::optional<Line> triple_line(const Form3& f) {
  if (f.is_zero() || f.degree() != 3) return std::nullopt;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      Form3 d = f.diff(i).diff(j);
      if (d.is_zero()) continue;
      Line l{d.normalized()};
      if (pow(l.form, 3).normalized() == f.normalized()) return l;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Param first_smooth_param(const Pencil& P) {
  const FieldPtr& field = P.field();
  std::vector<Param> candidates{Param::affine(AlgNum(field)), Param::infinity(field)};
  for (long k = 1; k <= 14; ++k) candidates.push_back(Param::affine(AlgNum(field, k)));
  for (const auto& p : candidates)
    if (!cubic_discriminant(P.member_form(p)).is_zero()) return p;
  throw Error(Errc::GenericSingular, "no smooth member found");
}

const char* pencil_kind_name(PencilKind k) {
  switch (k) {
    case PencilKind::TypeV: return "TypeV";
    case PencilKind::FlexType: return "FlexType";
    case PencilKind::NotOneBasePoint: return "NotOneBasePoint";
    case PencilKind::GenericSingular: return "GenericSingular";
  }
  return "?";
}

PencilClass classify(const Pencil& P) {
  PencilClass out;
  BaseLocus bl = base_locus(P);
  if (!bl.single_nine_point) return out;
  const Point2 p = *bl.single_nine_point;
  out.base_point = p;
  if (pencil_discriminant(P).is_zero()) {
    out.kind = PencilKind::GenericSingular;
    return out;
  }
  Cubic smooth = member(P, first_smooth_param(P));
  auto contradiction = [&](const std::string& why) {
    return Error(Errc::ClassificationContradiction, why + " for pencil " + P.to_string());
  };

  // A triple line in the pencil is singular at p, so it is the member found there.
  if (auto sp = member_singular_at(P, p)) {
    if (auto l = triple_line(P.member_form(*sp))) {
      if (!l->contains(p)) throw contradiction("triple line misses the base point");
      if (!is_flex(smooth, p)) throw contradiction("base point of a triple-line pencil is not a flex");
      out.kind = PencilKind::FlexType;
      out.flex_line = *l;
      out.triple_line_param = *sp;
      return out;
    }
  }
  if (type9_test(smooth, p) != PointType::Type9) throw contradiction("base point is not of type 9");
  ReducibleScan scan = reducible_members_scan(P);
  if (!scan.members.empty()) throw contradiction("reducible member in a pencil without a triple line");
  out.kind = PencilKind::TypeV;
  return out;
}

ReducibleScan reducible_members_scan(const Pencil& P) {
  BaseLocus bl = base_locus(P);
  if (!bl.single_nine_point) throw Error(Errc::PreconditionFailed, "pencil has no single 9-fold base point");
  const Point2 p = *bl.single_nine_point;
  const FieldPtr& field = P.field();
  const std::size_t d = p.chart();
  const std::size_t ia = d == 0 ? 1 : 0, ib = d == 2 ? 1 : 2;
  const auto ea = unit(field, ia), eb = unit(field, ib);
  ReducibleScan out;

  auto try_line = [&](const std::array<AlgNum, 3>& q) {
    auto A = binary_restriction(P.gen0(), p.coords(), q);
    auto B = binary_restriction(P.gen1(), p.coords(), q);
    for (std::size_t k = 0; k < 4; ++k) {
      if (A[k].is_zero() && B[k].is_zero()) continue;
      Param prm = Param::of(B[k], -A[k]);
      Line l = Line::through(p, Point2(q));
      if (divides(l.form, P.member_form(prm))) out.members.push_back({prm, l});
      return;
    }
    throw Error(Errc::NotAPencilOfCurves, "both generators contain a line");
  };

  // Lines through p and ea + s*eb: minors of the coefficient pairs, degree <= 6 in s.
  std::vector<Rat> nodes;
  std::vector<std::vector<AlgNum>> minor_values(6);
  for (long s = 0; s <= 6; ++s) {
    AlgNum sv(field, s);
    std::array<AlgNum, 3> q{ea[0] + sv * eb[0], ea[1] + sv * eb[1], ea[2] + sv * eb[2]};
    auto A = binary_restriction(P.gen0(), p.coords(), q);
    auto B = binary_restriction(P.gen1(), p.coords(), q);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        minor_values[idx++].push_back(A[i] * B[j] - A[j] * B[i]);
    nodes.emplace_back(s);
  }
  UPoly g(field, std::vector<AlgNum>{});
  for (const auto& v : minor_values) g = gcd(g, interpolate(nodes, v));
  if (g.is_zero()) throw Error(Errc::Internal, "every line through the base point lies in a member");
  RootSet rs = find_roots(g);
  out.complete = rs.complete;
  for (const auto& [s, m] : rs.roots)
    try_line({ea[0] + s * eb[0], ea[1] + s * eb[1], ea[2] + s * eb[2]});
  {
    auto A = binary_restriction(P.gen0(), p.coords(), eb);
    auto B = binary_restriction(P.gen1(), p.coords(), eb);
    bool dependent = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) dependent = dependent && (A[i] * B[j] - A[j] * B[i]).is_zero();
    if (dependent) try_line(eb);
  }
  return out;
}

bool is_isotrivial(const Pencil& P) {
  BinForm disc = pencil_discriminant(P);
  if (disc.is_zero()) throw Error(Errc::GenericSingular, "every member of the pencil is singular");
  std::vector<Rat> nodes;
  std::vector<AlgNum> values;
  for (long t = 0; t <= 4; ++t) {
    nodes.emplace_back(t);
    values.push_back(aronhold_ST(P.gen0() + P.gen1() * AlgNum(P.field(), t)).S);
  }
  UPoly a = interpolate(nodes, values).pow(3);
  const UPoly& b = disc.affine;
  // S(t)^3 * disc(s) - S(s)^3 * disc(t) == 0 coefficientwise.
  const std::size_t n = static_cast<std::size_t>(std::max(a.degree(), b.degree())) + 1;
  auto coef = [](const UPoly& f, std::size_t i) {
    return static_cast<int>(i) <= f.degree() ? f[i] : AlgNum(f.field());
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(coef(a, i) * coef(b, j) - coef(a, j) * coef(b, i)).is_zero()) return false;
  return true;
}

}  // namespace onepoint
