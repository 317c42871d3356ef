#include "onepoint/fibration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "onepoint/linalg.hpp"

namespace onepoint {

namespace {

constexpr int kSteps = 9;

Chart chart_at(const Point2& p) {
  std::size_t d = p.chart();
  return Chart{d, d == 0 ? std::size_t{1} : std::size_t{0}, d == 2 ? std::size_t{1} : std::size_t{2}, p.coords()};
}

// Same variable names as chart_poly.
MPoly uv(const FieldPtr& f, std::size_t i) {
  static const std::vector<std::string> vars{"u", "v"};
  return MPoly::variable(f, vars, i);
}

// One blow-up of the local curve g at the origin; m is its multiplicity there.
MPoly blow_up(const MPoly& g, const BlowupStep& s, int m) {
  const FieldPtr& f = g.field();
  MPoly u = uv(f, 0), v = uv(f, 1);
  if (!s.chart_b) {
    MPoly sub = u * (v + MPoly::constant(f, g.vars(), s.slope));
    return g.compose_var(1, sub).divide_by_var_power(0, m);
  }
  return g.compose_var(0, u * v).divide_by_var_power(1, m);
}

int local_int(const MPoly& a, const MPoly& b) {
  IMult r = local_intersection(a, b);
  if (r.infinite) throw Error(Errc::CommonComponent, "reference members share a component");
  return r.value;
}

struct PlanePart {
  Form3 form;
  int mult = 1;
};

// Irreducible plane components, as far as linear factors go.
std::vector<PlanePart> decompose(const Form3& f) {
  if (auto l = triple_line(f)) return {{l->form.normalized(), 3}};
  std::vector<PlanePart> out;
  Form3 rest = f;
  while (rest.degree() > 1) {
    auto lf = linear_factor(rest);
    if (!lf.factor) break;
    Form3 lform = lf.factor->line.form.normalized();
    auto it = std::find_if(out.begin(), out.end(), [&](const PlanePart& p) { return p.form == lform; });
    if (it != out.end())
      ++it->mult;
    else
      out.push_back({lform, 1});
    rest = lf.factor->cofactor;
  }
  if (rest.degree() >= 1) {
    Form3 r = rest.normalized();
    auto it = std::find_if(out.begin(), out.end(), [&](const PlanePart& p) { return p.form == r; });
    if (it != out.end())
      ++it->mult;
    else
      out.push_back({r, 1});
  }
  return out;
}

}  // namespace

Ledger::Ledger(const Point2& base, std::vector<BlowupStep> steps, std::vector<int> reference_intersections)
    : base_(base), steps_(std::move(steps)), ref_(std::move(reference_intersections)) {
  const std::size_t n = steps_.size();
  prox_.assign(n, std::vector<bool>(n, false));
  const FieldPtr& f = base_.field();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    MPoly e = steps_[i].chart_b ? uv(f, 1) : uv(f, 0);
    auto m = replay(e, i + 1);
    for (std::size_t j = i + 1; j < n; ++j) prox_[j][i] = m[j] == 1;
  }
}

std::vector<int> Ledger::replay(MPoly local, std::size_t start) const {
  std::vector<int> out(steps_.size(), 0);
  for (std::size_t k = start; k < steps_.size(); ++k) {
    if (local.is_zero()) throw Error(Errc::Internal, "zero local curve in replay");
    int m = local.low_degree();
    if (m == 0) break;
    out[k] = m;
    local = blow_up(local, steps_[k], m);
  }
  return out;
}

std::vector<int> Ledger::multiplicities(const Form3& f) const {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "multiplicities of the zero form");
  return replay(chart_poly(f, chart_at(base_)), 0);
}

void Ledger::track(const std::string& name, const Form3& form) {
  curves_[name] = TrackedCurve{name, form, multiplicities(form)};
}

const TrackedCurve& Ledger::curve(const std::string& name) const {
  auto it = curves_.find(name);
  if (it == curves_.end()) throw Error(Errc::UnknownCurve, name);
  return it->second;
}

Ledger resolve_base_point(const Pencil& P) {
  auto bl = base_locus(P);
  if (!bl.single_nine_point) throw Error(Errc::PreconditionFailed, "the pencil has no single 9-fold base point");
  const Point2 p = *bl.single_nine_point;
  const FieldPtr& field = P.field();

  std::vector<Param> refs;
  for (long k = 0; k <= 20 && refs.size() < 2; ++k) {
    Param t = Param::affine(AlgNum(field, k));
    if (mult_at(P.member_form(t), p) == 1) refs.push_back(t);
  }
  if (refs.size() < 2) {
    Param inf = Param::infinity(field);
    if (mult_at(P.member_form(inf), p) == 1) refs.push_back(inf);
  }
  if (refs.size() < 2) throw Error(Errc::Internal, "no two members smooth at the base point");
  const Form3 c0 = P.member_form(refs[0]), c1 = P.member_form(refs[1]);

  const Chart ch = chart_at(p);
  MPoly r0 = chart_poly(c0, ch), r1 = chart_poly(c1, ch);
  std::vector<BlowupStep> steps;
  std::vector<int> ref{local_int(r0, r1)};
  if (ref[0] != kSteps) throw Error(Errc::NonUniqueInfinitelyNear, "reference members meet with multiplicity " + std::to_string(ref[0]));
  for (int k = 0; k < kSteps; ++k) {
    AlgNum a = r0.coeff({1, 0}), b = r0.coeff({0, 1});
    BlowupStep s;
    if (!b.is_zero()) {
      s.slope = -(a / b);
    } else {
      s.chart_b = true;
      s.slope = AlgNum(field);
    }
    if (r0.low_degree() != 1 || r1.low_degree() != 1)
      throw Error(Errc::NonUniqueInfinitelyNear, "reference member singular at center " + std::to_string(k + 1));
    r0 = blow_up(r0, s, 1);
    r1 = blow_up(r1, s, 1);
    steps.push_back(s);
    ref.push_back(local_int(r0, r1));
    if (ref.back() != kSteps - k - 1)
      throw Error(Errc::NonUniqueInfinitelyNear, "intersection " + std::to_string(ref.back()) + " after step " + std::to_string(k + 1));
  }

  Ledger l(p, std::move(steps), std::move(ref));
  l.track("gen0", P.gen0());
  l.track("gen1", P.gen1());
  l.track("C", c0);
  l.track("C'", c1);
  l.track("L", tangent_line(Cubic(c0), p).form);
  if (auto sp = member_singular_at(P, p)) {
    Form3 d = P.member_form(*sp);
    l.track("D'", d);
    if (auto line = triple_line(d)) {
      l.track("l", line->form);
      l.track("3l", d);
    }
  }
  return l;
}

TransformNumbers transform_numbers(const Ledger& l, const std::string& a, const std::string& b, int steps) {
  const auto& A = l.curve(a);
  const auto& B = l.curve(b);
  std::size_t n = steps < 0 ? l.size() : std::min<std::size_t>(static_cast<std::size_t>(steps), l.size());
  int da = A.form.degree(), db = B.form.degree();
  TransformNumbers t{da * db, da * da, db * db};
  for (std::size_t k = 0; k < n; ++k) {
    t.strict_intersection -= A.mult[k] * B.mult[k];
    t.self_a -= A.mult[k] * A.mult[k];
    t.self_b -= B.mult[k] * B.mult[k];
  }
  return t;
}

std::vector<int> local_intersection_sequence(const Ledger& l, const std::string& a, const std::string& b) {
  const auto& A = l.curve(a);
  const auto& B = l.curve(b);
  IMult i0 = intersection_multiplicity(A.form, B.form, l.base_point());
  if (i0.infinite) throw Error(Errc::CommonComponent, a + " and " + b);
  std::vector<int> out{i0.value};
  for (std::size_t k = 0; k < l.size(); ++k) out.push_back(out.back() - A.mult[k] * B.mult[k]);
  return out;
}

std::vector<int> total_transform(const Ledger& l, const std::string& name) {
  const auto& m = l.curve(name).mult;
  std::vector<int> c(l.size(), 0);
  for (std::size_t k = 0; k < l.size(); ++k) {
    c[k] = m[k];
    for (std::size_t i = 0; i < k; ++i)
      if (l.proximate(k, i)) c[k] += c[i];
  }
  return c;
}

FiberConfig fiber_config(const Pencil& P, const Ledger& l, const Param& param) {
  const Form3 M = P.member_form(param);
  const std::size_t n = l.size();
  const Point2& p = l.base_point();

  auto parts = decompose(M);
  std::vector<std::vector<int>> pm;
  std::vector<int> total(n, 0);
  for (const auto& part : parts) {
    pm.push_back(l.multiplicities(part.form));
    for (std::size_t k = 0; k < n; ++k) total[k] += part.mult * pm.back()[k];
  }
  std::vector<int> a(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = total[k] - 1;
    for (std::size_t i = 0; i < k; ++i)
      if (l.proximate(k, i)) a[k] += a[i];
    if (a[k] < 0) throw Error(Errc::Internal, "negative exceptional coefficient");
  }

  FiberConfig fc{param, {}, {}};
  std::vector<std::size_t> ex;  // exceptional indices in component order
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int d = parts[i].form.degree();
    FiberComponent c;
    c.label = parts.size() == 1 ? "M" : "M" + std::to_string(i + 1);
    c.multiplicity = parts[i].mult;
    c.self_intersection = d * d;
    c.genus = (d - 1) * (d - 2) / 2;
    for (int m : pm[i]) {
      c.self_intersection -= m * m;
      c.genus -= m * (m - 1) / 2;
    }
    if (c.genus == 1 && d == 3) {
      auto sp = singular_points(Cubic(parts[i].form));
      for (const auto& q : sp.points)
        if (q != p) c.singularity = sing_type(Cubic(parts[i].form), q).kind;
    }
    fc.components.push_back(c);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] == 0) continue;
    int prox = 0;
    for (std::size_t j = k + 1; j < n; ++j) prox += l.proximate(j, k);
    fc.components.push_back(FiberComponent{"E" + std::to_string(k + 1), a[k], -1 - prox, 0, std::nullopt});
    ex.push_back(k);
  }

  const std::size_t np = parts.size(), nc = fc.components.size();
  fc.adjacency.assign(nc, std::vector<int>(nc, 0));
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t y = x + 1; y < nc; ++y) {
      int v = 0;
      if (y < np) {
        v = parts[x].form.degree() * parts[y].form.degree();
        for (std::size_t k = 0; k < n; ++k) v -= pm[x][k] * pm[y][k];
      } else if (x < np) {
        std::size_t i = ex[y - np];
        v = pm[x][i];
        for (std::size_t j = i + 1; j < n; ++j)
          if (l.proximate(j, i)) v -= pm[x][j];
      } else {
        std::size_t i = ex[x - np], j = ex[y - np];
        v = l.proximate(j, i) ? 1 : 0;
        for (std::size_t k = j + 1; k < n; ++k)
          if (l.proximate(k, i) && l.proximate(k, j)) --v;
      }
      fc.adjacency[x][y] = fc.adjacency[y][x] = v;
    }
  }
  // A fiber has zero intersection with each of its components.
  for (std::size_t x = 0; x < nc; ++x) {
    int s = fc.components[x].multiplicity * fc.components[x].self_intersection;
    for (std::size_t y = 0; y < nc; ++y) s += fc.components[y].multiplicity * fc.adjacency[x][y];
    if (s != 0) throw Error(Errc::Internal, "fiber configuration fails F.X = 0 at " + fc.components[x].label);
  }
  return fc;
}

std::string KodairaType::to_string() const {
  switch (tag) {
    case I: return "I" + std::to_string(n);
    case II: return "II";
    case IIstar: return "II*";
    case Unknown: break;
  }
  return "Unknown";
}

KodairaType kodaira_type(const FiberConfig& fc) {
  const auto& cs = fc.components;
  const std::size_t n = cs.size();
  const auto& adj = fc.adjacency;
  if (n == 1) {
    const auto& c = cs[0];
    if (c.multiplicity == 1 && c.genus == 1 && c.singularity) {
      if (*c.singularity == SingKind::Node) return {KodairaType::I, 1};
      if (*c.singularity == SingKind::Cusp) return {KodairaType::II, 0};
    }
    return {};
  }
  bool all_m2 = std::all_of(cs.begin(), cs.end(), [](const FiberComponent& c) { return c.self_intersection == -2 && c.genus == 0; });
  if (!all_m2) return {};

  bool reduced = std::all_of(cs.begin(), cs.end(), [](const FiberComponent& c) { return c.multiplicity == 1; });
  if (reduced) {
    if (n == 2) return adj[0][1] == 2 ? KodairaType{KodairaType::I, 2} : KodairaType{};
    // A cycle: every vertex meets exactly two others once, and the graph is connected.
    for (std::size_t x = 0; x < n; ++x) {
      int deg = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (adj[x][y] > 1) return {};
        deg += adj[x][y];
      }
      if (deg != 2) return {};
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y)
        if (adj[x][y] && !seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    return count == n ? KodairaType{KodairaType::I, static_cast<int>(n)} : KodairaType{};
  }

  std::multiset<int> mults;
  for (const auto& c : cs) mults.insert(c.multiplicity);
  if (n == 9 && mults == std::multiset<int>{1, 2, 2, 3, 3, 4, 4, 5, 6}) {
    int edges = 0;
    for (std::size_t x = 0; x < n; ++x) {
      int deg = 0, nb = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (adj[x][y] > 1) return {};
        deg += adj[x][y];
        nb += adj[x][y] * cs[y].multiplicity;
      }
      edges += deg;
      if (cs[x].multiplicity == 6 && deg != 3) return {};
      if (2 * cs[x].multiplicity != nb) return {};
    }
    if (edges == 2 * 8) return {KodairaType::IIstar, 0};
  }
  return {};
}

std::optional<int> euler_number(const KodairaType& k) {
  switch (k.tag) {
    case KodairaType::I: return k.n;
    case KodairaType::II: return 2;
    case KodairaType::IIstar: return 10;
    case KodairaType::Unknown: break;
  }
  return std::nullopt;
}

ShiodaTate shioda_tate_rank(int rho, const std::vector<FiberConfig>& fibers) {
  int r = rho - 2;
  for (const auto& f : fibers) r -= static_cast<int>(f.components.size()) - 1;
  if (r < 0) throw Error(Errc::InconsistentInput, "negative Mordell-Weil rank " + std::to_string(r));
  return ShiodaTate{r, r == 0};
}

const char* mp_label_name(MPLabel l) {
  switch (l) {
    case MPLabel::X_1119: return "X_1119";
    case MPLabel::X_211: return "X_211";
    case MPLabel::X_22: return "X_22";
    case MPLabel::Other: break;
  }
  return "Other";
}

MPLabel mp_label(const std::vector<KodairaType>& fibers) {
  std::multiset<std::string> s;
  for (const auto& k : fibers) s.insert(k.to_string());
  if (s == std::multiset<std::string>{"I9", "I1", "I1", "I1"}) return MPLabel::X_1119;
  if (s == std::multiset<std::string>{"II*", "I1", "I1"}) return MPLabel::X_211;
  if (s == std::multiset<std::string>{"II*", "II"}) return MPLabel::X_22;
  return MPLabel::Other;
}

std::optional<std::string> beauville_row(std::vector<int> counts) {
  static const std::vector<std::pair<std::string, std::vector<int>>> rows{
      {"F1", {3, 3, 3, 3}}, {"F2", {4, 4, 2, 2}}, {"F3", {5, 5, 1, 1}},
      {"F4", {6, 3, 2, 1}}, {"F5", {8, 2, 1, 1}}, {"F6", {9, 1, 1, 1}}};
  std::sort(counts.begin(), counts.end(), std::greater<>());
  for (const auto& [name, row] : rows)
    if (row == counts) return name;
  return std::nullopt;
}

Form3 osculating_conic(const Cubic& c, const Point2& p) {
  const FieldPtr& field = c.field();
  Branch b = series_branch(c.form(), p, 5);
  const auto& mons = Form3::monomials(2);
  Mat rows(5, Vec(mons.size(), AlgNum(field)));
  for (std::size_t j = 0; j < mons.size(); ++j) {
    auto r = restrict_to_branch(Form3::monomial(field, mons[j], AlgNum(field, 1L)), b);
    for (std::size_t i = 0; i < 5 && i < r.size(); ++i) rows[i][j] = r[i];
  }
  auto ker = kernel(rows, field, mons.size());
  if (ker.size() != 1) throw Error(Errc::PreconditionFailed, "osculating conic is not unique at " + p.to_string());
  return Form3::from_coeffs(field, 2, ker[0]).normalized();
}

FibrationReport analyze_fibration(const Pencil& P) {
  auto cls = classify(P);
  if (cls.kind != PencilKind::TypeV && cls.kind != PencilKind::FlexType)
    throw Error(Errc::PreconditionFailed, std::string("fibration needs a single 9-fold base point, got ") + pencil_kind_name(cls.kind));
  FibrationReport r{resolve_base_point(P), {}, {}, 0, {}, 0, {}, MPLabel::Other, std::nullopt};
  auto sm = singular_members(P);
  for (const auto& m : sm.members) {
    r.fibers.push_back(fiber_config(P, r.ledger, m.param));
    r.types.push_back(kodaira_type(r.fibers.back()));
  }
  for (const auto& [mult, count] : sm.unresolved) {
    if (mult == 1)
      r.inferred_nodal += count;
    else
      r.unresolved[mult] = count;
  }
  for (int i = 0; i < r.inferred_nodal; ++i) r.types.push_back({KodairaType::I, 1});
  for (const auto& k : r.types)
    if (auto e = euler_number(k)) r.euler_sum += *e;
  r.st = shioda_tate_rank(kRationalEllipticRho, r.fibers);
  r.label = mp_label(r.types);
  bool semistable = r.unresolved.empty() &&
                    std::all_of(r.types.begin(), r.types.end(), [](const KodairaType& k) { return k.tag == KodairaType::I; });
  if (semistable) {
    std::vector<int> counts;
    for (const auto& k : r.types) counts.push_back(k.n);
    r.beauville = beauville_row(counts);
  }
  return r;
}

}  // namespace onepoint
