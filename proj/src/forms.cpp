#include <mutex>

#include "onepoint/polyforms.hpp"

namespace onepoint {

const std::vector<std::string>& xyz_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

// ---------------------------------------------------------------- Form3

Form3::Form3(MPoly p, int declared_degree) : poly_(std::move(p)) {
  if (poly_.vars() != xyz_vars()) throw Error(Errc::Internal, "Form3 needs variables x, y, z");
  if (!poly_.is_homogeneous()) throw Error(Errc::NotHomogeneous, "not homogeneous: " + poly_.to_string());
  if (poly_.is_zero()) {
    degree_ = declared_degree;
  } else {
    if (declared_degree >= 0 && declared_degree != poly_.degree())
      throw Error(Errc::NotHomogeneous, "expected degree " + std::to_string(declared_degree));
    degree_ = poly_.degree();
  }
}

Form3 Form3::zero(const FieldPtr& field, int degree) { return Form3(MPoly(field, xyz_vars()), degree); }

Form3 Form3::monomial(const FieldPtr& field, const Exp& e, const AlgNum& c) {
  MPoly p(field, xyz_vars());
  p.add_term(e, c);
  return Form3(std::move(p), e[0] + e[1] + e[2]);
}

Form3 Form3::linear(const AlgNum& a, const AlgNum& b, const AlgNum& c) {
  MPoly p(a.field(), xyz_vars());
  p.add_term({1, 0, 0}, a);
  p.add_term({0, 1, 0}, b);
  p.add_term({0, 0, 1}, c);
  return Form3(std::move(p), 1);
}

const std::vector<Exp>& Form3::monomials(int d) {
  static const std::vector<std::vector<Exp>> table = [] {
    std::vector<std::vector<Exp>> t;
    for (int deg = 0; deg <= 40; ++deg) {
      std::vector<Exp> m;
      for (int i = deg; i >= 0; --i)
        for (int j = deg - i; j >= 0; --j) m.push_back({i, j, deg - i - j});
      t.push_back(std::move(m));
    }
    return t;
  }();
  if (d < 0 || d > 40) throw Error(Errc::Internal, "monomials: degree out of range");
  return table[static_cast<std::size_t>(d)];
}

Form3 Form3::from_coeffs(const FieldPtr& field, int degree, const std::vector<AlgNum>& coeffs) {
  const auto& mons = monomials(degree);
  if (coeffs.size() != mons.size()) throw Error(Errc::Internal, "from_coeffs: wrong length");
  MPoly p(field, xyz_vars());
  for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], coeffs[i]);
  return Form3(std::move(p), degree);
}

std::vector<AlgNum> Form3::coeffs() const {
  std::vector<AlgNum> out;
  for (const auto& m : monomials(degree_)) out.push_back(poly_.coeff(m));
  return out;
}

AlgNum Form3::eval(const std::array<AlgNum, 3>& v) const { return poly_.eval({v[0], v[1], v[2]}); }

Form3 Form3::diff(std::size_t var) const { return Form3(poly_.diff(var), degree_ > 0 ? degree_ - 1 : 0); }

Form3& Form3::operator+=(const Form3& o) {
  if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
    throw Error(Errc::NotHomogeneous, "adding forms of different degree");
  int d = is_zero() ? o.degree_ : degree_;
  poly_ += o.poly_;
  degree_ = d;
  return *this;
}

Form3& Form3::operator-=(const Form3& o) { return *this += -o; }

Form3& Form3::operator*=(const AlgNum& c) {
  poly_ *= c;
  return *this;
}

Form3 Form3::normalized() const {
  if (is_zero()) return *this;
  AlgNum inv = poly_.terms().begin()->second.inverse();
  return *this * inv;
}

Form3 operator+(Form3 a, const Form3& b) { return a += b; }
Form3 operator-(Form3 a, const Form3& b) { return a -= b; }
Form3 operator*(const Form3& a, const Form3& b) {
  return Form3(a.poly() * b.poly(), a.degree() + b.degree());
}
Form3 operator*(Form3 a, const AlgNum& c) { return a *= c; }
Form3 operator*(const AlgNum& c, Form3 a) { return a *= c; }

Form3 pow(const Form3& f, unsigned e) { return Form3(f.poly().pow(e), f.degree() * static_cast<int>(e)); }

bool divides(const Form3& divisor, const Form3& f, Form3* quotient) {
  MPoly q, r;
  divide(f.poly(), divisor.poly(), q, r);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = Form3(std::move(q), f.degree() - divisor.degree());
  return true;
}

Form3 hessian_det(const Form3& f) {
  if (f.degree() < 2) throw Error(Errc::PreconditionFailed, "Hessian needs degree >= 2");
  std::array<std::array<MPoly, 3>, 3> h;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h[i][j] = f.poly().diff(i).diff(j);
  MPoly d = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
            h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
            h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  return Form3(std::move(d), 3 * (f.degree() - 2));
}

// ---------------------------------------------------------------- Point2

Point2::Point2(AlgNum x, AlgNum y, AlgNum z) : c_{std::move(x), std::move(y), std::move(z)} {
  std::size_t k = 0;
  while (k < 3 && c_[k].is_zero()) ++k;
  if (k == 3) throw Error(Errc::ZeroInput, "(0 : 0 : 0) is not a projective point");
  if (!c_[k].is_one()) {
    AlgNum inv = c_[k].inverse();
    for (auto& v : c_) v *= inv;
  }
}

Point2 Point2::rational(const FieldPtr& field, const Rat& x, const Rat& y, const Rat& z) {
  return Point2(AlgNum(field, x), AlgNum(field, y), AlgNum(field, z));
}

std::size_t Point2::chart() const {
  std::size_t k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

bool Point2::operator==(const Point2& o) const {
  return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

std::string Point2::to_string() const {
  return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + ")";
}

// ---------------------------------------------------------------- ProjMap

AlgNum det3(const ProjMap::Rows& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ProjMap::ProjMap(Rows m) : m_(std::move(m)) {
  if (det3(m_).is_zero()) throw Error(Errc::SingularMap, "singular 3x3 map");
}

ProjMap ProjMap::identity(const FieldPtr& field) {
  AlgNum one(field, 1L);
  return diag(one, one, one);
}

ProjMap ProjMap::diag(const AlgNum& a, const AlgNum& b, const AlgNum& c) {
  AlgNum z(a.field());
  return ProjMap(Rows{{{a, z, z}, {z, b, z}, {z, z, c}}});
}

AlgNum ProjMap::det() const { return det3(m_); }

ProjMap ProjMap::inverse() const {
  AlgNum inv = det().inverse();
  Rows r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // adjugate: cofactor of (j, i)
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0]) * inv;
    }
  }
  return ProjMap(std::move(r));
}

ProjMap ProjMap::operator*(const ProjMap& o) const {
  Rows r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      AlgNum acc(field());
      for (std::size_t k = 0; k < 3; ++k) acc += m_[i][k] * o.m_[k][j];
      r[i][j] = acc;
    }
  return ProjMap(std::move(r));
}

std::array<AlgNum, 3> ProjMap::apply_row(const std::array<AlgNum, 3>& v) const {
  std::array<AlgNum, 3> out;
  for (std::size_t j = 0; j < 3; ++j) {
    AlgNum acc(field());
    for (std::size_t i = 0; i < 3; ++i) acc += v[i] * m_[i][j];
    out[j] = acc;
  }
  return out;
}

std::string ProjMap::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < 3; ++j) out += (j ? ", " : "") + m_[i][j].to_string();
  }
  return out + "]";
}

Form3 substitute_linear(const Form3& f, const ProjMap& M) {
  const FieldPtr& field = f.field();
  std::array<MPoly, 3> images;
  for (std::size_t j = 0; j < 3; ++j) {
    MPoly l(field, xyz_vars());
    for (std::size_t i = 0; i < 3; ++i) {
      Exp e{0, 0, 0};
      e[i] = 1;
      l.add_term(e, M(i, j));
    }
    images[j] = std::move(l);
  }
  std::array<std::vector<MPoly>, 3> powers;
  for (std::size_t j = 0; j < 3; ++j) powers[j].push_back(MPoly::constant(field, xyz_vars(), AlgNum(field, 1L)));
  MPoly out(field, xyz_vars());
  for (const auto& [e, c] : f.poly().terms()) {
    MPoly t = MPoly::constant(field, xyz_vars(), c);
    for (std::size_t j = 0; j < 3; ++j) {
      auto& pw = powers[j];
      while (static_cast<int>(pw.size()) <= e[j]) pw.push_back(pw.back() * images[j]);
      if (e[j] > 0) t *= pw[static_cast<std::size_t>(e[j])];
    }
    out += t;
  }
  return Form3(std::move(out), f.degree());
}

Point2 map_point(const Point2& q, const ProjMap& M) { return Point2(M.apply_row(q.coords())); }

// ---------------------------------------------------------------- series

namespace {

const std::vector<std::string>& uv_vars() {
  static const std::vector<std::string> v{"u", "v"};
  return v;
}

using Series = std::vector<AlgNum>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n, AlgNum(a[0].field()));
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

// g(t, s(t)) for a bivariate g, modulo t^n.
Series eval_on_series(const MPoly& g, const Series& s, std::size_t n) {
  const FieldPtr& field = g.field();
  std::vector<Series> spow{Series(n, AlgNum(field))};
  spow[0][0] = AlgNum(field, 1L);
  Series out(n, AlgNum(field));
  for (const auto& [e, c] : g.terms()) {
    auto a = static_cast<std::size_t>(e[0]);
    auto b = static_cast<std::size_t>(e[1]);
    while (spow.size() <= b) spow.push_back(series_mul(spow.back(), s, n));
    for (std::size_t k = 0; k + a < n; ++k)
      if (!spow[b][k].is_zero()) out[k + a] += c * spow[b][k];
  }
  return out;
}

}  // namespace

MPoly chart_poly(const Form3& f, const Chart& chart) {
  const FieldPtr& field = f.field();
  std::array<MPoly, 3> sub;
  sub[chart.dehom] = MPoly::constant(field, uv_vars(), AlgNum(field, 1L));
  sub[chart.indep] = MPoly::constant(field, uv_vars(), chart.point[chart.indep]) + MPoly::variable(field, uv_vars(), 0);
  sub[chart.dep] = MPoly::constant(field, uv_vars(), chart.point[chart.dep]) + MPoly::variable(field, uv_vars(), 1);
  std::array<std::vector<MPoly>, 3> powers;
  for (std::size_t j = 0; j < 3; ++j) powers[j].push_back(MPoly::constant(field, uv_vars(), AlgNum(field, 1L)));
  MPoly out(field, uv_vars());
  for (const auto& [e, c] : f.poly().terms()) {
    MPoly t = MPoly::constant(field, uv_vars(), c);
    for (std::size_t j = 0; j < 3; ++j) {
      auto& pw = powers[j];
      while (static_cast<int>(pw.size()) <= e[j]) pw.push_back(pw.back() * sub[j]);
      if (e[j] > 0) t *= pw[static_cast<std::size_t>(e[j])];
    }
    out += t;
  }
  return out;
}

Branch series_branch(const Form3& f, const Point2& p, int order) {
  if (order < 1) throw Error(Errc::PreconditionFailed, "series order must be >= 1");
  if (!f.eval(p.coords()).is_zero()) throw Error(Errc::NotOnCurve, p.to_string() + " is not on the curve");
  bool smooth = false;
  for (std::size_t i = 0; i < 3; ++i) smooth = smooth || !f.diff(i).eval(p.coords()).is_zero();
  if (!smooth) throw Error(Errc::SingularPoint, p.to_string() + " is a singular point");

  const auto n = static_cast<std::size_t>(order) + 1;
  for (std::size_t dehom = 0; dehom < 3; ++dehom) {
    if (p[dehom].is_zero()) continue;
    std::array<AlgNum, 3> rep = p.coords();
    AlgNum inv = rep[dehom].inverse();
    for (auto& v : rep) v *= inv;
    std::size_t a = (dehom == 0) ? 1 : 0;
    std::size_t b = (dehom == 2) ? 1 : 2;
    for (auto [indep, dep] : {std::pair{a, b}, std::pair{b, a}}) {
      Chart chart{dehom, indep, dep, rep};
      MPoly g = chart_poly(f, chart);
      AlgNum gv = g.coeff({0, 1});
      if (gv.is_zero()) continue;
      AlgNum gv_inv = gv.inverse();
      Series s(n, AlgNum(f.field()));
      for (std::size_t k = 1; k < n; ++k) {
        Series val = eval_on_series(g, s, k + 1);
        s[k] = -(val[k] * gv_inv);
      }
      return Branch{chart, TruncSeries{s}};
    }
  }
  throw Error(Errc::SingularPoint, "no admissible chart at " + p.to_string());
}

std::vector<AlgNum> restrict_to_branch(const Form3& g, const Branch& b) {
  MPoly local = chart_poly(g, b.chart);
  return eval_on_series(local, b.series.c, b.series.c.size());
}

}  // namespace onepoint
