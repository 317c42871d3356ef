#include "onepoint/upoly.hpp"

#include "onepoint/linalg.hpp"

namespace onepoint {

UPoly::UPoly(FieldPtr field) : field_(std::move(field)) {}

UPoly::UPoly(FieldPtr field, std::vector<AlgNum> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

UPoly UPoly::from_rats(const FieldPtr& field, const std::vector<Rat>& coeffs) {
  std::vector<AlgNum> c;
  c.reserve(coeffs.size());
  for (const auto& r : coeffs) c.emplace_back(field, r);
  return UPoly(field, std::move(c));
}

UPoly UPoly::x_minus(const AlgNum& a) { return UPoly(a.field(), {-a, AlgNum(a.field(), 1L)}); }

UPoly UPoly::from_mpoly(const MPoly& p) {
  if (p.nvars() != 1) throw Error(Errc::PreconditionFailed, "expected a univariate polynomial");
  std::vector<AlgNum> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, AlgNum(p.field()));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0])] = v;
  return UPoly(p.field(), std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), AlgNum(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly& UPoly::operator*=(const UPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<AlgNum> r(c_.size() + o.c_.size() - 1, AlgNum(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const AlgNum& a) {
  for (auto& v : c_) v *= a;
  trim();
  return *this;
}

AlgNum UPoly::eval(const AlgNum& x) const {
  AlgNum acc(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<AlgNum> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return UPoly(field_, std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly r = *this;
  r *= lead().inverse();
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r(field_, {AlgNum(field_, 1L)});
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

bool UPoly::operator==(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  MPoly p(field_, {var});
  for (std::size_t i = 0; i < c_.size(); ++i) p.add_term({static_cast<int>(i)}, c_[i]);
  return p.to_string();
}

UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
UPoly operator*(UPoly a, const AlgNum& c) { return a *= c; }

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(Errc::DivZero, "polynomial division by zero");
  const FieldPtr& field = a.field() ? a.field() : b.field();
  std::vector<AlgNum> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<AlgNum> quo(rem.size() > db ? rem.size() - db : 0, AlgNum(field));
  AlgNum lead_inv = b.lead().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    AlgNum c = rem[k] * lead_inv;
    quo[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i)
      if (!bc[i].is_zero()) rem[k - db + i] -= c * bc[i];
  }
  q = UPoly(field, std::move(quo));
  r = UPoly(field, std::move(rem));
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw Error(Errc::InconsistentInput, "inexact polynomial division");
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

AlgNum resultant(const UPoly& f, const UPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroInput, "resultant of a zero polynomial");
  const FieldPtr& field = f.field();
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  if (size == 0) return AlgNum(field, 1L);
  Mat s(size, Vec(size, AlgNum(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f.coeffs()[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g.coeffs()[n - k];
  return det(std::move(s), field);
}

AlgNum resultant_uni(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroInput, "resultant of a zero polynomial");
  return resultant(UPoly::from_mpoly(f), UPoly::from_mpoly(g));
}

std::vector<SqfLayer> yun(const UPoly& f) {
  std::vector<SqfLayer> out;
  if (f.degree() <= 0) return out;
  UPoly df = f.derivative();
  UPoly g = gcd(f, df);
  UPoly c = exact_div(f, g);
  UPoly d = exact_div(df, g) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UPoly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({i, a});
    c = exact_div(c, a);
    d = exact_div(d, a) - c.derivative();
    ++i;
  }
  return out;
}

Profile squarefree_profile(const UPoly& f) {
  Profile p;
  for (const auto& layer : yun(f)) p[layer.multiplicity] += layer.factor.degree();
  return p;
}

Profile squarefree_profile(const MPoly& f) { return squarefree_profile(UPoly::from_mpoly(f)); }

UPoly interpolate(const std::vector<Rat>& nodes, const std::vector<AlgNum>& values) {
  const std::size_t n = nodes.size();
  if (n == 0 || values.size() != n) throw Error(Errc::Internal, "interpolate: bad input");
  const FieldPtr& field = values[0].field();
  std::vector<AlgNum> dd = values;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) * Rat(1 / (nodes[i] - nodes[i - k]));
      if (i == k) break;
    }
  // Horner in Newton form.
  UPoly result(field, {dd[n - 1]});
  for (std::size_t k = n - 1; k-- > 0;) {
    result *= UPoly(field, {AlgNum(field, Rat(-nodes[k])), AlgNum(field, 1L)});
    result += UPoly(field, {dd[k]});
  }
  return result;
}

AlgNum BinForm::eval(const AlgNum& l, const AlgNum& m) const {
  const FieldPtr& field = l.field();
  AlgNum acc(field);
  for (int k = 0; k <= degree; ++k) {
    AlgNum a = affine[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    acc += a * l.pow(degree - k) * m.pow(k);
  }
  return acc;
}

}  // namespace onepoint
