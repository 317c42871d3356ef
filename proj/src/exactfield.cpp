#include "onepoint/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace onepoint {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::DivZero: return "DivZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::ParseError: return "ParseError";
    case Errc::SingularMap: return "SingularMap";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::NotSingular: return "NotSingular";
    case Errc::LineComponent: return "LineComponent";
    case Errc::InconsistentKnownPoints: return "InconsistentKnownPoints";
    case Errc::NotSmoothPoint: return "NotSmoothPoint";
    case Errc::NotSmoothCurve: return "NotSmoothCurve";
    case Errc::JUnavailable: return "JUnavailable";
    case Errc::BadParam: return "BadParam";
    case Errc::NotAPencilOfCurves: return "NotAPencilOfCurves";
    case Errc::GenericSingular: return "GenericSingular";
    case Errc::ClassificationContradiction: return "ClassificationContradiction";
    case Errc::NotNineTorsion: return "NotNineTorsion";
    case Errc::NotType9: return "NotType9";
    case Errc::NotTangentialTriangle: return "NotTangentialTriangle";
    case Errc::NormalizationFailed: return "NormalizationFailed";
    case Errc::RootNotInField: return "RootNotInField";
    case Errc::BadLambda: return "BadLambda";
    case Errc::UnknownName: return "UnknownName";
    case Errc::DegenerateFamilyMember: return "DegenerateFamilyMember";
    case Errc::TranscriptionMismatch: return "TranscriptionMismatch";
    case Errc::NonUniqueInfinitelyNear: return "NonUniqueInfinitelyNear";
    case Errc::UnknownCurve: return "UnknownCurve";
    case Errc::UnresolvedParameter: return "UnresolvedParameter";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::CommonComponent: return "CommonComponent";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(Errc::ParseError, "not a rational: '" + s + "'");
    return Rat(Int(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error(Errc::ParseError, "not a rational: '" + s + "'");
  Int d(strip_plus(den));
  if (d == 0) throw Error(Errc::DivZero, "zero denominator in '" + s + "'");
  Rat r(Int(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- qpoly

namespace qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.empty()) throw Error(Errc::DivZero, "polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
  const Rat lead_inv = 1 / b.back();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    Rat c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat inv = 1 / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Rat eval(const QPoly& p, const Rat& x) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace qpoly

// ---------------------------------------------------------------- NumberField

NumberField::NumberField(std::vector<Rat> modulus, std::string label, unsigned root_order)
    : modulus_(std::move(modulus)), label_(std::move(label)), root_order_(root_order) {
  qpoly::trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw Error(Errc::UnsupportedField, "modulus must be monic of degree >= 1");
}

FieldPtr NumberField::rationals() {
  return std::make_shared<const NumberField>(std::vector<Rat>{Rat(-1), Rat(1)}, "Q", 1);
}

std::vector<Rat> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(Errc::UnsupportedField, "cyclotomic:0");
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  qpoly::QPoly p(n + 1, Rat(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    qpoly::QPoly q, r;
    qpoly::divmod(p, cyclotomic_polynomial(d), q, r);
    p = q;
  }
  return p;
}

FieldPtr NumberField::cyclotomic(unsigned n) {
  if (n == 0 || n > 200) throw Error(Errc::UnsupportedField, "cyclotomic:" + std::to_string(n));
  if (n == 1) return rationals();
  // For even n the order of w is still n; Phi_n(w) = 0 makes w a primitive n-th root.
  return std::make_shared<const NumberField>(cyclotomic_polynomial(n),
                                             "cyclotomic:" + std::to_string(n), n);
}

FieldPtr NumberField::with_modulus(std::vector<Rat> modulus, std::string label) {
  qpoly::trim(modulus);
  return std::make_shared<const NumberField>(std::move(modulus), std::move(label), 0);
}

FieldPtr NumberField::from_spec(std::string_view spec) {
  if (spec == "Q" || spec == "q" || spec == "cyclotomic:1") return rationals();
  constexpr std::string_view prefix = "cyclotomic:";
  if (spec.substr(0, prefix.size()) == prefix) {
    std::string num(spec.substr(prefix.size()));
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(Errc::UnsupportedField, std::string(spec));
    return cyclotomic(static_cast<unsigned>(std::stoul(num)));
  }
  throw Error(Errc::UnsupportedField, "unknown field spec '" + std::string(spec) + "'");
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- AlgNum

namespace {

void reduce_mod(std::vector<Rat>& c, const std::vector<Rat>& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k] == 0) continue;
    Rat top = c[k];
    c[k] = 0;
    for (std::size_t i = 0; i < d; ++i) c[k - d + i] -= top * m[i];
  }
  c.resize(d, Rat(0));
}

}  // namespace

AlgNum::AlgNum(FieldPtr field) : field_(std::move(field)), coords_(field_->degree(), Rat(0)) {}

AlgNum::AlgNum(FieldPtr field, const Rat& value) : AlgNum(std::move(field)) {
  coords_[0] = value;
  coords_[0].canonicalize();  // callers may pass an uncanonicalized mpq
}

AlgNum::AlgNum(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() < field_->degree()) coords_.resize(field_->degree(), Rat(0));
  for (auto& c : coords_) c.canonicalize();
  reduce_mod(coords_, field_->modulus());
}

AlgNum AlgNum::generator(const FieldPtr& field) {
  std::vector<Rat> c(2, Rat(0));
  c[1] = 1;
  return AlgNum(field, std::move(c));
}

bool AlgNum::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& r) { return r == 0; });
}

bool AlgNum::is_one() const { return is_rational() && coords_[0] == 1; }

bool AlgNum::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rat& r) { return r == 0; });
}

const Rat& AlgNum::rational() const {
  if (!is_rational()) throw Error(Errc::PreconditionFailed, "element is not rational: " + to_string());
  return coords_[0];
}

void AlgNum::check_same(const AlgNum& o) const {
  if (!same_field(field_, o.field_))
    throw Error(Errc::FieldMismatch, "operands live in different number fields");
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  check_same(o);
  const std::size_t d = coords_.size();
  if (d == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  reduce_mod(prod, field_->modulus());
  coords_ = std::move(prod);
  return *this;
}

AlgNum& AlgNum::operator*=(const Rat& r) {
  for (auto& c : coords_) c *= r;
  return *this;
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw Error(Errc::DivZero, "inverse of zero");
  if (is_rational()) return AlgNum(field_, Rat(1 / coords_[0]));
  // Extended Euclid: s*a + t*m = 1 in Q[w].
  using qpoly::QPoly;
  QPoly a = coords_, m = field_->modulus();
  qpoly::trim(a);
  QPoly r0 = m, r1 = a, s0{}, s1{Rat(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qpoly::divmod(r0, r1, q, r);
    QPoly qs = qpoly::mul(q, s1);
    QPoly s2(std::max(s0.size(), qs.size()), Rat(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    qpoly::trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  if (r0.size() != 1) throw Error(Errc::DivZero, "element not invertible (reducible modulus?)");
  Rat inv = 1 / r0[0];
  for (auto& c : s0) c *= inv;
  return AlgNum(field_, std::move(s0));
}

AlgNum& AlgNum::operator/=(const AlgNum& o) {
  check_same(o);
  if (o.is_zero()) throw Error(Errc::DivZero, "division by zero");
  return *this *= o.inverse();
}

AlgNum AlgNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgNum result(field_, Rat(1)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool AlgNum::operator==(const AlgNum& o) const {
  check_same(o);
  return coords_ == o.coords_;
}

std::string AlgNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coords_.size(); k-- > 0;) {
    const Rat& c = coords_[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << format_rat(mag);
      continue;
    }
    if (mag != 1) out << format_rat(mag) << "*";
    out << "w";
    if (k > 1) out << "^" << k;
  }
  if (first) return "0";
  return out.str();
}

AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
AlgNum operator*(AlgNum a, const Rat& r) { return a *= r; }
AlgNum operator*(const Rat& r, AlgNum a) { return a *= r; }

AlgNum alg_op(char op, const AlgNum& a, const AlgNum& b) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    default: throw Error(Errc::PreconditionFailed, std::string("unknown operator ") + op);
  }
}

}  // namespace onepoint
