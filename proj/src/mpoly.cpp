#include <algorithm>
#include <numeric>

#include "onepoint/polyforms.hpp"

namespace onepoint {

namespace {

int exp_degree(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GradedLex::operator()(const Exp& a, const Exp& b) const {
  int da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly(FieldPtr field, std::vector<std::string> vars)
    : field_(std::move(field)), vars_(std::move(vars)) {}

MPoly MPoly::constant(FieldPtr field, std::vector<std::string> vars, const AlgNum& c) {
  MPoly p(std::move(field), std::move(vars));
  p.add_term(Exp(p.nvars(), 0), c);
  return p;
}

MPoly MPoly::variable(FieldPtr field, std::vector<std::string> vars, std::size_t index) {
  MPoly p(field, std::move(vars));
  Exp e(p.nvars(), 0);
  e.at(index) = 1;
  p.add_term(e, AlgNum(field, 1L));
  return p;
}

int MPoly::degree() const {
  if (terms_.empty()) return -1;
  return exp_degree(terms_.begin()->first);
}

int MPoly::low_degree() const {
  if (terms_.empty()) return -1;
  return exp_degree(terms_.rbegin()->first);
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return degree() == low_degree();
}

AlgNum MPoly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? AlgNum(field_) : it->second;
}

void MPoly::add_term(const Exp& e, const AlgNum& c) {
  if (e.size() != vars_.size()) throw Error(Errc::Internal, "exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MPoly::check_compatible(const MPoly& o) const {
  if (vars_ != o.vars_) throw Error(Errc::Internal, "polynomials over different variable lists");
  if (!same_field(field_, o.field_)) throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  check_compatible(o);
  MPoly r(field_, vars_);
  Exp e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const AlgNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(field_, vars_, AlgNum(field_, 1L));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

AlgNum MPoly::eval(const std::vector<AlgNum>& values) const {
  if (values.size() != vars_.size()) throw Error(Errc::Internal, "eval: wrong number of values");
  std::vector<std::vector<AlgNum>> powers(values.size());
  AlgNum acc(field_);
  for (const auto& [e, c] : terms_) {
    AlgNum t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(AlgNum(field_, 1L));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * values[i]);
      t *= pw[static_cast<std::size_t>(e[i])];
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::diff(std::size_t var) const {
  MPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exp d = e;
    d[var] -= 1;
    r.add_term(d, c * Rat(e[var]));
  }
  return r;
}

MPoly MPoly::truncated(int max_degree) const {
  MPoly r(field_, vars_);
  for (const auto& [e, c] : terms_)
    if (exp_degree(e) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly r(field_, vars_);
  for (const auto& [e, c] : terms_)
    if (exp_degree(e) == d) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

MPoly MPoly::compose_var(std::size_t var, const MPoly& value) const {
  check_compatible(value);
  std::map<int, MPoly> by_power;
  for (const auto& [e, c] : terms_) {
    Exp rest = e;
    int k = rest[var];
    rest[var] = 0;
    auto it = by_power.try_emplace(k, field_, vars_).first;
    it->second.add_term(rest, c);
  }
  MPoly result(field_, vars_);
  MPoly power = constant(field_, vars_, AlgNum(field_, 1L));
  int current = 0;
  for (auto& [k, part] : by_power) {
    while (current < k) {
      power *= value;
      ++current;
    }
    result += part * power;
  }
  return result;
}

MPoly MPoly::divide_by_var_power(std::size_t var, int k) const {
  MPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < k) throw Error(Errc::Internal, "divide_by_var_power: not divisible");
    Exp d = e;
    d[var] -= k;
    r.terms_.emplace(d, c);
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && !same_field(field_, o.field_)) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (it->first != e || it->second != c) return false;
    ++it;
  }
  return true;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r *= b;
  return r;
}
MPoly operator*(MPoly a, const AlgNum& c) { return a *= c; }
MPoly operator*(const AlgNum& c, MPoly a) { return a *= c; }

void divide(const MPoly& f, const MPoly& g, MPoly& quotient, MPoly& remainder) {
  if (g.is_zero()) throw Error(Errc::DivZero, "polynomial division by zero");
  quotient = MPoly(f.field(), f.vars());
  remainder = MPoly(f.field(), f.vars());
  MPoly p = f;
  const auto& [lead_e, lead_c] = *g.terms().begin();
  const AlgNum lead_inv = lead_c.inverse();
  while (!p.is_zero()) {
    const auto& [pe, pc] = *p.terms().begin();
    bool divisible = true;
    Exp q(pe.size());
    for (std::size_t i = 0; i < pe.size(); ++i) {
      q[i] = pe[i] - lead_e[i];
      if (q[i] < 0) divisible = false;
    }
    if (divisible) {
      MPoly t(f.field(), f.vars());
      t.add_term(q, pc * lead_inv);
      quotient += t;
      p -= t * g;
    } else {
      MPoly t(f.field(), f.vars());
      t.add_term(pe, pc);
      remainder += t;
      p -= t;
    }
  }
}

}  // namespace onepoint
