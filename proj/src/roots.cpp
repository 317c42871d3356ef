// Root policy: exact rational roots via Sturm isolation, plus roots of the
// shape r * w^k in a simple extension.

#include <algorithm>

#include "onepoint/upoly.hpp"

namespace onepoint {

namespace {

using qpoly::QPoly;

int sign_of(const Rat& r) { return sgn(r); }

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, qpoly::derivative(p)};
  while (!seq.back().empty() && seq.back().size() > 1) {
    QPoly q, r;
    qpoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  return seq;
}

int sign_changes(const std::vector<QPoly>& seq, const Rat& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_of(qpoly::eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rat floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

class Isolator {
 public:
  Isolator(const QPoly& p, const Int& lead) : p_(p), seq_(sturm_sequence(p)), lead_(abs(lead)) {}

  void run(const Rat& lo, const Rat& hi) { search(lo, hi, sign_changes(seq_, lo), sign_changes(seq_, hi)); }
  std::vector<Rat>& roots() { return roots_; }

 private:
  // Invariant: p(lo) != 0, p(hi) != 0; vlo - vhi distinct roots in (lo, hi).
  void search(const Rat& lo, const Rat& hi, int vlo, int vhi) {
    if (vlo - vhi <= 0) return;
    if ((hi - lo) * Rat(lead_) < 1) {
      // At most one multiple of 1/lead fits strictly inside.
      Rat k = floor_rat(hi * Rat(lead_));
      Rat cand = k / Rat(lead_);
      if (cand == hi) cand = (k - 1) / Rat(lead_);
      if (cand > lo && cand < hi && qpoly::eval(p_, cand) == 0) roots_.push_back(cand);
      return;
    }
    Rat mid = (lo + hi) / 2;
    if (qpoly::eval(p_, mid) == 0) {
      roots_.push_back(mid);
      Rat eta = (hi - lo) / 4;
      for (;;) {
        Rat a = mid - eta, b = mid + eta;
        if (qpoly::eval(p_, a) != 0 && qpoly::eval(p_, b) != 0) {
          int va = sign_changes(seq_, a), vb = sign_changes(seq_, b);
          if (va - vb == 1) {
            search(lo, a, vlo, va);
            search(b, hi, vb, vhi);
            return;
          }
        }
        eta /= 2;
      }
    }
    int vm = sign_changes(seq_, mid);
    search(lo, mid, vlo, vm);
    search(mid, hi, vm, vhi);
  }

  QPoly p_;
  std::vector<QPoly> seq_;
  Int lead_;
  std::vector<Rat> roots_;
};

}  // namespace

std::vector<Rat> rational_roots(const QPoly& input) {
  QPoly f = input;
  qpoly::trim(f);
  if (f.size() <= 1) return {};
  QPoly g = qpoly::gcd(f, qpoly::derivative(f));
  QPoly p, rem;
  qpoly::divmod(f, g, p, rem);
  std::vector<Rat> roots;
  if (p[0] == 0) {
    roots.push_back(Rat(0));
    p.erase(p.begin());
  }
  if (p.size() > 1) {
    Int den_lcm = 1;
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    for (auto& c : p) c *= Rat(den_lcm);
    Int lead = p.back().get_num();
    Rat bound = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, Rat(abs(p[i] / p.back())));
    bound += 1;
    Isolator iso(p, lead);
    iso.run(-bound, bound);
    for (auto& r : iso.roots()) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<AlgNum> find_simple_roots(const UPoly& f) {
  std::vector<AlgNum> roots;
  if (f.degree() <= 0) return roots;
  const FieldPtr& field = f.field();
  if (f.degree() == 1) {
    roots.push_back(-(f[0] / f[1]));
    return roots;
  }
  auto add_root = [&](const AlgNum& r) {
    if (!f.eval(r).is_zero()) return;
    for (const auto& q : roots)
      if (q == r) return;
    roots.push_back(r);
  };
  const std::size_t d = field->degree();
  if (d == 1) {
    QPoly q;
    for (const auto& c : f.coeffs()) q.push_back(c.rational());
    for (const auto& r : rational_roots(q)) add_root(AlgNum(field, r));
  } else {
    const unsigned order = field->root_order() ? field->root_order() : static_cast<unsigned>(d);
    AlgNum theta = AlgNum::generator(field);
    AlgNum theta_k(field, 1L);
    for (unsigned k = 0; k < order; ++k, theta_k *= theta) {
      // f(r * theta^k) = sum_j P_j(r) w^j with P_j over Q.
      std::vector<QPoly> coord(d);
      AlgNum tpow(field, 1L);
      for (int i = 0; i <= f.degree(); ++i, tpow *= theta_k) {
        AlgNum c = f[static_cast<std::size_t>(i)] * tpow;
        for (std::size_t j = 0; j < d; ++j) {
          coord[j].resize(static_cast<std::size_t>(f.degree()) + 1, Rat(0));
          coord[j][static_cast<std::size_t>(i)] = c.coords()[j];
        }
      }
      QPoly g;
      for (auto& cp : coord) {
        qpoly::trim(cp);
        g = g.empty() ? cp : qpoly::gcd(g, cp);
      }
      if (g.size() <= 1) continue;
      for (const auto& r : rational_roots(g)) add_root(theta_k * r);
    }
  }
  // A single leftover linear factor gives one more root.
  if (static_cast<int>(roots.size()) + 1 == f.degree()) {
    UPoly rest = f;
    for (const auto& r : roots) rest = exact_div(rest, UPoly::x_minus(r));
    add_root(-(rest[0] / rest[1]));
  }
  return roots;
}

RootSet find_roots(const UPoly& f) {
  RootSet out;
  int found_degree = 0;
  for (const auto& layer : yun(f)) {
    for (const auto& r : find_simple_roots(layer.factor)) {
      out.roots.emplace_back(r, layer.multiplicity);
      found_degree += layer.multiplicity;
    }
  }
  out.complete = found_degree == std::max(f.degree(), 0);
  return out;
}

}  // namespace onepoint
