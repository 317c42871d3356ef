// Fulton's algorithm for local intersection numbers.

#include "onepoint/cubiccurve.hpp"
#include "onepoint/upoly.hpp"

namespace onepoint {

namespace {

// f(x, 0) as a dense polynomial in x.
UPoly restrict_y0(const MPoly& f) {
  std::vector<AlgNum> c;
  for (const auto& [e, v] : f.terms()) {
    if (e[1] != 0) continue;
    auto k = static_cast<std::size_t>(e[0]);
    if (c.size() <= k) c.resize(k + 1, AlgNum(f.field()));
    c[k] = v;
  }
  return UPoly(f.field(), std::move(c));
}

int order_at_zero(const UPoly& p) {
  int k = 0;
  while (p[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

}  // namespace

IMult local_intersection(MPoly f, MPoly g) {
  if (f.nvars() != 2 || g.nvars() != 2) throw Error(Errc::PreconditionFailed, "local_intersection needs two variables");
  if (f.is_zero() || g.is_zero()) return IMult::inf();
  // Without a common component the answer is bounded by Bezout.
  const int cap = std::max(f.degree(), 1) * std::max(g.degree(), 1);
  const Exp origin{0, 0};
  int acc = 0;
  for (int guard = 0; guard < 1000000; ++guard) {
    if (f.is_zero() || g.is_zero()) return IMult::inf();
    if (!f.coeff(origin).is_zero() || !g.coeff(origin).is_zero()) return IMult{acc, false};
    if (acc > cap) return IMult::inf();
    UPoly fr = restrict_y0(f), gr = restrict_y0(g);
    if (fr.is_zero() && gr.is_zero()) return IMult::inf();
    if (gr.is_zero()) {
      std::swap(f, g);
      std::swap(fr, gr);
    }
    if (fr.is_zero()) {
      // f = y * h: I(y, g) + I(h, g)
      acc += order_at_zero(gr);
      f = f.divide_by_var_power(1, 1);
      continue;
    }
    if (fr.degree() > gr.degree()) {
      std::swap(f, g);
      std::swap(fr, gr);
    }
    Exp shift{gr.degree() - fr.degree(), 0};
    MPoly m(f.field(), f.vars());
    m.add_term(shift, gr.lead() / fr.lead());
    g -= m * f;
  }
  throw Error(Errc::Internal, "intersection multiplicity did not terminate");
}

IMult intersection_multiplicity(const Form3& f, const Form3& g, const Point2& p) {
  if (f.is_zero() || g.is_zero()) return IMult::inf();
  if (!f.eval(p.coords()).is_zero() || !g.eval(p.coords()).is_zero()) return IMult{0, false};
  std::size_t d = p.chart();
  Chart ch{d, d == 0 ? std::size_t{1} : std::size_t{0}, d == 2 ? std::size_t{1} : std::size_t{2}, p.coords()};
  return local_intersection(chart_poly(f, ch), chart_poly(g, ch));
}

}  // namespace onepoint
