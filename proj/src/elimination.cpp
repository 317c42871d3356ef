#include "onepoint/elimination.hpp"

namespace onepoint {

namespace {

std::vector<std::pair<long, long>> shear_candidates() {
  std::vector<std::pair<long, long>> out{{0, 0}};
  for (long k = 1; k <= 8; ++k)
    for (long a = -k; a <= k; ++a)
      for (long b = -k; b <= k; ++b)
        if (std::max(std::labs(a), std::labs(b)) == k) out.emplace_back(a, b);
  return out;
}

Point2 unshear(const AlgNum& x, const AlgNum& y, const AlgNum& z, const ProjMap& M) {
  return map_point(Point2(x, y, z), M);
}

}  // namespace

UPoly restrict_z(const Form3& F, const AlgNum& x0, const AlgNum& y0) {
  const FieldPtr& field = F.field();
  std::vector<AlgNum> c(static_cast<std::size_t>(std::max(F.degree(), 0)) + 1, AlgNum(field));
  for (const auto& [e, v] : F.poly().terms()) c[static_cast<std::size_t>(e[2])] += v * x0.pow(e[0]) * y0.pow(e[1]);
  return UPoly(field, std::move(c));
}

BinForm resultant_z(const Form3& F, const Form3& G) {
  const FieldPtr& field = F.field();
  const int n = F.degree() * G.degree();
  std::vector<Rat> nodes;
  std::vector<AlgNum> values;
  AlgNum one(field, 1L);
  for (int a = 0; a <= n; ++a) {
    AlgNum av(field, static_cast<long>(a));
    UPoly f = restrict_z(F, one, av), g = restrict_z(G, one, av);
    if (f.degree() != F.degree() || g.degree() != G.degree())
      throw Error(Errc::PreconditionFailed, "resultant_z: forms must not vanish at (0:0:1)");
    nodes.emplace_back(a);
    values.push_back(resultant(f, g));
  }
  return BinForm{interpolate(nodes, values), n};
}

ProjMap shear_for(const std::vector<Form3>& forms, std::size_t skip) {
  static const auto candidates = shear_candidates();
  for (auto [a, b] : candidates) {
    const FieldPtr& field = forms.at(0).field();
    std::array<AlgNum, 3> pt{AlgNum(field, a), AlgNum(field, b), AlgNum(field, 1L)};
    bool ok = true;
    for (const auto& f : forms) ok = ok && !f.eval(pt).is_zero();
    if (!ok) continue;
    if (skip > 0) {
      --skip;
      continue;
    }
    AlgNum o(field, 1L), z(field);
    return ProjMap(ProjMap::Rows{{{o, z, z}, {z, o, z}, {pt[0], pt[1], o}}});
  }
  throw Error(Errc::Internal, "no admissible shear found");
}

CommonZeros common_zeros(const Form3& F, const Form3& G, std::size_t skip) {
  if (F.is_zero() || G.is_zero()) throw Error(Errc::CommonComponent, "zero form");
  const FieldPtr& field = F.field();
  ProjMap M = shear_for({F, G}, skip);
  Form3 Fs = substitute_linear(F, M), Gs = substitute_linear(G, M);
  BinForm R = resultant_z(Fs, Gs);
  if (R.is_zero()) throw Error(Errc::CommonComponent, "forms share a component");
  CommonZeros out;
  RootSet rs = find_roots(R.affine);
  out.complete = rs.complete;
  std::vector<std::pair<AlgNum, AlgNum>> xy;
  for (const auto& [t, mult] : rs.roots) xy.emplace_back(AlgNum(field, 1L), t);
  if (R.mult_at_infinity() > 0) xy.emplace_back(AlgNum(field), AlgNum(field, 1L));
  for (const auto& [x0, y0] : xy) {
    UPoly h = gcd(restrict_z(Fs, x0, y0), restrict_z(Gs, x0, y0));
    RootSet zs = find_roots(h);
    out.complete = out.complete && zs.complete;
    for (const auto& [z0, m] : zs.roots) {
      Point2 p = unshear(x0, y0, z0, M);
      bool seen = false;
      for (const auto& q : out.points) seen = seen || q == p;
      if (!seen) out.points.push_back(p);
    }
  }
  return out;
}

std::optional<Point2> single_common_point(const Form3& F, const Form3& G, std::size_t skip) {
  if (F.is_zero() || G.is_zero()) return std::nullopt;
  const FieldPtr& field = F.field();
  ProjMap M = shear_for({F, G}, skip);
  Form3 Fs = substitute_linear(F, M), Gs = substitute_linear(G, M);
  BinForm R = resultant_z(Fs, Gs);
  if (R.is_zero()) return std::nullopt;
  const int n = R.degree;
  AlgNum x0(field), y0(field, 1L);
  if (R.affine.degree() == n) {
    // R(1, t) = c (t - t0)^n
    AlgNum t0 = -(R.affine[static_cast<std::size_t>(n - 1)] / (R.affine.lead() * Rat(n)));
    if (UPoly::x_minus(t0).pow(static_cast<unsigned>(n)) * R.affine.lead() != R.affine) return std::nullopt;
    x0 = AlgNum(field, 1L);
    y0 = t0;
  } else if (R.affine.degree() != 0) {
    return std::nullopt;
  }
  UPoly h = gcd(restrict_z(Fs, x0, y0), restrict_z(Gs, x0, y0));
  const int m = h.degree();
  if (m < 1) return std::nullopt;
  AlgNum z0 = -(h[static_cast<std::size_t>(m - 1)] * Rat(1, m));
  if (UPoly::x_minus(z0).pow(static_cast<unsigned>(m)) != h) return std::nullopt;
  return unshear(x0, y0, z0, M);
}

}  // namespace onepoint
