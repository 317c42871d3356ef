// Aronhold invariants S, T and the j-invariant of a plane cubic.
//
// S and T are found at first use as the weight-zero polynomials in the ten
// coefficients annihilated by the sl(3) derivations x_a d/dx_b, then scaled to
// the classical normalization on x^3+y^3+z^3+6m*xyz.

#include <algorithm>

#include "onepoint/cubiccurve.hpp"
#include "onepoint/elimination.hpp"

namespace onepoint {

namespace {

using CoeffExp = std::vector<int>;  // exponents of the ten cubic coefficients

struct InvariantPoly {
  std::vector<std::pair<CoeffExp, Rat>> terms;

  AlgNum eval(const std::vector<AlgNum>& c, const FieldPtr& field) const {
    std::vector<std::vector<AlgNum>> powers(c.size());
    AlgNum acc(field);
    for (const auto& [e, r] : terms) {
      AlgNum t(field, r);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(AlgNum(field, 1L));
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * c[i]);
        t *= pw[static_cast<std::size_t>(e[i])];
      }
      acc += t;
    }
    return acc;
  }
};

void enumerate(int degree, std::size_t start, CoeffExp& cur, int left, std::vector<CoeffExp>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < cur.size(); ++i) {
    ++cur[i];
    enumerate(degree, i, cur, left - 1, out);
    --cur[i];
  }
}

InvariantPoly derive_invariant(int degree) {
  const auto& mons = Form3::monomials(3);
  const std::size_t n = mons.size();
  std::vector<CoeffExp> all, basis;
  CoeffExp cur(n, 0);
  enumerate(degree, 0, cur, degree, all);
  for (const auto& e : all) {
    std::array<int, 3> w{0, 0, 0};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < 3; ++a) w[a] += e[i] * mons[i][a];
    if (w[0] == degree && w[1] == degree && w[2] == degree) basis.push_back(e);
  }
  auto index_of = [&](const Exp& m) -> std::ptrdiff_t {
    auto it = std::find(mons.begin(), mons.end(), m);
    return it == mons.end() ? -1 : it - mons.begin();
  };
  std::map<CoeffExp, std::size_t> row_of;
  std::vector<std::map<std::size_t, Rat>> columns(basis.size());
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (a == b) continue;
      // c_{m'} -> (m'_b + 1) c_{m' + e_b - e_a}
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const CoeffExp& e = basis[col];
        for (std::size_t i = 0; i < n; ++i) {
          if (e[i] == 0 || mons[i][a] == 0) continue;
          Exp src = mons[i];
          src[a] -= 1;
          src[b] += 1;
          auto j = index_of(src);
          CoeffExp img = e;
          img[i] -= 1;
          img[static_cast<std::size_t>(j)] += 1;
          // tag the image with the derivation so rows from different pairs stay apart
          img.push_back(static_cast<int>(3 * a + b));
          auto [it, inserted] = row_of.try_emplace(img, row_of.size());
          columns[col][it->second] += Rat(e[i] * (mons[i][b] + 1));
        }
      }
    }
  }
  FieldPtr Q = NumberField::rationals();
  Mat m(row_of.size(), Vec(basis.size(), AlgNum(Q)));
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [row, v] : columns[col]) m[row][col] = AlgNum(Q, v);
  auto ker = kernel(m, Q, basis.size());
  if (ker.size() != 1) throw Error(Errc::Internal, "invariant space of unexpected dimension");
  InvariantPoly p;
  for (std::size_t col = 0; col < basis.size(); ++col)
    if (!ker[0][col].is_zero()) p.terms.emplace_back(basis[col], ker[0][col].rational());
  return p;
}

std::vector<AlgNum> hesse_coeffs(const Rat& six_m) {
  FieldPtr Q = NumberField::rationals();
  Form3 f = parse_form("x^3 + y^3 + z^3", Q) + Form3::monomial(Q, {1, 1, 1}, AlgNum(Q, six_m));
  return f.coeffs();
}

void scale_to(InvariantPoly& p, const std::vector<AlgNum>& at, const Rat& target) {
  FieldPtr Q = NumberField::rationals();
  Rat v = p.eval(at, Q).rational();
  if (v == 0) throw Error(Errc::Internal, "invariant vanishes at the normalization point");
  for (auto& [e, r] : p.terms) r *= target / v;
}

struct Invariants {
  InvariantPoly S, T;
};

const Invariants& invariants() {
  static const Invariants inv = [] {
    Invariants r{derive_invariant(4), derive_invariant(6)};
    scale_to(r.S, hesse_coeffs(Rat(12)), Rat(-14));  // m = 2: m - m^4
    scale_to(r.T, hesse_coeffs(Rat(0)), Rat(1));     // Fermat
    return r;
  }();
  return inv;
}

}  // namespace

AronholdST aronhold_ST(const Form3& f) {
  if (f.degree() != 3) throw Error(Errc::PreconditionFailed, "Aronhold invariants need a cubic");
  auto c = f.coeffs();
  const auto& inv = invariants();
  return {inv.S.eval(c, f.field()), inv.T.eval(c, f.field())};
}

std::vector<Point2> rational_flexes(const Cubic& c) {
  Form3 h = hessian_det(c.form());
  if (h.is_zero()) return {};
  std::vector<Point2> out;
  try {
    for (const auto& p : common_zeros(c.form(), h).points)
      if (is_smooth_at(c, p)) out.push_back(p);
  } catch (const Error& e) {
    if (e.code() != Errc::CommonComponent) throw;
  }
  return out;
}

WeierstrassData weierstrass_at_flex(const Cubic& c, const Point2& flex) {
  if (!is_flex(c, flex)) throw Error(Errc::PreconditionFailed, flex.to_string() + " is not a flex");
  Line t = tangent_line(c, flex);
  auto [p1, p2] = t.spanning_points();
  Point2 other = p1 == flex ? p2 : p1;
  std::size_t k = 0;
  while (t.coeff(k).is_zero()) ++k;
  const FieldPtr& field = c.field();
  std::array<AlgNum, 3> ek{AlgNum(field), AlgNum(field), AlgNum(field)};
  ek[k] = AlgNum(field, 1L);
  // Rows: (1:0:0) -> other point of the tangent, (0:1:0) -> flex, (0:0:1) -> off the tangent.
  ProjMap M(ProjMap::Rows{other.coords(), flex.coords(), ek});
  Form3 g = substitute_linear(c.form(), M);
  if (!g.coeff(0, 3, 0).is_zero() || !g.coeff(1, 2, 0).is_zero() || !g.coeff(2, 1, 0).is_zero())
    throw Error(Errc::Internal, "flex normalization failed");
  AlgNum A = g.coeff(0, 2, 1), B = g.coeff(3, 0, 0);
  if (A.is_zero() || B.is_zero()) throw Error(Errc::NotSmoothCurve, "degenerate Weierstrass reduction");
  AlgNum A2 = A * A;
  WeierstrassData w;
  w.a1 = g.coeff(1, 1, 1) / A;
  w.a3 = -(g.coeff(0, 1, 2) * B / A2);
  w.a2 = -(g.coeff(2, 0, 1) / A);
  w.a4 = g.coeff(1, 0, 2) * B / A2;
  w.a6 = -(g.coeff(0, 0, 3) * B * B / (A2 * A));
  return w;
}

AlgNum j_from_weierstrass(const WeierstrassData& w) {
  const FieldPtr& field = w.a1.field();
  auto n = [&](long v) { return AlgNum(field, v); };
  AlgNum b2 = w.a1 * w.a1 + n(4) * w.a2;
  AlgNum b4 = n(2) * w.a4 + w.a1 * w.a3;
  AlgNum b6 = w.a3 * w.a3 + n(4) * w.a6;
  AlgNum b8 = w.a1 * w.a1 * w.a6 + n(4) * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 + w.a2 * w.a3 * w.a3 - w.a4 * w.a4;
  AlgNum c4 = b2 * b2 - n(24) * b4;
  AlgNum delta = -(b2 * b2 * b8) - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
  if (delta.is_zero()) throw Error(Errc::NotSmoothCurve, "singular Weierstrass model");
  return c4 * c4 * c4 / delta;
}

AlgNum j_invariant_flex(const Cubic& c) {
  auto flexes = rational_flexes(c);
  if (flexes.empty()) throw Error(Errc::JUnavailable, "no flex with coordinates in the field");
  return j_from_weierstrass(weierstrass_at_flex(c, flexes.front()));
}

Rat j_calibration_constant() {
  static const Rat kappa = [] {
    FieldPtr Q = NumberField::rationals();
    Cubic hesse(parse_form("x^3 + y^3 + z^3 + x*y*z", Q));
    AlgNum jA = j_invariant_flex(hesse);
    AlgNum S = aronhold_ST(hesse.form()).S;
    AlgNum disc = cubic_discriminant(hesse.form());
    return (jA * disc / (S * S * S)).rational();
  }();
  return kappa;
}

AlgNum j_invariant_invariants(const Cubic& c) {
  AlgNum disc = cubic_discriminant(c.form());
  if (disc.is_zero()) throw Error(Errc::NotSmoothCurve, "singular cubic has no j-invariant");
  AlgNum S = aronhold_ST(c.form()).S;
  return S * S * S * j_calibration_constant() / disc;
}

AlgNum j_invariant(const Cubic& c) {
  if (!is_smooth(c)) throw Error(Errc::NotSmoothCurve, "singular cubic has no j-invariant");
  if (!rational_flexes(c).empty()) return j_invariant_flex(c);
  return j_invariant_invariants(c);
}

}  // namespace onepoint
