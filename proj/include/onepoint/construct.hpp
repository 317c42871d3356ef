#pragma once

// Constructions of pencils with a single 9-fold base point.

#include <string>
#include <vector>

#include "onepoint/pencil.hpp"

namespace onepoint {

// The unique pencil of cubics G with I_p(G, C) >= 9; gen0 = C, gen1 reduced
// against C's leading monomial. NotNineTorsion when only C itself qualifies.
Pencil pencil_from_contact(const Cubic& c, const Point2& p);

struct Triangle {
  std::array<Point2, 3> vertices;
  std::array<Line, 3> tangents;  // tangents[i] at vertices[i], passing through vertices[i+1]
};
Triangle tangential_triangle(const Cubic& c, const Point2& p);

// Pencil spanned by C and the cubic G with t2^2 G = s t1^4 t3 mod C.
Pencil gattazzo_pencil(const Cubic& c, const Triangle& t);

struct TriangleNormal {
  ProjMap map;         // sends the vertices to (1:0:0), (0:1:0), (0:0:1)
  AlgNum a, b, c, d;   // f o map = a xy^2 + b yz^2 + c zx^2 + d xyz
};
TriangleNormal triangle_normalize(const Form3& f, const Triangle& t);

struct CanonicalScale {
  AlgNum zeta;
  AlgNum alpha, beta, gamma;
  ProjMap map;  // diag(alpha, beta, gamma)
};
// gamma^9 = a^2/(c b^4), alpha = b^2 gamma^4 / a, beta = 1/(b gamma^2), zeta = d b gamma^3 / a.
CanonicalScale scale_to_canonical(const AlgNum& a, const AlgNum& b, const AlgNum& c, const AlgNum& d);

// An n-th root of x in its field, if the root policy finds one.
std::optional<AlgNum> field_root(const AlgNum& x, unsigned n);

// Cube-free positive integer representing lambda in Q*/(Q*)^3.
Rat lambda_class(const Rat& lambda);
bool lambda_equiv(const Rat& lambda, const Rat& other);

struct Canonicalization {
  ProjMap map;       // transform(P, map) spans the canonical pencil
  Param j0_param;    // the j = 0 member used
  AlgNum a, b, c, d; // triangle coefficients after the cube-root rescaling
  CanonicalScale scale;
};
Canonicalization canonicalize(const Pencil& p);

Pencil named_pencil(const std::string& name);
const std::vector<std::string>& named_pencil_names();

// G - (G_k / F_k) F with k the leading monomial of F, scaled so its leading coefficient is 1.
Form3 reduce_against(const Form3& g, const Form3& f);

}  // namespace onepoint
