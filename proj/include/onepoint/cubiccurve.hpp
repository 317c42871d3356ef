#pragma once

// Geometry of a single plane cubic.

#include <optional>
#include <vector>

#include "onepoint/linalg.hpp"
#include "onepoint/polyforms.hpp"

namespace onepoint {

struct Line {
  Form3 form;  // degree 1

  static Line through(const Point2& p, const Point2& q);
  static Line from_coeffs(const AlgNum& a, const AlgNum& b, const AlgNum& c);
  AlgNum coeff(std::size_t i) const;
  bool contains(const Point2& p) const { return form.eval(p.coords()).is_zero(); }
  // Two distinct points spanning the line (deterministic).
  std::pair<Point2, Point2> spanning_points() const;
  Line normalized() const { return Line{form.normalized()}; }
  bool operator==(const Line& o) const { return form.normalized() == o.form.normalized(); }
  std::string to_string() const { return form.to_string(); }
};

class Cubic {
 public:
  explicit Cubic(Form3 f);
  const Form3& form() const { return f_; }
  const Form3& partial(std::size_t i) const { return d_[i]; }
  const FieldPtr& field() const { return f_.field(); }

 private:
  Form3 f_;
  std::array<Form3, 3> d_;
};

bool on_curve(const Cubic& c, const Point2& p);
bool is_smooth_at(const Cubic& c, const Point2& p);
bool is_smooth(const Cubic& c);

// 6x6 determinant of the coefficient rows of the first partials of f and of
// its Hessian; vanishes exactly on singular cubics.
AlgNum cubic_discriminant(const Form3& f);

struct SingularPoints {
  std::vector<Point2> points;
  bool complete = false;
  bool positive_dimensional = false;
};
SingularPoints singular_points(const Cubic& c);

enum class SingKind { Node, Cusp, Other };
const char* sing_kind_name(SingKind k);

struct SingInfo {
  Point2 point;
  SingKind kind = SingKind::Other;
  std::vector<Line> tangents;  // tangent cone factors found over the field
};
SingInfo sing_type(const Cubic& c, const Point2& p);

// Multiplicity of the curve f = 0 at p (0 when p is off the curve).
int mult_at(const Form3& f, const Point2& p);

Line tangent_line(const Cubic& c, const Point2& p);
Point2 third_intersection(const Cubic& c, const Line& line, const std::vector<Point2>& known);

struct IMult {
  int value = 0;
  bool infinite = false;
  static IMult inf() { return IMult{0, true}; }
  bool operator==(const IMult& o) const { return infinite == o.infinite && (infinite || value == o.value); }
  std::string to_string() const { return infinite ? "Infinite" : std::to_string(value); }
};

// Local intersection number at the origin of two polynomials in two variables.
IMult local_intersection(MPoly f, MPoly g);
IMult intersection_multiplicity(const Form3& f, const Form3& g, const Point2& p);

bool is_flex(const Cubic& c, const Point2& p);

Point2 group_add(const Cubic& c, const Point2& o, const Point2& p, const Point2& q);
Point2 group_neg(const Cubic& c, const Point2& o, const Point2& p);
Point2 scalar_mul(const Cubic& c, const Point2& o, long n, const Point2& p);

// Cubics G with I_p(G, C) >= 9 as coefficient vectors (graded-lex order).
std::vector<Vec> contact_kernel(const Cubic& c, const Point2& p);

enum class PointType { Type9, Flex, Neither };
const char* point_type_name(PointType t);
PointType type9_test(const Cubic& c, const Point2& p);

struct LinearFactor {
  Line line;
  Form3 cofactor;
};
struct LinearFactorResult {
  std::optional<LinearFactor> factor;
  bool certified = false;  // true when "no factor" is certain over the field
};
LinearFactorResult linear_factor(const Form3& f);

struct AronholdST {
  AlgNum S;
  AlgNum T;
};
// Normalized so that for x^3+y^3+z^3+6m*xyz: S = m - m^4, T = 1 - 20m^3 - 8m^6.
AronholdST aronhold_ST(const Form3& f);

// Flexes of c whose coordinates lie in the field (the field-rational part of C ∩ Hessian).
std::vector<Point2> rational_flexes(const Cubic& c);

struct WeierstrassData {
  AlgNum a1, a2, a3, a4, a6;
};
WeierstrassData weierstrass_at_flex(const Cubic& c, const Point2& flex);

AlgNum j_from_weierstrass(const WeierstrassData& w);
AlgNum j_invariant_flex(const Cubic& c);        // path A; JUnavailable without a rational flex
AlgNum j_invariant_invariants(const Cubic& c);  // path B
Rat j_calibration_constant();                   // kappa with j = kappa * S^3 / disc
AlgNum j_invariant(const Cubic& c);

}  // namespace onepoint
