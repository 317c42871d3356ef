#pragma once

// Sparse multivariate polynomials over a number field, ternary forms,
// projective points and linear substitutions.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "onepoint/exactfield.hpp"

namespace onepoint {

using Exp = std::vector<int>;

// Graded-lex: higher total degree first, then lexicographically larger first.
struct GradedLex {
  bool operator()(const Exp& a, const Exp& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Exp, AlgNum, GradedLex>;

  MPoly() = default;
  MPoly(FieldPtr field, std::vector<std::string> vars);

  static MPoly constant(FieldPtr field, std::vector<std::string> vars, const AlgNum& c);
  static MPoly variable(FieldPtr field, std::vector<std::string> vars, std::size_t index);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;      // -1 for zero
  int low_degree() const;  // order of vanishing at the origin, -1 for zero
  bool is_homogeneous() const;
  AlgNum coeff(const Exp& e) const;
  AlgNum zero_scalar() const { return AlgNum(field_); }

  void add_term(const Exp& e, const AlgNum& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const AlgNum& c);
  MPoly pow(unsigned e) const;

  AlgNum eval(const std::vector<AlgNum>& values) const;
  MPoly diff(std::size_t var) const;
  MPoly truncated(int max_degree) const;
  MPoly homogeneous_part(int d) const;
  // Replace variable `var` by the given polynomial (same variable list).
  MPoly compose_var(std::size_t var, const MPoly& value) const;
  // Exact division by var^k; throws if some term has a smaller exponent.
  MPoly divide_by_var_power(std::size_t var, int k) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_compatible(const MPoly& o) const;

  FieldPtr field_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(MPoly a, const AlgNum& c);
MPoly operator*(const AlgNum& c, MPoly a);

// Division with remainder by a single divisor in graded-lex order.
// The remainder is zero iff g divides f.
void divide(const MPoly& f, const MPoly& g, MPoly& quotient, MPoly& remainder);

// Grammar: variables from `vars`, integers, w (field generator), + - * / ^ and
// parentheses. Division is allowed only by nonzero constants.
MPoly parse_poly(std::string_view text, const FieldPtr& field, const std::vector<std::string>& vars);

const std::vector<std::string>& xyz_vars();

// Homogeneous form in x, y, z.
class Form3 {
 public:
  Form3() = default;
  // Throws NotHomogeneous unless p is homogeneous in (x, y, z); a zero p
  // gets the given declared degree.
  explicit Form3(MPoly p, int declared_degree = -1);

  static Form3 zero(const FieldPtr& field, int degree);
  static Form3 monomial(const FieldPtr& field, const Exp& e, const AlgNum& c);
  static Form3 linear(const AlgNum& a, const AlgNum& b, const AlgNum& c);
  static Form3 from_coeffs(const FieldPtr& field, int degree, const std::vector<AlgNum>& coeffs);
  // Monomials of degree d in graded-lex order.
  static const std::vector<Exp>& monomials(int d);

  const MPoly& poly() const { return poly_; }
  const FieldPtr& field() const { return poly_.field(); }
  int degree() const { return degree_; }
  bool is_zero() const { return poly_.is_zero(); }

  std::vector<AlgNum> coeffs() const;
  AlgNum coeff(int i, int j, int k) const { return poly_.coeff({i, j, k}); }
  AlgNum eval(const std::array<AlgNum, 3>& v) const;
  Form3 diff(std::size_t var) const;

  Form3 operator-() const { return Form3(-poly_, degree_); }
  Form3& operator+=(const Form3& o);
  Form3& operator-=(const Form3& o);
  Form3& operator*=(const AlgNum& c);

  bool operator==(const Form3& o) const { return degree_ == o.degree_ && poly_ == o.poly_; }
  bool operator!=(const Form3& o) const { return !(*this == o); }

  // Scaled so the first graded-lex coefficient is 1.
  Form3 normalized() const;
  std::string to_string() const { return poly_.to_string(); }

 private:
  MPoly poly_;
  int degree_ = -1;
};

Form3 operator+(Form3 a, const Form3& b);
Form3 operator-(Form3 a, const Form3& b);
Form3 operator*(const Form3& a, const Form3& b);
Form3 operator*(Form3 a, const AlgNum& c);
Form3 operator*(const AlgNum& c, Form3 a);
Form3 pow(const Form3& f, unsigned e);

Form3 parse_form(std::string_view text, const FieldPtr& field);
std::string format_form(const Form3& f);

// Exact division of forms; nullopt-like failure reported by throwing InconsistentInput.
bool divides(const Form3& divisor, const Form3& f, Form3* quotient = nullptr);

Form3 hessian_det(const Form3& f);

// Projective point with canonical representative (first nonzero coordinate 1).
class Point2 {
 public:
  Point2() = default;
  Point2(AlgNum x, AlgNum y, AlgNum z);
  explicit Point2(const std::array<AlgNum, 3>& v) : Point2(v[0], v[1], v[2]) {}
  static Point2 rational(const FieldPtr& field, const Rat& x, const Rat& y, const Rat& z);

  const std::array<AlgNum, 3>& coords() const { return c_; }
  const AlgNum& operator[](std::size_t i) const { return c_[i]; }
  const FieldPtr& field() const { return c_[0].field(); }
  // Index of the first nonzero coordinate (which equals 1).
  std::size_t chart() const;

  bool operator==(const Point2& o) const;
  bool operator!=(const Point2& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  std::array<AlgNum, 3> c_;
};

Point2 parse_point(std::string_view text, const FieldPtr& field);

// 3x3 invertible matrix acting by substitution on row vectors:
// substitute_linear(f, M)(v) = f(v * M).
class ProjMap {
 public:
  using Rows = std::array<std::array<AlgNum, 3>, 3>;

  explicit ProjMap(Rows m);
  static ProjMap identity(const FieldPtr& field);
  static ProjMap diag(const AlgNum& a, const AlgNum& b, const AlgNum& c);

  const AlgNum& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Rows& rows() const { return m_; }
  const FieldPtr& field() const { return m_[0][0].field(); }
  AlgNum det() const;
  ProjMap inverse() const;
  ProjMap operator*(const ProjMap& o) const;
  bool operator==(const ProjMap& o) const { return m_ == o.m_; }
  std::array<AlgNum, 3> apply_row(const std::array<AlgNum, 3>& v) const;
  std::string to_string() const;

 private:
  Rows m_;
};

AlgNum det3(const ProjMap::Rows& m);

Form3 substitute_linear(const Form3& f, const ProjMap& M);
// The point q*M: if q lies on substitute_linear(f, M) then map_point(q, M) lies on f.
Point2 map_point(const Point2& q, const ProjMap& M);

// y(x) = sum_{k>=1} c_k x^k modulo x^{N+1}; c[0] is always zero.
struct TruncSeries {
  std::vector<AlgNum> c;
  int order() const { return static_cast<int>(c.size()) - 1; }
};

// Affine chart at a point: coordinate `dehom` set to 1, the point moved to the
// origin, and `dep` solved as a series in `indep`.
struct Chart {
  std::size_t dehom = 0;
  std::size_t indep = 1;
  std::size_t dep = 2;
  std::array<AlgNum, 3> point;  // representative with point[dehom] == 1
};

struct Branch {
  Chart chart;
  TruncSeries series;
};

// Local polynomial g(u, v) = f(point + u e_indep + v e_dep) in the chart.
MPoly chart_poly(const Form3& f, const Chart& chart);

Branch series_branch(const Form3& f, const Point2& p, int order);

// Restriction of a form along a branch: coefficients of t^0..t^order.
std::vector<AlgNum> restrict_to_branch(const Form3& g, const Branch& b);

}  // namespace onepoint
