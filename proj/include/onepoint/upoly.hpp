#pragma once

// Dense univariate polynomials over a number field, binary forms,
// resultants, squarefree decomposition and the partial root policy.

#include <map>
#include <utility>
#include <vector>

#include "onepoint/polyforms.hpp"

namespace onepoint {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(FieldPtr field);
  UPoly(FieldPtr field, std::vector<AlgNum> coeffs);  // low to high
  static UPoly from_rats(const FieldPtr& field, const std::vector<Rat>& coeffs);
  static UPoly x_minus(const AlgNum& a);
  // Univariate MPoly (exactly one variable) to dense form.
  static UPoly from_mpoly(const MPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<AlgNum>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  AlgNum operator[](std::size_t i) const { return i < c_.size() ? c_[i] : AlgNum(field_); }
  const AlgNum& lead() const { return c_.back(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const AlgNum& a);

  AlgNum eval(const AlgNum& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(unsigned e) const;
  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<AlgNum> c_;
};

UPoly operator+(UPoly a, const UPoly& b);
UPoly operator-(UPoly a, const UPoly& b);
UPoly operator*(UPoly a, const UPoly& b);
UPoly operator*(UPoly a, const AlgNum& c);

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly exact_div(const UPoly& a, const UPoly& b);  // throws InconsistentInput on remainder
UPoly gcd(UPoly a, UPoly b);                     // monic, or zero

// Sylvester determinant with the rows of f first. Throws ZeroInput on a zero input.
AlgNum resultant(const UPoly& f, const UPoly& g);
AlgNum resultant_uni(const MPoly& f, const MPoly& g);

struct SqfLayer {
  int multiplicity;
  UPoly factor;  // monic, squarefree, pairwise coprime across layers
};
std::vector<SqfLayer> yun(const UPoly& f);

// multiplicity -> total degree of the roots with that multiplicity
using Profile = std::map<int, int>;
Profile squarefree_profile(const UPoly& f);
Profile squarefree_profile(const MPoly& f);

// Distinct rational roots of a polynomial over Q, ascending.
std::vector<Rat> rational_roots(const qpoly::QPoly& f);

struct RootSet {
  std::vector<std::pair<AlgNum, int>> roots;  // value, multiplicity
  bool complete = false;                      // roots account for the full degree
};
// Root policy: roots in Q, and roots of the shape r * w^k with r rational.
RootSet find_roots(const UPoly& f);
// Same search on a single squarefree polynomial, without multiplicities.
std::vector<AlgNum> find_simple_roots(const UPoly& squarefree);

// Newton interpolation through (nodes[i], values[i]); nodes distinct rationals.
UPoly interpolate(const std::vector<Rat>& nodes, const std::vector<AlgNum>& values);

// Binary form B(l, m) = sum_k a_k l^(d-k) m^k stored as its affine part B(1, t).
struct BinForm {
  UPoly affine;
  int degree = 0;

  bool is_zero() const { return affine.is_zero(); }
  // Multiplicity of the root (0 : 1).
  int mult_at_infinity() const { return is_zero() ? degree : degree - affine.degree(); }
  AlgNum eval(const AlgNum& l, const AlgNum& m) const;
};

}  // namespace onepoint
