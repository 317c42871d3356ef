#pragma once

// Exact arithmetic over Q and simple extensions Q(w) = Q[w]/(m(w)).

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "onepoint/errors.hpp"

namespace onepoint {

using Int = mpz_class;
using Rat = mpq_class;

std::string format_rat(const Rat& r);
Rat parse_rat(std::string_view text);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A simple extension Q(w) given by a monic modulus; degree 1 is Q itself.
class NumberField {
 public:
  /// modulus: coefficients low to high, monic, degree >= 1.
  /// root_order: multiplicative order of w when w is a root of unity, 0 otherwise.
  NumberField(std::vector<Rat> modulus, std::string label, unsigned root_order);

  static FieldPtr rationals();
  static FieldPtr cyclotomic(unsigned n);
  static FieldPtr with_modulus(std::vector<Rat> modulus, std::string label);
  /// Accepts "Q", "cyclotomic:N".
  static FieldPtr from_spec(std::string_view spec);

  std::size_t degree() const { return modulus_.size() - 1; }
  const std::vector<Rat>& modulus() const { return modulus_; }
  const std::string& label() const { return label_; }
  unsigned root_order() const { return root_order_; }

  bool operator==(const NumberField& other) const { return modulus_ == other.modulus_; }

 private:
  std::vector<Rat> modulus_;
  std::string label_;
  unsigned root_order_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// n-th cyclotomic polynomial, coefficients low to high.
std::vector<Rat> cyclotomic_polynomial(unsigned n);

/// Element of a NumberField, stored as its reduced coordinate vector in the power basis.
class AlgNum {
 public:
  AlgNum() = default;
  explicit AlgNum(FieldPtr field);
  AlgNum(FieldPtr field, const Rat& value);
  AlgNum(FieldPtr field, long value) : AlgNum(std::move(field), Rat(value)) {}
  AlgNum(FieldPtr field, std::vector<Rat> coords);

  static AlgNum generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  const Rat& rational() const;

  AlgNum operator-() const;
  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o);
  AlgNum& operator*=(const Rat& r);

  AlgNum inverse() const;
  AlgNum pow(long e) const;

  bool operator==(const AlgNum& o) const;
  bool operator!=(const AlgNum& o) const { return !(*this == o); }

  /// Polynomial in `w`, highest power first, e.g. "1/2*w^3 - 2".
  std::string to_string() const;

 private:
  void check_same(const AlgNum& o) const;

  FieldPtr field_;
  std::vector<Rat> coords_;
};

AlgNum operator+(AlgNum a, const AlgNum& b);
AlgNum operator-(AlgNum a, const AlgNum& b);
AlgNum operator*(AlgNum a, const AlgNum& b);
AlgNum operator/(AlgNum a, const AlgNum& b);
AlgNum operator*(AlgNum a, const Rat& r);
AlgNum operator*(const Rat& r, AlgNum a);

/// Field arithmetic with a single entry point: op is one of + - * /.
AlgNum alg_op(char op, const AlgNum& a, const AlgNum& b);

namespace qpoly {
// Dense polynomials over Q, coefficients low to high, no trailing zeros.
using QPoly = std::vector<Rat>;
void trim(QPoly& p);
QPoly mul(const QPoly& a, const QPoly& b);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly gcd(QPoly a, QPoly b);
QPoly derivative(const QPoly& p);
Rat eval(const QPoly& p, const Rat& x);
}  // namespace qpoly

}  // namespace onepoint
