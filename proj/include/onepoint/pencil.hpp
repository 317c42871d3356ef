#pragma once

// Pencils of plane cubics {l*gen0 + m*gen1}.

#include <optional>
#include <vector>

#include "onepoint/cubiccurve.hpp"
#include "onepoint/upoly.hpp"

namespace onepoint {

// Homogeneous parameter (l : m), normalized so the first nonzero entry is 1.
struct Param {
  AlgNum l, m;

  static Param of(const AlgNum& l, const AlgNum& m);  // BadParam on (0:0)
  static Param affine(const AlgNum& t) { return of(AlgNum(t.field(), 1L), t); }
  static Param infinity(const FieldPtr& field) { return of(AlgNum(field), AlgNum(field, 1L)); }
  bool is_infinity() const { return l.is_zero(); }
  bool operator==(const Param& o) const { return l == o.l && m == o.m; }
  std::string to_string() const { return "(" + l.to_string() + " : " + m.to_string() + ")"; }
};

class Pencil {
 public:
  // Throws NotAPencilOfCurves unless both are cubics over one field and independent.
  Pencil(Form3 gen0, Form3 gen1);

  const Form3& gen0() const { return g0_; }
  const Form3& gen1() const { return g1_; }
  const FieldPtr& field() const { return g0_.field(); }

  Form3 member_form(const Param& p) const { return g0_ * p.l + g1_ * p.m; }
  // Parameter of f if f lies in the span (up to scale).
  std::optional<Param> param_of(const Form3& f) const;
  bool contains(const Form3& f) const { return param_of(f).has_value(); }
  bool same_span(const Pencil& o) const { return contains(o.g0_) && contains(o.g1_); }
  std::string to_string() const { return "<" + g0_.to_string() + ", " + g1_.to_string() + ">"; }

 private:
  Form3 g0_, g1_;
};

Cubic member(const Pencil& P, const Param& p);
Pencil transform(const Pencil& P, const ProjMap& M);  // both generators composed with M

struct BaseLocus {
  std::vector<std::pair<Point2, IMult>> points;  // field-rational base points with multiplicities
  bool complete = false;
  std::optional<Point2> single_nine_point;
};
BaseLocus base_locus(const Pencil& P);

struct DiscProfile {
  BinForm disc;                             // degree 12 in (l : m)
  Profile profile;                          // including the root at (0:1)
  std::vector<std::pair<Param, int>> roots; // resolved roots with multiplicity
  bool complete = false;
  // Multiplicities of distinct roots over the algebraic closure, descending.
  std::vector<int> multiplicities() const;
  int distinct_roots() const;
};
BinForm pencil_discriminant(const Pencil& P);
DiscProfile discriminant_profile(const Pencil& P);  // GenericSingular if disc vanishes

struct SingularMember {
  Param param;
  Form3 form;
  int disc_multiplicity = 0;
  std::vector<SingInfo> singularities;
  bool irreducible = true;
  bool irreducible_certified = false;
};
struct SingularMembers {
  std::vector<SingularMember> members;
  Profile unresolved;  // multiplicity -> degree of discriminant roots not found in the field
};
SingularMembers singular_members(const Pencil& P);

// Members singular at q: the kernel of the gradient conditions at q.
// Empty when no member is; throws GenericSingular when every member is.
std::optional<Param> member_singular_at(const Pencil& P, const Point2& q);

// If the member at p is a triple line, the line.
std::optional<Line> triple_line(const Form3& f);

enum class PencilKind { TypeV, FlexType, NotOneBasePoint, GenericSingular };
const char* pencil_kind_name(PencilKind k);

struct PencilClass {
  PencilKind kind = PencilKind::NotOneBasePoint;
  std::optional<Point2> base_point;
  std::optional<Line> flex_line;           // FlexType: the line l with 3l in the pencil
  std::optional<Param> triple_line_param;  // FlexType: its parameter
};
PencilClass classify(const Pencil& P);

struct ReducibleMember {
  Param param;
  Line line;
};
struct ReducibleScan {
  std::vector<ReducibleMember> members;
  bool complete = false;
};
ReducibleScan reducible_members_scan(const Pencil& P);  // PreconditionFailed without a 9-fold point

bool is_isotrivial(const Pencil& P);

// A smooth member, trying (1:0), (0:1), (1:1), (1:2), ...
Param first_smooth_param(const Pencil& P);

}  // namespace onepoint
