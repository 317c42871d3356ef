#pragma once

// Elimination of z between two ternary forms and the common zeros it yields.

#include <optional>
#include <vector>

#include "onepoint/polyforms.hpp"
#include "onepoint/upoly.hpp"

namespace onepoint {

// Res_z(F, G) as a binary form of degree deg F * deg G in (x, y).
// Requires F(0,0,1) and G(0,0,1) nonzero.
BinForm resultant_z(const Form3& F, const Form3& G);

// Shear [[1,0,0],[0,1,0],[a,b,1]] from a fixed candidate list such that every
// form is nonzero at (a : b : 1); `skip` selects a later admissible candidate.
ProjMap shear_for(const std::vector<Form3>& forms, std::size_t skip = 0);

// F(x0, y0, z) as a polynomial in z.
UPoly restrict_z(const Form3& F, const AlgNum& x0, const AlgNum& y0);

struct CommonZeros {
  std::vector<Point2> points;
  bool complete = false;  // every common zero has been found
};

// Throws CommonComponent when F and G share a factor.
CommonZeros common_zeros(const Form3& F, const Form3& G, std::size_t skip = 0);

// The unique common zero when Res_z is a perfect N-th power of a linear form
// (N = deg F * deg G) and z is recovered as a single root; nullopt otherwise.
std::optional<Point2> single_common_point(const Form3& F, const Form3& G, std::size_t skip = 0);

}  // namespace onepoint
