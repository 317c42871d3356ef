#pragma once

// Exact dense linear algebra over a number field.

#include <vector>

#include "onepoint/exactfield.hpp"

namespace onepoint {

using Vec = std::vector<AlgNum>;
using Mat = std::vector<Vec>;

struct Rref {
  Mat rows;                         // nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Rref rref(const Mat& m, const FieldPtr& field, std::size_t ncols);
std::size_t rank(const Mat& m, const FieldPtr& field, std::size_t ncols);
// Basis of {v : m v = 0}, one vector per free column in increasing order.
std::vector<Vec> kernel(const Mat& m, const FieldPtr& field, std::size_t ncols);
// Fraction-free (Bareiss) determinant.
AlgNum det(Mat m, const FieldPtr& field);

}  // namespace onepoint
