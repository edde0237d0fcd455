#pragma once

#include "mfckit/category.hpp"

namespace mfc {

struct NullSpace {
  Mat basis;                 // orthonormal columns
  int nullity = 0;
  double smallest_kept = 0;  // smallest singular value counted as nonzero
  double largest_dropped = 0;
  double largest = 0;
};

// Null space of A with singular values below rel_tol * sigma_max treated as zero.
NullSpace nullspace(const Mat& A, double rel_tol);
double min_singular_value(const Mat& A);
int numerical_rank(const Mat& A, double rel_tol);

}  // namespace mfc
