#include "mfckit/linalg.hpp"

#include <algorithm>

namespace mfc {

NullSpace nullspace(const Mat& A, double rel_tol) {
  NullSpace out;
  const Eigen::Index n = A.cols();
  if (n == 0) return out;
  if (A.rows() == 0) {
    out.nullity = static_cast<int>(n);
    out.basis = Mat::Identity(n, n);
    return out;
  }
  // Tall systems are compressed to their R factor first; singular values are unchanged.
  Mat M;
  if (A.rows() > 2 * n) {
    Eigen::HouseholderQR<Mat> qr(A);
    M = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  } else {
    M = A;
  }
  Eigen::BDCSVD<Mat> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  out.largest = sv.size() ? sv(0) : 0.0;
  const double cut = rel_tol * std::max(out.largest, 1e-300);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (out.largest > 0 && sv(i) > cut) ++rank;
  out.smallest_kept = rank ? sv(rank - 1) : 0.0;
  out.largest_dropped = rank < sv.size() ? sv(rank) : 0.0;
  out.nullity = static_cast<int>(n - rank);
  out.basis = svd.matrixV().rightCols(out.nullity);
  return out;
}

double min_singular_value(const Mat& A) {
  if (A.size() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(A);
  return svd.singularValues().minCoeff();
}

int numerical_rank(const Mat& A, double rel_tol) {
  if (A.size() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(A);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > rel_tol * sv(0)).count());
}

}  // namespace mfc
