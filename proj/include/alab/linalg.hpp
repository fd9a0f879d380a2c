#pragma once

#include <vector>

#include "alab/mat.hpp"

namespace alab {

struct QrResult {
    Mat q; // orthogonal, det +1 when input has positive determinant
    Mat r; // upper triangular with positive diagonal
};

// Householder QR with the diagonal of R forced positive.
QrResult qr_positive(const Mat& a);

struct SvdResult {
    Mat u;                      // left orthogonal factor, columns ordered by sigma desc
    std::vector<double> sigma;  // non-negative, non-increasing
    Mat v;                      // right orthogonal factor
};

// One-sided Jacobi SVD (rotations applied to column pairs until mutual
// orthogonality). Deterministic sweep order, good relative accuracy at
// the small sizes used here.
SvdResult jacobi_svd(const Mat& a);

double determinant(const Mat& a); // LU with partial pivoting
Mat inverse(const Mat& a);        // Gauss-Jordan with partial pivoting

// Solves a x = b dense (square, pivoted).
std::vector<double> solve(const Mat& a, const std::vector<double>& b);

// cos of principal angles between span(a cols) and span(b cols); both inputs
// must have orthonormal columns. Returned values are in [0,1], descending.
std::vector<double> principal_cosines(const Mat& a, const Mat& b);

// sin of the largest principal angle between the spans of the leading p
// columns of two orthonormal frames.
double subspace_gap(const Mat& frame_a, const Mat& frame_b, int p);

} // namespace alab
