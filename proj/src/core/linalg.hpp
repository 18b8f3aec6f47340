#pragma once

#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace convexval {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Rat dot(const Vec& a, const Vec& b);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vneg(const Vec& a);
Vec vscale(const Rat& c, const Vec& a);
Vec vzero(int n);
bool lex_less(const Vec& a, const Vec& b);

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat mat_transpose(const Mat& a);
Rat mat_det(Mat a);
std::optional<Mat> mat_inverse(const Mat& a);

// Rank of an m x n matrix (rows may be empty).
int mat_rank(Mat a);

// Solves A x = b for square A; nullopt when A is singular.
std::optional<Vec> solve_linear(Mat a, Vec b);

// Basis of { x : A x = 0 } for an m x n matrix, each vector scaled to coprime integers.
std::vector<Vec> nullspace(Mat a);

// Scales a nonzero rational vector to coprime integer entries with positive leading sign.
Vec primitive_integer_direction(const Vec& v);

}  // namespace convexval
