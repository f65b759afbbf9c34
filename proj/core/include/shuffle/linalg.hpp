#pragma once

// Dense exact linear algebra over Q(q,t).  Matrices are small (graded pieces
// of polynomial spaces), so fraction-full Gaussian elimination is fine.

#include <optional>
#include <vector>

#include "shuffle/qt.hpp"

namespace shuffle {

using QTVec = std::vector<QT>;
using QTMat = std::vector<QTVec>;  // row-major

QTMat qtmat(int rows, int cols);
QTMat identity_mat(int n);
QTMat mat_mul(const QTMat& a, const QTMat& b);
QTVec mat_vec(const QTMat& a, const QTVec& v);

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref(QTMat& a);

// One solution of A x = b (free variables zero), or nullopt if inconsistent.
std::optional<QTVec> solve(QTMat a, QTVec b);

// Rows form a basis of {x : A x = 0}.
QTMat nullspace(QTMat a);

// Inverse of a square matrix; throws std::invalid_argument if singular.
QTMat inverse(const QTMat& a);

}  // namespace shuffle
