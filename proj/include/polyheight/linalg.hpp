#ifndef POLYHEIGHT_LINALG_HPP
#define POLYHEIGHT_LINALG_HPP

#include <optional>
#include <vector>

#include "polyheight/rational.hpp"

namespace polyheight {

// Dense exact linear algebra for the small systems this library meets
// (dimensions stay in the single digits). Plain Gaussian elimination with
// first-nonzero pivoting; pivot choice is deterministic.

int matRank(QMat a);

// Determinant of a square matrix.
Q matDet(QMat a);

// Any solution of A x = b (A is m x n), or nullopt if inconsistent.
std::optional<QVec> solveLinear(QMat a, QVec b);

// Basis of the null space of A (each basis vector has length n).
std::vector<QVec> kernelBasis(QMat a);

QVec matVec(const QMat& a, const QVec& x);
QMat matMul(const QMat& a, const QMat& b);
QMat transpose(const QMat& a);

// Exact PSD test for a symmetric matrix via LDL^T with nonnegative pivots:
// a zero diagonal pivot forces its whole residual row to vanish.
bool isPositiveSemidefinite(const QMat& sym);

// Z-basis of the saturated lattice {x in Z^n : E x = 0} for a rational
// matrix E; the kernel of E over Q intersected with Z^n. Columns returned
// as integer vectors. Used for unimodular charts of rational subspaces.
std::vector<QVec> integerKernelBasis(const QMat& e);

}  // namespace polyheight

#endif
