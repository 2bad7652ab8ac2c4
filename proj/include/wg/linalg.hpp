#pragma once

#include "wg/numeric.hpp"

#include <optional>
#include <vector>

namespace wg {

// Dense integer matrix, row major. Zero rows or zero columns are allowed;
// all rows of a given matrix must have equal length.
using IntMatrix = std::vector<std::vector<Integer>>;
using IntVector = std::vector<Integer>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntVector matvec(const IntMatrix& a, const IntVector& x);
IntMatrix transpose(const IntMatrix& m);
std::size_t row_count(const IntMatrix& m);
std::size_t col_count(const IntMatrix& m);

// Fraction-free Gaussian elimination (Bareiss). Requires a square matrix.
Integer determinant(const IntMatrix& m);

// u * m * v = s with u, v unimodular and s diagonal, diagonal entries
// nonnegative and each dividing the next. Pivot selection: smallest nonzero
// absolute value in the remaining submatrix, ties broken row major.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
};
SmithDecomposition smith_normal_form(const IntMatrix& m);

// The nonzero diagonal entries of the Smith form, in divisibility order.
IntVector smith_invariants(const IntMatrix& m);

// u * m = h with u unimodular; h is in row Hermite form: pivot columns
// strictly increase, pivots are positive, entries above a pivot lie in
// [0, pivot), rows below the last pivot are zero.
struct HermiteDecomposition {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
};
HermiteDecomposition hermite_normal_form(const IntMatrix& m);

// Basis of { x : m x = 0 } as a saturated sublattice (a direct summand),
// one basis vector per entry.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

// All integer solutions of a x = b: a particular solution plus a basis of
// the homogeneous solutions. `solvable` is false when no integer solution
// exists (kernel is still returned).
struct IntAffineSolutionSet {
    bool solvable = false;
    IntVector particular;
    std::vector<IntVector> kernel;
};
IntAffineSolutionSet integer_solve(const IntMatrix& a, const IntVector& b);

// The sublattices of Z^2 of index n, each given by its Hermite basis
// [[a, b], [0, d]] with a d = n and 0 <= b < d. There are sigma(n) of them.
std::vector<IntMatrix> sublattices_of_index(const Integer& n);

}  // namespace wg
