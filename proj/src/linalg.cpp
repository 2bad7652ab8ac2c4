#include "wg/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace wg {

std::size_t row_count(const IntMatrix& m) { return m.size(); }
std::size_t col_count(const IntMatrix& m) { return m.empty() ? 0 : m.front().size(); }

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = row_count(a), k = col_count(a), p = col_count(b);
    if (k != row_count(b)) throw std::invalid_argument("matmul: shape mismatch");
    IntMatrix c(n, IntVector(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

IntVector matvec(const IntMatrix& a, const IntVector& x) {
    if (col_count(a) != x.size()) throw std::invalid_argument("matvec: shape mismatch");
    IntVector y(row_count(a), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(col_count(m), IntVector(row_count(m)));
    for (std::size_t i = 0; i < row_count(m); ++i)
        for (std::size_t j = 0; j < col_count(m); ++j) t[j][i] = m[i][j];
    return t;
}

Integer determinant(const IntMatrix& m) {
    const std::size_t n = row_count(m);
    if (n != col_count(m)) throw std::invalid_argument("determinant: matrix not square");
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += factor * m[src][j];
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] += factor * m[i][src];
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (auto& e : m[r]) e = -e;
}

void negate_col(IntMatrix& m, std::size_t c) {
    for (auto& row : m) row[c] = -row[c];
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = row_count(m), cols = col_count(m);
    SmithDecomposition d{identity_matrix(rows), m, identity_matrix(cols)};
    IntMatrix& s = d.s;

    const auto abs_of = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };

    for (std::size_t k = 0; k < rows && k < cols; ++k) {
        for (;;) {
            // Pivot: smallest nonzero absolute value in the remaining block,
            // ties broken in row-major order.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    if (s[i][j] == 0) continue;
                    if (pr == rows || abs_of(s[i][j]) < abs_of(s[pr][pc])) pr = i, pc = j;
                }
            if (pr == rows) {
                // Remaining block is zero; the form is finished.
                for (std::size_t i = k; i < rows && i < cols; ++i)
                    if (s[i][i] < 0) negate_row(s, i), negate_row(d.u, i);
                return d;
            }
            if (pr != k) std::swap(s[pr], s[k]), std::swap(d.u[pr], d.u[k]);
            swap_cols(s, pc, k), swap_cols(d.v, pc, k);

            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i)
                if (s[i][k] != 0) {
                    Integer q = s[i][k] / s[k][k];
                    add_row(s, i, k, -q), add_row(d.u, i, k, -q);
                    if (s[i][k] != 0) clean = false;
                }
            for (std::size_t j = k + 1; j < cols; ++j)
                if (s[k][j] != 0) {
                    Integer q = s[k][j] / s[k][k];
                    add_col(s, j, k, -q), add_col(d.v, j, k, -q);
                    if (s[k][j] != 0) clean = false;
                }
            if (!clean) continue;

            // Enforce the divisibility chain: fold a non-multiple into row k.
            bool divisible = true;
            for (std::size_t i = k + 1; i < rows && divisible; ++i)
                for (std::size_t j = k + 1; j < cols && divisible; ++j)
                    if (s[i][j] % s[k][k] != 0) {
                        add_row(s, k, i, 1), add_row(d.u, k, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (s[k][k] < 0) negate_row(s, k), negate_row(d.u, k);
    }
    return d;
}

IntVector smith_invariants(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    IntVector inv;
    for (std::size_t i = 0; i < row_count(d.s) && i < col_count(d.s); ++i)
        if (d.s[i][i] != 0) inv.push_back(d.s[i][i]);
    return inv;
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
    const std::size_t rows = row_count(m), cols = col_count(m);
    HermiteDecomposition d{m, identity_matrix(rows), 0};
    IntMatrix& h = d.h;

    const auto abs_of = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = pivot_row; i < rows; ++i)
                if (h[i][col] != 0 && (best == rows || abs_of(h[i][col]) < abs_of(h[best][col])))
                    best = i;
            if (best == rows) break;
            if (best != pivot_row) std::swap(h[best], h[pivot_row]), std::swap(d.u[best], d.u[pivot_row]);

            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < rows; ++i)
                if (h[i][col] != 0) {
                    Integer q = h[i][col] / h[pivot_row][col];
                    add_row(h, i, pivot_row, -q), add_row(d.u, i, pivot_row, -q);
                    if (h[i][col] != 0) clean = false;
                }
            if (clean) break;
        }
        if (pivot_row < rows && h[pivot_row][col] != 0) {
            if (h[pivot_row][col] < 0) negate_row(h, pivot_row), negate_row(d.u, pivot_row);
            for (std::size_t i = 0; i < pivot_row; ++i) {
                Integer q = floor_div(h[i][col], h[pivot_row][col]);
                add_row(h, i, pivot_row, -q), add_row(d.u, i, pivot_row, -q);
            }
            ++pivot_row;
        }
    }
    d.rank = pivot_row;
    return d;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
    // Rows u of the Hermite transform with u * m^T = 0 satisfy m u^T = 0;
    // they form a basis of a direct summand because the transform is unimodular.
    HermiteDecomposition d = hermite_normal_form(transpose(m));
    std::vector<IntVector> basis;
    for (std::size_t i = d.rank; i < row_count(d.u); ++i) basis.push_back(d.u[i]);
    return basis;
}

IntAffineSolutionSet integer_solve(const IntMatrix& a, const IntVector& b) {
    const std::size_t rows = row_count(a), cols = col_count(a);
    if (b.size() != rows) throw std::invalid_argument("integer_solve: shape mismatch");

    SmithDecomposition d = smith_normal_form(a);
    IntVector c = matvec(d.u, b);

    IntAffineSolutionSet out;
    IntVector y(cols, 0);
    out.solvable = true;
    for (std::size_t i = 0; i < rows; ++i) {
        Integer s = (i < cols) ? d.s[i][i] : Integer(0);
        if (s == 0) {
            if (c[i] != 0) out.solvable = false;
        } else if (c[i] % s != 0) {
            out.solvable = false;
        } else {
            y[i] = c[i] / s;
        }
    }
    if (out.solvable) out.particular = matvec(d.v, y);

    for (std::size_t j = 0; j < cols; ++j) {
        bool zero_col = j >= rows || d.s[j][j] == 0;
        if (!zero_col) continue;
        IntVector k(cols);
        for (std::size_t i = 0; i < cols; ++i) k[i] = d.v[i][j];
        out.kernel.push_back(std::move(k));
    }
    return out;
}

std::vector<IntMatrix> sublattices_of_index(const Integer& n) {
    if (n <= 0) throw std::invalid_argument("sublattices_of_index: index must be positive");
    std::vector<IntMatrix> result;
    for (Integer a = 1; a <= n; ++a) {
        if (n % a != 0) continue;
        Integer d = n / a;
        for (Integer b = 0; b < d; ++b)
            result.push_back(IntMatrix{{a, b}, {Integer(0), d}});
    }
    return result;
}

}  // namespace wg
