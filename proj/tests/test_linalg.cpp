#include "doctest.h"

#include "wg/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using wg::IntMatrix;
using wg::Integer;
using wg::IntVector;

namespace {

// Independent determinant oracle: Laplace expansion along the first row.
Integer laplace_det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IntMatrix sub;
        for (std::size_t i = 1; i < n; ++i) {
            IntVector row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            sub.push_back(row);
        }
        Integer term = m[0][j] * laplace_det(sub);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

// gcd of all k x k minors; 0 when every such minor vanishes.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    combinations(m.size(), k, row_sets);
    combinations(m[0].size(), k, col_sets);
    Integer g = 0;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            IntMatrix sub(k, IntVector(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
            g = boost::multiprecision::gcd(g, laplace_det(sub));
        }
    return g < 0 ? Integer(-g) : g;
}

IntVector invariants_from_minors(const IntMatrix& m) {
    IntVector inv;
    Integer prev = 1;
    std::size_t bound = std::min(m.size(), m[0].size());
    for (std::size_t k = 1; k <= bound; ++k) {
        Integer g = determinantal_divisor(m, k);
        if (g == 0) break;
        inv.push_back(g / prev);
        prev = g;
    }
    return inv;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int span) {
    std::uniform_int_distribution<int> dist(-span, span);
    IntMatrix m(rows, IntVector(cols));
    for (auto& row : m)
        for (auto& e : row) e = dist(rng);
    return m;
}

bool is_row_hermite(const IntMatrix& h) {
    long last_pivot_col = -1;
    std::size_t i = 0;
    for (; i < h.size(); ++i) {
        std::size_t j = 0;
        while (j < h[i].size() && h[i][j] == 0) ++j;
        if (j == h[i].size()) break;  // zero rows must come last
        if (static_cast<long>(j) <= last_pivot_col) return false;
        if (h[i][j] <= 0) return false;
        for (std::size_t above = 0; above < i; ++above)
            if (h[above][j] < 0 || h[above][j] >= h[i][j]) return false;
        last_pivot_col = static_cast<long>(j);
    }
    for (; i < h.size(); ++i)
        for (const auto& e : h[i])
            if (e != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("smith invariants of frozen matrices") {
    CHECK(wg::smith_invariants({{2, 0}, {0, 3}}) == IntVector{1, 6});
    CHECK(wg::smith_invariants({{6, 0}, {0, 10}}) == IntVector{2, 30});
    CHECK(wg::smith_invariants({{2, 4}, {6, 8}}) == IntVector{2, 4});
    CHECK(wg::smith_invariants({{4, 6}, {6, 9}}) == IntVector{1});
    CHECK(wg::smith_invariants({{0, 0}, {0, 0}}) == IntVector{});
    CHECK(wg::smith_invariants({{1, 0}, {0, 1}}) == IntVector{1, 1});
}

TEST_CASE("smith form agrees with determinantal divisors on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, 9);
        CHECK(wg::smith_invariants(m) == invariants_from_minors(m));
    }
}

TEST_CASE("smith transforms are unimodular and reproduce the form") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 3) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, 6);
        auto d = wg::smith_normal_form(m);
        Integer du = laplace_det(d.u), dv = laplace_det(d.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        CHECK(wg::matmul(wg::matmul(d.u, m), d.v) == d.s);
        Integer prev = 0;
        for (std::size_t i = 0; i < rows && i < cols; ++i) {
            for (std::size_t j = 0; j < cols; ++j)
                if (j != i) CHECK(d.s[i][j] == 0);
            CHECK(d.s[i][i] >= 0);
            if (prev != 0 && d.s[i][i] != 0) CHECK(d.s[i][i] % prev == 0);
            prev = d.s[i][i];
        }
    }
}

TEST_CASE("hermite form of frozen matrices") {
    auto d1 = wg::hermite_normal_form({{1, 2}, {3, 4}});
    CHECK(d1.h == IntMatrix{{1, 0}, {0, 2}});
    auto d2 = wg::hermite_normal_form({{4, 6}, {6, 9}});
    CHECK(d2.h == IntMatrix{{2, 3}, {0, 0}});
    CHECK(d2.rank == 1);
}

TEST_CASE("hermite form of 2x2 matrices matches exhaustive unimodular search") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix m = random_matrix(rng, 2, 2, 5);
        std::set<IntMatrix> candidates;
        for (int a = -6; a <= 6; ++a)
            for (int b = -6; b <= 6; ++b)
                for (int c = -6; c <= 6; ++c)
                    for (int d = -6; d <= 6; ++d) {
                        int det = a * d - b * c;
                        if (det != 1 && det != -1) continue;
                        IntMatrix u{{Integer(a), Integer(b)}, {Integer(c), Integer(d)}};
                        IntMatrix h = wg::matmul(u, m);
                        if (is_row_hermite(h)) candidates.insert(h);
                    }
        REQUIRE(!candidates.empty());
        CHECK(candidates.size() == 1);
        auto d = wg::hermite_normal_form(m);
        CHECK(d.h == *candidates.begin());
        CHECK(wg::matmul(d.u, m) == d.h);
    }
}

TEST_CASE("hermite form properties on random rectangular matrices") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 5) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, 7);
        auto d = wg::hermite_normal_form(m);
        CHECK(is_row_hermite(d.h));
        Integer du = laplace_det(d.u);
        CHECK((du == 1 || du == -1));
        CHECK(wg::matmul(d.u, m) == d.h);
        // Mutual row-span containment: every row of m solves over h's rows
        // and vice versa.
        IntMatrix ht = wg::transpose(d.h), mt = wg::transpose(m);
        for (std::size_t i = 0; i < rows; ++i) {
            CHECK(wg::integer_solve(ht, m[i]).solvable);
            CHECK(wg::integer_solve(mt, d.h[i]).solvable);
        }
    }
}

TEST_CASE("kernel basis is correct and saturated") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, 6);
        auto basis = wg::kernel_basis(m);
        for (const auto& k : basis) {
            IntVector image = wg::matvec(m, k);
            for (const auto& e : image) CHECK(e == 0);
        }
        if (!basis.empty()) {
            IntMatrix b(basis.begin(), basis.end());
            IntVector inv = wg::smith_invariants(b);
            CHECK(inv.size() == basis.size());
            for (const auto& e : inv) CHECK(e == 1);
        }
        // Kernel rank + row rank = column count.
        CHECK(basis.size() + wg::hermite_normal_form(m).rank == cols);
    }
}

TEST_CASE("integer solve matches brute force on small boxes") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 2) % 3;
        IntMatrix a = random_matrix(rng, rows, cols, 4);
        IntVector b(rows);
        std::uniform_int_distribution<int> dist(-6, 6);
        for (auto& e : b) e = dist(rng);

        bool brute = false;
        std::vector<long> x(cols, -8);
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; i < rows && ok; ++i) {
                Integer acc = 0;
                for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * Integer(x[j]);
                ok = acc == b[i];
            }
            if (ok) {
                brute = true;
                break;
            }
            std::size_t j = 0;
            while (j < cols && x[j] == 8) x[j++] = -8;
            if (j == cols) break;
            ++x[j];
        }

        auto sol = wg::integer_solve(a, b);
        if (brute) {
            // A box solution exists, so the solver must find one too.
            CHECK(sol.solvable);
        }
        if (sol.solvable) {
            CHECK(wg::matvec(a, sol.particular) == b);
            for (const auto& k : sol.kernel) {
                IntVector image = wg::matvec(a, k);
                for (const auto& e : image) CHECK(e == 0);
            }
        }
    }
}

TEST_CASE("sublattice enumeration counts sigma of n") {
    const int sigma[] = {0, 1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28};
    for (int n = 1; n <= 12; ++n) {
        auto subs = wg::sublattices_of_index(Integer(n));
        CHECK(subs.size() == static_cast<std::size_t>(sigma[n]));
        std::set<IntMatrix> distinct(subs.begin(), subs.end());
        CHECK(distinct.size() == subs.size());
        for (const auto& s : subs) {
            CHECK(s[0][0] * s[1][1] == n);
            CHECK(s[1][0] == 0);
            CHECK(s[0][1] >= 0);
            CHECK(s[0][1] < s[1][1]);
        }
    }
}

TEST_CASE("determinant agrees with Laplace expansion") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 4;
        IntMatrix m = random_matrix(rng, n, n, 9);
        CHECK(wg::determinant(m) == laplace_det(m));
    }
    CHECK(wg::determinant(IntMatrix{}) == 1);
}
