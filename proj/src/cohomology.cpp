#include "wg/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wg {

std::size_t Cocycle2::index_of(const Mat2& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || !(*it == m))
        throw std::invalid_argument("Cocycle2: element not in the group");
    return static_cast<std::size_t>(it - elements.begin());
}

std::array<Integer, 2> Cocycle2::at(const Mat2& m, const Mat2& n) const {
    if (m.is_identity() || n.is_identity()) return {0, 0};
    std::size_t base = (index_of(m) * elements.size() + index_of(n)) * 2;
    return {values[base], values[base + 1]};
}

Cocycle2 operator+(const Cocycle2& a, const Cocycle2& b) {
    if (a.elements != b.elements)
        throw std::invalid_argument("Cocycle2: mismatched groups");
    Cocycle2 sum = a;
    for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += b.values[i];
    return sum;
}

namespace {

void normalize_row_sign(IntVector& row) {
    for (const auto& e : row) {
        if (e > 0) return;
        if (e < 0) {
            for (auto& x : row) x = -x;
            return;
        }
    }
}

}  // namespace

CohomologyGroup::CohomologyGroup(PointGroup g) : group_(std::move(g)) {
    for (const auto& m : group_.elements)
        if (!m.is_identity()) nontrivial_.push_back(m);
    const std::size_t m = nontrivial_.size();
    if (m == 0) return;
    const std::size_t dim2 = 2 * m * m;

    auto index_of = [&](const Mat2& x) -> std::ptrdiff_t {
        if (x.is_identity()) return -1;
        auto it = std::lower_bound(nontrivial_.begin(), nontrivial_.end(), x);
        return it - nontrivial_.begin();
    };
    auto col = [&](std::size_t i, std::size_t j, int comp) { return (i * m + j) * 2 + comp; };

    // Cocycle condition rows over all triples of non-identity elements;
    // duplicates and zero rows carry no information and are dropped.
    std::set<IntVector> rows;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Mat2 &mm = nontrivial_[i], &nn = nontrivial_[j], &pp = nontrivial_[k];
                IntVector row0(dim2, 0), row1(dim2, 0);
                row0[col(j, k, 0)] += mm.a;
                row0[col(j, k, 1)] += mm.b;
                row1[col(j, k, 0)] += mm.c;
                row1[col(j, k, 1)] += mm.d;
                if (auto f = index_of(mm * nn); f >= 0) {
                    row0[col(f, k, 0)] -= 1;
                    row1[col(f, k, 1)] -= 1;
                }
                if (auto f = index_of(nn * pp); f >= 0) {
                    row0[col(i, f, 0)] += 1;
                    row1[col(i, f, 1)] += 1;
                }
                row0[col(i, j, 0)] -= 1;
                row1[col(i, j, 1)] -= 1;
                for (auto* row : {&row0, &row1}) {
                    normalize_row_sign(*row);
                    if (std::any_of(row->begin(), row->end(),
                                    [](const Integer& e) { return e != 0; }))
                        rows.insert(std::move(*row));
                }
            }

    IntMatrix conditions(rows.begin(), rows.end());
    auto h = hermite_normal_form(transpose(conditions));
    noncocycle_rows_ = h.rank;
    for (std::size_t i = h.rank; i < dim2; ++i) kernel_.push_back(h.u[i]);

    auto inv = hermite_normal_form(h.u);
    if (inv.h != identity_matrix(dim2))
        throw std::logic_error("cohomology: transform inversion failed");
    kernel_coord_ = transpose(inv.u);

    // Coboundary images of the 1-cochain basis, in kernel coordinates.
    const std::size_t r = kernel_.size();
    IntMatrix boundary(r, IntVector(2 * m, 0));
    for (std::size_t j = 0; j < m; ++j)
        for (int comp = 0; comp < 2; ++comp) {
            IntVector image(dim2, 0);
            for (std::size_t i1 = 0; i1 < m; ++i1)
                for (std::size_t i2 = 0; i2 < m; ++i2) {
                    const Mat2& mm = nontrivial_[i1];
                    if (i2 == j) {
                        image[col(i1, i2, 0)] += comp == 0 ? mm.a : mm.b;
                        image[col(i1, i2, 1)] += comp == 0 ? mm.c : mm.d;
                    }
                    if (index_of(mm * nontrivial_[i2]) == static_cast<std::ptrdiff_t>(j))
                        image[col(i1, i2, comp)] -= 1;
                    if (i1 == j) image[col(i1, i2, comp)] += 1;
                }
            IntVector alpha = matvec(kernel_coord_, image);
            for (std::size_t i = 0; i < noncocycle_rows_; ++i)
                if (alpha[i] != 0) throw std::logic_error("cohomology: coboundary not a cocycle");
            for (std::size_t i = 0; i < r; ++i) boundary[i][j * 2 + comp] = alpha[noncocycle_rows_ + i];
        }

    auto snf = smith_normal_form(boundary);
    quotient_u_ = snf.u;
    for (std::size_t i = 0; i < r; ++i) {
        Integer d = i < col_count(snf.s) ? snf.s[i][i] : Integer(0);
        if (d == 0) throw std::logic_error("cohomology: quotient is not finite");
        diag_.push_back(d);
        if (d >= 2) {
            torsion_positions_.push_back(i);
            torsion_.push_back(d);
        }
    }

    // The Smith basis is underdetermined between equal invariant factors, so
    // fix the published coordinate order: a basis class that forces a glide
    // at an earlier reflection comes first. The restriction of a cocycle to
    // the subgroup generated by a reflection s is nontrivial exactly when
    // c(s, s) lies outside (1 + s) Z^2, an integral solvability test.
    coordinate_order_.resize(torsion_.size());
    std::iota(coordinate_order_.begin(), coordinate_order_.end(), 0);
    if (torsion_.size() > 1) {
        std::vector<std::vector<bool>> glides(torsion_.size());
        for (std::size_t i = 0; i < torsion_.size(); ++i) {
            Cocycle2 c = smith_basis_cocycle(i);
            for (const auto& s : nontrivial_) {
                if (s.det() != -1) continue;
                auto v = c.at(s, s);
                IntMatrix norm{{1 + s.a, s.b}, {s.c, 1 + s.d}};
                glides[i].push_back(!integer_solve(norm, IntVector{v[0], v[1]}).solvable);
            }
        }
        std::size_t lo = 0;
        while (lo < torsion_.size()) {
            std::size_t hi = lo + 1;
            while (hi < torsion_.size() && torsion_[hi] == torsion_[lo]) ++hi;
            std::stable_sort(coordinate_order_.begin() + static_cast<std::ptrdiff_t>(lo),
                             coordinate_order_.begin() + static_cast<std::ptrdiff_t>(hi),
                             [&](std::size_t a, std::size_t b) { return glides[a] > glides[b]; });
            lo = hi;
        }
    }
}

Integer CohomologyGroup::order() const {
    Integer n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
}

std::vector<Integer> CohomologyGroup::coordinates_of(const Cocycle2& c) const {
    if (c.elements != nontrivial_ || c.values.size() != 2 * nontrivial_.size() * nontrivial_.size())
        throw std::invalid_argument("coordinates_of: cochain shape mismatch");
    if (nontrivial_.empty()) return {};
    IntVector alpha = matvec(kernel_coord_, c.values);
    for (std::size_t i = 0; i < noncocycle_rows_; ++i)
        if (alpha[i] != 0) throw std::invalid_argument("coordinates_of: not a cocycle");
    IntVector x(alpha.begin() + static_cast<std::ptrdiff_t>(noncocycle_rows_), alpha.end());
    IntVector y = matvec(quotient_u_, x);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < torsion_positions_.size(); ++i) {
        const std::size_t k = coordinate_order_[i];
        Integer residue = y[torsion_positions_[k]] % torsion_[k];
        if (residue < 0) residue += torsion_[k];
        out.push_back(residue);
    }
    return out;
}

bool CohomologyGroup::is_coboundary(const Cocycle2& c) const {
    auto coords = coordinates_of(c);
    return std::all_of(coords.begin(), coords.end(), [](const Integer& e) { return e == 0; });
}

Cocycle2 CohomologyGroup::zero_cocycle() const {
    return {nontrivial_, IntVector(2 * nontrivial_.size() * nontrivial_.size(), 0)};
}

Cocycle2 CohomologyGroup::basis_cocycle(std::size_t i) const {
    if (i >= torsion_positions_.size()) throw std::out_of_range("basis_cocycle");
    return smith_basis_cocycle(coordinate_order_[i]);
}

Cocycle2 CohomologyGroup::smith_basis_cocycle(std::size_t i) const {
    const std::size_t r = kernel_.size();
    auto inv = hermite_normal_form(quotient_u_);
    if (inv.h != identity_matrix(r)) throw std::logic_error("basis_cocycle: transform inversion failed");
    IntVector unit(r, 0);
    unit[torsion_positions_[i]] = 1;
    IntVector x = matvec(inv.u, unit);
    Cocycle2 c = zero_cocycle();
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t v = 0; v < c.values.size(); ++v) c.values[v] += x[j] * kernel_[j][v];
    return c;
}

const CohomologyGroup& h2_of_point_group(const PointGroup& g) {
    static std::map<std::vector<Mat2>, std::unique_ptr<CohomologyGroup>> cache;
    auto it = cache.find(g.elements);
    if (it == cache.end())
        it = cache.emplace(g.elements, std::make_unique<CohomologyGroup>(g)).first;
    return *it->second;
}

Cocycle2 cocycle_of_group(const CrystalGroup& g) {
    if (g.lattice != Lattice::standard())
        throw std::invalid_argument("cocycle_of_group: group must be on the standard lattice");
    std::vector<Mat2> elements;
    for (const auto& [m, t] : g.vector_system)
        if (!m.is_identity()) elements.push_back(m);
    const std::size_t n = elements.size();
    Cocycle2 c{elements, IntVector(2 * n * n, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Mat2 &mm = elements[i], &nn = elements[j];
            Vec2 value = g.translation_part(mm) + mm * g.translation_part(nn) -
                         g.translation_part(mm * nn);
            if (!value.is_integral()) throw std::logic_error("cocycle_of_group: non-integral cocycle");
            c.values[(i * n + j) * 2] = num(value.x);
            c.values[(i * n + j) * 2 + 1] = num(value.y);
        }
    return c;
}

CrystalGroup extension_from_cocycle(const PointGroup& g, const Cocycle2& c) {
    const Integer n = Integer(g.order());
    std::map<Mat2, Vec2> system;
    system[Mat2::identity()] = Vec2{};
    for (const auto& m : g.elements) {
        if (m.is_identity()) continue;
        Vec2 sigma{};
        for (const auto& other : g.elements) {
            if (other.is_identity()) continue;
            auto v = c.at(m, other);
            sigma = sigma + Vec2{Rational(v[0]), Rational(v[1])};
        }
        system[m] = Vec2{sigma.x / n, sigma.y / n};
    }
    return make_crystal_group(Lattice::standard(), system);
}

std::vector<Integer> class_of_group(const CrystalGroup& g) {
    const CrystalGroup* on_standard = &g;
    CrystalGroup rebased;
    if (g.lattice != Lattice::standard()) {
        rebased = rebase(g).group;
        on_standard = &rebased;
    }
    PointGroup pg{on_standard->holonomy()};
    return h2_of_point_group(pg).coordinates_of(cocycle_of_group(*on_standard));
}

bool restriction_is_trivial(const CrystalGroup& g, const std::vector<Mat2>& subgroup) {
    std::vector<Mat2> sub;
    for (const auto& m : subgroup)
        if (!m.is_identity()) sub.push_back(m);
    if (sub.empty()) return true;

    Integer scale = 1;
    for (const auto& m : sub) {
        Vec2 t = g.translation_part(m);  // throws when m is outside the holonomy
        scale = boost::multiprecision::lcm(scale, lcm_denominators(t));
    }
    for (const auto& b : g.lattice.basis())
        scale = boost::multiprecision::lcm(scale, lcm_denominators(b));
    scale *= Integer(sub.size() + 1);

    // One common fixed point p = u / scale with lattice offsets k_m solves
    //   (1 - m) u + scale * basis * k_m = scale * t_m     for every m.
    const Vec2 b1 = g.lattice.basis()[0], b2 = g.lattice.basis()[1];
    const std::size_t cols = 2 + 2 * sub.size();
    IntMatrix a;
    IntVector rhs;
    for (std::size_t s = 0; s < sub.size(); ++s) {
        const Mat2& m = sub[s];
        Vec2 t = g.translation_part(m);
        IntVector row0(cols, 0), row1(cols, 0);
        row0[0] = 1 - m.a;
        row0[1] = -m.b;
        row1[0] = -m.c;
        row1[1] = 1 - m.d;
        row0[2 + 2 * s] = num(Rational(scale) * b1.x);
        row0[3 + 2 * s] = num(Rational(scale) * b2.x);
        row1[2 + 2 * s] = num(Rational(scale) * b1.y);
        row1[3 + 2 * s] = num(Rational(scale) * b2.y);
        a.push_back(row0);
        a.push_back(row1);
        rhs.push_back(num(Rational(scale) * t.x));
        rhs.push_back(num(Rational(scale) * t.y));
    }
    return integer_solve(a, rhs).solvable;
}

}  // namespace wg
