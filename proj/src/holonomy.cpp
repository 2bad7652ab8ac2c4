#include "wg/holonomy.hpp"

#include "wg/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wg {

bool PointGroup::contains(const Mat2& m) const {
    return std::binary_search(elements.begin(), elements.end(), m);
}

PointGroup close_point_group(const std::vector<Mat2>& generators) {
    std::set<Mat2> closure{Mat2::identity()};
    std::vector<Mat2> queue{Mat2::identity()};
    std::vector<Mat2> step;
    for (const auto& g : generators) {
        Integer det = g.det();
        if (det != 1 && det != -1)
            throw std::invalid_argument("point group generators must be unimodular");
        step.push_back(g);
        step.push_back(g.inverse());
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& g : step) {
            Mat2 prod = queue[qi] * g;
            if (closure.insert(prod).second) {
                if (closure.size() > 12) throw NotFinite();
                queue.push_back(prod);
            }
        }
    }
    return PointGroup{{closure.begin(), closure.end()}};
}

std::string to_string(PointGroupClass c) {
    switch (c) {
        case PointGroupClass::Trivial: return "trivial";
        case PointGroupClass::C2Rotation: return "C2-rotation";
        case PointGroupClass::C2Mirror: return "C2-mirror";
        case PointGroupClass::C2Glide: return "C2-glide";
        case PointGroupClass::C3: return "C3";
        case PointGroupClass::C4: return "C4";
        case PointGroupClass::C6: return "C6";
        case PointGroupClass::D2Mixed: return "D2-mixed";
        case PointGroupClass::D2Axes: return "D2-axes";
        case PointGroupClass::D3Long: return "D3-long";
        case PointGroupClass::D3Short: return "D3-short";
        case PointGroupClass::D4: return "D4";
        case PointGroupClass::D6: return "D6";
    }
    return "?";
}

PointGroup representative(PointGroupClass c) {
    switch (c) {
        case PointGroupClass::Trivial: return close_point_group({});
        case PointGroupClass::C2Rotation: return close_point_group({half_turn()});
        case PointGroupClass::C2Mirror: return close_point_group({diagonal_mirror()});
        case PointGroupClass::C2Glide: return close_point_group({axis_mirror()});
        case PointGroupClass::C3: return close_point_group({third_turn()});
        case PointGroupClass::C4: return close_point_group({quarter_turn()});
        case PointGroupClass::C6: return close_point_group({sixth_turn()});
        case PointGroupClass::D2Mixed:
            return close_point_group({half_turn(), diagonal_mirror()});
        case PointGroupClass::D2Axes:
            return close_point_group({half_turn(), axis_mirror()});
        case PointGroupClass::D3Long:
            return close_point_group({third_turn(), diagonal_mirror()});
        case PointGroupClass::D3Short:
            return close_point_group({third_turn(), hex_mirror()});
        case PointGroupClass::D4:
            return close_point_group({quarter_turn(), diagonal_mirror()});
        case PointGroupClass::D6:
            return close_point_group({sixth_turn(), diagonal_mirror()});
    }
    throw std::invalid_argument("representative: unknown class");
}

bool is_glide_kind(const Mat2& m) {
    if (m.det() != -1 || m.order() != 2)
        throw std::invalid_argument("is_glide_kind: not a reflection");
    IntVector inv = smith_invariants({{m.a - 1, m.b}, {m.c, m.d - 1}});
    return std::any_of(inv.begin(), inv.end(), [](const Integer& d) { return d > 1; });
}

namespace {

bool in_column_span(const Mat2& m, const Vec2& v) {
    // v integral and solvable as m * w = v over the integers.
    if (!v.is_integral()) return false;
    return integer_solve({{m.a, m.b}, {m.c, m.d}}, {num(v.x), num(v.y)}).solvable;
}

// Action sign of the reflection s on the order-3 quotient Z^2/(c - 1)Z^2.
int dihedral3_sign(const Mat2& c, const Mat2& s) {
    Mat2 cm1{c.a - 1, c.b, c.c, c.d - 1};
    Vec2 gen{1, 0};
    if (in_column_span(cm1, gen)) gen = Vec2{0, 1};
    Vec2 image = s * gen;
    if (in_column_span(cm1, image - gen)) return 1;
    if (in_column_span(cm1, image + gen)) return -1;
    throw std::logic_error("dihedral3_sign: quotient is not of order 3");
}

struct ClassInvariant {
    std::size_t order;
    std::vector<std::pair<Integer, Integer>> trace_det;  // sorted multiset
    int mirror_kind_count;
    int glide_kind_count;
    int d3_sign;  // 0 unless dihedral of order 6

    friend bool operator==(const ClassInvariant&, const ClassInvariant&) = default;
    friend bool operator<(const ClassInvariant& a, const ClassInvariant& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.trace_det != b.trace_det) return a.trace_det < b.trace_det;
        if (a.mirror_kind_count != b.mirror_kind_count)
            return a.mirror_kind_count < b.mirror_kind_count;
        if (a.glide_kind_count != b.glide_kind_count)
            return a.glide_kind_count < b.glide_kind_count;
        return a.d3_sign < b.d3_sign;
    }
};

ClassInvariant invariant_of(const PointGroup& g) {
    ClassInvariant inv{g.order(), {}, 0, 0, 0};
    const Mat2* rotation3 = nullptr;
    const Mat2* reflection = nullptr;
    bool cyclic6 = false;
    for (const auto& m : g.elements) {
        inv.trace_det.emplace_back(m.trace(), m.det());
        if (m.det() == -1) {
            (is_glide_kind(m) ? inv.glide_kind_count : inv.mirror_kind_count)++;
            reflection = &m;
        } else if (m.order() == 3) {
            rotation3 = &m;
        } else if (m.order() == 6) {
            cyclic6 = true;
        }
    }
    std::sort(inv.trace_det.begin(), inv.trace_det.end());
    if (g.order() == 6 && !cyclic6 && rotation3 && reflection)
        inv.d3_sign = dihedral3_sign(*rotation3, *reflection);
    return inv;
}

const std::map<ClassInvariant, PointGroupClass>& class_table() {
    static const std::map<ClassInvariant, PointGroupClass> table = [] {
        std::map<ClassInvariant, PointGroupClass> t;
        for (PointGroupClass c : kAllPointGroupClasses) t[invariant_of(representative(c))] = c;
        return t;
    }();
    return table;
}

}  // namespace

PointGroupClass classify_point_group(const PointGroup& g) {
    auto it = class_table().find(invariant_of(g));
    if (it == class_table().end())
        throw std::invalid_argument("classify_point_group: not a plane point group");
    return it->second;
}

std::vector<PointGroup> subgroups_of(const PointGroup& g) {
    std::set<PointGroup> found;
    found.insert(close_point_group({}));
    for (const auto& a : g.elements) {
        found.insert(close_point_group({a}));
        for (const auto& b : g.elements) found.insert(close_point_group({a, b}));
    }
    return {found.begin(), found.end()};
}

namespace {

// Rational conjugacy collapses the lattice-sensitive distinctions.
int q_class(PointGroupClass c) {
    switch (c) {
        case PointGroupClass::C2Glide: return static_cast<int>(PointGroupClass::C2Mirror);
        case PointGroupClass::D2Axes: return static_cast<int>(PointGroupClass::D2Mixed);
        case PointGroupClass::D3Short: return static_cast<int>(PointGroupClass::D3Long);
        default: return static_cast<int>(c);
    }
}

}  // namespace

bool q_embeddable(PointGroupClass sub, PointGroupClass super) {
    static std::map<std::pair<PointGroupClass, PointGroupClass>, bool> memo;
    auto key = std::make_pair(sub, super);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool found = false;
    for (const auto& h : subgroups_of(representative(super)))
        if (q_class(classify_point_group(h)) == q_class(sub)) {
            found = true;
            break;
        }
    memo[key] = found;
    return found;
}

bool conjugate_in_gl2z(const PointGroup& a, const PointGroup& b, int bound) {
    if (a.order() != b.order()) return false;
    for (int pa = -bound; pa <= bound; ++pa)
        for (int pb = -bound; pb <= bound; ++pb)
            for (int pc = -bound; pc <= bound; ++pc)
                for (int pd = -bound; pd <= bound; ++pd) {
                    long det = static_cast<long>(pa) * pd - static_cast<long>(pb) * pc;
                    if (det != 1 && det != -1) continue;
                    Mat2 p{pa, pb, pc, pd};
                    Mat2 pinv = p.inverse();
                    bool all = true;
                    for (const auto& m : a.elements)
                        if (!b.contains(p * m * pinv)) {
                            all = false;
                            break;
                        }
                    if (all) return true;
                }
    return false;
}

}  // namespace wg
