#include "doctest.h"

#include "wg/cohomology.hpp"

#include <vector>

using namespace wg;

namespace {

std::vector<Integer> torsion_of(PointGroupClass c) {
    return h2_of_point_group(representative(c)).torsion();
}

CrystalGroup standard_group(const std::vector<AffineElement>& extra) {
    std::vector<AffineElement> gens = extra;
    gens.push_back({Mat2::identity(), {1, 0}});
    gens.push_back({Mat2::identity(), {0, 1}});
    return group_from_generators(gens);
}

}  // namespace

TEST_CASE("second cohomology of every point group class") {
    using PC = PointGroupClass;
    CHECK(torsion_of(PC::Trivial).empty());
    CHECK(torsion_of(PC::C2Rotation).empty());
    CHECK(torsion_of(PC::C2Mirror).empty());
    CHECK(torsion_of(PC::C2Glide) == std::vector<Integer>{2});
    CHECK(torsion_of(PC::C3).empty());
    CHECK(torsion_of(PC::C4).empty());
    CHECK(torsion_of(PC::C6).empty());
    CHECK(torsion_of(PC::D2Mixed).empty());
    CHECK(torsion_of(PC::D2Axes) == std::vector<Integer>{2, 2});
    CHECK(torsion_of(PC::D3Long).empty());
    CHECK(torsion_of(PC::D3Short).empty());
    CHECK(torsion_of(PC::D4) == std::vector<Integer>{2});
    CHECK(torsion_of(PC::D6).empty());
}

TEST_CASE("cohomology is memoized by element set") {
    const CohomologyGroup& a = h2_of_point_group(representative(PointGroupClass::D4));
    const CohomologyGroup& b = h2_of_point_group(representative(PointGroupClass::D4));
    CHECK(&a == &b);
}

TEST_CASE("basis cocycles have unit coordinates") {
    for (PointGroupClass c : {PointGroupClass::C2Glide, PointGroupClass::D2Axes,
                              PointGroupClass::D4}) {
        const CohomologyGroup& h2 = h2_of_point_group(representative(c));
        for (std::size_t i = 0; i < h2.torsion().size(); ++i) {
            auto coords = h2.coordinates_of(h2.basis_cocycle(i));
            for (std::size_t j = 0; j < coords.size(); ++j)
                CHECK(coords[j] == (i == j ? 1 : 0));
        }
        CHECK(h2.is_coboundary(h2.zero_cocycle()));
    }
}

TEST_CASE("coordinate map is additive") {
    const CohomologyGroup& h2 = h2_of_point_group(representative(PointGroupClass::D2Axes));
    Cocycle2 c0 = h2.basis_cocycle(0), c1 = h2.basis_cocycle(1);
    auto coords = h2.coordinates_of(c0 + c1);
    CHECK(coords == std::vector<Integer>{1, 1});
    auto twice = h2.coordinates_of(c0 + c0);
    CHECK(twice == std::vector<Integer>{0, 0});
}

TEST_CASE("coordinates reject non-cocycles") {
    const CohomologyGroup& h2 = h2_of_point_group(representative(PointGroupClass::D2Axes));
    Cocycle2 c = h2.zero_cocycle();
    c.values[0] = 1;  // generically breaks the cocycle condition
    CHECK_THROWS_AS((void)h2.coordinates_of(c), std::invalid_argument);
}

TEST_CASE("extensions of the glide kind reflection group") {
    PointGroup g = representative(PointGroupClass::C2Glide);
    const CohomologyGroup& h2 = h2_of_point_group(g);
    REQUIRE(h2.torsion() == std::vector<Integer>{2});

    CrystalGroup split = extension_from_cocycle(g, h2.zero_cocycle());
    CHECK(has_mirror(split));
    CHECK(class_of_group(split) == std::vector<Integer>{0});

    CrystalGroup twisted = extension_from_cocycle(g, h2.basis_cocycle(0));
    CHECK(!has_mirror(twisted));
    CHECK(class_of_group(twisted) == std::vector<Integer>{1});
}

TEST_CASE("extensions of the axes dihedral group") {
    PointGroup g = representative(PointGroupClass::D2Axes);
    const CohomologyGroup& h2 = h2_of_point_group(g);
    REQUIRE(h2.torsion() == std::vector<Integer>{2, 2});

    CrystalGroup split = extension_from_cocycle(g, h2.zero_cocycle());
    auto spec_split = finite_subgroup_spectrum(split);
    CHECK(spec_split.corner_orders() == std::vector<int>{2, 2, 2, 2});

    Cocycle2 both = h2.basis_cocycle(0) + h2.basis_cocycle(1);
    CrystalGroup twisted = extension_from_cocycle(g, both);
    auto spec_twisted = finite_subgroup_spectrum(twisted);
    CHECK(spec_twisted.cone_orders() == std::vector<int>{2, 2});
    CHECK(!spec_twisted.reflection);
    CHECK(class_of_group(twisted) == std::vector<Integer>{1, 1});

    CrystalGroup mixed = extension_from_cocycle(g, h2.basis_cocycle(0));
    auto spec_mixed = finite_subgroup_spectrum(mixed);
    CHECK(spec_mixed.cone_orders() == std::vector<int>{2, 2});
    CHECK(spec_mixed.reflection);
}

TEST_CASE("extensions of the square dihedral group") {
    PointGroup g = representative(PointGroupClass::D4);
    const CohomologyGroup& h2 = h2_of_point_group(g);
    REQUIRE(h2.torsion() == std::vector<Integer>{2});

    CrystalGroup split = extension_from_cocycle(g, h2.zero_cocycle());
    CHECK(finite_subgroup_spectrum(split).corner_orders() == std::vector<int>{2, 4, 4});

    CrystalGroup twisted = extension_from_cocycle(g, h2.basis_cocycle(0));
    auto spec = finite_subgroup_spectrum(twisted);
    CHECK(spec.cone_orders() == std::vector<int>{4});
    CHECK(spec.corner_orders() == std::vector<int>{2});
}

TEST_CASE("group cocycles round trip through their class") {
    auto pg = standard_group({{axis_mirror(), {Rational(1, 2), 0}}});
    CHECK(class_of_group(pg) == std::vector<Integer>{1});
    auto pm = standard_group({{axis_mirror(), {0, 0}}});
    CHECK(class_of_group(pm) == std::vector<Integer>{0});

    auto pmm = standard_group({{axis_mirror(), {0, 0}}, {half_turn(), {0, 0}}});
    CHECK(class_of_group(pmm) == std::vector<Integer>{0, 0});
    auto pgg = group_from_generators(
        {{axis_mirror(), {Rational(1, 2), 0}}, {half_turn(), {Rational(1, 2), Rational(1, 2)}}});
    CHECK(class_of_group(pgg) == std::vector<Integer>{1, 1});

    // Coordinates of the axes dihedral group are ordered by the reflection
    // family forced to glide, earlier matrix first: -diag(1, -1) before
    // diag(1, -1). A vertical mirror with horizontal glides sits at (1, 0),
    // and the quarter-turned model at (0, 1).
    auto pmg = standard_group({{half_turn(), {0, 0}}, {axis_mirror(), {0, -Rational(1, 2)}}});
    CHECK(class_of_group(pmg) == std::vector<Integer>{1, 0});
    auto pmg_turned =
        standard_group({{half_turn(), {0, 0}}, {axis_mirror(), {-Rational(1, 2), 0}}});
    CHECK(class_of_group(pmg_turned) == std::vector<Integer>{0, 1});
}

TEST_CASE("classes survive lattice rebasing") {
    auto pg = standard_group({{axis_mirror(), {Rational(1, 2), 0}}});
    auto moved = conjugated(pg, Mat2{1, 1, 0, 1}, Vec2{Rational(1, 3), Rational(2, 7)});
    CHECK(class_of_group(moved) == class_of_group(pg));
}

TEST_CASE("restriction triviality matches mirror geometry") {
    auto pmg = standard_group({{half_turn(), {0, 0}}, {axis_mirror(), {0, -Rational(1, 2)}}});
    CHECK(restriction_is_trivial(pmg, {half_turn()}));
    CHECK(restriction_is_trivial(pmg, {axis_mirror()}));
    CHECK(!restriction_is_trivial(pmg, {-axis_mirror()}));
    CHECK(!restriction_is_trivial(pmg, representative(PointGroupClass::D2Axes).elements));

    auto pgg = group_from_generators(
        {{axis_mirror(), {Rational(1, 2), 0}}, {half_turn(), {Rational(1, 2), Rational(1, 2)}}});
    CHECK(restriction_is_trivial(pgg, {half_turn()}));
    CHECK(!restriction_is_trivial(pgg, {axis_mirror()}));
    CHECK(!restriction_is_trivial(pgg, {-axis_mirror()}));

    auto pmm = standard_group({{axis_mirror(), {0, 0}}, {half_turn(), {0, 0}}});
    CHECK(restriction_is_trivial(pmm, representative(PointGroupClass::D2Axes).elements));

    auto p1 = standard_group({});
    CHECK(restriction_is_trivial(p1, {Mat2::identity()}));
}

TEST_CASE("restriction triviality agrees with subgroup class coordinates") {
    // Restricting to the glide-kind cyclic subgroup of the axes dihedral
    // group: compute the restricted cocycle directly and compare verdicts.
    PointGroup d2 = representative(PointGroupClass::D2Axes);
    const CohomologyGroup& h2 = h2_of_point_group(d2);
    PointGroup c2 = representative(PointGroupClass::C2Glide);
    const CohomologyGroup& h2sub = h2_of_point_group(c2);
    for (int bits = 0; bits < 4; ++bits) {
        Cocycle2 c = h2.zero_cocycle();
        if (bits & 1) c = c + h2.basis_cocycle(0);
        if (bits & 2) c = c + h2.basis_cocycle(1);
        CrystalGroup ext = extension_from_cocycle(d2, c);
        Cocycle2 restricted = h2sub.zero_cocycle();
        const auto& sub_elems = restricted.elements;
        for (std::size_t i = 0; i < sub_elems.size(); ++i)
            for (std::size_t j = 0; j < sub_elems.size(); ++j) {
                Vec2 v = ext.translation_part(sub_elems[i]) +
                         sub_elems[i] * ext.translation_part(sub_elems[j]) -
                         ext.translation_part(sub_elems[i] * sub_elems[j]);
                restricted.values[(i * sub_elems.size() + j) * 2] = num(v.x);
                restricted.values[(i * sub_elems.size() + j) * 2 + 1] = num(v.y);
            }
        CHECK(h2sub.is_coboundary(restricted) == restriction_is_trivial(ext, c2.elements));
    }
}
