#include "doctest.h"

#include "wg/holonomy.hpp"

#include <random>
#include <set>

using namespace wg;

namespace {

Mat2 rnd_unimodular(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(-1, 2);
    Mat2 p = Mat2::identity();
    for (int step = 0; step < 5; ++step) {
        p = p * Mat2{1, Integer(coin(rng)), 0, 1};
        p = p * Mat2{1, 0, Integer(coin(rng)), 1};
    }
    if (coin(rng) > 0) p = p * diagonal_mirror();
    return p;
}

PointGroup conjugate_group(const PointGroup& g, const Mat2& p) {
    Mat2 pinv = p.inverse();
    std::vector<Mat2> elems;
    for (const auto& m : g.elements) elems.push_back(p * m * pinv);
    std::sort(elems.begin(), elems.end());
    return PointGroup{elems};
}

}  // namespace

TEST_CASE("closure produces the expected orders") {
    CHECK(close_point_group({}).order() == 1);
    CHECK(close_point_group({half_turn()}).order() == 2);
    CHECK(close_point_group({third_turn()}).order() == 3);
    CHECK(close_point_group({quarter_turn()}).order() == 4);
    CHECK(close_point_group({sixth_turn()}).order() == 6);
    CHECK(close_point_group({quarter_turn(), diagonal_mirror()}).order() == 8);
    CHECK(close_point_group({sixth_turn(), diagonal_mirror()}).order() == 12);
    CHECK(close_point_group({sixth_turn()}).contains(third_turn()));
}

TEST_CASE("closure rejects infinite groups") {
    CHECK_THROWS_AS((void)close_point_group({Mat2{1, 1, 0, 1}}), NotFinite);
    CHECK_THROWS_AS((void)close_point_group({Mat2{2, 1, 1, 1}}), NotFinite);  // hyperbolic
    CHECK_THROWS_AS((void)close_point_group({Mat2{2, 0, 0, 1}}),
                    std::invalid_argument);  // not unimodular
    CHECK_THROWS_AS((void)close_point_group({Mat2{0, 1, -1, 0}, Mat2{1, 0, 1, 1}}), NotFinite);
}

TEST_CASE("reflection kinds") {
    CHECK(!is_glide_kind(diagonal_mirror()));
    CHECK(!is_glide_kind(-diagonal_mirror()));
    CHECK(is_glide_kind(axis_mirror()));
    CHECK(is_glide_kind(-axis_mirror()));
    CHECK(!is_glide_kind(hex_mirror()));
    CHECK(!is_glide_kind(Mat2{1, 1, 0, -1}));
    CHECK_THROWS_AS((void)is_glide_kind(half_turn()), std::invalid_argument);
}

TEST_CASE("representatives classify as themselves and are pairwise distinct") {
    std::set<PointGroupClass> seen;
    for (PointGroupClass c : kAllPointGroupClasses) {
        CHECK(classify_point_group(representative(c)) == c);
        seen.insert(c);
    }
    CHECK(seen.size() == 13);
}

TEST_CASE("representatives are pairwise non-conjugate under bounded search") {
    for (PointGroupClass c1 : kAllPointGroupClasses)
        for (PointGroupClass c2 : kAllPointGroupClasses) {
            if (c1 >= c2) continue;
            CHECK(!conjugate_in_gl2z(representative(c1), representative(c2), 3));
        }
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937 rng(2025);
    for (PointGroupClass c : kAllPointGroupClasses) {
        PointGroup rep = representative(c);
        for (int trial = 0; trial < 8; ++trial) {
            PointGroup moved = conjugate_group(rep, rnd_unimodular(rng));
            CHECK(classify_point_group(moved) == c);
        }
    }
}

TEST_CASE("classification agrees with bounded conjugacy search") {
    // The inverse of a 2x2 unimodular matrix has the same entries up to sign
    // and placement, so a search bounded by the conjugator entries is
    // guaranteed to find a witness when the classification is right.
    const std::vector<Mat2> conjugators{
        {1, 1, 0, 1}, {1, 0, 1, 1}, {2, 1, 1, 1}, {1, -1, 1, 0},
        {0, 1, -1, 2}, {3, 1, 2, 1}, {2, 3, 1, 2}, {0, 1, 1, 0},
    };
    for (PointGroupClass c : kAllPointGroupClasses)
        for (const auto& p : conjugators) {
            PointGroup moved = conjugate_group(representative(c), p);
            PointGroupClass got = classify_point_group(moved);
            CHECK(got == c);
            int bound = 1;
            for (const Integer& e : {p.a, p.b, p.c, p.d})
                bound = std::max(bound, static_cast<int>(boost::multiprecision::abs(e)));
            CHECK(conjugate_in_gl2z(moved, representative(got), bound));
        }
}

TEST_CASE("subgroup counts of the maximal groups") {
    CHECK(subgroups_of(representative(PointGroupClass::D6)).size() == 16);
    CHECK(subgroups_of(representative(PointGroupClass::D4)).size() == 10);
    CHECK(subgroups_of(representative(PointGroupClass::C6)).size() == 4);
    CHECK(subgroups_of(representative(PointGroupClass::D2Mixed)).size() == 5);
    CHECK(subgroups_of(representative(PointGroupClass::Trivial)).size() == 1);
}

TEST_CASE("subgroup classes found inside the dihedral groups") {
    std::set<PointGroupClass> in_d4;
    for (const auto& h : subgroups_of(representative(PointGroupClass::D4)))
        in_d4.insert(classify_point_group(h));
    CHECK(in_d4 == std::set<PointGroupClass>{
                       PointGroupClass::Trivial, PointGroupClass::C2Rotation,
                       PointGroupClass::C2Mirror, PointGroupClass::C2Glide,
                       PointGroupClass::C4, PointGroupClass::D2Mixed,
                       PointGroupClass::D2Axes, PointGroupClass::D4});

    std::set<PointGroupClass> in_d6;
    for (const auto& h : subgroups_of(representative(PointGroupClass::D6)))
        in_d6.insert(classify_point_group(h));
    CHECK(in_d6 == std::set<PointGroupClass>{
                       PointGroupClass::Trivial, PointGroupClass::C2Rotation,
                       PointGroupClass::C2Mirror, PointGroupClass::C3,
                       PointGroupClass::C6, PointGroupClass::D2Mixed,
                       PointGroupClass::D3Long, PointGroupClass::D3Short,
                       PointGroupClass::D6});
}

TEST_CASE("rational embeddability") {
    CHECK(q_embeddable(PointGroupClass::Trivial, PointGroupClass::Trivial));
    CHECK(q_embeddable(PointGroupClass::C6, PointGroupClass::D6));
    CHECK(!q_embeddable(PointGroupClass::C6, PointGroupClass::D4));
    CHECK(!q_embeddable(PointGroupClass::C4, PointGroupClass::D6));
    CHECK(q_embeddable(PointGroupClass::C2Glide, PointGroupClass::C2Mirror));
    CHECK(q_embeddable(PointGroupClass::C2Mirror, PointGroupClass::D3Short));
    CHECK(q_embeddable(PointGroupClass::D2Axes, PointGroupClass::D6));
    CHECK(!q_embeddable(PointGroupClass::D4, PointGroupClass::D6));
    CHECK(!q_embeddable(PointGroupClass::D3Long, PointGroupClass::D4));
    CHECK(q_embeddable(PointGroupClass::D3Short, PointGroupClass::D6));
    CHECK(!q_embeddable(PointGroupClass::C2Rotation, PointGroupClass::C2Mirror));
    CHECK(!q_embeddable(PointGroupClass::D6, PointGroupClass::C2Mirror));
}
