#include "doctest.h"

#include "wg/groupfile.hpp"
#include "wg/recognition.hpp"

#include <string>
#include <vector>

using namespace wg;

namespace {

GroupFileError capture(const std::string& text) {
    try {
        parse_group_file(text);
    } catch (const GroupFileError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return GroupFileError(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("group file: single generator") {
    auto gens = parse_group_file("gen j = [[-1,0],[0,-1]] + (0, 0)\n");
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].name == "j");
    CHECK(gens[0].element.linear == Mat2{-1, 0, 0, -1});
    CHECK(gens[0].element.translation == Vec2{});
}

TEST_CASE("group file: comments, blank lines, rationals") {
    const std::string text =
        "# a glide and a perpendicular translation\n"
        "\n"
        "gen d = [[1,0],[0,-1]] + (1/2, 0)   # glide along the x axis\n"
        "\t\n"
        "gen y = [[1,0],[0,1]] + (0, 1)\n";
    auto gens = parse_group_file(text);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].name == "d");
    CHECK(gens[0].element.translation == Vec2{Rational(1, 2), Rational(0)});
    CHECK(gens[1].name == "y");

    auto group = group_from_generators(elements_of(gens));
    CHECK(identify(group).id == WallpaperClass::Pg);
}

TEST_CASE("group file: tolerant spacing and signs") {
    auto tight = parse_group_file("gen m=[[0,1],[1,0]]+(0,0)");
    REQUIRE(tight.size() == 1);
    CHECK(tight[0].element.linear == Mat2{0, 1, 1, 0});

    auto spaced = parse_group_file("  gen  a_2 = [ [ 0 , -1 ] , [ 1 , 0 ] ] + ( -1/2 , +3/4 )");
    REQUIRE(spaced.size() == 1);
    CHECK(spaced[0].name == "a_2");
    CHECK(spaced[0].element.linear == Mat2{0, -1, 1, 0});
    CHECK(spaced[0].element.translation == Vec2{Rational(-1, 2), Rational(3, 4)});

    // Unreduced and negative-denominator fractions normalize.
    auto odd = parse_group_file("gen t = [[1,0],[0,1]] + (2/4, 1/-2)");
    CHECK(odd[0].element.translation == Vec2{Rational(1, 2), Rational(-1, 2)});
}

TEST_CASE("group file: windows line endings") {
    auto gens = parse_group_file("gen j = [[-1,0],[0,-1]] + (0, 0)\r\ngen x = [[1,0],[0,1]] + (1, 0)\r\n");
    REQUIRE(gens.size() == 2);
    CHECK(gens[1].name == "x");
}

TEST_CASE("group file: empty input parses to no generators") {
    CHECK(parse_group_file("").empty());
    CHECK(parse_group_file("\n# only a comment\n\n").empty());
}

TEST_CASE("group file: error positions") {
    SUBCASE("missing keyword") {
        auto e = capture("generator j = [[1,0],[0,1]] + (0,0)");
        CHECK(e.line() == 1);
        CHECK(e.column() == 1);
        CHECK(e.message() == "expected 'gen' to open a generator line");
    }
    SUBCASE("missing name") {
        auto e = capture("gen = [[1,0],[0,1]] + (0,0)");
        CHECK(e.line() == 1);
        // 'gen' was taken as the keyword and '=' is not a name.
        CHECK(e.message() == "expected a generator name");
    }
    SUBCASE("position names the later line") {
        auto e = capture("gen x = [[1,0],[0,1]] + (1, 0)\n\ngen y = [[1,0],[0,1]] + (0 1)\n");
        CHECK(e.line() == 3);
        CHECK(e.column() == 28);
        CHECK(e.message() == "expected ',', found '1'");
    }
    SUBCASE("matrix entry must be an integer") {
        auto e = capture("gen x = [[1/2,0],[0,1]] + (0, 0)");
        CHECK(e.line() == 1);
        CHECK(e.column() == 12);  // the '/' where ',' or ']' should be
    }
    SUBCASE("zero denominator") {
        auto e = capture("gen x = [[1,0],[0,1]] + (1/0, 0)");
        CHECK(e.line() == 1);
        CHECK(e.column() == 28);
        CHECK(e.message() == "zero denominator");
    }
    SUBCASE("unclosed bracket") {
        auto e = capture("gen x = [[1,0],[0,1] + (0, 0)");
        CHECK(e.line() == 1);
        CHECK(e.message() == "expected ']', found '+'");
    }
    SUBCASE("trailing junk") {
        auto e = capture("gen x = [[1,0],[0,1]] + (0, 0) extra");
        CHECK(e.line() == 1);
        CHECK(e.column() == 32);
        CHECK(e.message() == "unexpected text after generator");
    }
    SUBCASE("line cut short") {
        auto e = capture("gen x = [[1,0],[0,1]]");
        CHECK(e.message() == "expected '+' before end of line");
    }
}

TEST_CASE("group file: singular matrix rejected with its position") {
    auto e = capture("gen x = [[1,0],[0,1]] + (0,0)\ngen s = [[2,0],[0,2]] + (0, 0)");
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
    CHECK(e.message() == "matrix must be invertible over the integers, determinant is 4");

    // Determinant +-1 passes even when the closure would later diverge.
    CHECK(parse_group_file("gen u = [[1,1],[0,1]] + (0, 0)").size() == 1);
}

TEST_CASE("group file: what() carries the position") {
    auto e = capture("gen x = [[1,0],[0,1]] + (1/0, 0)");
    CHECK(std::string(e.what()) == "line 1, column 28: zero denominator");
}

TEST_CASE("group file: unreadable path") {
    try {
        read_group_file("/nonexistent/group.txt");
        FAIL("expected a file error");
    } catch (const GroupFileError& e) {
        CHECK(e.line() == 0);
        CHECK(std::string(e.what()) == "cannot open '/nonexistent/group.txt'");
    }
}
