#include "doctest.h"

#include "wg/fibration.hpp"
#include "wg/holonomy.hpp"
#include "wg/seifert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace wg;

namespace {
using WC = WallpaperClass;
}

TEST_CASE("geometry tags round-trip through their names") {
    for (GeometryTag g : kAllGeometries) {
        auto parsed = parse_geometry(to_string(g));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == g);
    }
    CHECK(parse_geometry("nil3xe1") == GeometryTag::Nil3xE1);
    CHECK(parse_geometry("Nil3 x E1") == GeometryTag::Nil3xE1);
    CHECK(parse_geometry("nil3*e1") == GeometryTag::Nil3xE1);
    CHECK(parse_geometry("SOL3XE1") == GeometryTag::Sol3xE1);
    CHECK(parse_geometry("e4") == GeometryTag::E4);
    CHECK(!parse_geometry("nil5").has_value());
    CHECK(!parse_geometry("").has_value());
}

TEST_CASE("the Nil3 bases are exactly the classes without reflector curves") {
    const std::set<WC> expected = {WC::P1, WC::Pg, WC::P2, WC::Pgg, WC::P4, WC::P3, WC::P6};
    CHECK(seifert_bases(GeometryTag::Nil3) == expected);

    // Same set, recomputed from the affine spectra.
    std::set<WC> computed;
    for (WC id : kAllWallpaperClasses)
        if (!finite_subgroup_spectrum(standard_group(id)).reflection) computed.insert(id);
    CHECK(computed == expected);

    for (const SeifertBase& b : seifert_base_details(GeometryTag::Nil3)) CHECK(b.computed);
}

TEST_CASE("circle-action bases are the orientable Nil3 bases") {
    const std::set<WC> bases = s1_action_bases();
    CHECK(bases == std::set<WC>{WC::P1, WC::P2, WC::P4, WC::P3, WC::P6});
    CHECK(bases.count(WC::Pg) == 0);
    CHECK(bases.count(WC::Pm) == 0);
    CHECK(bases.count(WC::Cm) == 0);
    for (WC id : bases) CHECK(entry(id).signature.orientable);
}

TEST_CASE("Nil4 and Sol3xE1 bases fibre over the circle or the interval") {
    CHECK(seifert_bases(GeometryTag::Nil4) ==
          std::set<WC>{WC::P1, WC::Pm, WC::Cm, WC::Pgg, WC::Pmg});
    CHECK(seifert_bases(GeometryTag::Sol3xE1) ==
          std::set<WC>{WC::P1, WC::Pg, WC::Pm, WC::Cm, WC::P2, WC::Pgg, WC::Pmg});

    for (GeometryTag g : {GeometryTag::Nil4, GeometryTag::Sol3xE1})
        for (WC id : seifert_bases(g)) {
            CAPTURE(to_string(id));
            CHECK(!fibration_structures(id).empty());
        }

    // Sol3xE1 adds exactly pg and p2 to the Nil4 list.
    std::set<WC> diff;
    for (WC id : seifert_bases(GeometryTag::Sol3xE1))
        if (!seifert_bases(GeometryTag::Nil4).count(id)) diff.insert(id);
    CHECK(diff == std::set<WC>{WC::Pg, WC::P2});
}

TEST_CASE("E4 and Nil3xE1 realize every class") {
    CHECK(seifert_bases(GeometryTag::E4).size() == 17);
    CHECK(seifert_bases(GeometryTag::Nil3xE1).size() == 17);

    // The E4 justification names the construction matching the holonomy.
    for (const SeifertBase& b : seifert_base_details(GeometryTag::E4)) {
        CAPTURE(to_string(b.cls));
        const PointGroup holonomy = close_point_group(standard_group(b.cls).holonomy());
        const bool dihedral = holonomy.order() > 2 &&
                              std::any_of(holonomy.elements.begin(), holonomy.elements.end(),
                                          [](const Mat2& m) { return m.det() == -1; });
        if (dihedral)
            CHECK(b.reason.find("dihedral") != std::string::npos);
        else
            CHECK(b.reason.find("cyclic") != std::string::npos);
    }
}

TEST_CASE("the flat 3-manifold table matches the authored base sets") {
    const auto& table = flat3_base_table();
    REQUIRE(table.size() == 10);

    std::map<std::string, std::set<WC>> by_name;
    std::map<std::string, bool> orientability;
    for (const Flat3Manifold& m : table) {
        by_name[m.name] = m.base_classes;
        orientability[m.name] = m.orientable;
    }
    CHECK(by_name["G1"] == std::set<WC>{WC::P1});
    CHECK(by_name["G2"] == std::set<WC>{WC::Pg, WC::P2});
    CHECK(by_name["G3"] == std::set<WC>{WC::P3});
    CHECK(by_name["G4"] == std::set<WC>{WC::P4});
    CHECK(by_name["G5"] == std::set<WC>{WC::P6});
    CHECK(by_name["G6"] == std::set<WC>{WC::Pgg});
    CHECK(by_name["B1"] == std::set<WC>{WC::Pg, WC::P1, WC::Pm});
    CHECK(by_name["B2"] == std::set<WC>{WC::Pg, WC::P1, WC::Cm});
    CHECK(by_name["B3"] == std::set<WC>{WC::Pg, WC::Pm, WC::Pmg});
    CHECK(by_name["B4"] == std::set<WC>{WC::Pg, WC::Cm, WC::Pmg});

    for (const auto& [name, orientable] : orientability)
        CHECK(orientable == (name[0] == 'G'));
}

TEST_CASE("flat 3-manifold bases satisfy the holonomy and rank constraints") {
    std::set<WC> flat3_union;
    for (const Flat3Manifold& m : flat3_base_table())
        for (WC id : m.base_classes) flat3_union.insert(id);
    CHECK(seifert_bases(GeometryTag::Flat3) == flat3_union);

    // No-reflector classes plus the annulus, the rhombic mirror, and pmg.
    std::set<WC> expected = seifert_bases(GeometryTag::Nil3);
    expected.insert(WC::Pm);
    expected.insert(WC::Cm);
    expected.insert(WC::Pmg);
    CHECK(flat3_union == expected);

    for (WC id : flat3_union) {
        CAPTURE(to_string(id));
        const PointGroup holonomy = close_point_group(standard_group(id).holonomy());
        const bool cyclic_or_klein_four =
            holonomy.order() <= 2 ||
            classify_point_group(holonomy) == PointGroupClass::C3 ||
            classify_point_group(holonomy) == PointGroupClass::C4 ||
            classify_point_group(holonomy) == PointGroupClass::C6 ||
            classify_point_group(holonomy) == PointGroupClass::D2Mixed ||
            classify_point_group(holonomy) == PointGroupClass::D2Axes;
        CHECK(cyclic_or_klein_four);
        CHECK(entry(id).abelianization.mod2_rank() <= 3);
    }

    // The class shut out by the generator count.
    CHECK(entry(WC::Pmm).abelianization.mod2_rank() == 4);
    CHECK(flat3_union.count(WC::Pmm) == 0);
}

TEST_CASE("per-class detail lists keep catalog order and match the plain sets") {
    for (GeometryTag g : kAllGeometries) {
        CAPTURE(to_string(g));
        const auto details = seifert_base_details(g);
        std::set<WC> from_details;
        WC previous = WC::P1;
        bool first = true;
        for (const SeifertBase& b : details) {
            CHECK(!b.reason.empty());
            if (!first) CHECK(static_cast<int>(b.cls) > static_cast<int>(previous));
            previous = b.cls;
            first = false;
            from_details.insert(b.cls);
        }
        CHECK(from_details == seifert_bases(g));
    }
}
