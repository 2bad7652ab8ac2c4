#include "wg/seifert.hpp"

#include "wg/fibration.hpp"
#include "wg/holonomy.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wg {

namespace {

using WC = WallpaperClass;

const std::set<WC> kNil3Bases = {WC::P1, WC::Pg, WC::P2, WC::Pgg, WC::P4, WC::P3, WC::P6};
const std::set<WC> kNil4Bases = {WC::P1, WC::Pm, WC::Cm, WC::Pgg, WC::Pmg};
const std::set<WC> kSol3xE1Bases = {WC::P1, WC::Pg, WC::Pm, WC::Cm, WC::P2, WC::Pgg, WC::Pmg};
const std::set<WC> kCircleActionBases = {WC::P1, WC::P2, WC::P4, WC::P3, WC::P6};

const std::vector<Flat3Manifold>& authored_flat3() {
    static const std::vector<Flat3Manifold> table = {
        {"G1", true, {WC::P1}},
        {"G2", true, {WC::Pg, WC::P2}},
        {"G3", true, {WC::P3}},
        {"G4", true, {WC::P4}},
        {"G5", true, {WC::P6}},
        {"G6", true, {WC::Pgg}},
        {"B1", false, {WC::Pg, WC::P1, WC::Pm}},
        {"B2", false, {WC::Pg, WC::P1, WC::Cm}},
        {"B3", false, {WC::Pg, WC::Pm, WC::Pmg}},
        {"B4", false, {WC::Pg, WC::Cm, WC::Pmg}},
    };
    return table;
}

std::set<WC> no_reflector_classes() {
    std::set<WC> out;
    for (WC id : kAllWallpaperClasses)
        if (!finite_subgroup_spectrum(standard_group(id)).reflection) out.insert(id);
    return out;
}

std::set<WC> fibring_classes() {
    std::set<WC> out;
    for (WC id : kAllWallpaperClasses)
        if (!fibration_structures(id).empty()) out.insert(id);
    return out;
}

bool cyclic_holonomy(WC id) {
    switch (classify_point_group(close_point_group(standard_group(id).holonomy()))) {
        case PointGroupClass::Trivial:
        case PointGroupClass::C2Rotation:
        case PointGroupClass::C2Mirror:
        case PointGroupClass::C2Glide:
        case PointGroupClass::C3:
        case PointGroupClass::C4:
        case PointGroupClass::C6:
            return true;
        default:
            return false;
    }
}

bool klein_four_holonomy(WC id) {
    const PointGroupClass c =
        classify_point_group(close_point_group(standard_group(id).holonomy()));
    return c == PointGroupClass::D2Mixed || c == PointGroupClass::D2Axes;
}

void check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("seifert table inconsistency: ") + what);
}

// Recomputes everything the other modules can say about the authored tables.
void run_consistency_checks() {
    check(kNil3Bases == no_reflector_classes(),
          "the Nil3 bases must be exactly the classes without reflector curves");

    std::set<WC> orientable_nil3;
    for (WC id : kNil3Bases)
        if (entry(id).signature.orientable) orientable_nil3.insert(id);
    check(orientable_nil3 == kCircleActionBases,
          "the orientable Nil3 bases must be the five circle-action classes");

    const std::set<WC> fibring = fibring_classes();
    for (WC id : kNil4Bases)
        check(fibring.count(id) == 1, "every Nil4 base must fibre over the circle or the interval");
    for (WC id : kSol3xE1Bases)
        check(fibring.count(id) == 1,
              "every Sol3xE1 base must fibre over the circle or the interval");

    std::set<WC> flat3_union;
    for (const Flat3Manifold& m : authored_flat3())
        for (WC id : m.base_classes) {
            flat3_union.insert(id);
            check(cyclic_holonomy(id) || klein_four_holonomy(id),
                  "flat 3-manifold bases must have cyclic or Klein four holonomy");
            check(entry(id).abelianization.mod2_rank() <= 3,
                  "flat 3-manifold base groups need at most three generators");
        }
    check(entry(WC::Pmm).abelianization.mod2_rank() == 4,
          "pmm needs four generators, which keeps it off every flat base list");

    std::set<WC> expected_union = no_reflector_classes();
    expected_union.insert(WC::Pm);
    expected_union.insert(WC::Cm);
    expected_union.insert(WC::Pmg);
    check(flat3_union == expected_union,
          "the flat 3-manifold bases are the no-reflector classes plus pm, cm, pmg");
}

void ensure_checked() {
    static const bool done = [] {
        run_consistency_checks();
        return true;
    }();
    (void)done;
}

std::string flat3_reason(WC id) {
    std::string names;
    for (const Flat3Manifold& m : authored_flat3())
        if (m.base_classes.count(id)) {
            if (!names.empty()) names += ", ";
            names += m.name;
        }
    return "base of " + names;
}

}  // namespace

std::string to_string(GeometryTag g) {
    switch (g) {
        case GeometryTag::Nil3: return "Nil3";
        case GeometryTag::Flat3: return "Flat3";
        case GeometryTag::E4: return "E4";
        case GeometryTag::Nil3xE1: return "Nil3xE1";
        case GeometryTag::Nil4: return "Nil4";
        case GeometryTag::Sol3xE1: return "Sol3xE1";
    }
    throw std::logic_error("unhandled geometry tag");
}

std::optional<GeometryTag> parse_geometry(std::string_view text) {
    std::string key;
    for (char ch : text) {
        if (ch == ' ' || ch == '-' || ch == '_') continue;
        if (ch == '*') {
            key += 'x';
            continue;
        }
        key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    for (GeometryTag g : kAllGeometries) {
        std::string canonical = to_string(g);
        std::transform(canonical.begin(), canonical.end(), canonical.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (key == canonical) return g;
    }
    return std::nullopt;
}

std::vector<SeifertBase> seifert_base_details(GeometryTag g) {
    ensure_checked();
    std::vector<SeifertBase> out;
    auto add_from = [&out](const std::set<WC>& members, bool computed, const std::string& reason) {
        for (WC id : kAllWallpaperClasses)
            if (members.count(id)) out.push_back({id, computed, reason});
    };
    switch (g) {
        case GeometryTag::Nil3:
            add_from(kNil3Bases, true, "no reflector curves in its spectrum");
            break;
        case GeometryTag::Flat3: {
            std::set<WC> members;
            for (const Flat3Manifold& m : authored_flat3())
                members.insert(m.base_classes.begin(), m.base_classes.end());
            for (WC id : kAllWallpaperClasses)
                if (members.count(id)) out.push_back({id, false, flat3_reason(id)});
            break;
        }
        case GeometryTag::E4:
            for (WC id : kAllWallpaperClasses)
                out.push_back({id, false,
                               cyclic_holonomy(id) ? "realized by the cyclic holonomy construction"
                                                   : "realized by the dihedral holonomy construction"});
            break;
        case GeometryTag::Nil3xE1:
            for (WC id : kAllWallpaperClasses)
                out.push_back({id, false, "every flat base arises over Nil3xE1"});
            break;
        case GeometryTag::Nil4:
            add_from(kNil4Bases, false, "listed base; fibres over the circle or the interval");
            break;
        case GeometryTag::Sol3xE1:
            add_from(kSol3xE1Bases, false, "listed base; fibres over the circle or the interval");
            break;
    }
    return out;
}

std::set<WallpaperClass> seifert_bases(GeometryTag g) {
    std::set<WC> out;
    for (const SeifertBase& b : seifert_base_details(g)) out.insert(b.cls);
    return out;
}

std::set<WallpaperClass> s1_action_bases() {
    ensure_checked();
    std::set<WC> out;
    for (WC id : kNil3Bases)
        if (entry(id).signature.orientable) out.insert(id);
    return out;
}

const std::vector<Flat3Manifold>& flat3_base_table() {
    ensure_checked();
    return authored_flat3();
}

}  // namespace wg
