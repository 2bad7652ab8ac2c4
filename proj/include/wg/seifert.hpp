#pragma once

#include "wg/catalog.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wg {

// Geometries whose Seifert fibered spaces have flat 2-orbifold bases.
enum class GeometryTag { Nil3, Flat3, E4, Nil3xE1, Nil4, Sol3xE1 };

inline constexpr std::array<GeometryTag, 6> kAllGeometries = {
    GeometryTag::Nil3, GeometryTag::Flat3, GeometryTag::E4,
    GeometryTag::Nil3xE1, GeometryTag::Nil4, GeometryTag::Sol3xE1,
};

std::string to_string(GeometryTag g);

// Case-insensitive; accepts the to_string spellings ("Nil3xE1") and the
// separator variants "nil3*e1" and "nil3 x e1".
std::optional<GeometryTag> parse_geometry(std::string_view text);

// Membership of one class in a geometry's base list, with its provenance:
// either recomputed from the affine and fibration modules, or carried as a
// classification fact with the computable part of its justification checked.
struct SeifertBase {
    WallpaperClass cls = WallpaperClass::P1;
    bool computed = false;
    std::string reason;
};

// The classes arising as Seifert bases over the geometry, in catalog order.
// The first call cross-checks every table against the other modules: the
// Nil3 list must equal the computed no-reflector set, the Nil4 and Sol3xE1
// lists must fibre over the circle or the interval, and the flat-manifold
// base sets must satisfy the holonomy and mod-2 rank constraints.
std::vector<SeifertBase> seifert_base_details(GeometryTag g);

std::set<WallpaperClass> seifert_bases(GeometryTag g);

// Bases of Seifert fibrations induced by a circle action: the orientable
// members of the Nil3 list. Computed, then checked against the expected
// five classes.
std::set<WallpaperClass> s1_action_bases();

// One of the ten closed flat 3-manifolds and the flat 2-orbifolds it
// fibres over.
struct Flat3Manifold {
    std::string name;  // G1..G6 orientable, B1..B4 non-orientable
    bool orientable = false;
    std::set<WallpaperClass> base_classes;
};

// The ten flat 3-manifolds with their base sets, G1..G6 then B1..B4.
const std::vector<Flat3Manifold>& flat3_base_table();

}  // namespace wg
