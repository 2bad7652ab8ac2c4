#pragma once

#include "wg/affine.hpp"
#include "wg/holonomy.hpp"
#include "wg/numeric.hpp"
#include "wg/presentation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wg {

// The seventeen plane crystallographic classes, in the numbering of the
// international tables.
enum class WallpaperClass {
    P1,
    P2,
    Pm,
    Pg,
    Cm,
    Pmm,
    Pmg,
    Pgg,
    Cmm,
    P4,
    P4m,
    P4g,
    P3,
    P3m1,
    P31m,
    P6,
    P6m,
};

inline constexpr std::array<WallpaperClass, 17> kAllWallpaperClasses = {
    WallpaperClass::P1,  WallpaperClass::P2,   WallpaperClass::Pm,
    WallpaperClass::Pg,  WallpaperClass::Cm,   WallpaperClass::Pmm,
    WallpaperClass::Pmg, WallpaperClass::Pgg,  WallpaperClass::Cmm,
    WallpaperClass::P4,  WallpaperClass::P4m,  WallpaperClass::P4g,
    WallpaperClass::P3,  WallpaperClass::P3m1, WallpaperClass::P31m,
    WallpaperClass::P6,  WallpaperClass::P6m,
};

// Short crystallographic symbol, e.g. "p4g".
std::string to_string(WallpaperClass c);

// Orbifold symbol in ASCII, e.g. "D(*2,4)" or "Kb". A "*" marks a corner
// order (a cone point sitting on the reflector boundary).
std::string orbifold_name(WallpaperClass c);

// Accepts the crystallographic symbol or the orbifold symbol, in any case
// and with incidental whitespace. Returns nothing for unknown names.
std::optional<WallpaperClass> parse_class_id(const std::string& text);

// The quotient orbifold shape of a wallpaper group: base surface, cone
// points, and reflector corners.
struct OrbifoldSignature {
    bool orientable = false;
    std::vector<Integer> cone_orders;    // ascending
    bool has_reflector_boundary = false;
    std::vector<Integer> corner_orders;  // ascending
    std::string underlying_surface;      // "torus", "disc", ...

    // chi of the base surface minus sum(1 - 1/m) over cones minus
    // (1/2) sum(1 - 1/n) over corners. Zero exactly for flat orbifolds.
    Rational orbifold_euler_characteristic() const;

    // The ASCII orbifold symbol generated from the data above.
    std::string name() const;

    friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

// A finite presentation together with the affine element standing behind
// each abstract generator, in generator order.
struct AssignedPresentation {
    FinitePresentation presentation;
    std::vector<AffineElement> images;
};

// Everything the library asserts about one wallpaper class.
struct CatalogEntry {
    WallpaperClass id;
    PointGroupClass holonomy_class;
    // Coordinates of the translation extension in H^2 of the holonomy
    // group; empty when that group vanishes.
    std::vector<Integer> extension_coordinates;
    // Named affine elements used by the two presentations. Names are
    // unique; both presentations draw their images from this list.
    std::vector<std::pair<std::string, AffineElement>> affine_generators;
    // Presentation built over the translation lattice (generators x, y
    // plus point-group lifts).
    AssignedPresentation presentation_extension;
    // Presentation read off the quotient orbifold (rotations about cone
    // points, reflections, glides).
    AssignedPresentation presentation_orbifold;
    OrbifoldSignature signature;
    AbelianInvariants abelianization;
    // Structural remarks: amalgam and semidirect decompositions, centres,
    // distinguished subgroups, and corrections to inconsistent generator
    // data this catalog deliberately replaces.
    std::vector<std::string> notes;
};

// The full table, ordered as kAllWallpaperClasses.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& entry(WallpaperClass c);

// The concrete group on the standard lattice Z^2 generated by every named
// affine generator of the entry. Built once and cached.
const CrystalGroup& standard_group(WallpaperClass c);

}  // namespace wg
