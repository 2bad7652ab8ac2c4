#pragma once

#include "wg/affine.hpp"
#include "wg/catalog.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wg {

// A primitive integer direction sent to plus or minus itself by every
// holonomy matrix. Sign convention: the first nonzero coordinate is
// positive. Ordering prefers short vectors, then axis directions.
struct InvariantDirection {
    Integer x{0}, y{0};

    friend bool operator==(const InvariantDirection&, const InvariantDirection&) = default;
    friend bool operator<(const InvariantDirection& v, const InvariantDirection& w) {
        const Integer vs = abs(v.x) + abs(v.y);
        const Integer ws = abs(w.x) + abs(w.y);
        if (vs != ws) return vs < ws;
        if (v.x != w.x) return v.x > w.x;
        return v.y > w.y;
    }
};

std::string to_string(const InvariantDirection& d);

// A compact one-dimensional quotient: a circle, or an interval whose two
// endpoints are mirror images.
enum class FibreType { Circle, Interval };

std::string to_string(FibreType t);

// A fibre over an endpoint of an interval base, described by what it is
// inside the orbifold. `folded` marks the fibres onto which the nearby
// general fibre maps two-to-one.
struct SingularFibre {
    std::string description;
    bool folded = false;

    friend bool operator==(const SingularFibre&, const SingularFibre&) = default;
};

// The fibration of the plane orbifold along an invariant direction: fibres
// are the images of the lines parallel to the direction, the base is the
// quotient of the transverse axis. Over a circle base every fibre is a
// copy of the general fibre; over an interval base the two endpoint fibres
// are listed, in base order, as singular fibres.
struct FibrationStructure {
    InvariantDirection direction;
    FibreType base = FibreType::Circle;
    FibreType general_fibre = FibreType::Circle;
    std::vector<SingularFibre> singular_fibres;

    // Folded singular fibres only (multiplicity two).
    std::size_t exceptional_count() const;

    friend bool operator==(const FibrationStructure&, const FibrationStructure&) = default;
};

// Orbits of invariant directions of the standard model, each orbit sorted,
// orbits ordered by their least member. Two directions are equivalent when
// a unimodular matrix with entries bounded by `bound` maps one to the
// other while fixing both the holonomy element set and the extension
// class. Holonomy inside {I, -I} constrains nothing, so that case reports
// the single canonical orbit {(1, 0)}; a class containing a rotation of
// order three or more has no invariant direction and reports nothing.
std::vector<std::vector<InvariantDirection>> invariant_directions(WallpaperClass id,
                                                                  int bound = 2);

// One fibration per direction orbit, computed from the orbit
// representative, in orbit order.
std::vector<FibrationStructure> fibration_structures(WallpaperClass id, int bound = 2);

// Whether the group surjects onto Z, equivalently whether its
// abelianization has positive free rank; these are the classes with a
// circle-base fibration.
bool fibres_over_circle(WallpaperClass id);

}  // namespace wg
