#pragma once

#include "wg/affine.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wg {

// Standard generators of the finite subgroups of GL2(Z).
inline Mat2 quarter_turn() { return {0, 1, -1, 0}; }    // order 4
inline Mat2 sixth_turn() { return {0, -1, 1, 1}; }      // order 6
inline Mat2 third_turn() { return {-1, -1, 1, 0}; }     // order 3
inline Mat2 diagonal_mirror() { return {0, 1, 1, 0}; }  // swaps the axes
inline Mat2 axis_mirror() { return {1, 0, 0, -1}; }     // fixes the x axis
inline Mat2 hex_mirror() { return {-1, 0, 1, 1}; }      // reflection through (0,1)
inline Mat2 half_turn() { return {-1, 0, 0, -1}; }

// A finite subgroup of GL2(Z), elements sorted and closed.
struct PointGroup {
    std::vector<Mat2> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const Mat2& m) const;

    friend bool operator==(const PointGroup&, const PointGroup&) = default;
    friend bool operator<(const PointGroup& a, const PointGroup& b) {
        return a.elements < b.elements;
    }
};

struct NotFinite : std::runtime_error {
    NotFinite() : std::runtime_error("matrix group is not a finite plane point group") {}
};

// Multiplicative closure; throws NotFinite when the closure leaves the
// possible plane point group orders.
PointGroup close_point_group(const std::vector<Mat2>& generators);

// The conjugacy classes of finite subgroups of GL2(Z).
enum class PointGroupClass {
    Trivial,
    C2Rotation,  // half turn only
    C2Mirror,    // reflection with torsion-free coinvariants
    C2Glide,     // reflection with Z/2 coinvariants
    C3,
    C4,
    C6,
    D2Mixed,  // half turn and mirror-kind reflections
    D2Axes,   // half turn and glide-kind reflections
    D3Long,   // order 6 dihedral, reflections negate the 3-torsion quotient
    D3Short,  // order 6 dihedral, reflections fix the 3-torsion quotient
    D4,
    D6,
};

constexpr PointGroupClass kAllPointGroupClasses[] = {
    PointGroupClass::Trivial,  PointGroupClass::C2Rotation, PointGroupClass::C2Mirror,
    PointGroupClass::C2Glide,  PointGroupClass::C3,         PointGroupClass::C4,
    PointGroupClass::C6,       PointGroupClass::D2Mixed,    PointGroupClass::D2Axes,
    PointGroupClass::D3Long,   PointGroupClass::D3Short,    PointGroupClass::D4,
    PointGroupClass::D6,
};

std::string to_string(PointGroupClass c);

// The standard representative subgroup of each class.
PointGroup representative(PointGroupClass c);

// Determines the GL2(Z) conjugacy class of the group.
PointGroupClass classify_point_group(const PointGroup& g);

// For a reflection (determinant -1, order 2): true when Z^2/(m - 1)Z^2 has
// 2-torsion, i.e. the element is of the glide kind.
bool is_glide_kind(const Mat2& m);

// All subgroups (every subgroup here is generated by at most two elements).
std::vector<PointGroup> subgroups_of(const PointGroup& g);

// Whether a group of class `sub` embeds into one of class `super` up to
// GL2(Q) conjugacy. Rational conjugacy identifies the mirror and glide
// kinds, which rebasing to a sublattice can exchange.
bool q_embeddable(PointGroupClass sub, PointGroupClass super);

// Exhaustive conjugacy test over conjugators with entries bounded by
// `bound`; used as an independent cross-check.
bool conjugate_in_gl2z(const PointGroup& a, const PointGroup& b, int bound);

}  // namespace wg
