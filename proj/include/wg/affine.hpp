#pragma once

#include "wg/numeric.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wg {

// Row-major 2x2 integer matrix.
struct Mat2 {
    Integer a{0}, b{0}, c{0}, d{0};

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Integer det() const { return a * d - b * c; }
    Integer trace() const { return a + d; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    // Inverse of a matrix with determinant +-1.
    Mat2 inverse() const;

    // Multiplicative order, or 0 if the order exceeds 12.
    int order() const;

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend Vec2 operator*(const Mat2& m, const Vec2& v) {
        return {Rational(m.a) * v.x + Rational(m.b) * v.y,
                Rational(m.c) * v.x + Rational(m.d) * v.y};
    }
    friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend bool operator<(const Mat2& m, const Mat2& n) {
        if (m.a != n.a) return m.a < n.a;
        if (m.b != n.b) return m.b < n.b;
        if (m.c != n.c) return m.c < n.c;
        return m.d < n.d;
    }
};

std::string to_string(const Mat2& m);

// The map x -> linear * x + translation.
struct AffineElement {
    Mat2 linear = Mat2::identity();
    Vec2 translation;

    friend bool operator==(const AffineElement&, const AffineElement&) = default;
    friend bool operator<(const AffineElement& p, const AffineElement& q) {
        if (!(p.linear == q.linear)) return p.linear < q.linear;
        return p.translation < q.translation;
    }
};

// compose(a, b) acts as a after b: x -> a(b(x)).
AffineElement compose(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& a);
Vec2 apply(const AffineElement& a, const Vec2& x);
inline AffineElement operator*(const AffineElement& a, const AffineElement& b) {
    return compose(a, b);
}

std::string to_string(const AffineElement& a);

// A finitely generated subgroup of (Q^2, +), kept as a canonical basis:
// the Hermite basis of the integer rescaling, divided back by the scale.
class Lattice {
  public:
    Lattice() = default;  // rank 0

    static Lattice standard();  // Z^2
    static Lattice from_vectors(const std::vector<Vec2>& generators);

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec2>& basis() const { return basis_; }

    bool contains(const Vec2& v) const;
    bool contains(const Lattice& other) const;

    Lattice joined_with(const Vec2& v) const;
    Lattice joined_with(const Lattice& other) const;

    // Canonical coset representative of v modulo this lattice.
    Vec2 reduce(const Vec2& v) const;

    // Rational coordinates of v in the basis; requires rank 2.
    std::optional<Vec2> coordinates_of(const Vec2& v) const;

    // Index of this lattice inside super; both must have rank 2 and this
    // must be contained in super.
    Integer index_in(const Lattice& super) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

  private:
    std::vector<Vec2> basis_;
};

std::string to_string(const Lattice& l);

// A crystallographic plane group: the translation lattice plus one reduced
// representative translation per holonomy matrix ("vector system"). The
// group is the set of maps (m, vector_system[m] + lambda) over all m and
// all lambda in the lattice.
struct CrystalGroup {
    Lattice lattice;
    std::map<Mat2, Vec2> vector_system;

    std::size_t point_group_order() const { return vector_system.size(); }
    std::vector<Mat2> holonomy() const;
    Vec2 translation_part(const Mat2& m) const;  // throws if m absent
    bool contains(const AffineElement& e) const;

    friend bool operator==(const CrystalGroup&, const CrystalGroup&) = default;
};

struct HolonomyUnbounded : std::runtime_error {
    HolonomyUnbounded() : std::runtime_error("holonomy closure exceeds any plane point group") {}
};
struct LatticeDeficient : std::runtime_error {
    LatticeDeficient() : std::runtime_error("translation subgroup has rank below 2") {}
};

// Closure of the generated group: collects the full translation lattice and
// one representative per linear part. Throws HolonomyUnbounded when the
// linear parts do not stay within a finite plane point group, and
// LatticeDeficient when the translations do not reach rank 2.
CrystalGroup group_from_generators(const std::vector<AffineElement>& generators);

// Reduces every representative and checks group axioms; throws
// std::invalid_argument on violation. Returns the normalized group.
CrystalGroup make_crystal_group(const Lattice& lattice, const std::map<Mat2, Vec2>& system);

// Conjugation by the affine map x -> p x + shift with p unimodular.
CrystalGroup conjugated(const CrystalGroup& g, const Mat2& p, const Vec2& shift);

// Rewrites the group in the coordinates of its own lattice basis, so the
// result has lattice Z^2. basis_used holds the lattice basis in the old
// coordinates (its columns conjugate new coordinates back to old ones).
struct RebasedGroup {
    CrystalGroup group;
    std::array<Vec2, 2> basis_used;
};
RebasedGroup rebase(const CrystalGroup& g);

// Translations commuting with the whole group: the sublattice fixed by
// every holonomy matrix.
Lattice centre_lattice(const CrystalGroup& g);

// One orbit of rotation centres. `point` is a representative centre,
// `rotation_order` the largest rotation order fixing it, `dihedral` whether
// some mirror passes through it, `centres_mod_lattice` how many lattice
// translates of the orbit meet a fundamental cell of the lattice.
struct RotationCentreOrbit {
    Vec2 point;
    int rotation_order = 1;
    bool dihedral = false;
    std::size_t centres_mod_lattice = 0;
};

struct LocalGroupSpectrum {
    std::vector<RotationCentreOrbit> centres;
    bool reflection = false;

    std::vector<int> cone_orders() const;    // non-dihedral orbits
    std::vector<int> corner_orders() const;  // dihedral orbits
};

LocalGroupSpectrum finite_subgroup_spectrum(const CrystalGroup& g);

// Whether some element of the group is an actual mirror (a reflection whose
// fixed line is nonempty).
bool has_mirror(const CrystalGroup& g);

// Whether the element family (m, t + lambda) contains a map with a fixed
// point, for m in the holonomy of g and t its representative.
bool element_family_has_fixed_point(const CrystalGroup& g, const Mat2& m);

// All fixed points of maps (m, translation_part(m) + lambda), taken modulo
// the lattice; m must be a rotation (determinant 1, not the identity).
std::vector<Vec2> rotation_centres_mod_lattice(const CrystalGroup& g, const Mat2& m);

// The linear parts of all elements of g fixing p (with suitable translation).
std::vector<Mat2> stabilizer_at(const CrystalGroup& g, const Vec2& p);

}  // namespace wg
