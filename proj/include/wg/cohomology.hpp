#pragma once

#include "wg/affine.hpp"
#include "wg/holonomy.hpp"
#include "wg/linalg.hpp"

#include <memory>
#include <vector>

namespace wg {

// A normalized integral 2-cochain on a point group: one Z^2 value per
// ordered pair of non-identity elements, flattened in (row element, column
// element, component) order over the sorted non-identity element list.
struct Cocycle2 {
    std::vector<Mat2> elements;  // non-identity, sorted
    std::vector<Integer> values;

    std::size_t index_of(const Mat2& m) const;
    // Value at the ordered pair (m, n).
    std::array<Integer, 2> at(const Mat2& m, const Mat2& n) const;

    friend Cocycle2 operator+(const Cocycle2& a, const Cocycle2& b);
    friend bool operator==(const Cocycle2&, const Cocycle2&) = default;
};

// The second cohomology of a point group acting on Z^2, presented as a
// finite abelian group with an explicit coordinate map on cocycles.
class CohomologyGroup {
  public:
    explicit CohomologyGroup(PointGroup g);

    const PointGroup& group() const { return group_; }
    // Invariant factors of the quotient, each at least 2.
    const std::vector<Integer>& torsion() const { return torsion_; }
    Integer order() const;

    // Coordinates of a cocycle class, one residue per torsion factor.
    // Throws std::invalid_argument when the input is not a cocycle.
    std::vector<Integer> coordinates_of(const Cocycle2& c) const;

    bool is_coboundary(const Cocycle2& c) const;

    Cocycle2 zero_cocycle() const;
    // A cocycle whose class has coordinate 1 in factor i and 0 elsewhere.
    Cocycle2 basis_cocycle(std::size_t i) const;

  private:
    Cocycle2 smith_basis_cocycle(std::size_t i) const;

    PointGroup group_;
    std::vector<Mat2> nontrivial_;       // sorted non-identity elements
    std::vector<IntVector> kernel_;      // cocycle lattice basis, rows
    IntMatrix kernel_coord_;             // maps a cocycle to kernel coordinates
    std::size_t noncocycle_rows_ = 0;    // leading coordinate rows that must vanish
    IntMatrix quotient_u_;               // Smith transform of the coboundary matrix
    std::vector<Integer> diag_;          // Smith diagonal of the coboundary matrix
    std::vector<std::size_t> torsion_positions_;
    std::vector<Integer> torsion_;
    std::vector<std::size_t> coordinate_order_;  // published index -> Smith index
};

// Memoized by element set.
const CohomologyGroup& h2_of_point_group(const PointGroup& g);

// The cocycle of a crystal group with lattice Z^2:
// c(m, n) = t_m + m t_n - t_{mn}, which is integral.
Cocycle2 cocycle_of_group(const CrystalGroup& g);

// The extension of the point group by Z^2 with the given cocycle class,
// realized through the averaged vector system t_m = (sum_n c(m, n)) / |g|.
CrystalGroup extension_from_cocycle(const PointGroup& g, const Cocycle2& c);

// Coordinates of the extension class of the group (rebased internally).
std::vector<Integer> class_of_group(const CrystalGroup& g);

// Whether the restriction of the extension class of g to the subgroup with
// the given matrices is trivial, i.e. whether the preimage of the subgroup
// splits as a semidirect product. Decided by an exact integral system for a
// common fixed point, with denominators bounded through orbit averaging.
bool restriction_is_trivial(const CrystalGroup& g, const std::vector<Mat2>& subgroup);

}  // namespace wg
