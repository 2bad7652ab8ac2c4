#pragma once

#include "wg/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wg {

// The measured invariants backing an identification. Holonomy class and
// abelianization together already pick out one of the seventeen classes;
// the split flag and the extension coordinates are kept as confirmation.
struct RecognitionEvidence {
    PointGroupClass holonomy_class = PointGroupClass::Trivial;
    AbelianInvariants abelianization;
    // Whether the extension of the point group by the lattice splits,
    // i.e. some point is fixed by a lift of every holonomy matrix.
    bool split = false;
    // Coordinates of the extension class. Only present when the rebased
    // holonomy is literally the catalog model's element set, where the
    // coordinate convention transfers; absent for other embeddings.
    std::optional<std::vector<Integer>> extension_coordinates;
};

struct RecognitionReport {
    WallpaperClass id = WallpaperClass::P1;
    CrystalGroup rebased_group;  // rewritten on the lattice Z^2
    RecognitionEvidence evidence;
};

// The presentation read straight off a group: lattice generators x, y and
// one lift s1, s2, ... per non-identity holonomy matrix in sorted order.
// Relators are the commutator [x, y], the action of each lift on x and y,
// and one product relator per ordered pair of lifts, with lattice offsets
// taken from the vector system. Sound by construction; the certificate of
// verify_presentation_against passes on the output.
AssignedPresentation derive_presentation(const CrystalGroup& g);

// Identifies the class of any plane crystallographic group. Total on
// well-formed groups; throws std::logic_error only if the measured
// evidence matches no catalog entry, which would mean a library defect.
RecognitionReport identify(const CrystalGroup& g);

// Evaluates words over the named affine generators of entry(id), then
// identifies the subgroup they generate inside the standard model.
// Throws LatticeDeficient when the words span translations of rank
// below 2 (such subgroups are not plane groups and are not classified).
RecognitionReport identify_subgroup_words(WallpaperClass id, const std::vector<Word>& words);
// The same, parsing each string over the named generators first.
RecognitionReport identify_subgroup(WallpaperClass id, const std::vector<std::string>& words);

}  // namespace wg
