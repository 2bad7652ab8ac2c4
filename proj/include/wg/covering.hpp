#pragma once

#include "wg/catalog.hpp"
#include "wg/recognition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wg {

// One finite-index subgroup of the orbifold presentation of a class,
// identified as a wallpaper class of its own. The generator words are
// Schreier generators over the orbifold presentation of the base.
struct ClassifiedSubgroup {
    Integer index{0};
    WallpaperClass cls = WallpaperClass::P1;
    std::vector<Word> generator_words;
};

// Every subgroup of index at most max_index of the orbifold presentation
// of the class, each identified by evaluating its Schreier generators in
// the standard model. The index from the coset table is cross-checked
// against the lattice and holonomy arithmetic of the evaluated subgroup.
// Sorted by index, then by class. Results are cached per (id, max_index).
std::vector<ClassifiedSubgroup> classified_subgroups(WallpaperClass id, int max_index);

enum class CoverOutcome { Yes, No, Unknown };

std::string to_string(CoverOutcome o);

// Evidence that one orbifold covers another: a subgroup of the base group
// isomorphic to the cover's group, re-verified at decision time.
struct CoverWitness {
    Integer index{0};
    std::vector<Word> subgroup_words;  // over the base orbifold presentation
    RecognitionReport report;          // identification of the evaluated subgroup
};

// Outcome of a covering query. Yes carries a re-verified witness. No
// carries a certificate naming a monotone invariant present in the cover
// and absent in the base (both computed from the standard models). Unknown
// records the exhausted search bound: the relation was not discovered, and
// no certificate excludes it.
struct CoverDecision {
    CoverOutcome outcome = CoverOutcome::Unknown;
    std::optional<CoverWitness> witness;  // Yes only
    std::string obstruction;              // No only: short label
    std::string detail;                   // No only: the computed data behind it
    int search_bound = 0;                 // Unknown only
};

// Decides whether the orbifold of `cover` covers the orbifold of `base`,
// i.e. whether the group of `cover` embeds in the group of `base` with
// finite index. Obstructions run first: rational embeddability of the
// holonomy, then monotone comparison of the finite-subgroup spectra
// (mirrors, corner orders, rotation orders). If none applies, the
// subgroups of the base up to max_index are searched for the cover class.
CoverDecision covers(WallpaperClass cover, WallpaperClass base, int max_index = 16);

// The cover of the base corresponding to one subgroup of its holonomy,
// keeping the full translation lattice. Its class is found by restricting
// the vector system and identifying the resulting group.
struct EquitranslationalCover {
    PointGroup subgroup;
    Integer index{0};  // holonomy order of the base over the order of the subgroup
    WallpaperClass cls = WallpaperClass::P1;
};

// One entry per subgroup of the holonomy of the base, sorted by index and
// then by element list. The first entry is the base itself.
std::vector<EquitranslationalCover> equitranslational_covers(WallpaperClass base);

// A proper self-covering: a subgroup of the standard model isomorphic to
// the whole class, with the given translation lattice.
struct SelfCovering {
    Integer degree{0};
    Lattice sublattice;
};

// Verified self-coverings of the class: a degree-2 and a degree-4 entry
// whenever they exist, otherwise the smallest odd degree admitting one.
// Every witness is re-verified by rebuilding the subgroup from shifted
// generator lifts over the sublattice and identifying it.
std::vector<SelfCovering> self_coverings(WallpaperClass id);

struct HasseEdge {
    WallpaperClass cover;
    WallpaperClass base;
    Integer index{0};  // smallest witness index found

    friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

// Minimal proper covering relations discovered at the given search bound:
// Yes decisions that do not factor through a third class that also covers
// the base. Mutual covering pairs survive when nothing lies between them.
struct HasseDiagram {
    int max_index = 16;
    std::vector<HasseEdge> edges;

    std::string to_dot() const;
    std::string to_json() const;
};

HasseDiagram covering_hasse(int max_index = 16);

}  // namespace wg
