#pragma once

#include "wg/affine.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace wg {

// A word in abstract group generators. Letter +k is generator k-1, letter
// -k its inverse.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    Word inverted() const;
    Word powered(int exponent) const;
    bool empty() const { return letters.empty(); }

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
};

// Parses "a*b^-1", "(j*d)^2", "d^2*x^-1" and juxtaposition of single-letter
// generator names ("xyx"). Throws std::invalid_argument with a description
// on malformed input or unknown generator names.
Word parse_word(const std::string& text, const std::vector<std::string>& generator_names);
std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names);

struct FinitePresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::size_t generator_index(const std::string& name) const;
    Word word(const std::string& text) const { return parse_word(text, generators); }
};

AffineElement evaluate_word(const Word& w, const std::vector<AffineElement>& images);
Mat2 evaluate_word(const Word& w, const std::vector<Mat2>& images);

// Whether every relator evaluates to the identity affine map.
bool relators_hold(const FinitePresentation& p, const std::vector<AffineElement>& images);

// Invariants of the abelianized group.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors, each >= 2

    std::size_t mod2_rank() const;
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};
AbelianInvariants abelianization(const FinitePresentation& p);
std::string to_string(const AbelianInvariants& a);

// A complete coset table: row per coset, column 2k for generator k and
// column 2k+1 for its inverse.
struct CosetTable {
    static constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

    std::size_t generator_count = 0;
    std::vector<std::vector<std::size_t>> rows;

    std::size_t index() const { return rows.size(); }
    std::size_t move(std::size_t coset, int letter) const;
    std::size_t trace(std::size_t coset, const Word& w) const;

    friend bool operator==(const CosetTable&, const CosetTable&) = default;
    friend bool operator<(const CosetTable& a, const CosetTable& b) { return a.rows < b.rows; }
};

struct EnumerationBudgetExceeded : std::runtime_error {
    EnumerationBudgetExceeded()
        : std::runtime_error("coset enumeration exceeded its budget") {}
};

// Todd-Coxeter enumeration of the cosets of the subgroup generated by the
// given words, with relator-driven filling and a lookahead pass before
// giving up on the budget. The result is standardized: cosets appear in
// scan order. Throws EnumerationBudgetExceeded when the live coset count
// cannot be kept within max_cosets.
CosetTable coset_enumeration(const FinitePresentation& p,
                             const std::vector<Word>& subgroup_generators,
                             std::size_t max_cosets = 100000);

// Renumbers cosets into scan order (breadth-first from coset 0 reading
// columns left to right).
CosetTable standardized(const CosetTable& t);

// All subgroups of index at most max_index, as standardized coset tables,
// one table per subgroup; with up_to_conjugacy, one per conjugacy class
// (the table whose re-rooted standardization is minimal).
std::vector<CosetTable> low_index_subgroups(const FinitePresentation& p,
                                            std::size_t max_index,
                                            bool up_to_conjugacy = false);

// Presentation of the subgroup a coset table describes, on its Schreier
// generators, with the word each subgroup generator represents in the
// parent group.
struct SubgroupPresentation {
    FinitePresentation presentation;
    std::vector<Word> generator_words;
};
SubgroupPresentation reidemeister_schreier(const FinitePresentation& p, const CosetTable& t);

// Certifies a presentation against a concrete plane crystallographic group:
//   (1) every relator evaluates to the identity map;
//   (2) the images regenerate exactly the given group;
//   (3) cosets of the subgroup named by two lattice-basis words close at
//       the holonomy order;
//   (4) that subgroup's derived presentation abelianizes to Z^2.
// Together with the group being finitely generated and residually finite
// this pins the presented group up to isomorphism.
struct PresentationCertificate {
    bool relators_ok = false;
    bool generates_ok = false;
    bool lattice_index_ok = false;
    bool lattice_rank_ok = false;

    bool all() const { return relators_ok && generates_ok && lattice_index_ok && lattice_rank_ok; }
};
PresentationCertificate verify_presentation_against(const FinitePresentation& p,
                                                    const std::vector<AffineElement>& images,
                                                    const CrystalGroup& expected);

}  // namespace wg
