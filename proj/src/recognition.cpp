#include "wg/recognition.hpp"

#include "wg/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace wg {

namespace {

// x^a y^b over the generator numbering of derive_presentation.
Word lattice_word(int a, int b) {
    return Word({1}).powered(a) * Word({2}).powered(b);
}

int small_int(const Rational& r) {
    if (den(r) != 1) throw std::logic_error("derive_presentation: fractional lattice offset");
    return num(r).convert_to<int>();
}

}  // namespace

AssignedPresentation derive_presentation(const CrystalGroup& g) {
    std::vector<Mat2> lifts;
    for (const auto& m : g.holonomy())
        if (!m.is_identity()) lifts.push_back(m);

    FinitePresentation p;
    p.generators = {"x", "y"};
    std::vector<AffineElement> images{{Mat2::identity(), g.lattice.basis()[0]},
                                      {Mat2::identity(), g.lattice.basis()[1]}};
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        p.generators.push_back("s" + std::to_string(i + 1));
        images.push_back({lifts[i], g.translation_part(lifts[i])});
    }

    auto offset_word = [&](const Vec2& v) {
        std::optional<Vec2> c = g.lattice.coordinates_of(v);
        if (!c) throw std::logic_error("derive_presentation: offset outside the lattice span");
        return lattice_word(small_int(c->x), small_int(c->y));
    };
    auto lift_letter = [&](const Mat2& m) {
        auto it = std::lower_bound(lifts.begin(), lifts.end(), m);
        return static_cast<int>(it - lifts.begin()) + 3;
    };

    p.relators.push_back(Word({1, 2, -1, -2}));
    // s x s^-1 and s y s^-1 written out in the lattice basis.
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        const int s = static_cast<int>(i) + 3;
        for (int axis = 1; axis <= 2; ++axis) {
            Word conj({s, axis, -s});
            p.relators.push_back(conj * offset_word(lifts[i] * images[axis - 1].translation).inverted());
        }
    }
    // s_i s_j equals a lattice word times the lift of the product matrix.
    for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = 0; j < lifts.size(); ++j) {
            const AffineElement product = images[2 + i] * images[2 + j];
            Word w({static_cast<int>(i) + 3, static_cast<int>(j) + 3});
            Vec2 offset = product.translation;
            if (!product.linear.is_identity()) {
                offset = offset - g.translation_part(product.linear);
                w = w * Word({-lift_letter(product.linear)});
            }
            p.relators.push_back(w * offset_word(offset).inverted());
        }
    return {std::move(p), std::move(images)};
}

RecognitionReport identify(const CrystalGroup& g) {
    RecognitionReport report;
    report.rebased_group = g.lattice == Lattice::standard() ? g : rebase(g).group;
    const CrystalGroup& s = report.rebased_group;

    PointGroup holonomy{s.holonomy()};
    report.evidence.holonomy_class = classify_point_group(holonomy);
    report.evidence.abelianization = abelianization(derive_presentation(s).presentation);
    report.evidence.split = restriction_is_trivial(s, holonomy.elements);

    const CatalogEntry* found = nullptr;
    for (const auto& e : catalog())
        if (e.holonomy_class == report.evidence.holonomy_class &&
            e.abelianization == report.evidence.abelianization) {
            found = &e;
            break;
        }
    if (!found) throw std::logic_error("identify: invariants match no catalog entry");
    report.id = found->id;

    if (standard_group(found->id).holonomy() == holonomy.elements)
        report.evidence.extension_coordinates = class_of_group(s);

    // Splitness is isomorphism-invariant (the lattice is characteristic),
    // and element-set-preserving conjugations permute coordinates only
    // between equal factors, so the sorted coordinates must agree.
    const bool entry_split =
        std::all_of(found->extension_coordinates.begin(), found->extension_coordinates.end(),
                    [](const Integer& e) { return e == 0; });
    if (report.evidence.split != entry_split)
        throw std::logic_error("identify: split flag contradicts the catalog");
    if (report.evidence.extension_coordinates) {
        std::vector<Integer> got = *report.evidence.extension_coordinates;
        std::vector<Integer> want = found->extension_coordinates;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) throw std::logic_error("identify: extension class contradicts the catalog");
    }
    return report;
}

RecognitionReport identify_subgroup_words(WallpaperClass id, const std::vector<Word>& words) {
    const CatalogEntry& e = entry(id);
    std::vector<AffineElement> images;
    images.reserve(e.affine_generators.size());
    for (const auto& [name, value] : e.affine_generators) images.push_back(value);
    std::vector<AffineElement> generators;
    generators.reserve(words.size());
    for (const auto& w : words) generators.push_back(evaluate_word(w, images));
    return identify(group_from_generators(generators));
}

RecognitionReport identify_subgroup(WallpaperClass id, const std::vector<std::string>& words) {
    const CatalogEntry& e = entry(id);
    std::vector<std::string> names;
    names.reserve(e.affine_generators.size());
    for (const auto& [name, value] : e.affine_generators) names.push_back(name);
    std::vector<Word> parsed;
    parsed.reserve(words.size());
    for (const auto& text : words) parsed.push_back(parse_word(text, names));
    return identify_subgroup_words(id, parsed);
}

}  // namespace wg
