#include "wg/covering.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

namespace wg {

namespace {

const LocalGroupSpectrum& spectrum_of(WallpaperClass c) {
    static std::map<WallpaperClass, LocalGroupSpectrum> cache;
    static std::mutex lock;
    std::scoped_lock guard(lock);
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, finite_subgroup_spectrum(standard_group(c))).first;
    return it->second;
}

PointGroupClass point_class_of(WallpaperClass c) {
    return classify_point_group(close_point_group(standard_group(c).holonomy()));
}

// Index of a subgroup of the standard model, measured through the lattice
// index and the holonomy order ratio.
Integer arithmetic_index(const CrystalGroup& sub, const CrystalGroup& ambient) {
    if (ambient.point_group_order() % sub.point_group_order() != 0)
        throw std::logic_error("subgroup holonomy order does not divide the ambient order");
    return sub.lattice.index_in(ambient.lattice) *
           Integer(ambient.point_group_order() / sub.point_group_order());
}

// The subgroup of the standard model generated by words over the orbifold
// presentation generators of the class.
CrystalGroup evaluate_subgroup(WallpaperClass base, const std::vector<Word>& words) {
    const AssignedPresentation& assigned = entry(base).presentation_orbifold;
    std::vector<AffineElement> generators;
    generators.reserve(words.size());
    for (const Word& w : words) generators.push_back(evaluate_word(w, assigned.images));
    return group_from_generators(generators);
}

std::string order_list(const std::vector<int>& orders) {
    if (orders.empty()) return "none";
    std::string out = "[";
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(orders[i]);
    }
    return out + "]";
}

Lattice lattice_from_ints(int ax, int ay, int bx, int by) {
    return Lattice::from_vectors(
        {Vec2(Rational(ax), Rational(ay)), Vec2(Rational(bx), Rational(by))});
}

// All sublattices of Z^2 of the given index, through the Hermite bases
// (a, b), (0, d) with a d = index and 0 <= b < d.
std::vector<Lattice> sublattices_of_index(int n) {
    std::vector<Lattice> out;
    for (int d = n; d >= 1; --d) {
        if (n % d != 0) continue;
        const int a = n / d;
        for (int b = 0; b < d; ++b) out.push_back(lattice_from_ints(a, b, 0, d));
    }
    return out;
}

bool invariant_under(const Lattice& l, const std::vector<Mat2>& holonomy) {
    for (const Mat2& m : holonomy)
        for (const Vec2& v : l.basis())
            if (!l.contains(m * v)) return false;
    return true;
}

// The distinct residues of Z^2 modulo an index-`count` sublattice.
std::vector<Vec2> residues(const Lattice& l, int count) {
    std::vector<Vec2> out;
    for (int x = 0; x < count; ++x)
        for (int y = 0; y < count; ++y) {
            Vec2 r = l.reduce(Vec2(Rational(x), Rational(y)));
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
            if (out.size() == static_cast<std::size_t>(count)) return out;
        }
    throw std::logic_error("sublattice has fewer residues than its index");
}

// Searches for a subgroup of the standard model with the given translation
// lattice that identifies as the class itself. Generator lifts are shifted
// by every residue combination; the subgroup closure then either reproduces
// the lattice or refutes the choice.
std::optional<SelfCovering> self_covering_of_degree(WallpaperClass id, int degree) {
    const CatalogEntry& e = entry(id);
    const CrystalGroup& g = standard_group(id);
    const std::vector<Mat2> holonomy = g.holonomy();

    // Distinguished witnesses go first so reports quote the natural choice:
    // the (x+y, x-y) halving, the doubled lattice, the tripled lattice.
    std::vector<Lattice> candidates;
    if (degree == 2) candidates.push_back(lattice_from_ints(1, 1, 1, -1));
    if (degree == 4) candidates.push_back(lattice_from_ints(2, 0, 0, 2));
    if (degree == 9) candidates.push_back(lattice_from_ints(3, 0, 0, 3));
    for (Lattice& l : sublattices_of_index(degree))
        if (std::find(candidates.begin(), candidates.end(), l) == candidates.end())
            candidates.push_back(std::move(l));

    std::vector<AffineElement> lifts;
    for (const auto& [name, element] : e.affine_generators)
        if (!(element.linear == Mat2::identity())) lifts.push_back(element);

    for (const Lattice& l : candidates) {
        if (!invariant_under(l, holonomy)) continue;
        const std::vector<Vec2> shifts = residues(l, degree);
        std::vector<std::size_t> counter(lifts.size(), 0);
        while (true) {
            std::vector<AffineElement> generators;
            generators.reserve(lifts.size() + l.basis().size());
            for (std::size_t i = 0; i < lifts.size(); ++i)
                generators.push_back({lifts[i].linear, lifts[i].translation + shifts[counter[i]]});
            for (const Vec2& v : l.basis()) generators.push_back({Mat2::identity(), v});
            CrystalGroup h = group_from_generators(generators);
            if (h.lattice == l && identify(h).id == id) return SelfCovering{Integer(degree), l};
            std::size_t at = 0;
            while (at < counter.size() && ++counter[at] == shifts.size()) counter[at++] = 0;
            if (at == counter.size()) break;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(CoverOutcome o) {
    switch (o) {
        case CoverOutcome::Yes: return "yes";
        case CoverOutcome::No: return "no";
        case CoverOutcome::Unknown: return "unknown";
    }
    throw std::logic_error("unhandled covering outcome");
}

std::vector<ClassifiedSubgroup> classified_subgroups(WallpaperClass id, int max_index) {
    if (max_index < 1) throw std::invalid_argument("subgroup enumeration needs max_index >= 1");
    static std::map<std::pair<WallpaperClass, int>, std::vector<ClassifiedSubgroup>> cache;
    static std::mutex lock;
    {
        std::scoped_lock guard(lock);
        auto it = cache.find({id, max_index});
        if (it != cache.end()) return it->second;
    }

    const CatalogEntry& e = entry(id);
    const CrystalGroup& model = standard_group(id);
    std::vector<ClassifiedSubgroup> out;
    for (const CosetTable& t : low_index_subgroups(e.presentation_orbifold.presentation,
                                                   static_cast<std::size_t>(max_index))) {
        SubgroupPresentation sub = reidemeister_schreier(e.presentation_orbifold.presentation, t);
        CrystalGroup h = evaluate_subgroup(id, sub.generator_words);
        const Integer table_index(t.index());
        if (arithmetic_index(h, model) != table_index)
            throw std::logic_error("coset table index disagrees with the lattice arithmetic");
        out.push_back({table_index, identify(h).id, std::move(sub.generator_words)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ClassifiedSubgroup& a, const ClassifiedSubgroup& b) {
                         if (a.index != b.index) return a.index < b.index;
                         return a.cls < b.cls;
                     });

    std::scoped_lock guard(lock);
    return cache.emplace(std::make_pair(id, max_index), std::move(out)).first->second;
}

CoverDecision covers(WallpaperClass cover, WallpaperClass base, int max_index) {
    if (max_index < 1) throw std::invalid_argument("covering search needs max_index >= 1");
    CoverDecision decision;

    const PointGroupClass cover_holonomy = point_class_of(cover);
    const PointGroupClass base_holonomy = point_class_of(base);
    if (!q_embeddable(cover_holonomy, base_holonomy)) {
        decision.outcome = CoverOutcome::No;
        decision.obstruction = "holonomy does not embed rationally";
        decision.detail = "no subgroup of the " + to_string(base_holonomy) + " holonomy of " +
                          to_string(base) + " is rationally conjugate to the " +
                          to_string(cover_holonomy) + " holonomy of " + to_string(cover);
        return decision;
    }

    // A finite subgroup of the cover is a finite subgroup of the base, so
    // every local feature must land on a compatible one: mirrors need
    // mirrors, a D_n corner needs a corner of order divisible by n, a
    // rotation centre needs a centre of divisible order.
    const LocalGroupSpectrum& cover_spectrum = spectrum_of(cover);
    const LocalGroupSpectrum& base_spectrum = spectrum_of(base);
    if (cover_spectrum.reflection && !base_spectrum.reflection) {
        decision.outcome = CoverOutcome::No;
        decision.obstruction = "reflection in cover, none in base";
        decision.detail = "the model of " + to_string(cover) + " contains a mirror; the model of " +
                          to_string(base) + " has none";
        return decision;
    }

    std::vector<int> cover_corners = cover_spectrum.corner_orders();
    std::vector<int> base_corners = base_spectrum.corner_orders();
    std::sort(cover_corners.begin(), cover_corners.end());
    for (int n : cover_corners) {
        const bool lands = std::any_of(base_corners.begin(), base_corners.end(),
                                       [n](int m) { return m % n == 0; });
        if (lands) continue;
        decision.outcome = CoverOutcome::No;
        decision.obstruction = "corner D" + std::to_string(n) + " in cover, none in base";
        decision.detail = "a corner of " + to_string(cover) + " has a dihedral stabilizer of order " +
                          std::to_string(2 * n) + "; corner orders of " + to_string(base) + ": " +
                          order_list(base_corners);
        return decision;
    }

    std::vector<int> cover_cones = cover_spectrum.cone_orders();
    std::sort(cover_cones.begin(), cover_cones.end());
    std::vector<int> base_centre_orders;
    base_centre_orders.reserve(base_spectrum.centres.size());
    for (const RotationCentreOrbit& orbit : base_spectrum.centres)
        base_centre_orders.push_back(orbit.rotation_order);
    for (int n : cover_cones) {
        const bool lands = std::any_of(base_centre_orders.begin(), base_centre_orders.end(),
                                       [n](int m) { return m % n == 0; });
        if (lands) continue;
        decision.outcome = CoverOutcome::No;
        decision.obstruction =
            "cone of order " + std::to_string(n) + " in cover, none compatible in base";
        decision.detail = "a rotation centre of " + to_string(cover) + " has order " +
                          std::to_string(n) + "; centre orders of " + to_string(base) + ": " +
                          order_list(base_centre_orders);
        return decision;
    }

    for (const ClassifiedSubgroup& s : classified_subgroups(base, max_index)) {
        if (s.cls != cover) continue;
        // Re-verify the witness from scratch before reporting it.
        CrystalGroup h = evaluate_subgroup(base, s.generator_words);
        RecognitionReport report = identify(h);
        if (report.id != cover || arithmetic_index(h, standard_group(base)) != s.index)
            throw std::logic_error("covering witness failed its re-verification");
        decision.outcome = CoverOutcome::Yes;
        decision.witness = CoverWitness{s.index, s.generator_words, std::move(report)};
        return decision;
    }

    decision.outcome = CoverOutcome::Unknown;
    decision.search_bound = max_index;
    return decision;
}

std::vector<EquitranslationalCover> equitranslational_covers(WallpaperClass base) {
    const CrystalGroup& g = standard_group(base);
    const PointGroup holonomy = close_point_group(g.holonomy());
    std::vector<EquitranslationalCover> out;
    for (const PointGroup& sub : subgroups_of(holonomy)) {
        std::map<Mat2, Vec2> system;
        for (const Mat2& m : sub.elements) system.emplace(m, g.translation_part(m));
        const CrystalGroup restricted = make_crystal_group(g.lattice, system);
        out.push_back({sub, Integer(holonomy.order() / sub.order()), identify(restricted).id});
    }
    std::sort(out.begin(), out.end(),
              [](const EquitranslationalCover& a, const EquitranslationalCover& b) {
                  if (a.index != b.index) return a.index < b.index;
                  return a.subgroup.elements < b.subgroup.elements;
              });
    return out;
}

std::vector<SelfCovering> self_coverings(WallpaperClass id) {
    std::vector<SelfCovering> out;
    if (auto halving = self_covering_of_degree(id, 2)) out.push_back(*halving);
    if (auto doubling = self_covering_of_degree(id, 4)) out.push_back(*doubling);
    if (out.empty())
        for (int degree : {3, 5, 7, 9})
            if (auto odd = self_covering_of_degree(id, degree)) {
                out.push_back(*odd);
                break;
            }
    return out;
}

HasseDiagram covering_hasse(int max_index) {
    if (max_index < 2) throw std::invalid_argument("the covering diagram needs max_index >= 2");
    constexpr std::size_t n = kAllWallpaperClasses.size();
    std::array<std::array<std::optional<Integer>, n>, n> found;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t b = 0; b < n; ++b) {
            if (c == b) continue;
            CoverDecision d = covers(kAllWallpaperClasses[c], kAllWallpaperClasses[b], max_index);
            if (d.outcome == CoverOutcome::Yes) found[c][b] = d.witness->index;
        }

    // An edge is redundant only when it factors through an intermediate via
    // strictly smaller indices. Comparing indices matters: mutually covering
    // pairs would otherwise swallow every edge entering them, and the diagram
    // would stop reflecting which classes reach which.
    HasseDiagram diagram;
    diagram.max_index = max_index;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t b = 0; b < n; ++b) {
            if (!found[c][b]) continue;
            const Integer& direct = *found[c][b];
            bool factors = false;
            for (std::size_t z = 0; z < n && !factors; ++z)
                factors = z != c && z != b && found[c][z] && found[z][b] &&
                          *found[c][z] < direct && *found[z][b] < direct;
            if (!factors)
                diagram.edges.push_back({kAllWallpaperClasses[c], kAllWallpaperClasses[b], direct});
        }
    return diagram;
}

std::string HasseDiagram::to_dot() const {
    std::string out;
    out += "// minimal covering relations among the seventeen plane classes\n";
    out += "// search bound: subgroup index <= " + std::to_string(max_index) + "\n";
    out += "digraph coverings {\n";
    out += "  label=\"covering relations (search bound " + std::to_string(max_index) + ")\";\n";
    out += "  labelloc=\"t\";\n";
    out += "  node [shape=box];\n";
    for (WallpaperClass c : kAllWallpaperClasses)
        out += "  \"" + to_string(c) + "\" [label=\"" + to_string(c) + "\\n" + orbifold_name(c) +
               "\"];\n";
    for (const HasseEdge& e : edges)
        out += "  \"" + to_string(e.cover) + "\" -> \"" + to_string(e.base) +
               "\" [index=" + to_string(e.index) + ", label=\"" + to_string(e.index) + "\"];\n";
    out += "}\n";
    return out;
}

std::string HasseDiagram::to_json() const {
    nlohmann::ordered_json j;
    j["max_index"] = max_index;
    j["nodes"] = nlohmann::ordered_json::array();
    for (WallpaperClass c : kAllWallpaperClasses)
        j["nodes"].push_back({{"symbol", to_string(c)}, {"orbifold", orbifold_name(c)}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const HasseEdge& e : edges)
        j["edges"].push_back({{"cover", to_string(e.cover)},
                              {"base", to_string(e.base)},
                              {"index", e.index.convert_to<int>()}});
    return j.dump(2) + "\n";
}

}  // namespace wg
