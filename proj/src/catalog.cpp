#include "wg/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace wg {

namespace {

constexpr std::array<const char*, 17> kSymbols = {
    "p1",  "p2",  "pm",  "pg",   "cm",   "pmm", "pmg", "pgg", "cmm",
    "p4",  "p4m", "p4g", "p3",   "p3m1", "p31m", "p6", "p6m",
};

constexpr std::array<std::pair<const char*, int>, 7> kSurfaces = {{
    {"torus", 0},
    {"sphere", 2},
    {"disc", 1},
    {"annulus", 0},
    {"Möbius band", 0},
    {"Klein bottle", 0},
    {"projective plane", 1},
}};

constexpr std::array<std::pair<const char*, const char*>, 7> kSurfaceLetters = {{
    {"torus", "T"},
    {"sphere", "S"},
    {"disc", "D"},
    {"annulus", "A"},
    {"Möbius band", "Mb"},
    {"Klein bottle", "Kb"},
    {"projective plane", "P"},
}};

AffineElement el(const Mat2& m, Rational tx, Rational ty) {
    return AffineElement{m, Vec2{std::move(tx), std::move(ty)}};
}

using NamedElements = std::vector<std::pair<std::string, AffineElement>>;

struct RawPresentation {
    std::vector<std::string> generators;
    std::vector<std::string> relators;
};

struct RawEntry {
    WallpaperClass id;
    PointGroupClass holonomy;
    std::vector<Integer> coordinates;
    NamedElements generators;
    RawPresentation extension;
    RawPresentation orbifold;
    OrbifoldSignature signature;
    AbelianInvariants abelianization;
    std::vector<std::string> notes;
};

AssignedPresentation assemble(const NamedElements& named, const RawPresentation& raw) {
    FinitePresentation p;
    p.generators = raw.generators;
    p.relators.reserve(raw.relators.size());
    for (const auto& text : raw.relators) p.relators.push_back(p.word(text));

    AssignedPresentation out{std::move(p), {}};
    out.images.reserve(raw.generators.size());
    for (const auto& name : raw.generators) {
        auto it = std::find_if(named.begin(), named.end(),
                               [&](const auto& pair) { return pair.first == name; });
        if (it == named.end())
            throw std::logic_error("catalog generator has no affine image: " + name);
        out.images.push_back(it->second);
    }
    return out;
}

CatalogEntry cook(RawEntry raw) {
    CatalogEntry e;
    e.id = raw.id;
    e.holonomy_class = raw.holonomy;
    e.extension_coordinates = std::move(raw.coordinates);
    e.presentation_extension = assemble(raw.generators, raw.extension);
    e.presentation_orbifold = assemble(raw.generators, raw.orbifold);
    e.affine_generators = std::move(raw.generators);
    e.signature = std::move(raw.signature);
    e.abelianization = std::move(raw.abelianization);
    e.notes = std::move(raw.notes);
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    const Rational h{1, 2};
    const Mat2 I = Mat2::identity();
    const Mat2 A = quarter_turn();
    const Mat2 B = sixth_turn();
    const Mat2 B2 = third_turn();
    const Mat2 R = diagonal_mirror();
    const Mat2 D = axis_mirror();
    const Mat2 N = hex_mirror();  // B * R, the mirror fixing (0, 1)
    const Mat2 J = half_turn();

    const AffineElement x = el(I, 1, 0);
    const AffineElement y = el(I, 0, 1);

    std::vector<RawEntry> raw;

    // p1: the torus group, plain Z^2.
    raw.push_back({
        WallpaperClass::P1,
        PointGroupClass::Trivial,
        {},
        {{"x", x}, {"y", y}},
        {{"x", "y"}, {"x*y*x^-1*y^-1"}},
        {{"x", "y"}, {"x*y*x^-1*y^-1"}},
        {true, {}, false, {}, "torus"},
        {2, {}},
        {"free abelian of rank 2; the group is its own centre"},
    });

    // p2: four half-turn classes.
    raw.push_back({
        WallpaperClass::P2,
        PointGroupClass::C2Rotation,
        {},
        {{"x", x}, {"y", y},
         {"j", el(J, 0, 0)}, {"u", el(J, -1, 0)}, {"v", el(J, 0, -1)}},
        {{"x", "y", "j"},
         {"x*y*x^-1*y^-1", "j*x*j*x", "j*y*j*y", "j^2"}},
        {{"j", "u", "v"}, {"j^2", "u^2", "v^2", "(j*u*v)^2"}},
        {true, {2, 2, 2, 2}, false, {}, "sphere"},
        {0, {2, 2, 2}},
        {"pi = D_inf *_Z D_inf, amalgamated over the index-2 translation "
         "subgroup of each factor",
         "also Z semidirect D_inf; split extension of the holonomy"},
    });

    // pm: two parallel mirror families.
    raw.push_back({
        WallpaperClass::Pm,
        PointGroupClass::C2Glide,
        {0},
        {{"x", x}, {"y", y}, {"d", el(D, 0, 0)}, {"u", el(D, 0, -1)}},
        {{"x", "y", "d"},
         {"x*y*x^-1*y^-1", "d*x*d^-1*x^-1", "d*y*d*y", "d^2"}},
        {{"d", "u", "x"},
         {"d*x*d^-1*x^-1", "u*x*u^-1*x^-1", "d^2", "u^2"}},
        {false, {}, true, {}, "annulus"},
        {1, {2, 2}},
        {"pi = Z x D_inf = (Z + Z/2) *_Z (Z + Z/2); split extension",
         "centre <x> = Z",
         "index-2 subgroups <x y, d> and <d x, y> realize Mb and Kb"},
    });

    // pg: two glide families, no mirrors.
    raw.push_back({
        WallpaperClass::Pg,
        PointGroupClass::C2Glide,
        {1},
        {{"x", x}, {"y", y}, {"d", el(D, h, 0)}, {"u", el(D, h, -1)}},
        {{"x", "y", "d"}, {"x*y*x^-1*y^-1", "d^2*x^-1", "d*y*d^-1*y"}},
        {{"d", "u"}, {"d^2*u^-2"}},
        {false, {}, false, {}, "Klein bottle"},
        {1, {2}},
        {"pi = Z semidirect_{-1} Z = Z *_Z Z; non-split extension",
         "centre <x> = Z; pi / <x> = D_inf, and that quotient extension does "
         "not split either"},
    });

    // cm: alternating mirrors and glides.
    raw.push_back({
        WallpaperClass::Cm,
        PointGroupClass::C2Mirror,
        {},
        {{"x", x}, {"y", y}, {"r", el(R, 0, 0)}, {"z", el(R, 1, 0)}},
        {{"x", "y", "r"}, {"x*y*x^-1*y^-1", "r*x*r*y^-1", "r^2"}},
        {{"r", "z"}, {"r*z^2*r^-1*z^-2", "r^2"}},
        {false, {}, true, {}, "Möbius band"},
        {1, {2}},
        {"pi = Z *_Z (Z + Z/2) = D_inf semidirect Z; split extension",
         "centre <x y> = Z, spanned by e1 + e2; pi / centre = D_inf without "
         "splitting",
         "<x r, r x> realizes Kb"},
    });

    // pmm: the rectangular mirror grid.
    raw.push_back({
        WallpaperClass::Pmm,
        PointGroupClass::D2Axes,
        {0, 0},
        {{"x", x}, {"y", y},
         {"d", el(D, 0, 0)}, {"j", el(J, 0, 0)},
         {"t", el(D, 0, -1)}, {"e", el(-D, 0, 0)}, {"s", el(-D, -1, 0)}},
        {{"x", "y", "d", "j"},
         {"x*y*x^-1*y^-1", "d*x*d^-1*x^-1", "d*y*d*y",
          "j*x*j*x", "j*y*j*y", "d^2", "j^2", "(d*j)^2"}},
        {{"d", "t", "e", "s"},
         {"d^2", "t^2", "e^2", "s^2",
          "(d*e)^2", "(d*s)^2", "(t*e)^2", "(t*s)^2"}},
        {false, {}, true, {2, 2, 2, 2}, "disc"},
        {0, {2, 2, 2, 2}},
        {"pi = D_inf x D_inf = (D_inf x Z/2) *_{D_inf} (D_inf x Z/2); "
         "split, coordinates (0, 0)",
         "Coxeter mirrors d, t = d y, e = j d, s = j d x; the half-turn j "
         "cannot replace e, since (t j)^2 is the translation (0, -2)"},
    });

    // pmg: mirrors one way, glides the other.
    raw.push_back({
        WallpaperClass::Pmg,
        PointGroupClass::D2Axes,
        {1, 0},
        {{"x", x}, {"y", y},
         {"d", el(D, 0, -h)}, {"j", el(J, 0, 0)}, {"v", el(J, -1, 0)}},
        {{"x", "y", "d", "j"},
         {"x*y*x^-1*y^-1", "j*x*j*x", "(j*d)^2*y^-1",
          "d*x*d^-1*x^-1", "d^2", "j^2"}},
        {{"d", "j", "v"},
         {"d*j*v*d^-1*v^-1*j^-1", "d^2", "j^2", "v^2"}},
        {false, {2, 2}, true, {}, "disc"},
        {0, {2, 2, 2}},
        {"pi = (Z + Z/2) *_Z D_inf = D_inf *_{D_inf} D_inf; coordinates "
         "(1, 0), and the (0, 1) twist is isomorphic",
         "also Z semidirect D_inf and D_inf semidirect D_inf",
         "index-2 subgroups over <D> and <-D> realize A and Kb"},
    });

    // pgg: perpendicular glides only.
    raw.push_back({
        WallpaperClass::Pgg,
        PointGroupClass::D2Axes,
        {1, 1},
        {{"x", x}, {"y", y}, {"d", el(D, h, 0)}, {"j", el(J, h, h)}},
        {{"x", "y", "d", "j"},
         {"x*y*x^-1*y^-1", "j*x*j*x", "j*y*j*y", "d*x*d^-1*x^-1",
          "d*y*d^-1*y", "d^2*x^-1", "(j*d)^2*y^-1", "j^2"}},
        {{"d", "j"}, {"(j*d^2)^2", "j^2"}},
        {false, {2, 2}, false, {}, "projective plane"},
        {0, {2, 4}},
        {"pi = Z *_Z D_inf; coordinates (1, 1)",
         "<x> and <y> are the maximal infinite cyclic normal subgroups; "
         "pi / <d^2> and pi / <(j d)^2> are D_inf without splitting",
         "the index-2 subgroups over <D> and <-D> both realize Kb"},
    });

    // cmm: the centred mirror grid.
    raw.push_back({
        WallpaperClass::Cmm,
        PointGroupClass::D2Mixed,
        {},
        {{"x", x}, {"y", y},
         {"j", el(J, 0, 0)}, {"r", el(R, 0, 0)},
         {"u", el(J, -1, 0)}, {"z", el(-R, 0, 0)}},
        {{"x", "y", "j", "r"},
         {"x*y*x^-1*y^-1", "j*x*j*x", "j*y*j*y", "j^2",
          "r*x*r*y^-1", "r^2", "(j*r)^2"}},
        {{"r", "u", "z"},
         {"r^2", "u^2", "z^2", "(r*z)^2", "(z*u*r*u)^2"}},
        {false, {2}, true, {2, 2}, "disc"},
        {0, {2, 2, 2}},
        {"pi = D_inf semidirect D_inf = (D_inf x Z/2) *_{D_inf} D_inf; "
         "split extension"},
    });

    // p4: quarter turns on the square lattice.
    raw.push_back({
        WallpaperClass::P4,
        PointGroupClass::C4,
        {},
        {{"x", x}, {"y", y}, {"a", el(A, 0, 0)}, {"j", el(J, -1, 0)}},
        {{"x", "y", "a"},
         {"x*y*x^-1*y^-1", "a*x*a^-1*y", "a*y*a^-1*x^-1", "a^4"}},
        {{"a", "j"}, {"a^4", "j^2", "(a*j)^4"}},
        {true, {2, 4, 4}, false, {}, "sphere"},
        {0, {2, 4}},
        {"split extension of Z/4; trivial centre"},
    });

    // p4m: the square mirror grid.
    raw.push_back({
        WallpaperClass::P4m,
        PointGroupClass::D4,
        {0},
        {{"x", x}, {"y", y},
         {"a", el(A, 0, 0)}, {"r", el(R, 0, 0)},
         {"w", el(D, 0, 0)}, {"z", el(-D, -1, 0)}},
        {{"x", "y", "a", "r"},
         {"x*y*x^-1*y^-1", "a*x*a^-1*y", "a*y*a^-1*x^-1", "a^4",
          "r*x*r*y^-1", "r^2", "(a*r)^2"}},
        {{"r", "w", "z"},
         {"r^2", "w^2", "z^2", "(r*z)^4", "(z*w)^2", "(w*r)^4"}},
        {false, {}, true, {2, 4, 4}, "disc"},
        {0, {2, 2, 2}},
        {"split extension; Coxeter group of the (2, 4, 4) triangle",
         "mirrors r, w pass through the origin; z runs along x = -1/2"},
    });

    // p4g: quarter turns with diagonal mirrors and axis glides.
    raw.push_back({
        WallpaperClass::P4g,
        PointGroupClass::D4,
        {1},
        {{"x", x}, {"y", y}, {"a", el(A, h, 0)}, {"r", el(R, 0, 0)}},
        {{"x", "y", "a", "r"},
         {"x*y*x^-1*y^-1", "a*x*a^-1*y", "a*y*a^-1*x^-1",
          "r*x*r*y^-1", "a^4", "r^2", "(a*r)^2*x^-1"}},
        {{"a", "r"}, {"a^4", "r^2", "(r*a*r*a^-1)^2"}},
        {false, {4}, true, {2}, "disc"},
        {0, {2, 4}},
        {"non-split extension (coordinate 1); the half shift rides on the "
         "quarter turn: a = (A, e1/2), r = (R, 0)",
         "a datum with a = (A, 0) and r = (R, e1/2) is inconsistent: that r "
         "squares to the glide (I, (e1+e2)/2); r = (R, (e1-e2)/2) would "
         "work instead",
         "in this model (a r)^2 = x",
         "the index-2 subgroup over <-I, D> realizes P(2,2)"},
    });

    // p3: third turns on the hexagonal lattice.
    raw.push_back({
        WallpaperClass::P3,
        PointGroupClass::C3,
        {},
        {{"x", x}, {"y", y}, {"c", el(B2, 0, 0)}, {"u", el(B2, -1, 1)}},
        {{"x", "y", "c"},
         {"x*y*x^-1*y^-1", "c*x*c^-1*y^-1*x", "c*y*c^-1*x", "c^3"}},
        {{"c", "u"}, {"c^3", "u^3", "(c*u)^3"}},
        {true, {3, 3, 3}, false, {}, "sphere"},
        {0, {3, 3}},
        {"split extension of Z/3",
         "three cone classes: the lattice points and both families of "
         "third-points; abelianization Z/3 + Z/3"},
    });

    // p3m1: third turns with mirrors through every centre.
    raw.push_back({
        WallpaperClass::P3m1,
        PointGroupClass::D3Long,
        {},
        {{"x", x}, {"y", y},
         {"c", el(B2, 0, 0)}, {"r", el(R, 0, 0)},
         {"s", el(R * B2, 0, 0)}, {"t", el(B2 * R, -1, 0)}},
        {{"x", "y", "c", "r"},
         {"x*y*x^-1*y^-1", "c*x*c^-1*y^-1*x", "c*y*c^-1*x", "c^3",
          "r*x*r*y^-1", "r^2", "(r*c)^2"}},
        {{"r", "s", "t"},
         {"r^2", "s^2", "t^2", "(r*s)^3", "(s*t)^3", "(t*r)^3"}},
        {false, {}, true, {3, 3, 3}, "disc"},
        {0, {2}},
        {"split extension; Coxeter group of the (3, 3, 3) triangle",
         "every 3-centre lies on a mirror; reflections act by -1 on the "
         "3-torsion coinvariants"},
    });

    // p31m: third turns with mirrors through the lattice centres only.
    raw.push_back({
        WallpaperClass::P31m,
        PointGroupClass::D3Short,
        {},
        {{"x", x}, {"y", y},
         {"c", el(B2, 0, 0)}, {"n", el(N, 0, 0)}, {"u", el(B2, 1, 0)}},
        {{"x", "y", "c", "n"},
         {"x*y*x^-1*y^-1", "c*x*c^-1*y^-1*x", "c*y*c^-1*x", "c^3",
          "n*x*n*y^-1*x", "n*y*n^-1*y^-1", "n^2", "(n*c)^2"}},
        {{"u", "n"}, {"u^3", "n^2", "(u^-1*n*u*n)^3"}},
        {false, {3}, true, {3}, "disc"},
        {0, {6}},
        {"split extension; the index-3 rotation subgroup is S(3,3,3), its "
         "two off-lattice cone classes merged by the mirror",
         "reflections act by +1 on the 3-torsion coinvariants",
         "the orbifold form bases its rotation at the cone point "
         "(1/3, 1/3): u = (B^2, e1); the same shape based at the origin "
         "corner generates a proper index-9 self-similar subgroup over the "
         "sublattice 3 Z^2"},
    });

    // p6: sixth turns on the hexagonal lattice.
    raw.push_back({
        WallpaperClass::P6,
        PointGroupClass::C6,
        {},
        {{"x", x}, {"y", y}, {"b", el(B, 0, 0)}, {"v", el(B2, -1, 1)}},
        {{"x", "y", "b"},
         {"x*y*x^-1*y^-1", "b*x*b^-1*y^-1", "b*y*b^-1*y^-1*x", "b^6"}},
        {{"b", "v"}, {"b^6", "v^3", "(b*v)^2"}},
        {true, {2, 3, 6}, false, {}, "sphere"},
        {0, {6}},
        {"split extension of Z/6; trivial centre"},
    });

    // p6m: the full hexagonal mirror group.
    raw.push_back({
        WallpaperClass::P6m,
        PointGroupClass::D6,
        {},
        {{"x", x}, {"y", y},
         {"b", el(B, 0, 0)}, {"r", el(R, 0, 0)},
         {"m", el(N, 0, 0)}, {"n", el(B2 * R, 0, 0)},
         {"p", el(R * B2, 0, -1)}},
        {{"x", "y", "b", "r"},
         {"x*y*x^-1*y^-1", "b*x*b^-1*y^-1", "b*y*b^-1*y^-1*x", "b^6",
          "r*x*r*y^-1", "r^2", "(r*b)^2"}},
        {{"m", "n", "p"},
         {"m^2", "n^2", "p^2", "(m*n)^6", "(n*p)^3", "(p*m)^2"}},
        {false, {}, true, {2, 3, 6}, "disc"},
        {0, {2, 2}},
        {"split extension; Coxeter group of the (2, 3, 6) triangle",
         "mirrors m, n pass through the origin, p runs along x + 2 y = -1; "
         "triangle corners (0, 0), (1/3, -2/3), (0, -1/2)",
         "any triple whose third mirror runs in the (1, 0)-axis direction "
         "generates only an index-3 self-similar subgroup: the (0, 1)-axis "
         "mirror carries no 3-centre"},
    });

    std::vector<CatalogEntry> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.push_back(cook(std::move(r)));
    return out;
}

std::string squashed_lower(const std::string& s) {
    std::string out;
    for (char ch : s) {
        auto u = static_cast<unsigned char>(ch);
        if (std::isspace(u)) continue;
        out += static_cast<char>(std::tolower(u));
    }
    return out;
}

}  // namespace

std::string to_string(WallpaperClass c) {
    return kSymbols.at(static_cast<std::size_t>(c));
}

std::string orbifold_name(WallpaperClass c) { return entry(c).signature.name(); }

std::optional<WallpaperClass> parse_class_id(const std::string& text) {
    const std::string key = squashed_lower(text);
    if (key.empty()) return std::nullopt;
    for (WallpaperClass c : kAllWallpaperClasses) {
        if (key == to_string(c)) return c;
        if (key == squashed_lower(orbifold_name(c))) return c;
    }
    return std::nullopt;
}

Rational OrbifoldSignature::orbifold_euler_characteristic() const {
    Rational chi;
    bool known = false;
    for (const auto& [surface, value] : kSurfaces) {
        if (underlying_surface == surface) {
            chi = value;
            known = true;
        }
    }
    if (!known)
        throw std::logic_error("unknown base surface: " + underlying_surface);
    for (const auto& m : cone_orders) chi -= Rational(1) - Rational(1, m);
    for (const auto& n : corner_orders) chi -= (Rational(1) - Rational(1, n)) / 2;
    return chi;
}

std::string OrbifoldSignature::name() const {
    std::string base;
    for (const auto& [surface, letter] : kSurfaceLetters)
        if (underlying_surface == surface) base = letter;
    if (base.empty())
        throw std::logic_error("unknown base surface: " + underlying_surface);

    // Cone and corner orders interleave in ascending order; a cone precedes
    // a corner of the same order.
    std::vector<std::pair<Integer, bool>> marks;
    for (const auto& m : cone_orders) marks.emplace_back(m, false);
    for (const auto& n : corner_orders) marks.emplace_back(n, true);
    std::sort(marks.begin(), marks.end());

    if (marks.empty()) return base;
    std::string out = base + "(";
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (i > 0) out += ",";
        if (marks[i].second) out += "*";
        out += to_string(marks[i].first);
    }
    return out + ")";
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& entry(WallpaperClass c) {
    return catalog().at(static_cast<std::size_t>(c));
}

const CrystalGroup& standard_group(WallpaperClass c) {
    static const std::vector<CrystalGroup> groups = [] {
        std::vector<CrystalGroup> out;
        out.reserve(catalog().size());
        for (const auto& e : catalog()) {
            std::vector<AffineElement> generators;
            generators.reserve(e.affine_generators.size());
            for (const auto& [name, element] : e.affine_generators)
                generators.push_back(element);
            out.push_back(group_from_generators(generators));
        }
        return out;
    }();
    return groups.at(static_cast<std::size_t>(c));
}

}  // namespace wg
