#include "wg/fibration.hpp"

#include "wg/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace wg {
namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

[[noreturn]] void bug(const std::string& what) {
    throw std::logic_error("fibration: " + what);
}

// gcd on nonnegative rationals, zero acting as the neutral element.
Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    const Integer d = lcm(den(a), den(b));
    const Integer na = abs(num(a)) * (d / den(a));
    const Integer nb = abs(num(b)) * (d / den(b));
    return Rational(gcd(na, nb), d);
}

// v reduced into [0, m) for a positive modulus m.
Rational frac_mod(const Rational& v, const Rational& m) {
    const Rational q = v / m;
    return v - Rational(rational_floor(q)) * m;
}

// Coefficients (s, t) with s * a + t * b = gcd(a, b).
std::pair<Integer, Integer> bezout(Integer a, Integer b) {
    Integer s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b != 0) {
        const Integer q = floor_div(a, b);
        Integer r = a - q * b;
        a = b;
        b = r;
        Integer s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) return {-s0, -t0};
    return {s0, t0};
}

InvariantDirection canonical_direction(Integer x, Integer y) {
    if (x == 0 && y == 0) bug("zero direction");
    const Integer g = gcd(abs(x), abs(y));
    x /= g;
    y /= g;
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

// How one element family acts once the plane is split into the fibre
// direction and the transverse axis.
struct FamilyAction {
    Mat2 linear;
    Vec2 translation;
    int eps = 1;  // linear * w = eps * w
    int bar = 1;  // transverse coordinate scales by bar
};

enum class EndpointKind { Cone, Corner, ReflectorPoint };

EndpointKind classify_endpoint(const CrystalGroup& g, const Vec2& p) {
    bool rotation = false;
    bool reflection = false;
    for (const Mat2& m : stabilizer_at(g, p)) {
        if (m.is_identity()) continue;
        (m.det() == 1 ? rotation : reflection) = true;
    }
    if (rotation && reflection) return EndpointKind::Corner;
    if (rotation) return EndpointKind::Cone;
    if (reflection) return EndpointKind::ReflectorPoint;
    bug("endpoint fibre boundary without a stabilizer");
}

std::string interval_description(bool silvered, EndpointKind a, EndpointKind b) {
    if (silvered) {
        if (a != EndpointKind::Corner || b != EndpointKind::Corner)
            bug("interval inside the reflector must join corner points");
        return "boundary reflector interval joining two corner points";
    }
    if (a > b) std::swap(a, b);
    if (a == EndpointKind::Cone && b == EndpointKind::Cone)
        return "reflector interval joining two cone points";
    if (a == EndpointKind::Cone && b == EndpointKind::ReflectorPoint)
        return "reflector interval joining a cone point to a reflector curve";
    if (a == EndpointKind::Cone && b == EndpointKind::Corner)
        return "reflector interval joining a cone point to a corner point";
    if (a == EndpointKind::Corner && b == EndpointKind::Corner)
        return "reflector interval joining two corner points";
    if (a == EndpointKind::Corner && b == EndpointKind::ReflectorPoint)
        return "reflector interval joining a corner point to a reflector curve";
    return "reflector interval joining two reflector curves";
}

FibrationStructure build_structure(const CrystalGroup& g, const InvariantDirection& dir) {
    if (g.lattice != Lattice::standard()) bug("structure requires the standard lattice");

    const Vec2 w{Rational(dir.x), Rational(dir.y)};
    const auto phi = [&](const Vec2& v) {
        return Rational(dir.y) * v.x - Rational(dir.x) * v.y;
    };
    // Integer transverse section: phi(psi) = 1.
    const auto [bs, bt] = bezout(dir.y, -dir.x);
    const Vec2 psi{Rational(bs), Rational(bt)};
    if (phi(psi) != 1) bug("transverse section failed");

    std::vector<FamilyAction> families;
    for (const auto& [m, t] : g.vector_system) {
        FamilyAction f{m, t, 0, 0};
        const Vec2 mw = m * w;
        if (mw == w)
            f.eps = 1;
        else if (mw == -w)
            f.eps = -1;
        else
            bug("direction is not invariant under the holonomy");
        f.bar = static_cast<int>(m.det()) * f.eps;
        // The transverse coordinate must scale exactly by bar.
        for (const Vec2& v : {Vec2{1, 0}, Vec2{0, 1}})
            if (phi(m * v) != Rational(f.bar) * phi(v)) bug("transverse action mismatch");
        families.push_back(std::move(f));
    }

    FibrationStructure out;
    out.direction = dir;

    // Base translations: lattice shifts land in Z, direction-preserving
    // families add their transverse offsets.
    Rational c_base = 1;
    bool any_reverser = false;
    for (const FamilyAction& f : families) {
        if (f.bar == 1)
            c_base = rational_gcd(c_base, phi(f.translation));
        else
            any_reverser = true;
    }
    if (c_base <= 0) bug("degenerate base translations");
    out.base = any_reverser ? FibreType::Interval : FibreType::Circle;

    // General fibre: the kernel of the transverse action contains a line
    // reversal exactly when some family reverses the direction while
    // fixing transverse levels.
    bool fibre_reversal = false;
    for (const FamilyAction& f : families)
        if (f.bar == 1 && f.eps == -1 && is_integral(phi(f.translation))) fibre_reversal = true;
    out.general_fibre = fibre_reversal ? FibreType::Interval : FibreType::Circle;

    if (out.base == FibreType::Circle) return out;

    // The transverse reflections of an interval base sit over two endpoint
    // classes spaced half a base translation apart.
    const Rational half_step = c_base / 2;
    Rational u1(-1);
    for (const FamilyAction& f : families) {
        if (f.bar != -1) continue;
        const Rational pos = frac_mod(phi(f.translation) / 2, half_step);
        if (u1 < 0)
            u1 = pos;
        else if (pos != u1)
            bug("transverse reflections do not align on two endpoint classes");
    }

    // Group-level sanity: two endpoint reflections compose to a transverse
    // translation by the full base period, an infinite-order element.
    {
        std::optional<AffineElement> r1, r2;
        for (const FamilyAction& f : families) {
            if (f.bar != -1) continue;
            for (int which = 0; which < 2 && (!r1 || !r2); ++which) {
                const Rational u0 = u1 + which * half_step;
                const Rational kappa = 2 * u0 - phi(f.translation);
                if (!is_integral(kappa)) continue;
                auto& slot = which == 0 ? r1 : r2;
                if (!slot) slot = AffineElement{f.linear, f.translation + kappa * psi};
            }
        }
        if (!r1 || !r2) bug("an endpoint class has no reflection");
        const AffineElement prod = compose(*r1, *r2);
        if (abs(phi(prod.translation)) != c_base) bug("endpoint reflections do not span the base");
    }

    for (int which = 0; which < 2; ++which) {
        const Rational u0 = u1 + which * half_step;
        const Vec2 p0 = u0 * psi;

        // Collect how every element stabilizing the fibre line acts on it:
        // eps = +1 elements translate along the line (pointwise fixing it
        // when the offset is integral), eps = -1 elements reverse it.
        bool silvered = false;
        Rational c_fibre = 1;
        std::vector<Rational> reversal_positions;
        for (const FamilyAction& f : families) {
            const Rational target = f.bar == 1 ? Rational(0) : 2 * u0;
            const Rational kappa = target - phi(f.translation);
            if (!is_integral(kappa)) continue;
            const AffineElement e{f.linear, f.translation + kappa * psi};
            const Vec2 diff = apply(e, p0) - p0;
            const Rational delta = dir.x != 0 ? diff.x / Rational(dir.x) : diff.y / Rational(dir.y);
            if (diff != delta * w) bug("fibre line is not preserved");
            if (f.linear.is_identity()) continue;
            if (f.eps == 1) {
                if (f.bar != -1) bug("a nontrivial rotation fixes the direction");
                if (is_integral(delta))
                    silvered = true;
                else
                    c_fibre = rational_gcd(c_fibre, frac_part(delta));
            } else {
                reversal_positions.push_back(delta / 2);
            }
        }

        SingularFibre fibre;
        if (reversal_positions.empty()) {
            if (silvered && c_fibre == 1) {
                fibre = {"reflector curve", false};
            } else if (!silvered && c_fibre < 1) {
                fibre = {"centreline of a Möbius band", true};
            } else {
                bug("endpoint circle fibre is neither silvered nor folded");
            }
        } else {
            const Rational half_fibre = c_fibre / 2;
            const Rational s0 = frac_mod(reversal_positions.front(), half_fibre);
            for (const Rational& p : reversal_positions)
                if (frac_mod(p, half_fibre) != s0) bug("fibre reversals do not pair up");
            const EndpointKind a = classify_endpoint(g, p0 + s0 * w);
            const EndpointKind b = classify_endpoint(g, p0 + (s0 + half_fibre) * w);
            fibre.description = interval_description(silvered, a, b);
            fibre.folded = out.general_fibre == FibreType::Circle || c_fibre < 1;
        }
        out.singular_fibres.push_back(std::move(fibre));
    }
    return out;
}

}  // namespace

std::string to_string(const InvariantDirection& d) {
    return "(" + d.x.str() + ", " + d.y.str() + ")";
}

std::string to_string(FibreType t) {
    return t == FibreType::Circle ? "S1" : "I";
}

std::size_t FibrationStructure::exceptional_count() const {
    std::size_t n = 0;
    for (const SingularFibre& f : singular_fibres)
        if (f.folded) ++n;
    return n;
}

std::vector<std::vector<InvariantDirection>> invariant_directions(WallpaperClass id, int bound) {
    const CrystalGroup g = standard_group(id);
    const std::vector<Mat2> holonomy = g.holonomy();

    std::vector<Mat2> non_central;
    for (const Mat2& m : holonomy)
        if (!m.is_identity() && !(-m).is_identity()) non_central.push_back(m);
    if (non_central.empty()) return {{InvariantDirection{1, 0}}};

    // Candidate directions: integer eigenvectors of one non-central
    // matrix, filtered against all the others.
    std::set<InvariantDirection> candidates;
    {
        const Mat2& m = non_central.front();
        for (int lambda : {1, -1}) {
            const Mat2 k{m.a - lambda, m.b, m.c, m.d - lambda};
            if (k.det() != 0) continue;
            Integer vx = -k.b, vy = k.a;
            if (vx == 0 && vy == 0) {
                vx = -k.d;
                vy = k.c;
            }
            candidates.insert(canonical_direction(vx, vy));
        }
    }
    for (auto it = candidates.begin(); it != candidates.end();) {
        const Vec2 v{Rational(it->x), Rational(it->y)};
        const bool keep = std::all_of(non_central.begin(), non_central.end(), [&](const Mat2& m) {
            const Vec2 mv = m * v;
            return mv == v || mv == -v;
        });
        it = keep ? std::next(it) : candidates.erase(it);
    }
    if (candidates.empty()) return {};

    // Symmetries joining directions: unimodular matrices preserving both
    // the holonomy element set and the extension class.
    const std::vector<Integer> base_class = class_of_group(g);
    std::vector<Mat2> symmetries;
    for (Integer a = -bound; a <= bound; ++a)
        for (Integer b = -bound; b <= bound; ++b)
            for (Integer c = -bound; c <= bound; ++c)
                for (Integer d = -bound; d <= bound; ++d) {
                    const Mat2 u{a, b, c, d};
                    if (abs(u.det()) != 1) continue;
                    const Mat2 ui = u.inverse();
                    std::vector<Mat2> conj;
                    conj.reserve(holonomy.size());
                    for (const Mat2& m : holonomy) conj.push_back(u * m * ui);
                    std::sort(conj.begin(), conj.end());
                    if (conj != holonomy) continue;
                    if (class_of_group(conjugated(g, u, Vec2{})) != base_class) continue;
                    symmetries.push_back(u);
                }

    std::map<InvariantDirection, InvariantDirection> root;
    for (const InvariantDirection& d : candidates) root.emplace(d, d);
    const auto find = [&](InvariantDirection d) {
        while (!(root.at(d) == d)) d = root.at(d);
        return d;
    };
    for (const Mat2& u : symmetries)
        for (const InvariantDirection& d : candidates) {
            const Vec2 image = u * Vec2{Rational(d.x), Rational(d.y)};
            const InvariantDirection e = canonical_direction(num(image.x), num(image.y));
            if (candidates.count(e) == 0)
                throw std::logic_error("fibration: symmetry leaves the candidate set");
            const InvariantDirection ra = find(d), rb = find(e);
            if (!(ra == rb)) root[std::max(ra, rb)] = std::min(ra, rb);
        }

    std::map<InvariantDirection, std::vector<InvariantDirection>> grouped;
    for (const InvariantDirection& d : candidates) grouped[find(d)].push_back(d);
    std::vector<std::vector<InvariantDirection>> orbits;
    orbits.reserve(grouped.size());
    for (auto& [rep, members] : grouped) {
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

std::vector<FibrationStructure> fibration_structures(WallpaperClass id, int bound) {
    const CrystalGroup g = standard_group(id);
    std::vector<FibrationStructure> out;
    for (const auto& orbit : invariant_directions(id, bound))
        out.push_back(build_structure(g, orbit.front()));
    return out;
}

bool fibres_over_circle(WallpaperClass id) {
    return entry(id).abelianization.free_rank >= 1;
}

}  // namespace wg
