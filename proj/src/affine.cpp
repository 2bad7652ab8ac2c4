#include "wg/affine.hpp"

#include "wg/linalg.hpp"

#include <algorithm>
#include <set>

namespace wg {

Mat2 Mat2::inverse() const {
    Integer s = det();
    if (s != 1 && s != -1) throw std::invalid_argument("Mat2::inverse: matrix is not unimodular");
    return {d * s, -b * s, -c * s, a * s};
}

int Mat2::order() const {
    Mat2 p = *this;
    for (int k = 1; k <= 12; ++k) {
        if (p.is_identity()) return k;
        p = p * *this;
    }
    return 0;
}

std::string to_string(const Mat2& m) {
    return "[[" + m.a.str() + ", " + m.b.str() + "], [" + m.c.str() + ", " + m.d.str() + "]]";
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
    return {a.linear * b.linear, a.translation + a.linear * b.translation};
}

AffineElement inverse(const AffineElement& a) {
    Mat2 inv = a.linear.inverse();
    return {inv, -(inv * a.translation)};
}

Vec2 apply(const AffineElement& a, const Vec2& x) { return a.linear * x + a.translation; }

std::string to_string(const AffineElement& a) {
    return to_string(a.linear) + " + " + to_string(a.translation);
}

Lattice Lattice::standard() {
    return from_vectors({Vec2{1, 0}, Vec2{0, 1}});
}

Lattice Lattice::from_vectors(const std::vector<Vec2>& generators) {
    std::vector<Vec2> nonzero;
    for (const auto& v : generators)
        if (!v.is_zero()) nonzero.push_back(v);
    Lattice out;
    if (nonzero.empty()) return out;

    Integer scale = 1;
    for (const auto& v : nonzero) scale = boost::multiprecision::lcm(scale, lcm_denominators(v));
    IntMatrix rows;
    for (const auto& v : nonzero)
        rows.push_back({num(Rational(scale) * v.x), num(Rational(scale) * v.y)});
    auto h = hermite_normal_form(rows);
    for (std::size_t i = 0; i < h.rank; ++i)
        out.basis_.push_back({Rational(h.h[i][0]) / scale, Rational(h.h[i][1]) / scale});
    return out;
}

bool Lattice::contains(const Vec2& v) const {
    switch (rank()) {
        case 0:
            return v.is_zero();
        case 1: {
            const Vec2& b = basis_[0];
            if (b.x * v.y - b.y * v.x != 0) return false;
            int pivot = b.x != 0 ? 0 : 1;
            return is_integral(v[pivot] / b[pivot]);
        }
        default: {
            auto c = coordinates_of(v);
            return c && c->is_integral();
        }
    }
}

bool Lattice::contains(const Lattice& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec2& v) { return contains(v); });
}

Lattice Lattice::joined_with(const Vec2& v) const {
    std::vector<Vec2> gens = basis_;
    gens.push_back(v);
    return from_vectors(gens);
}

Lattice Lattice::joined_with(const Lattice& other) const {
    std::vector<Vec2> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return from_vectors(gens);
}

Vec2 Lattice::reduce(const Vec2& v) const {
    switch (rank()) {
        case 0:
            return v;
        case 1: {
            const Vec2& b = basis_[0];
            int pivot = b.x != 0 ? 0 : 1;
            Rational c(rational_floor(v[pivot] / b[pivot]));
            return v - c * b;
        }
        default: {
            Vec2 c = *coordinates_of(v);
            return v - Rational(rational_floor(c.x)) * basis_[0] -
                   Rational(rational_floor(c.y)) * basis_[1];
        }
    }
}

std::optional<Vec2> Lattice::coordinates_of(const Vec2& v) const {
    if (rank() != 2) return std::nullopt;
    const Vec2 &b1 = basis_[0], &b2 = basis_[1];
    Rational det = b1.x * b2.y - b2.x * b1.y;
    return Vec2{(v.x * b2.y - b2.x * v.y) / det, (b1.x * v.y - v.x * b1.y) / det};
}

Integer Lattice::index_in(const Lattice& super) const {
    if (rank() != 2 || super.rank() != 2 || !super.contains(*this))
        throw std::invalid_argument("index_in: not a finite-index sublattice");
    const Vec2 &a1 = basis_[0], &a2 = basis_[1];
    const Vec2 &b1 = super.basis_[0], &b2 = super.basis_[1];
    Rational q = (a1.x * a2.y - a2.x * a1.y) / (b1.x * b2.y - b2.x * b1.y);
    Rational idx = q < 0 ? -q : q;
    return num(idx);
}

std::string to_string(const Lattice& l) {
    std::string out = "<";
    for (std::size_t i = 0; i < l.basis().size(); ++i) {
        if (i) out += ", ";
        out += to_string(l.basis()[i]);
    }
    return out + ">";
}

std::vector<Mat2> CrystalGroup::holonomy() const {
    std::vector<Mat2> hs;
    for (const auto& [m, t] : vector_system) hs.push_back(m);
    return hs;
}

Vec2 CrystalGroup::translation_part(const Mat2& m) const {
    auto it = vector_system.find(m);
    if (it == vector_system.end())
        throw std::invalid_argument("translation_part: matrix not in holonomy");
    return it->second;
}

bool CrystalGroup::contains(const AffineElement& e) const {
    auto it = vector_system.find(e.linear);
    return it != vector_system.end() && lattice.contains(e.translation - it->second);
}

CrystalGroup group_from_generators(const std::vector<AffineElement>& generators) {
    if (generators.empty()) throw LatticeDeficient();
    std::vector<AffineElement> step = generators;
    for (const auto& g : generators) step.push_back(inverse(g));

    Lattice lambda;
    for (int outer = 0; outer < 256; ++outer) {
        std::map<Mat2, Vec2> reps;
        std::vector<AffineElement> queue;
        std::vector<Vec2> deltas;
        reps[Mat2::identity()] = Vec2{};
        queue.push_back({Mat2::identity(), Vec2{}});
        std::size_t products = 0;

        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const AffineElement cur = queue[qi];
            for (const auto& g : step) {
                if (++products > 10000) throw HolonomyUnbounded();
                AffineElement prod = compose(cur, g);
                Vec2 rep = lambda.reduce(prod.translation);
                auto it = reps.find(prod.linear);
                if (it == reps.end()) {
                    if (reps.size() >= 12) throw HolonomyUnbounded();
                    reps.emplace(prod.linear, rep);
                    queue.push_back({prod.linear, rep});
                } else if (it->second != rep) {
                    deltas.push_back(rep - it->second);
                }
            }
        }

        if (!deltas.empty()) {
            for (const auto& d : deltas) lambda = lambda.joined_with(d);
            continue;
        }
        std::vector<Vec2> growth;
        for (const auto& [m, t] : reps)
            for (const auto& b : lambda.basis())
                if (Vec2 image = m * b; !lambda.contains(image)) growth.push_back(image);
        if (!growth.empty()) {
            for (const auto& v : growth) lambda = lambda.joined_with(v);
            continue;
        }
        if (lambda.rank() < 2) throw LatticeDeficient();
        return CrystalGroup{lambda, reps};
    }
    throw HolonomyUnbounded();
}

CrystalGroup make_crystal_group(const Lattice& lattice, const std::map<Mat2, Vec2>& system) {
    if (lattice.rank() != 2) throw std::invalid_argument("crystal group: lattice must have rank 2");
    CrystalGroup g{lattice, {}};
    for (const auto& [m, t] : system) {
        Integer det = m.det();
        if (det != 1 && det != -1) throw std::invalid_argument("crystal group: matrix not unimodular");
        g.vector_system[m] = lattice.reduce(t);
    }
    auto id = g.vector_system.find(Mat2::identity());
    if (id == g.vector_system.end() || !id->second.is_zero())
        throw std::invalid_argument("crystal group: identity element missing or displaced");
    for (const auto& [m, t] : g.vector_system) {
        for (const auto& b : lattice.basis())
            if (!lattice.contains(m * b))
                throw std::invalid_argument("crystal group: lattice not holonomy invariant");
        for (const auto& [n, u] : g.vector_system) {
            AffineElement prod = compose({m, t}, {n, u});
            if (!g.contains(prod))
                throw std::invalid_argument("crystal group: vector system not closed");
        }
    }
    return g;
}

CrystalGroup conjugated(const CrystalGroup& g, const Mat2& p, const Vec2& shift) {
    Integer det = p.det();
    if (det != 1 && det != -1) throw std::invalid_argument("conjugated: matrix must be unimodular");
    Mat2 pinv = p.inverse();
    std::vector<Vec2> gens;
    for (const auto& b : g.lattice.basis()) gens.push_back(p * b);
    Lattice lat = Lattice::from_vectors(gens);
    std::map<Mat2, Vec2> system;
    for (const auto& [m, t] : g.vector_system) {
        Mat2 mm = p * m * pinv;
        system[mm] = p * t + shift - mm * shift;
    }
    return make_crystal_group(lat, system);
}

RebasedGroup rebase(const CrystalGroup& g) {
    if (g.lattice.rank() != 2) throw std::invalid_argument("rebase: lattice must have rank 2");
    const Vec2 b1 = g.lattice.basis()[0], b2 = g.lattice.basis()[1];
    std::map<Mat2, Vec2> system;
    for (const auto& [m, t] : g.vector_system) {
        Vec2 c1 = *g.lattice.coordinates_of(m * b1);
        Vec2 c2 = *g.lattice.coordinates_of(m * b2);
        Mat2 mm{num(c1.x), num(c2.x), num(c1.y), num(c2.y)};
        system[mm] = *g.lattice.coordinates_of(t);
    }
    return {make_crystal_group(Lattice::standard(), system), {b1, b2}};
}

namespace {

// Integer matrix of v -> coordinates(m * (coordinates^-1 v)) in the lattice
// basis; defined because the lattice is holonomy invariant.
Mat2 in_lattice_coordinates(const Lattice& lattice, const Mat2& m) {
    Vec2 c1 = *lattice.coordinates_of(m * lattice.basis()[0]);
    Vec2 c2 = *lattice.coordinates_of(m * lattice.basis()[1]);
    return {num(c1.x), num(c2.x), num(c1.y), num(c2.y)};
}

std::optional<Vec2> solve2x2(const Mat2& c, const Vec2& rhs) {
    Integer det = c.det();
    if (det == 0) return std::nullopt;
    Rational d(det);
    return Vec2{(Rational(c.d) * rhs.x - Rational(c.b) * rhs.y) / d,
                (Rational(c.a) * rhs.y - Rational(c.c) * rhs.x) / d};
}

}  // namespace

Lattice centre_lattice(const CrystalGroup& g) {
    IntMatrix stacked;
    for (const auto& [m, t] : g.vector_system) {
        Mat2 c = in_lattice_coordinates(g.lattice, m);
        stacked.push_back({c.a - 1, c.b});
        stacked.push_back({c.c, c.d - 1});
    }
    std::vector<Vec2> fixed;
    for (const auto& k : kernel_basis(stacked)) {
        Vec2 v = Rational(k[0]) * g.lattice.basis()[0] + Rational(k[1]) * g.lattice.basis()[1];
        fixed.push_back(v);
    }
    return Lattice::from_vectors(fixed);
}

bool element_family_has_fixed_point(const CrystalGroup& g, const Mat2& m) {
    Mat2 cm = in_lattice_coordinates(g.lattice, m);
    Mat2 c{1 - cm.a, -cm.b, -cm.c, 1 - cm.d};  // I - m, lattice coordinates
    Vec2 tau = *g.lattice.coordinates_of(g.translation_part(m));
    if (c.det() != 0) return true;
    if (c.a == 0 && c.b == 0 && c.c == 0 && c.d == 0) return tau.is_integral();
    // Rank one: a fixed point exists iff some lattice shift of tau lies in
    // the column span, i.e. the primitive normal pairs integrally with tau.
    Integer wx = c.a, wy = c.c;
    if (wx == 0 && wy == 0) wx = c.b, wy = c.d;
    Integer gcd = boost::multiprecision::gcd(wx, wy);
    Rational pairing = (Rational(-wy) * tau.x + Rational(wx) * tau.y) / Rational(gcd);
    return is_integral(pairing);
}

bool has_mirror(const CrystalGroup& g) {
    for (const auto& [m, t] : g.vector_system)
        if (m.det() == -1 && element_family_has_fixed_point(g, m)) return true;
    return false;
}

std::vector<Vec2> rotation_centres_mod_lattice(const CrystalGroup& g, const Mat2& m) {
    if (m.det() != 1 || m.is_identity())
        throw std::invalid_argument("rotation_centres_mod_lattice: not a rotation");
    Mat2 cm = in_lattice_coordinates(g.lattice, m);
    Mat2 c{1 - cm.a, -cm.b, -cm.c, 1 - cm.d};
    Vec2 tau = *g.lattice.coordinates_of(g.translation_part(m));

    auto snf = smith_normal_form(IntMatrix{{c.a, c.b}, {c.c, c.d}});
    Mat2 u{snf.u[0][0], snf.u[0][1], snf.u[1][0], snf.u[1][1]};
    Mat2 uinv = u.inverse();
    std::set<Vec2> centres;
    for (Integer r1 = 0; r1 < snf.s[0][0]; ++r1)
        for (Integer r2 = 0; r2 < snf.s[1][1]; ++r2) {
            Vec2 k = uinv * Vec2{Rational(r1), Rational(r2)};
            Vec2 alpha = *solve2x2(c, tau + k);
            Vec2 p = alpha.x * g.lattice.basis()[0] + alpha.y * g.lattice.basis()[1];
            centres.insert(g.lattice.reduce(p));
        }
    return {centres.begin(), centres.end()};
}

std::vector<Mat2> stabilizer_at(const CrystalGroup& g, const Vec2& p) {
    std::vector<Mat2> stab;
    for (const auto& [m, t] : g.vector_system)
        if (g.lattice.contains(p - m * p - t)) stab.push_back(m);
    return stab;
}

std::vector<int> LocalGroupSpectrum::cone_orders() const {
    std::vector<int> orders;
    for (const auto& c : centres)
        if (!c.dihedral) orders.push_back(c.rotation_order);
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<int> LocalGroupSpectrum::corner_orders() const {
    std::vector<int> orders;
    for (const auto& c : centres)
        if (c.dihedral) orders.push_back(c.rotation_order);
    std::sort(orders.begin(), orders.end());
    return orders;
}

LocalGroupSpectrum finite_subgroup_spectrum(const CrystalGroup& g) {
    LocalGroupSpectrum spectrum;
    spectrum.reflection = has_mirror(g);

    std::set<Vec2> centres;
    for (const auto& [m, t] : g.vector_system) {
        if (m.det() != 1 || m.is_identity()) continue;
        for (const auto& p : rotation_centres_mod_lattice(g, m)) centres.insert(p);
    }

    std::vector<Vec2> pool(centres.begin(), centres.end());
    std::vector<bool> used(pool.size(), false);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (used[i]) continue;
        std::vector<Vec2> orbit{pool[i]};
        used[i] = true;
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (used[j]) continue;
            for (const auto& [m, t] : g.vector_system)
                if (g.lattice.reduce(m * pool[i] + t) == pool[j]) {
                    orbit.push_back(pool[j]);
                    used[j] = true;
                    break;
                }
        }
        RotationCentreOrbit rec;
        rec.point = *std::min_element(orbit.begin(), orbit.end());
        rec.centres_mod_lattice = orbit.size();
        for (const auto& m : stabilizer_at(g, rec.point)) {
            if (m.det() == 1)
                rec.rotation_order = std::max(rec.rotation_order, m.order());
            else
                rec.dihedral = true;
        }
        spectrum.centres.push_back(rec);
    }
    std::sort(spectrum.centres.begin(), spectrum.centres.end(),
              [](const RotationCentreOrbit& a, const RotationCentreOrbit& b) {
                  if (a.rotation_order != b.rotation_order) return a.rotation_order < b.rotation_order;
                  if (a.dihedral != b.dihedral) return a.dihedral < b.dihedral;
                  return a.point < b.point;
              });
    return spectrum;
}

}  // namespace wg
