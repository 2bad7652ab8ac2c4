#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <string>

namespace wg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return den(q) == 1; }

// Floor division with sign handling; b must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer rational_floor(const Rational& q) { return floor_div(num(q), den(q)); }

// Fractional part in [0, 1).
inline Rational frac_part(const Rational& q) { return q - Rational(rational_floor(q)); }

struct Vec2 {
    Rational x{0};
    Rational y{0};

    Vec2() = default;
    Vec2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

    Rational& operator[](int i) { return i == 0 ? x : y; }
    const Rational& operator[](int i) const { return i == 0 ? x : y; }

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
    friend bool operator<(const Vec2& a, const Vec2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_integral() const { return wg::is_integral(x) && wg::is_integral(y); }
};

inline Vec2 frac_part(const Vec2& v) { return {frac_part(v.x), frac_part(v.y)}; }

inline Integer lcm_denominators(const Vec2& v) {
    return boost::multiprecision::lcm(den(v.x), den(v.y));
}

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline std::string to_string(const Vec2& v) {
    return "(" + to_string(v.x) + ", " + to_string(v.y) + ")";
}

}  // namespace wg
