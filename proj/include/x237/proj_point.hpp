#pragma once

#include "x237/numeric.hpp"

#include <compare>
#include <string>

namespace x237 {

/// Primitive integer homogeneous coordinates (x:y:z),
/// gcd 1, first nonzero coordinate positive.
struct ProjPoint {
    Int x, y, z;

    ProjPoint() : x(0), y(0), z(1) {}
    ProjPoint(Int xx, Int yy, Int zz) : x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {
        normalize();
    }

    void normalize() {
        if (x == 0 && y == 0 && z == 0) throw MathError("ProjPoint: all coordinates zero");
        Int g = gcd(gcd(abs(x), abs(y)), abs(z));
        x /= g;
        y /= g;
        z /= g;
        const Int& lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead < 0) {
            x = -x;
            y = -y;
            z = -z;
        }
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }

    std::string to_string() const { return x.str() + ":" + y.str() + ":" + z.str(); }

    static ProjPoint parse(const std::string& s) {
        size_t c1 = s.find(':');
        size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("expected x:y:z, got '" + s + "'");
        auto piece = [&](size_t a, size_t b) {
            std::string t = s.substr(a, b - a);
            size_t i = t.find_first_not_of(" \t");
            size_t j = t.find_last_not_of(" \t");
            if (i == std::string::npos) throw ParseError("empty coordinate in '" + s + "'");
            return Int(t.substr(i, j - i + 1));
        };
        return ProjPoint(piece(0, c1), piece(c1 + 1, c2), piece(c2 + 1, s.size()));
    }
};

} // namespace x237
