#pragma once

#include "x237/covariants.hpp"
#include "x237/fixtures_data.hpp"
#include "x237/numeric.hpp"
#include "x237/proj_point.hpp"
#include "x237/ternary_form.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace x237 {

/// Coefficients of a mu_7-twist  a x^3 y + b y^3 z + c z^3 x = 0,
/// normalized: a, b, c squarefree and coprime, a >= b and a >= c.
struct Case1Twist {
    Int a, b, c;

    TernaryForm quartic() const {
        TernaryForm f;
        f.add_term({3, 1, 0}, Rat(a));
        f.add_term({0, 3, 1}, Rat(b));
        f.add_term({1, 0, 3}, Rat(c));
        return f;
    }
    friend bool operator==(const Case1Twist& l, const Case1Twist& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const Case1Twist& l, const Case1Twist& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

/// Reduction of a x^3 y + b y^3 z + c z^3 x to its normal form: while some
/// coefficient has a square prime factor p, scale the matching variable by
/// 1/p and the equation by p ((a,b,c) -> (a/p^2, pb, c) and cyclic versions,
/// abc strictly decreasing), then divide by the gcd and rotate cyclically so
/// that a is maximal.  Each step is an isomorphism of the plane curve over Q.
inline Case1Twist case1_reduce(Int a, Int b, Int c) {
    if (a < 1 || b < 1 || c < 1) throw MathError("case1_reduce: coefficients must be positive");
    auto square_prime = [](const Int& n) -> std::optional<Int> {
        for (auto& [p, e] : factorize(n))
            if (e >= 2) return p;
        return std::nullopt;
    };
    for (;;) {
        if (auto p = square_prime(a)) {
            a /= *p * *p;
            b *= *p;
            continue;
        }
        if (auto p = square_prime(b)) {
            b /= *p * *p;
            c *= *p;
            continue;
        }
        if (auto p = square_prime(c)) {
            c /= *p * *p;
            a *= *p;
            continue;
        }
        break;
    }
    Int g = gcd(gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    // cyclic rotations only: (a,b,c) -> (c,a,b) renames the variables
    std::array<std::array<Int, 3>, 3> rot{{{a, b, c}, {c, a, b}, {b, c, a}}};
    auto best = rot[0];
    for (auto& r : rot)
        if (r > best) best = r;
    return Case1Twist{best[0], best[1], best[2]};
}

/// The mu_7-twists unramified outside {2,3,7}: representatives a = 2^i 3^j 7^k
/// (0 <= i,j,k <= 6) of the relevant classes of Q^x / Q^x7, each reduced, with
/// duplicates collapsed.  Twists over cyclic cubic fields are a separate
/// family and are not produced here.
inline std::set<Case1Twist> enumerate_case1() {
    std::set<Case1Twist> out;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j)
            for (int k = 0; k <= 6; ++k) {
                Int a = pow_int(2, i) * pow_int(3, j) * pow_int(7, k);
                out.insert(case1_reduce(a, 1, 1));
            }
    return out;
}

/// Short Weierstrass coefficients Y^2 = X^3 + aX + b, nonsingular.
struct EllipticCoeffs {
    Int a, b;

    EllipticCoeffs(Int aa, Int bb) : a(std::move(aa)), b(std::move(bb)) {
        if (discriminant_factor() == 0)
            throw MathError("EllipticCoeffs: singular curve (4a^3 + 27b^2 = 0)");
    }
    Int discriminant_factor() const { return 4 * a * a * a + 27 * b * b; }
    Rat j_invariant() const {
        return Rat(6912 * a * a * a) / Rat(discriminant_factor());
    }
};

/// The plane quartic model of X_E(7) for E: Y^2 = X^3 + aX + b.
inline TernaryForm x_e7_quartic(const EllipticCoeffs& e) {
    const Int &a = e.a, &b = e.b;
    TernaryForm f;
    f.add_term({4, 0, 0}, Rat(a));
    f.add_term({3, 0, 1}, Rat(7 * b));
    f.add_term({2, 2, 0}, Rat(3));
    f.add_term({2, 0, 2}, Rat(-3 * a * a));
    f.add_term({1, 1, 2}, Rat(-6 * b));
    f.add_term({1, 0, 3}, Rat(-5 * a * b));
    f.add_term({0, 3, 1}, Rat(2));
    f.add_term({0, 2, 2}, Rat(3 * a));
    f.add_term({0, 1, 3}, Rat(2 * a * a));
    f.add_term({0, 0, 4}, Rat(-4 * b * b));
    return f;
}

/// The plane quartic model of X_E^-(7), obtained from the printed equation.
inline TernaryForm x_e7_minus_quartic(const EllipticCoeffs& e) {
    const Int &a = e.a, &b = e.b;
    TernaryForm f;
    f.add_term({4, 0, 0}, Rat(-a * a));
    f.add_term({0, 4, 0}, Rat(a * (3 * a * a * a + 19 * b * b)));
    f.add_term({0, 0, 4}, Rat(3));
    f.add_term({0, 2, 2}, Rat(6 * a * a));
    f.add_term({2, 0, 2}, Rat(6 * a));
    f.add_term({2, 2, 0}, Rat(-6 * (a * a * a + 6 * b * b)));
    f.add_term({1, 2, 1}, Rat(-12 * a * b));
    f.add_term({1, 1, 2}, Rat(18 * b));
    f.add_term({3, 1, 0}, Rat(2 * a * b));
    f.add_term({3, 0, 1}, Rat(-12 * b));
    f.add_term({0, 3, 1}, Rat(-2 * (4 * a * a * a + 21 * b * b)));
    f.add_term({1, 3, 0}, Rat(2 * a * a * b));
    f.add_term({0, 1, 3}, Rat(-8 * a));
    return f;
}

/// One known-point row of the catalog: the point, its image on the j-line,
/// and the attached primitive solution when the row yields one.
struct CatalogPointRow {
    ProjPoint point;
    JValue j;
    std::optional<std::array<Int, 3>> solution;  // nullopt renders as '-'
};

struct CatalogCurve {
    std::string label;
    TernaryForm quartic;
    std::vector<CatalogPointRow> points;
};

struct CurveCatalog {
    std::vector<CatalogCurve> curves;

    const CatalogCurve& by_label(const std::string& label) const {
        for (auto& c : curves)
            if (c.label == label) return c;
        throw MathError("unknown catalog curve: " + label);
    }
    bool has_label(const std::string& label) const {
        for (auto& c : curves)
            if (c.label == label) return true;
        return false;
    }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline CurveCatalog parse_catalog(const std::string& text) {
    CurveCatalog cat;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "curve") {
            std::string label;
            ls >> label;
            std::string rest;
            std::getline(ls, rest);
            CatalogCurve c;
            c.label = label;
            c.quartic = TernaryForm::parse(rest);
            cat.curves.push_back(std::move(c));
        } else if (kind == "point") {
            if (cat.curves.empty()) throw ParseError("catalog: point before any curve");
            std::string pt, jtext;
            ls >> pt >> jtext;
            CatalogPointRow row;
            row.point = ProjPoint::parse(pt);
            row.j = jtext == "inf" ? JValue::inf() : JValue::of(parse_rational_expr(jtext));
            std::string s1;
            if (ls >> s1) {
                if (s1 != "-") {
                    std::string s2, s3;
                    if (!(ls >> s2 >> s3)) throw ParseError("catalog: malformed solution triple");
                    row.solution = std::array<Int, 3>{Int(s1), Int(s2), Int(s3)};
                }
            } else {
                throw ParseError("catalog: missing solution column");
            }
            cat.curves.back().points.push_back(std::move(row));
        } else {
            throw ParseError("catalog: unknown record '" + kind + "'");
        }
    }
    return cat;
}

} // namespace detail

/// The ten catalog quartics with their table rows, as immutable fixture data.
inline const CurveCatalog& catalog() {
    static const CurveCatalog cat = detail::parse_catalog(fixtures::curve_catalog);
    return cat;
}

/// A labelled short-Weierstrass curve from the elliptic fixture file.
struct LabeledEllipticCurve {
    std::string label;
    EllipticCoeffs coeffs;
    std::optional<Rat> printed_j;  // consistency anchor, when one is recorded
};

/// The thirteen labelled elliptic curves behind the non-cyclic twists.
inline const std::vector<LabeledEllipticCurve>& elliptic_fixture() {
    static const std::vector<LabeledEllipticCurve> fixture = [] {
        std::vector<LabeledEllipticCurve> out;
        std::istringstream is(fixtures::elliptic_curves);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto toks = detail::split_ws(line);
            if (toks.size() != 5 || toks[0] != "curve")
                throw ParseError("elliptic fixture: malformed line '" + line + "'");
            LabeledEllipticCurve c{toks[1], EllipticCoeffs(Int(toks[2]), Int(toks[3])),
                                   std::nullopt};
            if (toks[4] != "-") c.printed_j = parse_rational_expr(toks[4]);
            out.push_back(std::move(c));
        }
        return out;
    }();
    return fixture;
}

} // namespace x237
