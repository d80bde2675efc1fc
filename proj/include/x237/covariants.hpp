#pragma once

#include "x237/numeric.hpp"
#include "x237/ternary_form.hpp"
#include "x237/unipoly.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace x237 {

namespace detail {

inline TernaryForm det3(const std::array<std::array<TernaryForm, 3>, 3>& m) {
    auto prod = [](const TernaryForm& a, const TernaryForm& b, const TernaryForm& c) {
        return a * b * c;
    };
    return prod(m[0][0], m[1][1], m[2][2]) - prod(m[0][0], m[1][2], m[2][1]) -
           prod(m[0][1], m[1][0], m[2][2]) + prod(m[0][1], m[1][2], m[2][0]) +
           prod(m[0][2], m[1][0], m[2][1]) - prod(m[0][2], m[1][1], m[2][0]);
}

inline TernaryForm det4(const std::array<std::array<TernaryForm, 4>, 4>& m) {
    TernaryForm acc;
    for (int j = 0; j < 4; ++j) {
        if (m[3][j].is_zero()) continue;
        std::array<std::array<TernaryForm, 3>, 3> minor;
        for (int r = 0; r < 3; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == j) continue;
                minor[r][cc++] = m[r][c];
            }
        }
        TernaryForm term = m[3][j] * det3(minor);
        if ((3 + j) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// One trilinear monomial of the expanded operator identity behind psi0:
/// weight * c_a(F) * c_b(F) * c_c(F), where c_e(F) is the coefficient of x^e.
struct Psi0Term {
    Exp3 a, b, c;
    Rat weight;
};

inline const std::vector<Psi0Term>& psi0_table() {
    static std::vector<Psi0Term> table = [] {
        // Expand D^4 where D is the 3x3 determinant in the nine partials
        // d/dx_i, d/dy_i, d/dz_i (rows = point index, columns = variable).
        using Mono9 = std::array<int, 9>;
        std::map<Mono9, Int> d1;
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        const int signs[6] = {1, -1, -1, 1, 1, -1};
        for (int s = 0; s < 6; ++s) {
            Mono9 e{};
            for (int row = 0; row < 3; ++row) e[3 * row + perms[s][row]] += 1;
            d1[e] += signs[s];
        }
        auto mul = [](const std::map<Mono9, Int>& a, const std::map<Mono9, Int>& b) {
            std::map<Mono9, Int> r;
            for (auto& [ea, ca] : a)
                for (auto& [eb, cb] : b) {
                    Mono9 e;
                    for (int i = 0; i < 9; ++i) e[i] = ea[i] + eb[i];
                    r[e] += ca * cb;
                }
            for (auto it = r.begin(); it != r.end();)
                it = it->second == 0 ? r.erase(it) : std::next(it);
            return r;
        };
        auto d2 = mul(d1, d1);
        auto d4 = mul(d2, d2);
        auto fact = [](int n) {
            Int f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        };
        std::vector<Psi0Term> out;
        for (auto& [e, c] : d4) {
            // only monomials whose per-point degrees are all 4 hit a
            // coefficient of the quartic triple product
            Exp3 g[3];
            bool ok = true;
            for (int pt = 0; pt < 3 && ok; ++pt) {
                int d = 0;
                for (int v = 0; v < 3; ++v) {
                    g[pt][v] = e[3 * pt + v];
                    d += g[pt][v];
                }
                ok = d == 4;
            }
            if (!ok) continue;
            Int w = c;
            for (int i = 0; i < 9; ++i) w *= fact(e[i]);
            out.push_back(Psi0Term{g[0], g[1], g[2], Rat(w, 5184)});
        }
        return out;
    }();
    return table;
}

} // namespace detail

/// The degree-3 invariant of a ternary quartic, via the fourth power of the
/// omega (determinant) operator applied to F(x1,y1,z1)F(x2,y2,z2)F(x3,y3,z3),
/// normalized by 1/5184.  The operator expansion is memoized as an explicit
/// trilinear polynomial in the 15 coefficients of F.
inline Rat psi0(const TernaryForm& f) {
    if (f.is_zero() || f.degree() != 4) throw MathError("psi0: expected a quartic form");
    Rat acc = 0;
    for (const auto& t : detail::psi0_table()) {
        Rat ca = f.coeff(t.a);
        if (ca == 0) continue;
        Rat cb = f.coeff(t.b);
        if (cb == 0) continue;
        Rat cc = f.coeff(t.c);
        if (cc == 0) continue;
        acc += t.weight * ca * cb * cc;
    }
    return acc;
}

/// -(1/54) times the Hessian determinant; order 6, degree 3 in coefficients.
inline TernaryForm hessian_covariant(const TernaryForm& f) {
    if (f.is_zero() || f.degree() != 4) throw MathError("hessian_covariant: expected a quartic form");
    std::array<std::array<TernaryForm, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            h[i][j] = h[j][i] = f.partial(static_cast<Axis>(i)).partial(static_cast<Axis>(j));
    return Rat(-1, 54) * detail::det3(h);
}

/// (1/9) times the bordered Hessian determinant; order 14, degree 8.
inline TernaryForm psi14(const TernaryForm& f, const TernaryForm& p6) {
    if (f.degree() != 4 || p6.degree() != 6) throw MathError("psi14: wrong input degrees");
    std::array<std::array<TernaryForm, 4>, 4> m;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            m[i][j] = m[j][i] = f.partial(static_cast<Axis>(i)).partial(static_cast<Axis>(j));
    for (int i = 0; i < 3; ++i) {
        m[i][3] = p6.partial(static_cast<Axis>(i));
        m[3][i] = m[i][3];
    }
    m[3][3] = TernaryForm::zero();
    return Rat(1, 9) * detail::det4(m);
}

/// (1/14) times the Jacobian determinant of (f, psi6, psi14); order 21, degree 12.
inline TernaryForm psi21(const TernaryForm& f, const TernaryForm& p6, const TernaryForm& p14) {
    if (f.degree() != 4 || p6.degree() != 6 || p14.degree() != 14)
        throw MathError("psi21: wrong input degrees");
    std::array<std::array<TernaryForm, 3>, 3> j;
    const TernaryForm* rows[3] = {&f, &p6, &p14};
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) j[i][c] = rows[i]->partial(static_cast<Axis>(c));
    return Rat(1, 14) * detail::det3(j);
}

/// The invariant and the three covariants of a quartic, computed together.
struct CovariantSet {
    Rat psi0;
    TernaryForm psi6, psi14, psi21;
    TernaryForm source;
};

inline CovariantSet covariants(const TernaryForm& f) {
    CovariantSet cs;
    cs.source = f;
    cs.psi0 = psi0(f);
    cs.psi6 = hessian_covariant(f);
    cs.psi14 = psi14(f, cs.psi6);
    cs.psi21 = psi21(f, cs.psi6, cs.psi14);
    return cs;
}

/// Certificate that f is in the orbit of the Klein quartic:
/// psi21^2 - psi14^3 + 1728 psi0 psi6^7 vanishes identically modulo f.
inline bool syzygy_check(const TernaryForm& f) {
    if (f.is_zero() || f.degree() != 4) throw MathError("syzygy_check: expected a quartic form");
    CovariantSet cs = covariants(f);
    TernaryForm lhs =
        cs.psi21 * cs.psi21 - cs.psi14.pow(3) + Rat(1728) * cs.psi0 * cs.psi6.pow(7);
    return reduce_mod_form(lhs, f).is_zero();
}

/// A point on the j-line: either infinity or an exact rational.
struct JValue {
    bool infinite = false;
    Rat value;

    static JValue inf() { return JValue{true, 0}; }
    static JValue of(Rat v) { return JValue{false, std::move(v)}; }
    friend bool operator==(const JValue& a, const JValue& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    std::string to_string() const { return infinite ? "inf" : x237::to_string(value); }
};

struct ProjPointRef {
    const Int& x;
    const Int& y;
    const Int& z;
};

/// Canonical degree-168 map to the j-line: psi14^3 / (psi0 * psi6^7) at the
/// point, infinity where psi6 vanishes.  Requires psi0 != 0 and the point on
/// the curve; at most one of psi6, psi14, psi21 may vanish at a curve point.
inline JValue j_invariant(const CovariantSet& cs, const Int& x, const Int& y, const Int& z) {
    if (cs.psi0 == 0) throw MathError("j_invariant: psi0 vanishes");
    if (cs.source.eval(x, y, z) != 0) throw MathError("j_invariant: point not on curve");
    Rat v6 = cs.psi6.eval(x, y, z);
    Rat v14 = cs.psi14.eval(x, y, z);
    Rat v21 = cs.psi21.eval(x, y, z);
    int vanishing = (v6 == 0) + (v14 == 0) + (v21 == 0);
    if (vanishing > 1)
        throw MathError("j_invariant: two covariants vanish at a curve point");
    if (v6 == 0) return JValue::inf();
    return JValue::of(v14 * v14 * v14 / (cs.psi0 * pow_rat(v6, 7)));
}

inline JValue j_invariant(const TernaryForm& f, const Int& x, const Int& y, const Int& z) {
    return j_invariant(covariants(f), x, y, z);
}

/// Resultant in v of the z=1 dehomogenizations of f and its Hessian covariant.
/// Roots are the u-coordinates of flexes.  Degenerate charts raise MathError;
/// permute coordinates and retry.
inline RatPoly flex_resultant(const TernaryForm& f) {
    if (f.is_zero() || f.degree() != 4) throw MathError("flex_resultant: expected a quartic form");
    TernaryForm hess = hessian_covariant(f);
    if (hess.is_zero()) throw MathError("flex_resultant: degenerate quartic (zero Hessian)");
    RatBiPoly fd = f.dehomogenize(Axis::Z);
    RatBiPoly hd = hess.dehomogenize(Axis::Z);
    if (fd.degree() < 1 || hd.degree() < 1)
        throw MathError("flex_resultant: degenerate chart, permute coordinates and retry");
    RatPoly res = resultant(fd, hd);
    if (res.is_zero())
        throw MathError("flex_resultant: resultant vanishes identically (singular quartic?)");
    return res;
}

} // namespace x237
