#pragma once

#include "x237/covariants.hpp"
#include "x237/numeric.hpp"
#include "x237/proj_point.hpp"
#include "x237/ternary_form.hpp"
#include "x237/twists.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>
#include <variant>
#include <vector>

namespace x237 {

/// An integer triple with a^2 + b^3 = c^7 and gcd(a,b,c) = 1.
struct PrimitiveSolution {
    Int a, b, c;

    friend bool operator==(const PrimitiveSolution& l, const PrimitiveSolution& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const PrimitiveSolution& l, const PrimitiveSolution& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
    std::string to_string() const { return a.str() + " " + b.str() + " " + c.str(); }
};

inline bool verify_solution(const Int& a, const Int& b, const Int& c) {
    if (a * a + b * b * b != pow_int(c, 7)) return false;
    return gcd(gcd(abs(a), abs(b)), abs(c)) == 1;
}

/// Recovery failed: the extracted triple cannot be scaled p-primitively.
struct NoPrimitiveScaling {
    Int obstructing_prime;
};

using RecoverResult = std::variant<PrimitiveSolution, NoPrimitiveScaling>;

/// Extracts the solution attached to a rational point of a twist:
/// a = (1728 psi0)^3 psi21(P), b = -(1728 psi0)^2 psi14(P),
/// c = -1728 psi0 psi6(P), scaled by the unique lambda = prod p^{m_p} with
/// m_p = min{v_p(a)/21, v_p(b)/14, v_p(c)/6} (v_p(0) treated as infinite)
/// whenever every m_p is an integer; the result is sign-normalized to a >= 0.
/// (-a, b, c) is then also a solution.
inline RecoverResult recover_solution(const CovariantSet& cs, const ProjPoint& P) {
    if (cs.psi0 == 0) throw MathError("recover_solution: psi0 vanishes");
    if (cs.source.eval(P.x, P.y, P.z) != 0)
        throw MathError("recover_solution: point not on curve");
    Rat K = Rat(1728) * cs.psi0;
    Rat v6 = cs.psi6.eval(P.x, P.y, P.z);
    Rat v14 = cs.psi14.eval(P.x, P.y, P.z);
    Rat v21 = cs.psi21.eval(P.x, P.y, P.z);
    if ((v6 == 0) + (v14 == 0) + (v21 == 0) > 1)
        throw MathError("recover_solution: two covariants vanish at a curve point");
    Rat a = K * K * K * v21;
    Rat b = -K * K * v14;
    Rat c = -K * v6;

    // primes where a common rescaling can act: divisors of the gcd of the
    // numerators of the nonzero coordinates, and of any denominator
    Int g = 0, l = 1;
    for (const Rat* r : {&a, &b, &c}) {
        if (*r == 0) continue;
        g = gcd(g, num(*r));
        l = lcm(l, den(*r));
    }
    std::map<Int, int> support = factorize(abs(g));
    for (auto& [p, e] : factorize(l)) support[p] += e;

    Rat lambda = 1;
    const long weights[3] = {21, 14, 6};
    for (auto& [p, unused] : support) {
        long mnum = val_infinity, mden = 1;
        const Rat* coords[3] = {&a, &b, &c};
        for (int i = 0; i < 3; ++i) {
            if (*coords[i] == 0) continue;
            long v = valuation(*coords[i], p);
            // compare v/weights[i] < mnum/mden exactly
            if (mnum == val_infinity || v * mden < mnum * weights[i]) {
                mnum = v;
                mden = weights[i];
            }
        }
        if (mnum == val_infinity) throw MathError("recover_solution: zero covariant triple");
        if (mnum % mden != 0) return NoPrimitiveScaling{p};
        lambda *= pow_rat(Rat(p), mnum / mden);
    }
    Rat as = a / pow_rat(lambda, 21);
    Rat bs = b / pow_rat(lambda, 14);
    Rat cs7 = c / pow_rat(lambda, 6);
    if (den(as) != 1 || den(bs) != 1 || den(cs7) != 1)
        throw MathError("recover_solution: internal error, scaled triple not integral");
    PrimitiveSolution s{num(as), num(bs), num(cs7)};
    if (s.a < 0) s.a = -s.a;
    if (!verify_solution(s.a, s.b, s.c))
        throw MathError("recover_solution: internal error, recovered triple invalid");
    return s;
}

inline RecoverResult recover_solution(const TernaryForm& f, const ProjPoint& P) {
    return recover_solution(covariants(f), P);
}

/// The curve E_(a,b,c): Y^2 = X^3 + 3b X - 2a attached to a solution with
/// b, c nonzero, and its j-invariant 1728 b^3 / c^7.
struct EllipticFromSolution {
    EllipticCoeffs coeffs;
    Rat j;
};

inline EllipticFromSolution elliptic_from_solution(const PrimitiveSolution& s) {
    if (s.b == 0 || s.c == 0)
        throw MathError("elliptic_from_solution: degenerate solution (b or c zero)");
    Int c4 = -144 * s.b;
    Int c6 = 1728 * s.a;
    Int delta = -1728 * pow_int(s.c, 7);
    Rat j = Rat(c4 * c4 * c4) / Rat(delta);
    if (j != Rat(1728 * s.b * s.b * s.b) / Rat(pow_int(s.c, 7)))
        throw MathError("elliptic_from_solution: internal error, j mismatch");
    return EllipticFromSolution{EllipticCoeffs(3 * s.b, -2 * s.a), j};
}

/// Residue-class predicate used to cut searches down to the classes a local
/// test left admissible: a point is accepted when, for every listed prime,
/// its reduction lies in the allowed subset of P^2(F_p).
struct ResidueFilter {
    std::vector<std::pair<long, std::set<std::array<long, 3>>>> allowed;

    bool accepts(const ProjPoint& P) const {
        for (auto& [p, pts] : allowed) {
            long x = static_cast<long>(((P.x % p) + p) % p);
            long y = static_cast<long>(((P.y % p) + p) % p);
            long z = static_cast<long>(((P.z % p) + p) % p);
            // normalize to a canonical F_p representative
            std::array<long, 3> v{x, y, z};
            long unit = 0;
            while (unit < 3 && v[unit] % p == 0) ++unit;
            if (unit == 3) throw MathError("ResidueFilter: point reduces to (0:0:0)");
            long inv = 1;
            for (long t = 1; t < p; ++t)
                if ((t * v[unit]) % p == 1) inv = t;
            for (auto& c : v) c = (c * inv) % p;
            if (!pts.count(v)) return false;
        }
        return true;
    }
};

/// The mod-2 and mod-3 constraints carving out the C5 subset.
inline ResidueFilter c5_subset_filter() {
    ResidueFilter f;
    f.allowed.push_back({2L, {{1, 0, 0}, {1, 1, 1}}});
    f.allowed.push_back({3L, {{0, 1, 0}}});
    return f;
}

/// All canonical points with max(|x|,|y|,|z|) <= bound on F = 0, in
/// deterministic (sorted) order; parallel over x-ranges internally.
inline std::vector<ProjPoint> point_search(const TernaryForm& f, long bound,
                                           const std::optional<ResidueFilter>& filter = {}) {
    if (bound < 1) throw MathError("point_search: bound must be >= 1");
    if (f.is_zero()) throw MathError("point_search: zero form");
    // fast path: machine integers when no overflow is possible
    bool small = true;
    Int maxc = 0;
    for (auto& [e, c] : f.terms()) {
        if (den(c) != 1) small = false;
        Int an = abs(num(c));
        if (an > maxc) maxc = an;
    }
    Int worst = maxc * Int(f.terms().size()) * pow_int(Int(bound), f.degree());
    small = small && worst < (Int(1) << 62);

    struct Term {
        int e0, e1, e2;
        long long c;
    };
    std::vector<Term> terms;
    if (small)
        for (auto& [e, c] : f.terms())
            terms.push_back({e[0], e[1], e[2], num(c).convert_to<long long>()});

    auto search_range = [&](long x_lo, long x_hi) {
        std::vector<ProjPoint> found;
        std::vector<long long> powx(f.degree() + 1), powy(f.degree() + 1), powz(f.degree() + 1);
        for (long x = x_lo; x < x_hi; ++x)
            for (long y = -bound; y <= bound; ++y)
                for (long z = -bound; z <= bound; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (small) {
                        powx[0] = powy[0] = powz[0] = 1;
                        for (int i = 1; i <= f.degree(); ++i) {
                            powx[i] = powx[i - 1] * x;
                            powy[i] = powy[i - 1] * y;
                            powz[i] = powz[i - 1] * z;
                        }
                        long long acc = 0;
                        for (auto& t : terms) acc += t.c * powx[t.e0] * powy[t.e1] * powz[t.e2];
                        if (acc != 0) continue;
                    } else {
                        if (f.eval(Int(x), Int(y), Int(z)) != 0) continue;
                    }
                    auto P = ProjPoint(Int(x), Int(y), Int(z));
                    if (filter && !filter->accepts(P)) continue;
                    found.push_back(std::move(P));
                }
        return found;
    };

    unsigned nthreads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::future<std::vector<ProjPoint>>> futs;
    long span = 2 * bound + 1;
    long chunk = (span + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
        long lo = -bound + t * chunk;
        long hi = std::min(bound + 1, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, search_range, lo, hi));
    }
    std::set<ProjPoint> out;
    for (auto& fu : futs)
        for (auto& P : fu.get()) out.insert(P);
    return {out.begin(), out.end()};
}

/// Applies recover_solution to every (curve, point) row of the catalog,
/// expands each success by the sign pair (-a, b, c), and returns the
/// deduplicated set.
inline std::set<PrimitiveSolution> reproduce_theorem() {
    std::set<PrimitiveSolution> out;
    for (const auto& curve : catalog().curves) {
        CovariantSet cs = covariants(curve.quartic);
        for (const auto& row : curve.points) {
            RecoverResult r = recover_solution(cs, row.point);
            if (auto* s = std::get_if<PrimitiveSolution>(&r)) {
                out.insert(*s);
                out.insert(PrimitiveSolution{-s->a, s->b, s->c});
            }
        }
    }
    return out;
}

/// Verifies u^7 = v^2 (A v - w) w^4 on the curve x^3 y + y^3 z + A z^3 x = 0
/// under (u, v, w) = (xyz, -z^3, x^2 y).
inline bool fermat_cover_identity(const Int& A) {
    if (A == 0) throw MathError("fermat_cover_identity: A must be nonzero");
    TernaryForm f;
    f.add_term({3, 1, 0}, 1);
    f.add_term({0, 3, 1}, 1);
    f.add_term({1, 0, 3}, Rat(A));
    TernaryForm u = TernaryForm::monomial(1, {1, 1, 1});
    TernaryForm v = TernaryForm::monomial(-1, {0, 0, 3});
    TernaryForm w = TernaryForm::monomial(1, {2, 1, 0});
    TernaryForm lhs = u.pow(7) - v * v * (Rat(A) * v - w) * w.pow(4);
    return reduce_mod_form(lhs, f).is_zero();
}

/// A twisted septic Fermat curve c1 X^7 + c2 Y^7 + c3 Z^7 = 0.
struct SepticCurve {
    Int c1, c2, c3;

    SepticCurve(Int a, Int b, Int c) : c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {
        for (const Int* v : {&c1, &c2, &c3}) {
            if (*v == 0) throw MathError("SepticCurve: zero coefficient");
            for (auto& [p, e] : factorize(abs(*v)))
                if (e >= 7) throw MathError("SepticCurve: coefficient not 7th-power-free");
        }
    }
};

/// Primitive points with coordinates bounded by `bound`, via exact seventh
/// roots of the forced Z^7.
inline std::vector<ProjPoint> septic_search(const SepticCurve& curve, long bound) {
    if (bound < 1) throw MathError("septic_search: bound must be >= 1");
    std::set<ProjPoint> out;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            Int rhs = -(curve.c1 * pow_int(Int(x), 7) + curve.c2 * pow_int(Int(y), 7));
            if (rhs % curve.c3 != 0) continue;
            auto z = iroot_exact(rhs / curve.c3, 7);
            if (!z || abs(*z) > bound) continue;
            if (x == 0 && y == 0 && *z == 0) continue;
            out.insert(ProjPoint(Int(x), Int(y), *z));
        }
    return {out.begin(), out.end()};
}

} // namespace x237
