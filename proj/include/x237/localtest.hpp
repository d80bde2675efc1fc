#pragma once

#include "x237/covariants.hpp"
#include "x237/numeric.hpp"
#include "x237/ternary_form.hpp"

#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <vector>

namespace x237 {

/// Sparse polynomial in (u, v) over Q; the restriction carrier of the local
/// test, with per-coefficient p-adic valuation queries.
struct BiPoly {
    std::map<std::array<int, 2>, Rat> terms;

    void add(std::array<int, 2> e, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end())
            terms.emplace(e, c);
        else if ((it->second += c) == 0)
            terms.erase(it);
    }
    bool is_zero() const { return terms.empty(); }
    Rat coeff(std::array<int, 2> e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Rat(0) : it->second;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) r.add({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (auto& [e, c] : b.terms) r.add(e, c);
        return r;
    }
    BiPoly scaled(const Rat& c) const {
        BiPoly r;
        for (auto& [e, cc] : terms) r.add(e, c * cc);
        return r;
    }
    BiPoly pow(unsigned n) const {
        BiPoly r;
        r.add({0, 0}, 1);
        BiPoly b = *this;
        while (n) {
            if (n & 1) r = r * b;
            if (n >>= 1) b = b * b;
        }
        return r;
    }
    BiPoly du() const {
        BiPoly r;
        for (auto& [e, c] : terms)
            if (e[0] > 0) r.add({e[0] - 1, e[1]}, c * e[0]);
        return r;
    }
    BiPoly dv() const {
        BiPoly r;
        for (auto& [e, c] : terms)
            if (e[1] > 0) r.add({e[0], e[1] - 1}, c * e[1]);
        return r;
    }
    Rat eval(const Int& u, const Int& v) const {
        Rat acc = 0;
        for (auto& [e, c] : terms) {
            Rat t = c;
            for (int i = 0; i < e[0]; ++i) t *= u;
            for (int i = 0; i < e[1]; ++i) t *= v;
            acc += t;
        }
        return acc;
    }
    /// Substitute u -> u0 + s*u, v -> v0 + s*v.
    BiPoly shifted(const Int& u0, const Int& v0, const Int& s) const {
        BiPoly pu, pv;
        pu.add({0, 0}, Rat(u0));
        pu.add({1, 0}, Rat(s));
        pv.add({0, 0}, Rat(v0));
        pv.add({0, 1}, Rat(s));
        BiPoly r;
        int maxu = 0, maxv = 0;
        for (auto& [e, c] : terms) {
            maxu = std::max(maxu, e[0]);
            maxv = std::max(maxv, e[1]);
        }
        std::vector<BiPoly> pus(maxu + 1), pvs(maxv + 1);
        pus[0].add({0, 0}, 1);
        pvs[0].add({0, 0}, 1);
        for (int i = 1; i <= maxu; ++i) pus[i] = pus[i - 1] * pu;
        for (int i = 1; i <= maxv; ++i) pvs[i] = pvs[i - 1] * pv;
        for (auto& [e, c] : terms) r = r + (pus[e[0]] * pvs[e[1]]).scaled(c);
        return r;
    }
    long min_valuation(long p) const {
        long m = val_infinity;
        for (auto& [e, c] : terms) m = std::min(m, valuation(c, Int(p)));
        return m;
    }
    /// True when the constant coefficient alone attains the minimal valuation.
    bool constant_strictly_minimal(long p) const {
        Rat c0 = coeff({0, 0});
        if (c0 == 0) return false;
        long v0 = valuation(c0, Int(p));
        for (auto& [e, c] : terms) {
            if (e[0] == 0 && e[1] == 0) continue;
            if (valuation(c, Int(p)) <= v0) return false;
        }
        return true;
    }
};

/// A p-adic box { sigma(1 : a + p^k u : b + p^l v) : u, v in Z_p } where
/// sigma places the unit coordinate at unit_axis and the two parameters on
/// the remaining coordinates in increasing axis order.
struct ResidueClass {
    long p = 2;
    int unit_axis = 0;
    Int a = 0, b = 0;
    int k = 0, l = 0;

    std::array<int, 2> param_axes() const {
        std::array<int, 2> r{-1, -1};
        int n = 0;
        for (int i = 0; i < 3; ++i)
            if (i != unit_axis) r[n++] = i;
        return r;
    }
    int depth() const { return std::max(k, l); }

    /// Initial partition of P^2(Q_p): (1 : Z_p : Z_p), (pZ_p : 1 : Z_p),
    /// (pZ_p : pZ_p : 1).
    static std::vector<ResidueClass> initial_partition(long p) {
        std::vector<ResidueClass> v;
        v.push_back(ResidueClass{p, 0, 0, 0, 0, 0});
        v.push_back(ResidueClass{p, 1, 0, 0, 1, 0});
        v.push_back(ResidueClass{p, 2, 0, 0, 1, 1});
        return v;
    }

    /// The set of P^2(F_p) points the class reduces onto.
    std::set<std::array<long, 3>> reduction_mod_p() const {
        auto axes = param_axes();
        std::set<std::array<long, 3>> out;
        auto residues = [&](const Int& center, int depth) {
            std::vector<long> r;
            if (depth >= 1) {
                r.push_back(static_cast<long>(center % p));
            } else {
                for (long t = 0; t < p; ++t) r.push_back(t);
            }
            return r;
        };
        for (long ra : residues(a, k))
            for (long rb : residues(b, l)) {
                std::array<long, 3> pt{0, 0, 0};
                pt[unit_axis] = 1;
                pt[axes[0]] = ra;
                pt[axes[1]] = rb;
                out.insert(pt);
            }
        return out;
    }

    std::string to_string() const {
        auto axes = param_axes();
        std::array<std::string, 3> c;
        c[unit_axis] = "1";
        auto fmt = [&](const Int& center, int depth, char var) {
            std::ostringstream os;
            os << center << "+" << p;
            if (depth != 1) os << "^" << depth;
            os << var;
            return os.str();
        };
        c[axes[0]] = fmt(a, k, 'u');
        c[axes[1]] = fmt(b, l, 'v');
        return "(" + c[0] + " : " + c[1] + " : " + c[2] + ")";
    }

    friend bool operator<(const ResidueClass& x, const ResidueClass& y) {
        auto key = [](const ResidueClass& r) { return std::tie(r.p, r.unit_axis, r.k, r.l, r.a, r.b); };
        return key(x) < key(y);
    }
    friend bool operator==(const ResidueClass& x, const ResidueClass& y) {
        return x.p == y.p && x.unit_axis == y.unit_axis && x.a == y.a && x.b == y.b &&
               x.k == y.k && x.l == y.l;
    }
};

/// Rewrites g in the class parameters: g(sigma(a + p^k u, ..., 1, ...)).
inline BiPoly restrict_to_class(const TernaryForm& g, const ResidueClass& rc) {
    auto axes = rc.param_axes();
    std::array<BiPoly, 3> coord;
    coord[rc.unit_axis].add({0, 0}, 1);
    coord[axes[0]].add({0, 0}, Rat(rc.a));
    coord[axes[0]].add({1, 0}, Rat(pow_int(rc.p, rc.k)));
    coord[axes[1]].add({0, 0}, Rat(rc.b));
    coord[axes[1]].add({0, 1}, Rat(pow_int(rc.p, rc.l)));
    int maxe[3] = {0, 0, 0};
    for (auto& [e, c] : g.terms())
        for (int i = 0; i < 3; ++i) maxe[i] = std::max(maxe[i], e[i]);
    std::array<std::vector<BiPoly>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        pows[i].resize(maxe[i] + 1);
        pows[i][0].add({0, 0}, 1);
        for (int d = 1; d <= maxe[i]; ++d) pows[i][d] = pows[i][d - 1] * coord[i];
    }
    BiPoly out;
    for (auto& [e, c] : g.terms())
        out = out + (pows[0][e[0]] * pows[1][e[1]] * pows[2][e[2]]).scaled(c);
    return out;
}

/// Per-class lower bounds for the valuations of the three covariants,
/// exactness flags (constant coefficient uniquely minimal), and
/// w = v_p(1728 psi0).
struct ValuationBounds {
    long W6 = 0, W14 = 0, W21 = 0;
    bool exact6 = false, exact14 = false, exact21 = false;
    long w = 0;
};

inline ValuationBounds class_bounds(const CovariantSet& cs, const ResidueClass& rc) {
    if (cs.psi0 == 0) throw MathError("class_bounds: psi0 vanishes");
    ValuationBounds b;
    BiPoly r6 = restrict_to_class(cs.psi6, rc);
    BiPoly r14 = restrict_to_class(cs.psi14, rc);
    BiPoly r21 = restrict_to_class(cs.psi21, rc);
    if (r6.is_zero() || r14.is_zero() || r21.is_zero())
        throw MathError("class_bounds: covariant vanishes identically on a class");
    b.W6 = r6.min_valuation(rc.p);
    b.W14 = r14.min_valuation(rc.p);
    b.W21 = r21.min_valuation(rc.p);
    b.exact6 = r6.constant_strictly_minimal(rc.p);
    b.exact14 = r14.constant_strictly_minimal(rc.p);
    b.exact21 = r21.constant_strictly_minimal(rc.p);
    b.w = valuation(Rat(1728) * cs.psi0, Int(rc.p));
    return b;
}

inline ValuationBounds class_bounds(const TernaryForm& f, const ResidueClass& rc) {
    return class_bounds(covariants(f), rc);
}

/// Verdict of the local solubility test at one prime.
struct LocalVerdict {
    bool passes = false;
    std::vector<ResidueClass> admissible;
    bool max_depth_reached = false;

    std::set<std::array<long, 3>> admissible_mod_p() const {
        std::set<std::array<long, 3>> out;
        for (auto& rc : admissible)
            for (auto& pt : rc.reduction_mod_p()) out.insert(pt);
        return out;
    }
};

/// Default subdivision budget; overridable through X2Y3Z7_MAX_DEPTH.
inline int default_max_depth() {
    if (const char* env = std::getenv("X2Y3Z7_MAX_DEPTH")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 30;
}

namespace detail {

enum class ZeroSearch { found, none, inconclusive };

/// Certified search for a Z_p x Z_p zero of G.  A candidate residue is
/// accepted once some first partial has valuation less than half the value's
/// valuation (a simple zero for Newton iteration); a class is rejected once
/// its unit part is constant.  Depth-limited.
inline ZeroSearch has_padic_zero(const BiPoly& g, long p, int depth) {
    if (g.is_zero()) return ZeroSearch::found;
    long e = g.min_valuation(p);
    BiPoly gs = g.scaled(pow_rat(Rat(p), -e));
    if (gs.constant_strictly_minimal(p)) return ZeroSearch::none;
    BiPoly gu = gs.du(), gv = gs.dv();
    bool unresolved = false;
    for (long u0 = 0; u0 < p; ++u0)
        for (long v0 = 0; v0 < p; ++v0) {
            Rat val = gs.eval(u0, v0);
            if (val == 0) return ZeroSearch::found;
            long vv = valuation(val, Int(p));
            if (vv < 1) continue;
            long du = valuation(gu.eval(u0, v0), Int(p));
            long dv = valuation(gv.eval(u0, v0), Int(p));
            if (vv > 2 * std::min(du, dv)) return ZeroSearch::found;
            if (depth == 0) {
                unresolved = true;
                continue;
            }
            switch (has_padic_zero(gs.shifted(u0, v0, p), p, depth - 1)) {
                case ZeroSearch::found: return ZeroSearch::found;
                case ZeroSearch::inconclusive: unresolved = true; break;
                case ZeroSearch::none: break;
            }
        }
    return unresolved ? ZeroSearch::inconclusive : ZeroSearch::none;
}

} // namespace detail

/// True iff the class contains a Q_p-point of F.  Decided by a certified
/// residue search; a precision overrun raises instead of guessing.
inline bool hensel_point_exists(const TernaryForm& f, const ResidueClass& rc,
                                int max_depth = default_max_depth()) {
    BiPoly g = restrict_to_class(f, rc);
    switch (detail::has_padic_zero(g, rc.p, max_depth)) {
        case detail::ZeroSearch::found: return true;
        case detail::ZeroSearch::none: return false;
        default: throw PrecisionLimitError("hensel_point_exists: precision budget exhausted");
    }
}

/// The residue-class local solubility test at p.  Classes are discarded when
/// F restricts to a unit times p-power plus higher terms; otherwise the class
/// thresholds (W21 + 3w)/21, (W14 + 2w)/14, (W6 + w)/6 decide: an exactly
/// attained integral minimum marks the class admissible (when it holds a
/// p-adic curve point), an exactly attained non-integral minimum discards it,
/// and an inexact minimum splits the class into p (or p^2) subclasses.
///
/// The pairing of covariants with the denominators 21, 14, 6 follows the
/// recovered solution a = (1728 psi0)^3 psi21, b = -(1728 psi0)^2 psi14,
/// c = -1728 psi0 psi6, whose valuations are 3w + v(psi21), 2w + v(psi14),
/// w + v(psi6).
inline LocalVerdict local_test(const TernaryForm& f, long p,
                               int max_depth = default_max_depth()) {
    if (f.is_zero() || f.degree() != 4) throw MathError("local_test: expected a quartic form");
    CovariantSet cs = covariants(f);
    if (cs.psi0 == 0) throw MathError("local_test: psi0 vanishes (not a twist)");
    const long w = valuation(Rat(1728) * cs.psi0, Int(p));

    LocalVerdict verdict;
    std::deque<ResidueClass> work;
    for (auto& rc : ResidueClass::initial_partition(p)) work.push_back(rc);

    while (!work.empty()) {
        ResidueClass rc = work.front();
        work.pop_front();

        BiPoly fr = restrict_to_class(f, rc);
        if (fr.constant_strictly_minimal(p)) continue;  // no p-adic zero here

        struct Cov {
            BiPoly r;
            long W;
            bool exact;
            long weight_w;  // multiplier of w in the threshold numerator
            long denom;
        };
        std::array<Cov, 3> cov{
            Cov{restrict_to_class(cs.psi21, rc), 0, false, 3, 21},
            Cov{restrict_to_class(cs.psi14, rc), 0, false, 2, 14},
            Cov{restrict_to_class(cs.psi6, rc), 0, false, 1, 6},
        };
        for (auto& cvt : cov) {
            if (cvt.r.is_zero())
                throw MathError("local_test: covariant vanishes identically on a class");
            cvt.W = cvt.r.min_valuation(p);
            cvt.exact = cvt.r.constant_strictly_minimal(p);
        }
        Rat m;
        bool first = true;
        for (auto& cvt : cov) {
            Rat cand(cvt.W + cvt.weight_w * w, cvt.denom);
            if (first || cand < m) m = cand;
            first = false;
        }
        bool exact_attains = false;
        bool split_u = false, split_v = false;
        for (auto& cvt : cov) {
            if (Rat(cvt.W + cvt.weight_w * w, cvt.denom) != m) continue;
            if (cvt.exact) {
                exact_attains = true;
                continue;
            }
            for (auto& [e, c] : cvt.r.terms) {
                if (valuation(c, Int(p)) != cvt.W) continue;
                if (e[0] > 0) split_u = true;
                if (e[1] > 0) split_v = true;
            }
        }
        if (exact_attains) {
            if (den(m) != 1) continue;  // exact non-integral minimum: discard
            switch (detail::has_padic_zero(fr, p, max_depth)) {
                case detail::ZeroSearch::found: verdict.admissible.push_back(rc); break;
                case detail::ZeroSearch::none: break;
                case detail::ZeroSearch::inconclusive: verdict.max_depth_reached = true; break;
            }
            continue;
        }
        if (rc.depth() >= max_depth) {
            verdict.max_depth_reached = true;
            continue;
        }
        if (!split_u && !split_v)
            throw MathError("local_test: internal error, inexact minimum without split direction");
        Int pk = pow_int(p, rc.k), pl = pow_int(p, rc.l);
        for (long u0 = 0; u0 < (split_u ? p : 1); ++u0)
            for (long v0 = 0; v0 < (split_v ? p : 1); ++v0) {
                ResidueClass sub = rc;
                if (split_u) {
                    sub.a = rc.a + pk * u0;
                    sub.k = rc.k + 1;
                }
                if (split_v) {
                    sub.b = rc.b + pl * v0;
                    sub.l = rc.l + 1;
                }
                work.push_back(sub);
            }
    }
    std::sort(verdict.admissible.begin(), verdict.admissible.end());
    verdict.passes = !verdict.admissible.empty();
    return verdict;
}

} // namespace x237
