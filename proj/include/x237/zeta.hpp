#pragma once

#include "x237/numeric.hpp"
#include "x237/ternary_form.hpp"

#include <array>
#include <future>
#include <thread>
#include <vector>

namespace x237 {

/// F_{p^k}, as polynomials modulo a fixed irreducible monic, chosen
/// deterministically (smallest coefficient tuple); elements are coefficient
/// vectors with machine-word entries (p is small here).  Counting needs
/// k <= 3 only; k = 4 exists for the functional-equation oracle.
class Fq {
public:
    using Elem = std::array<long, 4>;

    Fq(long p, int k) : p_(p), k_(k) {
        if (p < 2 || k < 1 || k > 4) throw MathError("Fq: need p >= 2 prime and 1 <= k <= 4");
        mod_ = find_modulus(p, k);
    }

    long p() const { return p_; }
    int k() const { return k_; }
    long size() const {
        long s = 1;
        for (int i = 0; i < k_; ++i) s *= p_;
        return s;
    }
    /// Coefficients a_0..a_{k-1} of the monic modulus x^k + a_{k-1}x^{k-1} + ... + a_0.
    const std::array<long, 4>& modulus() const { return mod_; }
    std::string modulus_string() const {
        if (k_ == 1) return "-";
        std::string s = "t^" + std::to_string(k_);
        for (int i = k_ - 1; i >= 0; --i) {
            if (mod_[i] == 0) continue;
            s += " + ";
            if (mod_[i] != 1 || i == 0) s += std::to_string(mod_[i]);
            if (i > 0) {
                if (mod_[i] != 1) s += "*";
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    Elem zero() const { return {0, 0, 0}; }
    Elem one() const { return {1, 0, 0}; }
    Elem from_int(long n) const { return {((n % p_) + p_) % p_, 0, 0}; }
    Elem from_index(long idx) const {
        Elem e{0, 0, 0};
        for (int i = 0; i < k_; ++i) {
            e[i] = idx % p_;
            idx /= p_;
        }
        return e;
    }
    bool is_zero(const Elem& a) const {
        for (int i = 0; i < k_; ++i)
            if (a[i]) return false;
        return true;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r{0, 0, 0};
        for (int i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r{0, 0, 0};
        for (int i = 0; i < k_; ++i) r[i] = ((a[i] - b[i]) % p_ + p_) % p_;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        long prod[7] = {0, 0, 0, 0, 0, 0, 0};
        for (int i = 0; i < k_; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < k_; ++j) prod[i + j] += a[i] * b[j];
        }
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            long c = prod[d] % p_;
            prod[d] = 0;
            if (!c) continue;
            for (int t = 0; t < k_; ++t) prod[d - k_ + t] -= c * mod_[t];
        }
        Elem r{0, 0, 0};
        for (int i = 0; i < k_; ++i) r[i] = ((prod[i] % p_) + p_) % p_;
        return r;
    }
    Elem pow(Elem a, long e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw MathError("Fq: inverse of zero");
        return pow(a, size() - 2);
    }

private:
    static std::array<long, 4> find_modulus(long p, int k) {
        if (k == 1) return {0, 0, 0, 0};
        // enumerate (a_{k-1}, ..., a_0) ascending; for k in {2,3} a monic is
        // irreducible iff it has no root in F_p; for k = 4 it must also be
        // free of irreducible quadratic factors
        std::vector<long> a(k, 0);
        auto irreducible = [&]() {
            for (long t = 0; t < p; ++t) {
                long v = 1;
                for (int i = k - 1; i >= 0; --i) v = (v * t + a[i]) % p;
                if (v == 0) return false;
            }
            if (k < 4) return true;
            // quartic: exclude quadratic factors via gcd(f, x^{p^2} - x) = 1,
            // with polynomial arithmetic over F_p modulo f
            auto mulmod = [&](const std::vector<long>& u, const std::vector<long>& v) {
                std::vector<long> w(2 * k - 1, 0);
                for (int i = 0; i < k; ++i)
                    if (u[i])
                        for (int j = 0; j < k; ++j) w[i + j] = (w[i + j] + u[i] * v[j]) % p;
                for (int d = 2 * k - 2; d >= k; --d) {
                    long c = w[d] % p;
                    w[d] = 0;
                    if (!c) continue;
                    for (int t = 0; t < k; ++t) w[d - k + t] = ((w[d - k + t] - c * a[t]) % p + p) % p;
                }
                w.resize(k);
                return w;
            };
            std::vector<long> x(k, 0);
            x[1] = 1;
            std::vector<long> base = x;
            long e = p * p;
            std::vector<long> r(k, 0);
            r[0] = 1;
            while (e) {
                if (e & 1) r = mulmod(r, base);
                base = mulmod(base, base);
                e >>= 1;
            }
            r[1] = ((r[1] - 1) % p + p) % p;  // x^{p^2} - x mod f
            // gcd(f, r) trivial <=> r invertible mod f; since deg r < 4 and f
            // has no roots, a nontrivial gcd has degree 2: check r != 0 and
            // that r is not a multiple of an irreducible quadratic dividing f
            // via a plain Euclid step over F_p[x]
            auto degree = [](const std::vector<long>& v) {
                int d = static_cast<int>(v.size()) - 1;
                while (d >= 0 && v[d] == 0) --d;
                return d;
            };
            std::vector<long> f(a.begin(), a.end());
            f.push_back(1);
            std::vector<long> g = r;
            auto inv_mod_p = [&](long x0) {
                long t = 1;
                for (long i = 1; i < p; ++i)
                    if (i * x0 % p == 1) t = i;
                return t;
            };
            while (degree(g) >= 0) {
                int df = degree(f), dg = degree(g);
                if (df < dg) {
                    std::swap(f, g);
                    continue;
                }
                long fac = f[df] * inv_mod_p(g[dg]) % p;
                for (int i = 0; i <= dg; ++i)
                    f[df - dg + i] = ((f[df - dg + i] - fac * g[i]) % p + p) % p;
            }
            return degree(f) == 0;
        };
        for (;;) {
            if (irreducible()) {
                std::array<long, 4> m{0, 0, 0, 0};
                for (int i = 0; i < k; ++i) m[i] = a[i];
                return m;
            }
            int i = 0;  // increment (a_{k-1},...,a_0) as a lexicographic counter
            for (i = 0; i < k; ++i) {
                if (++a[i] < p) break;
                a[i] = 0;
            }
            if (i == k) throw MathError("Fq: no irreducible modulus found");
        }
    }

    long p_;
    int k_;
    std::array<long, 4> mod_;
};

namespace detail {

/// Dense polynomial over Fq with context passed explicitly; degree is small
/// (at most 4 here).
struct FqPoly {
    std::vector<Fq::Elem> c;

    void trim(const Fq& F) {
        while (!c.empty() && F.is_zero(c.back())) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

inline FqPoly fq_mulmod(const Fq& F, const FqPoly& a, const FqPoly& b, const FqPoly& m) {
    FqPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    // reduce modulo m (monic not required; leading inverted once)
    int dm = m.degree();
    Fq::Elem lead_inv = F.inv(m.c[dm]);
    for (int d = r.degree(); d >= dm; --d) {
        if (F.is_zero(r.c[d])) continue;
        Fq::Elem f = F.mul(r.c[d], lead_inv);
        for (int i = 0; i <= dm; ++i)
            r.c[d - dm + i] = F.sub(r.c[d - dm + i], F.mul(f, m.c[i]));
    }
    r.trim(F);
    return r;
}

inline FqPoly fq_mod(const Fq& F, FqPoly a, const FqPoly& m) {
    int dm = m.degree();
    Fq::Elem lead_inv = F.inv(m.c[dm]);
    for (int d = a.degree(); d >= dm; --d) {
        if (F.is_zero(a.c[d])) continue;
        Fq::Elem f = F.mul(a.c[d], lead_inv);
        for (int i = 0; i <= dm; ++i) a.c[d - dm + i] = F.sub(a.c[d - dm + i], F.mul(f, m.c[i]));
    }
    a.trim(F);
    return a;
}

inline int fq_gcd_degree(const Fq& F, FqPoly a, FqPoly b) {
    a.trim(F);
    b.trim(F);
    while (!b.c.empty()) {
        FqPoly r = fq_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.degree();
}

/// Number of distinct roots of f in Fq: deg gcd(f, y^q - y), with y^q
/// computed by square-and-multiply modulo f.
inline long fq_root_count(const Fq& F, const FqPoly& f) {
    if (f.c.empty()) throw MathError("fq_root_count: zero polynomial");
    if (f.degree() == 0) return 0;
    long q = F.size();
    // y^q mod f
    FqPoly y;
    y.c = {F.zero(), F.one()};
    y = fq_mod(F, y, f);
    FqPoly acc;
    acc.c = {F.one()};
    FqPoly base = y;
    long e = q;
    while (e) {
        if (e & 1) acc = fq_mulmod(F, acc, base, f);
        e >>= 1;
        if (e) base = fq_mulmod(F, base, base, f);
    }
    // acc - y  (with y reduced mod f)
    FqPoly yy;
    yy.c = {F.zero(), F.one()};
    yy = fq_mod(F, yy, f);
    size_t n = std::max(acc.c.size(), yy.c.size());
    acc.c.resize(n, F.zero());
    for (size_t i = 0; i < yy.c.size(); ++i) acc.c[i] = F.sub(acc.c[i], yy.c[i]);
    acc.trim(F);
    // f | y^q - y: f is squarefree and splits, every root is in Fq
    if (acc.c.empty()) return f.degree();
    int d = fq_gcd_degree(F, f, acc);
    return d < 0 ? 0 : d;
}

} // namespace detail

/// Reduces an integral quartic mod p; throws when p divides the content.
inline std::vector<std::pair<Exp3, long>> reduce_form_mod_p(const TernaryForm& f, long p) {
    TernaryForm prim = f.primitive_part();
    std::vector<std::pair<Exp3, long>> out;
    bool all_zero = true;
    for (auto& [e, c] : prim.terms()) {
        Int n = num(c) % p;
        long r = ((n.convert_to<long>()) % p + p) % p;
        if (r != 0) all_zero = false;
        out.push_back({e, r});
    }
    if (all_zero) throw MathError("curve degenerates mod p (content divisible by p)");
    return out;
}

/// Number of projective points of F = 0 over the field.  Affine chart z = 1
/// is swept per x-value with root counts from gcd(f(y), y^q - y); the line
/// z = 0 is handled separately.  Parallel over x-ranges, deterministic sum.
inline long count_points(const TernaryForm& f, const Fq& field) {
    if (f.is_zero() || f.degree() != 4) throw MathError("count_points: expected a quartic form");
    auto coeffs = reduce_form_mod_p(f, field.p());
    const long q = field.size();

    auto slice_poly = [&](const Fq::Elem& X, const Fq::Elem& Z) {
        // f(X, y, Z) as a polynomial in y
        detail::FqPoly g;
        g.c.assign(5, field.zero());
        for (auto& [e, c] : coeffs) {
            if (!c) continue;
            Fq::Elem t = field.from_int(c);
            t = field.mul(t, field.pow(X, e[0]));
            t = field.mul(t, field.pow(Z, e[2]));
            g.c[e[1]] = field.add(g.c[e[1]], t);
        }
        g.trim(field);
        return g;
    };

    auto count_range = [&](long lo, long hi) {
        long n = 0;
        for (long i = lo; i < hi; ++i) {
            detail::FqPoly g = slice_poly(field.from_index(i), field.one());
            if (g.c.empty())
                throw MathError("count_points: curve contains an affine line (degenerate)");
            n += detail::fq_root_count(field, g);
        }
        return n;
    };

    unsigned nthreads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    long chunk = (q + nthreads - 1) / nthreads;
    std::vector<std::future<long>> futs;
    for (unsigned t = 0; t < nthreads; ++t) {
        long lo = t * chunk, hi = std::min(q, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, count_range, lo, hi));
    }
    long n = 0;
    for (auto& fu : futs) n += fu.get();

    // line at infinity: points (1 : y : 0) and (0 : 1 : 0)
    detail::FqPoly ginf = slice_poly(field.one(), field.zero());
    if (ginf.c.empty())
        throw MathError("count_points: curve contains the line z = 0 (degenerate)");
    n += detail::fq_root_count(field, ginf);
    {
        Fq::Elem acc = field.zero();
        for (auto& [e, c] : coeffs)
            if (e[0] == 0 && e[2] == 0) acc = field.add(acc, field.from_int(c));
        if (field.is_zero(acc)) ++n;
    }
    return n;
}

/// Oracle: plain enumeration of the projective plane.
inline long count_points_enum(const TernaryForm& f, const Fq& field) {
    auto coeffs = reduce_form_mod_p(f, field.p());
    auto eval = [&](const Fq::Elem& X, const Fq::Elem& Y, const Fq::Elem& Z) {
        Fq::Elem acc = field.zero();
        for (auto& [e, c] : coeffs) {
            if (!c) continue;
            Fq::Elem t = field.from_int(c);
            t = field.mul(t, field.pow(X, e[0]));
            t = field.mul(t, field.pow(Y, e[1]));
            t = field.mul(t, field.pow(Z, e[2]));
            acc = field.add(acc, t);
        }
        return field.is_zero(acc);
    };
    long n = 0;
    const long q = field.size();
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j)
            if (eval(field.from_index(i), field.from_index(j), field.one())) ++n;
    for (long j = 0; j < q; ++j)
        if (eval(field.one(), field.from_index(j), field.zero())) ++n;
    if (eval(field.zero(), field.one(), field.zero())) ++n;
    return n;
}

/// True when the reduction mod p is a smooth plane quartic (no projective
/// singular point over F_p).
inline bool good_reduction(const TernaryForm& f, long p) {
    auto coeffs = reduce_form_mod_p(f, p);
    Fq field(p, 1);
    std::array<std::vector<std::pair<Exp3, long>>, 3> partials;
    for (int axis = 0; axis < 3; ++axis) {
        for (auto& [e, c] : coeffs) {
            if (e[axis] == 0 || c == 0) continue;
            Exp3 e2 = e;
            --e2[axis];
            long cc = (c * e[axis]) % p;
            if (cc) partials[axis].push_back({e2, cc});
        }
    }
    auto eval_terms = [&](const std::vector<std::pair<Exp3, long>>& terms, long X, long Y, long Z) {
        long acc = 0;
        auto pw = [&](long b, int e) {
            long r = 1;
            for (int i = 0; i < e; ++i) r = r * b % p;
            return r;
        };
        for (auto& [e, c] : terms) acc = (acc + c * pw(X, e[0]) % p * pw(Y, e[1]) % p * pw(Z, e[2])) % p;
        return acc;
    };
    auto singular_at = [&](long X, long Y, long Z) {
        if (eval_terms(coeffs, X, Y, Z) != 0) return false;
        for (int axis = 0; axis < 3; ++axis)
            if (eval_terms(partials[axis], X, Y, Z) != 0) return false;
        return true;
    };
    for (long y = 0; y < p; ++y)
        for (long z = 0; z < p; ++z)
            if (singular_at(1, y, z)) return false;
    for (long z = 0; z < p; ++z)
        if (singular_at(0, 1, z)) return false;
    return !singular_at(0, 0, 1);
}

/// Frobenius data of a genus-3 curve mod p:
/// P(T) = 1 - e1 T + e2 T^2 - e3 T^3 + p e2 T^4 - p^2 e1 T^5 + p^3 T^6.
struct LPolynomial {
    long p;
    Int e1, e2, e3;

    Int value_at_1() const {
        return 1 - e1 + e2 - e3 + Int(p) * e2 - Int(p) * Int(p) * e1 + pow_int(Int(p), 3);
    }
    /// N_k from the power sums of the Frobenius eigenvalues (Newton).
    Int point_count(int k) const {
        Int sigma[7] = {1, e1, e2, e3, Int(p) * e2, Int(p) * Int(p) * e1, pow_int(Int(p), 3)};
        std::vector<Int> ps(k + 1);
        for (int n = 1; n <= k; ++n) {
            Int s = 0;
            for (int i = 1; i < n; ++i) s += (i % 2 == 1 ? 1 : -1) * sigma[i] * ps[n - i];
            s += (n % 2 == 1 ? 1 : -1) * Int(n) * sigma[n];
            ps[n] = s;
        }
        return pow_int(Int(p), k) + 1 - ps[k];
    }
};

/// Weil bound check |N_k - (p^k + 1)| <= 6 p^{k/2}, exactly: s^2 <= 36 p^k.
inline bool weil_bound_ok(long p, int k, long count) {
    Int s = pow_int(Int(p), k) + 1 - count;
    return s * s <= 36 * pow_int(Int(p), k);
}

/// Reconstructs the L-polynomial from N_1, N_2, N_3 via Newton's identities;
/// integrality of the intermediate quantities is asserted.
inline LPolynomial l_polynomial(const TernaryForm& f, long p) {
    if (!good_reduction(f, p)) throw MathError("l_polynomial: bad reduction at p");
    long n1 = count_points(f, Fq(p, 1));
    long n2 = count_points(f, Fq(p, 2));
    long n3 = count_points(f, Fq(p, 3));
    for (int k = 1; k <= 3; ++k)
        if (!weil_bound_ok(p, k, k == 1 ? n1 : k == 2 ? n2 : n3))
            throw MathError("l_polynomial: Weil bound violated (counting bug?)");
    Int s1 = Int(p) + 1 - n1;
    Int s2 = pow_int(Int(p), 2) + 1 - n2;
    Int s3 = pow_int(Int(p), 3) + 1 - n3;
    Int e1 = s1;
    Int t2 = s1 * s1 - s2;
    if (t2 % 2 != 0) throw MathError("l_polynomial: e2 not integral (counting bug?)");
    Int e2 = t2 / 2;
    Int t3 = s1 * s1 * s1 - 3 * s1 * s2 + 2 * s3;
    if (t3 % 6 != 0) throw MathError("l_polynomial: e3 not integral (counting bug?)");
    Int e3 = t3 / 6;
    return LPolynomial{p, e1, e2, e3};
}

/// #J(F_p) = P(1).
inline Int jacobian_order(const TernaryForm& f, long p) {
    Int v = l_polynomial(f, p).value_at_1();
    if (v <= 0) throw MathError("jacobian_order: nonpositive P(1) (counting bug?)");
    return v;
}

} // namespace x237
