#pragma once

#include "x237/numeric.hpp"

#include <algorithm>
#include <vector>

namespace x237 {

/// Dense univariate polynomial over a commutative coefficient ring R.
/// R must be constructible from int and support +, -, *, ==.
/// Degree of the zero polynomial is -1.
template <class R>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(int c) { if (!(R(c) == R(0))) c_.push_back(R(c)); }
    UniPoly(const R& c) { if (!(c == R(0))) c_.push_back(c); }

    static UniPoly monomial(const R& c, size_t d) {
        UniPoly p;
        if (c == R(0)) return p;
        p.c_.assign(d + 1, R(0));
        p.c_[d] = c;
        return p;
    }
    static UniPoly from_coeffs(std::vector<R> c) {
        UniPoly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of X^i (zero beyond the stored range).
    R coeff(size_t i) const { return i < c_.size() ? c_[i] : R(0); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& leading() const {
        if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = R(0) - c;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == R(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly derivative() const {
        UniPoly r;
        for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * R(static_cast<int>(i)));
        r.trim();
        return r;
    }

    template <class A>
    A eval(const A& x) const {
        A acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + A(c_[i]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }
    std::vector<R> c_;
};

using RatPoly = UniPoly<Rat>;
/// Polynomials in an outer variable with coefficients in Q[u].
using RatBiPoly = UniPoly<RatPoly>;

/// Exact division helpers used by fraction-free elimination.
inline Rat div_exact(const Rat& a, const Rat& b) {
    if (b == 0) throw MathError("div_exact: division by zero");
    return a / b;
}

inline RatPoly div_exact(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw MathError("div_exact: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw MathError("div_exact: inexact polynomial division");
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
    for (int d = a.degree(); d >= b.degree();) {
        Rat f = rem[d] / b.leading();
        q[d - b.degree()] = f;
        for (int i = 0; i <= b.degree(); ++i) rem[d - b.degree() + i] -= f * b.coeff(i);
        while (d >= 0 && rem[d] == 0) --d;
    }
    for (int i = 0; i < b.degree(); ++i)
        if (rem[i] != 0) throw MathError("div_exact: inexact polynomial division");
    return RatPoly::from_coeffs(std::move(q));
}

/// Quotient and remainder over a field coefficient ring.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw MathError("divmod: division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    std::vector<Rat> q(std::max(0, a.degree() - db + 1), Rat(0));
    for (int d = a.degree(); d >= db; --d) {
        if (rem[d] == 0) continue;
        Rat f = rem[d] / b.leading();
        q[d - db] = f;
        for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.coeff(i);
    }
    return {RatPoly::from_coeffs(std::move(q)), RatPoly::from_coeffs(std::move(rem))};
}

inline bool divides(const RatPoly& d, const RatPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        // monic normalization
        Rat lc = a.leading();
        std::vector<Rat> c(a.coeffs());
        for (auto& x : c) x /= lc;
        a = RatPoly::from_coeffs(std::move(c));
    }
    return a;
}

/// Text form of a rational univariate polynomial, highest degree first,
/// e.g. "7u^6 - u^3 + 1".  Round-trips with parse_unipoly.
inline std::string to_string(const RatPoly& f, char var = 'u') {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int d = f.degree(); d >= 0; --d) {
        Rat c = f.coeff(d);
        if (c == 0) continue;
        if (first) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        bool shown = !(c == 1 && d > 0);
        if (shown) s += to_string(c);
        if (d > 0) {
            if (shown) s += "*";
            s += var;
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

/// Parses the same grammar as TernaryForm but in one variable (u or v).
inline RatPoly parse_unipoly(const std::string& text, char var = 'u') {
    size_t pos = 0;
    auto peek = [&]() -> int {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos < text.size() ? text[pos] : -1;
    };
    auto parse_uint = [&]() -> Int {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer at position " + std::to_string(pos));
        return Int(text.substr(start, pos - start));
    };
    std::map<int, Rat> coeffs;
    int sign = 1;
    int c = peek();
    if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos;
    }
    for (;;) {
        Rat coeff = sign;
        int deg = 0;
        bool saw = false;
        for (;;) {
            c = peek();
            if (c == '*') {
                ++pos;
                c = peek();
            }
            if (std::isdigit(c)) {
                Int n = parse_uint();
                c = peek();
                if (c == '/') {
                    ++pos;
                    peek();
                    Int d = parse_uint();
                    if (d == 0) throw ParseError("zero denominator");
                    coeff *= Rat(n, d);
                } else if (c == '^') {
                    ++pos;
                    peek();
                    coeff *= pow_rat(Rat(n), parse_uint().convert_to<long>());
                } else {
                    coeff *= Rat(n);
                }
                saw = true;
            } else if (c == var) {
                ++pos;
                int e = 1;
                if (peek() == '^') {
                    ++pos;
                    peek();
                    e = parse_uint().convert_to<int>();
                }
                deg += e;
                saw = true;
            } else {
                break;
            }
        }
        if (!saw) throw ParseError("expected term at position " + std::to_string(pos));
        coeffs[deg] += coeff;
        c = peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++pos;
            continue;
        }
        break;
    }
    if (pos != text.size()) throw ParseError("trailing input: '" + text.substr(pos) + "'");
    std::vector<Rat> v(coeffs.empty() ? 0 : coeffs.rbegin()->first + 1, Rat(0));
    for (auto& [d, cc] : coeffs) v[d] = cc;
    return RatPoly::from_coeffs(std::move(v));
}

/// Fraction-free (Bareiss) determinant; R needs div_exact.
template <class R>
R det_bareiss(std::vector<std::vector<R>> a) {
    const size_t n = a.size();
    if (n == 0) return R(1);
    int sign = 1;
    R prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == R(0)) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == R(0)) ++piv;
            if (piv == n) return R(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = div_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    R d = a[n - 1][n - 1];
    return sign == 1 ? d : R(0) - d;
}

/// Sylvester resultant of f, g with respect to their (outer) variable.
/// For f, g in (Q[u])[v] this eliminates v and returns an element of Q[u].
template <class R>
R resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (f.is_zero() || g.is_zero()) throw MathError("resultant of zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return R(1);
    std::vector<std::vector<R>> s(m + n, std::vector<R>(m + n, R(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
    return det_bareiss(std::move(s));
}

} // namespace x237
