#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace x237 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Raised when a mathematical precondition is violated (maps to CLI exit 3).
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a p-adic decision could not be certified within the
/// configured precision budget (maps to CLI exit 4).
struct PrecisionLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised on malformed textual input (maps to CLI exit 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

/// Sentinel for v_p(0).
inline constexpr long val_infinity = std::numeric_limits<long>::max() / 4;

inline long valuation(Int n, const Int& p) {
    if (n == 0) return val_infinity;
    if (p < 2) throw MathError("valuation: p must be >= 2");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline long valuation(const Rat& r, const Int& p) {
    if (r == 0) return val_infinity;
    return valuation(num(r), p) - valuation(den(r), p);
}

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// base^e for signed e; base must be nonzero when e < 0.
inline Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat r = 1, b = base;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }
    if (base == 0) throw MathError("pow_rat: 0 to a negative power");
    return 1 / pow_rat(base, -e);
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

namespace detail {

inline Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n composite, odd, not a perfect power of a found factor.
    for (Int c = 1; ; ++c) {
        Int x = 2, y = 2, d = 1;
        Int ys = y, q = 1;
        long m = 64;
        while (d == 1) {
            x = y;
            for (long i = 0; i < m; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < m && d == 1) {
                ys = y;
                long lim = std::min<long>(64, m - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
                k += lim;
            }
            m *= 2;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

inline void factor_into(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

/// Prime factorization of n > 0.
inline std::map<Int, int> factorize(Int n) {
    if (n <= 0) throw MathError("factorize: argument must be positive");
    std::map<Int, int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    if (n > 1) detail::factor_into(n, out);
    return out;
}

/// Exact k-th root of n, if it exists. Negative n allowed for odd k.
inline std::optional<Int> iroot_exact(const Int& n, unsigned k) {
    if (k == 0) throw MathError("iroot_exact: k must be positive");
    if (n < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = iroot_exact(-n, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (n == 0) return Int(0);
    Int lo = 0, hi = Int(1) << (msb(n) / k + 2);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (pow_int(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (pow_int(lo, k) == n) return lo;
    return std::nullopt;
}

/// Parses expressions like "-13^3*221173^3/(2^2*3*43^7)" into an exact rational.
/// Grammar: expr := ['-'] factor (('*'|'/') factor)* ;
///          factor := INT ['^' INT] | '(' expr ')' ['^' INT] | "inf" is NOT accepted here.
inline Rat parse_rational_expr(const std::string& s) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto parse_int = [&]() -> Int {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer in rational expression: " + s);
        return Int(s.substr(start, pos - start));
    };
    std::function<Rat()> parse_expr;
    auto parse_factor = [&]() -> Rat {
        skip();
        Rat base;
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            base = parse_expr();
            skip();
            if (pos >= s.size() || s[pos] != ')') throw ParseError("missing ')' in: " + s);
            ++pos;
        } else {
            base = Rat(parse_int());
        }
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip();
            bool neg = false;
            if (pos < s.size() && s[pos] == '-') {
                neg = true;
                ++pos;
            }
            Int e = parse_int();
            long el = e.convert_to<long>();
            base = pow_rat(base, neg ? -el : el);
        }
        return base;
    };
    parse_expr = [&]() -> Rat {
        skip();
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        Rat acc = parse_factor();
        for (;;) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                acc *= parse_factor();
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                Rat d = parse_factor();
                if (d == 0) throw ParseError("division by zero in: " + s);
                acc /= d;
            } else {
                break;
            }
        }
        return neg ? -acc : acc;
    };
    Rat r = parse_expr();
    skip();
    if (pos != s.size()) throw ParseError("trailing junk in rational expression: " + s);
    return r;
}

inline std::string to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

} // namespace x237
