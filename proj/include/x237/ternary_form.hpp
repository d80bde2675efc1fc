#pragma once

#include "x237/numeric.hpp"
#include "x237/unipoly.hpp"

#include <array>
#include <map>
#include <sstream>
#include <string>

namespace x237 {

using Exp3 = std::array<int, 3>;

enum class Axis { X = 0, Y = 1, Z = 2 };

inline const char* axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        case Axis::Z: return "z";
    }
    return "?";
}

/// Monomial orders used for reduction.
/// Grevlex with x > y > z, and lex with a chosen axis ranked first
/// (the elimination order for reduce_mod_form).
struct MonomialOrder {
    enum Kind { Grevlex, LexAxisFirst } kind = Grevlex;
    Axis axis = Axis::Z;

    bool less(const Exp3& a, const Exp3& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (kind == Grevlex) {
            if (da != db) return da < db;
            // grevlex: compare the last nonzero entry of a-b; a < b iff it is positive
            for (int i = 2; i >= 0; --i) {
                if (a[i] != b[i]) return a[i] > b[i];
            }
            return false;
        }
        int first = static_cast<int>(axis);
        std::array<int, 3> ord{first, (first + 1) % 3, (first + 2) % 3};
        for (int i : ord)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// Sparse homogeneous polynomial in x, y, z with exact rational coefficients.
/// Canonical: the term map stores only nonzero coefficients, sorted by
/// exponent triple, so equal polynomials compare equal structurally.
class TernaryForm {
public:
    TernaryForm() = default;

    static TernaryForm zero() { return {}; }
    static TernaryForm monomial(const Rat& c, Exp3 e) {
        TernaryForm f;
        f.add_term(e, c);
        return f;
    }
    static TernaryForm variable(Axis a) {
        Exp3 e{0, 0, 0};
        e[static_cast<int>(a)] = 1;
        return monomial(1, e);
    }
    static TernaryForm constant(const Rat& c) { return monomial(c, {0, 0, 0}); }

    bool is_zero() const { return terms_.empty(); }
    /// Degree of the form; zero form reports -1.
    int degree() const { return degree_; }
    const std::map<Exp3, Rat>& terms() const { return terms_; }
    Rat coeff(Exp3 e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(Exp3 e, const Rat& c) {
        if (c == 0) return;
        int d = e[0] + e[1] + e[2];
        if (degree_ < 0)
            degree_ = d;
        else if (d != degree_)
            throw MathError("TernaryForm: inhomogeneous term (degree " + std::to_string(d) +
                            " into form of degree " + std::to_string(degree_) + ")");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        if (terms_.empty()) degree_ = -1;
    }

    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
        check_compatible(a, b, "+");
        TernaryForm r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) {
        check_compatible(a, b, "-");
        TernaryForm r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    TernaryForm operator-() const {
        TernaryForm r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
        TernaryForm r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    friend TernaryForm operator*(const Rat& c, const TernaryForm& a) {
        TernaryForm r;
        for (auto& [e, ca] : a.terms_) r.add_term(e, c * ca);
        return r;
    }
    TernaryForm& operator+=(const TernaryForm& o) { return *this = *this + o; }
    TernaryForm& operator-=(const TernaryForm& o) { return *this = *this - o; }
    TernaryForm& operator*=(const TernaryForm& o) { return *this = *this * o; }

    friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator<(const TernaryForm& a, const TernaryForm& b) {
        return a.terms_ < b.terms_;
    }

    TernaryForm pow(unsigned e) const {
        TernaryForm r = constant(1);
        TernaryForm b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    TernaryForm partial(Axis a) const {
        int i = static_cast<int>(a);
        TernaryForm r;
        for (auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exp3 e2 = e;
            --e2[i];
            r.add_term(e2, c * e[i]);
        }
        return r;
    }

    template <class T>
    auto eval(const T& x, const T& y, const T& z) const {
        Rat acc = 0;
        for (auto& [e, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < e[0]; ++i) t *= x;
            for (int i = 0; i < e[1]; ++i) t *= y;
            for (int i = 0; i < e[2]; ++i) t *= z;
            acc += t;
        }
        return acc;
    }

    /// F^g with (F^g)(v) = F(g v) for a 3x3 matrix g acting on column vectors.
    TernaryForm compose(const std::array<std::array<Rat, 3>, 3>& g) const {
        std::array<TernaryForm, 3> img;
        for (int i = 0; i < 3; ++i) {
            TernaryForm row;
            for (int j = 0; j < 3; ++j) {
                if (g[i][j] == 0) continue;
                Exp3 e{0, 0, 0};
                e[j] = 1;
                row.add_term(e, g[i][j]);
            }
            img[i] = row;
        }
        TernaryForm r;
        for (auto& [e, c] : terms_) {
            TernaryForm t = constant(c);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < e[i]; ++k) t *= img[i];
            r += t;
        }
        return r;
    }

    /// Content c such that (1/c)*F has coprime integer coefficients, positive sign.
    Rat content() const {
        if (is_zero()) return 1;
        Int g = 0, l = 1;
        for (auto& [e, c] : terms_) {
            g = gcd(g, num(c));
            l = lcm(l, den(c));
        }
        return Rat(g, l);
    }
    TernaryForm primitive_part() const {
        if (is_zero()) return *this;
        return Rat(1) / content() * *this;
    }
    bool has_integer_coefficients() const {
        for (auto& [e, c] : terms_)
            if (den(c) != 1) return false;
        return true;
    }

    /// Dehomogenization: set the given axis to 1; the remaining two variables
    /// become (u, v) in increasing axis order. Result lives in (Q[u])[v].
    RatBiPoly dehomogenize(Axis unit) const {
        int ui = -1, vi = -1;
        for (int i = 0; i < 3; ++i) {
            if (i == static_cast<int>(unit)) continue;
            (ui < 0 ? ui : vi) = i;
        }
        std::map<int, std::map<int, Rat>> by_v;
        for (auto& [e, c] : terms_) by_v[e[vi]][e[ui]] += c;
        int maxv = by_v.empty() ? -1 : by_v.rbegin()->first;
        std::vector<RatPoly> outer(maxv + 1);
        for (auto& [dv, inner] : by_v) {
            int maxu = inner.rbegin()->first;
            std::vector<Rat> cs(maxu + 1, Rat(0));
            for (auto& [du, c] : inner) cs[du] = c;
            outer[dv] = RatPoly::from_coeffs(std::move(cs));
        }
        return RatBiPoly::from_coeffs(std::move(outer));
    }

    std::string to_string() const;
    static TernaryForm parse(const std::string& text);

private:
    static void check_compatible(const TernaryForm& a, const TernaryForm& b, const char* op) {
        if (!a.is_zero() && !b.is_zero() && a.degree_ != b.degree_)
            throw MathError(std::string("TernaryForm: degree mismatch in '") + op + "'");
    }

    std::map<Exp3, Rat> terms_;
    int degree_ = -1;
};

/// Remainder of g under repeated cancellation against f, so g = q*f + r with
/// no monomial of r divisible by the leading monomial of f.  With axis given,
/// the elimination order is lex with that axis first; f must then lead with a
/// pure power of the axis.  Without an axis, grevlex (x > y > z) is used and
/// the operation is total.  r == 0 certifies that f divides g.
inline TernaryForm reduce_mod_form(const TernaryForm& g, const TernaryForm& f,
                                   std::optional<Axis> axis = std::nullopt) {
    if (f.is_zero()) throw MathError("reduce_mod_form: zero divisor");
    MonomialOrder ord;
    if (axis) {
        ord = MonomialOrder{MonomialOrder::LexAxisFirst, *axis};
    } else {
        ord = MonomialOrder{MonomialOrder::Grevlex, Axis::Z};
    }
    auto leading = [&](const TernaryForm& p) {
        auto it = p.terms().begin();
        auto best = it;
        for (; it != p.terms().end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return best;
    };
    auto lt_f = leading(f);
    if (axis) {
        int i = static_cast<int>(*axis);
        const Exp3& e = lt_f->first;
        bool pure = e[i] == f.degree() && e[(i + 1) % 3] == 0 && e[(i + 2) % 3] == 0;
        if (!pure)
            throw MathError(std::string("reduce_mod_form: no pure power of ") + axis_name(*axis) +
                            " to eliminate against");
    }
    const Exp3 ef = lt_f->first;
    const Rat cf = lt_f->second;

    TernaryForm work = g, rem;
    while (!work.is_zero()) {
        auto lt = leading(work);
        Exp3 e = lt->first;
        Rat c = lt->second;
        if (e[0] >= ef[0] && e[1] >= ef[1] && e[2] >= ef[2]) {
            Exp3 q{e[0] - ef[0], e[1] - ef[1], e[2] - ef[2]};
            Rat fac = c / cf;
            for (auto& [e2, c2] : f.terms())
                work.add_term({e2[0] + q[0], e2[1] + q[1], e2[2] + q[2]}, -fac * c2);
        } else {
            rem.add_term(e, c);
            work.add_term(e, -c);
        }
    }
    return rem;
}

// --- text format -----------------------------------------------------------
//
// ASCII with + - * ^, variables x y z, integer or p/q rational literals,
// whitespace insignificant; juxtaposition also multiplies ("3x^2y").
// The printer and parser round-trip.

inline std::string TernaryForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponent order: x-heavy terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = e[0] + e[1] + e[2] > 0;
        bool coeff_shown = !(a == 1 && has_var);
        if (coeff_shown) os << x237::to_string(a);
        static const char* names[3] = {"x", "y", "z"};
        bool prev = coeff_shown;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (prev) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            prev = true;
        }
    }
    return os.str();
}

inline TernaryForm TernaryForm::parse(const std::string& text) {
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
    TernaryForm result;
    bool any = false;
    int sign = 1;
    int c = peek();
    if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos;
    }
    for (;;) {
        // one term: factors joined by '*' or juxtaposition
        Rat coeff = sign;
        Exp3 e{0, 0, 0};
        bool saw_factor = false;
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
                } else {
                    Rat base(n);
                    if (c == '^') {
                        ++pos;
                        peek();
                        Int p = parse_uint();
                        base = pow_rat(base, p.convert_to<long>());
                        coeff *= base;
                    } else {
                        coeff *= base;
                    }
                }
                saw_factor = true;
            } else if (c == 'x' || c == 'y' || c == 'z') {
                int vi = c == 'x' ? 0 : c == 'y' ? 1 : 2;
                ++pos;
                int exp = 1;
                if (peek() == '^') {
                    ++pos;
                    peek();
                    exp = parse_uint().convert_to<int>();
                }
                e[vi] += exp;
                saw_factor = true;
            } else {
                break;
            }
        }
        if (!saw_factor) throw ParseError("expected term at position " + std::to_string(pos));
        result.add_term(e, coeff);
        any = true;
        c = peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++pos;
            continue;
        }
        break;
    }
    if (pos != text.size()) throw ParseError("trailing input: '" + text.substr(pos) + "'");
    if (!any) throw ParseError("empty polynomial");
    return result;
}

} // namespace x237
