#pragma once

#include "x237/fixtures_data.hpp"
#include "x237/numeric.hpp"

#include <array>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace x237 {

using SieveTriple = std::array<long, 3>;

/// A componentwise congruence constraint on the sieve coefficients
/// (n1, n2, n3): a modulus triple and the allowed residue triples.
struct SieveConstraint {
    SieveTriple modulus{1, 1, 1};
    std::set<SieveTriple> allowed;
    std::string provenance;
};

/// Accumulated sieve knowledge: a modulus triple and the surviving residues.
struct SieveState {
    SieveTriple modulus{1, 1, 1};
    std::set<SieveTriple> survivors;

    bool empty() const { return survivors.empty(); }

    /// Survivors reduced componentwise to a divisor modulus.
    std::set<SieveTriple> reduced(const SieveTriple& m) const {
        for (int i = 0; i < 3; ++i)
            if (m[i] < 1 || modulus[i] % m[i] != 0)
                throw MathError("SieveState::reduced: modulus does not divide");
        std::set<SieveTriple> out;
        for (auto& t : survivors) out.insert({t[0] % m[0], t[1] % m[1], t[2] % m[2]});
        return out;
    }
};

/// The trivial state: everything allowed at modulus (1,1,1).
inline SieveState initial_sieve_state() {
    SieveState s;
    s.survivors.insert({0, 0, 0});
    return s;
}

/// Intersects a constraint into the state: both sides are lifted to the
/// componentwise lcm modulus and the allowed sets intersected.  An empty
/// survivor set is a meaningful result, not an error.
inline SieveState combine(const SieveState& state, const SieveConstraint& c) {
    SieveTriple m;
    for (int i = 0; i < 3; ++i) {
        if (state.modulus[i] < 1 || c.modulus[i] < 1)
            throw MathError("combine: moduli must be positive");
        m[i] = std::lcm(state.modulus[i], c.modulus[i]);
    }
    SieveState out;
    out.modulus = m;
    SieveTriple steps{m[0] / state.modulus[0], m[1] / state.modulus[1], m[2] / state.modulus[2]};
    for (auto& s : state.survivors)
        for (long i = 0; i < steps[0]; ++i)
            for (long j = 0; j < steps[1]; ++j)
                for (long k = 0; k < steps[2]; ++k) {
                    SieveTriple t{s[0] + i * state.modulus[0], s[1] + j * state.modulus[1],
                                  s[2] + k * state.modulus[2]};
                    SieveTriple r{t[0] % c.modulus[0], t[1] % c.modulus[1], t[2] % c.modulus[2]};
                    if (c.allowed.count(r)) out.survivors.insert(t);
                }
    return out;
}

/// Materializes { (n1,n2,n3) mod m : c1 n1 + c2 n2 + c3 n3 in targets } as an
/// explicit constraint.
inline SieveConstraint linear_constraint(const SieveTriple& coeffs, const std::set<long>& targets,
                                         long modulus, std::string provenance = {}) {
    if (modulus < 2) throw MathError("linear_constraint: modulus must be >= 2");
    SieveConstraint c;
    c.modulus = {modulus, modulus, modulus};
    c.provenance = std::move(provenance);
    std::set<long> tgt;
    for (long t : targets) tgt.insert(((t % modulus) + modulus) % modulus);
    for (long a = 0; a < modulus; ++a)
        for (long b = 0; b < modulus; ++b)
            for (long d = 0; d < modulus; ++d) {
                long v = (coeffs[0] * a + coeffs[1] * b + coeffs[2] * d) % modulus;
                v = (v + modulus) % modulus;
                if (tgt.count(v)) c.allowed.insert({a, b, d});
            }
    return c;
}

/// The vector-valued analogue: images q1, q2, q3 in (Z/m)^2 and a set of
/// allowed image pairs.
inline SieveConstraint vector_linear_constraint(const std::array<std::array<long, 2>, 3>& images,
                                                const std::set<std::array<long, 2>>& targets,
                                                long modulus, std::string provenance = {}) {
    if (modulus < 2) throw MathError("vector_linear_constraint: modulus must be >= 2");
    SieveConstraint c;
    c.modulus = {modulus, modulus, modulus};
    c.provenance = std::move(provenance);
    for (long a = 0; a < modulus; ++a)
        for (long b = 0; b < modulus; ++b)
            for (long d = 0; d < modulus; ++d) {
                std::array<long, 2> v;
                for (int i = 0; i < 2; ++i) {
                    long s = a * images[0][i] + b * images[1][i] + d * images[2][i];
                    v[i] = ((s % modulus) + modulus) % modulus;
                }
                if (targets.count(v)) c.allowed.insert({a, b, d});
            }
    return c;
}

/// Constraint file format (comment lines start with '#'):
///   mod m1 m2 m3            explicit residue list follows, one triple a line;
///                           an "exclude" line flips the list to a complement
///   linear c1 c2 c3 mod m targets t1 t2 ...
///   vlinear mod m q1a q1b q2a q2b q3a q3b targets a1 b1 a2 b2 ...
inline SieveConstraint parse_sieve_constraint(std::istream& in, std::string provenance = {}) {
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    if (rows.empty()) throw ParseError("sieve constraint: empty input");
    const auto& head = rows[0];
    auto to_long = [](const std::string& s) {
        try {
            return std::stol(s);
        } catch (...) {
            throw ParseError("sieve constraint: bad integer '" + s + "'");
        }
    };
    if (head[0] == "linear") {
        if (head.size() < 8 || head[4] != "mod" || head[6] != "targets")
            throw ParseError("sieve constraint: malformed linear record");
        SieveTriple coeffs{to_long(head[1]), to_long(head[2]), to_long(head[3])};
        long m = to_long(head[5]);
        std::set<long> targets;
        for (size_t i = 7; i < head.size(); ++i) targets.insert(to_long(head[i]));
        return linear_constraint(coeffs, targets, m, std::move(provenance));
    }
    if (head[0] == "vlinear") {
        if (head.size() < 12 || head[1] != "mod" || head[9] != "targets" ||
            (head.size() - 10) % 2 != 0)
            throw ParseError("sieve constraint: malformed vlinear record");
        long m = to_long(head[2]);
        std::array<std::array<long, 2>, 3> images;
        for (int i = 0; i < 3; ++i)
            images[i] = {to_long(head[3 + 2 * i]), to_long(head[4 + 2 * i])};
        std::set<std::array<long, 2>> targets;
        for (size_t i = 10; i + 1 < head.size(); i += 2)
            targets.insert({to_long(head[i]), to_long(head[i + 1])});
        return vector_linear_constraint(images, targets, m, std::move(provenance));
    }
    if (head[0] == "mod") {
        if (head.size() != 4) throw ParseError("sieve constraint: malformed mod header");
        SieveConstraint c;
        c.modulus = {to_long(head[1]), to_long(head[2]), to_long(head[3])};
        c.provenance = std::move(provenance);
        bool exclude = false;
        std::set<SieveTriple> listed;
        for (size_t r = 1; r < rows.size(); ++r) {
            if (rows[r].size() == 1 && rows[r][0] == "exclude") {
                exclude = true;
                continue;
            }
            if (rows[r].size() != 3) throw ParseError("sieve constraint: expected residue triple");
            SieveTriple t;
            for (int i = 0; i < 3; ++i) {
                t[i] = to_long(rows[r][i]);
                if (t[i] < 0 || t[i] >= c.modulus[i])
                    throw ParseError("sieve constraint: residue out of range");
            }
            listed.insert(t);
        }
        if (!exclude) {
            c.allowed = std::move(listed);
        } else {
            for (long a = 0; a < c.modulus[0]; ++a)
                for (long b = 0; b < c.modulus[1]; ++b)
                    for (long d = 0; d < c.modulus[2]; ++d)
                        if (!listed.count({a, b, d})) c.allowed.insert({a, b, d});
        }
        return c;
    }
    throw ParseError("sieve constraint: unknown record '" + head[0] + "'");
}

inline SieveConstraint parse_sieve_constraint(const std::string& text, std::string provenance = {}) {
    std::istringstream is(text);
    return parse_sieve_constraint(is, std::move(provenance));
}

/// The C5 elimination chain over the shipped per-prime constraints, with the
/// intermediate states kept for inspection.  The final state must be empty;
/// that emptiness is conditional on the ingested fixture data and on the
/// subgroup generated by the known points having index prime to 14 in the
/// full Mordell-Weil group, which is consumed as a documented assumption.
struct C5ChainResult {
    SieveState after_2_and_23;  ///< modulus (4,4,4)
    SieveState after_97;        ///< modulus (28,28,28); reduce mod 14 for the survivors
    SieveState final_state;     ///< empty on success
    std::vector<std::pair<std::string, SieveState>> stages;
};

inline C5ChainResult run_c5_chain() {
    auto at2 = parse_sieve_constraint(fixtures::sieve_at_2, "component group at 2");
    auto at3 = parse_sieve_constraint(fixtures::sieve_at_3, "component group at 3");
    auto at23 = parse_sieve_constraint(fixtures::sieve_at_23, "p=23 image");
    auto at97 = parse_sieve_constraint(fixtures::sieve_at_97, "p=97 image (published survivors)");
    auto at13 = parse_sieve_constraint(fixtures::sieve_at_13, "p=13 image (published exclusion)");

    C5ChainResult out;
    SieveState s = initial_sieve_state();
    s = combine(s, at23);
    s = combine(s, at2);
    out.after_2_and_23 = s;
    out.stages.push_back({"2 and 23", s});
    s = combine(s, at3);
    out.stages.push_back({"3", s});
    s = combine(s, at97);
    out.after_97 = s;
    out.stages.push_back({"97", s});
    s = combine(s, at13);
    out.final_state = s;
    out.stages.push_back({"13", s});
    return out;
}

} // namespace x237
