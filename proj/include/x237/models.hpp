#pragma once

#include "x237/intmat.hpp"
#include "x237/numeric.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace x237 {

/// Intersection data of a regular special fiber: component multiplicities m
/// and the symmetric intersection matrix M with M m = 0.
struct IntersectionData {
    std::vector<std::string> labels;  // optional
    std::vector<Int> mult;
    IntMatrix matrix;
};

/// Component group as its invariant factors d_1 | d_2 | ... (all > 1).
struct ComponentGroup {
    std::vector<Int> invariant_factors;

    friend bool operator==(const ComponentGroup& a, const ComponentGroup& b) {
        return a.invariant_factors == b.invariant_factors;
    }
    std::string to_string() const {
        if (invariant_factors.empty()) return "trivial";
        std::string s;
        for (size_t i = 0; i < invariant_factors.size(); ++i) {
            if (i) s += " x ";
            s += "Z/" + invariant_factors[i].str();
        }
        return s;
    }
};

inline bool validate_fiber(const IntersectionData& data) {
    const long n = data.matrix.rows();
    if (data.matrix.cols() != n || static_cast<long>(data.mult.size()) != n) return false;
    for (auto& m : data.mult)
        if (m <= 0) return false;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (data.matrix.at(i, j) != data.matrix.at(j, i)) return false;
    for (long i = 0; i < n; ++i) {
        Int dot = 0;
        for (long j = 0; j < n; ++j) dot += data.matrix.at(i, j) * data.mult[j];
        if (dot != 0) return false;
    }
    return true;
}

/// The component group of the fiber: view the multiplicity vector as a
/// Z-linear map Z^n -> Z and take the quotient of its kernel by the span of
/// the rows of the intersection matrix.  The quotient must be finite
/// (connected fiber); its invariant factors are returned.
inline ComponentGroup component_group(const IntersectionData& data) {
    if (!validate_fiber(data))
        throw MathError("component_group: inconsistent intersection data (M m != 0)");
    const long n = data.matrix.rows();
    IntMatrix kernel = hnf_kernel_basis(data.mult);  // (n-1) x n rows
    const long r = kernel.rows();
    // express each row of M in the kernel basis
    IntMatrix rel(n, r);
    for (long i = 0; i < n; ++i) {
        std::vector<Int> row(n);
        for (long j = 0; j < n; ++j) row[j] = data.matrix.at(i, j);
        auto x = solve_left(kernel, row);
        if (!x)
            throw MathError("component_group: matrix row not in the kernel of the multiplicities");
        for (long j = 0; j < r; ++j) rel.at(i, j) = (*x)[j];
    }
    SmithResult snf = smith_normal_form(rel.transpose());
    long rank = 0;
    for (auto& d : snf.diag)
        if (d != 0) ++rank;
    if (rank < r)
        throw MathError("component_group: positive free rank (disconnected dual graph?)");
    ComponentGroup out;
    for (auto& d : snf.diag)
        if (d > 1) out.invariant_factors.push_back(d);
    return out;
}

/// Matrix file format: comment lines start with '#'; then n, the n
/// multiplicities, n rows of n integers, and an optional trailing
/// "labels ..." line.
inline IntersectionData parse_intersection_data(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> row;
        while (ls >> tok) row.push_back(tok);
        if (!row.empty() && row[0] == "labels") {
            labels.assign(row.begin() + 1, row.end());
            continue;
        }
        tokens.insert(tokens.end(), row.begin(), row.end());
    }
    if (tokens.empty()) throw ParseError("intersection data: empty input");
    size_t pos = 0;
    auto next = [&]() -> Int {
        if (pos >= tokens.size()) throw ParseError("intersection data: truncated input");
        return Int(tokens[pos++]);
    };
    long n = next().convert_to<long>();
    if (n < 1 || n > 4096) throw ParseError("intersection data: implausible size");
    IntersectionData d;
    d.labels = std::move(labels);
    d.mult.resize(n);
    for (long i = 0; i < n; ++i) d.mult[i] = next();
    d.matrix = IntMatrix(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) d.matrix.at(i, j) = next();
    if (pos != tokens.size()) throw ParseError("intersection data: trailing tokens");
    if (!d.labels.empty() && static_cast<long>(d.labels.size()) != n)
        throw ParseError("intersection data: label count mismatch");
    return d;
}

inline IntersectionData parse_intersection_data(const std::string& text) {
    std::istringstream is(text);
    return parse_intersection_data(is);
}

/// The cycle fiber with n multiplicity-1 components, each meeting its two
/// neighbors (self-intersection -2); its component group is Z/n.
inline IntersectionData make_cycle_fiber(int n) {
    if (n < 2) throw MathError("make_cycle_fiber: need n >= 2");
    IntersectionData d;
    d.mult.assign(n, Int(1));
    d.matrix = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        d.matrix.at(i, i) = -2;
        d.matrix.at(i, (i + 1) % n) += 1;
        d.matrix.at(i, (i + n - 1) % n) += 1;
    }
    return d;
}

} // namespace x237
