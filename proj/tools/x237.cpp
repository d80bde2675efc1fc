// Command-line surface: each subcommand maps 1-1 onto a library operation.
// Exit codes: 0 success, 2 malformed input, 3 violated mathematical
// precondition, 4 inconclusive p-adic decision.

#include "x237/x237.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace x237;

struct Output {
    bool as_json = false;

    void emit(const json& j, const std::string& text) const {
        if (as_json)
            std::cout << j.dump() << "\n";
        else
            std::cout << text << "\n";
    }
};

TernaryForm resolve_curve(const std::string& arg) {
    if (catalog().has_label(arg)) return catalog().by_label(arg).quartic;
    return TernaryForm::parse(arg);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic on Klein-quartic twists and the equation x^2 + y^3 = z^7"};
    app.require_subcommand(1);
    Output out;
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string poly_arg, curve_arg, file_arg;
    std::vector<std::string> coord_args, file_args, twist_args;
    long p_arg = 2;
    int k_arg = 1;
    long bound_arg = 100;
    int max_depth = default_max_depth();
    bool subset = false, minus = false;

    auto* covariants_cmd = app.add_subcommand("covariants", "invariant and covariants of a quartic");
    covariants_cmd->add_option("poly", poly_arg, "quartic (or catalog label C1..C10)")->required();

    auto* j_cmd = app.add_subcommand("j", "canonical map to the j-line at a point");
    j_cmd->add_option("poly", poly_arg)->required();
    j_cmd->add_option("coords", coord_args, "x y z")->expected(3);

    auto* recover_cmd = app.add_subcommand("recover", "solution attached to a curve point");
    recover_cmd->add_option("poly", poly_arg)->required();
    recover_cmd->add_option("coords", coord_args, "x y z")->expected(3);

    auto* local_cmd = app.add_subcommand("localtest", "p-adic residue-class solubility test");
    local_cmd->add_option("poly", poly_arg)->required();
    local_cmd->add_option("--p", p_arg, "prime (2, 3 or 7)")->required()->check(CLI::IsMember({2, 3, 7}));
    local_cmd->add_option("--max-depth", max_depth, "subdivision budget");

    auto* search_cmd = app.add_subcommand("search", "rational point search up to a height bound");
    search_cmd->add_option("curve", curve_arg)->required();
    search_cmd->add_option("--bound", bound_arg, "max |coordinate|")->required();
    search_cmd->add_flag("--subset", subset, "restrict to the C5 subset residue classes");

    auto* count_cmd = app.add_subcommand("count", "point count over F_{p^k}");
    count_cmd->add_option("curve", curve_arg)->required();
    count_cmd->add_option("--p", p_arg, "prime")->required();
    count_cmd->add_option("--k", k_arg, "extension degree (1..3)")->required();

    auto* jac_cmd = app.add_subcommand("jacobian-order", "#J(F_p) via the L-polynomial");
    jac_cmd->add_option("curve", curve_arg)->required();
    jac_cmd->add_option("--p", p_arg, "prime of good reduction")->required();

    auto* comp_cmd = app.add_subcommand("component-group", "component group from intersection data");
    comp_cmd->add_option("matrix-file", file_arg)->required();

    auto* sieve_cmd = app.add_subcommand("sieve", "intersect residue constraints on (n1,n2,n3)");
    sieve_cmd->add_option("files", file_args, "constraint files")->required()->expected(-1);

    auto* septic_cmd = app.add_subcommand("septic", "search c1 X^7 + c2 Y^7 + c3 Z^7 = 0");
    septic_cmd->add_option("coeffs", twist_args, "c1 c2 c3")->expected(3);
    septic_cmd->add_option("--bound", bound_arg, "max |coordinate|")->required();

    auto* twists_cmd = app.add_subcommand("twists", "twist generators");
    auto* case1_cmd = twists_cmd->add_subcommand("case1", "normalized mu_7-twist representatives");
    auto* fromcurve_cmd = twists_cmd->add_subcommand("from-curve", "quartic attached to Y^2 = X^3 + aX + b");
    fromcurve_cmd->add_option("ab", twist_args, "a b")->expected(2);
    fromcurve_cmd->add_flag("--minus", minus, "the minus twist");
    twists_cmd->require_subcommand(1);

    auto* thm_cmd = app.add_subcommand("verify-theorem", "recover every solution from the catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    out.as_json = format == "json";
    int exit_code = 0;

    if (*covariants_cmd) {
        CovariantSet cs = covariants(resolve_curve(poly_arg));
        out.emit({{"cmd", "covariants"},
                  {"psi0", to_string(cs.psi0)},
                  {"psi6", cs.psi6.to_string()},
                  {"psi14", cs.psi14.to_string()},
                  {"psi21", cs.psi21.to_string()}},
                 "psi0 = " + to_string(cs.psi0) + "\npsi6 = " + cs.psi6.to_string() +
                     "\npsi14 = " + cs.psi14.to_string() + "\npsi21 = " + cs.psi21.to_string());
    } else if (*j_cmd) {
        TernaryForm f = resolve_curve(poly_arg);
        JValue j = j_invariant(f, Int(coord_args[0]), Int(coord_args[1]), Int(coord_args[2]));
        auto P = ProjPoint(Int(coord_args[0]), Int(coord_args[1]), Int(coord_args[2]));
        out.emit({{"cmd", "j"}, {"point", P.to_string()}, {"j", j.to_string()}}, j.to_string());
    } else if (*recover_cmd) {
        TernaryForm f = resolve_curve(poly_arg);
        auto P = ProjPoint(Int(coord_args[0]), Int(coord_args[1]), Int(coord_args[2]));
        RecoverResult r = recover_solution(f, P);
        if (auto* s = std::get_if<PrimitiveSolution>(&r)) {
            out.emit({{"cmd", "recover"},
                      {"point", P.to_string()},
                      {"status", "ok"},
                      {"solution", s->to_string()}},
                     s->to_string());
        } else {
            auto& n = std::get<NoPrimitiveScaling>(r);
            out.emit({{"cmd", "recover"},
                      {"point", P.to_string()},
                      {"status", "no-primitive-scaling"},
                      {"obstructing_prime", n.obstructing_prime.str()}},
                     "no primitive scaling (obstruction at p = " + n.obstructing_prime.str() + ")");
        }
    } else if (*local_cmd) {
        LocalVerdict v = local_test(resolve_curve(poly_arg), p_arg, max_depth);
        for (auto& rc : v.admissible)
            out.emit({{"cmd", "localtest"},
                      {"p", p_arg},
                      {"class", rc.to_string()},
                      {"verdict", "admissible"}},
                     std::to_string(p_arg) + " " + rc.to_string() + " admissible");
        std::string verdict = v.max_depth_reached ? "inconclusive" : (v.passes ? "passes" : "fails");
        out.emit({{"cmd", "localtest"},
                  {"p", p_arg},
                  {"classes", v.admissible.size()},
                  {"verdict", verdict}},
                 std::to_string(p_arg) + " * " + verdict);
        if (v.max_depth_reached) exit_code = 4;
    } else if (*search_cmd) {
        std::optional<ResidueFilter> filter;
        if (subset) filter = c5_subset_filter();
        auto pts = point_search(resolve_curve(curve_arg), bound_arg, filter);
        for (auto& P : pts)
            out.emit({{"cmd", "search"}, {"point", P.to_string()}}, P.to_string());
        out.emit({{"cmd", "search"}, {"count", pts.size()}},
                 "# " + std::to_string(pts.size()) + " point(s)");
    } else if (*count_cmd) {
        Fq field(p_arg, k_arg);
        long n = count_points(resolve_curve(curve_arg), field);
        out.emit({{"cmd", "count"},
                  {"curve", curve_arg},
                  {"p", p_arg},
                  {"k", k_arg},
                  {"modulus", field.modulus_string()},
                  {"n", n}},
                 curve_arg + " " + std::to_string(p_arg) + " " + std::to_string(k_arg) + " " +
                     std::to_string(n));
    } else if (*jac_cmd) {
        LPolynomial L = l_polynomial(resolve_curve(curve_arg), p_arg);
        Int order = L.value_at_1();
        out.emit({{"cmd", "jacobian-order"},
                  {"curve", curve_arg},
                  {"p", p_arg},
                  {"e1", L.e1.str()},
                  {"e2", L.e2.str()},
                  {"e3", L.e3.str()},
                  {"order", order.str()}},
                 curve_arg + " " + std::to_string(p_arg) + " " + L.e1.str() + " " + L.e2.str() +
                     " " + L.e3.str() + " " + order.str());
    } else if (*comp_cmd) {
        IntersectionData d = parse_intersection_data(read_file(file_arg));
        ComponentGroup g = component_group(d);
        json factors = json::array();
        for (auto& f : g.invariant_factors) factors.push_back(f.str());
        out.emit({{"cmd", "component-group"}, {"group", g.to_string()}, {"invariant_factors", factors}},
                 g.to_string());
    } else if (*sieve_cmd) {
        SieveState s = initial_sieve_state();
        int step = 0;
        for (auto& path : file_args) {
            SieveConstraint c = parse_sieve_constraint(read_file(path), path);
            s = combine(s, c);
            ++step;
            out.emit({{"cmd", "sieve"},
                      {"step", step},
                      {"constraint", path},
                      {"modulus", {s.modulus[0], s.modulus[1], s.modulus[2]}},
                      {"survivors", s.survivors.size()}},
                     "after " + path + ": mod (" + std::to_string(s.modulus[0]) + "," +
                         std::to_string(s.modulus[1]) + "," + std::to_string(s.modulus[2]) + "), " +
                         std::to_string(s.survivors.size()) + " survivor(s)");
        }
        for (auto& t : s.survivors)
            out.emit({{"cmd", "sieve"}, {"survivor", {t[0], t[1], t[2]}}},
                     std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]));
        out.emit({{"cmd", "sieve"}, {"empty", s.empty()}},
                 s.empty() ? "# empty" : "# nonempty");
    } else if (*septic_cmd) {
        auto curve = SepticCurve(Int(twist_args[0]), Int(twist_args[1]), Int(twist_args[2]));
        auto pts = septic_search(curve, bound_arg);
        for (auto& P : pts)
            out.emit({{"cmd", "septic"}, {"point", P.to_string()}}, P.to_string());
        out.emit({{"cmd", "septic"}, {"count", pts.size()}},
                 "# " + std::to_string(pts.size()) + " point(s)");
    } else if (*case1_cmd) {
        for (auto& t : enumerate_case1())
            out.emit({{"cmd", "twists-case1"}, {"a", t.a.str()}, {"b", t.b.str()}, {"c", t.c.str()}},
                     t.a.str() + " " + t.b.str() + " " + t.c.str());
    } else if (*fromcurve_cmd) {
        auto e = EllipticCoeffs(Int(twist_args[0]), Int(twist_args[1]));
        TernaryForm f = minus ? x_e7_minus_quartic(e) : x_e7_quartic(e);
        out.emit({{"cmd", "twists-from-curve"}, {"quartic", f.to_string()}}, f.to_string());
    } else if (*thm_cmd) {
        auto sols = reproduce_theorem();
        for (auto& s : sols)
            out.emit({{"cmd", "verify-theorem"}, {"solution", s.to_string()}}, s.to_string());
        out.emit({{"cmd", "verify-theorem"}, {"count", sols.size()}},
                 "# " + std::to_string(sols.size()) + " primitive solution(s)");
        if (sols.size() != 16) throw MathError("verify-theorem: expected 16 solutions");
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const x237::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const x237::PrecisionLimitError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 4;
    } catch (const x237::MathError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
