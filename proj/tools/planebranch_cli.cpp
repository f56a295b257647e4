// Command-line front end: semigroup / analyze / strata / table1.
// Exit codes: 0 ok, 2 input error, 3 internal assertion.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "planebranch/bernstein.hpp"
#include "planebranch/error.hpp"
#include "planebranch/parse.hpp"
#include "planebranch/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using json = nlohmann::ordered_json;
using namespace planebranch;

namespace {

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stol(item));
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_rat(item));
    }
    return out;
}

json semigroup_json(const NumSemigroup& S) {
    json sg;
    sg["generators"] = S.gens();
    sg["char_exponents"] = S.char_exponents();
    json e(S.e()), n(std::vector<long>(S.n().begin() + 1, S.n().end()));
    sg["e"] = e;
    sg["n"] = n;
    sg["conductor"] = S.conductor();
    sg["milnor"] = S.milnor();
    sg["gaps"] = S.gaps();
    sg["dim_lower_bound"] = rat_str(dim_lower_bound(S));
    return sg;
}

int cmd_semigroup(const std::string& gens_arg, const std::string& format) {
    NumSemigroup S = NumSemigroup::from_generators(parse_long_list(gens_arg));
    if (format == "json") {
        std::cout << semigroup_json(S).dump(2) << "\n";
        return 0;
    }
    auto join = [](const std::vector<long>& v) {
        std::ostringstream os;
        for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
        return os.str();
    };
    std::cout << "semigroup: <" << join(S.gens()) << ">\n"
              << "char exponents: (" << join(S.char_exponents()) << ")\n"
              << "conductor = milnor = " << S.conductor() << "\n"
              << "gaps (" << S.gaps().size() << "): {" << join(S.gaps()) << "}\n"
              << "dim lower bound: " << rat_str(dim_lower_bound(S)) << "\n";
    return 0;
}

int cmd_analyze(long v0, const std::string& x2_expr, const std::string& poly_expr,
                std::optional<long> precision, const std::string& format) {
    std::optional<Parameterization> p;
    std::string echo;
    if (!poly_expr.empty()) {
        BranchEquation eq = BranchEquation::from_bipoly(parse_poly(poly_expr));
        long mu = (eq.v0() - 1) * (eq.v1() - 1);
        long target = precision.value_or(mu + eq.v1() + 1);
        if (precision && *precision < mu + eq.v1())
            std::cerr << "warning: precision " << *precision
                      << " is below the contract floor " << mu + eq.v1() << "\n";
        p = puiseux(eq, target);
        echo = "poly: " + poly_expr;
    } else {
        if (v0 <= 0 || x2_expr.empty())
            throw error(errc::parse_error, "need --poly or both --v0 and --x2");
        auto terms = parse_series(x2_expr);
        if (precision) {
            NumSemigroup S = semigroup_of(v0, terms);
            if (*precision < S.conductor() + S.v(1))
                std::cerr << "warning: precision " << *precision
                          << " is below the contract floor " << S.conductor() + S.v(1) << "\n";
        }
        p = Parameterization::make(v0, terms, precision);
        echo = "v0=" + std::to_string(v0) + ", x2=" + x2_expr;
    }
    AnalysisReport rep = analyze(*p, echo);
    if (format == "json") std::cout << report_json(rep).dump(2) << "\n";
    else std::cout << report_text(rep);
    return 0;
}

struct StrataRow {
    std::vector<Rat> coeffs;
    std::set<long> lambdaMinusGamma;
    long tau = 0;
    std::vector<Rat> fromLambdaRoots;
    std::set<long> gSet;
};

StrataRow strata_point(const std::vector<Rat>& a) {
    // Coefficient slots of the <6,7> short form
    // X1^7 + X2^6 + a1 X1^5 X2^2 + a2 X1^4 X2^3 + a3 X1^3 X2^4
    //             + a4 X1^5 X2^3 + a5 X1^4 X2^4 + a6 X1^5 X2^4.
    static const std::pair<long, long> slots[6] = {{5, 2}, {4, 3}, {3, 4}, {5, 3}, {4, 4}, {5, 4}};
    BiPoly f;
    f.set(7, 0, Rat(1));
    f.set(0, 6, Rat(1));
    for (int k = 0; k < 6; ++k) f.set(slots[k].first, slots[k].second, a[k]);
    BranchEquation eq = BranchEquation::from_bipoly(f);
    Parameterization p = puiseux(eq);
    LambdaSet L = lambda_set(p);

    StrataRow row;
    row.coeffs = a;
    row.lambdaMinusGamma = L.lambdaMinusGamma;
    row.tau = L.tjurina;
    row.gSet = L.gSet;
    for (long lam : L.lambdaMinusGamma) row.fromLambdaRoots.push_back(make_rat(-lam, 42));
    return row;
}

int cmd_strata(const std::string& family, const std::string& coeffs_file,
               const std::string& grid_spec, const std::string& format) {
    if (family != "6-7")
        throw error(errc::bad_case, "only the 6-7 family is available");

    std::vector<std::vector<Rat>> tuples;
    if (!coeffs_file.empty()) {
        std::ifstream in(coeffs_file);
        if (!in) throw error(errc::parse_error, "cannot open " + coeffs_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto t = parse_rat_list(line);
            if (t.size() != 6)
                throw error(errc::parse_error, "expected 6 coefficients per line, got " +
                                                   std::to_string(t.size()));
            tuples.push_back(std::move(t));
        }
    } else if (!grid_spec.empty()) {
        std::vector<Rat> values = parse_rat_list(grid_spec);
        if (values.empty()) throw error(errc::parse_error, "empty grid value set");
        std::vector<Rat> cur(6, Rat(0));
        // cartesian product, slot 6 fastest
        std::vector<size_t> idx(6, 0);
        for (;;) {
            for (int k = 0; k < 6; ++k) cur[k] = values[idx[k]];
            tuples.push_back(cur);
            int k = 5;
            while (k >= 0 && ++idx[k] == values.size()) idx[k--] = 0;
            if (k < 0) break;
        }
    } else {
        throw error(errc::parse_error, "need --coeffs or --grid");
    }

    std::vector<StrataRow> rows(tuples.size());
    // Independent points; merge preserves input order.
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(tuples.size()); ++i) rows[i] = strata_point(tuples[i]);

    auto join_rats = [](const std::vector<Rat>& v, const char* sep) {
        std::ostringstream os;
        for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << rat_str(v[i]);
        return os.str();
    };
    auto join_set = [](const std::set<long>& v) {
        std::ostringstream os;
        bool first = true;
        for (long x : v) { os << (first ? "" : " "); os << x; first = false; }
        return os.str();
    };

    if (format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            json one;
            json cs = json::array();
            for (const Rat& c : r.coeffs) cs.push_back(rat_str(c));
            one["coeffs"] = cs;
            one["lambda_minus_gamma"] = r.lambdaMinusGamma;
            one["tau"] = r.tau;
            json roots = json::array();
            for (const Rat& c : r.fromLambdaRoots) roots.push_back(rat_str(c));
            one["from_lambda_roots"] = roots;
            one["g_set"] = r.gSet;
            out.push_back(one);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "a1,a2,a3,a4,a5,a6,lambda_minus_gamma,tau,from_lambda_roots,g_set\n";
        for (const auto& r : rows)
            std::cout << join_rats(r.coeffs, ",") << ",{" << join_set(r.lambdaMinusGamma) << "},"
                      << r.tau << ",{" << join_rats(r.fromLambdaRoots, " ") << "},{"
                      << join_set(r.gSet) << "}\n";
    }
    return 0;
}

int cmd_table1(int which, long v0, long v1, long s, long v2, const std::string& format) {
    GEmptyCase::Kind kind;
    switch (which) {
        case 1: kind = GEmptyCase::quasihomogeneous; break;
        case 2: kind = GEmptyCase::tail_family; break;
        case 3: kind = GEmptyCase::four_six; break;
        default: throw error(errc::bad_case, "case must be 1, 2 or 3");
    }
    TableRow row = table1_row(kind, v0, v1, s, v2);
    if (format == "json") {
        json out;
        out["case"] = which;
        out["lambda_minus_gamma"] = row.lambdaMinusGamma;
        out["tau"] = row.tau;
        json roots = json::array();
        for (const Rat& r : row.roots) roots.push_back(rat_str(r));
        out["roots"] = roots;
        std::cout << out.dump(2) << "\n";
    } else {
        std::ostringstream lmg, roots;
        bool first = true;
        for (long x : row.lambdaMinusGamma) { lmg << (first ? "" : ", ") << x; first = false; }
        first = true;
        for (const Rat& r : row.roots) { roots << (first ? "" : ", ") << rat_str(r); first = false; }
        std::cout << "Lambda \\ Gamma: {" << lmg.str() << "}\n"
                  << "tau: " << row.tau << "\n"
                  << "roots (" << row.roots.size() << "): {" << roots.str() << "}\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic invariants of plane branch singularities"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* sg = app.add_subcommand("semigroup", "value semigroup from generators");
    std::string gens_arg;
    sg->add_option("--gens", gens_arg, "comma-separated generators")->required();

    auto* an = app.add_subcommand("analyze", "full analysis of one branch");
    long v0 = 0;
    std::string x2_expr, poly_expr;
    std::optional<long> precision;
    an->add_option("--v0", v0, "multiplicity (x1 = T^v0)");
    an->add_option("--x2", x2_expr, "x2(T) series, e.g. \"T^9 + T^10\"");
    an->add_option("--poly", poly_expr, "defining equation, e.g. \"X2^6 + X1^7 + X1^5*X2^2\"");
    long precision_arg = -1;
    an->add_option("--precision", precision_arg, "series precision override");

    auto* st = app.add_subcommand("strata", "coefficient sweep of a short-form family");
    std::string family = "6-7", coeffs_file, grid_spec;
    st->add_option("--family", family, "topological family (6-7)");
    st->add_option("--coeffs", coeffs_file, "CSV file, one a1..a6 tuple per line");
    st->add_option("--grid", grid_spec, "comma-separated value set for each a_i");

    auto* t1 = app.add_subcommand("table1", "closed-form invariants of the G-empty families");
    int which = 0;
    long t_v0 = 0, t_v1 = 0, t_s = 1, t_v2 = 0;
    t1->add_option("--case", which, "1, 2 or 3")->required();
    t1->add_option("--v0", t_v0);
    t1->add_option("--v1", t_v1);
    t1->add_option("--s", t_s);
    t1->add_option("--v2", t_v2);

    CLI11_PARSE(app, argc, argv);
    if (precision_arg >= 0) precision = precision_arg;

    try {
        if (sg->parsed()) return cmd_semigroup(gens_arg, format);
        if (an->parsed()) return cmd_analyze(v0, x2_expr, poly_expr, precision, format);
        if (st->parsed()) return cmd_strata(family, coeffs_file, grid_spec, format);
        if (t1->parsed()) return cmd_table1(which, t_v0, t_v1, t_s, t_v2, format);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
