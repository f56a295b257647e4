#include "planebranch/report.hpp"

#include <sstream>

#include "planebranch/error.hpp"

namespace planebranch {

namespace {

using json = nlohmann::ordered_json;

json rat_array(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(rat_str(r));
    return a;
}

template <typename C>
json long_array(const C& c) {
    json a = json::array();
    for (long x : c) a.push_back(x);
    return a;
}

}  // namespace

AnalysisReport analyze(const Parameterization& p, std::string input_echo) {
    AnalysisReport r{std::move(input_echo), p, lambda_set(p), {}, {}, {}, {}, Rat(0),
                     p.precision()};
    const NumSemigroup& S = p.semigroup();
    r.dimLowerBound = dim_lower_bound(S);
    if (S.g() == 1) {
        r.spec = spectrum(S.v(0), S.v(1));
        r.part = partition(*r.spec, r.lambda);
    }
    try {
        r.roots = roots_for_branch(r.lambda);
    } catch (const error& e) {
        r.roots_error = errc_name(e.code());
    }
    return r;
}

json report_json(const AnalysisReport& r) {
    const NumSemigroup& S = r.param.semigroup();
    json out;
    out["input"] = r.input_echo;

    json sg;
    sg["generators"] = long_array(S.gens());
    sg["char_exponents"] = long_array(S.char_exponents());
    sg["conductor"] = S.conductor();
    sg["milnor"] = S.milnor();
    sg["gaps"] = long_array(S.gaps());
    out["semigroup"] = sg;

    json la;
    la["small"] = long_array(r.lambda.small);
    la["lambda_minus_gamma"] = long_array(r.lambda.lambdaMinusGamma);
    la["lambda1"] = r.lambda.lambda1 ? json(*r.lambda.lambda1) : json("infinity");
    la["lambda0"] = r.lambda.lambda0 ? json(*r.lambda.lambda0) : json("infinity");
    la["lambda_c"] = r.lambda.lambdaC;
    la["g_set"] = long_array(r.lambda.gSet);
    la["tjurina"] = r.lambda.tjurina;
    out["lambda"] = la;

    if (r.spec) {
        json sp;
        sp["values"] = rat_array(r.spec->values);
        if (r.part) {
            sp["s_minus1"] = rat_array(r.part->sMinus1);
            sp["s_tilde"] = rat_array(r.part->sTilde);
            sp["s_0"] = rat_array(r.part->s0);
        }
        out["spectrum"] = sp;
    } else {
        out["spectrum"] = nullptr;
    }

    json be;
    if (r.roots) {
        json roots = json::array();
        for (const auto& [rho, src] : r.roots->roots) {
            json one;
            one["root"] = rat_str(rho);
            one["source"] = root_source_name(src);
            roots.push_back(one);
        }
        be["roots"] = roots;
        be["complete"] = r.roots->complete;
        json und = json::array();
        for (const auto& [a, b] : r.roots->undetermined)
            und.push_back(json::array({rat_str(a), rat_str(b)}));
        be["undetermined_pairs"] = und;
        json coll = json::array();
        for (const Rat& c : r.roots->collisions) coll.push_back(rat_str(c));
        be["collisions"] = coll;
        if (r.spec) {
            DesigReport d = desig_check(*r.spec, r.lambda, *r.roots);
            json dj;
            dj["lower"] = d.lower;
            dj["upper"] = d.upper;
            if (d.exact) dj["exact"] = rat_str(*d.exact);
            dj["ok"] = d.ok;
            be["spectral_root_count"] = dj;
        }
    } else {
        be["error"] = r.roots_error;
    }
    be["dim_lower_bound"] = rat_str(r.dimLowerBound);
    out["bernstein"] = be;

    json meta;
    meta["precision"] = r.precision_used;
    out["meta"] = meta;
    return out;
}

std::string report_text(const AnalysisReport& r) {
    const NumSemigroup& S = r.param.semigroup();
    std::ostringstream os;
    auto join_longs = [](const auto& c) {
        std::ostringstream s;
        bool first = true;
        for (long x : c) { s << (first ? "" : ", ") << x; first = false; }
        return s.str();
    };
    auto join_rats = [](const std::vector<Rat>& c) {
        std::ostringstream s;
        bool first = true;
        for (const Rat& x : c) { s << (first ? "" : ", ") << rat_str(x); first = false; }
        return s.str();
    };

    os << "input: " << r.input_echo << "\n";
    os << "semigroup: <" << join_longs(S.gens()) << ">\n";
    os << "  char exponents: (" << join_longs(S.char_exponents()) << ")\n";
    os << "  conductor = milnor = " << S.conductor() << "\n";
    os << "  gaps: {" << join_longs(S.gaps()) << "}\n";
    os << "lambda:\n";
    os << "  Lambda in [1,c-1]: {" << join_longs(r.lambda.small) << "}\n";
    os << "  Lambda \\ Gamma: {" << join_longs(r.lambda.lambdaMinusGamma) << "}\n";
    if (r.lambda.lambda1)
        os << "  lambda1 = " << *r.lambda.lambda1 << ", lambda0 = " << *r.lambda.lambda0 << "\n";
    else
        os << "  lambda1 = infinity\n";
    os << "  lambda_c = " << r.lambda.lambdaC << "\n";
    os << "  G: {" << join_longs(r.lambda.gSet) << "}\n";
    os << "  tjurina = " << r.lambda.tjurina << "\n";
    if (r.spec) {
        os << "spectrum (" << r.spec->values.size() << " values): " << join_rats(r.spec->values)
           << "\n";
        os << "  S_-1: " << join_rats(r.part->sMinus1) << "\n";
        os << "  S~:   " << join_rats(r.part->sTilde) << "\n";
        os << "  S_0:  " << join_rats(r.part->s0) << "\n";
    }
    if (r.roots) {
        os << "bernstein roots (" << (r.roots->complete ? "complete" : "partial") << "):\n";
        for (const auto& [rho, src] : r.roots->roots)
            os << "  " << rat_str(rho) << "  [" << root_source_name(src) << "]\n";
        for (const auto& [a, b] : r.roots->undetermined)
            os << "  one of {" << rat_str(a) << ", " << rat_str(b) << "}  [UNDETERMINED]\n";
    } else {
        os << "bernstein roots: " << r.roots_error << "\n";
    }
    os << "dim lower bound: " << rat_str(r.dimLowerBound) << "\n";
    os << "precision: " << r.precision_used << "\n";
    return os.str();
}

}  // namespace planebranch
