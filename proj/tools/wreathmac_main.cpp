#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "wreathmac/checks.hpp"
#include "wreathmac/jsonio.hpp"
#include "wreathmac/macdonald.hpp"
#include "wreathmac/quiverref.hpp"
#include "wreathmac/toroidal.hpp"

using json = nlohmann::json;
using namespace wreathmac;

namespace {

json weyl_json(const AffineWeylElt& w) {
    json j;
    j["u"] = w.u();
    j["beta"] = w.beta().coords();
    j["length"] = w.length();
    return j;
}

json mp_json(const MultiPartition& mp) {
    json arr = json::array();
    for (const auto& p : mp.comps()) arr.push_back(p.parts());
    return arr;
}

std::string schur_key(int r, const MultiPartition& mp) {
    return r == 1 ? "s" + mp.comp(0).str() : mp.str();
}

json schur_terms_json(const MultiSymFn& f) {
    json terms = json::object();
    for (const auto& [mp, c] : f.schur_expansion()) terms[schur_key(f.r(), mp)] = c.str();
    return terms;
}

WreathKey make_key(int r, const std::string& wtext, const std::string& mutext, const std::string& variant) {
    return WreathKey(r, AffineWeylElt::parse(r, wtext), MultiPartition::parse(mutext),
                     variant_from_name(variant));
}

void emit(const json& doc) {
    std::cout << doc.dump(2) << "\n";
}

int cmd_compute(int r, const std::string& wtext, const std::string& mutext, const std::string& variant) {
    WreathKey key = make_key(r, wtext, mutext, variant);
    const MultiSymFn& h = solve_H(key);
    json doc;
    doc["command"] = "compute";
    doc["r"] = r;
    doc["w"] = weyl_json(key.w);
    doc["mu"] = mp_json(key.mu);
    doc["variant"] = variant_name(key.variant);
    doc["result"] = {{"basis", "schur"}, {"terms", schur_terms_json(h)}};
    emit(doc);
    return 0;
}

int cmd_kostka(int r, const std::string& wtext, const std::string& mutext, const std::string& variant) {
    WreathKey key = make_key(r, wtext, mutext, variant);
    auto table = kostka(key);
    KostkaReport rep = check_kostka(key);
    json terms = json::object(), counts = json::object();
    for (const auto& [mp, poly] : table) {
        terms[schur_key(r, mp)] = poly.str();
        counts[schur_key(r, mp)] = poly.eval(1, 1).get_str();
    }
    json doc;
    doc["command"] = "kostka";
    doc["r"] = r;
    doc["w"] = weyl_json(key.w);
    doc["mu"] = mp_json(key.mu);
    doc["kostka"] = terms;
    doc["counts"] = counts;
    doc["positive"] = rep.positive;
    doc["gamma_graded"] = rep.gamma_graded;
    doc["counts_match"] = rep.counts_match;
    emit(doc);
    return rep.positive && rep.gamma_graded && rep.counts_match ? 0 : 1;
}

int cmd_nabla(int r, const std::string& wtext, const std::string& mutext) {
    WreathKey key = make_key(r, wtext, mutext, "standard");
    CycPoly b = B_w(key);
    json comps = json::object(), eigs = json::object();
    bool match = true;
    for (int i = 0; i < r; ++i) {
        comps["chi^" + std::to_string(i)] = b.comp(i).str();
        LaurentPoly2 e = nabla_eigen(key, i);
        eigs["chi^" + std::to_string(i)] = e.str();
        match = match && nabla_pairing_eigen(key, i) == RatFn2(e);
    }
    json doc;
    doc["command"] = "nabla";
    doc["r"] = r;
    doc["w"] = weyl_json(key.w);
    doc["mu"] = mp_json(key.mu);
    doc["B_w"] = comps;
    doc["eigenvalues"] = eigs;
    doc["pairing_match"] = match;
    emit(doc);
    return match ? 0 : 1;
}

int cmd_norms(int r, const std::string& wtext, const std::string& mutext) {
    WreathKey key = make_key(r, wtext, mutext, "standard");
    RatFn2 pairing = norm_b_pairing(key);
    RatFn2 formula = norm_b_formula(key);
    json doc;
    doc["command"] = "norms";
    doc["r"] = r;
    doc["w"] = weyl_json(key.w);
    doc["mu"] = mp_json(key.mu);
    doc["pairing"] = pairing.str();
    doc["hook_product"] = formula.str();
    bool match = pairing == formula;
    doc["match"] = match;
    emit(doc);
    return match ? 0 : 1;
}

int cmd_conjectures(int r, const std::string& wtext, const std::string& mutext, int max_n, int max_len) {
    json cases = json::array();
    bool all = true;
    auto run_one = [&](const WreathKey& key) {
        for (const auto& rep : check_conjectures(key)) {
            json c;
            c["key"] = json::parse(key.canonical_json());
            c["conjecture"] = rep.name;
            c["status"] = rep.pass ? "PASS" : "FAIL";
            if (!rep.pass) c["detail"] = rep.detail;
            cases.push_back(c);
            all = all && rep.pass;
        }
    };
    if (max_n >= 0) {
        for (const AffineWeylElt& w : weyl_ball(r, max_len))
            for (int n = 0; n <= max_n; ++n)
                for (const auto& mu : multipartitions_of(r, n)) run_one(WreathKey(r, w, mu));
    } else {
        run_one(make_key(r, wtext, mutext, "standard"));
    }
    json doc;
    doc["command"] = "conjectures";
    doc["r"] = r;
    doc["cases"] = cases;
    doc["pass"] = all;
    emit(doc);
    return all ? 0 : 1;
}

int cmd_toroidal_eigen(int r, const std::string& mutext) {
    Partition mu = Partition::parse(mutext);
    VertexVec v = embed_H(mu, r);
    json doc;
    doc["command"] = "toroidal-eigen";
    doc["r"] = r;
    doc["mu"] = mu.parts();
    json eigs = json::array();
    bool all = true;
    for (int i = 0; i < r; ++i)
        for (bool star : {true, false}) {
            RatFn2 want = RatFn2(A_component(mu, r, i, !star).to_su());
            bool match = eigen_op(i, star, v) == v.scaled(want);
            json c;
            c["i"] = i;
            c["star"] = star;
            c["eigenvalue"] = want.str();
            c["match"] = match;
            eigs.push_back(c);
            all = all && match;
        }
    doc["eigenvalues"] = eigs;
    doc["pass"] = all;
    emit(doc);
    return all ? 0 : 1;
}

int cmd_factor(int r, const std::string& mutext, bool check) {
    MultiPartition mu = MultiPartition::parse(mutext);
    MultiSymFn f = factor_generic(r, mu);
    json doc;
    doc["command"] = "factor";
    doc["r"] = r;
    doc["mu"] = mp_json(mu);
    doc["result"] = {{"basis", "schur"}, {"terms", schur_terms_json(f)}};
    bool pass = true;
    if (check) {
        const int n = mu.size();
        AffineWeylElt w1 = antidominant_translation(r, n + 1);
        AffineWeylElt w2 = antidominant_translation(r, n + 2);
        bool m1 = solve_H(WreathKey(r, w1, mu)) == f;
        bool m2 = solve_H(WreathKey(r, w2, mu)) == f;
        doc["solver_match_depth_n1"] = m1;
        doc["solver_match_depth_n2"] = m2;
        pass = m1 && m2;
    }
    emit(doc);
    return pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, int jobs) {
    if (suite != "paper-examples") throw ParseError("unknown suite '" + suite + "'");
    auto outcomes = run_checks(paper_example_checks(), jobs);
    json cases = json::array();
    int failures = 0;
    for (const auto& o : outcomes) {
        std::cerr << (o.pass ? "PASS" : "FAIL") << " " << o.group << "/" << o.name;
        if (!o.pass) std::cerr << ": " << o.detail;
        std::cerr << "\n";
        json c;
        c["group"] = o.group;
        c["name"] = o.name;
        c["pass"] = o.pass;
        if (!o.pass) c["detail"] = o.detail;
        cases.push_back(c);
        if (!o.pass) ++failures;
    }
    json doc;
    doc["command"] = "verify";
    doc["suite"] = suite;
    doc["cases"] = cases;
    doc["failures"] = failures;
    doc["pass"] = failures == 0;
    emit(doc);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact wreath Macdonald polynomial calculator"};
    app.require_subcommand(1);

    int r = 1;
    std::string wtext, mutext, variant = "standard", cachedir, suite = "paper-examples";
    int jobs = 1, max_n = -1, max_len = 3;
    bool factor_check = false;

    auto add_common = [&](CLI::App* sub, bool need_w, bool need_mu) {
        sub->add_option("--r", r, "number of components r")->required();
        if (need_w) sub->add_option("--w", wtext, "affine Weyl element, e.g. \"s2 s1 t[1,-1,0]\"");
        if (need_mu) sub->add_option("--mu", mutext, "multipartition literal, e.g. [[1],[],[]]");
        sub->add_option("--cache-dir", cachedir, "cache directory (overrides WREATHMAC_CACHE)");
    };

    CLI::App* compute = app.add_subcommand("compute", "wreath Macdonald polynomial");
    add_common(compute, true, true);
    compute->add_option("--variant", variant, "standard|forward|opposite");

    CLI::App* kost = app.add_subcommand("kostka", "Kostka table with positivity checks");
    add_common(kost, true, true);

    CLI::App* nabla = app.add_subcommand("nabla", "tautological character and nabla eigenvalues");
    add_common(nabla, true, true);

    CLI::App* norms = app.add_subcommand("norms", "norm pairing against the hook product");
    add_common(norms, true, true);

    CLI::App* conj = app.add_subcommand("conjectures", "conjecture evidence checkers");
    add_common(conj, true, true);
    conj->add_option("--max-n", max_n, "sweep all keys with |mu| <= max-n");
    conj->add_option("--max-len", max_len, "sweep Weyl elements of length <= max-len");

    CLI::App* toro = app.add_subcommand("toroidal-eigen", "vertex eigenoperator check for a partition");
    toro->add_option("--r", r, "number of components r")->required();
    toro->add_option("--mu", mutext, "partition literal, e.g. [3,3,2,2]")->required();
    toro->add_option("--cache-dir", cachedir, "cache directory");

    CLI::App* fact = app.add_subcommand("factor", "generic-stability factorization");
    fact->add_option("--r", r, "number of components r")->required();
    fact->add_option("--mu", mutext, "multipartition literal")->required();
    fact->add_flag("--check", factor_check, "verify against the solver at depth n+1 and n+2");
    fact->add_option("--cache-dir", cachedir, "cache directory");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name (paper-examples)");
    verify->add_option("--jobs", jobs, "parallel workers");
    verify->add_option("--cache-dir", cachedir, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!cachedir.empty()) set_cache_dir(cachedir);
        if (compute->parsed()) return cmd_compute(r, wtext, mutext, variant);
        if (kost->parsed()) return cmd_kostka(r, wtext, mutext, "standard");
        if (nabla->parsed()) return cmd_nabla(r, wtext, mutext);
        if (norms->parsed()) return cmd_norms(r, wtext, mutext);
        if (conj->parsed()) return cmd_conjectures(r, wtext, mutext, max_n, max_len);
        if (toro->parsed()) return cmd_toroidal_eigen(r, mutext);
        if (fact->parsed()) return cmd_factor(r, mutext, factor_check);
        if (verify->parsed()) return cmd_verify(suite, jobs);
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
