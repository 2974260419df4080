// qpm: exact computations on q-polymatroids, rank-metric codes and
// weighted subspace designs, plus a deterministic random code search.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpm/charpoly.hpp"
#include "qpm/designs.hpp"
#include "qpm/duality.hpp"
#include "qpm/json_io.hpp"
#include "qpm/search.hpp"

namespace {

using qpm::Int;
using qpm::IntPoly;
using json = qpm::io::json;

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

qpm::QPolymatroid load_qpm(const std::string& path, const Int& ceiling) {
    return qpm::io::qpm_from_json(qpm::io::load_json_file(path), ceiling);
}

qpm::Subspace parse_space(const qpm::QPolymatroid& M, const std::string& arg) {
    return qpm::io::subspace_from_json(M.ambient(), json::parse(arg));
}

int cmd_charpoly(const std::string& in, const Int& ceiling) {
    qpm::QPolymatroid M = load_qpm(in, ceiling);
    json j;
    j["char_poly"] = qpm::io::poly_to_json(qpm::char_poly(M));
    print(j);
    return 0;
}

int cmd_weights(const std::string& in, int i, const Int& ceiling) {
    qpm::QPolymatroid M = load_qpm(in, ceiling);
    json j;
    if (i >= 0) {
        j["i"] = i;
        j["A"] = qpm::io::poly_to_json(qpm::weight_enum(M, i));
    } else {
        json all = json::array();
        for (const IntPoly& p : qpm::weight_enums(M)) all.push_back(qpm::io::poly_to_json(p));
        j["A"] = std::move(all);
    }
    print(j);
    return 0;
}

int cmd_contract(const std::string& in, const std::string& space, bool project,
                 const Int& ceiling) {
    qpm::QPolymatroid M = load_qpm(in, ceiling);
    qpm::Subspace T = parse_space(M, space);
    json j;
    j["space"] = qpm::io::subspace_to_json(T);
    j["char_poly"] = qpm::io::poly_to_json(project ? qpm::char_poly_contract_to(M, T)
                                                   : qpm::char_poly_contraction(M, T));
    print(j);
    return 0;
}

int cmd_dual(const std::string& in, const Int& ceiling) {
    qpm::QPolymatroid M = load_qpm(in, ceiling);
    print(qpm::io::qpm_to_table_json(M.dual(), ceiling));
    return 0;
}

int cmd_macwilliams(const std::string& in, int s, const Int& ceiling) {
    qpm::QPolymatroid M = load_qpm(in, ceiling);
    qpm::DualityTables T = qpm::DualityTables::build(M, ceiling);
    json j;
    bool ok = true;
    if (s >= 0) {
        qpm::CheckResult r = qpm::macwilliams_transform_check(T, s);
        ok = r.ok;
        j["s"] = s;
        j["ok"] = r.ok;
        j["lhs"] = qpm::io::poly_to_json(r.lhs);
        j["rhs"] = qpm::io::poly_to_json(r.rhs);
        if (!r.detail.empty()) j["detail"] = r.detail;
    } else {
        std::string detail;
        json per_s = json::array();
        for (int sv = 0; sv <= T.n; sv++) {
            qpm::CheckResult r = qpm::macwilliams_transform_check(T, sv);
            ok = ok && r.ok;
            per_s.push_back({{"s", sv}, {"ok", r.ok}});
        }
        bool cd = qpm::charpoly_duality_check_all(T, &detail);
        if (!cd) j["charpoly_duality_detail"] = detail;
        bool dc = qpm::dual_contraction_check_all(T, &detail);
        if (!dc) j["dual_contraction_detail"] = detail;
        ok = ok && cd && dc;
        j["transform"] = std::move(per_s);
        j["charpoly_duality_all"] = cd;
        j["dual_contraction_all"] = dc;
        j["ok"] = ok;
    }
    print(j);
    return ok ? 0 : 1;
}

int cmd_am_check(const std::string& in, int t, const std::string& theta_arg, bool symbolic,
                 const Int& ceiling) {
    json spec = qpm::io::load_json_file(in);
    json j;
    if (spec.contains("field") && spec.contains("generator") && !symbolic && theta_arg.empty()) {
        // whole-code path: screening criteria plus certificates
        qpm::VectorCode C = qpm::io::vector_code_from_json(spec);
        qpm::GammaBasis gamma = qpm::GammaBasis::polynomial(C.field());
        qpm::CodeAMResult res = qpm::am_check_code(C, gamma, t, ceiling);
        j["report"] = qpm::io::am_report_to_json(res.report);
        j["d"] = res.d;
        j["dual_weights"] = res.dual_weights;
        j["criteria_pass"] = res.criteria_pass;
        j["mrd"] = res.mrd;
        json certs = json::array();
        for (const auto& c : res.certificates) certs.push_back(qpm::io::certificate_to_json(c));
        j["certificates"] = std::move(certs);
        print(j);
        return 0;
    }
    if (!symbolic && theta_arg.empty())
        throw qpm::BadParams("am-check on a q-polymatroid needs --theta or --symbolic");
    qpm::QPolymatroid M = spec.contains("field") && spec.contains("generator")
                              ? qpm::induced_qmatroid(qpm::io::vector_code_from_json(spec))
                              : qpm::io::qpm_from_json(spec, ceiling);
    qpm::DualityTables T = qpm::DualityTables::build(M, ceiling);
    qpm::AMReport rep = symbolic ? qpm::am_check_symbolic(T, t) : qpm::am_check(T, t, Int(theta_arg));
    j["report"] = qpm::io::am_report_to_json(rep);
    print(j);
    return 0;
}

int cmd_design_verify(const std::string& in) {
    qpm::WeightedDesign D = qpm::io::design_from_json(qpm::io::load_json_file(in));
    qpm::VerifyResult r = qpm::verify_design(D);
    json j;
    j["verified"] = r.verified;
    if (r.verified) j["lambda"] = qpm::io::int_to_json(r.lambda);
    if (r.counterexample) {
        j["counterexample"] = qpm::io::subspace_to_json(*r.counterexample);
        j["counterexample_sum"] = qpm::io::int_to_json(r.counterexample_sum);
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    print(j);
    return r.verified ? 0 : 1;
}

int cmd_search(qpm::SearchConfig cfg, const std::string& config_path) {
    if (!config_path.empty()) {
        json c = qpm::io::load_json_file(config_path);
        if (c.contains("q")) cfg.q = c.at("q").get<uint64_t>();
        if (c.contains("m")) cfg.m = c.at("m").get<int>();
        if (c.contains("n")) cfg.n = c.at("n").get<int>();
        if (c.contains("k")) cfg.k = c.at("k").get<int>();
        if (c.contains("t")) cfg.t = c.at("t").get<int>();
        if (c.contains("count")) cfg.count = c.at("count").get<long>();
        if (c.contains("seed")) cfg.seed = c.at("seed").get<uint64_t>();
        if (c.contains("workers")) cfg.workers = c.at("workers").get<int>();
        if (c.contains("dedupe")) cfg.dedupe = c.at("dedupe").get<bool>();
        if (c.contains("out")) cfg.out = c.at("out").get<std::string>();
        if (c.contains("hits_out")) cfg.hits_out = c.at("hits_out").get<std::string>();
        if (c.contains("telemetry")) cfg.telemetry = c.at("telemetry").get<std::string>();
    }
    qpm::SearchSummary s = qpm::run_search_to_files(cfg);
    json j;
    j["candidates"] = s.candidates;
    j["hits"] = s.hits;
    j["trivial_mrd"] = s.trivial_mrd;
    j["duplicates"] = s.duplicates;
    std::cerr << j.dump() << "\n";
    return 0;
}

bool expect(bool ok, const std::string& what, int& failures) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) failures++;
    return ok;
}

int cmd_selftest() {
    int failures = 0;

    // Vamos q-matroid characteristic polynomial over F_2^8
    {
        IntPoly p = qpm::char_poly(qpm::QPolymatroid::vamos(2));
        IntPoly want(std::vector<Int>{755584, -776920, 21590, -255, 1});
        expect(p == want, "vamos charpoly z^4 - 255z^3 + 21590z^2 - 776920z + 755584", failures);
    }

    // the [6, 3] code over GF(2^6) with the stated generator matrix
    {
        qpm::FieldPtr F = qpm::Field::from_spec("GF(2^6)/x^6+x^4+x^3+x+1");
        auto e = [&](const std::string& s) { return F->parse(s); };
        qpm::FMat G = {{e("1"), e("0"), e("0"), e("a^13"), e("a^47"), e("a^35")},
                       {e("0"), e("1"), e("0"), e("a^44"), e("a^62"), e("a^32")},
                       {e("0"), e("0"), e("1"), e("a^34"), e("a^22"), e("a^19")}};
        qpm::VectorCode C(F, 6, G);
        std::vector<Int> W = C.weight_distribution();
        std::vector<Int> wantW{1, 0, 0, 567, 37044, 142884, 81648};
        expect(W == wantW, "[6,3] GF(64) code weight distribution", failures);
        std::vector<Int> Wd = C.dual().weight_distribution();
        expect(Wd == wantW, "dual code has the same weight distribution", failures);
        IntPoly p = qpm::char_poly(qpm::induced_qmatroid(C));
        IntPoly want(std::vector<Int>{-1168, 1230, -63, 1});
        expect(p == want, "induced q-matroid charpoly z^3 - 63z^2 + 1230z - 1168", failures);
    }

    // the constant-weight [4, 2] code over GF(4): its rank-2 supports are a
    // spread of F_2^4, i.e. a 1-(4,2,1;2) design
    {
        qpm::FieldPtr F = qpm::Field::gf(4);
        qpm::Field::Elem a = F->x();
        qpm::FMat G = {{1, a, 0, 0}, {0, 0, 1, a}};
        qpm::VectorCode Cw(F, 4, G);
        std::vector<Int> W = Cw.weight_distribution();
        expect(W == std::vector<Int>({1, 0, 15}), "constant-weight [4,2] GF(4) code", failures);
        qpm::CodeAMResult res = qpm::am_check_code(Cw.dual(), qpm::GammaBasis::polynomial(F), 1);
        bool found = false;
        for (const auto& c : res.certificates)
            if (c.design.k == 2 && c.design.blocks.size() == 5 && c.lambda == 1 && c.reverified)
                found = true;
        expect(res.criteria_pass && found, "spread certificate: 5 blocks, lambda = 1", failures);
    }

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-polymatroid and rank-metric design toolkit"};
    app.require_subcommand(1);
    std::string in, space, theta_arg, config_path;
    int i = -1, t = 1, s = -1;
    bool project = false, symbolic = false;
    long ceiling_l = 8000000;
    qpm::SearchConfig cfg;

    auto add_in = [&](CLI::App* c) { c->add_option("--in", in, "input JSON file")->required(); };
    auto add_ceiling = [&](CLI::App* c) {
        c->add_option("--ceiling", ceiling_l, "enumeration ceiling");
    };

    CLI::App* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomial p(M;z)");
    add_in(c_charpoly);
    add_ceiling(c_charpoly);

    CLI::App* c_weights = app.add_subcommand("weights", "weight enumerators A_M(i;z)");
    add_in(c_weights);
    add_ceiling(c_weights);
    c_weights->add_option("--i", i, "single dimension i (default: all)");

    CLI::App* c_contract = app.add_subcommand("contract", "p(M/T;z) for a given subspace T");
    add_in(c_contract);
    add_ceiling(c_contract);
    c_contract->add_option("--space", space, "subspace as a JSON array of row strings")
        ->required();
    c_contract->add_flag("--project", project, "compute p(M.T;z) = p(M/T^perp;z) instead");

    CLI::App* c_dual = app.add_subcommand("dual", "dual q-polymatroid as a rank table");
    add_in(c_dual);
    add_ceiling(c_dual);

    CLI::App* c_mw = app.add_subcommand(
        "macwilliams", "verify the weight-enumerator duality identities; exit 1 on mismatch");
    add_in(c_mw);
    add_ceiling(c_mw);
    c_mw->add_option("--s", s, "single transform index s (default: all identities)");

    CLI::App* c_am = app.add_subcommand("am-check", "design-criteria check for a code or q-polymatroid");
    add_in(c_am);
    add_ceiling(c_am);
    c_am->add_option("--t", t, "design strength t")->required();
    c_am->add_option("--theta", theta_arg, "evaluation point theta (decimal)");
    c_am->add_flag("--symbolic", symbolic, "check polynomial nonvanishing instead of a point");

    CLI::App* c_dv = app.add_subcommand("design-verify", "verify lambda-constancy of a weighted design");
    add_in(c_dv);

    CLI::App* c_search = app.add_subcommand("search", "random standard-form code search");
    c_search->add_option("--q", cfg.q, "base field order");
    c_search->add_option("--m", cfg.m, "extension degree");
    c_search->add_option("--n", cfg.n, "code length");
    c_search->add_option("--k", cfg.k, "code dimension");
    c_search->add_option("--t", cfg.t, "design strength to screen for");
    c_search->add_option("--count", cfg.count, "number of candidates");
    c_search->add_option("--seed", cfg.seed, "64-bit seed");
    c_search->add_option("--workers", cfg.workers, "parallelism degree (QPM_WORKERS overrides)");
    c_search->add_flag("--dedupe", cfg.dedupe, "skip Galois-orbit repeats");
    c_search->add_option("--out", cfg.out, "JSONL output path (default: stdout)");
    c_search->add_option("--hits-out", cfg.hits_out, "hits JSONL path");
    c_search->add_option("--telemetry", cfg.telemetry, "per-record timing JSONL path");
    c_search->add_option("--config", config_path, "JSON config file (flags take defaults from it)");

    CLI::App* c_self = app.add_subcommand("selftest", "run the built-in golden-value checks");
    (void)c_self;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Int ceiling(ceiling_l);
        cfg.ceiling = ceiling;
        if (c_charpoly->parsed()) return cmd_charpoly(in, ceiling);
        if (c_weights->parsed()) return cmd_weights(in, i, ceiling);
        if (c_contract->parsed()) return cmd_contract(in, space, project, ceiling);
        if (c_dual->parsed()) return cmd_dual(in, ceiling);
        if (c_mw->parsed()) return cmd_macwilliams(in, s, ceiling);
        if (c_am->parsed()) return cmd_am_check(in, t, theta_arg, symbolic, ceiling);
        if (c_dv->parsed()) return cmd_design_verify(in);
        if (c_search->parsed()) return cmd_search(cfg, config_path);
        if (c_self->parsed()) return cmd_selftest();
    } catch (const qpm::BadInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qpm::BadParams& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const qpm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
