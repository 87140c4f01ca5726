// holoprime: exact-arithmetic certificates for invariant symbol complexes,
// prime subspace classification, and prime-subspace lower-bound search.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "holoprime/holoprime.hpp"

using namespace holoprime;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

void emit(const Json& j, const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "markdown") {
        std::ostringstream os;
        os << "# holoprime report\n\n";
        if (j.contains("suites")) {
            for (const auto& s : j["suites"]) os << render_suite_markdown(s);
        } else if (j.contains("suite")) {
            os << render_suite_markdown(j);
        } else {
            os << "```json\n" << j.dump(2) << "\n```\n";
        }
        if (j.contains("claim_map")) {
            os << "## claim map\n\n| check | claim |\n|---|---|\n";
            for (auto it = j["claim_map"].begin(); it != j["claim_map"].end(); ++it)
                os << "| " << it.key() << " | " << it.value().get<std::string>() << " |\n";
        }
        text = os.str();
    } else {
        text = j.dump(2) + "\n";
    }
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

std::string sibling_path(const std::string& out_path, const std::string& name) {
    if (out_path.empty()) return name;
    auto slash = out_path.find_last_of('/');
    if (slash == std::string::npos) return name;
    return out_path.substr(0, slash + 1) + name;
}

int run_decompose(const std::string& group, int degree, const std::string& format,
                  const std::string& out) {
    ComponentTable table;
    if (group == "g2")
        table = g2_build_tables().table;
    else if (group == "spin7")
        table = spin7_build_tables().table;
    else
        throw CLI::ValidationError("--group must be g2 or spin7");
    if (!table.by_degree.count(degree))
        throw CLI::ValidationError("--degree out of range for " + group);
    Json j;
    j["command"] = "decompose";
    j["group"] = group;
    j["degree"] = degree;
    j["components"] = Json::array();
    for (const auto& ls : table.by_degree.at(degree)) {
        Json c;
        c["label"] = ls.label;
        c["dim"] = ls.space.dim();
        c["basis"] = Json::array();
        for (int i = 0; i < ls.space.dim(); ++i) c["basis"].push_back(ls.space.basis_form(i).str());
        j["components"].push_back(c);
    }
    emit(j, format, out);
    return kExitPass;
}

int run_verify(const std::string& suite, int samples, std::uint64_t seed,
               const std::string& format, const std::string& out, bool paper_map) {
    std::vector<SuiteReport> reports;
    if (suite == "r5" || suite == "all") reports.push_back(r5_verify(samples, seed));
    if (suite == "koszul" || suite == "all") reports.push_back(koszul_property_suite(samples, seed));
    if (suite == "g2" || suite == "all") reports.push_back(g2_suite(samples, seed));
    if (suite == "spin7" || suite == "all") reports.push_back(spin7_suite(samples, seed));
    if (reports.empty()) throw CLI::ValidationError("--suite must be one of r5, koszul, g2, spin7, all");

    Json j;
    j["command"] = "verify";
    j["suite"] = suite;
    j["samples"] = samples;
    j["seed"] = seed;
    bool pass = true;
    j["suites"] = Json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass();
        j["suites"].push_back(suite_report_to_json(r));
    }
    j["pass"] = pass;
    if (paper_map) {
        Json cm;
        for (const auto& [id, desc] : claim_map()) cm[id] = desc;
        j["claim_map"] = cm;
    }
    if (suite == "spin7" || suite == "all") {
        // the omitted projection matrix is exported alongside the report
        auto art = spin7_p2_artifact(spin7_build_tables());
        std::string p2_path = sibling_path(out, "p2_matrix.json");
        write_text_file(p2_path, p2_artifact_to_json(art).dump(2) + "\n");
        j["p2_artifact"] = p2_path;
    }
    emit(j, format, out);
    return pass ? kExitPass : kExitVerificationFailure;
}

int run_check_prime(const std::string& in, const std::string& mode, bool transitive, int samples,
                    std::uint64_t seed, const std::string& format, const std::string& out) {
    Subspace e = subspace_from_json(read_json_file(in));
    Json j;
    j["command"] = "check-prime";
    j["input"] = in;
    j["mode"] = mode;
    j["samples"] = samples;
    j["seed"] = seed;
    bool failed = false;
    if (mode == "invariant") {
        PrimeVerdict v = prime_check_invariant(e, Form::covector(e.n(), 1), transitive);
        j["verdict"] = prime_verdict_to_json(v);
        j["epistemic"] = v.status == PrimeStatus::certified_prime
                             ? "certificate (invariant subspace, transitive action assumed)"
                             : (v.status == PrimeStatus::not_prime ? "refuted by witness"
                                                                   : "single-covector evidence only");
        failed = v.status == PrimeStatus::not_prime;
    } else if (mode == "witness") {
        auto w = nonprime_witness_search(e, samples, seed);
        if (w) {
            PrimeVerdict v{PrimeStatus::not_prime, PrimeMode::witness_search,
                           PrimeWitness{w->alpha, w->lambda}, {}, false};
            j["verdict"] = prime_verdict_to_json(v);
            j["epistemic"] = "refuted by witness";
            failed = true;
        } else {
            PrimeVerdict v{PrimeStatus::evidence_only, PrimeMode::witness_search, {}, {}, false};
            j["verdict"] = prime_verdict_to_json(v);
            j["epistemic"] = "no witness found; proves nothing";
        }
    } else if (mode == "numeric") {
        auto cert = numeric_prime_certificate(e, samples > 0 ? samples : 4, 1e-8, seed);
        PrimeVerdict v{cert.below_tolerance ? PrimeStatus::not_prime : PrimeStatus::evidence_only,
                       PrimeMode::numeric_sphere, {}, cert.minimum, false};
        j["verdict"] = prime_verdict_to_json(v);
        j["numeric"] = numeric_certificate_to_json(cert);
        j["epistemic"] = cert.below_tolerance ? "numeric minimum below tolerance"
                                              : "positive numeric floor; evidence only";
        failed = cert.below_tolerance;
    } else {
        throw CLI::ValidationError("--mode must be invariant, witness, or numeric");
    }
    emit(j, format, out);
    return failed ? kExitVerificationFailure : kExitPass;
}

int run_check_complete_prime(const std::string& e_path, const std::string& f_path,
                             const std::string& lambda_mode, int samples, std::uint64_t seed,
                             const std::string& format, const std::string& out) {
    Subspace e = subspace_from_json(read_json_file(e_path));
    std::optional<Subspace> f;
    if (!f_path.empty()) f = subspace_from_json(read_json_file(f_path));
    SymbolChain chain = SymbolChain::make(e);
    Json j;
    j["command"] = "check-complete-prime";
    j["e"] = e_path;
    if (f) j["f"] = f_path;
    j["lambda_mode"] = lambda_mode;
    j["samples"] = samples;
    j["seed"] = seed;
    bool pass = true;
    if (lambda_mode == "invariant") {
        Form w1 = Form::covector(e.n(), 1);
        auto rep = f ? build_type2_symbol_complex(*f, chain, w1)
                     : build_type1_symbol_complex(chain, w1);
        j["report"] = complex_report_to_json(rep);
        j["epistemic"] =
            "exactness at w1; certifies complete primeness only for invariant subspaces "
            "under a transitive action";
        pass = rep.verdict;
    } else if (lambda_mode == "generic") {
        auto lambdas = lambda_sampler(e.n(), samples, seed);
        ComplexOptions fast;
        fast.check_composition = false;
        Json samples_json = Json::array();
        for (const auto& lam : lambdas) {
            auto rep = f ? build_type2_symbol_complex(*f, chain, lam, fast)
                         : build_type1_symbol_complex(chain, lam, fast);
            pass = pass && rep.verdict;
            samples_json.push_back(rep.verdict);
        }
        Form w1 = Form::covector(e.n(), 1);
        auto rep = f ? build_type2_symbol_complex(*f, chain, w1)
                     : build_type1_symbol_complex(chain, w1);
        pass = pass && rep.verdict;
        j["report"] = complex_report_to_json(rep);
        j["sampled_verdicts"] = samples_json;
        j["epistemic"] = "generic-lambda evidence (" + std::to_string(samples) + " samples)";
    } else {
        throw CLI::ValidationError("--lambda-mode must be invariant or generic");
    }
    j["pass"] = pass;
    emit(j, format, out);
    return pass ? kExitPass : kExitVerificationFailure;
}

int run_mp_search(int n, const std::string& strategy, int budget, std::uint64_t seed,
                  const std::string& format, const std::string& out) {
    MpStrategy s = strategy == "randomized" ? MpStrategy::randomized : MpStrategy::greedy;
    if (strategy != "randomized" && strategy != "greedy")
        throw CLI::ValidationError("--strategy must be greedy or randomized");
    auto cert = mp_lower_bound_search(n, s, budget, seed);
    Json j = mp_certificate_to_json(cert);
    j["floor"] = (n / 2) * (n / 2) - 1;
    emit(j, format, out);
    return kExitPass;
}

int run_mp_replay(const std::string& in, const std::string& format, const std::string& out) {
    MpCertificate cert = mp_certificate_from_json(read_json_file(in));
    Json j;
    j["command"] = "mp-replay";
    j["input"] = in;
    try {
        Subspace e = mp_replay(cert);
        j["pass"] = true;
        j["n"] = e.n();
        j["dim"] = e.dim();
        emit(j, format, out);
        return kExitPass;
    } catch (const std::runtime_error& err) {
        j["pass"] = false;
        j["error"] = err.what();
        emit(j, format, out);
        return kExitVerificationFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for invariant symbol complexes and prime subspaces"};
    app.require_subcommand(1);

    std::string format = "json", out, group = "g2", suite = "all";
    std::string in_path, f_path, mode = "invariant", lambda_mode = "invariant";
    std::string strategy = "greedy";
    int degree = 2, samples = 100, budget = 500, n = 8;
    std::uint64_t seed = 1;
    bool transitive = false, paper_map = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or markdown");
        cmd->add_option("--out", out, "write the report to this path");
    };

    auto* dec = app.add_subcommand("decompose", "print the invariant decomposition of a degree");
    dec->add_option("--group", group, "g2 or spin7")->required();
    dec->add_option("--degree", degree, "exterior degree")->required();
    add_common(dec);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite, "r5, koszul, g2, spin7, or all");
    ver->add_option("--samples", samples, "random covector samples per complex");
    ver->add_option("--seed", seed, "seed for all sampled randomness");
    ver->add_flag("--paper-map", paper_map, "include the claim map in the report");
    add_common(ver);

    auto* cp = app.add_subcommand("check-prime", "prime test for a subspace file");
    cp->add_option("--in", in_path, "subspace JSON file")->required();
    cp->add_option("--mode", mode, "invariant, witness, or numeric");
    cp->add_flag("--transitive", transitive,
                 "assume the subspace is invariant under a transitively acting group");
    cp->add_option("--samples", samples, "trials (witness) or restarts (numeric)");
    cp->add_option("--seed", seed, "seed");
    add_common(cp);

    auto* ccp = app.add_subcommand("check-complete-prime", "symbol-complex exactness for a file");
    ccp->add_option("--e", in_path, "generator subspace JSON file")->required();
    ccp->add_option("--f", f_path, "leading subspace JSON file (type-2)");
    ccp->add_option("--lambda-mode", lambda_mode, "invariant or generic");
    ccp->add_option("--samples", samples, "sampled covectors in generic mode");
    ccp->add_option("--seed", seed, "seed");
    add_common(ccp);

    auto* mps = app.add_subcommand("mp-search", "lower-bound search for prime subspaces of 2-forms");
    mps->add_option("--n", n, "ambient dimension")->required();
    mps->add_option("--strategy", strategy, "greedy or randomized");
    mps->add_option("--budget", budget, "extension attempts allowed");
    mps->add_option("--seed", seed, "seed");
    add_common(mps);

    auto* mpr = app.add_subcommand("mp-replay", "re-verify a search certificate exactly");
    mpr->add_option("--in", in_path, "certificate JSON file")->required();
    add_common(mpr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (dec->parsed()) return run_decompose(group, degree, format, out);
        if (ver->parsed()) return run_verify(suite, samples, seed, format, out, paper_map);
        if (cp->parsed())
            return run_check_prime(in_path, mode, transitive, samples, seed, format, out);
        if (ccp->parsed())
            return run_check_complete_prime(in_path, f_path, lambda_mode, samples, seed, format,
                                            out);
        if (mps->parsed()) return run_mp_search(n, strategy, budget, seed, format, out);
        if (mpr->parsed()) return run_mp_replay(in_path, format, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
