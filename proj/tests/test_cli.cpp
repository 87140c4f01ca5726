#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <string>
#include <unistd.h>

#include "holoprime/holoprime.hpp"

using namespace holoprime;

namespace {

std::string cli() { return HOLOPRIME_CLI_PATH; }

std::string tmp_path(const std::string& name) {
    return "/tmp/holoprime_test_" + std::to_string(getpid()) + "_" + name;
}

int run(const std::string& args) {
    std::string cmd = cli() + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

int run_to(const std::string& args, const std::string& out) {
    return run(args + " --out " + out);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("decompose prints labeled components") {
    std::string out = tmp_path("dec.json");
    REQUIRE(run_to("decompose --group spin7 --degree 2", out) == 0);
    Json j = read_json_file(out);
    REQUIRE(j["components"].size() == 2);
    REQUIRE(j["components"][0]["label"] == "L2_7");
    REQUIRE(j["components"][0]["dim"] == 7);
    REQUIRE(j["components"][1]["dim"] == 21);

    REQUIRE(run_to("decompose --group g2 --degree 0", out) == 0);
    j = read_json_file(out);
    REQUIRE(j["components"].size() == 1);
    REQUIRE(j["components"][0]["dim"] == 1);

    REQUIRE(run("decompose --group e8 --degree 2") == 2);
    REQUIRE(run("decompose --group g2 --degree 9") == 2);
    REQUIRE(run("decompose --degree 2") == 2);
}

TEST_CASE("verify reports are deterministic and exit by verdict") {
    std::string a = tmp_path("v1.json"), b = tmp_path("v2.json");
    REQUIRE(run_to("verify --suite r5 --samples 10 --seed 1", a) == 0);
    REQUIRE(run_to("verify --suite r5 --samples 10 --seed 1", b) == 0);
    REQUIRE(slurp(a) == slurp(b));
    REQUIRE(slurp(a).find("\"pass\": true") != std::string::npos);

    std::string md = tmp_path("v.md");
    REQUIRE(run_to("verify --suite koszul --samples 5 --seed 2 --format markdown --paper-map", md) == 0);
    std::string text = slurp(md);
    REQUIRE(text.rfind("# holoprime report", 0) == 0);
    REQUIRE(text.find("koszul-exactness") != std::string::npos);
    REQUIRE(text.find("claim map") != std::string::npos);
}

TEST_CASE("check-prime on subspace fixtures") {
    G2Tables t = g2_build_tables();
    std::string fx214 = tmp_path("l214.json");
    write_text_file(fx214, subspace_to_json(t.component(2, 14)).dump(2));
    std::string out = tmp_path("cp.json");
    REQUIRE(run_to("check-prime --in " + fx214 + " --transitive", out) == 0);
    Json j = read_json_file(out);
    REQUIRE(j["verdict"]["status"] == "certified_prime");

    // without the transitivity flag: evidence only, still exit 0
    REQUIRE(run_to("check-prime --in " + fx214, out) == 0);
    j = read_json_file(out);
    REQUIRE(j["verdict"]["status"] == "evidence_only");

    std::string fxw12 = tmp_path("w12.json");
    write_text_file(fxw12,
                    subspace_to_json(Subspace::span({Form::blade(4, {1, 2})})).dump(2));
    REQUIRE(run_to("check-prime --in " + fxw12 + " --mode witness --samples 10", out) == 1);
    j = read_json_file(out);
    REQUIRE(j["verdict"]["status"] == "not_prime");
    REQUIRE(j["verdict"].contains("witness"));
    // the witness re-verifies with one wedge
    Form alpha = form_from_json(j["verdict"]["witness"]["alpha"]);
    Form lambda = form_from_json(j["verdict"]["witness"]["lambda"]);
    REQUIRE(wedge(alpha, lambda).is_zero());

    std::string fxsu3 = tmp_path("su3.json");
    write_text_file(fxsu3, subspace_to_json(su_embedding_space(3)).dump(2));
    REQUIRE(run_to("check-prime --in " + fxsu3 + " --mode numeric --samples 4", out) == 0);
    j = read_json_file(out);
    REQUIRE(j["verdict"]["status"] == "evidence_only");
    REQUIRE(j["numeric"]["minimum"].get<double>() > 0.5);

    REQUIRE(run("check-prime --in /nonexistent.json") == 2);
    std::string bad = tmp_path("bad.json");
    write_text_file(bad, "{\"n\": 4}");
    REQUIRE(run("check-prime --in " + bad) == 2);
}

TEST_CASE("check-complete-prime on fixtures") {
    G2Tables t = g2_build_tables();
    std::string fxpsi = tmp_path("psi.json");
    write_text_file(fxpsi, subspace_to_json(t.component(4, 1)).dump(2));
    std::string out = tmp_path("ccp.json");
    REQUIRE(run_to("check-complete-prime --e " + fxpsi + " --lambda-mode generic --samples 5 --seed 4",
                   out) == 0);
    Json j = read_json_file(out);
    REQUIRE(j["pass"] == true);
    REQUIRE(j["report"]["verdict"] == true);
    REQUIRE(j["report"]["euler_characteristic"] == 0);

    std::string fx27 = tmp_path("l27.json");
    write_text_file(fx27, subspace_to_json(t.component(2, 7)).dump(2));
    REQUIRE(run_to("check-complete-prime --e " + fx27, out) == 1);
    j = read_json_file(out);
    REQUIRE(j["report"]["verdict"] == false);
    REQUIRE(j["report"]["failing_position"].get<int>() >= 0);

    // type-2 with a zero F and full E: trivially exact tail
    std::string fxzero = tmp_path("zero1.json");
    std::string fxfull = tmp_path("full2.json");
    write_text_file(fxzero, subspace_to_json(Subspace::zero(5, 1)).dump(2));
    write_text_file(fxfull, subspace_to_json(Subspace::full(5, 2)).dump(2));
    REQUIRE(run_to("check-complete-prime --e " + fxfull + " --f " + fxzero, out) == 0);
}

TEST_CASE("mp search and replay round-trip") {
    std::string cert = tmp_path("cert.json");
    REQUIRE(run_to("mp-search --n 8 --seed 11 --budget 200", cert) == 0);
    Json j = read_json_file(cert);
    REQUIRE(j["dim"].get<int>() >= 15);
    REQUIRE(j["floor"] == 15);
    std::string out = tmp_path("replay.json");
    REQUIRE(run_to("mp-replay --in " + cert, out) == 0);

    // grow a certificate with steps, then tamper with the attachment form
    std::string cert9 = tmp_path("cert9.json");
    REQUIRE(run_to("mp-search --n 9 --seed 11 --budget 200", cert9) == 0);
    Json c9 = read_json_file(cert9);
    REQUIRE(c9["steps"].size() > 0);
    // alpha := lambda ^ (a covector), which lies inside L(lambda)
    Json lam = c9["steps"][0]["lambdas"][0];
    Form lam_form = form_from_json(lam);
    Form bad_alpha = wedge(lam_form, Form::covector(lam_form.n(), 2));
    c9["steps"][0]["alphas"][0] = form_to_json(bad_alpha);
    std::string tampered = tmp_path("tampered.json");
    write_text_file(tampered, c9.dump(2));
    REQUIRE(run_to("mp-replay --in " + tampered, out) == 1);
}

TEST_CASE("ambient dimension cap from the environment") {
    auto run_env = [&](const std::string& env, const std::string& args) {
        std::string cmd = env + " " + cli() + " " + args + " >/dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    // spin7 needs R^8 and g2 needs R^7; a cap below that is a config error
    REQUIRE(run_env("HOLOPRIME_MAX_DIM=6", "decompose --group spin7 --degree 2") == 2);
    REQUIRE(run_env("HOLOPRIME_MAX_DIM=8", "decompose --group spin7 --degree 2") == 0);
    REQUIRE(run_env("HOLOPRIME_MAX_DIM=7", "decompose --group g2 --degree 2") == 0);
    REQUIRE(run_env("HOLOPRIME_MAX_DIM=6", "decompose --group g2 --degree 2") == 2);
}

TEST_CASE("serialization round trips") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + int(rng() % 6);
        int k = int(rng() % (n + 1));
        Form f(n, k);
        for (auto m : blade_list(n, k)) {
            long num = long(rng() % 19) - 9;
            long den = 1 + long(rng() % 6);
            if (num != 0) f.add_term(m, rat(num, den));
        }
        REQUIRE(form_from_json(form_to_json(f)) == f);
    }
    G2Tables t = g2_build_tables();
    for (int l : {7, 14})
        REQUIRE(subspace_from_json(subspace_to_json(t.component(2, l))) == t.component(2, l));
    auto cert = mp_lower_bound_search(7, MpStrategy::greedy, 100, 3);
    auto back = mp_certificate_from_json(mp_certificate_to_json(cert));
    REQUIRE(back.n == cert.n);
    REQUIRE(back.dim == cert.dim);
    REQUIRE(back.steps.size() == cert.steps.size());
    REQUIRE(mp_replay(back).dim() == cert.dim);
}
