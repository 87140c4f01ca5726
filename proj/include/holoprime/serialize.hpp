#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "holoprime/components.hpp"
#include "holoprime/mp_search.hpp"
#include "holoprime/report.hpp"
#include "holoprime/spin7.hpp"
#include "holoprime/symbol_complex.hpp"

namespace holoprime {

// insertion-ordered JSON keeps report bytes stable run to run
using Json = nlohmann::ordered_json;

inline Json form_to_json(const Form& f) {
    Json j;
    j["n"] = f.n();
    j["k"] = f.degree();
    j["terms"] = Json::array();
    for (const auto& [mask, v] : f.terms()) {
        Json t;
        t["idx"] = mask_to_indices(mask);
        t["num"] = v.get_num().get_str();
        t["den"] = v.get_den().get_str();
        j["terms"].push_back(t);
    }
    return j;
}

inline Form form_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("k") || !j.contains("terms"))
        throw std::invalid_argument("form json: need n, k, terms");
    Form f(j.at("n").get<int>(), j.at("k").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<int> idx = t.at("idx").get<std::vector<int>>();
        Rational num = rat_parse(t.at("num").get<std::string>());
        Rational den = rat_parse(t.at("den").get<std::string>());
        if (den == 0) throw std::invalid_argument("form json: zero denominator");
        f.add_term(indices_to_mask(idx, f.n()), num / den);
    }
    return f;
}

inline Json subspace_to_json(const Subspace& s) {
    Json j;
    j["n"] = s.n();
    j["k"] = s.degree();
    j["basis"] = Json::array();
    for (int i = 0; i < s.dim(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < s.basis().cols(); ++c) row.push_back(rat_str(s.basis()(i, c)));
        j["basis"].push_back(row);
    }
    return j;
}

inline Subspace subspace_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("k") || !j.contains("basis"))
        throw std::invalid_argument("subspace json: need n, k, basis");
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    const auto& rows = j.at("basis");
    int cols = int(binomial(n, k));
    Mat m(int(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != cols)
            throw std::invalid_argument("subspace json: row length must be C(n,k)");
        for (int c = 0; c < cols; ++c)
            m(int(i), c) = rat_parse(rows[i][c].get<std::string>());
    }
    return Subspace::from_rows(n, k, std::move(m));
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Json prime_verdict_to_json(const PrimeVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["mode"] = to_string(v.mode);
    j["transitivity_assumed"] = v.transitivity_assumed;
    if (v.witness) {
        j["witness"]["alpha"] = form_to_json(v.witness->alpha);
        j["witness"]["lambda"] = form_to_json(v.witness->lambda);
    }
    if (v.evidence_minimum) j["evidence_minimum"] = *v.evidence_minimum;
    return j;
}

inline Json complex_report_to_json(const SymbolComplexReport& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j["lambda"] = form_to_json(r.lambda);
    j["stages"] = Json::array();
    for (const auto& s : r.stages) {
        Json st;
        st["space"] = s.label;
        st["dim"] = s.dim;
        st["out_rank"] = s.out_rank;
        j["stages"].push_back(st);
    }
    j["exact_at"] = r.exact_at;
    j["euler_characteristic"] = r.euler_characteristic;
    j["verdict"] = r.verdict;
    j["failing_position"] = r.failing_position;
    return j;
}

inline Json suite_report_to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.name;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["pass"] = r.pass();
    j["checks"] = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["id"] = c.id;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    return j;
}

inline Json classification_to_json(const ClassificationReport& r) {
    Json j;
    j["matches_expected"] = r.matches;
    j["certified"] = r.certified;
    j["expected"] = r.expected;
    j["entries"] = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        x["degree"] = e.degree;
        x["label"] = e.label;
        x["dim"] = e.dim;
        x["verdict"] = prime_verdict_to_json(e.verdict);
        j["entries"].push_back(x);
    }
    return j;
}

inline Json numeric_certificate_to_json(const NumericCertificate& c) {
    Json j;
    j["minimum"] = c.minimum;
    j["per_restart"] = c.per_restart;
    j["restarts"] = c.restarts;
    j["tolerance"] = c.tolerance;
    j["seed"] = c.seed;
    j["below_tolerance"] = c.below_tolerance;
    return j;
}

inline Json mp_certificate_to_json(const MpCertificate& c) {
    Json j;
    j["n"] = c.n;
    j["dim"] = c.dim;
    j["strategy"] = to_string(c.strategy);
    j["seed"] = c.seed;
    j["budget_used"] = c.budget_used;
    j["base"]["kind"] = "su_embedding";
    j["base"]["m"] = c.base_m;
    j["base"]["ambient"] = c.base_ambient;
    j["base"]["definite"] = c.base_definite;
    j["steps"] = Json::array();
    for (const auto& s : c.steps) {
        Json st;
        st["ambient_before"] = s.ambient_before;
        st["lambdas"] = Json::array();
        for (const auto& l : s.lambdas) st["lambdas"].push_back(form_to_json(l));
        st["alphas"] = Json::array();
        for (const auto& a : s.alphas) st["alphas"].push_back(form_to_json(a));
        st["evidence_only"] = s.evidence_only;
        j["steps"].push_back(st);
    }
    j["numeric"] = numeric_certificate_to_json(c.numeric);
    return j;
}

inline MpCertificate mp_certificate_from_json(const Json& j) {
    MpCertificate c;
    c.n = j.at("n").get<int>();
    c.dim = j.at("dim").get<int>();
    c.strategy = j.at("strategy").get<std::string>() == "randomized" ? MpStrategy::randomized
                                                                     : MpStrategy::greedy;
    c.seed = j.at("seed").get<std::uint64_t>();
    c.budget_used = j.value("budget_used", 0);
    c.base_m = j.at("base").at("m").get<int>();
    c.base_ambient = j.at("base").at("ambient").get<int>();
    c.base_definite = j.at("base").value("definite", 0);
    for (const auto& st : j.at("steps")) {
        MpStepRecord r;
        r.ambient_before = st.at("ambient_before").get<int>();
        for (const auto& l : st.at("lambdas")) r.lambdas.push_back(form_from_json(l));
        for (const auto& a : st.at("alphas")) r.alphas.push_back(form_from_json(a));
        r.evidence_only = st.at("evidence_only").get<bool>();
        c.steps.push_back(std::move(r));
    }
    return c;
}

inline Json p2_artifact_to_json(const P2MatrixArtifact& a) {
    Json j;
    j["description"] =
        "projection of w1 ^ (degree-3 48-dim piece) onto the 27-dim degree-4 piece";
    j["rank"] = a.rank;
    j["source_basis"] = mat_to_json(a.basis_l348);
    j["target_basis"] = mat_to_json(a.basis_l427);
    j["matrix_in_subspace_bases"] = mat_to_json(a.subspace_coords);
    j["matrix_in_blade_coordinates"] = mat_to_json(a.blade_images);
    return j;
}

// ---------------------------------------------------------------------------
// rendering and file helpers
// ---------------------------------------------------------------------------

inline std::string render_suite_markdown(const Json& suite) {
    std::ostringstream os;
    os << "## suite " << suite.value("suite", "?") << "\n\n";
    os << "- seed: " << suite.value("seed", 0) << ", samples: " << suite.value("samples", 0)
       << ", pass: " << (suite.value("pass", false) ? "yes" : "NO") << "\n\n";
    os << "| check | result | detail |\n|---|---|---|\n";
    for (const auto& c : suite.value("checks", Json::array())) {
        os << "| " << c.value("id", "?") << " | " << (c.value("pass", false) ? "pass" : "FAIL")
           << " | " << c.value("detail", "") << " |\n";
    }
    os << "\n";
    return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace holoprime
