#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "holoprime/components.hpp"
#include "holoprime/parallel.hpp"
#include "holoprime/report.hpp"

namespace holoprime {

/// The associative 3-form on R^7 in the standard coordinates.
inline Form g2_associative_form() {
    Form phi(7, 3);
    auto add = [&](int a, int b, int c, int s) {
        phi.add_term(indices_to_mask({a, b, c}, 7), Rational(s));
    };
    add(1, 2, 3, 1);
    add(1, 4, 5, 1);
    add(1, 6, 7, 1);
    add(2, 4, 6, 1);
    add(2, 5, 7, -1);
    add(3, 4, 7, -1);
    add(3, 5, 6, -1);
    return phi;
}

/// Tables for the G2 world on R^7: phi, psi = *phi, the distinguished bases
/// of the 7-dimensional components, and the invariant decomposition of every
/// exterior power. The scaling of the e^k_i bases follows the raw defining
/// wedges with no normalization; the proof constants depend on it.
struct G2Tables {
    Form phi, psi;
    std::array<Form, 7> e2, e3, e4, e5;
    ComponentTable table;

    const Subspace& component(int k, int l) const {
        return table.component(k, "L" + std::to_string(k) + "_" + std::to_string(l));
    }
};

inline G2Tables g2_build_tables() {
    G2Tables t;
    t.phi = g2_associative_form();
    t.psi = hodge_star(t.phi);
    for (int i = 0; i < 7; ++i) {
        Form wi = Form::covector(7, i + 1);
        t.e4[i] = wedge(t.phi, wi);
        t.e5[i] = wedge(t.psi, wi);
        t.e3[i] = hodge_star(t.e4[i]);
        t.e2[i] = hodge_star(t.e5[i]);
    }
    auto span7 = [&](const std::array<Form, 7>& fs) {
        return Subspace::span(std::vector<Form>(fs.begin(), fs.end()));
    };
    Subspace l27 = span7(t.e2);
    Subspace l37 = span7(t.e3);
    Subspace l47 = span7(t.e4);
    Subspace l57 = span7(t.e5);
    Subspace l31 = Subspace::span({t.phi});
    Subspace l41 = Subspace::span({t.psi});
    t.table.n = 7;
    t.table.by_degree[0] = {{"L0_1", Subspace::full(7, 0)}};
    t.table.by_degree[1] = {{"L1_7", Subspace::full(7, 1)}};
    t.table.by_degree[2] = {{"L2_7", l27}, {"L2_14", orthogonal_complement(l27)}};
    t.table.by_degree[3] = {{"L3_1", l31},
                            {"L3_7", l37},
                            {"L3_27", orthogonal_complement(subspace_sum(l31, l37))}};
    t.table.by_degree[4] = {{"L4_1", l41},
                            {"L4_7", l47},
                            {"L4_27", orthogonal_complement(subspace_sum(l41, l47))}};
    t.table.by_degree[5] = {{"L5_7", l57}, {"L5_14", orthogonal_complement(l57)}};
    t.table.by_degree[6] = {{"L6_7", Subspace::full(7, 6)}};
    t.table.by_degree[7] = {{"L7_1", Subspace::full(7, 7)}};

    // construction fails loudly if any dimension or orthogonality is off
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) throw std::logic_error("g2_build_tables: " + what);
    };
    const int want[8][3] = {{1, -1, -1}, {7, -1, -1}, {7, 14, -1}, {1, 7, 27},
                            {1, 7, 27},  {7, 14, -1}, {7, -1, -1}, {1, -1, -1}};
    for (int k = 0; k <= 7; ++k) {
        const auto& comps = t.table.by_degree.at(k);
        long long total = 0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            expect(comps[i].space.dim() == want[k][i], "dimension of " + comps[i].label);
            total += comps[i].space.dim();
            for (std::size_t j = i + 1; j < comps.size(); ++j) {
                bool orth = true;
                for (int a = 0; a < comps[i].space.dim() && orth; ++a)
                    for (int b = 0; b < comps[j].space.dim() && orth; ++b)
                        orth = inner_product(comps[i].space.basis_form(a),
                                             comps[j].space.basis_form(b)) == 0;
                expect(orth, comps[i].label + " not orthogonal to " + comps[j].label);
            }
        }
        expect(total == (long long)binomial(7, k), "degree " + std::to_string(k) + " dims");
    }
    // Hodge star exchanges (k,l) and (7-k,l)
    for (const auto& [k, comps] : t.table.by_degree) {
        for (const auto& ls : comps) {
            std::vector<Form> starred;
            for (int i = 0; i < ls.space.dim(); ++i)
                starred.push_back(hodge_star(ls.space.basis_form(i)));
            Subspace img = Subspace::span(7, 7 - k, starred);
            std::string dual_label = "L" + std::to_string(7 - k) +
                                     ls.label.substr(ls.label.find('_'));
            expect(img == t.table.component(7 - k, dual_label), "star image of " + ls.label);
        }
    }
    expect(inner_product(t.phi, t.phi) == 7, "phi norm");
    expect(wedge(t.phi, t.psi) == Form::volume(7) * Rational(7), "phi ^ psi");
    return t;
}

struct RelationCheck {
    std::string id;
    bool pass;
    int dim;
};

/// The product relations of the invariant components, checked as exact
/// subspace equalities.
inline std::vector<RelationCheck> g2_verify_relations(const G2Tables& t) {
    std::vector<RelationCheck> out;
    auto rel = [&](const std::string& id, const Subspace& lhs, const Subspace& rhs) {
        out.push_back(RelationCheck{id, lhs == rhs, lhs.dim()});
    };
    auto c = [&](int k, int l) -> const Subspace& { return t.component(k, l); };
    rel("L2_7*L1=L3", product_space(c(2, 7), 1), Subspace::full(7, 3));
    rel("L2_14*L1=L3_7+L3_27", product_space(c(2, 14), 1), subspace_sum(c(3, 7), c(3, 27)));
    rel("L3_7*L1=L4", product_space(c(3, 7), 1), Subspace::full(7, 4));
    rel("L3_27*L1=L4_7+L4_27", product_space(c(3, 27), 1), subspace_sum(c(4, 7), c(4, 27)));
    rel("L4_7*L1=L5", product_space(c(4, 7), 1), Subspace::full(7, 5));
    rel("L4_27*L1=L5", product_space(c(4, 27), 1), Subspace::full(7, 5));
    rel("L5_7*L1=L6", product_space(c(5, 7), 1), Subspace::full(7, 6));
    rel("L5_14*L1=L6", product_space(c(5, 14), 1), Subspace::full(7, 6));
    // canonical isomorphisms pinning the 7-dimensional pieces
    rel("L3_1*L1=L4_7", product_space(c(3, 1), 1), c(4, 7));
    std::vector<Form> starred;
    for (int i = 0; i < 7; ++i) starred.push_back(hodge_star(Form::covector(7, i + 1)));
    rel("L6_7=*L1", Subspace::span(7, 6, starred), c(6, 7));
    return out;
}

/// Certified-prime component sums must equal exactly this list.
inline std::vector<std::string> g2_expected_prime_labels() {
    return {"L2_7", "L2_14", "L3_1", "L3_7", "L3_1+L3_7", "L4_1"};
}

inline ClassificationReport g2_classify_prime_subspaces(const G2Tables& t) {
    return classify_prime_component_sums(t.table, {2, 3, 4, 5, 6}, Form::covector(7, 1),
                                         /*transitive=*/true, g2_expected_prime_labels());
}

namespace detail {

inline bool complex_exact_at_samples(const SymbolChain& chain, const Subspace* f, int samples,
                                     std::uint64_t seed) {
    if (samples <= 0) return true;
    auto lambdas = lambda_sampler(chain.n(), samples, seed);
    ComplexOptions fast;
    fast.check_composition = false;  // composition is structurally zero on the E_i chain
    auto results = parallel_map_bool(samples, [&](int i) {
        auto rep = f ? build_type2_symbol_complex(*f, chain, lambdas[i], fast)
                     : build_type1_symbol_complex(chain, lambdas[i], fast);
        return rep.verdict;
    });
    return all_true(results);
}

inline std::string dims_string(const SymbolComplexReport& rep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rep.stages.size(); ++i)
        os << (i ? "," : "") << rep.stages[i].dim;
    return os.str();
}

}  // namespace detail

/// Full verification of the G2 elliptic-complex list: the three displayed
/// complexes, the proof constants, the one-dimensional intersection claim,
/// and the exhaustiveness scans over invariant generators.
inline SuiteReport g2_verify_complex_list(const G2Tables& t, int samples, std::uint64_t seed) {
    SuiteReport rep;
    rep.name = "g2-complex-list";
    rep.samples = samples;
    rep.seed = seed;
    const Form w1 = Form::covector(7, 1);
    auto c = [&](int k, int l) -> const Subspace& { return t.component(k, l); };

    // (a) type-1 complex generated by <psi>
    SymbolChain psi_chain = SymbolChain::make(c(4, 1));
    auto rep1 = build_type1_symbol_complex(psi_chain, w1);
    rep.add("G2-1-type1-psi-omega1", rep1.verdict, "stage dims " + detail::dims_string(rep1));
    rep.add("G2-1-shape", detail::dims_string(rep1) == "1,7,21,35,34,14",
            detail::dims_string(rep1));
    rep.add("G2-1-quotients",
            psi_chain.quotient(0).complement() == subspace_sum(c(4, 7), c(4, 27)) &&
                psi_chain.quotient(1).complement() == c(5, 14),
            "quotients realized on L4_7+L4_27 and L5_14");
    rep.add("G2-1-type1-psi-samples", detail::complex_exact_at_samples(psi_chain, nullptr, samples, seed));

    // (b) the claim dim(w1 ^ L4 meet L5_7) = 1 with generator w1 ^ psi
    Subspace w1l4 = image_subspace(mult_map(w1, 4), 7, 5);
    Subspace meet = subspace_intersect(w1l4, c(5, 7));
    rep.add("G2-claim-dim", meet.dim() == 1, "dim " + std::to_string(meet.dim()));
    rep.add("G2-claim-generator", meet == Subspace::span({wedge(w1, t.psi)}));

    // (c) the two type-2 complexes
    SymbolChain chain327 = SymbolChain::make(c(3, 27));
    auto rep2 = build_type2_symbol_complex(c(2, 7), chain327, w1);
    rep.add("G2-2-type2-L27-L327-omega1", rep2.verdict, "stage dims " + detail::dims_string(rep2));
    rep.add("G2-2-shape", detail::dims_string(rep2) == "7,8,1", detail::dims_string(rep2));
    rep.add("G2-2-samples",
            detail::complex_exact_at_samples(chain327, &c(2, 7), samples, seed + 1));
    Subspace f3 = subspace_sum(c(3, 1), c(3, 7));
    SymbolChain chain427 = SymbolChain::make(c(4, 27));
    auto rep3 = build_type2_symbol_complex(f3, chain427, w1);
    rep.add("G2-3-type2-phi37-L427-omega1", rep3.verdict, "stage dims " + detail::dims_string(rep3));
    rep.add("G2-3-shape", detail::dims_string(rep3) == "8,8", detail::dims_string(rep3));
    rep.add("G2-3-samples", detail::complex_exact_at_samples(chain427, &f3, samples, seed + 2));

    // (d) proof constants, exact
    Projector p1(subspace_sum(c(3, 1), c(3, 7)));
    Projector p2(c(4, 1));
    Projector p3(subspace_sum(c(4, 1), c(4, 7)));
    bool ok = p1.project(wedge(t.e2[0], w1)) == t.phi * rat(3, 7);
    rep.add("G2-const-p1-e21", ok);
    ok = true;
    for (int i = 1; i <= 3; ++i) {
        // 1-based pairs (2i, 2i+1): positive half on the even index
        ok = ok && p1.project(wedge(t.e2[2 * i - 1], w1)) == t.e3[2 * i] * rat(1, 2);
        ok = ok && p1.project(wedge(t.e2[2 * i], w1)) == t.e3[2 * i - 1] * rat(-1, 2);
    }
    rep.add("G2-const-p1-pairs", ok);
    rep.add("G2-const-p2", p2.project(wedge(t.e3[0], w1)) == t.psi * rat(-4, 7));
    rep.add("G2-const-p3-phi", p3.project(wedge(t.phi, w1)) == t.e4[0]);
    rep.add("G2-const-p3-e31", p3.project(wedge(t.e3[0], w1)) == t.psi * rat(-4, 7));
    ok = true;
    for (int i = 1; i <= 3; ++i) {
        ok = ok && p3.project(wedge(t.e3[2 * i - 1], w1)) == t.e4[2 * i] * rat(-1, 2);
        ok = ok && p3.project(wedge(t.e3[2 * i], w1)) == t.e4[2 * i - 1] * rat(1, 2);
    }
    rep.add("G2-const-p3-pairs", ok);

    // (e) no further type-2 pairs: p4 kills <phi> and p5 kills e3_i ^ w^i
    rep.add("G2-exhaust-p4-zero", p2.project(wedge(w1, t.phi)).is_zero());
    Projector p5(c(4, 7));
    ok = true;
    for (int i = 0; i < 7; ++i)
        ok = ok && p5.project(wedge(t.e3[i], Form::covector(7, i + 1))).is_zero();
    rep.add("G2-exhaust-p5-zero", ok);

    // (f) exhaustiveness scans over invariant sums
    auto t1 = scan_type1_generators(t.table, {2, 3, 4, 5, 6}, w1);
    std::vector<std::string> t1_expected{"L2_14", "L4_1"};
    rep.add("G2-scan-type1", exact_type1_labels(t1) == t1_expected,
            "complete-prime type-1 generators");
    auto t2 = scan_type2_pairs(t.table, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}, w1);
    std::vector<std::pair<std::string, std::string>> t2_expected{
        {"L2_7", "L3_27"}, {"L3_1+L3_7", "L4_27"}};
    rep.add("G2-scan-type2", exact_type2_labels(t2) == t2_expected, "complete-prime type-2 pairs");

    // regression: the complex generated by the 14-dimensional piece is exact
    auto rc = build_type1_symbol_complex(c(2, 14), w1);
    rep.add("G2-L214-complex", rc.verdict && detail::dims_string(rc) == "1,7,7,1",
            "stage dims " + detail::dims_string(rc));

    // every certified complex has Euler characteristic 0
    rep.add("G2-euler-zero",
            rep1.euler_characteristic == 0 && rep2.euler_characteristic == 0 &&
                rep3.euler_characteristic == 0 && rc.euler_characteristic == 0);

    // type-1 exactness mirrors dual exactness on every invariant sum
    bool dual_ok = true;
    for (int d : {2, 3, 4, 5, 6})
        for (const auto& ls : t.table.sums(d)) {
            auto a = build_type1_symbol_complex(ls.space, w1);
            auto b = build_dual_symbol_complex(ls.space, w1);
            dual_ok = dual_ok && (a.verdict == b.verdict);
        }
    rep.add("G2-dual-equivalence", dual_ok);
    return rep;
}

}  // namespace holoprime
