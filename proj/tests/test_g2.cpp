#include <catch2/catch_amalgamated.hpp>

#include "holoprime/g2.hpp"

using namespace holoprime;

namespace {
const G2Tables& tables() {
    static G2Tables t = g2_build_tables();
    return t;
}
}  // namespace

TEST_CASE("table construction validates itself") {
    const G2Tables& t = tables();
    REQUIRE(t.component(2, 7).dim() == 7);
    REQUIRE(t.component(2, 14).dim() == 14);
    REQUIRE(t.component(3, 27).dim() == 27);
    REQUIRE(t.component(5, 14).dim() == 14);

    // the distinguished basis vector of the degree-5 piece
    Form expected = Form::blade(7, {1, 4, 5, 6, 7}) + Form::blade(7, {1, 2, 3, 6, 7}) +
                    Form::blade(7, {1, 2, 3, 4, 5});
    REQUIRE(t.e5[0] == expected);
    Form expected2 = Form::blade(7, {2, 4, 5, 6, 7}) - Form::blade(7, {1, 2, 3, 5, 7}) +
                     Form::blade(7, {1, 2, 3, 4, 6});
    REQUIRE(t.e5[1] == expected2);

    // star maps the degree-2 piece onto the degree-5 piece
    std::vector<Form> starred;
    for (int i = 0; i < 7; ++i) starred.push_back(hodge_star(t.component(2, 7).basis_form(i)));
    REQUIRE(Subspace::span(7, 5, starred) == t.component(5, 7));
}

TEST_CASE("relation table holds exactly") {
    auto rels = g2_verify_relations(tables());
    REQUIRE(rels.size() == 10);
    for (const auto& r : rels) {
        INFO(r.id);
        REQUIRE(r.pass);
    }
    // spot dimensions
    REQUIRE(product_space(tables().component(2, 14), 1).dim() == 34);
    REQUIRE(product_space(tables().component(2, 7), 1).dim() == 35);
    REQUIRE(product_space(tables().component(3, 1), 1).dim() == 7);
}

TEST_CASE("prime classification matches the expected list") {
    auto rep = g2_classify_prime_subspaces(tables());
    REQUIRE(rep.matches);
    REQUIRE(rep.certified == g2_expected_prime_labels());
    // every excluded sum carries a re-verifiable witness
    for (const auto& e : rep.entries) {
        if (e.verdict.status != PrimeStatus::not_prime) continue;
        REQUIRE(e.verdict.witness.has_value());
        REQUIRE(wedge(e.verdict.witness->alpha, e.verdict.witness->lambda).is_zero());
        REQUIRE(!e.verdict.witness->alpha.is_zero());
        REQUIRE(!e.verdict.witness->lambda.is_zero());
    }
    // named examples
    bool found_sum = false, found_327 = false, found_4117 = false;
    for (const auto& e : rep.entries) {
        if (e.label == "L3_1+L3_7") {
            found_sum = true;
            REQUIRE(e.verdict.certified());
        }
        if (e.label == "L3_27") {
            found_327 = true;
            REQUIRE(e.verdict.status == PrimeStatus::not_prime);
        }
        if (e.label == "L4_1+L4_7") {
            found_4117 = true;
            REQUIRE(e.verdict.status == PrimeStatus::not_prime);
        }
    }
    REQUIRE(found_sum);
    REQUIRE(found_327);
    REQUIRE(found_4117);
}

TEST_CASE("complex-list suite passes with a few samples") {
    auto rep = g2_verify_complex_list(tables(), 5, 2024);
    for (const auto& c : rep.checks) {
        INFO(c.id << " " << c.detail);
        REQUIRE(c.pass);
    }
}
