#include <catch2/catch_amalgamated.hpp>

#include "holoprime/mp_search.hpp"
#include "oracles.hpp"

using namespace holoprime;

namespace {

Subspace lambda_minus_r4() {
    Form a = Form::blade(4, {1, 2}) - Form::blade(4, {3, 4});
    Form b = Form::blade(4, {1, 3}) + Form::blade(4, {2, 4});
    Form c = Form::blade(4, {1, 4}) - Form::blade(4, {2, 3});
    return Subspace::span({a, b, c});
}

}  // namespace

TEST_CASE("the obstruction space L(lambda)") {
    Form w1 = Form::covector(4, 1);
    auto r0 = l_lambda(Subspace::zero(4, 2), w1);
    REQUIRE(r0.space.dim() == 3);
    REQUIRE(r0.direct_sum);
    REQUIRE(r0.space.contains(Form::blade(4, {1, 4})));

    auto r1 = l_lambda(lambda_minus_r4(), w1);
    REQUIRE(r1.space.dim() == 6);  // fills all of Lambda^2(R^4)
    REQUIRE(r1.direct_sum);

    REQUIRE_THROWS_AS(l_lambda(lambda_minus_r4(), Form(4, 1)), std::invalid_argument);
}

TEST_CASE("single-covector extension") {
    // a maximally fat prime space cannot be extended: L(lambda) is everything
    Subspace lm = lambda_minus_r4();
    Form w1 = Form::covector(4, 1);
    REQUIRE_FALSE(extend_one(lm, w1, Form::blade(4, {1, 2}) + Form::blade(4, {3, 4})).has_value());

    // su(3) in R^6 leaves room
    Subspace su3 = su_embedding_space(3);
    Form w16 = Form::covector(6, 1);
    Subspace obstruction = l_lambda(su3, w16).space;
    REQUIRE(obstruction.dim() == 13);
    Form alpha = orthogonal_complement(obstruction).basis_form(0);
    auto step = extend_one(su3, w16, alpha);
    REQUIRE(step.has_value());
    REQUIRE(step->result.n() == 7);
    REQUIRE(step->result.dim() == 9);
    REQUIRE_FALSE(nonprime_witness_search(step->result, 200, 5).has_value());

    // rejected attachments: alpha in E, or alpha inside lambda ^ Lambda^1
    REQUIRE_FALSE(extend_one(su3, w16, su3.basis_form(0)).has_value());
    REQUIRE_FALSE(extend_one(su3, w16, Form::blade(6, {1, 2})).has_value());
}

TEST_CASE("multi-covector extension needs one attachment form per covector") {
    Subspace su4 = su_embedding_space(4);
    std::vector<Form> lams{Form::covector(8, 1), Form::covector(8, 2)};
    Subspace obstruction = su4;
    for (const auto& lam : lams)
        obstruction = subspace_sum(obstruction, image_subspace(mult_map(lam, 1), 8, 2));
    Subspace room = orthogonal_complement(obstruction);
    REQUIRE(room.dim() >= 2);

    std::vector<Form> alphas{room.basis_form(0), room.basis_form(1)};
    auto step = extend_multi(su4, lams, alphas);
    REQUIRE(step.has_value());
    REQUIRE_FALSE(step->evidence_only);
    REQUIRE(step->result.dim() == su4.dim() + 2);
    REQUIRE_FALSE(nonprime_witness_search(step->result, 300, 6).has_value());

    // the same alpha on two covectors can never give a prime space: the
    // difference of the two attached generators is (l1 - l2) ^ e, rank one
    REQUIRE_FALSE(extend_multi(su4, lams, room.basis_form(0)).has_value());
    std::vector<Form> same{room.basis_form(0), room.basis_form(0)};
    Subspace bad = subspace_sum(
        su4.embedded(9),
        Subspace::span({wedge(embed_form(lams[0], 9), Form::covector(9, 9)) +
                            embed_form(same[0], 9),
                        wedge(embed_form(lams[1], 9), Form::covector(9, 9)) +
                            embed_form(same[1], 9)}));
    auto witness = nonprime_witness_search(bad, 300, 6);
    REQUIRE(witness.has_value());
    REQUIRE(rank_two_form(witness->alpha) < 2);

    // s = 1 reduces to extend_one
    Form alpha6 = orthogonal_complement(l_lambda(su_embedding_space(3), Form::covector(6, 1)).space)
                      .basis_form(0);
    auto multi1 = extend_multi(su_embedding_space(3), {Form::covector(6, 1)}, alpha6);
    auto single = extend_one(su_embedding_space(3), Form::covector(6, 1), alpha6);
    REQUIRE(multi1.has_value());
    REQUIRE(single.has_value());
    REQUIRE(multi1->result == single->result);

    REQUIRE_THROWS_AS(extend_multi(su4, {Form::covector(8, 1), Form::covector(8, 1)}, alphas),
                      std::invalid_argument);
}

TEST_CASE("su embedding spaces") {
    Subspace su2 = su_embedding_space(2);
    REQUIRE(su2.dim() == 3);
    REQUIRE(su2 == eigenspace(t_operator(Form::one(4), 2), Rational(1), 4, 2));
    REQUIRE(su_embedding_space(3).dim() == 8);
    REQUIRE(su_embedding_space(5).dim() == 24);
    REQUIRE_THROWS_AS(su_embedding_space(1), std::invalid_argument);

    // sampled elements all have rank >= 2 (real rank >= 4)
    std::mt19937_64 rng(77);
    for (int m = 2; m <= 5; ++m) {
        Subspace s = su_embedding_space(m);
        for (int trial = 0; trial < 100; ++trial) {
            Form el(s.n(), 2);
            while (el.is_zero())
                for (int i = 0; i < s.dim(); ++i) {
                    long c = bounded_int(rng, -4, 4);
                    if (c != 0) el += s.basis_form(i) * Rational(c);
                }
            REQUIRE(rank_two_form(el) >= 2);
        }
        REQUIRE(definite_square_certificate(s, su_certificate_auxiliary(m)) != 0);
    }
    REQUIRE(definite_square_certificate(Subspace::span({Form::blade(4, {1, 2})}),
                                        Form::one(4)) == 0);
}

TEST_CASE("numeric sphere certificates") {
    auto lm = numeric_prime_certificate(lambda_minus_r4(), 6, 1e-6, 1);
    REQUIRE_FALSE(lm.below_tolerance);
    REQUIRE(std::fabs(lm.minimum - 0.70710678) < 0.01);
    auto lm2 = numeric_prime_certificate(lambda_minus_r4(), 6, 1e-6, 2);
    REQUIRE(std::fabs(lm.minimum - lm2.minimum) < 0.01);

    auto su3 = numeric_prime_certificate(su_embedding_space(3), 6, 1e-6, 1);
    REQUIRE(su3.minimum > 0.5);

    auto bad = numeric_prime_certificate(Subspace::span({Form::blade(4, {1, 2})}), 4, 1e-6, 3);
    REQUIRE(bad.below_tolerance);
    REQUIRE(bad.minimum < 1e-6);
    REQUIRE(bad.per_restart.size() == 4);
}

TEST_CASE("lower-bound search meets the floor and replays") {
    int prev = 0;
    for (int n = 4; n <= 9; ++n) {
        auto cert = mp_lower_bound_search(n, MpStrategy::greedy, 500, 11);
        int floor = (n / 2) * (n / 2) - 1;
        INFO("n = " << n);
        REQUIRE(cert.dim >= floor);
        REQUIRE(cert.dim >= prev);
        prev = cert.dim;
        Subspace replayed = mp_replay(cert);
        REQUIRE(replayed.dim() == cert.dim);
        REQUIRE_FALSE(cert.numeric.below_tolerance);
        REQUIRE(cert.base_definite != 0);
    }
    REQUIRE(mp_lower_bound_search(4, MpStrategy::greedy, 10, 1).dim == 3);
    REQUIRE(mp_lower_bound_search(5, MpStrategy::greedy, 10, 1).dim == 3);
    REQUIRE(mp_lower_bound_search(8, MpStrategy::randomized, 500, 5).dim >= 15);
    REQUIRE_THROWS_AS(mp_lower_bound_search(3, MpStrategy::greedy, 10, 1),
                      std::invalid_argument);
}

TEST_CASE("tampered certificates fail replay") {
    auto cert = mp_lower_bound_search(7, MpStrategy::greedy, 500, 11);
    REQUIRE(!cert.steps.empty());
    auto tampered = cert;
    // move the attachment form inside L(lambda): lambda ^ (covector) + basis form
    auto& step = tampered.steps.back();
    Subspace base = su_embedding_space(tampered.base_m).embedded(step.ambient_before);
    step.alphas[0] = wedge(step.lambdas[0], Form::covector(step.ambient_before, 2)) +
                     base.basis_form(0);
    REQUIRE_THROWS_AS(mp_replay(tampered), std::runtime_error);

    auto wrong_dim = cert;
    wrong_dim.dim += 1;
    REQUIRE_THROWS_AS(mp_replay(wrong_dim), std::runtime_error);
}
