#include <catch2/catch_amalgamated.hpp>

#include "holoprime/g2.hpp"
#include "holoprime/operators.hpp"
#include "oracles.hpp"

using namespace holoprime;

namespace {

/// Self-dual / anti-self-dual 2-forms of the span of the first four axes,
/// as subspaces of Lambda^2(R^n) for n >= 4.
Subspace lambda_pm_w(int n, int sign) {
    Form a = Form::blade(n, {1, 2}) + Form::blade(n, {3, 4}) * Rational(sign);
    Form b = Form::blade(n, {1, 3}) + Form::blade(n, {2, 4}) * Rational(-sign);
    Form c = Form::blade(n, {1, 4}) + Form::blade(n, {2, 3}) * Rational(sign);
    return Subspace::span({a, b, c});
}

Subspace random_subspace(int n, int k, int gens, std::mt19937_64& rng) {
    std::vector<Form> fs;
    for (int i = 0; i < gens; ++i) fs.push_back(oracle::random_form(n, k, rng, 3));
    return Subspace::span(n, k, fs);
}

}  // namespace

TEST_CASE("span basics") {
    Form w12 = Form::blade(4, {1, 2});
    Subspace s = Subspace::span({w12, w12 * Rational(2)});
    REQUIRE(s.dim() == 1);
    REQUIRE(Subspace::span(4, 2, {}).dim() == 0);
    REQUIRE_THROWS_AS(Subspace::span({w12, Form::covector(4, 1)}), std::invalid_argument);

    // the span of *(psi ^ w^i) is the seven-dimensional degree-2 component
    G2Tables t = g2_build_tables();
    std::vector<Form> gens(t.e2.begin(), t.e2.end());
    REQUIRE(Subspace::span(gens).dim() == 7);
    REQUIRE(Subspace::span(gens) == t.component(2, 7));
}

TEST_CASE("product spaces") {
    Subspace plus5 = lambda_pm_w(5, +1);
    Subspace minus5 = lambda_pm_w(5, -1);
    REQUIRE(product_space(plus5, 1).dim() == 7);
    REQUIRE(product_space(minus5, 1).dim() == 7);

    G2Tables t = g2_build_tables();
    Subspace psi_span = Subspace::span({t.psi});
    REQUIRE(product_space(psi_span, 1).dim() == 7);
    REQUIRE(product_space(psi_span, 1) == t.component(5, 7));

    REQUIRE(product_space(Subspace::full(5, 2), 2) == Subspace::full(5, 4));
    REQUIRE_THROWS_AS(product_space(Subspace::full(5, 2), 4), std::invalid_argument);

    // associativity on random subspaces
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 5 + int(rng() % 3);
        Subspace e = random_subspace(n, 2, 2, rng);
        if (e.is_zero()) continue;
        REQUIRE(product_space(e, 2) == product_space(product_space(e, 1), 1));
    }

    // product contains every single wedge
    std::mt19937_64 rng2(22);
    Subspace e = random_subspace(6, 2, 3, rng2);
    Subspace p = product_space(e, 1);
    for (int i = 0; i < e.dim(); ++i)
        for (int j = 1; j <= 6; ++j)
            REQUIRE(p.contains(wedge(e.basis_form(i), Form::covector(6, j))));
}

TEST_CASE("saturation degree") {
    G2Tables t = g2_build_tables();
    Subspace psi_span = Subspace::span({t.psi});
    // <psi>.L1 is the proper 7-dim piece of L5, <psi>.L2 is all of L6
    REQUIRE(saturation_degree(psi_span) == 1);
    REQUIRE(product_space(psi_span, 2) == Subspace::full(7, 6));
    REQUIRE(saturation_degree(Subspace::full(5, 2)) == 0);
    REQUIRE(saturation_degree(lambda_pm_w(5, +1)) == 1);
    REQUIRE_THROWS_AS(saturation_degree(Subspace::zero(5, 2)), std::invalid_argument);
}

TEST_CASE("sum, intersection, complement") {
    G2Tables t = g2_build_tables();
    REQUIRE(subspace_intersect(t.component(2, 7), t.component(2, 14)).dim() == 0);
    REQUIRE(orthogonal_complement(Subspace::zero(4, 2)) == Subspace::full(4, 2));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + int(rng() % 4);
        int k = 1 + int(rng() % 2);
        Subspace a = random_subspace(n, k, 1 + int(rng() % 3), rng);
        Subspace b = random_subspace(n, k, 1 + int(rng() % 3), rng);
        Subspace s = subspace_sum(a, b);
        Subspace i = subspace_intersect(a, b);
        REQUIRE(s.dim() + i.dim() == a.dim() + b.dim());
        REQUIRE(s.contains(a));
        REQUIRE(s.contains(b));
        REQUIRE(a.contains(i));
        REQUIRE(orthogonal_complement(orthogonal_complement(a)) == a);
        REQUIRE(a.dim() + orthogonal_complement(a).dim() == a.ambient_dim());
    }
}

TEST_CASE("quotient coordinates and induced maps") {
    // Lambda^2(R^4) / Lambda^+ realized on Lambda^-
    Subspace plus = eigenspace(t_operator(Form::one(4), 2), Rational(1), 4, 2);
    QuotientSpace q(4, 2, plus);
    REQUIRE(q.dim() == 3);
    Form v = Form::blade(4, {1, 2});
    auto c = q.coords(v);
    Form rebuilt(4, 2);
    for (int i = 0; i < q.dim(); ++i) rebuilt += q.representative(i) * c[i];
    // rebuilt is the anti-self-dual part of v
    Form asd = (v - hodge_star(v)) * rat(1, 2);
    REQUIRE(rebuilt == asd);

    // a divisor chain that is not multiplicatively closed is rejected
    QuotientSpace src(4, 2, Subspace::span({Form::blade(4, {1, 2})}));
    QuotientSpace dst(4, 3, Subspace::span({Form::blade(4, {1, 2, 3})}));
    REQUIRE_THROWS_AS(induced_quotient_map(Form::covector(4, 4), src, dst),
                      std::invalid_argument);

    // with zero divisors the induced map is plain multiplication
    QuotientSpace z1(4, 1, Subspace::zero(4, 1));
    QuotientSpace z2(4, 2, Subspace::zero(4, 2));
    Form lam = Form::covector(4, 1) + Form::covector(4, 3) * Rational(2);
    REQUIRE(induced_quotient_map(lam, z1, z2) == mult_map(lam, 1));
}

TEST_CASE("embedding keeps colex coordinates stable") {
    Subspace plus = lambda_pm_w(4, +1);
    Subspace embedded = plus.embedded(5);
    REQUIRE(embedded == lambda_pm_w(5, +1));
    REQUIRE(embedded.dim() == 3);
    Form f = embed_form(plus.basis_form(0), 5);
    REQUIRE(embedded.contains(f));
}

TEST_CASE("projector is the orthogonal projection") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + int(rng() % 3);
        Subspace a = random_subspace(n, 2, 2, rng);
        if (a.is_zero()) continue;
        Projector p(a);
        Form v = oracle::random_form(n, 2, rng);
        Form pv = p.project(v);
        REQUIRE(a.contains(pv));
        // residual orthogonal to the subspace
        for (int i = 0; i < a.dim(); ++i)
            REQUIRE(inner_product(v - pv, a.basis_form(i)) == 0);
        REQUIRE(p.project(pv) == pv);
    }
}
