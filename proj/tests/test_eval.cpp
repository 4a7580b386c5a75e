#include "wbcsp/eval.hpp"

#include "wbcsp/errors.hpp"
#include "wbcsp/gf2.hpp"
#include "wbcsp/reductions.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace wbcsp;

namespace {

// K_n style edge instance: one binary constraint per edge.
Instance edge_instance(const BooleanFunction& f, uint32_t n,
                       const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    ConstraintLanguage lang;
    lang.add("f", f);
    Instance instance(lang, test::variable_names(n));
    for (const auto& [u, v] : edges) instance.add_constraint(0, {u, v});
    return instance;
}

const std::vector<std::pair<uint32_t, uint32_t>> kTriangle = {{0, 1}, {1, 2}, {0, 2}};

}  // namespace

TEST_CASE("eval_affine on the worked examples") {
    // triangle with (-1)^(x+y): every vertex has even degree, Z = 2^3
    CHECK(eval_affine(edge_instance(test::neg_pow_x_plus_y(), 3, kTriangle)) == Rational(8));
    // one edge with (-1)^(xy): 1+1+1-1
    CHECK(eval_affine(edge_instance(test::neg_pow_xy(), 2, {{0, 1}})) == Rational(2));
    // triangle with (-1)^(xy)
    CHECK(eval_affine(edge_instance(test::neg_pow_xy(), 3, kTriangle)) == Rational(0));
    CHECK(brute_z(edge_instance(test::neg_pow_xy(), 3, kTriangle)) == Rational(0));

    CHECK_THROWS_AS(eval_affine(edge_instance(test::or_function(), 2, {{0, 1}})), PreconditionError);
}

TEST_CASE("eval_product on the worked examples") {
    ConstraintLanguage lang;
    lang.add("neq", chi_neq());
    lang.add("eq", chi_eq());
    lang.add("theta2", theta(Rational(2)));
    lang.add("theta3", theta(Rational(3)));

    SUBCASE("chi_neq with two weights gives 1*3 + 2*1") {
        Instance instance(lang, {"x", "y"});
        instance.add_constraint("neq", {"x", "y"});
        instance.add_constraint("theta2", {"x"});
        instance.add_constraint("theta3", {"y"});
        CHECK(eval_product(instance) == Rational(5));
    }
    SUBCASE("contradictory links give 0") {
        Instance instance(lang, {"x", "y"});
        instance.add_constraint("eq", {"x", "y"});
        instance.add_constraint("neq", {"x", "y"});
        CHECK(eval_product(instance) == Rational(0));
    }
    SUBCASE("a single theta gives 1 + lambda") {
        ConstraintLanguage unary;
        unary.add("theta", theta(Rational(7, 3)));
        Instance instance(unary, {"x"});
        instance.add_constraint("theta", {"x"});
        CHECK(eval_product(instance) == Rational(10, 3));
    }
    SUBCASE("unconstrained variables double Z") {
        ConstraintLanguage unary;
        unary.add("theta", theta(Rational(2)));
        Instance instance(unary, {"x", "free"});
        instance.add_constraint("theta", {"x"});
        CHECK(eval_product(instance) == Rational(6));  // (1+2) * 2
    }
    SUBCASE("precondition") {
        Instance instance(lang, {"x", "y"});
        CHECK_THROWS_AS(eval_affine(instance), PreconditionError);  // theta2 is not pure affine
    }
}

TEST_CASE("repeated scope variables") {
    ConstraintLanguage lang;
    lang.add("neq", chi_neq());
    lang.add("eq", chi_eq());
    SUBCASE("x != x forces zero") {
        Instance instance(lang, {"x", "y"});
        instance.add_constraint("neq", {"x", "x"});
        CHECK(eval_product(instance) == Rational(0));
        CHECK(brute_z(instance) == Rational(0));
    }
    SUBCASE("x = x vanishes") {
        Instance instance(lang, {"x", "y"});
        instance.add_constraint("eq", {"x", "x"});
        CHECK(eval(instance).z == Rational(4));
        CHECK(brute_z(instance) == Rational(4));
    }
    SUBCASE("affine path collapses x*x to x") {
        Instance instance = edge_instance(test::neg_pow_xy(), 2, {{0, 0}});
        CHECK(eval_affine(instance) == Rational(0));  // (1 - 1) * 2 / per free var
        CHECK(brute_z(instance) == Rational(0));
    }
}

TEST_CASE("eval dispatcher selects by verdict and reports it") {
    SUBCASE("affine route") {
        EvalResult r = eval(edge_instance(test::neg_pow_xy(), 2, {{0, 1}}));
        CHECK(r.z == Rational(2));
        CHECK(r.method == EvalMethod::affine);
        CHECK(r.verdict == LanguageClass::FP_AFFINE);
    }
    SUBCASE("product route") {
        ConstraintLanguage lang;
        lang.add("neq", chi_neq());
        lang.add("theta2", theta(Rational(2)));
        Instance instance(lang, {"x", "y"});
        instance.add_constraint("neq", {"x", "y"});
        instance.add_constraint("theta2", {"x"});
        EvalResult r = eval(instance);
        CHECK(r.method == EvalMethod::product);
        CHECK(r.z == brute_z(instance));
    }
    SUBCASE("HARD within the brute bound") {
        EvalResult r = eval(edge_instance(test::or_function(), 3, kTriangle));
        CHECK(r.method == EvalMethod::brute);
        CHECK(r.verdict == LanguageClass::HARD);
        CHECK(r.z == Rational(4));  // configurations with at most one vertex at 0
        CHECK(r.z == brute_z(edge_instance(test::or_function(), 3, kTriangle)));
    }
    SUBCASE("HARD beyond the brute bound carries the certificate") {
        ConstraintLanguage lang;
        lang.add("or", test::or_function());
        Instance instance(lang, test::variable_names(30));
        try {
            eval(instance);
            FAIL("expected IntractableError");
        } catch (const IntractableError& e) {
            CHECK(e.affine_witness == "or");
            CHECK(e.product_witness == "or");
        }
    }
    SUBCASE("forcing an inapplicable method throws") {
        Instance instance = edge_instance(test::neg_pow_xy(), 2, {{0, 1}});
        CHECK_THROWS_AS(eval(instance, EvalPolicy::force_product), PreconditionError);
        CHECK(eval(instance, EvalPolicy::brute).z == Rational(2));
    }
}

TEST_CASE("oracle equivalence on random tractable languages") {
    test::Rng rng(2024);
    for (int round = 0; round < 40; ++round) {
        ConstraintLanguage lang =
            test::rand_language_with_verdict(rng, LanguageClass::FP_AFFINE, 3, 4);
        Instance instance = test::rand_instance(rng, lang, 10, 8);
        EvalResult r = eval(instance);
        CHECK(r.method == EvalMethod::affine);
        CHECK(r.z == brute_z(instance));
    }
    for (int round = 0; round < 40; ++round) {
        ConstraintLanguage lang =
            test::rand_language_with_verdict(rng, LanguageClass::FP_PRODUCT, 3, 4);
        Instance instance = test::rand_instance(rng, lang, 10, 8);
        EvalResult r = eval(instance);
        CHECK(r.method == EvalMethod::product);
        CHECK(r.z == brute_z(instance));
    }
}

TEST_CASE("even-edge subgraph identity on random graphs") {
    test::Rng rng(2025);
    for (int round = 0; round < 30; ++round) {
        uint32_t n = test::rand_in(rng, 1, 8);
        auto edges = test::rand_simple_graph(rng, n);
        Instance instance = edge_instance(test::neg_pow_xy(), n, edges);
        Rational z = eval_affine(instance);
        CHECK(z / 2 + Rational(pow2(n - 1)) == Rational(test::oracle_even_edge_induced_subgraphs(n, edges)));
    }
}

TEST_CASE("Eulerian identity on all small graphs") {
    for (uint32_t n = 1; n <= 4; ++n) {
        std::vector<std::pair<uint32_t, uint32_t>> all_pairs;
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
        for (uint32_t mask = 0; mask < (uint32_t{1} << all_pairs.size()); ++mask) {
            std::vector<std::pair<uint32_t, uint32_t>> edges;
            for (size_t e = 0; e < all_pairs.size(); ++e)
                if ((mask >> e) & 1) edges.push_back(all_pairs[e]);
            Instance instance = edge_instance(test::neg_pow_x_plus_y(), n, edges);
            Rational expected =
                test::oracle_all_degrees_even(n, edges) ? Rational(pow2(n)) : Rational(0);
            CHECK(eval_affine(instance) == expected);
            CHECK(brute_z(instance) == expected);
        }
    }
}

TEST_CASE("scaling one function scales Z by q^m") {
    test::Rng rng(2026);
    for (int round = 0; round < 20; ++round) {
        ConstraintLanguage lang = test::rand_language(rng, false, 2, 3);
        Instance instance = test::rand_instance(rng, lang, 8, 6);
        Rational q = test::rand_positive_rational(rng);
        if (test::rand_bool(rng)) q = -q;

        ConstraintLanguage scaled;
        for (uint32_t i = 0; i < lang.size(); ++i)
            scaled.add(lang.name_at(i),
                       i == 0 ? reductions::scale(lang.at(i), q) : lang.at(i));
        Instance scaled_instance(scaled, instance.variables());
        for (const Constraint& c : instance.constraints())
            scaled_instance.add_constraint(c.function, c.scope);

        auto [m, factor] = reductions::scale_instance_check(instance, lang.name_at(0), q);
        CHECK(brute_z(scaled_instance) == factor * brute_z(instance));
        (void)m;
    }
}

TEST_CASE("zero-sign affine language reduces to linear counting") {
    // chi_eq scaled by 3: w = 3, sign 0; Z = 3^m * count_linear(combined system)
    ConstraintLanguage lang;
    lang.add("eq3", reductions::scale(chi_eq(), Rational(3)));
    Instance instance(lang, test::variable_names(5));
    instance.add_constraint(0, {0, 1});
    instance.add_constraint(0, {1, 2});
    instance.add_constraint(0, {3, 4});

    gf2::LinearSystem combined(5);
    for (const Constraint& c : instance.constraints()) {
        gf2::LinearEquation eq(5);
        eq.set(c.scope[0], true);
        eq.set(c.scope[1], true);
        combined.add(eq);
    }
    Rational expected = pow_rational(Rational(3), 3) * Rational(gf2::count_linear(combined));
    CHECK(eval_affine(instance) == expected);
    CHECK(brute_z(instance) == expected);
}

TEST_CASE("languages containing the zero function evaluate to zero when used") {
    ConstraintLanguage lang;
    lang.add("zero", BooleanFunction(2, std::vector<Rational>(4, Rational(0))));
    lang.add("eq", chi_eq());
    Instance instance(lang, {"x", "y", "z"});
    instance.add_constraint("eq", {"x", "y"});
    instance.add_constraint("zero", {"y", "z"});
    CHECK(eval(instance).z == Rational(0));
    CHECK(brute_z(instance) == Rational(0));
}
