#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <weylcoh/catalog.hpp>
#include <weylcoh/errors.hpp>
#include <weylcoh/random.hpp>
#include <weylcoh/smash.hpp>

using namespace weylcoh;

namespace
{

WeylElement P(std::size_t n = 1, std::size_t i = 0)
{
    return WeylElement::p(n, i);
}
WeylElement Q(std::size_t n = 1, std::size_t i = 0)
{
    return WeylElement::q(n, i);
}

SmashElement random_smash(Rng &rng, const GroupPtr &g, int degree)
{
    SmashElement x(g);
    std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
    for (int t = 0; t < 2; ++t) {
        x.add_term(pick(rng), random_weyl(rng, g->pairs(), degree, 2));
    }
    return x;
}

// Z4 wreath Z2 in Sp(4): S (+) Id together with the swap of the two planes.
GroupPtr wreath_group()
{
    Matrix swap(4, 4);
    swap(0, 2) = 1;
    swap(1, 3) = 1;
    swap(2, 0) = 1;
    swap(3, 1) = 1;
    return FiniteSympGroup::close(
        {direct_sum({rotation_sp2(4), SympMatrix::identity(1)}), SympMatrix::from_matrix(swap)});
}

WeylCochain constant_cochain(const AltForm &f)
{
    WeylCochain c(f.pairs(), f.degree());
    for (const auto &[set, v] : f.values()) {
        c.add(set, WeylElement::constant(f.pairs(), v));
    }
    return c;
}

} // namespace

TEST_CASE("smash_mul examples")
{
    const GroupPtr g = catalog_group("pm_sp2");
    const std::size_t eps = 1;
    REQUIRE(g->element(eps) == minus_identity(1));
    Rng rng(2);
    const WeylElement a = random_weyl(rng, 1, 3, 3);
    CHECK(smash_mul(SmashElement::group_element(g, eps), SmashElement::term(g, a)) ==
          SmashElement::term(g, apply_symplectic(g->element(eps), a), eps));
    CHECK(smash_mul(SmashElement::term(g, a), SmashElement::group_element(g, eps)) == SmashElement::term(g, a, eps));
    CHECK(smash_mul(SmashElement::term(g, P(), eps), SmashElement::term(g, P(), eps)) ==
          SmashElement::term(g, -abelian_mul(P(), P())));
    CHECK_THROWS_AS(smash_mul(SmashElement::term(g, P()), SmashElement::term(catalog_group("Z4_sp2"), P())),
                    GroupMismatch);
}

TEST_CASE("smash_mul is associative and Ad g is an automorphism")
{
    Rng rng(4);
    for (const char *name : {"Z4_sp2", "pm_sp4", "Z3_sp2"}) {
        const GroupPtr g = catalog_group(name);
        for (int t = 0; t < 8; ++t) {
            const SmashElement x = random_smash(rng, g, 3);
            const SmashElement y = random_smash(rng, g, 3);
            const SmashElement z = random_smash(rng, g, 3);
            CHECK(smash_mul(smash_mul(x, y), z) == smash_mul(x, smash_mul(y, z)));
            for (std::size_t s = 0; s < g->order(); ++s) {
                CHECK(ad_action(s, smash_mul(x, y)) == smash_mul(ad_action(s, x), ad_action(s, y)));
            }
        }
    }
}

TEST_CASE("ad_action examples")
{
    const GroupPtr g = wreath_group();
    REQUIRE(g->order() == 32);
    Rng rng(6);
    const SmashElement x = random_smash(rng, g, 2);
    CHECK(ad_action(0, x) == x);
    const WeylElement a = random_weyl(rng, 2, 3, 3);
    for (std::size_t s = 0; s < g->order(); ++s) {
        CHECK(ad_action(s, SmashElement::term(g, a)) == SmashElement::term(g, apply_symplectic(g->element(s), a)));
        for (std::size_t h = 0; h < g->order(); ++h) {
            CHECK(ad_action(s, SmashElement::group_element(g, h)) ==
                  SmashElement::group_element(g, g->conjugate(s, h)));
        }
    }
}

TEST_CASE("build_C_lambda examples")
{
    const GroupPtr pm = catalog_group("pm_sp2");
    CHECK(build_C_lambda(pm, {}).is_zero());
    CHECK(build_C_lambda(pm, {{1, Cyclotomic(0)}}).is_zero());
    const Cyclotomic c(5, 3);
    const LambdaCochain cl = build_C_lambda(pm, {{1, c}});
    REQUIRE(cl.find(0b11) != nullptr);
    CHECK(*cl.find(0b11) == SmashElement::term(pm, WeylElement::constant(1, c), 1));
    CHECK(cl.values().size() == 1);

    const GroupPtr z4 = catalog_group("Z4_sp2");
    const LambdaWeights lambda{{1, Cyclotomic(2)}, {2, Cyclotomic(-1, 2)}, {3, Cyclotomic(7)}};
    const LambdaCochain c4 = build_C_lambda(z4, lambda);
    SmashElement expected(z4);
    for (const auto &[cls, w] : lambda) {
        const std::size_t e = z4->classes().at(cls).representative;
        const Cyclotomic *om = z4->invariants(e).omega.find(0b11);
        REQUIRE(om != nullptr);
        expected.add_term(e, WeylElement::constant(1, w * *om));
    }
    CHECK(*c4.find(0b11) == expected);

    CHECK_THROWS_AS(build_C_lambda(pm, {{0, Cyclotomic(1)}}), UnknownClassKey);
    CHECK_THROWS_AS(build_C_lambda(pm, {{7, Cyclotomic(1)}}), UnknownClassKey);
}

TEST_CASE("C_lambda is invariant and supported on Gamma_2")
{
    for (const char *name : {"Z4_sp2", "Z6_sp2", "Z4_sp2xZ2_sp2"}) {
        CAPTURE(name);
        const GroupPtr g = catalog_group(name);
        LambdaWeights lambda;
        const auto by_k = g->classes_by_k();
        if (by_k.count(1) == 0) {
            continue;
        }
        long w = 2;
        for (std::size_t cls : by_k.at(1)) {
            lambda[cls] = Cyclotomic(w++, 3);
        }
        const LambdaCochain c = build_C_lambda(g, lambda);
        CHECK_FALSE(c.is_zero());
        for (std::size_t s = 0; s < g->order(); ++s) {
            CHECK(pi_action(*g, s, c) == c);
        }
        for (const auto &[set, v] : c.values()) {
            for (const auto &[e, a] : v.terms()) {
                CHECK(g->invariants(e).k == 1);
                CHECK(a.is_constant());
            }
        }
    }
}

TEST_CASE("extend_relative_cochain examples")
{
    const GroupPtr g = catalog_group("pm_sp2");
    const Cyclotomic c(3, 2);
    const RelativeCochain rc = relative_from_lambda(build_C_lambda(g, {{1, c}}), g);
    // (p (x) eps, q (x) 1) -> D(p, eps(q)) * eps = -c (x) Id
    const SmashElement out = extend_relative_cochain(rc, {SmashElement::term(g, P(), 1), SmashElement::term(g, Q())});
    CHECK(out == SmashElement::term(g, WeylElement::constant(1, -c)));
    // scalar argument
    CHECK(extend_relative_cochain(rc, {SmashElement::group_element(g, 1), SmashElement::term(g, Q())}).is_zero());
    // trivial group parts
    Rng rng(8);
    const WeylElement a = random_weyl(rng, 1, 3, 3);
    const WeylElement b = random_weyl(rng, 1, 3, 3);
    CHECK(extend_relative_cochain(rc, {SmashElement::term(g, a), SmashElement::term(g, b)}) == rc.D({a, b}));
}

TEST_CASE("extend_relative_cochain rejects bad D")
{
    const GroupPtr g = catalog_group("pm_sp2");
    RelativeCochain constant;
    constant.group = g;
    constant.degree = 2;
    constant.D = [g](const std::vector<WeylElement> &) { return SmashElement::group_element(g, 0); };
    CHECK_THROWS_AS(extend_relative_cochain(constant, {SmashElement::term(g, P()), SmashElement::term(g, Q())}),
                    NotNormalized);

    RelativeCochain odd;
    odd.group = g;
    odd.degree = 2;
    odd.D = [g](const std::vector<WeylElement> &args) {
        const Cyclotomic w = args[0].coefficient({1, 0}) * args[1].coefficient({1, 0});
        return SmashElement::term(g, w * WeylElement::p(1, 0));
    };
    CHECK_THROWS_AS(extend_relative_cochain(odd, {SmashElement::term(g, P()), SmashElement::term(g, P())}),
                    NotInvariant);
}

TEST_CASE("project_invariant examples")
{
    const GroupPtr g = catalog_group("pm_sp2");
    const std::vector<std::size_t> all{0, 1};
    WeylCochain c(1, 1);
    c.add(0b01, P());
    CHECK(project_invariant(*g, all, c) == c);
    WeylCochain even(1, 1);
    even.add(0b01, abelian_mul(P(), P()));
    const WeylCochain avg = project_invariant(*g, all, even);
    CHECK(avg.is_zero());
    for (std::size_t s : all) {
        CHECK(pi_action(*g, s, avg) == avg);
    }
}

TEST_CASE("project_invariant is idempotent and fixes omega_sigma on the centralizer")
{
    Rng rng(10);
    const GroupPtr g = wreath_group();
    for (const ConjClass &cls : g->classes()) {
        const auto &s = cls.centralizer;
        const WeylCochain c = random_cochain(rng, 2, 2, 2);
        const WeylCochain once = project_invariant(*g, s, c);
        CHECK(project_invariant(*g, s, once) == once);
        for (std::size_t x : s) {
            CHECK(pi_action(*g, x, once) == once);
        }
        const AltForm &om = g->invariants(cls.representative).omega;
        CHECK(project_invariant(*g, s, om) == om);
    }
}

TEST_CASE("class_decompose of C_lambda reads off lambda times omega")
{
    const GroupPtr g = catalog_group("Z6_sp2");
    LambdaWeights lambda;
    long w = 1;
    const auto by_k = g->classes_by_k();
    for (std::size_t cls : by_k.at(1)) {
        lambda[cls] = Cyclotomic(w++);
    }
    const auto tilde = class_decompose(*g, family_from_lambda(build_C_lambda(g, lambda)), 1, 2);
    for (const auto &[cls, weight] : lambda) {
        const WeylCochain expected =
            weight * constant_cochain(g->invariants(g->classes().at(cls).representative).omega);
        REQUIRE(tilde.count(cls) == 1);
        CHECK(tilde.at(cls) == expected);
    }
}

TEST_CASE("class_decompose and class_reconstruct are inverse")
{
    Rng rng(12);
    for (const GroupPtr &g : {catalog_group("Z4_sp2"), wreath_group()}) {
        const std::size_t n = g->pairs();
        std::map<std::size_t, WeylCochain> tilde;
        for (std::size_t c = 0; c < g->classes().size(); ++c) {
            const auto &cls = g->classes()[c];
            tilde[c] = project_invariant(*g, cls.centralizer, random_cochain(rng, n, 1, 2));
        }
        const CochainFamily family = class_reconstruct(*g, tilde);
        const auto back = class_decompose(*g, family, n, 1);
        for (const auto &[c, v] : tilde) {
            const WeylCochain got = back.count(c) ? back.at(c) : WeylCochain(n, 1);
            CHECK(got == v);
        }
        CHECK(class_reconstruct(*g, back) == family);
    }
}

TEST_CASE("class_decompose and class_reconstruct errors")
{
    const GroupPtr g = catalog_group("pm_sp2");
    WeylCochain even(1, 1);
    even.add(0b01, abelian_mul(P(), P()));
    CHECK_THROWS_AS(class_decompose(*g, CochainFamily{{1, even}}, 1, 1), NotEquivariant);
    CHECK_THROWS_AS(class_reconstruct(*g, {{1, even}}), NotInvariant);
}

TEST_CASE("smash text form")
{
    const GroupPtr g = catalog_group("pm_sp2");
    const std::string s = SmashElement::term(g, P(), 1).to_string();
    CHECK(s.find("g[1]") != std::string::npos);
    CHECK(SmashElement::group_element(g, 0).pairs() == 1);
}
