#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <weylcoh/catalog.hpp>
#include <weylcoh/errors.hpp>
#include <weylcoh/random.hpp>
#include <weylcoh/symplectic.hpp>
#include <weylcoh/weyl.hpp>

#include "oracles.hpp"

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
WeylElement C(std::size_t n, const Cyclotomic &c)
{
    return WeylElement::constant(n, c);
}

// Symplectic transvection x -> x + t omega(v, x) v.
SympMatrix transvection(const std::vector<Cyclotomic> &v, const Cyclotomic &t)
{
    const std::size_t dim = v.size();
    Matrix m = Matrix::identity(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<Cyclotomic> e(dim);
        e[c] = Cyclotomic(1);
        const Cyclotomic w = t * symplectic_pairing(v, e);
        for (std::size_t r = 0; r < dim; ++r) {
            m(r, c) += w * v[r];
        }
    }
    return SympMatrix::from_matrix(m);
}

SympMatrix random_symplectic(Rng &rng, std::size_t n)
{
    std::uniform_int_distribution<long> coef(-2, 2);
    SympMatrix g = SympMatrix::identity(n);
    for (int t = 0; t < 3; ++t) {
        std::vector<Cyclotomic> v(2 * n);
        for (auto &x : v) {
            x = Cyclotomic(coef(rng));
        }
        g = g * transvection(v, Cyclotomic(coef(rng), 2));
    }
    return g;
}

} // namespace

TEST_CASE("abelian_mul examples")
{
    CHECK(abelian_mul(P(), Q()) == WeylElement::monomial(1, {1, 1}));
    const WeylElement a = P() + Cyclotomic(3) * Q();
    CHECK(abelian_mul(a, C(1, 1)) == a);
    CHECK(abelian_mul(P() + Q(), P() - Q()) == abelian_mul(P(), P()) - abelian_mul(Q(), Q()));
    CHECK_THROWS_AS(abelian_mul(P(1), P(2)), MismatchedArity);
}

TEST_CASE("moyal_mul examples")
{
    CHECK(moyal_commutator(P(), Q()) == C(1, 1));
    CHECK(moyal_mul(P(), Q()) == abelian_mul(P(), Q()) + C(1, Cyclotomic(1, 2)));
    // p*q + q*p = 2pq
    CHECK(moyal_mul(P(), Q()) + moyal_mul(Q(), P()) == Cyclotomic(2) * abelian_mul(P(), Q()));
    const WeylElement p2 = abelian_mul(P(), P());
    CHECK(moyal_mul(p2, Q()) == abelian_mul(p2, Q()) + P());
    CHECK_THROWS_AS(moyal_mul(P(1), P(2)), MismatchedArity);
}

TEST_CASE("moyal_mul matches the term-by-term expansion oracle")
{
    Rng rng(3);
    for (std::size_t n : {1, 2}) {
        for (int t = 0; t < 40; ++t) {
            const WeylElement a = random_weyl(rng, n, 4, 4);
            const WeylElement b = random_weyl(rng, n, 4, 4);
            CHECK(moyal_mul(a, b) == oracle::moyal(a, b));
        }
    }
}

TEST_CASE("bracket normalization [X, Y] = omega(X, Y) on V")
{
    Rng rng(5);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int t = 0; t < 20; ++t) {
        std::vector<Cyclotomic> x(4), y(4);
        for (std::size_t i = 0; i < 4; ++i) {
            x[i] = Cyclotomic(coef(rng));
            y[i] = Cyclotomic(coef(rng));
        }
        CHECK(moyal_commutator(WeylElement::linear(2, x), WeylElement::linear(2, y)) ==
              C(2, symplectic_pairing(x, y)));
    }
}

TEST_CASE("Moyal product is associative on random triples up to degree 6")
{
    Rng rng(9);
    for (std::size_t n : {1, 2}) {
        for (int t = 0; t < 15; ++t) {
            const WeylElement a = random_weyl(rng, n, 6, 3);
            const WeylElement b = random_weyl(rng, n, 6, 3);
            const WeylElement c = random_weyl(rng, n, 6, 3);
            CHECK(moyal_mul(moyal_mul(a, b), c) == moyal_mul(a, moyal_mul(b, c)));
        }
    }
}

TEST_CASE("degree filtration: a*b - a.b drops degree by 2")
{
    Rng rng(10);
    for (int t = 0; t < 30; ++t) {
        const WeylElement a = random_weyl(rng, 2, 5, 3);
        const WeylElement b = random_weyl(rng, 2, 5, 3);
        const WeylElement diff = moyal_mul(a, b) - abelian_mul(a, b);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(diff.degree() <= a.degree() + b.degree() - 2);
        }
    }
}

TEST_CASE("ad X is a derivation of the commutative product for X in V")
{
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const WeylElement x = WeylElement::linear(2, {1, -2, 3, Cyclotomic(1, 2)});
        const WeylElement a = random_weyl(rng, 2, 4, 3);
        const WeylElement b = random_weyl(rng, 2, 4, 3);
        CHECK(moyal_commutator(x, abelian_mul(a, b)) ==
              abelian_mul(moyal_commutator(x, a), b) + abelian_mul(a, moyal_commutator(x, b)));
    }
}

TEST_CASE("apply_symplectic examples")
{
    Rng rng(14);
    const WeylElement a = random_weyl(rng, 1, 4, 4);
    CHECK(apply_symplectic(SympMatrix::identity(1), a) == a);
    const SympMatrix eps = minus_identity(1);
    CHECK(apply_symplectic(eps, P()) == -P());
    CHECK(apply_symplectic(eps, moyal_mul(P(), Q())) ==
          moyal_mul(apply_symplectic(eps, P()), apply_symplectic(eps, Q())));
    CHECK(apply_symplectic(eps, moyal_mul(P(), Q())) == abelian_mul(P(), Q()) + C(1, Cyclotomic(1, 2)));
    CHECK_THROWS_AS(SympMatrix::from_matrix(Matrix::scalar(2, Cyclotomic(2))), NonSymplecticMatrix);
}

TEST_CASE("symplectic maps are automorphisms of both products")
{
    Rng rng(15);
    for (std::size_t n : {1, 2}) {
        for (int t = 0; t < 10; ++t) {
            const SympMatrix g = random_symplectic(rng, n);
            const WeylElement a = random_weyl(rng, n, 3, 3);
            const WeylElement b = random_weyl(rng, n, 3, 3);
            CHECK(apply_symplectic(g, moyal_mul(a, b)) == moyal_mul(apply_symplectic(g, a), apply_symplectic(g, b)));
            CHECK(apply_symplectic(g, abelian_mul(a, b)) ==
                  abelian_mul(apply_symplectic(g, a), apply_symplectic(g, b)));
        }
    }
    // cyclotomic entries: rotation of order 5
    const SympMatrix r5 = rotation_sp2(5);
    const WeylElement a = random_weyl(rng, 1, 3, 3);
    const WeylElement b = random_weyl(rng, 1, 3, 3);
    CHECK(apply_symplectic(r5, moyal_mul(a, b)) == moyal_mul(apply_symplectic(r5, a), apply_symplectic(r5, b)));
}

TEST_CASE("partial_derivative examples")
{
    const WeylElement p2q = WeylElement::monomial(1, {2, 1});
    CHECK(partial_derivative(0, p2q) == Cyclotomic(2) * abelian_mul(P(), Q()));
    CHECK(partial_derivative(1, P()).is_zero());
    CHECK(partial_derivative(0, partial_derivative(1, abelian_mul(P(), Q()))) == C(1, 1));
    CHECK_THROWS_AS(partial_derivative(2, P()), AxisOutOfRange);
    Rng rng(16);
    const WeylElement a = random_weyl(rng, 2, 5, 5);
    CHECK(partial_derivative(0, partial_derivative(3, a)) == partial_derivative(3, partial_derivative(0, a)));
}

TEST_CASE("text form of monomials")
{
    CHECK(monomial_to_string({2, 1}) == "p1^2 q1");
    CHECK(monomial_to_string({0, 0, 1, 0}) == "p2");
    CHECK(monomial_to_string({0, 0}) == "1");
}
