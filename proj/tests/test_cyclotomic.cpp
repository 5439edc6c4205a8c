#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <weylcoh/cyclotomic.hpp>
#include <weylcoh/errors.hpp>

#include "oracles.hpp"

using weylcoh::Cyclotomic;

namespace
{

Cyclotomic random_element(std::mt19937_64 &rng, int order)
{
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<mpq_class> c;
    for (int i = 0; i < order; ++i) {
        c.emplace_back(num(rng), den(rng));
        c.back().canonicalize();
    }
    return Cyclotomic::from_coefficients(order, c);
}

oracle::Poly padded(const Cyclotomic &c, int order)
{
    const Cyclotomic e = c.embed(order);
    oracle::Poly p(e.coefficients().begin(), e.coefficients().end());
    oracle::trim(p);
    return p;
}

} // namespace

TEST_CASE("root_of_unity examples")
{
    CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic(1));
    CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(5, -1) * Cyclotomic::root_of_unity(5, 1) == Cyclotomic(1));
}

TEST_CASE("root_of_unity has order N / gcd(N, k)")
{
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k < n; ++k) {
            const Cyclotomic z = Cyclotomic::root_of_unity(n, k);
            int order = 1;
            Cyclotomic p = z;
            while (!p.is_one()) {
                p *= z;
                ++order;
            }
            CHECK(order == n / std::gcd(n, k));
        }
    }
}

TEST_CASE("field_ops examples")
{
    const Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
    CHECK((Cyclotomic(1) - z4).inverse() == (Cyclotomic(1) + z4) / Cyclotomic(2));
    const Cyclotomic a = Cyclotomic(3, 5) + Cyclotomic(2) * z4;
    CHECK(a * Cyclotomic(1) == a);
    CHECK((Cyclotomic(1) - Cyclotomic::root_of_unity(2, 1)).inverse() == Cyclotomic(1, 2));
    CHECK_THROWS_AS(Cyclotomic(0).inverse(), weylcoh::DivisionByZero);
    CHECK_THROWS_AS(a / Cyclotomic(0), weylcoh::DivisionByZero);
}

TEST_CASE("inverse matches the extended Euclid oracle modulo Phi_N")
{
    std::mt19937_64 rng(7);
    for (int n : {3, 4, 5, 7, 8, 9, 12}) {
        const oracle::Poly phi = oracle::cyclotomic_poly(n);
        for (int t = 0; t < 10; ++t) {
            const Cyclotomic a = random_element(rng, n);
            if (a.is_zero()) {
                continue;
            }
            const oracle::Poly inv = oracle::inverse_mod(padded(a, n), phi);
            CHECK(a.inverse() == Cyclotomic::from_coefficients(n, inv));
        }
    }
}

TEST_CASE("reduced representation has deg Phi_N coefficients")
{
    for (int n : {3, 4, 5, 8, 12}) {
        const Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
        CHECK(z.coefficients().size() == oracle::cyclotomic_poly(n).size() - 1);
        // equal values have equal reduced coefficients
        const Cyclotomic a = z.pow(n + 1);
        CHECK(a.coefficients() == z.coefficients());
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(11);
    for (int n : {1, 3, 4, 5, 8, 12}) {
        for (int t = 0; t < 20; ++t) {
            const Cyclotomic a = random_element(rng, n);
            const Cyclotomic b = random_element(rng, n);
            const Cyclotomic c = random_element(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!b.is_zero()) {
                CHECK((a / b) * b == a);
            }
        }
    }
}

TEST_CASE("mixed orders embed into the lcm and agree with polynomial arithmetic")
{
    std::mt19937_64 rng(13);
    const oracle::Poly phi12 = oracle::cyclotomic_poly(12);
    for (int t = 0; t < 20; ++t) {
        const Cyclotomic a = random_element(rng, 3);
        const Cyclotomic b = random_element(rng, 4);
        const oracle::Poly pa = padded(a, 12);
        const oracle::Poly pb = padded(b, 12);
        oracle::Poly sum = pa;
        sum.resize(std::max(pa.size(), pb.size()), mpq_class(0));
        for (std::size_t i = 0; i < pb.size(); ++i) {
            sum[i] += pb[i];
        }
        CHECK(a + b == Cyclotomic::from_coefficients(12, oracle::reduce(sum, phi12)));
        CHECK(a * b == Cyclotomic::from_coefficients(12, oracle::reduce(oracle::mul(pa, pb), phi12)));
        CHECK(Cyclotomic::from_coefficients(12, padded(a, 12)) == a);
    }
}

TEST_CASE("rational values demote to order 1")
{
    const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    const Cyclotomic s = z3 + z3.conjugate();
    CHECK(s.is_rational());
    CHECK(s == Cyclotomic(-1));
    CHECK(s.order() == 1);
}

TEST_CASE("text form round trips")
{
    std::mt19937_64 rng(17);
    for (int n : {1, 4, 5, 12}) {
        for (int t = 0; t < 10; ++t) {
            const Cyclotomic a = random_element(rng, n);
            CHECK(Cyclotomic::parse(a.to_string(n), n) == a);
        }
    }
    CHECK(Cyclotomic::parse("1/2 - 3*z^2", 4) == Cyclotomic(7, 2));
    CHECK_THROWS_AS(Cyclotomic::parse("1 + * z", 4), weylcoh::ParseError);
    CHECK_THROWS_AS(Cyclotomic::parse("", 4), weylcoh::ParseError);
}

TEST_CASE("1 - alpha is invertible for every root of unity alpha != 1")
{
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k < n; ++k) {
            const Cyclotomic one_minus = Cyclotomic(1) - Cyclotomic::root_of_unity(n, k);
            CHECK(one_minus * one_minus.inverse() == Cyclotomic(1));
        }
    }
}
