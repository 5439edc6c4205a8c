#ifndef WEYLCOH_CYCLOTOMIC_HPP
#define WEYLCOH_CYCLOTOMIC_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace weylcoh
{

// Exact element of the cyclotomic field Q(zeta_N).
//
// The value is stored in the power basis 1, z, ..., z^(phi(N)-1) of
// zeta_N = z, reduced modulo the N-th cyclotomic polynomial, so that the
// coefficient vector is a unique representative. Operands of different
// orders are embedded into Q(zeta_lcm) before any arithmetic. Values that
// happen to be rational are always demoted to order 1, which keeps the
// common case (rational coefficients) cheap.
class Cyclotomic
{
public:
    Cyclotomic();
    Cyclotomic(long value); // NOLINT: implicit by design, mirrors mpq_class
    Cyclotomic(const mpq_class &value);
    Cyclotomic(long num, long den);

    // zeta_N^k for any integer k.
    static Cyclotomic root_of_unity(int order, long k);

    // Build from power-basis coefficients of Q(zeta_order); the vector may be
    // longer than phi(order), it is reduced.
    static Cyclotomic from_coefficients(int order, std::vector<mpq_class> coeffs);

    // Parse "a0 + a1*z + a2*z^3 - 1/2*z^4" where z = zeta_order.
    static Cyclotomic parse(std::string_view text, int order);

    int order() const { return m_order; }
    const std::vector<mpq_class> &coefficients() const { return m_coeffs; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return m_order == 1; }
    // Throws std::domain_error if the value is not rational.
    const mpq_class &rational() const;

    // Representation in Q(zeta_target); target must be a multiple of order().
    // The result is not normalized (a rational keeps order target), so it is
    // meant for reading coefficients, not for further arithmetic.
    Cyclotomic embed(int target) const;

    Cyclotomic inverse() const;
    // Complex conjugation, z -> z^-1.
    Cyclotomic conjugate() const;
    Cyclotomic pow(long e) const;

    Cyclotomic &operator+=(const Cyclotomic &other);
    Cyclotomic &operator-=(const Cyclotomic &other);
    Cyclotomic &operator*=(const Cyclotomic &other);
    Cyclotomic &operator/=(const Cyclotomic &other);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);
    friend bool operator!=(const Cyclotomic &a, const Cyclotomic &b) { return !(a == b); }

    // Text form used in JSON: "a0 + a1*z + ...", written for order() unless
    // a larger order is requested. The order itself is not part of the text.
    std::string to_string() const;
    std::string to_string(int as_order) const;

    // Strict weak order on values; only meaningful for deterministic output
    // (sorting keys), not a field ordering.
    friend bool canonical_less(const Cyclotomic &a, const Cyclotomic &b);

private:
    Cyclotomic(int order, std::vector<mpq_class> coeffs, bool reduced);
    void normalize();

    int m_order;
    std::vector<mpq_class> m_coeffs;
};

std::ostream &operator<<(std::ostream &os, const Cyclotomic &c);

// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
const std::vector<mpz_class> &cyclotomic_polynomial(int order);
// Euler phi, the degree of the N-th cyclotomic polynomial.
int euler_phi(int order);
int lcm_order(int a, int b);

} // namespace weylcoh

#endif
