#ifndef WEYLCOH_WEYL_HPP
#define WEYLCOH_WEYL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <weylcoh/cyclotomic.hpp>
#include <weylcoh/matrix.hpp>
#include <weylcoh/symplectic.hpp>

namespace weylcoh
{

// Sparse polynomial in p1, q1, ..., pn, qn over cyclotomic coefficients.
//
// Axis 2i is p_(i+1) and axis 2i+1 is q_(i+1); the same layout is used for
// any Darboux basis (P_i, Q_i), so the Moyal product below is valid in every
// symplectic coordinate system. The class only carries the vector space
// structure; the two algebra structures are the free functions abelian_mul
// and moyal_mul.
class WeylElement
{
public:
    using Exponent = std::vector<int>;
    using TermMap = std::map<Exponent, Cyclotomic>;

    WeylElement() = default;
    explicit WeylElement(std::size_t pairs) : m_pairs(pairs) {}

    static WeylElement constant(std::size_t pairs, const Cyclotomic &c);
    static WeylElement variable(std::size_t pairs, std::size_t axis);
    static WeylElement p(std::size_t pairs, std::size_t i) { return variable(pairs, 2 * i); }
    static WeylElement q(std::size_t pairs, std::size_t i) { return variable(pairs, 2 * i + 1); }
    static WeylElement monomial(std::size_t pairs, Exponent e, const Cyclotomic &c = Cyclotomic(1));
    // sum_i coords[i] * x_i.
    static WeylElement linear(std::size_t pairs, const std::vector<Cyclotomic> &coords);

    std::size_t pairs() const { return m_pairs; }
    std::size_t num_vars() const { return 2 * m_pairs; }
    const TermMap &terms() const { return m_terms; }
    std::size_t size() const { return m_terms.size(); }

    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const;
    // -1 for the zero polynomial.
    int degree() const;
    Cyclotomic constant_term() const;
    Cyclotomic coefficient(const Exponent &e) const;
    // Coefficients of the degree-1 part, one entry per axis.
    std::vector<Cyclotomic> linear_coordinates() const;
    WeylElement homogeneous_part(int d) const;

    void add_term(const Exponent &e, const Cyclotomic &c);

    WeylElement &operator+=(const WeylElement &other);
    WeylElement &operator-=(const WeylElement &other);
    WeylElement &operator*=(const Cyclotomic &s);
    friend WeylElement operator+(WeylElement a, const WeylElement &b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement &b) { return a -= b; }
    friend WeylElement operator*(const Cyclotomic &s, WeylElement a) { return a *= s; }
    WeylElement operator-() const;

    friend bool operator==(const WeylElement &a, const WeylElement &b);
    friend bool operator!=(const WeylElement &a, const WeylElement &b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t m_pairs = 0;
    TermMap m_terms;
};

// "p1^2 q1" style name of a monomial; "1" for the empty monomial.
std::string monomial_to_string(const WeylElement::Exponent &e);
int total_degree(const WeylElement::Exponent &e);

// Commutative polynomial product.
WeylElement abelian_mul(const WeylElement &a, const WeylElement &b);

// Moyal product a * b = m o exp(Pi/2)(a (x) b) with
// Pi = sum_i (d/dp_i (x) d/dq_i - d/dq_i (x) d/dp_i), normalized so that
// p_i * q_i - q_i * p_i = 1.
WeylElement moyal_mul(const WeylElement &a, const WeylElement &b);
WeylElement moyal_commutator(const WeylElement &a, const WeylElement &b);
// X_1 * X_2 * ... * X_k (left to right); the unit for an empty list.
WeylElement moyal_product(const std::vector<WeylElement> &factors, std::size_t pairs);

// Formal partial derivative along axis (0-based, 0 <= axis < 2n).
WeylElement partial_derivative(std::size_t axis, const WeylElement &a);

// Substitution x_j -> sum_i m(i, j) x_i extended as an algebra map of the
// commutative product. No symplectic check.
WeylElement linear_substitution(const Matrix &m, const WeylElement &a);

// Action of a symplectic matrix on W; an automorphism of both products.
WeylElement apply_symplectic(const SympMatrix &g, const WeylElement &a);

} // namespace weylcoh

#endif
