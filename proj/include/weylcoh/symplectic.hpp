#ifndef WEYLCOH_SYMPLECTIC_HPP
#define WEYLCOH_SYMPLECTIC_HPP

#include <cstddef>
#include <vector>

#include <weylcoh/matrix.hpp>

namespace weylcoh
{

// Canonical symplectic form on V = span(p1, q1, ..., pn, qn):
// omega(p_i, q_j) = delta_ij, omega(p_i, p_j) = omega(q_i, q_j) = 0.
Cyclotomic symplectic_pairing(const std::vector<Cyclotomic> &u, const std::vector<Cyclotomic> &v);

// A 2n x 2n matrix g with g^T J g = J, acting on V by column vectors:
// g(e_j) = sum_i g(i, j) e_i.
class SympMatrix
{
public:
    SympMatrix() = default;
    // Throws NonSymplecticMatrix.
    static SympMatrix from_matrix(Matrix m);
    static SympMatrix identity(std::size_t pairs);
    static bool is_symplectic(const Matrix &m);

    std::size_t pairs() const { return m_matrix.rows() / 2; }
    std::size_t dim() const { return m_matrix.rows(); }
    const Matrix &matrix() const { return m_matrix; }
    const Cyclotomic &operator()(std::size_t r, std::size_t c) const { return m_matrix(r, c); }

    // g^-1 = -J g^T J.
    SympMatrix inverse() const;
    bool is_identity() const { return m_matrix.is_identity(); }

    friend SympMatrix operator*(const SympMatrix &a, const SympMatrix &b);
    friend bool operator==(const SympMatrix &a, const SympMatrix &b) { return a.m_matrix == b.m_matrix; }
    friend bool operator!=(const SympMatrix &a, const SympMatrix &b) { return !(a == b); }

private:
    explicit SympMatrix(Matrix m) : m_matrix(std::move(m)) {}
    Matrix m_matrix;
};

// Block-diagonal embedding of a list of symplectic matrices (direct sum).
SympMatrix direct_sum(const std::vector<SympMatrix> &blocks);

} // namespace weylcoh

#endif
