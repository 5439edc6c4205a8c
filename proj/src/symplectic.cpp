#include <weylcoh/symplectic.hpp>

#include <stdexcept>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

Cyclotomic symplectic_pairing(const std::vector<Cyclotomic> &u, const std::vector<Cyclotomic> &v)
{
    if (u.size() != v.size() || u.size() % 2 != 0) {
        throw MismatchedArity("symplectic pairing needs two vectors of the same even length");
    }
    Cyclotomic r;
    for (std::size_t i = 0; i + 1 < u.size(); i += 2) {
        if (!u[i].is_zero() && !v[i + 1].is_zero()) {
            r += u[i] * v[i + 1];
        }
        if (!u[i + 1].is_zero() && !v[i].is_zero()) {
            r -= u[i + 1] * v[i];
        }
    }
    return r;
}

bool SympMatrix::is_symplectic(const Matrix &m)
{
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
        return false;
    }
    const Matrix j = Matrix::symplectic_form(m.rows() / 2);
    return m.transpose() * j * m == j;
}

SympMatrix SympMatrix::from_matrix(Matrix m)
{
    if (!is_symplectic(m)) {
        throw NonSymplecticMatrix("matrix does not preserve the canonical symplectic form");
    }
    return SympMatrix(std::move(m));
}

SympMatrix SympMatrix::identity(std::size_t pairs)
{
    return SympMatrix(Matrix::identity(2 * pairs));
}

SympMatrix SympMatrix::inverse() const
{
    const Matrix j = Matrix::symplectic_form(pairs());
    return SympMatrix(Cyclotomic(-1) * (j * m_matrix.transpose() * j));
}

SympMatrix operator*(const SympMatrix &a, const SympMatrix &b)
{
    if (a.dim() != b.dim()) {
        throw MismatchedArity("product of symplectic matrices of different sizes");
    }
    return SympMatrix(a.m_matrix * b.m_matrix);
}

SympMatrix direct_sum(const std::vector<SympMatrix> &blocks)
{
    std::size_t dim = 0;
    for (const auto &b : blocks) {
        dim += b.dim();
    }
    Matrix m(dim, dim);
    std::size_t off = 0;
    for (const auto &b : blocks) {
        for (std::size_t r = 0; r < b.dim(); ++r) {
            for (std::size_t c = 0; c < b.dim(); ++c) {
                m(off + r, off + c) = b(r, c);
            }
        }
        off += b.dim();
    }
    return SympMatrix::from_matrix(std::move(m));
}

} // namespace weylcoh
