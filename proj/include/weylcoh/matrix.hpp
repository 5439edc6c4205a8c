#ifndef WEYLCOH_MATRIX_HPP
#define WEYLCOH_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <weylcoh/cyclotomic.hpp>

namespace weylcoh
{

// Dense row-major matrix over cyclotomic fields.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t dim);
    static Matrix scalar(std::size_t dim, const Cyclotomic &c);
    // Canonical symplectic Gram matrix J for the basis (p1, q1, ..., pn, qn):
    // J(p_i, q_i) = 1, J(q_i, p_i) = -1.
    static Matrix symplectic_form(std::size_t pairs);
    static Matrix from_columns(const std::vector<std::vector<Cyclotomic>> &columns);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Cyclotomic &operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
    const Cyclotomic &operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

    std::vector<Cyclotomic> column(std::size_t c) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Cyclotomic &s, const Matrix &a);
    friend bool operator==(const Matrix &a, const Matrix &b);
    friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic> &v) const;

    // Throws DivisionByZero when singular.
    Matrix inverse() const;
    Cyclotomic determinant() const;
    std::size_t rank() const;
    // Basis of the column space, taken from the pivot columns in order.
    std::vector<std::vector<Cyclotomic>> column_space_basis() const;

    // Least common multiple of the cyclotomic orders of the entries.
    int cyclotomic_order() const;
    // Deterministic text key (all entries written at the given order).
    std::string key(int order) const;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Cyclotomic> m_data;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Cyclotomic>> &rows);

// Pfaffian of an antisymmetric matrix of even dimension (1 for dimension 0).
Cyclotomic pfaffian(const Matrix &a);

} // namespace weylcoh

#endif
