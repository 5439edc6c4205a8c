#include <weylcoh/matrix.hpp>

#include <stdexcept>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

Matrix::Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

Matrix Matrix::identity(std::size_t dim)
{
    return scalar(dim, Cyclotomic(1));
}

Matrix Matrix::scalar(std::size_t dim, const Cyclotomic &c)
{
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = c;
    }
    return m;
}

Matrix Matrix::symplectic_form(std::size_t pairs)
{
    Matrix j(2 * pairs, 2 * pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        j(2 * i, 2 * i + 1) = 1;
        j(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Cyclotomic>> &columns)
{
    if (columns.empty()) {
        return {};
    }
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.m_rows) {
            throw std::invalid_argument("from_columns: ragged columns");
        }
        for (std::size_t r = 0; r < m.m_rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

std::vector<Cyclotomic> Matrix::column(std::size_t c) const
{
    std::vector<Cyclotomic> v(m_rows);
    for (std::size_t r = 0; r < m_rows; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(m_cols, m_rows);
    for (std::size_t r = 0; r < m_rows; ++r) {
        for (std::size_t c = 0; c < m_cols; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto &x : m_data) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_identity() const
{
    if (m_rows != m_cols) {
        return false;
    }
    for (std::size_t r = 0; r < m_rows; ++r) {
        for (std::size_t c = 0; c < m_cols; ++c) {
            const auto &x = (*this)(r, c);
            if (r == c ? !x.is_one() : !x.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
    if (a.m_cols != b.m_rows) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    Matrix r(a.m_rows, b.m_cols);
    for (std::size_t i = 0; i < a.m_rows; ++i) {
        for (std::size_t k = 0; k < a.m_cols; ++k) {
            const Cyclotomic &x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_cols; ++j) {
                const Cyclotomic &y = b(k, j);
                if (!y.is_zero()) {
                    r(i, j) += x * y;
                }
            }
        }
    }
    return r;
}

Matrix operator+(const Matrix &a, const Matrix &b)
{
    if (a.m_rows != b.m_rows || a.m_cols != b.m_cols) {
        throw std::invalid_argument("matrix sum: dimension mismatch");
    }
    Matrix r = a;
    for (std::size_t i = 0; i < r.m_data.size(); ++i) {
        r.m_data[i] += b.m_data[i];
    }
    return r;
}

Matrix operator-(const Matrix &a, const Matrix &b)
{
    return a + Cyclotomic(-1) * b;
}

Matrix operator*(const Cyclotomic &s, const Matrix &a)
{
    Matrix r = a;
    for (auto &x : r.m_data) {
        x *= s;
    }
    return r;
}

bool operator==(const Matrix &a, const Matrix &b)
{
    return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
}

std::vector<Cyclotomic> Matrix::apply(const std::vector<Cyclotomic> &v) const
{
    if (v.size() != m_cols) {
        throw std::invalid_argument("matrix apply: dimension mismatch");
    }
    std::vector<Cyclotomic> r(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) {
                r[i] += (*this)(i, j) * v[j];
            }
        }
    }
    return r;
}

std::vector<std::size_t> row_reduce(std::vector<std::vector<Cyclotomic>> &rows)
{
    std::vector<std::size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        const Cyclotomic inv = rows[r][c].inverse();
        for (std::size_t j = c; j < ncols; ++j) {
            rows[r][j] *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) {
                continue;
            }
            const Cyclotomic f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) {
                if (!rows[r][j].is_zero()) {
                    rows[i][j] -= f * rows[r][j];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Matrix Matrix::inverse() const
{
    if (m_rows != m_cols) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    const std::size_t n = m_rows;
    std::vector<std::vector<Cyclotomic>> aug(n, std::vector<Cyclotomic>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = (*this)(i, j);
        }
        aug[i][n + i] = 1;
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw DivisionByZero("singular matrix");
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = aug[i][n + j];
        }
    }
    return inv;
}

Cyclotomic Matrix::determinant() const
{
    if (m_rows != m_cols) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t n = m_rows;
    std::vector<std::vector<Cyclotomic>> a(n, std::vector<Cyclotomic>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = (*this)(i, j);
        }
    }
    Cyclotomic det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) {
            ++p;
        }
        if (p == n) {
            return Cyclotomic(0);
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const Cyclotomic inv = a[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) {
                continue;
            }
            const Cyclotomic f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) {
                a[i][j] -= f * a[c][j];
            }
        }
    }
    return det;
}

std::size_t Matrix::rank() const
{
    std::vector<std::vector<Cyclotomic>> rows(m_rows, std::vector<Cyclotomic>(m_cols));
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            rows[i][j] = (*this)(i, j);
        }
    }
    return row_reduce(rows).size();
}

std::vector<std::vector<Cyclotomic>> Matrix::column_space_basis() const
{
    // Pivot columns of the row echelon form index an independent subset of
    // the original columns.
    std::vector<std::vector<Cyclotomic>> rows(m_rows, std::vector<Cyclotomic>(m_cols));
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            rows[i][j] = (*this)(i, j);
        }
    }
    std::vector<std::vector<Cyclotomic>> basis;
    for (std::size_t c : row_reduce(rows)) {
        basis.push_back(column(c));
    }
    return basis;
}

int Matrix::cyclotomic_order() const
{
    int order = 1;
    for (const auto &x : m_data) {
        order = lcm_order(order, x.order());
    }
    return order;
}

std::string Matrix::key(int order) const
{
    std::string k;
    for (const auto &x : m_data) {
        k += x.to_string(order);
        k += '|';
    }
    return k;
}

Cyclotomic pfaffian(const Matrix &a)
{
    const std::size_t n = a.rows();
    if (n == 0) {
        return Cyclotomic(1);
    }
    if (n % 2 != 0) {
        return Cyclotomic(0);
    }
    // Expansion along the first row: Pf(A) = sum_j (-1)^(j+1) a_{0j} Pf(A_{0j}).
    Cyclotomic total;
    for (std::size_t j = 1; j < n; ++j) {
        if (a(0, j).is_zero()) {
            continue;
        }
        std::vector<std::size_t> keep;
        for (std::size_t i = 1; i < n; ++i) {
            if (i != j) {
                keep.push_back(i);
            }
        }
        Matrix minor(n - 2, n - 2);
        for (std::size_t r = 0; r < keep.size(); ++r) {
            for (std::size_t c = 0; c < keep.size(); ++c) {
                minor(r, c) = a(keep[r], keep[c]);
            }
        }
        Cyclotomic term = a(0, j) * pfaffian(minor);
        if (j % 2 == 0) {
            term = -term;
        }
        total += term;
    }
    return total;
}

} // namespace weylcoh
