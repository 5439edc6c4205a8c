#include <weylcoh/alt_cochain.hpp>

namespace weylcoh
{

std::vector<WedgeMask> subsets_of_size(std::size_t dim, int k)
{
    std::vector<WedgeMask> out;
    if (k < 0 || k > static_cast<int>(dim)) {
        return out;
    }
    for (WedgeMask m = 0; m < (WedgeMask(1) << dim); ++m) {
        if (mask_size(m) == k) {
            out.push_back(m);
        }
    }
    return out;
}

Cyclotomic minor(const Matrix &m, WedgeMask rows, WedgeMask cols)
{
    const auto r = mask_axes(rows);
    const auto c = mask_axes(cols);
    if (r.size() != c.size()) {
        throw std::invalid_argument("minor: row and column sets differ in size");
    }
    Matrix sub(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            sub(i, j) = m(r[i], c[j]);
        }
    }
    return sub.determinant();
}

} // namespace weylcoh
