#ifndef WEYLCOH_ALT_COCHAIN_HPP
#define WEYLCOH_ALT_COCHAIN_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <weylcoh/cyclotomic.hpp>
#include <weylcoh/errors.hpp>
#include <weylcoh/matrix.hpp>

namespace weylcoh
{

// Bit i of a mask selects basis vector Z_(i+1) of V (0-based axis i).
using WedgeMask = std::uint32_t;

inline int mask_size(WedgeMask m)
{
    return std::popcount(m);
}

// Sign of Z_i^* wedge Z_I^* = sign * Z_(I+i)^*, i.e. (-1)^#{j in I : j < i}.
inline int wedge_sign(WedgeMask set, std::size_t axis)
{
    const WedgeMask below = (WedgeMask(1) << axis) - 1;
    return (std::popcount(set & below) % 2 == 0) ? 1 : -1;
}

inline std::vector<std::size_t> mask_axes(WedgeMask m)
{
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
        if (m & 1) {
            axes.push_back(i);
        }
    }
    return axes;
}

// All k-subsets of {0, ..., dim-1} in increasing numeric order.
std::vector<WedgeMask> subsets_of_size(std::size_t dim, int k);

// det M[rows I, cols J] for |I| = |J|.
Cyclotomic minor(const Matrix &m, WedgeMask rows, WedgeMask cols);

// Alternating k-linear map on V = C^(2n) with values in Value, stored by
// its values on increasing basis tuples Z_I = Z_i1 ^ ... ^ Z_ik. Zero values
// are never stored.
//
// Value must provide +=, unary -, is_zero(), == and multiplication by a
// Cyclotomic scalar on the left.
template <class Value>
class AltCochain
{
public:
    using ValueMap = std::map<WedgeMask, Value>;

    AltCochain() = default;
    AltCochain(std::size_t pairs, int degree) : m_pairs(pairs), m_degree(degree)
    {
        // Degree -1 and degrees above 2n are zero spaces; allowed so that
        // differentials and homotopies compose freely.
        if (degree < -1) {
            throw std::invalid_argument("cochain degree out of range");
        }
    }

    std::size_t pairs() const { return m_pairs; }
    std::size_t dim() const { return 2 * m_pairs; }
    int degree() const { return m_degree; }
    const ValueMap &values() const { return m_values; }
    bool is_zero() const { return m_values.empty(); }

    const Value *find(WedgeMask set) const
    {
        auto it = m_values.find(set);
        return it == m_values.end() ? nullptr : &it->second;
    }

    void add(WedgeMask set, const Value &v)
    {
        if (mask_size(set) != m_degree) {
            throw std::invalid_argument("wedge index set has the wrong size");
        }
        if (v.is_zero()) {
            return;
        }
        auto [it, inserted] = m_values.try_emplace(set, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) {
                m_values.erase(it);
            }
        }
    }

    AltCochain &operator+=(const AltCochain &o)
    {
        check_shape(o);
        for (const auto &[s, v] : o.m_values) {
            add(s, v);
        }
        return *this;
    }
    AltCochain &operator-=(const AltCochain &o)
    {
        check_shape(o);
        for (const auto &[s, v] : o.m_values) {
            add(s, -v);
        }
        return *this;
    }
    AltCochain &operator*=(const Cyclotomic &c)
    {
        if (c.is_zero()) {
            m_values.clear();
            return *this;
        }
        for (auto &[s, v] : m_values) {
            v = c * v;
        }
        return *this;
    }
    friend AltCochain operator+(AltCochain a, const AltCochain &b) { return a += b; }
    friend AltCochain operator-(AltCochain a, const AltCochain &b) { return a -= b; }
    friend AltCochain operator*(const Cyclotomic &c, AltCochain a) { return a *= c; }

    friend bool operator==(const AltCochain &a, const AltCochain &b)
    {
        return a.m_pairs == b.m_pairs && a.m_degree == b.m_degree && a.m_values == b.m_values;
    }
    friend bool operator!=(const AltCochain &a, const AltCochain &b) { return !(a == b); }

    // Apply f to each value (f must be linear; zero results are dropped).
    template <class F>
    AltCochain map_values(F &&f) const
    {
        AltCochain r(m_pairs, m_degree);
        for (const auto &[s, v] : m_values) {
            r.add(s, f(v));
        }
        return r;
    }

    // (c o m)(v_1, ..., v_k) = c(m v_1, ..., m v_k), m acting on column
    // coordinates in the same basis.
    AltCochain pullback(const Matrix &m) const
    {
        if (m.rows() != dim() || m.cols() != dim()) {
            throw MismatchedArity("pullback matrix does not match the cochain dimension");
        }
        AltCochain r(m_pairs, m_degree);
        const auto targets = subsets_of_size(dim(), m_degree);
        for (const auto &[src, v] : m_values) {
            for (WedgeMask t : targets) {
                const Cyclotomic d = minor(m, src, t);
                if (!d.is_zero()) {
                    r.add(t, d * v);
                }
            }
        }
        return r;
    }

private:
    void check_shape(const AltCochain &o) const
    {
        if (o.m_pairs != m_pairs || o.m_degree != m_degree) {
            throw MismatchedArity("cochains of different shape");
        }
    }

    std::size_t m_pairs = 0;
    int m_degree = 0;
    ValueMap m_values;
};

// Scalar-valued alternating form on V.
using AltForm = AltCochain<Cyclotomic>;

} // namespace weylcoh

#endif
