#ifndef WEYLCOH_TEST_ORACLES_HPP
#define WEYLCOH_TEST_ORACLES_HPP

// Reference computations used by the tests, written independently of the
// library algorithms they check. Only the commutative polynomial product and
// partial derivatives are borrowed from the library.

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include <weylcoh/alt_cochain.hpp>
#include <weylcoh/cyclotomic.hpp>
#include <weylcoh/matrix.hpp>
#include <weylcoh/weyl.hpp>

namespace oracle
{

using Poly = std::vector<mpq_class>; // low degree first

inline void trim(Poly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

inline Poly mul(const Poly &a, const Poly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

inline Poly sub(Poly a, const Poly &b)
{
    a.resize(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

// Long division a = q b + r.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly &b)
{
    trim(a);
    Poly q;
    if (a.size() >= b.size()) {
        q.assign(a.size() - b.size() + 1, mpq_class(0));
    }
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] -= f * b[i];
        }
        trim(a);
    }
    trim(q);
    return {q, a};
}

// Phi_N from x^N - 1 = prod_(d | N) Phi_d.
inline Poly cyclotomic_poly(int n)
{
    Poly p(n + 1, mpq_class(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = divmod(p, cyclotomic_poly(d)).first;
        }
    }
    return p;
}

// Inverse of a modulo m by the extended Euclidean algorithm.
inline Poly inverse_mod(const Poly &a, const Poly &m)
{
    Poly r0 = m, r1 = a, s0, s1{mpq_class(1)};
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r0 is a nonzero constant
    for (auto &c : s0) {
        c /= r0[0];
    }
    return divmod(s0, m).second;
}

inline Poly reduce(const Poly &a, const Poly &m)
{
    return divmod(a, m).second;
}

// Moyal product by expanding sum_r Pi^r / (2^r r!) on f (x) g one Pi at a
// time, keeping the tensor factors apart until the final multiplication.
inline weylcoh::WeylElement moyal(const weylcoh::WeylElement &f, const weylcoh::WeylElement &g)
{
    using weylcoh::WeylElement;
    const std::size_t n = f.pairs();
    WeylElement result(n);
    std::vector<std::pair<WeylElement, WeylElement>> layer{{f, g}};
    mpq_class weight(1);
    for (int r = 0; !layer.empty(); ++r) {
        for (const auto &[a, b] : layer) {
            WeylElement prod = weylcoh::abelian_mul(a, b);
            result += weylcoh::Cyclotomic(weight) * prod;
        }
        std::vector<std::pair<WeylElement, WeylElement>> next;
        for (const auto &[a, b] : layer) {
            for (std::size_t i = 0; i < n; ++i) {
                WeylElement ap = weylcoh::partial_derivative(2 * i, a);
                WeylElement bq = weylcoh::partial_derivative(2 * i + 1, b);
                if (!ap.is_zero() && !bq.is_zero()) {
                    next.emplace_back(ap, bq);
                }
                WeylElement aq = weylcoh::partial_derivative(2 * i + 1, a);
                WeylElement bp = weylcoh::partial_derivative(2 * i, b);
                if (!aq.is_zero() && !bp.is_zero()) {
                    next.emplace_back(-aq, bp);
                }
            }
        }
        layer = std::move(next);
        weight = weight / (2 * (r + 1));
    }
    return result;
}

// Pfaffian by cofactor expansion along the first row.
inline weylcoh::Cyclotomic pfaffian(const weylcoh::Matrix &a)
{
    const std::size_t m = a.rows();
    if (m == 0) {
        return weylcoh::Cyclotomic(1);
    }
    if (m % 2 == 1) {
        return weylcoh::Cyclotomic(0);
    }
    // Recursive expansion along the first row.
    weylcoh::Cyclotomic total;
    for (std::size_t j = 1; j < m; ++j) {
        if (a(0, j).is_zero()) {
            continue;
        }
        std::vector<std::size_t> keep;
        for (std::size_t t = 1; t < m; ++t) {
            if (t != j) {
                keep.push_back(t);
            }
        }
        weylcoh::Matrix sub(keep.size(), keep.size());
        for (std::size_t r = 0; r < keep.size(); ++r) {
            for (std::size_t c = 0; c < keep.size(); ++c) {
                sub(r, c) = a(keep[r], keep[c]);
            }
        }
        const weylcoh::Cyclotomic sign = (j % 2 == 1) ? 1 : -1;
        total += sign * a(0, j) * oracle::pfaffian(sub);
    }
    return total;
}

} // namespace oracle

#endif
