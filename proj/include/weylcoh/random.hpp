#ifndef WEYLCOH_RANDOM_HPP
#define WEYLCOH_RANDOM_HPP

#include <cstdint>
#include <random>

#include <weylcoh/alt_cochain.hpp>
#include <weylcoh/weyl.hpp>

namespace weylcoh
{

using Rng = std::mt19937_64;

// Sparse random polynomial: up to `terms` monomials of total degree <= max_degree,
// small integer coefficients.
inline WeylElement random_weyl(Rng &rng, std::size_t pairs, int max_degree, int terms = 4)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> axis(0, 2 * pairs - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    WeylElement w(pairs);
    for (int t = 0; t < terms; ++t) {
        WeylElement::Exponent e(2 * pairs, 0);
        const int d = deg(rng);
        for (int j = 0; j < d; ++j) {
            ++e[axis(rng)];
        }
        w.add_term(e, Cyclotomic(coeff(rng)));
    }
    return w;
}

// Random Weyl-valued alternating cochain of the given degree.
inline AltCochain<WeylElement> random_cochain(Rng &rng, std::size_t pairs, int degree, int max_degree,
                                              int sets = 3, int terms = 3)
{
    AltCochain<WeylElement> c(pairs, degree);
    const auto all = subsets_of_size(2 * pairs, degree);
    if (all.empty()) {
        return c;
    }
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int s = 0; s < sets; ++s) {
        c.add(all[pick(rng)], random_weyl(rng, pairs, max_degree, terms));
    }
    return c;
}

} // namespace weylcoh

#endif
