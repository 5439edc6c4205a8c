#ifndef WEYLCOH_SYMPGROUP_HPP
#define WEYLCOH_SYMPGROUP_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <weylcoh/alt_cochain.hpp>
#include <weylcoh/symplectic.hpp>

namespace weylcoh
{

inline constexpr std::size_t default_group_cap = 1024;

// Per-element data of a finite order symplectic matrix sigma:
// eigenvalues alpha_i, a Darboux basis (P_i, Q_i) with sigma(P_i) = alpha_i P_i
// and sigma(Q_i) = alpha_i^-1 Q_i (alpha_i != 1 exactly for i < k), the
// projection onto V_sigma = range(sigma - Id) along Ker(sigma - Id), and the
// top form omega_sigma on V_sigma.
struct SigmaInvariants {
    SympMatrix sigma;
    int order = 1;
    std::size_t k = 0;
    std::vector<Cyclotomic> alphas;
    // Exponents j with alpha_i = zeta_order^j.
    std::vector<int> alpha_exponents;
    // Columns P1, Q1, ..., Pn, Qn in canonical coordinates; symplectic.
    SympMatrix darboux;
    // Projection onto V_sigma, computed by group averaging (independent of
    // the Darboux basis).
    Matrix projection;
    // omega_sigma in the canonical basis, from the projection formula
    // omega_sigma(v) = Pf(omega(P v_a, P v_b)).
    AltForm omega;
};

// Multiplicative order, or NotFiniteOrder when it exceeds cap.
int multiplicative_order(const SympMatrix &sigma, int cap = static_cast<int>(default_group_cap));
// dim range(sigma - Id).
std::size_t moved_dimension(const SympMatrix &sigma);

SigmaInvariants sigma_invariants(const SympMatrix &sigma, int cap = static_cast<int>(default_group_cap));

// omega_sigma(e_I) = Pf[omega(P e_a, P e_b)]_(a,b in I), |I| = 2k.
AltForm omega_from_projection(const Matrix &projection, std::size_t k);
// omega_sigma = x_1^* ^ ... ^ x_2k^* for the first 2k Darboux vectors, with
// duals vanishing on the remaining Darboux vectors.
AltForm omega_from_darboux(const SympMatrix &darboux, std::size_t k);

// pi_x(f)(v_1, ..., v_k) = f(x^-1 v_1, ..., x^-1 v_k).
AltForm transport_form(const SympMatrix &x, const AltForm &form);
// pi_x(omega_sigma).
AltForm transport_form(const SympMatrix &x, const SympMatrix &sigma);

struct ConjClass {
    std::size_t representative = 0; // smallest member index
    std::vector<std::size_t> members; // increasing
    std::vector<std::size_t> centralizer; // S_gamma of the representative
    std::size_t k = 0;
    // member -> x with member = x * representative * x^-1
    std::map<std::size_t, std::size_t> witness;
};

// Finite subgroup of Sp(2n) enumerated from generators. Elements are indexed
// in breadth-first order from the identity (index 0), multiplying on the
// right by the generators in the given order, so indices are deterministic.
class FiniteSympGroup
{
public:
    // Throws NonSymplecticMatrix, OrderExceedsCap.
    static std::shared_ptr<const FiniteSympGroup> close(const std::vector<SympMatrix> &generators,
                                                        std::size_t cap = default_group_cap,
                                                        std::string name = {});

    const std::string &name() const { return m_name; }
    std::size_t order() const { return m_elements.size(); }
    std::size_t pairs() const { return m_pairs; }
    int cyclotomic_order() const { return m_cyclotomic_order; }
    const std::vector<SympMatrix> &elements() const { return m_elements; }
    const SympMatrix &element(std::size_t i) const { return m_elements.at(i); }
    const std::vector<std::size_t> &generators() const { return m_generators; }
    static constexpr std::size_t identity() { return 0; }

    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const { return m_inverse.at(a); }
    // x g x^-1
    std::size_t conjugate(std::size_t x, std::size_t g) const { return mul(mul(x, g), inverse(x)); }
    std::optional<std::size_t> index_of(const SympMatrix &m) const;

    const std::vector<ConjClass> &classes() const { return m_classes; }
    std::size_t class_of(std::size_t element) const { return m_class_of.at(element); }
    // Gamma_2k: class indices grouped by k_gamma.
    std::map<std::size_t, std::vector<std::size_t>> classes_by_k() const;

    // Cached per element; safe to call concurrently.
    const SigmaInvariants &invariants(std::size_t element) const;

private:
    FiniteSympGroup() = default;
    void build_classes();

    std::string m_name;
    std::size_t m_pairs = 0;
    int m_cyclotomic_order = 1;
    std::vector<SympMatrix> m_elements;
    std::vector<std::size_t> m_generators;
    std::unordered_map<std::string, std::size_t> m_index;
    std::vector<std::size_t> m_table; // full product table when small
    std::vector<std::size_t> m_inverse;
    std::vector<ConjClass> m_classes;
    std::vector<std::size_t> m_class_of;

    mutable std::mutex m_cache_mutex;
    mutable std::vector<std::unique_ptr<SigmaInvariants>> m_invariants;
};

using GroupPtr = std::shared_ptr<const FiniteSympGroup>;

} // namespace weylcoh

#endif
