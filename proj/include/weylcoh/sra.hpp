#ifndef WEYLCOH_SRA_HPP
#define WEYLCOH_SRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <weylcoh/smash.hpp>
#include <weylcoh/sympgroup.hpp>
#include <weylcoh/weyl.hpp>

namespace weylcoh
{

// Polynomial in the formal parameter hbar with cyclotomic coefficients.
class HbarPoly
{
public:
    HbarPoly() = default;
    HbarPoly(const Cyclotomic &c); // NOLINT: constants convert implicitly
    static HbarPoly hbar(const Cyclotomic &c = Cyclotomic(1));

    const std::map<int, Cyclotomic> &coefficients() const { return m_coeffs; }
    bool is_zero() const { return m_coeffs.empty(); }
    int degree() const { return m_coeffs.empty() ? -1 : m_coeffs.rbegin()->first; }
    Cyclotomic coefficient(int power) const;
    Cyclotomic evaluate(const Cyclotomic &c) const;
    void add(int power, const Cyclotomic &c);

    HbarPoly &operator+=(const HbarPoly &o);
    HbarPoly &operator-=(const HbarPoly &o);
    HbarPoly &operator*=(const HbarPoly &o);
    friend HbarPoly operator+(HbarPoly a, const HbarPoly &b) { return a += b; }
    friend HbarPoly operator-(HbarPoly a, const HbarPoly &b) { return a -= b; }
    friend HbarPoly operator*(HbarPoly a, const HbarPoly &b) { return a *= b; }
    HbarPoly operator-() const;
    friend bool operator==(const HbarPoly &a, const HbarPoly &b) { return a.m_coeffs == b.m_coeffs; }
    friend bool operator!=(const HbarPoly &a, const HbarPoly &b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<int, Cyclotomic> m_coeffs;
};

// Linear combination of PBW normal monomials e_1^i1 ... e_2n^i2n (x) g, where
// e_1 < ... < e_2n is the canonical basis p1, q1, ..., pn, qn of V.
class SRAElement
{
public:
    using Key = std::pair<WeylElement::Exponent, std::size_t>;
    using TermMap = std::map<Key, HbarPoly>;

    SRAElement() = default;
    explicit SRAElement(GroupPtr group);

    static SRAElement monomial(GroupPtr group, WeylElement::Exponent e, std::size_t g = FiniteSympGroup::identity(),
                               const HbarPoly &c = HbarPoly(Cyclotomic(1)));
    static SRAElement scalar(GroupPtr group, const HbarPoly &c);
    // Linear element sum_a v_a e_a.
    static SRAElement vector(GroupPtr group, const std::vector<Cyclotomic> &coords);
    static SRAElement basis_vector(GroupPtr group, std::size_t axis);
    static SRAElement group_element(GroupPtr group, std::size_t g);

    const GroupPtr &group() const { return m_group; }
    std::size_t pairs() const { return m_group ? m_group->pairs() : 0; }
    const TermMap &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    // Highest total V-degree, -1 for zero.
    int degree() const;

    void add_term(const WeylElement::Exponent &e, std::size_t g, const HbarPoly &c);

    SRAElement &operator+=(const SRAElement &o);
    SRAElement &operator-=(const SRAElement &o);
    friend SRAElement operator+(SRAElement a, const SRAElement &b) { return a += b; }
    friend SRAElement operator-(SRAElement a, const SRAElement &b) { return a -= b; }
    friend SRAElement operator*(const HbarPoly &s, SRAElement a);
    SRAElement operator-() const;
    friend bool operator==(const SRAElement &a, const SRAElement &b);
    friend bool operator!=(const SRAElement &a, const SRAElement &b) { return !(a == b); }

    // "(c(ħ))·e1^a e2^b ⊗ g[idx] + ..."
    std::string to_string() const;

private:
    void adopt(const SRAElement &o);

    GroupPtr m_group;
    TermMap m_terms;
};

// A letter of G*T(V)[hbar]: a vector of V (coordinates in the canonical basis)
// or a group element.
struct VectorLetter {
    std::vector<Cyclotomic> coords;
};
struct GroupLetter {
    std::size_t element = 0;
};
using Letter = std::variant<VectorLetter, GroupLetter>;

VectorLetter basis_letter(std::size_t pairs, std::size_t axis);

struct TVWord {
    HbarPoly coeff = HbarPoly(Cyclotomic(1));
    std::vector<Letter> letters;
};

// Rewriting system for H_(hbar lambda): e_j e_i -> e_i e_j + kappa(i, j) for
// j > i, g e -> g(e) g, g h -> (gh). kappa(i, j) = omega(e_j, e_i) +
// hbar sum_gamma lambda(gamma) sum_(g in gamma) omega_g(e_j, e_i) g.
// Immutable apart from an internal product cache.
class RewriteSystem
{
public:
    // Throws UnknownClassKey.
    RewriteSystem(GroupPtr group, LambdaWeights lambda);
    RewriteSystem(const RewriteSystem &other) : RewriteSystem(other, true) {}
    RewriteSystem(RewriteSystem &&other) : RewriteSystem(other, true) {}

    const GroupPtr &group() const { return m_group; }
    std::size_t pairs() const { return m_group->pairs(); }
    std::size_t dim() const { return 2 * pairs(); }
    const LambdaWeights &lambda() const { return m_lambda; }
    // kappa(i, j) for i < j.
    const SRAElement &kappa(std::size_t i, std::size_t j) const;
    // True when every kappa entry has V-degree 0.
    bool degree_lowering() const;

    // Same system with hbar replaced by c.
    RewriteSystem specialized(const Cyclotomic &c) const;
    // Copy whose kappa(i, j) has `perturbation` added (negative controls).
    RewriteSystem corrupted(std::size_t i, std::size_t j, const SRAElement &perturbation) const;

    // Product of normal forms.
    SRAElement mul(const SRAElement &x, const SRAElement &y) const;
    // x * v for v in V.
    SRAElement mul_vector(const SRAElement &x, const std::vector<Cyclotomic> &v) const;
    SRAElement mul_group(const SRAElement &x, std::size_t g) const;
    SRAElement normal_form(const TVWord &w) const;
    SRAElement normal_form(const std::vector<TVWord> &sum) const;

private:
    RewriteSystem(const RewriteSystem &other, bool copy_cache);
    // Normal form of e^I e_b (no group letters).
    const SRAElement &monomial_times_basis(const WeylElement::Exponent &e, std::size_t b) const;

    GroupPtr m_group;
    LambdaWeights m_lambda;
    std::vector<std::vector<SRAElement>> m_kappa;

    mutable std::mutex m_cache_mutex;
    mutable std::map<std::pair<WeylElement::Exponent, std::size_t>, std::shared_ptr<const SRAElement>> m_cache;
};

// x y - y x.
SRAElement sra_commutator(const RewriteSystem &r, const SRAElement &x, const SRAElement &y);
// g x g^-1.
SRAElement sra_ad_group(const RewriteSystem &r, std::size_t g, const SRAElement &x);

struct CriticalPair {
    std::string label;
    bool resolved = false;
    SRAElement left;
    SRAElement right;
};
struct ConfluenceReport {
    std::vector<CriticalPair> pairs;
    bool all_resolved() const;
    std::size_t failures() const;
};
// Overlaps e_k e_j e_i (k > j > i), g e_j e_i (j > i), g h e_i, and g h k
// when |G| <= group_triple_cap.
ConfluenceReport confluence_check(const RewriteSystem &r, std::size_t group_triple_cap = 8);

// (1/k!) sum over permutations of the products.
SRAElement symmetrized_product(const RewriteSystem &r, const std::vector<SRAElement> &args);

// Section S(V) (x) C[G][hbar] -> H: e^I (x) g -> <letters of e^I> g. Its
// inverse is a triangular solve; symbols are returned as SRAElement terms
// read as commutative monomials.
SRAElement section(const RewriteSystem &r, const SRAElement &symbol);
SRAElement section_inverse(const RewriteSystem &r, const SRAElement &x);

// Returns a * <a_1..a_k> - (right-hand side of the Berezin expansion); zero
// when the identity holds. Throws CapExceeded when the total degree exceeds cap.
SRAElement berezin_difference(const RewriteSystem &r, const SRAElement &a, const std::vector<SRAElement> &args,
                              int cap = 6);

// Exact Bernoulli number with B_1 = -1/2. j <= 32.
mpq_class bernoulli(int j);

// hbar -> c.
SRAElement specialize_hbar(const SRAElement &x, const Cyclotomic &c);

// hbar = 0 comparison with G*W.
// x at hbar = 0, via section_inverse in the hbar = 0 system r0.
SmashElement to_smash(const RewriteSystem &r0, const SRAElement &x);
// e^I (x) g -> Moyal product of the letters in order, times g.
SmashElement ordered_moyal_image(const SRAElement &x);
struct HbarZeroReport {
    std::size_t pairs_checked = 0;
    std::size_t mismatches = 0;
    std::size_t section_mismatches = 0; // to_smash vs ordered_moyal_image
};
HbarZeroReport hbar_zero_compare(const RewriteSystem &r, int degree_cap);

// Normal monomials e^I (x) g with |I| <= d.
std::vector<SRAElement> normal_monomials(const GroupPtr &group, int d);
// Rank (at hbar = hbar_value) of the span of NF(w g) over all words w in the
// basis with length <= d and all g.
std::size_t pbw_span_rank(const RewriteSystem &r, int d, const Cyclotomic &hbar_value);

} // namespace weylcoh

#endif
