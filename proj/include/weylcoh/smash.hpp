#ifndef WEYLCOH_SMASH_HPP
#define WEYLCOH_SMASH_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <weylcoh/alt_cochain.hpp>
#include <weylcoh/sympgroup.hpp>
#include <weylcoh/weyl.hpp>

namespace weylcoh
{

// Element sum_g a_g (x) g of G*W; group elements are indices into the group.
class SmashElement
{
public:
    using TermMap = std::map<std::size_t, WeylElement>;

    SmashElement() = default;
    explicit SmashElement(GroupPtr group);

    // a (x) g
    static SmashElement term(GroupPtr group, const WeylElement &a, std::size_t g = FiniteSympGroup::identity());
    // 1 (x) g
    static SmashElement group_element(GroupPtr group, std::size_t g);

    const GroupPtr &group() const { return m_group; }
    std::size_t pairs() const;
    const TermMap &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    WeylElement component(std::size_t g) const;

    void add_term(std::size_t g, const WeylElement &a);

    SmashElement &operator+=(const SmashElement &o);
    SmashElement &operator-=(const SmashElement &o);
    friend SmashElement operator+(SmashElement a, const SmashElement &b) { return a += b; }
    friend SmashElement operator-(SmashElement a, const SmashElement &b) { return a -= b; }
    friend SmashElement operator*(const Cyclotomic &s, SmashElement a);
    SmashElement operator-() const;
    friend bool operator==(const SmashElement &a, const SmashElement &b);
    friend bool operator!=(const SmashElement &a, const SmashElement &b) { return !(a == b); }

    // "(poly) ⊗ g[idx] + ..."
    std::string to_string() const;

private:
    void adopt(const SmashElement &o);

    GroupPtr m_group;
    TermMap m_terms;
};

// (a (x) g)(b (x) h) = (a * g(b)) (x) gh. Throws GroupMismatch.
SmashElement smash_mul(const SmashElement &x, const SmashElement &y);
// Ad g(x) = g x g^-1.
SmashElement ad_action(std::size_t g, const SmashElement &x);

// Alternating cochains on V with values in W (canonical coordinates) and in
// G*W respectively.
using WeylCochain = AltCochain<WeylElement>;
using LambdaCochain = AltCochain<SmashElement>;

// Class index (into FiniteSympGroup::classes) -> weight; keys must lie in
// Gamma_2.
using LambdaWeights = std::map<std::size_t, Cyclotomic>;

// C_lambda(X ^ Y) = sum_gamma lambda(gamma) sum_(g in gamma) omega_g(X, Y) (x) g.
// Throws UnknownClassKey.
LambdaCochain build_C_lambda(const GroupPtr &group, const LambdaWeights &lambda);

// pi_s on each cochain kind: values transformed by s (Ad s on G*W), arguments
// by s^-1.
AltForm pi_action(const FiniteSympGroup &group, std::size_t s, const AltForm &c);
WeylCochain pi_action(const FiniteSympGroup &group, std::size_t s, const WeylCochain &c);
LambdaCochain pi_action(const FiniteSympGroup &group, std::size_t s, const LambdaCochain &c);

// (1/|S|) sum_(s in S) pi_s(c) for a subgroup S given by element indices.
AltForm project_invariant(const FiniteSympGroup &group, const std::vector<std::size_t> &subgroup, const AltForm &c);
WeylCochain project_invariant(const FiniteSympGroup &group, const std::vector<std::size_t> &subgroup,
                              const WeylCochain &c);
LambdaCochain project_invariant(const FiniteSympGroup &group, const std::vector<std::size_t> &subgroup,
                                const LambdaCochain &c);

// Evaluation of an alternating cochain on k vectors of V.
template <class Value>
Value evaluate(const AltCochain<Value> &c, const std::vector<std::vector<Cyclotomic>> &vectors, Value zero)
{
    if (static_cast<int>(vectors.size()) != c.degree()) {
        throw MismatchedArity("wrong number of arguments for the cochain");
    }
    Matrix m;
    if (!vectors.empty()) {
        m = Matrix::from_columns(vectors);
    }
    const WedgeMask cols = (WedgeMask(1) << vectors.size()) - 1;
    for (const auto &[set, v] : c.values()) {
        const Cyclotomic d = vectors.empty() ? Cyclotomic(1) : minor(m, set, cols);
        if (!d.is_zero()) {
            zero += d * v;
        }
    }
    return zero;
}

// Restriction D of a C[G]-relative k-cochain to W^(x)k.
struct RelativeCochain {
    GroupPtr group;
    int degree = 0;
    std::function<SmashElement(const std::vector<WeylElement> &)> D;

    // Probes the normalization (D vanishes when one argument is a scalar)
    // and G-invariance (Ad s D(a) = D(s a) for generators s) on the given
    // arguments. Throws NotNormalized, NotInvariant.
    void validate(const std::vector<WeylElement> &args) const;
};

// D on W^(x)k obtained from an alternating Lambda-cochain by evaluating on the
// degree-one parts of the arguments.
RelativeCochain relative_from_lambda(const LambdaCochain &c, const GroupPtr &group);

// C(a_1 (x) g_1, ..., a_k (x) g_k) = D(a_1, g_1(a_2), ..., g_1...g_(k-1)(a_k)) * g_1...g_k,
// extended multilinearly. Validates D on each expanded argument tuple first.
SmashElement extend_relative_cochain(const RelativeCochain &rc, const std::vector<SmashElement> &inputs,
                                     bool validate = true);

// C = sum_g C_g (x) g as a family g -> C_g with values in W.
using CochainFamily = std::map<std::size_t, WeylCochain>;

CochainFamily family_from_lambda(const LambdaCochain &c);
LambdaCochain lambda_from_family(const GroupPtr &group, const CochainFamily &family, std::size_t pairs, int degree);

// T: (C_g)_g -> (C_(sigma_gamma))_gamma. Throws NotEquivariant when
// C_(s g s^-1) != pi_s(C_g) for a generator s.
std::map<std::size_t, WeylCochain> class_decompose(const FiniteSympGroup &group, const CochainFamily &family,
                                                   std::size_t pairs, int degree);
// T^-1: C_(x sigma_gamma x^-1) = pi_x(C~_gamma), x running over the class
// witnesses. Throws NotInvariant when C~_gamma is not S_gamma-invariant.
CochainFamily class_reconstruct(const FiniteSympGroup &group, const std::map<std::size_t, WeylCochain> &tilde);

} // namespace weylcoh

#endif
