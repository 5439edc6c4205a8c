#include <weylcoh/smash.hpp>

#include <sstream>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

SmashElement::SmashElement(GroupPtr group) : m_group(std::move(group)) {}

SmashElement SmashElement::term(GroupPtr group, const WeylElement &a, std::size_t g)
{
    SmashElement x(std::move(group));
    x.add_term(g, a);
    return x;
}

SmashElement SmashElement::group_element(GroupPtr group, std::size_t g)
{
    const std::size_t n = group->pairs();
    return term(std::move(group), WeylElement::constant(n, Cyclotomic(1)), g);
}

std::size_t SmashElement::pairs() const
{
    return m_group ? m_group->pairs() : 0;
}

WeylElement SmashElement::component(std::size_t g) const
{
    auto it = m_terms.find(g);
    return it == m_terms.end() ? WeylElement(pairs()) : it->second;
}

void SmashElement::add_term(std::size_t g, const WeylElement &a)
{
    if (!m_group) {
        throw GroupMismatch("smash element without a group");
    }
    if (g >= m_group->order()) {
        throw GroupMismatch("group index " + std::to_string(g) + " outside the group");
    }
    if (a.is_zero()) {
        return;
    }
    if (a.pairs() != m_group->pairs()) {
        throw MismatchedArity("Weyl part and group act on different n");
    }
    auto [it, inserted] = m_terms.try_emplace(g, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void SmashElement::adopt(const SmashElement &o)
{
    if (!m_group) {
        m_group = o.m_group;
    } else if (o.m_group && o.m_group != m_group) {
        throw GroupMismatch("smash elements over different groups");
    }
}

SmashElement &SmashElement::operator+=(const SmashElement &o)
{
    adopt(o);
    for (const auto &[g, a] : o.m_terms) {
        add_term(g, a);
    }
    return *this;
}

SmashElement &SmashElement::operator-=(const SmashElement &o)
{
    return *this += -o;
}

SmashElement operator*(const Cyclotomic &s, SmashElement a)
{
    if (s.is_zero()) {
        a.m_terms.clear();
        return a;
    }
    for (auto &[g, w] : a.m_terms) {
        w *= s;
    }
    return a;
}

SmashElement SmashElement::operator-() const
{
    return Cyclotomic(-1) * *this;
}

bool operator==(const SmashElement &a, const SmashElement &b)
{
    if (a.is_zero() && b.is_zero()) {
        return true;
    }
    return a.m_group == b.m_group && a.m_terms == b.m_terms;
}

std::string SmashElement::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[g, a] : m_terms) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << a.to_string() << ") ⊗ g[" << g << "]";
    }
    return os.str();
}

SmashElement smash_mul(const SmashElement &x, const SmashElement &y)
{
    if (x.is_zero() || y.is_zero()) {
        SmashElement r(x.group() ? x.group() : y.group());
        return r;
    }
    if (x.group() != y.group()) {
        throw GroupMismatch("product of smash elements over different groups");
    }
    const auto &group = *x.group();
    SmashElement r(x.group());
    for (const auto &[g, a] : x.terms()) {
        const SympMatrix &gm = group.element(g);
        for (const auto &[h, b] : y.terms()) {
            r.add_term(group.mul(g, h), moyal_mul(a, apply_symplectic(gm, b)));
        }
    }
    return r;
}

SmashElement ad_action(std::size_t g, const SmashElement &x)
{
    if (x.is_zero()) {
        return x;
    }
    const auto &group = *x.group();
    const SympMatrix &gm = group.element(g);
    SmashElement r(x.group());
    for (const auto &[h, a] : x.terms()) {
        r.add_term(group.conjugate(g, h), apply_symplectic(gm, a));
    }
    return r;
}

LambdaCochain build_C_lambda(const GroupPtr &group, const LambdaWeights &lambda)
{
    LambdaCochain c(group->pairs(), 2);
    for (const auto &[cls, weight] : lambda) {
        if (cls >= group->classes().size() || group->classes()[cls].k != 1) {
            throw UnknownClassKey("class " + std::to_string(cls) + " is not in Gamma_2");
        }
        if (weight.is_zero()) {
            continue;
        }
        for (std::size_t g : group->classes()[cls].members) {
            const SmashElement unit = SmashElement::group_element(group, g);
            for (const auto &[set, value] : group->invariants(g).omega.values()) {
                c.add(set, (weight * value) * unit);
            }
        }
    }
    return c;
}

AltForm pi_action(const FiniteSympGroup &group, std::size_t s, const AltForm &c)
{
    return c.pullback(group.element(group.inverse(s)).matrix());
}

WeylCochain pi_action(const FiniteSympGroup &group, std::size_t s, const WeylCochain &c)
{
    const SympMatrix &sm = group.element(s);
    return c.pullback(group.element(group.inverse(s)).matrix()).map_values([&](const WeylElement &a) {
        return apply_symplectic(sm, a);
    });
}

LambdaCochain pi_action(const FiniteSympGroup &group, std::size_t s, const LambdaCochain &c)
{
    return c.pullback(group.element(group.inverse(s)).matrix()).map_values([&](const SmashElement &a) {
        return ad_action(s, a);
    });
}

namespace
{

template <class Cochain>
Cochain average(const FiniteSympGroup &group, const std::vector<std::size_t> &subgroup, const Cochain &c)
{
    if (subgroup.empty()) {
        throw std::invalid_argument("empty subgroup");
    }
    Cochain sum(c.pairs(), c.degree());
    for (std::size_t s : subgroup) {
        sum += pi_action(group, s, c);
    }
    return Cyclotomic(1) / Cyclotomic(static_cast<long>(subgroup.size())) * sum;
}

} // namespace

AltForm project_invariant(const FiniteSympGroup &group, const std::vector<std::size_t> &subgroup, const AltForm &c)
{
    return average(group, subgroup, c);
}

WeylCochain project_invariant(const FiniteSympGroup &group, const std::vector<std::size_t> &subgroup,
                              const WeylCochain &c)
{
    return average(group, subgroup, c);
}

LambdaCochain project_invariant(const FiniteSympGroup &group, const std::vector<std::size_t> &subgroup,
                                const LambdaCochain &c)
{
    return average(group, subgroup, c);
}

void RelativeCochain::validate(const std::vector<WeylElement> &args) const
{
    if (static_cast<int>(args.size()) != degree) {
        throw MismatchedArity("relative cochain called with the wrong number of arguments");
    }
    const std::size_t n = group->pairs();
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::vector<WeylElement> probe = args;
        probe[i] = WeylElement::constant(n, Cyclotomic(1));
        if (!D(probe).is_zero()) {
            throw NotNormalized("D does not vanish with a scalar in slot " + std::to_string(i + 1));
        }
    }
    const SmashElement value = D(args);
    for (std::size_t s : group->generators()) {
        std::vector<WeylElement> moved;
        for (const auto &a : args) {
            moved.push_back(apply_symplectic(group->element(s), a));
        }
        if (ad_action(s, value) != D(moved)) {
            throw NotInvariant("Ad s D(a) differs from D(s a) for generator " + std::to_string(s));
        }
    }
}

RelativeCochain relative_from_lambda(const LambdaCochain &c, const GroupPtr &group)
{
    RelativeCochain rc;
    rc.group = group;
    rc.degree = c.degree();
    rc.D = [c, group](const std::vector<WeylElement> &args) {
        std::vector<std::vector<Cyclotomic>> vectors;
        for (const auto &a : args) {
            vectors.push_back(a.linear_coordinates());
        }
        return evaluate(c, vectors, SmashElement(group));
    };
    return rc;
}

SmashElement extend_relative_cochain(const RelativeCochain &rc, const std::vector<SmashElement> &inputs, bool validate)
{
    if (static_cast<int>(inputs.size()) != rc.degree) {
        throw MismatchedArity("relative cochain called with the wrong number of arguments");
    }
    const auto &group = *rc.group;
    for (const auto &x : inputs) {
        if (x.group() && x.group() != rc.group) {
            throw GroupMismatch("argument over a different group");
        }
    }
    SmashElement result(rc.group);
    std::vector<WeylElement> args(inputs.size());
    // Depth-first over one term per input; prefix = g_1 ... g_(i-1).
    auto recurse = [&](auto &&self, std::size_t i, std::size_t prefix) -> void {
        if (i == inputs.size()) {
            if (validate) {
                rc.validate(args);
            }
            result += smash_mul(rc.D(args), SmashElement::group_element(rc.group, prefix));
            return;
        }
        for (const auto &[g, a] : inputs[i].terms()) {
            args[i] = apply_symplectic(group.element(prefix), a);
            self(self, i + 1, group.mul(prefix, g));
        }
    };
    recurse(recurse, 0, FiniteSympGroup::identity());
    return result;
}

CochainFamily family_from_lambda(const LambdaCochain &c)
{
    CochainFamily family;
    for (const auto &[set, value] : c.values()) {
        for (const auto &[g, a] : value.terms()) {
            family.try_emplace(g, c.pairs(), c.degree()).first->second.add(set, a);
        }
    }
    return family;
}

LambdaCochain lambda_from_family(const GroupPtr &group, const CochainFamily &family, std::size_t pairs, int degree)
{
    LambdaCochain c(pairs, degree);
    for (const auto &[g, cg] : family) {
        for (const auto &[set, a] : cg.values()) {
            c.add(set, SmashElement::term(group, a, g));
        }
    }
    return c;
}

namespace
{

WeylCochain member_or_zero(const CochainFamily &family, std::size_t g, std::size_t pairs, int degree)
{
    auto it = family.find(g);
    return it == family.end() ? WeylCochain(pairs, degree) : it->second;
}

} // namespace

std::map<std::size_t, WeylCochain> class_decompose(const FiniteSympGroup &group, const CochainFamily &family,
                                                   std::size_t pairs, int degree)
{
    for (const auto &[g, cg] : family) {
        if (g >= group.order()) {
            throw NotEquivariant("family indexed by an element outside the group");
        }
    }
    for (std::size_t s : group.generators()) {
        for (std::size_t g = 0; g < group.order(); ++g) {
            const WeylCochain lhs = member_or_zero(family, group.conjugate(s, g), pairs, degree);
            const WeylCochain rhs = pi_action(group, s, member_or_zero(family, g, pairs, degree));
            if (lhs != rhs) {
                throw NotEquivariant("C_(Ad s(g)) != pi_s(C_g) for s = " + std::to_string(s) + ", g = "
                                     + std::to_string(g));
            }
        }
    }
    std::map<std::size_t, WeylCochain> tilde;
    for (std::size_t c = 0; c < group.classes().size(); ++c) {
        tilde.emplace(c, member_or_zero(family, group.classes()[c].representative, pairs, degree));
    }
    return tilde;
}

CochainFamily class_reconstruct(const FiniteSympGroup &group, const std::map<std::size_t, WeylCochain> &tilde)
{
    CochainFamily family;
    for (const auto &[c, ct] : tilde) {
        if (c >= group.classes().size()) {
            throw UnknownClassKey("class " + std::to_string(c));
        }
        const ConjClass &cls = group.classes()[c];
        for (std::size_t s : cls.centralizer) {
            if (pi_action(group, s, ct) != ct) {
                throw NotInvariant("class component is not invariant under its centralizer");
            }
        }
        if (ct.is_zero()) {
            continue;
        }
        for (const auto &[member, x] : cls.witness) {
            family.insert_or_assign(member, pi_action(group, x, ct));
        }
    }
    return family;
}

} // namespace weylcoh
