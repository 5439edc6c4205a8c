#include <weylcoh/sra.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

// ---- HbarPoly ----

HbarPoly::HbarPoly(const Cyclotomic &c)
{
    add(0, c);
}

HbarPoly HbarPoly::hbar(const Cyclotomic &c)
{
    HbarPoly h;
    h.add(1, c);
    return h;
}

Cyclotomic HbarPoly::coefficient(int power) const
{
    auto it = m_coeffs.find(power);
    return it == m_coeffs.end() ? Cyclotomic(0) : it->second;
}

Cyclotomic HbarPoly::evaluate(const Cyclotomic &c) const
{
    Cyclotomic r;
    for (const auto &[p, x] : m_coeffs) {
        r += x * c.pow(p);
    }
    return r;
}

void HbarPoly::add(int power, const Cyclotomic &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_coeffs.try_emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_coeffs.erase(it);
        }
    }
}

HbarPoly &HbarPoly::operator+=(const HbarPoly &o)
{
    for (const auto &[p, x] : o.m_coeffs) {
        add(p, x);
    }
    return *this;
}

HbarPoly &HbarPoly::operator-=(const HbarPoly &o)
{
    for (const auto &[p, x] : o.m_coeffs) {
        add(p, -x);
    }
    return *this;
}

HbarPoly &HbarPoly::operator*=(const HbarPoly &o)
{
    HbarPoly r;
    for (const auto &[p, x] : m_coeffs) {
        for (const auto &[q, y] : o.m_coeffs) {
            r.add(p + q, x * y);
        }
    }
    return *this = std::move(r);
}

HbarPoly HbarPoly::operator-() const
{
    HbarPoly r = *this;
    for (auto &[p, x] : r.m_coeffs) {
        x = -x;
    }
    return r;
}

std::string HbarPoly::to_string() const
{
    if (m_coeffs.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[p, x] : m_coeffs) {
        if (!first) {
            os << " + ";
        }
        first = false;
        if (p == 0) {
            os << x.to_string();
        } else {
            os << "(" << x.to_string() << ")*ħ";
            if (p > 1) {
                os << "^" << p;
            }
        }
    }
    return os.str();
}

// ---- SRAElement ----

SRAElement::SRAElement(GroupPtr group) : m_group(std::move(group)) {}

SRAElement SRAElement::monomial(GroupPtr group, WeylElement::Exponent e, std::size_t g, const HbarPoly &c)
{
    SRAElement x(std::move(group));
    x.add_term(e, g, c);
    return x;
}

SRAElement SRAElement::scalar(GroupPtr group, const HbarPoly &c)
{
    const std::size_t n = group->pairs();
    return monomial(std::move(group), WeylElement::Exponent(2 * n, 0), FiniteSympGroup::identity(), c);
}

SRAElement SRAElement::vector(GroupPtr group, const std::vector<Cyclotomic> &coords)
{
    const std::size_t n = group->pairs();
    if (coords.size() != 2 * n) {
        throw MismatchedArity("vector needs 2n coordinates");
    }
    SRAElement x(std::move(group));
    for (std::size_t a = 0; a < coords.size(); ++a) {
        WeylElement::Exponent e(2 * n, 0);
        e[a] = 1;
        x.add_term(e, FiniteSympGroup::identity(), coords[a]);
    }
    return x;
}

SRAElement SRAElement::basis_vector(GroupPtr group, std::size_t axis)
{
    const std::size_t n = group->pairs();
    if (axis >= 2 * n) {
        throw AxisOutOfRange("basis vector " + std::to_string(axis));
    }
    WeylElement::Exponent e(2 * n, 0);
    e[axis] = 1;
    return monomial(std::move(group), e);
}

SRAElement SRAElement::group_element(GroupPtr group, std::size_t g)
{
    const std::size_t n = group->pairs();
    return monomial(std::move(group), WeylElement::Exponent(2 * n, 0), g);
}

int SRAElement::degree() const
{
    int d = -1;
    for (const auto &[key, c] : m_terms) {
        d = std::max(d, total_degree(key.first));
    }
    return d;
}

void SRAElement::add_term(const WeylElement::Exponent &e, std::size_t g, const HbarPoly &c)
{
    if (!m_group) {
        throw GroupMismatch("SRA element without a group");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(Key{e, g}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void SRAElement::adopt(const SRAElement &o)
{
    if (!m_group) {
        m_group = o.m_group;
    } else if (o.m_group && o.m_group != m_group) {
        throw GroupMismatch("SRA elements over different groups");
    }
}

SRAElement &SRAElement::operator+=(const SRAElement &o)
{
    adopt(o);
    for (const auto &[key, c] : o.m_terms) {
        add_term(key.first, key.second, c);
    }
    return *this;
}

SRAElement &SRAElement::operator-=(const SRAElement &o)
{
    adopt(o);
    for (const auto &[key, c] : o.m_terms) {
        add_term(key.first, key.second, -c);
    }
    return *this;
}

SRAElement operator*(const HbarPoly &s, SRAElement a)
{
    SRAElement r(a.m_group);
    for (const auto &[key, c] : a.m_terms) {
        r.add_term(key.first, key.second, s * c);
    }
    return r;
}

SRAElement SRAElement::operator-() const
{
    return HbarPoly(Cyclotomic(-1)) * *this;
}

bool operator==(const SRAElement &a, const SRAElement &b)
{
    if (a.is_zero() && b.is_zero()) {
        return true;
    }
    return a.m_group == b.m_group && a.m_terms == b.m_terms;
}

std::string SRAElement::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[key, c] : m_terms) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.to_string() << ")·";
        bool any = false;
        for (std::size_t a = 0; a < key.first.size(); ++a) {
            if (key.first[a] == 0) {
                continue;
            }
            if (any) {
                os << ' ';
            }
            any = true;
            os << 'e' << a + 1;
            if (key.first[a] > 1) {
                os << '^' << key.first[a];
            }
        }
        if (!any) {
            os << '1';
        }
        os << " ⊗ g[" << key.second << "]";
    }
    return os.str();
}

VectorLetter basis_letter(std::size_t pairs, std::size_t axis)
{
    VectorLetter v{std::vector<Cyclotomic>(2 * pairs)};
    v.coords.at(axis) = Cyclotomic(1);
    return v;
}

// ---- RewriteSystem ----

namespace
{

std::vector<Cyclotomic> unit(std::size_t dim, std::size_t axis)
{
    std::vector<Cyclotomic> v(dim);
    v[axis] = Cyclotomic(1);
    return v;
}

} // namespace

RewriteSystem::RewriteSystem(GroupPtr group, LambdaWeights lambda) : m_group(std::move(group)), m_lambda(std::move(lambda))
{
    const auto &classes = m_group->classes();
    for (const auto &[cls, w] : m_lambda) {
        if (cls >= classes.size() || classes[cls].k != 1) {
            throw UnknownClassKey("class " + std::to_string(cls) + " is not in Gamma_2");
        }
    }
    const std::size_t d = dim();
    m_kappa.assign(d, std::vector<SRAElement>(d, SRAElement(m_group)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            SRAElement k = SRAElement::scalar(m_group, symplectic_pairing(unit(d, j), unit(d, i)));
            const WedgeMask set = (WedgeMask(1) << i) | (WedgeMask(1) << j);
            for (const auto &[cls, w] : m_lambda) {
                for (std::size_t g : classes[cls].members) {
                    const Cyclotomic *v = m_group->invariants(g).omega.find(set);
                    if (v != nullptr) {
                        // omega_g(e_j, e_i) = -omega_g(e_i, e_j)
                        k += SRAElement::monomial(m_group, WeylElement::Exponent(d, 0), g, HbarPoly::hbar(-(w * *v)));
                    }
                }
            }
            m_kappa[i][j] = std::move(k);
        }
    }
}

RewriteSystem::RewriteSystem(const RewriteSystem &other, bool copy_cache)
    : m_group(other.m_group), m_lambda(other.m_lambda), m_kappa(other.m_kappa)
{
    if (copy_cache) {
        std::lock_guard<std::mutex> lock(other.m_cache_mutex);
        m_cache = other.m_cache;
    }
}

const SRAElement &RewriteSystem::kappa(std::size_t i, std::size_t j) const
{
    if (!(i < j && j < dim())) {
        throw std::out_of_range("kappa(i, j) needs i < j < 2n");
    }
    return m_kappa[i][j];
}

bool RewriteSystem::degree_lowering() const
{
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = i + 1; j < dim(); ++j) {
            if (m_kappa[i][j].degree() > 0) {
                return false;
            }
        }
    }
    return true;
}

RewriteSystem RewriteSystem::specialized(const Cyclotomic &c) const
{
    RewriteSystem r(*this, false);
    for (auto &row : r.m_kappa) {
        for (auto &k : row) {
            k = specialize_hbar(k, c);
        }
    }
    return r;
}

RewriteSystem RewriteSystem::corrupted(std::size_t i, std::size_t j, const SRAElement &perturbation) const
{
    RewriteSystem r(*this, false);
    if (!(i < j && j < dim())) {
        throw std::out_of_range("kappa(i, j) needs i < j < 2n");
    }
    r.m_kappa[i][j] += perturbation;
    return r;
}

const SRAElement &RewriteSystem::monomial_times_basis(const WeylElement::Exponent &e, std::size_t b) const
{
    const auto key = std::make_pair(e, b);
    {
        std::lock_guard<std::mutex> lock(m_cache_mutex);
        auto it = m_cache.find(key);
        if (it != m_cache.end()) {
            return *it->second;
        }
    }
    std::size_t top = 0;
    bool any = false;
    for (std::size_t a = 0; a < e.size(); ++a) {
        if (e[a] > 0) {
            top = a;
            any = true;
        }
    }
    SRAElement result(m_group);
    if (!any || top <= b) {
        WeylElement::Exponent m = e;
        ++m[b];
        result.add_term(m, FiniteSympGroup::identity(), Cyclotomic(1));
    } else {
        // e^I' e_c e_b = (e^I' e_b) e_c + e^I' kappa(b, c), c = top > b.
        WeylElement::Exponent rest = e;
        --rest[top];
        const SRAElement head = monomial_times_basis(rest, b);
        result = mul_vector(head, unit(dim(), top));
        result += mul(SRAElement::monomial(m_group, rest), m_kappa[b][top]);
    }
    std::lock_guard<std::mutex> lock(m_cache_mutex);
    auto [it, inserted] = m_cache.try_emplace(key, std::make_shared<const SRAElement>(std::move(result)));
    return *it->second;
}

SRAElement RewriteSystem::mul_vector(const SRAElement &x, const std::vector<Cyclotomic> &v) const
{
    SRAElement r(m_group);
    for (const auto &[key, c] : x.terms()) {
        const auto gv = m_group->element(key.second).matrix().apply(v);
        for (std::size_t b = 0; b < gv.size(); ++b) {
            if (gv[b].is_zero()) {
                continue;
            }
            const SRAElement &y = monomial_times_basis(key.first, b);
            const HbarPoly scale = c * HbarPoly(gv[b]);
            for (const auto &[yk, yc] : y.terms()) {
                r.add_term(yk.first, m_group->mul(yk.second, key.second), scale * yc);
            }
        }
    }
    return r;
}

SRAElement RewriteSystem::mul_group(const SRAElement &x, std::size_t g) const
{
    SRAElement r(m_group);
    for (const auto &[key, c] : x.terms()) {
        r.add_term(key.first, m_group->mul(key.second, g), c);
    }
    return r;
}

SRAElement RewriteSystem::mul(const SRAElement &x, const SRAElement &y) const
{
    SRAElement r(m_group);
    if (x.is_zero() || y.is_zero()) {
        return r;
    }
    if ((x.group() && x.group() != m_group) || (y.group() && y.group() != m_group)) {
        throw GroupMismatch("SRA product over a different group");
    }
    const std::size_t d = dim();
    for (const auto &[xk, xc] : x.terms()) {
        for (const auto &[yk, yc] : y.terms()) {
            SRAElement z = SRAElement::monomial(m_group, xk.first, xk.second, xc * yc);
            for (std::size_t a = 0; a < d; ++a) {
                for (int t = 0; t < yk.first[a]; ++t) {
                    z = mul_vector(z, unit(d, a));
                }
            }
            r += mul_group(z, yk.second);
        }
    }
    return r;
}

SRAElement RewriteSystem::normal_form(const TVWord &w) const
{
    SRAElement z = SRAElement::scalar(m_group, w.coeff);
    for (const auto &letter : w.letters) {
        if (const auto *v = std::get_if<VectorLetter>(&letter)) {
            if (v->coords.size() != dim()) {
                throw MismatchedArity("vector letter has the wrong length");
            }
            z = mul_vector(z, v->coords);
        } else {
            const std::size_t g = std::get<GroupLetter>(letter).element;
            if (g >= m_group->order()) {
                throw GroupMismatch("group letter outside the group");
            }
            z = mul_group(z, g);
        }
    }
    return z;
}

SRAElement RewriteSystem::normal_form(const std::vector<TVWord> &sum) const
{
    SRAElement r(m_group);
    for (const auto &w : sum) {
        r += normal_form(w);
    }
    return r;
}

SRAElement sra_commutator(const RewriteSystem &r, const SRAElement &x, const SRAElement &y)
{
    return r.mul(x, y) - r.mul(y, x);
}

SRAElement sra_ad_group(const RewriteSystem &r, std::size_t g, const SRAElement &x)
{
    const auto &group = r.group();
    return r.mul(r.mul(SRAElement::group_element(group, g), x),
                 SRAElement::group_element(group, group->inverse(g)));
}

// ---- confluence ----

bool ConfluenceReport::all_resolved() const
{
    return failures() == 0;
}

std::size_t ConfluenceReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [](const CriticalPair &p) { return !p.resolved; }));
}

ConfluenceReport confluence_check(const RewriteSystem &r, std::size_t group_triple_cap)
{
    ConfluenceReport report;
    const auto &group = *r.group();
    const std::size_t d = r.dim();
    const std::size_t n = r.pairs();
    auto vec = [&](std::size_t a) { return Letter(basis_letter(n, a)); };
    auto grp = [](std::size_t g) { return Letter(GroupLetter{g}); };
    auto record = [&](std::string label, SRAElement left, SRAElement right) {
        const bool ok = left == right;
        report.pairs.push_back({std::move(label), ok, std::move(left), std::move(right)});
    };

    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                // e_k e_j e_i: rewrite (e_k e_j) or (e_j e_i) first.
                SRAElement left = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {vec(j), vec(k), vec(i)}});
                left += r.mul_vector(r.kappa(j, k), unit(d, i));
                SRAElement right = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {vec(k), vec(i), vec(j)}});
                right += r.mul(SRAElement::basis_vector(r.group(), k), r.kappa(i, j));
                record("e" + std::to_string(k + 1) + " e" + std::to_string(j + 1) + " e" + std::to_string(i + 1),
                       std::move(left), std::move(right));
            }
        }
    }
    for (std::size_t g = 0; g < group.order(); ++g) {
        const SympMatrix &gm = group.element(g);
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                // g e_j e_i: move g first, or rewrite e_j e_i first.
                VectorLetter gej{gm.matrix().column(j)};
                SRAElement left = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {Letter(gej), grp(g), vec(i)}});
                SRAElement right = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {grp(g), vec(i), vec(j)}});
                right += r.mul(SRAElement::group_element(r.group(), g), r.kappa(i, j));
                record("g[" + std::to_string(g) + "] e" + std::to_string(j + 1) + " e" + std::to_string(i + 1),
                       std::move(left), std::move(right));
            }
        }
        for (std::size_t h = 0; h < group.order(); ++h) {
            for (std::size_t i = 0; i < d; ++i) {
                VectorLetter hei{group.element(h).matrix().column(i)};
                SRAElement left = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {grp(group.mul(g, h)), vec(i)}});
                SRAElement right = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {grp(g), Letter(hei), grp(h)}});
                record("g[" + std::to_string(g) + "] g[" + std::to_string(h) + "] e" + std::to_string(i + 1),
                       std::move(left), std::move(right));
            }
            if (group.order() <= group_triple_cap) {
                for (std::size_t k = 0; k < group.order(); ++k) {
                    SRAElement left = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {grp(group.mul(g, h)), grp(k)}});
                    SRAElement right = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {grp(g), grp(group.mul(h, k))}});
                    record("g[" + std::to_string(g) + "] g[" + std::to_string(h) + "] g[" + std::to_string(k) + "]",
                           std::move(left), std::move(right));
                }
            }
        }
    }
    return report;
}

// ---- symmetrization, section, Berezin ----

SRAElement symmetrized_product(const RewriteSystem &r, const std::vector<SRAElement> &args)
{
    if (args.empty()) {
        return SRAElement::scalar(r.group(), Cyclotomic(1));
    }
    std::vector<std::size_t> perm(args.size());
    std::iota(perm.begin(), perm.end(), 0);
    SRAElement sum(r.group());
    long count = 0;
    do {
        SRAElement p = args[perm[0]];
        for (std::size_t t = 1; t < perm.size(); ++t) {
            p = r.mul(p, args[perm[t]]);
        }
        sum += p;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return HbarPoly(Cyclotomic(1, count)) * sum;
}

namespace
{

// <letters of e^I>: mean of the normal forms of all distinct orderings.
SRAElement symmetrized_monomial(const RewriteSystem &r, const WeylElement::Exponent &e)
{
    std::vector<std::size_t> letters;
    for (std::size_t a = 0; a < e.size(); ++a) {
        for (int t = 0; t < e[a]; ++t) {
            letters.push_back(a);
        }
    }
    SRAElement sum(r.group());
    long count = 0;
    const std::size_t d = r.dim();
    do {
        SRAElement p = SRAElement::scalar(r.group(), Cyclotomic(1));
        for (std::size_t a : letters) {
            p = r.mul_vector(p, unit(d, a));
        }
        sum += p;
        ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    return HbarPoly(Cyclotomic(1, count)) * sum;
}

} // namespace

SRAElement section(const RewriteSystem &r, const SRAElement &symbol)
{
    SRAElement out(r.group());
    for (const auto &[key, c] : symbol.terms()) {
        out += c * r.mul_group(symmetrized_monomial(r, key.first), key.second);
    }
    return out;
}

SRAElement section_inverse(const RewriteSystem &r, const SRAElement &x)
{
    SRAElement symbol(r.group());
    SRAElement rest = x;
    while (!rest.is_zero()) {
        const int d = rest.degree();
        SRAElement top(r.group());
        for (const auto &[key, c] : rest.terms()) {
            if (total_degree(key.first) == d) {
                top.add_term(key.first, key.second, c);
            }
        }
        symbol += top;
        rest -= section(r, top);
        if (!rest.is_zero() && rest.degree() >= d) {
            throw std::logic_error("section is not triangular");
        }
    }
    return symbol;
}

mpq_class bernoulli(int j)
{
    if (j < 0 || j > 32) {
        throw std::invalid_argument("bernoulli index must be in [0, 32]");
    }
    std::vector<mpq_class> b{mpq_class(1)};
    for (int m = 1; m <= j; ++m) {
        // sum_(i<=m) C(m+1, i) B_i = 0
        mpq_class s(0);
        mpz_class binom(1); // C(m+1, 0)
        for (int i = 0; i < m; ++i) {
            s += mpq_class(binom) * b[i];
            binom = binom * (m + 1 - i) / (i + 1);
        }
        mpq_class bm = -s / mpq_class(m + 1);
        bm.canonicalize();
        b.push_back(bm);
    }
    return b[j];
}

SRAElement berezin_difference(const RewriteSystem &r, const SRAElement &a, const std::vector<SRAElement> &args, int cap)
{
    int total = std::max(a.degree(), 0);
    for (const auto &x : args) {
        total += std::max(x.degree(), 0);
    }
    if (total > cap) {
        throw CapExceeded("total degree " + std::to_string(total) + " exceeds " + std::to_string(cap));
    }
    const std::size_t k = args.size();
    SRAElement diff = r.mul(a, symmetrized_product(r, args));
    std::vector<SRAElement> all{a};
    all.insert(all.end(), args.begin(), args.end());
    diff -= symmetrized_product(r, all);

    mpz_class fact(1);
    for (std::size_t j = 1; j <= k; ++j) {
        fact *= static_cast<unsigned long>(j);
        const mpq_class bj = bernoulli(static_cast<int>(j));
        if (bj == 0) {
            continue;
        }
        const HbarPoly weight(Cyclotomic(mpq_class(bj / mpq_class(fact))));
        // subsets i_1 < ... < i_j of the argument positions
        for (WedgeMask set : subsets_of_size(k, static_cast<int>(j))) {
            std::vector<std::size_t> chosen = mask_axes(set);
            std::vector<SRAElement> rest;
            for (std::size_t t = 0; t < k; ++t) {
                if (!(set & (WedgeMask(1) << t))) {
                    rest.push_back(args[t]);
                }
            }
            std::vector<std::size_t> tau(j);
            std::iota(tau.begin(), tau.end(), 0);
            do {
                // ad a_(i_tau(j)) ... ad a_(i_tau(1)) (a)
                SRAElement y = a;
                for (std::size_t t = 0; t < j; ++t) {
                    y = sra_commutator(r, args[chosen[tau[t]]], y);
                }
                std::vector<SRAElement> slot{y};
                slot.insert(slot.end(), rest.begin(), rest.end());
                diff -= weight * symmetrized_product(r, slot);
            } while (std::next_permutation(tau.begin(), tau.end()));
        }
    }
    return diff;
}

SRAElement specialize_hbar(const SRAElement &x, const Cyclotomic &c)
{
    SRAElement r(x.group());
    for (const auto &[key, p] : x.terms()) {
        r.add_term(key.first, key.second, HbarPoly(p.evaluate(c)));
    }
    return r;
}

// ---- hbar = 0 ----

namespace
{

SmashElement symbol_to_smash(const SRAElement &symbol)
{
    SmashElement out(symbol.group());
    const std::size_t n = symbol.pairs();
    for (const auto &[key, c] : symbol.terms()) {
        out.add_term(key.second, WeylElement::monomial(n, key.first, c.evaluate(Cyclotomic(0))));
    }
    return out;
}

} // namespace

SmashElement to_smash(const RewriteSystem &r0, const SRAElement &x)
{
    return symbol_to_smash(section_inverse(r0, specialize_hbar(x, Cyclotomic(0))));
}

SmashElement ordered_moyal_image(const SRAElement &x)
{
    SmashElement out(x.group());
    const std::size_t n = x.pairs();
    for (const auto &[key, c] : x.terms()) {
        std::vector<WeylElement> letters;
        for (std::size_t a = 0; a < key.first.size(); ++a) {
            for (int t = 0; t < key.first[a]; ++t) {
                letters.push_back(WeylElement::variable(n, a));
            }
        }
        out.add_term(key.second, c.evaluate(Cyclotomic(0)) * moyal_product(letters, n));
    }
    return out;
}

std::vector<SRAElement> normal_monomials(const GroupPtr &group, int d)
{
    const std::size_t dim = 2 * group->pairs();
    std::vector<WeylElement::Exponent> exps{WeylElement::Exponent(dim, 0)};
    // grow by one degree at a time, keeping exponents unique
    std::vector<WeylElement::Exponent> layer = exps;
    for (int deg = 1; deg <= d; ++deg) {
        std::vector<WeylElement::Exponent> next;
        for (const auto &e : layer) {
            std::size_t last = 0;
            for (std::size_t a = 0; a < dim; ++a) {
                if (e[a] > 0) {
                    last = a;
                }
            }
            for (std::size_t a = last; a < dim; ++a) {
                WeylElement::Exponent m = e;
                ++m[a];
                next.push_back(std::move(m));
            }
        }
        exps.insert(exps.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::vector<SRAElement> out;
    for (const auto &e : exps) {
        for (std::size_t g = 0; g < group->order(); ++g) {
            out.push_back(SRAElement::monomial(group, e, g));
        }
    }
    return out;
}

HbarZeroReport hbar_zero_compare(const RewriteSystem &r, int degree_cap)
{
    const RewriteSystem r0 = r.specialized(Cyclotomic(0));
    HbarZeroReport report;
    const auto monos = normal_monomials(r.group(), degree_cap);
    std::vector<SmashElement> images;
    for (const auto &x : monos) {
        images.push_back(to_smash(r0, x));
        if (images.back() != ordered_moyal_image(x)) {
            ++report.section_mismatches;
        }
    }
    for (std::size_t i = 0; i < monos.size(); ++i) {
        for (std::size_t j = 0; j < monos.size(); ++j) {
            if (monos[i].degree() + monos[j].degree() > degree_cap) {
                continue;
            }
            ++report.pairs_checked;
            const SRAElement prod = r0.mul(monos[i], monos[j]);
            if (to_smash(r0, prod) != smash_mul(images[i], images[j])) {
                ++report.mismatches;
            }
            if (ordered_moyal_image(prod) != smash_mul(ordered_moyal_image(monos[i]), ordered_moyal_image(monos[j]))) {
                ++report.section_mismatches;
            }
        }
    }
    return report;
}

std::size_t pbw_span_rank(const RewriteSystem &r, int d, const Cyclotomic &hbar_value)
{
    const std::size_t dim = r.dim();
    const auto &group = *r.group();
    std::map<SRAElement::Key, std::size_t> column;
    for (const auto &m : normal_monomials(r.group(), d)) {
        column.emplace(m.terms().begin()->first, column.size());
    }
    std::vector<std::vector<std::size_t>> words{{}};
    std::vector<std::vector<std::size_t>> layer{{}};
    for (int len = 1; len <= d; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto &w : layer) {
            for (std::size_t a = 0; a < dim; ++a) {
                auto x = w;
                x.push_back(a);
                next.push_back(std::move(x));
            }
        }
        words.insert(words.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    Matrix m(words.size() * group.order(), column.size());
    std::size_t row = 0;
    for (const auto &w : words) {
        TVWord word;
        for (std::size_t a : w) {
            word.letters.push_back(basis_letter(r.pairs(), a));
        }
        const SRAElement nf = r.normal_form(word);
        for (std::size_t g = 0; g < group.order(); ++g, ++row) {
            const SRAElement shifted = r.mul_group(nf, g);
            for (const auto &[key, c] : shifted.terms()) {
                auto it = column.find(key);
                if (it == column.end()) {
                    throw std::logic_error("normal form left the degree filtration");
                }
                m(row, it->second) = c.evaluate(hbar_value);
            }
        }
    }
    return m.rank();
}

} // namespace weylcoh
