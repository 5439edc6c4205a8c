#include <weylcoh/weyl.hpp>

#include <algorithm>
#include <sstream>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

namespace
{

void require_same_arity(const WeylElement &a, const WeylElement &b, const char *what)
{
    if (a.pairs() != b.pairs()) {
        throw MismatchedArity(std::string(what) + ": operands have " + std::to_string(a.pairs()) + " and "
                              + std::to_string(b.pairs()) + " symplectic pairs");
    }
}

mpz_class falling(int n, int k)
{
    mpz_class r(1);
    for (int i = 0; i < k; ++i) {
        r *= n - i;
    }
    return r;
}

mpz_class factorial(int n)
{
    return falling(n, n);
}

// One Moyal contraction pattern for a single (p_i, q_i) pair.
struct PairTerm {
    int r; // d/dp on the left, d/dq on the right
    int s; // d/dq on the left, d/dp on the right
    mpq_class coeff;
};

} // namespace

int total_degree(const WeylElement::Exponent &e)
{
    int d = 0;
    for (int x : e) {
        d += x;
    }
    return d;
}

std::string monomial_to_string(const WeylElement::Exponent &e)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t axis = 0; axis < e.size(); ++axis) {
        if (e[axis] == 0) {
            continue;
        }
        if (!first) {
            os << ' ';
        }
        first = false;
        os << (axis % 2 == 0 ? 'p' : 'q') << axis / 2 + 1;
        if (e[axis] > 1) {
            os << '^' << e[axis];
        }
    }
    return first ? "1" : os.str();
}

WeylElement WeylElement::constant(std::size_t pairs, const Cyclotomic &c)
{
    WeylElement w(pairs);
    w.add_term(Exponent(2 * pairs, 0), c);
    return w;
}

WeylElement WeylElement::variable(std::size_t pairs, std::size_t axis)
{
    if (axis >= 2 * pairs) {
        throw AxisOutOfRange("axis " + std::to_string(axis) + " with " + std::to_string(pairs) + " pairs");
    }
    Exponent e(2 * pairs, 0);
    e[axis] = 1;
    return monomial(pairs, std::move(e));
}

WeylElement WeylElement::monomial(std::size_t pairs, Exponent e, const Cyclotomic &c)
{
    if (e.size() != 2 * pairs) {
        throw MismatchedArity("monomial exponent length does not match 2n");
    }
    WeylElement w(pairs);
    w.add_term(e, c);
    return w;
}

WeylElement WeylElement::linear(std::size_t pairs, const std::vector<Cyclotomic> &coords)
{
    if (coords.size() != 2 * pairs) {
        throw MismatchedArity("linear form needs 2n coordinates");
    }
    WeylElement w(pairs);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Exponent e(2 * pairs, 0);
        e[i] = 1;
        w.add_term(e, coords[i]);
    }
    return w;
}

bool WeylElement::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1 && total_degree(m_terms.begin()->first) == 0);
}

int WeylElement::degree() const
{
    int d = -1;
    for (const auto &[e, c] : m_terms) {
        d = std::max(d, total_degree(e));
    }
    return d;
}

Cyclotomic WeylElement::constant_term() const
{
    return coefficient(Exponent(num_vars(), 0));
}

Cyclotomic WeylElement::coefficient(const Exponent &e) const
{
    auto it = m_terms.find(e);
    return it == m_terms.end() ? Cyclotomic(0) : it->second;
}

std::vector<Cyclotomic> WeylElement::linear_coordinates() const
{
    std::vector<Cyclotomic> v(num_vars());
    for (const auto &[e, c] : m_terms) {
        if (total_degree(e) == 1) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 1) {
                    v[i] = c;
                }
            }
        }
    }
    return v;
}

WeylElement WeylElement::homogeneous_part(int d) const
{
    WeylElement w(m_pairs);
    for (const auto &[e, c] : m_terms) {
        if (total_degree(e) == d) {
            w.m_terms.emplace(e, c);
        }
    }
    return w;
}

void WeylElement::add_term(const Exponent &e, const Cyclotomic &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

WeylElement &WeylElement::operator+=(const WeylElement &other)
{
    if (is_zero() && m_pairs == 0) {
        m_pairs = other.m_pairs;
    }
    if (!other.is_zero()) {
        require_same_arity(*this, other, "addition");
    }
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, c);
    }
    return *this;
}

WeylElement &WeylElement::operator-=(const WeylElement &other)
{
    return *this += -other;
}

WeylElement &WeylElement::operator*=(const Cyclotomic &s)
{
    if (s.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, c] : m_terms) {
        c *= s;
    }
    return *this;
}

WeylElement WeylElement::operator-() const
{
    WeylElement r = *this;
    for (auto &[e, c] : r.m_terms) {
        c = -c;
    }
    return r;
}

bool operator==(const WeylElement &a, const WeylElement &b)
{
    if (a.is_zero() && b.is_zero()) {
        return true;
    }
    return a.m_pairs == b.m_pairs && a.m_terms == b.m_terms;
}

std::string WeylElement::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::vector<std::pair<Exponent, Cyclotomic>> terms(m_terms.begin(), m_terms.end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto &x, const auto &y) { return total_degree(x.first) > total_degree(y.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms) {
        if (!first) {
            os << " + ";
        }
        first = false;
        const std::string mono = monomial_to_string(e);
        if (mono == "1") {
            os << "(" << c.to_string() << ")";
        } else if (c.is_one()) {
            os << mono;
        } else {
            os << "(" << c.to_string() << ") " << mono;
        }
    }
    return os.str();
}

WeylElement abelian_mul(const WeylElement &a, const WeylElement &b)
{
    require_same_arity(a, b, "abelian_mul");
    WeylElement r(a.pairs());
    WeylElement::Exponent e(a.num_vars());
    for (const auto &[ea, ca] : a.terms()) {
        for (const auto &[eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

WeylElement moyal_mul(const WeylElement &a, const WeylElement &b)
{
    require_same_arity(a, b, "moyal_mul");
    const std::size_t n = a.pairs();
    WeylElement r(n);
    WeylElement::Exponent e(2 * n);
    std::vector<std::vector<PairTerm>> per_pair(n);
    std::vector<std::size_t> choice(n);
    for (const auto &[ea, ca] : a.terms()) {
        for (const auto &[eb, cb] : b.terms()) {
            const Cyclotomic cab = ca * cb;
            // exp(Pi/2) factorizes over pairs; enumerate (r_i, s_i) per pair.
            for (std::size_t i = 0; i < n; ++i) {
                auto &list = per_pair[i];
                list.clear();
                const int ap = ea[2 * i], aq = ea[2 * i + 1];
                const int bp = eb[2 * i], bq = eb[2 * i + 1];
                for (int rr = 0; rr <= std::min(ap, bq); ++rr) {
                    for (int ss = 0; ss <= std::min(aq, bp); ++ss) {
                        mpz_class num = falling(ap, rr) * falling(bq, rr) * falling(aq, ss) * falling(bp, ss);
                        mpz_class den = factorial(rr) * factorial(ss);
                        den <<= static_cast<unsigned long>(rr + ss);
                        mpq_class c(num, den);
                        c.canonicalize();
                        if (ss % 2 == 1) {
                            c = -c;
                        }
                        list.push_back({rr, ss, c});
                    }
                }
            }
            std::fill(choice.begin(), choice.end(), 0);
            while (true) {
                mpq_class coeff(1);
                for (std::size_t i = 0; i < n; ++i) {
                    const PairTerm &t = per_pair[i][choice[i]];
                    coeff *= t.coeff;
                    e[2 * i] = ea[2 * i] + eb[2 * i] - t.r - t.s;
                    e[2 * i + 1] = ea[2 * i + 1] + eb[2 * i + 1] - t.r - t.s;
                }
                r.add_term(e, cab * Cyclotomic(coeff));
                std::size_t k = 0;
                while (k < n && ++choice[k] == per_pair[k].size()) {
                    choice[k] = 0;
                    ++k;
                }
                if (k == n) {
                    break;
                }
            }
        }
    }
    return r;
}

WeylElement moyal_commutator(const WeylElement &a, const WeylElement &b)
{
    return moyal_mul(a, b) - moyal_mul(b, a);
}

WeylElement moyal_product(const std::vector<WeylElement> &factors, std::size_t pairs)
{
    WeylElement r = WeylElement::constant(pairs, Cyclotomic(1));
    for (const auto &f : factors) {
        r = moyal_mul(r, f);
    }
    return r;
}

WeylElement partial_derivative(std::size_t axis, const WeylElement &a)
{
    if (axis >= a.num_vars()) {
        throw AxisOutOfRange("axis " + std::to_string(axis) + " with " + std::to_string(a.num_vars()) + " variables");
    }
    WeylElement r(a.pairs());
    for (const auto &[e, c] : a.terms()) {
        if (e[axis] == 0) {
            continue;
        }
        WeylElement::Exponent d = e;
        --d[axis];
        r.add_term(d, c * Cyclotomic(e[axis]));
    }
    return r;
}

WeylElement linear_substitution(const Matrix &m, const WeylElement &a)
{
    const std::size_t nv = a.num_vars();
    if (m.rows() != nv || m.cols() != nv) {
        throw MismatchedArity("substitution matrix does not match the number of variables");
    }
    const std::size_t n = a.pairs();
    std::vector<WeylElement> images;
    images.reserve(nv);
    for (std::size_t j = 0; j < nv; ++j) {
        images.push_back(WeylElement::linear(n, m.column(j)));
    }
    // powers[j][k] = images[j]^k, grown on demand.
    std::vector<std::vector<WeylElement>> powers(nv, {WeylElement::constant(n, Cyclotomic(1))});
    auto power = [&](std::size_t j, int k) -> const WeylElement & {
        while (static_cast<int>(powers[j].size()) <= k) {
            powers[j].push_back(abelian_mul(powers[j].back(), images[j]));
        }
        return powers[j][static_cast<std::size_t>(k)];
    };
    WeylElement r(n);
    for (const auto &[e, c] : a.terms()) {
        WeylElement t = WeylElement::constant(n, c);
        for (std::size_t j = 0; j < nv; ++j) {
            if (e[j] > 0) {
                t = abelian_mul(t, power(j, e[j]));
            }
        }
        r += t;
    }
    return r;
}

WeylElement apply_symplectic(const SympMatrix &g, const WeylElement &a)
{
    if (g.pairs() != a.pairs()) {
        throw MismatchedArity("symplectic matrix and Weyl element have different n");
    }
    if (g.is_identity()) {
        return a;
    }
    return linear_substitution(g.matrix(), a);
}

} // namespace weylcoh
