#include <weylcoh/cyclotomic.hpp>

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

namespace
{

using QPoly = std::vector<mpq_class>;

void trim(QPoly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// Quotient and remainder in Q[x]; divisor must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly &den)
{
    trim(num);
    QPoly quot;
    const std::size_t dd = den.size() - 1;
    if (num.size() >= den.size()) {
        quot.assign(num.size() - dd, mpq_class(0));
        for (std::size_t i = num.size(); i-- > dd;) {
            if (num[i] == 0) {
                continue;
            }
            mpq_class c = num[i] / den[dd];
            quot[i - dd] = c;
            for (std::size_t t = 0; t <= dd; ++t) {
                num[i - dd + t] -= c * den[t];
            }
        }
    }
    trim(num);
    trim(quot);
    return {std::move(quot), std::move(num)};
}

QPoly poly_mul(const QPoly &a, const QPoly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

QPoly poly_sub(QPoly a, const QPoly &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), mpq_class(0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

// Reduce modulo the (monic, integral) cyclotomic polynomial in place and pad
// to exactly phi(order) entries.
void reduce_mod_phi(std::vector<mpq_class> &r, int order)
{
    const auto &phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t d = r.size(); d-- > deg;) {
        if (r[d] == 0) {
            continue;
        }
        mpq_class c = r[d];
        for (std::size_t t = 0; t <= deg; ++t) {
            r[d - deg + t] -= c * phi[t];
        }
    }
    r.resize(deg, mpq_class(0));
}

} // namespace

int lcm_order(int a, int b)
{
    return std::lcm(a, b);
}

const std::vector<mpz_class> &cyclotomic_polynomial(int order)
{
    if (order < 1) {
        throw std::invalid_argument("cyclotomic order must be positive");
    }
    static std::mutex mutex;
    static std::map<int, std::vector<mpz_class>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(order);
        if (it != cache.end()) {
            return it->second;
        }
    }
    // x^N - 1 divided by every Phi_d with d | N, d < N.
    std::vector<mpz_class> num(static_cast<std::size_t>(order) + 1, mpz_class(0));
    num[0] = -1;
    num[static_cast<std::size_t>(order)] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d != 0) {
            continue;
        }
        const auto &den = cyclotomic_polynomial(d);
        const std::size_t dd = den.size() - 1;
        std::vector<mpz_class> quot(num.size() - dd, mpz_class(0));
        for (std::size_t i = num.size(); i-- > dd;) {
            mpz_class c = num[i]; // den is monic
            quot[i - dd] = c;
            if (c != 0) {
                for (std::size_t t = 0; t <= dd; ++t) {
                    num[i - dd + t] -= c * den[t];
                }
            }
        }
        num = std::move(quot);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(order, std::move(num)).first->second;
}

int euler_phi(int order)
{
    return static_cast<int>(cyclotomic_polynomial(order).size()) - 1;
}

Cyclotomic::Cyclotomic() : m_order(1), m_coeffs{mpq_class(0)} {}

Cyclotomic::Cyclotomic(long value) : m_order(1), m_coeffs{mpq_class(value)} {}

Cyclotomic::Cyclotomic(const mpq_class &value) : m_order(1), m_coeffs{value} {}

Cyclotomic::Cyclotomic(long num, long den) : m_order(1)
{
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    m_coeffs = {q};
}

Cyclotomic::Cyclotomic(int order, std::vector<mpq_class> coeffs, bool reduced)
    : m_order(order), m_coeffs(std::move(coeffs))
{
    if (!reduced) {
        reduce_mod_phi(m_coeffs, m_order);
    }
    normalize();
}

void Cyclotomic::normalize()
{
    if (m_order == 1) {
        return;
    }
    for (std::size_t i = 1; i < m_coeffs.size(); ++i) {
        if (m_coeffs[i] != 0) {
            return;
        }
    }
    mpq_class c0 = m_coeffs.empty() ? mpq_class(0) : m_coeffs[0];
    m_order = 1;
    m_coeffs = {c0};
}

Cyclotomic Cyclotomic::root_of_unity(int order, long k)
{
    if (order < 1) {
        throw std::invalid_argument("root_of_unity: order must be positive");
    }
    long e = k % order;
    if (e < 0) {
        e += order;
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, mpq_class(0));
    c[static_cast<std::size_t>(e)] = 1;
    return Cyclotomic(order, std::move(c), false);
}

Cyclotomic Cyclotomic::from_coefficients(int order, std::vector<mpq_class> coeffs)
{
    if (order < 1) {
        throw std::invalid_argument("from_coefficients: order must be positive");
    }
    if (coeffs.empty()) {
        return Cyclotomic();
    }
    return Cyclotomic(order, std::move(coeffs), false);
}

bool Cyclotomic::is_zero() const
{
    return m_order == 1 && m_coeffs[0] == 0;
}

bool Cyclotomic::is_one() const
{
    return m_order == 1 && m_coeffs[0] == 1;
}

const mpq_class &Cyclotomic::rational() const
{
    if (m_order != 1) {
        throw std::domain_error("cyclotomic value is not rational: " + to_string());
    }
    return m_coeffs[0];
}

Cyclotomic Cyclotomic::embed(int target) const
{
    if (target % m_order != 0) {
        throw std::invalid_argument("embed: target order must be a multiple of the current order");
    }
    if (target == m_order) {
        return *this;
    }
    if (m_order == 1) {
        // Unnormalized on purpose: callers combine coefficient vectors.
        Cyclotomic r;
        r.m_order = target;
        r.m_coeffs.assign(static_cast<std::size_t>(euler_phi(target)), mpq_class(0));
        r.m_coeffs[0] = m_coeffs[0];
        return r;
    }
    const std::size_t step = static_cast<std::size_t>(target / m_order);
    std::vector<mpq_class> c((m_coeffs.size() - 1) * step + 1, mpq_class(0));
    for (std::size_t j = 0; j < m_coeffs.size(); ++j) {
        c[j * step] = m_coeffs[j];
    }
    reduce_mod_phi(c, target);
    Cyclotomic r;
    r.m_order = target;
    r.m_coeffs = std::move(c);
    return r;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &other)
{
    if (other.m_order == 1) {
        m_coeffs[0] += other.m_coeffs[0];
        return *this;
    }
    if (m_order == other.m_order) {
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] += other.m_coeffs[i];
        }
        normalize();
        return *this;
    }
    const int l = lcm_order(m_order, other.m_order);
    Cyclotomic a = embed(l);
    Cyclotomic b = other.embed(l);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        a.m_coeffs[i] += b.m_coeffs[i];
    }
    a.normalize();
    return *this = std::move(a);
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &other)
{
    return *this += -other;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &other)
{
    if (other.m_order == 1) {
        const mpq_class s = other.m_coeffs[0];
        if (s == 0) {
            return *this = Cyclotomic();
        }
        for (auto &c : m_coeffs) {
            c *= s;
        }
        return *this;
    }
    if (m_order == 1) {
        Cyclotomic r = other;
        return *this = (r *= *this);
    }
    const int l = lcm_order(m_order, other.m_order);
    const Cyclotomic a = embed(l);
    const Cyclotomic b = other.embed(l);
    std::vector<mpq_class> prod = poly_mul(a.m_coeffs, b.m_coeffs);
    return *this = Cyclotomic(l, std::move(prod), false);
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    if (m_order == 1) {
        return Cyclotomic(mpq_class(1) / m_coeffs[0]);
    }
    const auto &phi_z = cyclotomic_polynomial(m_order);
    QPoly r0(phi_z.begin(), phi_z.end());
    QPoly r1 = m_coeffs;
    trim(r1);
    QPoly s0;
    QPoly s1{mpq_class(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        throw DivisionByZero("element is not invertible");
    }
    const mpq_class lead = r1[0];
    for (auto &c : s1) {
        c /= lead;
    }
    return Cyclotomic(m_order, std::move(s1), false);
}

Cyclotomic &Cyclotomic::operator/=(const Cyclotomic &other)
{
    return *this *= other.inverse();
}

Cyclotomic Cyclotomic::conjugate() const
{
    if (m_order == 1) {
        return *this;
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(m_order), mpq_class(0));
    for (std::size_t j = 0; j < m_coeffs.size(); ++j) {
        const std::size_t e = j == 0 ? 0 : static_cast<std::size_t>(m_order) - j;
        c[e] += m_coeffs[j];
    }
    return Cyclotomic(m_order, std::move(c), false);
}

Cyclotomic Cyclotomic::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    Cyclotomic result(1);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b)
{
    if (a.m_order == b.m_order) {
        return a.m_coeffs == b.m_coeffs;
    }
    if (a.m_order == 1 || b.m_order == 1) {
        return false; // rational values are always stored at order 1
    }
    const int l = lcm_order(a.m_order, b.m_order);
    return a.embed(l).m_coeffs == b.embed(l).m_coeffs;
}

bool canonical_less(const Cyclotomic &a, const Cyclotomic &b)
{
    const int l = lcm_order(a.m_order, b.m_order);
    const Cyclotomic ea = a.embed(l);
    const Cyclotomic eb = b.embed(l);
    for (std::size_t i = 0; i < ea.m_coeffs.size(); ++i) {
        const int c = cmp(ea.m_coeffs[i], eb.m_coeffs[i]);
        if (c != 0) {
            return c < 0;
        }
    }
    return false;
}

std::string Cyclotomic::to_string() const
{
    return to_string(m_order);
}

std::string Cyclotomic::to_string(int as_order) const
{
    const Cyclotomic e = embed(as_order);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < e.m_coeffs.size(); ++j) {
        const mpq_class &c = e.m_coeffs[j];
        if (c == 0) {
            continue;
        }
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (j == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << "z";
        if (j > 1) {
            os << "^" << j;
        }
    }
    if (first) {
        return "0";
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Cyclotomic &c)
{
    return os << c.to_string();
}

Cyclotomic Cyclotomic::parse(std::string_view text, int order)
{
    if (order < 1) {
        throw ParseError("cyclotomic order must be positive");
    }
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw ParseError("empty cyclotomic literal");
    }
    Cyclotomic result;
    std::size_t pos = 0;
    auto read_int = [&](std::string &out) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out.push_back(s[pos++]);
        }
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in '" + s + "'");
        }
        mpq_class coef(1);
        std::string num;
        read_int(num);
        if (!num.empty()) {
            std::string den;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                read_int(den);
                if (den.empty()) {
                    throw ParseError("missing denominator in '" + s + "'");
                }
            }
            coef = mpq_class(mpz_class(num), den.empty() ? mpz_class(1) : mpz_class(den));
            if (coef.get_den() == 0) {
                throw ParseError("zero denominator in '" + s + "'");
            }
            coef.canonicalize();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
            }
        }
        long exponent = 0;
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                int esign = 1;
                if (pos < s.size() && s[pos] == '-') {
                    esign = -1;
                    ++pos;
                }
                std::string e;
                read_int(e);
                if (e.empty()) {
                    throw ParseError("missing exponent in '" + s + "'");
                }
                exponent = esign * std::stol(e);
            }
        } else if (num.empty()) {
            throw ParseError("malformed term in '" + s + "'");
        }
        result += Cyclotomic(mpq_class(sign) * coef) * root_of_unity(order, exponent);
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in '" + s + "'");
        }
    }
    return result;
}

} // namespace weylcoh
