#include <weylcoh/koszul.hpp>

#include <algorithm>
#include <numeric>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

namespace
{

void require_context(const KoszulContext &ctx, const KoszulCochain &c)
{
    if (c.pairs() != ctx.pairs) {
        throw BasisMismatch("cochain has " + std::to_string(c.pairs()) + " pairs, context has "
                            + std::to_string(ctx.pairs));
    }
}

WeylElement mul_var(std::size_t axis, const WeylElement &f)
{
    WeylElement r(f.pairs());
    for (const auto &[e, c] : f.terms()) {
        WeylElement::Exponent m = e;
        ++m[axis];
        r.add_term(m, c);
    }
    return r;
}

// (D c)_(I + a) += sign(I, a) op_a(c_I) for every a not in I.
template <class Op>
KoszulCochain wedge_differential(const KoszulCochain &c, Op &&op)
{
    KoszulCochain r(c.pairs(), c.degree() + 1);
    for (const auto &[set, v] : c.values()) {
        for (std::size_t a = 0; a < c.dim(); ++a) {
            const WedgeMask bit = WedgeMask(1) << a;
            if (set & bit) {
                continue;
            }
            WeylElement t = op(a, v);
            if (!t.is_zero()) {
                r.add(set | bit, Cyclotomic(wedge_sign(set, a)) * t);
            }
        }
    }
    return r;
}

// (h c)_(I - a) += sign(I - a, a) op_a(c_I) for a in I with keep(a).
template <class Keep, class Op>
KoszulCochain interior_homotopy(const KoszulCochain &c, Keep &&keep, Op &&op)
{
    KoszulCochain r(c.pairs(), c.degree() - 1);
    for (const auto &[set, v] : c.values()) {
        for (std::size_t a : mask_axes(set)) {
            if (!keep(a)) {
                continue;
            }
            const WedgeMask rest = set & ~(WedgeMask(1) << a);
            WeylElement t = op(a, v);
            if (!t.is_zero()) {
                r.add(rest, Cyclotomic(wedge_sign(rest, a)) * t);
            }
        }
    }
    return r;
}

void check_alphas(const KoszulContext &ctx)
{
    for (std::size_t i = 0; i < ctx.k; ++i) {
        if (ctx.alpha[i].is_one()) {
            throw DegenerateAlpha("alpha_" + std::to_string(i + 1) + " = 1 inside V_sigma");
        }
    }
}

Matrix a_matrix(const KoszulContext &ctx)
{
    Matrix m(ctx.dim(), ctx.dim());
    for (std::size_t i = 0; i < ctx.pairs; ++i) {
        const std::size_t p = 2 * i, q = 2 * i + 1;
        if (i < ctx.k) {
            m(p, p) = (Cyclotomic(1) - ctx.alpha[i]).inverse();
            m(q, q) = (Cyclotomic(1) - ctx.alpha[i].inverse()).inverse();
        } else {
            m(q, p) = Cyclotomic(-1);
            m(p, q) = Cyclotomic(1);
        }
    }
    return m;
}

} // namespace

KoszulContext KoszulContext::from_invariants(SigmaInvariants inv)
{
    KoszulContext ctx;
    ctx.pairs = inv.sigma.pairs();
    ctx.k = inv.k;
    ctx.alpha = inv.alphas;
    ctx.inv = std::move(inv);
    return ctx;
}

KoszulContext KoszulContext::from_sigma(const SympMatrix &sigma)
{
    return from_invariants(sigma_invariants(sigma));
}

KoszulCochain to_darboux(const KoszulContext &ctx, const WeylCochain &c)
{
    require_context(ctx, c);
    const Matrix &b = ctx.inv.darboux.matrix();
    const Matrix binv = ctx.inv.darboux.inverse().matrix();
    return c.pullback(b).map_values([&](const WeylElement &f) { return linear_substitution(binv, f); });
}

WeylCochain from_darboux(const KoszulContext &ctx, const KoszulCochain &c)
{
    require_context(ctx, c);
    const Matrix &b = ctx.inv.darboux.matrix();
    const Matrix binv = ctx.inv.darboux.inverse().matrix();
    return c.pullback(binv).map_values([&](const WeylElement &f) { return linear_substitution(b, f); });
}

SympMatrix darboux_matrix(const KoszulContext &ctx, const SympMatrix &s)
{
    return ctx.inv.darboux.inverse() * s * ctx.inv.darboux;
}

KoszulCochain pi_darboux(const SympMatrix &s_darboux, const KoszulCochain &c)
{
    return c.pullback(s_darboux.inverse().matrix()).map_values([&](const WeylElement &f) {
        return apply_symplectic(s_darboux, f);
    });
}

KoszulCochain delta_sigma(const KoszulContext &ctx, const KoszulCochain &c)
{
    require_context(ctx, c);
    const Cyclotomic half(1, 2);
    return wedge_differential(c, [&](std::size_t a, const WeylElement &f) {
        const Cyclotomic &al = ctx.alpha[a / 2];
        if (a % 2 == 0) {
            return (Cyclotomic(1) - al) * mul_var(a, f) + (half * (Cyclotomic(1) + al)) * partial_derivative(a + 1, f);
        }
        const Cyclotomic ai = al.inverse();
        return (Cyclotomic(1) - ai) * mul_var(a, f) - (half * (Cyclotomic(1) + ai)) * partial_derivative(a - 1, f);
    });
}

KoszulCochain delta_prime(const KoszulContext &ctx, const KoszulCochain &c)
{
    require_context(ctx, c);
    const std::size_t split = ctx.split_axis();
    return wedge_differential(c, [&](std::size_t a, const WeylElement &f) {
        return a < split ? mul_var(a, f) : partial_derivative(a, f);
    });
}

WeylElement theta(const KoszulContext &ctx, const WeylElement &f, int sign)
{
    check_alphas(ctx);
    std::vector<Cyclotomic> weights;
    for (std::size_t i = 0; i < ctx.k; ++i) {
        const Cyclotomic beta = (Cyclotomic(1) + ctx.alpha[i]) / (Cyclotomic(1) - ctx.alpha[i]);
        weights.push_back(Cyclotomic(-sign, 2) * beta);
    }
    auto op = [&](const WeylElement &g) {
        WeylElement r(g.pairs());
        for (std::size_t i = 0; i < ctx.k; ++i) {
            if (!weights[i].is_zero()) {
                r += weights[i] * partial_derivative(2 * i, partial_derivative(2 * i + 1, g));
            }
        }
        return r;
    };
    WeylElement result = f;
    WeylElement power = f;
    for (long m = 1;; ++m) {
        power = Cyclotomic(1, m) * op(power);
        if (power.is_zero()) {
            break;
        }
        result += power;
    }
    return result;
}

WeylElement a_map(const KoszulContext &ctx, const WeylElement &f, bool inverse)
{
    check_alphas(ctx);
    const Matrix m = a_matrix(ctx);
    return linear_substitution(inverse ? m.inverse() : m, f);
}

KoszulCochain xi_transform(const KoszulContext &ctx, const KoszulCochain &c, XiDirection dir)
{
    require_context(ctx, c);
    check_alphas(ctx);
    const Matrix m = a_matrix(ctx);
    const Matrix minv = m.inverse();
    if (dir == XiDirection::forward) {
        return c.map_values([&](const WeylElement &f) { return linear_substitution(m, theta(ctx, f, 1)); });
    }
    return c.map_values([&](const WeylElement &f) { return theta(ctx, linear_substitution(minv, f), -1); });
}

KoszulCochain omega_cochain(const KoszulContext &ctx)
{
    KoszulCochain c(ctx.pairs, static_cast<int>(2 * ctx.k));
    c.add((WedgeMask(1) << (2 * ctx.k)) - 1, WeylElement::constant(ctx.pairs, Cyclotomic(1)));
    return c;
}

Bidegree bidegree(const KoszulContext &ctx, WedgeMask set, const WeylElement::Exponent &e)
{
    const std::size_t split = ctx.split_axis();
    const WedgeMask low = (WedgeMask(1) << split) - 1;
    Bidegree b;
    b.i1 = mask_size(set & low);
    b.i2 = mask_size(set & ~low);
    for (std::size_t a = 0; a < e.size(); ++a) {
        (a < split ? b.d1 : b.d2) += e[a];
    }
    return b;
}

KoszulCochain scale_by(const KoszulContext &ctx, const KoszulCochain &c,
                       const std::function<Cyclotomic(const Bidegree &)> &f)
{
    KoszulCochain r(c.pairs(), c.degree());
    for (const auto &[set, v] : c.values()) {
        WeylElement w(v.pairs());
        for (const auto &[e, coeff] : v.terms()) {
            w.add_term(e, coeff * f(bidegree(ctx, set, e)));
        }
        r.add(set, w);
    }
    return r;
}

Splitting split(const KoszulContext &ctx, const KoszulCochain &c)
{
    require_context(ctx, c);
    Splitting s{Cyclotomic(0), KoszulCochain(c.pairs(), c.degree()), KoszulCochain(c.pairs(), c.degree())};
    const int top_wedge = static_cast<int>(2 * ctx.k);
    for (const auto &[set, v] : c.values()) {
        WeylElement p1(v.pairs()), p2(v.pairs());
        for (const auto &[e, coeff] : v.terms()) {
            const Bidegree b = bidegree(ctx, set, e);
            if (b.d2 + b.i2 > 0) {
                p2.add_term(e, coeff);
            } else if (b.d1 == 0 && b.i1 == top_wedge) {
                s.top += coeff;
            } else {
                p1.add_term(e, coeff);
            }
        }
        s.h1_part.add(set, p1);
        s.h2_part.add(set, p2);
    }
    return s;
}

KoszulCochain h1(const KoszulContext &ctx, const KoszulCochain &c)
{
    require_context(ctx, c);
    const std::size_t split = ctx.split_axis();
    return interior_homotopy(
        c, [&](std::size_t a) { return a < split; },
        [](std::size_t a, const WeylElement &f) { return partial_derivative(a, f); });
}

KoszulCochain h2(const KoszulContext &ctx, const KoszulCochain &c)
{
    require_context(ctx, c);
    const std::size_t split = ctx.split_axis();
    return interior_homotopy(
        c, [&](std::size_t a) { return a >= split; }, [](std::size_t a, const WeylElement &f) { return mul_var(a, f); });
}

KoszulCochain homotopy_step(const KoszulContext &ctx, Summand part, const KoszulCochain &c)
{
    const Splitting s = split(ctx, c);
    if (part == Summand::h1) {
        if (!s.top.is_zero() || !s.h2_part.is_zero()) {
            throw WrongSummand("h1 applies to the H1 summand only");
        }
        return h1(ctx, c);
    }
    if (!s.top.is_zero() || !s.h1_part.is_zero()) {
        throw WrongSummand("h2 applies to the H2 summand only");
    }
    return h2(ctx, c);
}

bool verify_certificate(const KoszulContext &ctx, const KoszulCochain &c, const ContractionCertificate &cert,
                        bool sigma_differential)
{
    if (cert.b.degree() != c.degree() - 1 || cert.degree != c.degree()) {
        return false;
    }
    KoszulCochain rhs = sigma_differential ? delta_sigma(ctx, cert.b) : delta_prime(ctx, cert.b);
    if (!cert.s.is_zero()) {
        if (c.degree() != static_cast<int>(2 * ctx.k)) {
            return false;
        }
        rhs += cert.s * omega_cochain(ctx);
    }
    return rhs == c;
}

ContractionCertificate contract(const KoszulContext &ctx, const KoszulCochain &c)
{
    if (!delta_prime(ctx, c).is_zero()) {
        throw NotACocycle("Delta'(c) != 0");
    }
    const Splitting s = split(ctx, c);
    const int two_k = static_cast<int>(2 * ctx.k);
    const KoszulCochain c1 =
        scale_by(ctx, s.h1_part, [&](const Bidegree &b) { return Cyclotomic(1, b.d1 + two_k - b.i1); });
    const KoszulCochain c2 = scale_by(ctx, s.h2_part, [](const Bidegree &b) { return Cyclotomic(1, b.d2 + b.i2); });
    ContractionCertificate cert;
    cert.degree = c.degree();
    cert.s = s.top;
    cert.b = h1(ctx, c1) + h2(ctx, c2);
    cert.verified = verify_certificate(ctx, c, cert, false);
    if (!cert.verified) {
        throw std::logic_error("contraction certificate failed to re-verify");
    }
    return cert;
}

ContractionCertificate contract_sigma(const KoszulContext &ctx, const KoszulCochain &c)
{
    if (!delta_sigma(ctx, c).is_zero()) {
        throw NotACocycle("Delta_sigma(c) != 0");
    }
    ContractionCertificate cert = contract(ctx, xi_transform(ctx, c, XiDirection::forward));
    cert.b = xi_transform(ctx, cert.b, XiDirection::inverse);
    cert.verified = verify_certificate(ctx, c, cert, true);
    if (!cert.verified) {
        throw std::logic_error("contraction certificate failed to re-verify");
    }
    return cert;
}

bool noncoboundary_witness(const KoszulContext &ctx, const KoszulCochain &c)
{
    require_context(ctx, c);
    if (c.degree() != static_cast<int>(2 * ctx.k)) {
        throw MismatchedArity("witness needs a cochain of degree 2k");
    }
    if (!delta_prime(ctx, c).is_zero()) {
        throw NotACocycle("Delta'(c) != 0");
    }
    const WeylElement *v = c.find((WedgeMask(1) << (2 * ctx.k)) - 1);
    return v != nullptr && !v->constant_term().is_zero();
}

namespace
{

// All exponents on axes [lo, hi) with total degree d (other axes zero).
void compositions(std::size_t lo, std::size_t hi, int d, WeylElement::Exponent &e,
                  std::vector<WeylElement::Exponent> &out)
{
    if (lo == hi) {
        if (d == 0) {
            out.push_back(e);
        }
        return;
    }
    if (lo + 1 == hi) {
        e[lo] = d;
        out.push_back(e);
        e[lo] = 0;
        return;
    }
    for (int x = d; x >= 0; --x) {
        e[lo] = x;
        compositions(lo + 1, hi, d - x, e, out);
    }
    e[lo] = 0;
}

struct PieceBasis {
    std::vector<std::pair<WedgeMask, WeylElement::Exponent>> elements;
    std::map<std::pair<WedgeMask, WeylElement::Exponent>, std::size_t> index;
};

PieceBasis piece_basis(const KoszulContext &ctx, int e1, int e2, int degree)
{
    PieceBasis basis;
    const std::size_t dim = ctx.dim();
    const std::size_t split = ctx.split_axis();
    const WedgeMask low = (WedgeMask(1) << split) - 1;
    for (WedgeMask set : subsets_of_size(dim, degree)) {
        const int i1 = mask_size(set & low);
        const int i2 = degree - i1;
        const int d1 = e1 + i1;
        const int d2 = e2 - i2;
        if (d1 < 0 || d2 < 0) {
            continue;
        }
        std::vector<WeylElement::Exponent> part1, part2;
        WeylElement::Exponent e(dim, 0);
        compositions(0, split, d1, e, part1);
        compositions(split, dim, d2, e, part2);
        for (const auto &x : part1) {
            for (const auto &y : part2) {
                WeylElement::Exponent m = x;
                for (std::size_t a = split; a < dim; ++a) {
                    m[a] = y[a];
                }
                basis.index.emplace(std::make_pair(set, m), basis.elements.size());
                basis.elements.emplace_back(set, m);
            }
        }
    }
    return basis;
}

std::size_t differential_rank(const KoszulContext &ctx, const PieceBasis &from, const PieceBasis &to, int degree)
{
    if (from.elements.empty() || to.elements.empty()) {
        return 0;
    }
    Matrix m(to.elements.size(), from.elements.size());
    for (std::size_t j = 0; j < from.elements.size(); ++j) {
        KoszulCochain c(ctx.pairs, degree);
        c.add(from.elements[j].first, WeylElement::monomial(ctx.pairs, from.elements[j].second));
        const KoszulCochain image = delta_prime(ctx, c);
        for (const auto &[set, v] : image.values()) {
            for (const auto &[e, coeff] : v.terms()) {
                m(to.index.at({set, e}), j) = coeff;
            }
        }
    }
    return m.rank();
}

} // namespace

TruncatedCohomology truncated_cohomology_dims(const KoszulContext &ctx, int dmax)
{
    if (dmax < 2) {
        throw WindowTooSmall("Dmax must be at least 2");
    }
    TruncatedCohomology out;
    const int two_k = static_cast<int>(2 * ctx.k);
    const int fixed = static_cast<int>(ctx.dim()) - two_k;
    const int top = static_cast<int>(ctx.dim());
    for (int deg = 0; deg <= top; ++deg) {
        out.dims[deg] = 0;
    }
    for (int e1 = -two_k; e1 <= dmax + fixed; ++e1) {
        for (int e2 = 0; e2 <= dmax + fixed; ++e2) {
            const int max_degree = e1 + two_k + e2;
            const int min_degree = e1 + std::max(0, -e1) + e2 - std::min(fixed, e2);
            if (max_degree > dmax) {
                if (min_degree <= dmax) {
                    out.boundary_pieces.emplace_back(e1, e2);
                }
                continue;
            }
            ++out.interior_pieces;
            std::vector<PieceBasis> bases;
            for (int deg = 0; deg <= top; ++deg) {
                bases.push_back(piece_basis(ctx, e1, e2, deg));
            }
            std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
            for (int deg = 0; deg < top; ++deg) {
                ranks[deg] = differential_rank(ctx, bases[deg], bases[deg + 1], deg);
            }
            for (int deg = 0; deg <= top; ++deg) {
                const std::size_t in = deg > 0 ? ranks[deg - 1] : 0;
                out.dims[deg] += bases[deg].elements.size() - ranks[deg] - in;
            }
        }
    }
    return out;
}

namespace
{

using Tensor = std::map<std::vector<WeylElement::Exponent>, Cyclotomic>;

// Multilinear expansion of a0 (x) ... (x) a_(m-1); terms whose middle factor
// is a scalar are dropped (normalized complex).
void add_tensor(Tensor &t, const std::vector<WeylElement> &factors, const Cyclotomic &coeff)
{
    std::vector<WeylElement::Exponent> key(factors.size());
    auto recurse = [&](auto &&self, std::size_t i, const Cyclotomic &c) -> void {
        if (i == factors.size()) {
            auto [it, inserted] = t.try_emplace(key, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    t.erase(it);
                }
            }
            return;
        }
        const bool middle = i > 0 && i + 1 < factors.size();
        for (const auto &[e, x] : factors[i].terms()) {
            if (middle && total_degree(e) == 0) {
                continue;
            }
            key[i] = e;
            self(self, i + 1, c * x);
        }
    };
    if (!coeff.is_zero()) {
        recurse(recurse, 0, coeff);
    }
}

Tensor bar_differential(const Tensor &t, std::size_t pairs)
{
    Tensor r;
    for (const auto &[key, c] : t) {
        std::vector<WeylElement> factors;
        for (const auto &e : key) {
            factors.push_back(WeylElement::monomial(pairs, e));
        }
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            std::vector<WeylElement> merged;
            for (std::size_t j = 0; j < factors.size(); ++j) {
                if (j == i) {
                    merged.push_back(moyal_mul(factors[i], factors[i + 1]));
                    ++j;
                } else {
                    merged.push_back(factors[j]);
                }
            }
            add_tensor(r, merged, (i % 2 == 0) ? c : -c);
        }
    }
    return r;
}

int permutation_sign(const std::vector<std::size_t> &p)
{
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            inv += p[i] > p[j] ? 1 : 0;
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

// iota(a (x) Z_(i_1) ^ ... ^ Z_(i_k) (x) b) = sum_pi sgn(pi) a (x) Z_(i_pi(1)) (x) ... (x) b.
void add_embedded(Tensor &t, const WeylElement &a, const std::vector<std::size_t> &axes, const WeylElement &b,
                  const Cyclotomic &coeff)
{
    const std::size_t pairs = a.pairs();
    std::vector<std::size_t> perm(axes.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<WeylElement> factors{a};
        for (std::size_t p : perm) {
            factors.push_back(WeylElement::variable(pairs, axes[p]));
        }
        factors.push_back(b);
        add_tensor(t, factors, Cyclotomic(permutation_sign(perm)) * coeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

BarReport bar_subcomplex_check(std::size_t pairs, int k, int coeff_degree, bool allow_degree_four)
{
    if (k > 4 || (k == 4 && !allow_degree_four)) {
        throw DegreeCapExceeded("Bar check is capped at k <= 3 (k = 4 on request)");
    }
    if (k < 1 || static_cast<std::size_t>(k) > 2 * pairs) {
        throw std::invalid_argument("Bar check degree out of range");
    }
    std::vector<WeylElement> words;
    WeylElement::Exponent e(2 * pairs, 0);
    for (int d = 0; d <= coeff_degree; ++d) {
        std::vector<WeylElement::Exponent> exps;
        compositions(0, 2 * pairs, d, e, exps);
        for (const auto &x : exps) {
            words.push_back(WeylElement::monomial(pairs, x));
        }
    }
    BarReport report;
    for (WedgeMask set : subsets_of_size(2 * pairs, k)) {
        const auto axes = mask_axes(set);
        for (const auto &a : words) {
            for (const auto &b : words) {
                ++report.cases;
                Tensor chain;
                add_embedded(chain, a, axes, b, Cyclotomic(1));
                const Tensor lhs = bar_differential(chain, pairs);

                Tensor rhs;
                for (std::size_t m = 0; m < axes.size(); ++m) {
                    std::vector<std::size_t> rest = axes;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
                    const WeylElement z = WeylElement::variable(pairs, axes[m]);
                    const Cyclotomic sign(m % 2 == 0 ? 1 : -1);
                    add_embedded(rhs, moyal_mul(a, z), rest, b, sign);
                    add_embedded(rhs, a, rest, moyal_mul(z, b), -sign);
                }
                if (lhs != rhs) {
                    ++report.failures;
                }
            }
        }
    }
    return report;
}

} // namespace weylcoh
