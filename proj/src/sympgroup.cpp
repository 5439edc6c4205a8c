#include <weylcoh/sympgroup.hpp>

#include <algorithm>
#include <deque>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

namespace
{

using Vec = std::vector<Cyclotomic>;

Vec axpy(const Vec &u, const Cyclotomic &a, const Vec &v)
{
    Vec r = u;
    if (a.is_zero()) {
        return r;
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += a * v[i];
    }
    return r;
}

Vec scaled(const Cyclotomic &a, const Vec &v)
{
    Vec r = v;
    for (auto &x : r) {
        x = a * x;
    }
    return r;
}

std::vector<Vec> rebasis(const std::vector<Vec> &vectors)
{
    if (vectors.empty()) {
        return {};
    }
    return Matrix::from_columns(vectors).column_space_basis();
}

} // namespace

int multiplicative_order(const SympMatrix &sigma, int cap)
{
    SympMatrix power = sigma;
    for (int m = 1; m <= cap; ++m) {
        if (power.is_identity()) {
            return m;
        }
        power = power * sigma;
    }
    throw NotFiniteOrder("no identity power up to " + std::to_string(cap));
}

std::size_t moved_dimension(const SympMatrix &sigma)
{
    return (sigma.matrix() - Matrix::identity(sigma.dim())).rank();
}

AltForm omega_from_projection(const Matrix &projection, std::size_t k)
{
    const std::size_t dim = projection.rows();
    AltForm form(dim / 2, static_cast<int>(2 * k));
    std::vector<Vec> images;
    images.reserve(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        images.push_back(projection.column(a));
    }
    for (WedgeMask set : subsets_of_size(dim, static_cast<int>(2 * k))) {
        const auto axes = mask_axes(set);
        Matrix gram(axes.size(), axes.size());
        for (std::size_t a = 0; a < axes.size(); ++a) {
            for (std::size_t b = 0; b < axes.size(); ++b) {
                gram(a, b) = symplectic_pairing(images[axes[a]], images[axes[b]]);
            }
        }
        form.add(set, pfaffian(gram));
    }
    return form;
}

AltForm omega_from_darboux(const SympMatrix &darboux, std::size_t k)
{
    const std::size_t dim = darboux.dim();
    const Matrix dual = darboux.inverse().matrix();
    AltForm form(dim / 2, static_cast<int>(2 * k));
    const WedgeMask rows = (WedgeMask(1) << (2 * k)) - 1;
    for (WedgeMask set : subsets_of_size(dim, static_cast<int>(2 * k))) {
        form.add(set, minor(dual, rows, set));
    }
    return form;
}

SigmaInvariants sigma_invariants(const SympMatrix &sigma, int cap)
{
    SigmaInvariants inv;
    inv.sigma = sigma;
    inv.order = multiplicative_order(sigma, cap);
    const int order = inv.order;
    const std::size_t dim = sigma.dim();

    std::vector<Matrix> powers{Matrix::identity(dim)};
    for (int m = 1; m < order; ++m) {
        powers.push_back(powers.back() * sigma.matrix());
    }
    const Cyclotomic inv_order = Cyclotomic(1) / Cyclotomic(order);
    std::vector<std::vector<Vec>> eigen(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) {
        Matrix proj(dim, dim);
        for (int m = 0; m < order; ++m) {
            proj = proj + Cyclotomic::root_of_unity(order, -static_cast<long>(j) * m) * powers[m];
        }
        proj = inv_order * proj;
        if (j == 0) {
            inv.projection = Matrix::identity(dim) - proj;
        }
        eigen[j] = proj.column_space_basis();
    }

    // Greedy Darboux pairing, smallest exponent first; the fixed block last.
    std::vector<Vec> columns;
    auto pair_off = [&](int j) {
        const int partner = (order - j) % order;
        const Vec v = eigen[j].front();
        const Vec *w = nullptr;
        Cyclotomic pairing;
        for (const Vec &cand : eigen[partner]) {
            pairing = symplectic_pairing(v, cand);
            if (!pairing.is_zero()) {
                w = &cand;
                break;
            }
        }
        if (w == nullptr) {
            throw NonSymplecticMatrix("eigenspaces fail to pair under omega");
        }
        const Vec wn = scaled(pairing.inverse(), *w);
        columns.push_back(v);
        columns.push_back(wn);
        inv.alphas.push_back(Cyclotomic::root_of_unity(order, j));
        inv.alpha_exponents.push_back(j);
        for (auto &space : eigen) {
            std::vector<Vec> deflated;
            for (const Vec &u : space) {
                Vec r = axpy(u, -symplectic_pairing(u, wn), v);
                r = axpy(r, symplectic_pairing(u, v), wn);
                deflated.push_back(std::move(r));
            }
            std::vector<Vec> nonzero;
            for (auto &r : deflated) {
                if (std::any_of(r.begin(), r.end(), [](const Cyclotomic &x) { return !x.is_zero(); })) {
                    nonzero.push_back(std::move(r));
                }
            }
            space = rebasis(nonzero);
        }
    };
    while (true) {
        int next = -1;
        for (int j = 1; j < order; ++j) {
            if (!eigen[j].empty()) {
                next = j;
                break;
            }
        }
        if (next < 0) {
            break;
        }
        pair_off(next);
    }
    inv.k = inv.alphas.size();
    while (!eigen[0].empty()) {
        pair_off(0);
    }
    if (columns.size() != dim) {
        throw NonSymplecticMatrix("Darboux pairing did not exhaust V");
    }
    if (2 * inv.k != moved_dimension(sigma)) {
        throw NonSymplecticMatrix("eigenvalue count disagrees with rank(sigma - Id)");
    }
    inv.darboux = SympMatrix::from_matrix(Matrix::from_columns(columns));
    inv.omega = omega_from_projection(inv.projection, inv.k);
    return inv;
}

AltForm transport_form(const SympMatrix &x, const AltForm &form)
{
    return form.pullback(x.inverse().matrix());
}

AltForm transport_form(const SympMatrix &x, const SympMatrix &sigma)
{
    return transport_form(x, sigma_invariants(sigma).omega);
}

std::shared_ptr<const FiniteSympGroup> FiniteSympGroup::close(const std::vector<SympMatrix> &generators,
                                                              std::size_t cap, std::string name)
{
    if (generators.empty()) {
        throw MismatchedArity("a group needs at least one generator");
    }
    std::shared_ptr<FiniteSympGroup> g(new FiniteSympGroup());
    g->m_name = std::move(name);
    g->m_pairs = generators.front().pairs();
    int order = 1;
    for (const auto &s : generators) {
        if (s.pairs() != g->m_pairs) {
            throw MismatchedArity("generators act on different dimensions");
        }
        if (!SympMatrix::is_symplectic(s.matrix())) {
            throw NonSymplecticMatrix("generator is not symplectic");
        }
        order = lcm_order(order, s.matrix().cyclotomic_order());
    }
    g->m_cyclotomic_order = order;

    auto insert = [&](const SympMatrix &m) -> std::pair<std::size_t, bool> {
        auto [it, inserted] = g->m_index.try_emplace(m.matrix().key(order), g->m_elements.size());
        if (inserted) {
            if (g->m_elements.size() >= cap) {
                throw OrderExceedsCap("group order exceeds " + std::to_string(cap));
            }
            g->m_elements.push_back(m);
        }
        return {it->second, inserted};
    };
    insert(SympMatrix::identity(g->m_pairs));
    for (std::size_t head = 0; head < g->m_elements.size(); ++head) {
        for (const auto &s : generators) {
            const SympMatrix next = g->m_elements[head] * s;
            insert(next);
        }
    }
    for (const auto &s : generators) {
        const std::size_t idx = *g->index_of(s);
        if (std::find(g->m_generators.begin(), g->m_generators.end(), idx) == g->m_generators.end()) {
            g->m_generators.push_back(idx);
        }
    }

    const std::size_t n = g->m_elements.size();
    if (n <= 256) {
        g->m_table.resize(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                g->m_table[a * n + b] = *g->index_of(g->m_elements[a] * g->m_elements[b]);
            }
        }
    }
    g->m_inverse.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        g->m_inverse[a] = *g->index_of(g->m_elements[a].inverse());
    }
    g->m_invariants.resize(n);
    g->build_classes();
    return g;
}

std::size_t FiniteSympGroup::mul(std::size_t a, std::size_t b) const
{
    const std::size_t n = m_elements.size();
    if (a >= n || b >= n) {
        throw std::out_of_range("group element index");
    }
    if (!m_table.empty()) {
        return m_table[a * n + b];
    }
    return *index_of(m_elements[a] * m_elements[b]);
}

std::optional<std::size_t> FiniteSympGroup::index_of(const SympMatrix &m) const
{
    if (m.pairs() != m_pairs) {
        return std::nullopt;
    }
    const int order = lcm_order(m_cyclotomic_order, m.matrix().cyclotomic_order());
    if (order != m_cyclotomic_order) {
        return std::nullopt;
    }
    auto it = m_index.find(m.matrix().key(m_cyclotomic_order));
    if (it == m_index.end()) {
        return std::nullopt;
    }
    return it->second;
}

void FiniteSympGroup::build_classes()
{
    const std::size_t n = m_elements.size();
    m_class_of.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        if (m_class_of[g] != n) {
            continue;
        }
        ConjClass cls;
        cls.representative = g;
        cls.witness[g] = identity();
        std::deque<std::size_t> queue{g};
        while (!queue.empty()) {
            const std::size_t h = queue.front();
            queue.pop_front();
            const std::size_t x = cls.witness[h];
            for (std::size_t s : m_generators) {
                const std::size_t next = conjugate(s, h);
                if (cls.witness.emplace(next, mul(s, x)).second) {
                    queue.push_back(next);
                }
            }
        }
        for (const auto &[member, x] : cls.witness) {
            cls.members.push_back(member);
            m_class_of[member] = m_classes.size();
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (mul(x, g) == mul(g, x)) {
                cls.centralizer.push_back(x);
            }
        }
        cls.k = moved_dimension(m_elements[g]) / 2;
        m_classes.push_back(std::move(cls));
    }
}

std::map<std::size_t, std::vector<std::size_t>> FiniteSympGroup::classes_by_k() const
{
    std::map<std::size_t, std::vector<std::size_t>> r;
    for (std::size_t c = 0; c < m_classes.size(); ++c) {
        r[m_classes[c].k].push_back(c);
    }
    return r;
}

const SigmaInvariants &FiniteSympGroup::invariants(std::size_t element) const
{
    std::lock_guard<std::mutex> lock(m_cache_mutex);
    auto &slot = m_invariants.at(element);
    if (!slot) {
        slot = std::make_unique<SigmaInvariants>(sigma_invariants(m_elements[element]));
    }
    return *slot;
}

} // namespace weylcoh
