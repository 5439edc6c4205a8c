// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <weylcoh/analysis.hpp>
#include <weylcoh/catalog.hpp>
#include <weylcoh/koszul.hpp>
#include <weylcoh/random.hpp>
#include <weylcoh/sra.hpp>

using namespace weylcoh;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Criterion
{
public:
    Criterion(int id, std::string title, double limit_seconds = 0) : m_id(id), m_title(std::move(title)), m_limit(limit_seconds)
    {
    }

    bool run(const std::function<Outcome()> &body) const
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = body();
        } catch (const std::exception &e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (m_limit > 0 && secs >= m_limit) {
            out.ok = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
        }
        std::printf("%s %2d  %-58s %7.2fs", out.ok ? "PASS" : "FAIL", m_id, m_title.c_str(), secs);
        if (m_limit > 0) {
            std::printf(" (limit %.0fs)", m_limit);
        }
        if (!out.detail.empty()) {
            std::printf("  [%s]", out.detail.c_str());
        }
        std::printf("\n");
        std::fflush(stdout);
        return out.ok;
    }

private:
    int m_id;
    std::string m_title;
    double m_limit;
};

// Every certificate re-verified, and only degree 2k carries an omega_sigma part.
bool certificates_consistent(const SigmaReport &rep)
{
    const int top = static_cast<int>(rep.ctx.split_axis());
    for (const auto &[d, items] : rep.certificates) {
        for (const auto &item : items) {
            if (!item.cert.verified || (d != top && !item.cert.s.is_zero())) {
                return false;
            }
        }
    }
    return rep.all_verified;
}

Outcome sigma_criterion(const SympMatrix &sigma, const std::map<int, std::size_t> &expected)
{
    SigmaOptions opts;
    opts.samples = 6;
    opts.dmax = 6;
    const SigmaReport rep = sigma_report(sigma, opts);
    Outcome out;
    std::ostringstream msg;
    for (const auto &[d, dim] : rep.certified_dims) {
        msg << "H" << d << "=" << dim << " ";
    }
    msg << "truncated";
    for (const auto &[d, dim] : rep.truncated.dims) {
        msg << " H" << d << "=" << dim;
    }
    out.detail = msg.str();
    out.ok = certificates_consistent(rep) && rep.omega_witness && !rep.coboundary_witness && rep.shifted_witness &&
             rep.certified_dims == expected && rep.truncated_agrees;
    return out;
}

// Distinct elements of the catalog groups with n <= 2.
std::vector<SympMatrix> catalog_sigmas()
{
    std::vector<std::string> names;
    for (int l = 1; l <= 12; ++l) {
        names.push_back("Z" + std::to_string(l) + "_sp2");
    }
    names.insert(names.end(), {"pm_sp4", "Z4_sp2xZ3_sp2", "Z6_sp2xZ2_sp2"});
    std::vector<SympMatrix> out;
    std::set<std::string> seen;
    for (const auto &name : names) {
        const GroupPtr g = catalog_group(name);
        for (const SympMatrix &m : g->elements()) {
            if (seen.insert(std::to_string(m.pairs()) + m.matrix().key(g->cyclotomic_order())).second) {
                out.push_back(m);
            }
        }
    }
    return out;
}

// Runs f(i) for i < count on all hardware threads; returns the per-index results.
template <class F>
auto parallel_map(std::size_t count, F &&f)
{
    using R = decltype(f(std::size_t{}));
    std::vector<R> results(count);
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> tasks;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < count; i = next++) {
                results[i] = f(i);
            }
        }));
    }
    for (auto &t : tasks) {
        t.get();
    }
    return results;
}

struct IdentityTally {
    std::size_t samples = 0;
    std::size_t homotopy_failures = 0;
    std::size_t conjugation_failures = 0;
};

IdentityTally identity_sample(const SympMatrix &sigma, std::size_t count, std::uint64_t seed)
{
    const KoszulContext ctx = KoszulContext::from_sigma(sigma);
    const int two_k = static_cast<int>(2 * ctx.k);
    Rng rng(seed);
    std::uniform_int_distribution<int> degree(0, static_cast<int>(ctx.dim()));
    IdentityTally t;
    for (std::size_t s = 0; s < count; ++s) {
        const KoszulCochain c = random_cochain(rng, ctx.pairs, degree(rng), 5, 3, 4);
        ++t.samples;
        const Splitting sp = split(ctx, c);
        const KoszulCochain lhs2 = h2(ctx, delta_prime(ctx, sp.h2_part)) + delta_prime(ctx, h2(ctx, sp.h2_part));
        const KoszulCochain rhs2 =
            scale_by(ctx, sp.h2_part, [](const Bidegree &b) { return Cyclotomic(b.d2 + b.i2); });
        const KoszulCochain lhs1 = h1(ctx, delta_prime(ctx, sp.h1_part)) + delta_prime(ctx, h1(ctx, sp.h1_part));
        const KoszulCochain rhs1 =
            scale_by(ctx, sp.h1_part, [&](const Bidegree &b) { return Cyclotomic(b.d1 + two_k - b.i1); });
        if (lhs2 != rhs2 || lhs1 != rhs1) {
            ++t.homotopy_failures;
        }
        const KoszulCochain conj = xi_transform(
            ctx, delta_sigma(ctx, xi_transform(ctx, c, XiDirection::inverse)), XiDirection::forward);
        if (conj != delta_prime(ctx, c)) {
            ++t.conjugation_failures;
        }
    }
    return t;
}

LambdaWeights generic_lambda(const GroupPtr &g)
{
    LambdaWeights lambda;
    long w = 2;
    const auto by_k = g->classes_by_k();
    if (by_k.count(1) != 0) {
        for (std::size_t cls : by_k.at(1)) {
            lambda[cls] = Cyclotomic(w, w + 1);
            w += 3;
        }
    }
    return lambda;
}

// Multisets of size k (nondecreasing index tuples) over `count` items.
void multisets(std::size_t count, int k, std::size_t from, std::vector<std::size_t> &cur,
               std::vector<std::vector<std::size_t>> &out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < count; ++i) {
        cur.push_back(i);
        multisets(count, k, i, cur, out);
        cur.pop_back();
    }
}

} // namespace

int main()
{
    std::vector<SympMatrix> sigmas;
    std::vector<IdentityTally> tallies;
    const std::size_t per_sigma = 200;
    bool all = true;

    all &= Criterion(1, "-Id, n=1: H0 = H1 = 0, H2 = C omega, witness, window", 5).run([] {
        return sigma_criterion(minus_identity(1), {{0, 0}, {1, 0}, {2, 1}});
    });

    all &= Criterion(2, "Id, n=1: H0 = C, H1 = H2 = 0", 5).run([] {
        return sigma_criterion(SympMatrix::identity(1), {{0, 1}, {1, 0}, {2, 0}});
    });

    all &= Criterion(3, "homotopy identities on H1 and H2").run([&] {
        sigmas = catalog_sigmas();
        tallies = parallel_map(sigmas.size(), [&](std::size_t i) { return identity_sample(sigmas[i], per_sigma, 1000 + i); });
        std::size_t samples = 0, failures = 0;
        bool enough = true;
        for (const auto &t : tallies) {
            samples += t.samples;
            failures += t.homotopy_failures;
            enough = enough && t.samples >= per_sigma;
        }
        return Outcome{failures == 0 && enough, std::to_string(sigmas.size()) + " sigma, " + std::to_string(samples) +
                                                    " cochains, " + std::to_string(failures) + " failures"};
    });

    all &= Criterion(4, "xi Delta_sigma xi^-1 = Delta' on the same sample").run([&] {
        std::size_t samples = 0, failures = 0;
        for (const auto &t : tallies) {
            samples += t.samples;
            failures += t.conjugation_failures;
        }
        return Outcome{failures == 0 && samples >= per_sigma * sigmas.size() && !sigmas.empty(),
                       std::to_string(samples) + " cochains, " + std::to_string(failures) + " failures"};
    });

    all &= Criterion(5, "Bar differential restricts to the Koszul differential").run([] {
        std::size_t cases = 0, failures = 0;
        for (std::size_t n : {1, 2}) {
            for (int k = 1; k <= std::min(3, static_cast<int>(2 * n)); ++k) {
                const BarReport r = bar_subcomplex_check(n, k, 2);
                cases += r.cases;
                failures += r.failures;
            }
        }
        return Outcome{failures == 0 && cases > 0,
                       std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
    });

    all &= Criterion(6, "dim H^2k(G*W) = card Gamma_2k for Z2, Z4, Z6, pm_sp4").run([] {
        Outcome out;
        std::ostringstream msg;
        SigmaOptions opts;
        opts.samples = 2;
        opts.dmax = 4;
        for (const char *name : {"Z2_sp2", "Z4_sp2", "Z6_sp2", "pm_sp4"}) {
            const GroupPtr g = catalog_group(name);
            const GroupReport table = analyze_group(*g);
            std::vector<std::size_t> from_certs(table.poincare.size(), 0);
            for (const ConjClass &cls : g->classes()) {
                const SigmaReport rep = sigma_report(g->element(cls.representative), opts);
                const AltForm &om = g->invariants(cls.representative).omega;
                const bool invariant = project_invariant(*g, cls.centralizer, om) == om;
                out.ok = out.ok && certificates_consistent(rep) && rep.omega_witness && invariant;
                for (const auto &[d, dim] : rep.certified_dims) {
                    from_certs.at(d) += invariant ? dim : 0;
                }
            }
            for (std::size_t d = 1; d < table.poincare.size(); d += 2) {
                out.ok = out.ok && table.poincare[d] == 0;
            }
            out.ok = out.ok && from_certs == table.poincare;
            msg << name << " (";
            for (std::size_t d = 0; d < table.poincare.size(); ++d) {
                msg << (d ? "," : "") << table.poincare[d];
            }
            msg << ") ";
        }
        out.detail = msg.str();
        return out;
    });

    all &= Criterion(7, "C_lambda for Z4: nontrivial per class, zero at lambda = 0").run([] {
        const GroupPtr g = catalog_group("Z4_sp2");
        const LambdaWeights lambda = generic_lambda(g);
        bool ok = lambda.size() == 3 && !build_C_lambda(g, lambda).is_zero();
        for (const ClassWitness &w : lambda_witnesses(g, lambda)) {
            ok = ok && w.component_matches && w.witness;
        }
        LambdaWeights zero;
        for (const auto &[cls, w] : lambda) {
            zero[cls] = Cyclotomic(0);
        }
        ok = ok && build_C_lambda(g, zero).is_zero();
        for (const ClassWitness &w : lambda_witnesses(g, zero)) {
            ok = ok && w.component_matches && !w.witness;
        }
        return Outcome{ok, "3 classes in Gamma_2"};
    });

    all &= Criterion(8, "PBW: confluence, counts to degree 6, negative control", 30).run([] {
        Outcome out;
        std::ostringstream msg;
        for (const char *name : {"Z2_sp2", "Z4_sp2"}) {
            const GroupPtr g = catalog_group(name);
            const RewriteSystem r(g, generic_lambda(g));
            const RewriteSystem r0(g, {});
            const ConfluenceReport rep = confluence_check(r);
            out.ok = out.ok && rep.all_resolved();
            msg << name << " " << rep.pairs.size() << " pairs";
            for (int d = 0; d <= 6; ++d) {
                const std::size_t count = normal_monomials(g, d).size();
                out.ok = out.ok && pbw_span_rank(r, d, Cyclotomic(1)) == count &&
                         pbw_span_rank(r0, d, Cyclotomic(1)) == count;
            }
            msg << ", counts ok; ";
        }
        const GroupPtr g = catalog_group("Z2_sp2");
        const RewriteSystem bad = RewriteSystem(g, generic_lambda(g)).corrupted(0, 1, SRAElement::basis_vector(g, 0));
        const std::size_t failures = confluence_check(bad).failures();
        out.ok = out.ok && failures > 0;
        msg << "corrupted table: " << failures << " unresolved";
        out.detail = msg.str();
        return out;
    });

    all &= Criterion(9, "Berezin expansion, k <= 3, total degree <= 5, Z2").run([] {
        const GroupPtr g = catalog_group("Z2_sp2");
        const RewriteSystem r(g, generic_lambda(g));
        const std::vector<SRAElement> monomials = normal_monomials(g, 5);
        std::vector<std::vector<std::size_t>> tuples;
        for (int k = 1; k <= 3; ++k) {
            std::vector<std::size_t> cur;
            multisets(monomials.size(), k, 0, cur, tuples);
        }
        struct Job {
            std::size_t a;
            const std::vector<std::size_t> *args;
        };
        std::vector<Job> jobs;
        for (std::size_t a = 0; a < monomials.size(); ++a) {
            for (const auto &t : tuples) {
                int total = monomials[a].degree();
                for (std::size_t i : t) {
                    total += monomials[i].degree();
                }
                if (total <= 5) {
                    jobs.push_back({a, &t});
                }
            }
        }
        const auto results = parallel_map(jobs.size(), [&](std::size_t j) {
            std::vector<SRAElement> args;
            for (std::size_t i : *jobs[j].args) {
                args.push_back(monomials[i]);
            }
            return berezin_difference(r, monomials[jobs[j].a], args, 5).is_zero() ? 0 : 1;
        });
        std::size_t failures = 0;
        for (int f : results) {
            failures += static_cast<std::size_t>(f);
        }
        // k = 1 pins B_1: a a1 = <a, a1> + B_1 [a1, a] holds for B_1 = -1/2 and not for +1/2
        const SRAElement p = SRAElement::basis_vector(g, 0);
        const SRAElement q = SRAElement::basis_vector(g, 1);
        const SRAElement sym = symmetrized_product(r, {p, q});
        const SRAElement comm = sra_commutator(r, q, p);
        const bool pinned = bernoulli(1) == mpq_class(-1, 2) &&
                            r.mul(p, q) == sym + HbarPoly(Cyclotomic(-1, 2)) * comm &&
                            r.mul(p, q) != sym + HbarPoly(Cyclotomic(1, 2)) * comm;
        return Outcome{failures == 0 && pinned && !jobs.empty(), std::to_string(jobs.size()) + " cases, " +
                                                                     std::to_string(failures) + " nonzero, B1 " +
                                                                     (pinned ? "pinned" : "not pinned")};
    });

    all &= Criterion(10, "hbar = 0 products agree with G*W, degree <= 4, Z2").run([] {
        const GroupPtr g = catalog_group("Z2_sp2");
        const HbarZeroReport rep = hbar_zero_compare(RewriteSystem(g, generic_lambda(g)), 4);
        return Outcome{rep.mismatches == 0 && rep.section_mismatches == 0 && rep.pairs_checked > 0,
                       std::to_string(rep.pairs_checked) + " pairs, " + std::to_string(rep.mismatches) +
                           " mismatches"};
    });

    std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
