#include <weylcoh/analysis.hpp>

namespace weylcoh
{

GroupReport analyze_group(const FiniteSympGroup &g)
{
    GroupReport r;
    r.order = g.order();
    r.pairs = g.pairs();
    r.poincare.assign(2 * g.pairs() + 1, 0);
    const auto &classes = g.classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const ConjClass &cls = classes[c];
        r.classes.push_back({c, cls.representative, cls.members.size(), cls.centralizer.size(), cls.k});
        ++r.poincare.at(2 * cls.k);
    }
    return r;
}

namespace
{

WeylCochain constant_cochain(const AltForm &f)
{
    WeylCochain c(f.pairs(), f.degree());
    for (const auto &[set, v] : f.values()) {
        c.add(set, WeylElement::constant(f.pairs(), v));
    }
    return c;
}

} // namespace

SigmaReport sigma_report(const SympMatrix &sigma, const SigmaOptions &opts)
{
    SigmaReport rep;
    rep.ctx = KoszulContext::from_sigma(sigma);
    const KoszulContext &ctx = rep.ctx;
    const int top = static_cast<int>(ctx.split_axis());
    const int dim = static_cast<int>(ctx.dim());
    const KoszulCochain omega = omega_cochain(ctx);
    Rng rng(opts.seed);
    std::uniform_int_distribution<long> scalar(1, 5);

    auto certify = [&](int degree, const KoszulCochain &c) {
        ContractionCertificate cert = contract_sigma(ctx, c);
        rep.all_verified = rep.all_verified && cert.verified && verify_certificate(ctx, c, cert, true);
        rep.certificates[degree].push_back({c, std::move(cert)});
    };

    for (int d = 0; d <= dim; ++d) {
        rep.certificates[d];
        if (d == top) {
            certify(d, omega);
        }
        for (int s = 0; s < opts.samples && d > 0; ++s) {
            const KoszulCochain b0 = random_cochain(rng, ctx.pairs, d - 1, opts.coefficient_degree);
            KoszulCochain c = delta_sigma(ctx, b0);
            if (d == top) {
                KoszulCochain shifted = c;
                shifted += Cyclotomic(scalar(rng)) * omega;
                certify(d, shifted);
            }
            certify(d, c);
        }
    }

    rep.omega_witness = noncoboundary_witness(ctx, omega);
    {
        const KoszulCochain b0 = random_cochain(rng, ctx.pairs, std::max(top - 1, 0), opts.coefficient_degree);
        const KoszulCochain cob = top > 0 ? delta_prime(ctx, b0) : KoszulCochain(ctx.pairs, 0);
        rep.coboundary_witness = noncoboundary_witness(ctx, cob);
        KoszulCochain shifted = cob;
        shifted += omega;
        rep.shifted_witness = noncoboundary_witness(ctx, shifted);
    }

    bool omega_certified = false;
    for (const auto &item : rep.certificates[top]) {
        if (item.cocycle == omega && item.cert.s == Cyclotomic(1) && item.cert.b.is_zero()) {
            omega_certified = true;
        }
    }
    for (int d = 0; d <= dim; ++d) {
        bool zero_s = true;
        for (const auto &item : rep.certificates[d]) {
            zero_s = zero_s && (d == top || item.cert.s.is_zero());
        }
        rep.certified_dims[d] = (d == top && omega_certified && rep.omega_witness) ? 1 : 0;
        if (d != top && !zero_s) {
            rep.all_verified = false;
        }
    }

    rep.truncated = truncated_cohomology_dims(ctx, opts.dmax);
    rep.truncated_agrees = true;
    for (int d = 0; d <= dim; ++d) {
        auto it = rep.truncated.dims.find(d);
        const std::size_t t = it == rep.truncated.dims.end() ? 0 : it->second;
        rep.truncated_agrees = rep.truncated_agrees && t == rep.certified_dims[d];
    }
    return rep;
}

std::vector<ClassWitness> lambda_witnesses(const GroupPtr &group, const LambdaWeights &lambda)
{
    const std::size_t n = group->pairs();
    const LambdaCochain c = build_C_lambda(group, lambda);
    const auto tilde = class_decompose(*group, family_from_lambda(c), n, 2);
    std::vector<ClassWitness> out;
    for (const auto &[cls, w] : lambda) {
        const ConjClass &gamma = group->classes().at(cls);
        ClassWitness cw;
        cw.cls = cls;
        cw.weight = w;
        WeylCochain expected = constant_cochain(group->invariants(gamma.representative).omega);
        expected = w * expected;
        auto it = tilde.find(cls);
        const WeylCochain component = it == tilde.end() ? WeylCochain(n, 2) : it->second;
        cw.component_matches = component == expected;
        const KoszulContext ctx = KoszulContext::from_invariants(group->invariants(gamma.representative));
        cw.witness = noncoboundary_witness(ctx, to_darboux(ctx, component));
        out.push_back(cw);
    }
    return out;
}

} // namespace weylcoh
