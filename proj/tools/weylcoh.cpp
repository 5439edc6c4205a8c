#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include <weylcoh/analysis.hpp>
#include <weylcoh/catalog.hpp>
#include <weylcoh/errors.hpp>
#include <weylcoh/serialize.hpp>
#include <weylcoh/sra.hpp>

using namespace weylcoh;

namespace
{

constexpr int exit_bad_input = 2;
constexpr int exit_cap = 3;
constexpr int exit_confluence = 4;

struct Common {
    std::string group = "Z2_sp2";
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 1;
    std::size_t group_cap = default_group_cap;
};

void emit(const Common &c, const std::string &text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) {
        throw ParseError("cannot write " + c.out);
    }
    f << text;
}

std::string dump(const json &j)
{
    return j.dump(2) + "\n";
}

void require_json(const Common &c)
{
    if (c.format != "json") {
        throw ParseError("CSV output is only available for cohomology tables");
    }
}

json class_json(const FiniteSympGroup &g, const ClassSummary &s)
{
    return json{{"class", s.index},
                {"representative", s.representative},
                {"representative_matrix", matrix_to_json(g.element(s.representative).matrix(), g.cyclotomic_order())},
                {"size", s.size},
                {"centralizer_order", s.centralizer_order},
                {"k", s.k}};
}

int cmd_group_analyze(const Common &c)
{
    const GroupPtr g = load_group(c.group, c.group_cap);
    const GroupReport r = analyze_group(*g);
    if (c.format == "csv") {
        std::ostringstream os;
        os << "degree,dim\n";
        for (std::size_t d = 0; d < r.poincare.size(); ++d) {
            os << d << ',' << r.poincare[d] << '\n';
        }
        emit(c, os.str());
        return 0;
    }
    json classes = json::array();
    for (const auto &s : r.classes) {
        classes.push_back(class_json(*g, s));
    }
    json table = json::array();
    for (std::size_t d = 0; d < r.poincare.size(); ++d) {
        table.push_back(json{{"degree", d}, {"dim", r.poincare[d]}});
    }
    emit(c, dump(json{{"group", g->name()},
                      {"description", group_to_json(*g)},
                      {"order", r.order},
                      {"classes", classes},
                      {"poincare", table}}));
    return 0;
}

struct CohomologyArgs {
    long element = -1;
    long cls = -1;
    int dmax = 6;
    int samples = 4;
};

int cmd_cohomology(const Common &c, const CohomologyArgs &a)
{
    if (a.dmax > 12) {
        throw CapExceeded("degree cap " + std::to_string(a.dmax) + " exceeds 12");
    }
    const GroupPtr g = load_group(c.group, c.group_cap);
    std::vector<std::size_t> elements;
    if (a.element >= 0) {
        if (static_cast<std::size_t>(a.element) >= g->order()) {
            throw ParseError("element index outside the group");
        }
        elements.push_back(static_cast<std::size_t>(a.element));
    } else if (a.cls >= 0) {
        if (static_cast<std::size_t>(a.cls) >= g->classes().size()) {
            throw UnknownClassKey("class " + std::to_string(a.cls));
        }
        elements.push_back(g->classes()[static_cast<std::size_t>(a.cls)].representative);
    } else {
        for (const auto &cls : g->classes()) {
            elements.push_back(cls.representative);
        }
    }

    SigmaOptions opts;
    opts.dmax = a.dmax;
    opts.samples = a.samples;
    opts.seed = c.seed;
    json results = json::array();
    std::ostringstream csv;
    csv << "element,degree,certified,truncated\n";
    bool all_ok = true;
    for (std::size_t e : elements) {
        const SigmaReport rep = sigma_report(g->element(e), opts);
        json certs = json::array();
        bool roundtrip = true;
        for (const auto &[deg, items] : rep.certificates) {
            for (const auto &item : items) {
                json cj = certificate_to_json(rep.ctx, item.cocycle, item.cert);
                const LoadedCertificate back = certificate_from_json(json::parse(cj.dump()));
                const KoszulContext ctx = KoszulContext::from_sigma(back.sigma);
                roundtrip = roundtrip && verify_certificate(ctx, back.cocycle, back.cert, true);
                certs.push_back(std::move(cj));
            }
        }
        json dims = json::object();
        json trunc = json::object();
        for (const auto &[d, v] : rep.certified_dims) {
            dims[std::to_string(d)] = v;
            auto it = rep.truncated.dims.find(d);
            const std::size_t t = it == rep.truncated.dims.end() ? 0 : it->second;
            trunc[std::to_string(d)] = t;
            csv << e << ',' << d << ',' << v << ',' << t << '\n';
        }
        json boundary = json::array();
        for (const auto &[e1, e2] : rep.truncated.boundary_pieces) {
            boundary.push_back(json::array({e1, e2}));
        }
        json alphas = json::array();
        for (const auto &al : rep.ctx.alpha) {
            alphas.push_back(scalar_to_json(al));
        }
        all_ok = all_ok && rep.all_verified && roundtrip && rep.truncated_agrees;
        results.push_back(json{
            {"element", e},
            {"class", g->class_of(e)},
            {"sigma", matrix_to_json(g->element(e).matrix(), g->cyclotomic_order())},
            {"k", rep.ctx.k},
            {"alpha", alphas},
            {"omega", form_to_json(rep.ctx.inv.omega)},
            {"certificates", certs},
            {"all_verified", rep.all_verified},
            {"roundtrip_verified", roundtrip},
            {"noncoboundary_witness",
             json{{"omega", rep.omega_witness},
                  {"sampled_coboundary", rep.coboundary_witness},
                  {"omega_plus_coboundary", rep.shifted_witness}}},
            {"certified_dims", dims},
            {"truncated", json{{"dmax", a.dmax},
                               {"dims", trunc},
                               {"interior_pieces", rep.truncated.interior_pieces},
                               {"boundary_pieces_excluded", boundary}}},
            {"truncated_agrees", rep.truncated_agrees}});
    }
    if (c.format == "csv") {
        emit(c, csv.str());
    } else {
        emit(c, dump(json{{"group", g->name()}, {"seed", c.seed}, {"results", results}, {"ok", all_ok}}));
    }
    return 0;
}

LambdaWeights parse_lambda(const FiniteSympGroup &g, const std::vector<std::string> &items)
{
    LambdaWeights lambda;
    for (const auto &item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParseError("lambda entries look like <class>=<value>: " + item);
        }
        std::size_t cls = 0;
        try {
            std::size_t used = 0;
            cls = std::stoul(item.substr(0, eq), &used);
            if (used != eq) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw ParseError("bad class index in " + item);
        }
        if (cls >= g.classes().size() || g.classes()[cls].k != 1) {
            throw UnknownClassKey("class " + std::to_string(cls) + " is not a symplectic reflection class");
        }
        lambda[cls] = Cyclotomic::parse(item.substr(eq + 1), g.cyclotomic_order());
    }
    return lambda;
}

TVWord random_word(Rng &rng, const FiniteSympGroup &g, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, 2 * g.pairs() + g.order() - 1);
    TVWord w;
    const std::size_t l = len(rng);
    for (std::size_t t = 0; t < l; ++t) {
        const std::size_t x = letter(rng);
        if (x < 2 * g.pairs()) {
            w.letters.push_back(basis_letter(g.pairs(), x));
        } else {
            w.letters.push_back(GroupLetter{x - 2 * g.pairs()});
        }
    }
    return w;
}

TVWord concat(const TVWord &a, const TVWord &b)
{
    TVWord w{a.coeff * b.coeff, a.letters};
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

json check_nf(const RewriteSystem &r, Rng &rng, int samples)
{
    const auto &g = *r.group();
    const std::size_t n = r.pairs();
    std::size_t relation_failures = 0;
    std::size_t equivariance_failures = 0;
    std::size_t ring_failures = 0;
    json relations = json::array();
    for (std::size_t i = 0; i < r.dim(); ++i) {
        for (std::size_t j = i + 1; j < r.dim(); ++j) {
            const SRAElement ji = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {basis_letter(n, j), basis_letter(n, i)}});
            const SRAElement ij = r.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {basis_letter(n, i), basis_letter(n, j)}});
            if (ji - ij != r.kappa(i, j)) {
                ++relation_failures;
            }
            relations.push_back(json{{"word", "e" + std::to_string(j + 1) + " e" + std::to_string(i + 1)},
                                     {"normal_form", ji.to_string()}});
            for (std::size_t h = 0; h < g.order(); ++h) {
                const TVWord ad{HbarPoly(Cyclotomic(1)),
                                {GroupLetter{h}, basis_letter(n, j), basis_letter(n, i), GroupLetter{g.inverse(h)}}};
                const auto &m = g.element(h).matrix();
                const TVWord moved{HbarPoly(Cyclotomic(1)), {VectorLetter{m.column(j)}, VectorLetter{m.column(i)}}};
                if (r.normal_form(ad) != r.normal_form(moved)) {
                    ++equivariance_failures;
                }
            }
        }
    }
    for (int s = 0; s < samples; ++s) {
        const TVWord u = random_word(rng, g, 3);
        const TVWord v = random_word(rng, g, 3);
        if (r.normal_form(concat(u, v)) != r.mul(r.normal_form(u), r.normal_form(v))) {
            ++ring_failures;
        }
    }
    const bool ok = relation_failures == 0 && equivariance_failures == 0 && ring_failures == 0;
    return json{{"ok", ok},
                {"relation_failures", relation_failures},
                {"equivariance_failures", equivariance_failures},
                {"ring_map_samples", samples},
                {"ring_map_failures", ring_failures},
                {"relations", relations}};
}

SRAElement random_sra(Rng &rng, const GroupPtr &g, int max_degree)
{
    const auto monos = normal_monomials(g, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<long> coeff(1, 3);
    std::uniform_int_distribution<int> terms(1, 2);
    SRAElement x(g);
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        x += HbarPoly(Cyclotomic(coeff(rng))) * monos[pick(rng)];
    }
    return x;
}

json check_berezin(const RewriteSystem &r, Rng &rng, int cap, int samples)
{
    std::uniform_int_distribution<int> karg(1, 3);
    std::size_t failures = 0;
    int done = 0;
    int attempts = 0;
    while (done < samples && attempts < 50 * samples) {
        ++attempts;
        const int k = karg(rng);
        const SRAElement a = random_sra(rng, r.group(), 2);
        std::vector<SRAElement> args;
        int total = std::max(a.degree(), 0);
        for (int i = 0; i < k; ++i) {
            args.push_back(random_sra(rng, r.group(), 2));
            total += std::max(args.back().degree(), 0);
        }
        if (total > cap) {
            continue;
        }
        ++done;
        if (!berezin_difference(r, a, args, cap).is_zero()) {
            ++failures;
        }
    }
    return json{{"ok", failures == 0}, {"cases", done}, {"failures", failures},
                {"B1", bernoulli(1).get_str()}};
}

json check_hbar0(const RewriteSystem &r, int cap)
{
    const HbarZeroReport h = hbar_zero_compare(r, cap);
    return json{{"ok", h.mismatches == 0 && h.section_mismatches == 0},
                {"degree_cap", cap},
                {"pairs_checked", h.pairs_checked},
                {"mismatches", h.mismatches},
                {"section_mismatches", h.section_mismatches}};
}

json check_specialize(const RewriteSystem &r, Rng &rng, const Cyclotomic &value, int samples)
{
    const RewriteSystem rc = r.specialized(value);
    std::size_t failures = 0;
    for (int s = 0; s < samples; ++s) {
        const TVWord w = random_word(rng, *r.group(), 4);
        if (specialize_hbar(r.normal_form(w), value) != rc.normal_form(w)) {
            ++failures;
        }
    }
    const std::size_t n = r.pairs();
    const SRAElement qp = rc.normal_form(TVWord{HbarPoly(Cyclotomic(1)), {basis_letter(n, 1), basis_letter(n, 0)}});
    return json{{"ok", failures == 0},
                {"hbar", scalar_to_json(value)},
                {"samples", samples},
                {"failures", failures},
                {"nf_e2_e1", qp.to_string()}};
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

struct SraArgs {
    std::vector<std::string> lambda;
    std::string checks = "nf,confluence,berezin,hbar0,specialize";
    int degree_cap = 4;
    std::string hbar = "1";
    int samples = 20;
};

int cmd_sra(const Common &c, const SraArgs &a)
{
    require_json(c);
    if (a.degree_cap > 8) {
        throw CapExceeded("degree cap " + std::to_string(a.degree_cap) + " exceeds 8");
    }
    if (a.degree_cap < 0) {
        throw ParseError("degree cap must be non-negative");
    }
    const GroupPtr g = load_group(c.group, c.group_cap);
    const LambdaWeights lambda = parse_lambda(*g, a.lambda);
    const RewriteSystem r(g, lambda);
    Rng rng(c.seed);

    std::set<std::string> checks;
    std::stringstream ss(a.checks);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item != "nf" && item != "confluence" && item != "berezin" && item != "hbar0" && item != "specialize") {
            throw ParseError("unknown check " + item);
        }
        checks.insert(item);
    }

    json lambda_json = json::object();
    for (const auto &[cls, w] : lambda) {
        lambda_json[std::to_string(cls)] = scalar_to_json(w);
    }
    json kappa = json::array();
    for (std::size_t i = 0; i < r.dim(); ++i) {
        for (std::size_t j = i + 1; j < r.dim(); ++j) {
            kappa.push_back(json{{"i", i + 1}, {"j", j + 1}, {"kappa", r.kappa(i, j).to_string()}});
        }
    }

    bool c_lambda_zero = true;
    const LambdaCochain c_lambda = build_C_lambda(g, lambda);
    for (const auto &[set, v] : c_lambda.values()) {
        c_lambda_zero = c_lambda_zero && v.is_zero();
    }
    json classes = json::array();
    bool nontrivial = false;
    for (const auto &w : lambda_witnesses(g, lambda)) {
        classes.push_back(json{{"class", w.cls},
                               {"lambda", scalar_to_json(w.weight)},
                               {"component_is_lambda_omega", w.component_matches},
                               {"noncoboundary_witness", w.witness}});
        nontrivial = nontrivial || w.witness;
    }

    json report{{"group", g->name()},
                {"order", g->order()},
                {"lambda", lambda_json},
                {"seed", c.seed},
                {"kappa", kappa},
                {"nontriviality", json{{"C_lambda_zero", c_lambda_zero},
                                       {"not_a_coboundary", nontrivial && !c_lambda_zero},
                                       {"classes", classes}}}};
    json results = json::object();
    int code = 0;
    if (checks.count("nf")) {
        results["nf"] = check_nf(r, rng, a.samples);
    }
    if (checks.count("confluence")) {
        const ConfluenceReport cr = confluence_check(r);
        const RewriteSystem r0(g, {});
        const std::size_t rank = pbw_span_rank(r, a.degree_cap, Cyclotomic(1));
        const std::size_t rank0 = pbw_span_rank(r0, a.degree_cap, Cyclotomic(1));
        const std::size_t expected = binomial(r.dim() + a.degree_cap, a.degree_cap) * g->order();
        results["confluence"] = json{{"ok", cr.all_resolved()},
                                     {"pairs_total", cr.pairs.size()},
                                     {"failures", cr.failures()},
                                     {"pairs", confluence_to_json(cr)},
                                     {"pbw", json{{"degree", a.degree_cap},
                                                  {"rank", rank},
                                                  {"lambda_zero_rank", rank0},
                                                  {"normal_monomials", expected}}}};
        if (!cr.all_resolved()) {
            code = exit_confluence;
        }
    }
    if (checks.count("berezin")) {
        results["berezin"] = check_berezin(r, rng, std::min(a.degree_cap + 1, 6), a.samples);
    }
    if (checks.count("hbar0")) {
        results["hbar0"] = check_hbar0(r, a.degree_cap);
    }
    if (checks.count("specialize")) {
        results["specialize"] = check_specialize(r, rng, Cyclotomic::parse(a.hbar, g->cyclotomic_order()), a.samples);
    }
    report["checks"] = results;
    emit(c, dump(report));
    return code;
}

int cmd_verify_cert(const Common &c, const std::vector<std::string> &files)
{
    require_json(c);
    json out = json::array();
    bool all = true;
    for (const auto &path : files) {
        std::ifstream in(path);
        if (!in) {
            throw ParseError("cannot open " + path);
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        // Accept a single certificate, or the output of `cohomology`.
        std::vector<json> certs;
        if (j.contains("results")) {
            for (const auto &r : j.at("results")) {
                for (const auto &cj : r.at("certificates")) {
                    certs.push_back(cj);
                }
            }
        } else {
            certs.push_back(j);
        }
        std::size_t ok = 0;
        for (const auto &cj : certs) {
            const LoadedCertificate lc = certificate_from_json(cj);
            const KoszulContext ctx = KoszulContext::from_sigma(lc.sigma);
            if (verify_certificate(ctx, lc.cocycle, lc.cert, true)) {
                ++ok;
            }
        }
        all = all && ok == certs.size();
        out.push_back(json{{"file", path}, {"certificates", certs.size()}, {"verified", ok}});
    }
    emit(c, dump(json{{"files", out}, {"ok", all}}));
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact Weyl-algebra cohomology and symplectic reflection algebra toolkit"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--group", common.group, "Catalog name or path to a JSON group description")
            ->capture_default_str();
        sub->add_option("--format", common.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", common.out, "Output file (default stdout)");
        sub->add_option("--seed", common.seed, "Seed for sampled checks")->capture_default_str();
        sub->add_option("--group-cap", common.group_cap, "Largest group order to enumerate")->capture_default_str();
    };

    auto *ga = app.add_subcommand("group-analyze", "Classes, centralizers and the class-count cohomology table");
    add_common(ga);

    CohomologyArgs coh;
    auto *co = app.add_subcommand("cohomology", "Contraction certificates for W_sigma");
    add_common(co);
    co->add_option("--element", coh.element, "Group element index");
    co->add_option("--class", coh.cls, "Conjugacy class index (uses its representative)");
    co->add_option("--degree-cap", coh.dmax, "W-degree window for the truncated cross-check")->capture_default_str();
    co->add_option("--samples", coh.samples, "Sampled cocycles per degree")->capture_default_str();

    SraArgs sra;
    auto *sr = app.add_subcommand("sra", "Symplectic reflection algebra checks");
    add_common(sr);
    sr->add_option("--lambda", sra.lambda, "class=value pairs")->delimiter(',');
    sr->add_option("--checks", sra.checks, "Subset of nf,confluence,berezin,hbar0,specialize")->capture_default_str();
    sr->add_option("--degree-cap", sra.degree_cap, "Degree cap for PBW counts and hbar = 0 comparison")
        ->capture_default_str();
    sr->add_option("--hbar", sra.hbar, "Value used by the specialize check")->capture_default_str();
    sr->add_option("--samples", sra.samples, "Random samples per sampled check")->capture_default_str();

    std::vector<std::string> cert_files;
    auto *vc = app.add_subcommand("verify-cert", "Reload certificates and re-verify them");
    add_common(vc);
    vc->add_option("--cert", cert_files, "Certificate or cohomology output files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_bad_input;
    }

    try {
        if (ga->parsed()) {
            return cmd_group_analyze(common);
        }
        if (co->parsed()) {
            return cmd_cohomology(common, coh);
        }
        if (sr->parsed()) {
            return cmd_sra(common, sra);
        }
        return cmd_verify_cert(common, cert_files);
    } catch (const OrderExceedsCap &e) {
        std::cerr << e.what() << '\n';
        return exit_cap;
    } catch (const CapExceeded &e) {
        std::cerr << e.what() << '\n';
        return exit_cap;
    } catch (const DegreeCapExceeded &e) {
        std::cerr << e.what() << '\n';
        return exit_cap;
    } catch (const weylcoh::error &e) {
        std::cerr << e.what() << '\n';
        return exit_bad_input;
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << '\n';
        return exit_bad_input;
    }
}
