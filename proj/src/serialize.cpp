#include <weylcoh/serialize.hpp>

#include <fstream>
#include <numeric>

#include <weylcoh/catalog.hpp>
#include <weylcoh/errors.hpp>

namespace weylcoh
{

json scalar_to_json(const Cyclotomic &c)
{
    if (c.is_rational()) {
        return c.to_string();
    }
    return json{{"order", c.order()}, {"value", c.to_string()}};
}

Cyclotomic scalar_from_json(const json &j, int default_order)
{
    try {
        if (j.is_number_integer()) {
            return Cyclotomic(j.get<long>());
        }
        if (j.is_string()) {
            return Cyclotomic::parse(j.get<std::string>(), default_order);
        }
        if (j.is_object()) {
            return Cyclotomic::parse(j.at("value").get<std::string>(), j.at("order").get<int>());
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad scalar: ") + e.what());
    }
    throw ParseError("bad scalar: " + j.dump());
}

json matrix_to_json(const Matrix &m, int order)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).to_string(order));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json &j, std::size_t dim, int order)
{
    if (!j.is_array()) {
        throw ParseError("matrix must be a JSON array");
    }
    std::vector<json> flat;
    if (!j.empty() && j.front().is_array()) {
        if (j.size() != dim) {
            throw ParseError("matrix must have " + std::to_string(dim) + " rows");
        }
        for (const auto &row : j) {
            if (!row.is_array() || row.size() != dim) {
                throw ParseError("matrix row must have " + std::to_string(dim) + " entries");
            }
            flat.insert(flat.end(), row.begin(), row.end());
        }
    } else {
        flat.assign(j.begin(), j.end());
    }
    if (flat.size() != dim * dim) {
        throw ParseError("matrix must have " + std::to_string(dim * dim) + " entries");
    }
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < flat.size(); ++i) {
        m(i / dim, i % dim) = scalar_from_json(flat[i], order);
    }
    return m;
}

json group_to_json(const FiniteSympGroup &g)
{
    const int order = g.cyclotomic_order();
    json gens = json::array();
    for (const auto &s : g.generators()) {
        gens.push_back(matrix_to_json(g.element(s).matrix(), order));
    }
    return json{{"n", g.pairs()}, {"cyclotomic_order", order}, {"generators", gens}};
}

GroupPtr group_from_json(const json &j, std::size_t cap)
{
    std::size_t n = 0;
    int order = 1;
    json gens;
    try {
        n = j.at("n").get<std::size_t>();
        order = j.value("cyclotomic_order", 1);
        gens = j.at("generators");
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad group description: ") + e.what());
    }
    if (n == 0 || order < 1 || !gens.is_array()) {
        throw ParseError("bad group description: need n >= 1, cyclotomic_order >= 1, generators list");
    }
    std::vector<SympMatrix> generators;
    for (const auto &g : gens) {
        generators.push_back(SympMatrix::from_matrix(matrix_from_json(g, 2 * n, order)));
    }
    if (generators.empty()) {
        generators.push_back(SympMatrix::identity(n));
    }
    return FiniteSympGroup::close(generators, cap, j.value("name", std::string("custom")));
}

GroupPtr load_group(const std::string &name_or_path, std::size_t cap)
{
    const std::string suffix = ".json";
    if (name_or_path.size() > suffix.size() &&
        name_or_path.compare(name_or_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
        std::ifstream in(name_or_path);
        if (!in) {
            throw ParseError("cannot open " + name_or_path);
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return group_from_json(j, cap);
    }
    return catalog_group(name_or_path, cap);
}

json weyl_to_json(const WeylElement &w)
{
    json terms = json::array();
    for (const auto &[e, c] : w.terms()) {
        terms.push_back(json{{"exponent", e}, {"coeff", scalar_to_json(c)}});
    }
    return terms;
}

WeylElement weyl_from_json(const json &j, std::size_t pairs)
{
    WeylElement w(pairs);
    if (!j.is_array()) {
        throw ParseError("polynomial must be a list of terms");
    }
    for (const auto &t : j) {
        WeylElement::Exponent e;
        try {
            e = t.at("exponent").get<WeylElement::Exponent>();
        } catch (const json::exception &ex) {
            throw ParseError(std::string("bad polynomial term: ") + ex.what());
        }
        if (e.size() != 2 * pairs) {
            throw MismatchedArity("exponent length must be 2n");
        }
        w.add_term(e, scalar_from_json(t.at("coeff")));
    }
    return w;
}

namespace
{

json mask_to_json(WedgeMask set)
{
    json idx = json::array();
    for (std::size_t a : mask_axes(set)) {
        idx.push_back(a + 1);
    }
    return idx;
}

WedgeMask mask_from_json(const json &j, std::size_t dim)
{
    WedgeMask set = 0;
    for (const auto &v : j) {
        const auto a = v.get<std::size_t>();
        if (a < 1 || a > dim) {
            throw AxisOutOfRange("wedge index " + std::to_string(a));
        }
        const WedgeMask bit = WedgeMask(1) << (a - 1);
        if (set & bit) {
            throw ParseError("repeated wedge index");
        }
        set |= bit;
    }
    return set;
}

} // namespace

json cochain_to_json(const WeylCochain &c)
{
    json values = json::array();
    for (const auto &[set, v] : c.values()) {
        values.push_back(json{{"indices", mask_to_json(set)}, {"value", weyl_to_json(v)}});
    }
    return json{{"pairs", c.pairs()}, {"degree", c.degree()}, {"values", values}};
}

WeylCochain cochain_from_json(const json &j)
{
    try {
        const auto pairs = j.at("pairs").get<std::size_t>();
        WeylCochain c(pairs, j.at("degree").get<int>());
        for (const auto &entry : j.at("values")) {
            c.add(mask_from_json(entry.at("indices"), 2 * pairs), weyl_from_json(entry.at("value"), pairs));
        }
        return c;
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad cochain: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("bad cochain: ") + e.what());
    }
}

json form_to_json(const AltForm &f)
{
    json values = json::array();
    for (const auto &[set, v] : f.values()) {
        values.push_back(json{{"indices", mask_to_json(set)}, {"value", scalar_to_json(v)}});
    }
    return json{{"degree", f.degree()}, {"values", values}};
}

json smash_to_json(const SmashElement &x)
{
    json terms = json::array();
    for (const auto &[g, a] : x.terms()) {
        terms.push_back(json{{"g", g}, {"poly", weyl_to_json(a)}, {"text", a.to_string()}});
    }
    return terms;
}

json hbar_to_json(const HbarPoly &h)
{
    json out = json::object();
    for (const auto &[p, c] : h.coefficients()) {
        out[std::to_string(p)] = scalar_to_json(c);
    }
    return out;
}

json sra_to_json(const SRAElement &x)
{
    json terms = json::array();
    for (const auto &[key, c] : x.terms()) {
        terms.push_back(json{{"exponent", key.first}, {"g", key.second}, {"hbar_coeffs", hbar_to_json(c)}});
    }
    return json{{"text", x.to_string()}, {"terms", terms}};
}

json certificate_to_json(const KoszulContext &ctx, const KoszulCochain &cocycle, const ContractionCertificate &cert)
{
    const int order = ctx.inv.sigma.matrix().cyclotomic_order();
    return json{{"sigma", json{{"n", ctx.pairs}, {"cyclotomic_order", order},
                               {"matrix", matrix_to_json(ctx.inv.sigma.matrix(), order)}}},
                {"coordinates", "darboux"},
                {"k", cert.degree},
                {"cocycle", cochain_to_json(cocycle)},
                {"s", scalar_to_json(cert.s)},
                {"b", cochain_to_json(cert.b)},
                {"verified", cert.verified}};
}

LoadedCertificate certificate_from_json(const json &j)
{
    try {
        const json &sj = j.at("sigma");
        const auto n = sj.at("n").get<std::size_t>();
        const int order = sj.value("cyclotomic_order", 1);
        LoadedCertificate out{SympMatrix::from_matrix(matrix_from_json(sj.at("matrix"), 2 * n, order)),
                              cochain_from_json(j.at("cocycle")), ContractionCertificate{}};
        out.cert.degree = j.at("k").get<int>();
        out.cert.s = scalar_from_json(j.at("s"));
        out.cert.b = cochain_from_json(j.at("b"));
        out.cert.verified = j.value("verified", false);
        if (j.value("coordinates", std::string("darboux")) != "darboux") {
            throw ParseError("certificates are stored in Darboux coordinates");
        }
        return out;
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad certificate: ") + e.what());
    }
}

json confluence_to_json(const ConfluenceReport &r)
{
    json pairs = json::array();
    for (const auto &p : r.pairs) {
        json entry{{"pair", p.label}, {"resolved", p.resolved}};
        if (!p.resolved) {
            entry["left"] = p.left.to_string();
            entry["right"] = p.right.to_string();
        }
        pairs.push_back(std::move(entry));
    }
    return pairs;
}

} // namespace weylcoh
