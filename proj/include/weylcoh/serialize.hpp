#ifndef WEYLCOH_SERIALIZE_HPP
#define WEYLCOH_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include <weylcoh/koszul.hpp>
#include <weylcoh/sra.hpp>

namespace weylcoh
{

using json = nlohmann::ordered_json;

// Scalars: a string "a0 + a1*z + ..." for rationals, otherwise
// {"order": N, "value": "..."}. Readers also accept integers and plain strings
// read at a caller-supplied order.
json scalar_to_json(const Cyclotomic &c);
Cyclotomic scalar_from_json(const json &j, int default_order = 1);

// Matrix as a list of rows of entry strings, all written at `order`.
json matrix_to_json(const Matrix &m, int order);
// Accepts a list of rows or a flat row-major list of dim*dim entries.
Matrix matrix_from_json(const json &j, std::size_t dim, int order);

// Group description {"n", "cyclotomic_order", "generators": [...]}.
json group_to_json(const FiniteSympGroup &g);
// Throws ParseError, NonSymplecticMatrix, OrderExceedsCap.
GroupPtr group_from_json(const json &j, std::size_t cap = default_group_cap);
// Catalog name, or a path to a JSON description when the name ends in ".json".
GroupPtr load_group(const std::string &name_or_path, std::size_t cap = default_group_cap);

// [{"exponent": [...], "coeff": scalar}, ...]
json weyl_to_json(const WeylElement &w);
WeylElement weyl_from_json(const json &j, std::size_t pairs);

// {"pairs", "degree", "values": [{"indices": [1-based axes], "value": weyl}]}
json cochain_to_json(const WeylCochain &c);
WeylCochain cochain_from_json(const json &j);

json form_to_json(const AltForm &f);

json smash_to_json(const SmashElement &x);
json sra_to_json(const SRAElement &x);
json hbar_to_json(const HbarPoly &h);

// {"sigma", "coordinates": "darboux", "k", "cocycle", "s", "b", "verified"}
json certificate_to_json(const KoszulContext &ctx, const KoszulCochain &cocycle, const ContractionCertificate &cert);
struct LoadedCertificate {
    SympMatrix sigma;
    KoszulCochain cocycle;
    ContractionCertificate cert;
};
LoadedCertificate certificate_from_json(const json &j);

json confluence_to_json(const ConfluenceReport &r);

} // namespace weylcoh

#endif
