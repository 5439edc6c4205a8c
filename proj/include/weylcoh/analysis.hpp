#ifndef WEYLCOH_ANALYSIS_HPP
#define WEYLCOH_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <weylcoh/koszul.hpp>
#include <weylcoh/random.hpp>
#include <weylcoh/smash.hpp>

namespace weylcoh
{

struct ClassSummary {
    std::size_t index = 0;
    std::size_t representative = 0;
    std::size_t size = 0;
    std::size_t centralizer_order = 0;
    std::size_t k = 0;
};

// Class data and the table degree -> card Gamma_degree/2 (odd degrees 0).
struct GroupReport {
    std::size_t order = 0;
    std::size_t pairs = 0;
    std::vector<ClassSummary> classes;
    std::vector<std::size_t> poincare; // index = cohomological degree 0..2n
};
GroupReport analyze_group(const FiniteSympGroup &g);

struct CertifiedCocycle {
    KoszulCochain cocycle;
    ContractionCertificate cert;
};

// Contraction certificates for the Delta_sigma complex of one element.
// Per degree d the sample holds cocycles Delta_sigma(b0) for random b0, plus
// omega_sigma (and a random multiple of it shifted by a coboundary) in degree 2k.
struct SigmaReport {
    KoszulContext ctx;
    std::map<int, std::vector<CertifiedCocycle>> certificates;
    bool all_verified = true;
    bool omega_witness = false;       // witness on omega_sigma
    bool coboundary_witness = false;  // witness on a sampled coboundary (expected false)
    bool shifted_witness = false;     // witness on omega_sigma + coboundary (expected true)
    // degree -> certified dimension: 1 in degree 2k when omega_sigma has
    // certificate s = 1 and a true witness, 0 elsewhere (the contraction
    // applies to every cocycle there).
    std::map<int, std::size_t> certified_dims;
    TruncatedCohomology truncated;
    bool truncated_agrees = false; // truncated dims equal certified dims
};
struct SigmaOptions {
    int samples = 4;
    int coefficient_degree = 3;
    int dmax = 6;
    std::uint64_t seed = 1;
};
SigmaReport sigma_report(const SympMatrix &sigma, const SigmaOptions &opts = {});

// Per-class nontriviality of C_lambda: the class component lambda(gamma) *
// omega_gamma carries a true noncoboundary witness iff lambda(gamma) != 0.
struct ClassWitness {
    std::size_t cls = 0;
    Cyclotomic weight;
    bool component_matches = false; // decomposition equals lambda(gamma) omega_gamma
    bool witness = false;
};
std::vector<ClassWitness> lambda_witnesses(const GroupPtr &group, const LambdaWeights &lambda);

} // namespace weylcoh

#endif
