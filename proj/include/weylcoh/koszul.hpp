#ifndef WEYLCOH_KOSZUL_HPP
#define WEYLCOH_KOSZUL_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <weylcoh/smash.hpp>
#include <weylcoh/sympgroup.hpp>

namespace weylcoh
{

// Data of W_sigma in its diagonal Darboux basis Z_(2i-1) = P_i, Z_(2i) = Q_i.
// Cochains of the Koszul complex are WeylCochain values whose polynomial
// variables and wedge indices both refer to this basis (axis 2i is P_(i+1),
// axis 2i+1 is Q_(i+1)). The first 2k axes span V_sigma.
struct KoszulContext {
    SigmaInvariants inv;
    std::size_t pairs = 0;
    std::size_t k = 0;
    std::vector<Cyclotomic> alpha; // per pair, 1 for pairs >= k

    static KoszulContext from_sigma(const SympMatrix &sigma);
    static KoszulContext from_invariants(SigmaInvariants inv);

    std::size_t dim() const { return 2 * pairs; }
    std::size_t split_axis() const { return 2 * k; }
};

using KoszulCochain = WeylCochain;

// Canonical coordinates <-> Darboux coordinates of the context, for both
// the polynomial values and the wedge arguments.
KoszulCochain to_darboux(const KoszulContext &ctx, const WeylCochain &c);
WeylCochain from_darboux(const KoszulContext &ctx, const KoszulCochain &c);
// A group element acting in Darboux coordinates (B^-1 s B).
SympMatrix darboux_matrix(const KoszulContext &ctx, const SympMatrix &s);
// pi_s(c)(v) = s(c(s^-1 v)) with s already in Darboux coordinates.
KoszulCochain pi_darboux(const SympMatrix &s_darboux, const KoszulCochain &c);

// Delta_sigma with T_(2i-1) = (1 - a_i) m_P + 1/2 (1 + a_i) d/dQ and
// T_(2i) = (1 - 1/a_i) m_Q - 1/2 (1 + 1/a_i) d/dP. Throws BasisMismatch.
KoszulCochain delta_sigma(const KoszulContext &ctx, const KoszulCochain &c);
// Delta' = sum_(i <= 2k) m_Z (x) mu_Z + sum_(i > 2k) d/dZ (x) mu_Z.
KoszulCochain delta_prime(const KoszulContext &ctx, const KoszulCochain &c);

// theta = exp(-1/2 sum_(i<k) beta_i d2/dP_i dQ_i), beta = (1 + a)/(1 - a);
// sign = -1 gives theta^-1.
WeylElement theta(const KoszulContext &ctx, const WeylElement &f, int sign = 1);
// Algebra automorphism A: P_i -> P_i/(1 - a_i), Q_i -> Q_i/(1 - 1/a_i) for
// i < k and P_i -> -Q_i, Q_i -> P_i on the fixed block.
WeylElement a_map(const KoszulContext &ctx, const WeylElement &f, bool inverse = false);

enum class XiDirection { forward, inverse };
// xi = A o theta on the coefficients; Delta' = xi Delta_sigma xi^-1.
// Throws DegenerateAlpha when some alpha_i = 1 with i < k.
KoszulCochain xi_transform(const KoszulContext &ctx, const KoszulCochain &c, XiDirection dir);

// omega_sigma as a Koszul cochain: Z*_1 ^ ... ^ Z*_2k with coefficient 1. It
// is fixed by xi, so it serves both Delta_sigma and Delta'.
KoszulCochain omega_cochain(const KoszulContext &ctx);

// Bidegree of one monomial term: W-degree and wedge count on V_sigma (1) and
// on the fixed block (2).
struct Bidegree {
    int d1 = 0;
    int i1 = 0;
    int d2 = 0;
    int i2 = 0;
};
Bidegree bidegree(const KoszulContext &ctx, WedgeMask set, const WeylElement::Exponent &e);
// Termwise scaling by f(bidegree).
KoszulCochain scale_by(const KoszulContext &ctx, const KoszulCochain &c,
                       const std::function<Cyclotomic(const Bidegree &)> &f);

// K = (constants on V_sigma with full wedge 2k) + H1 + H2:
// top: d1 = d2 = 0, i1 = 2k, i2 = 0; H2: d2 + i2 > 0; H1: the rest.
struct Splitting {
    Cyclotomic top;
    KoszulCochain h1_part;
    KoszulCochain h2_part;
};
Splitting split(const KoszulContext &ctx, const KoszulCochain &c);

// h1 = sum_(i <= 2k) d/dZ_i (x) i_Z_i, h2 = sum_(i > 2k) m_Z_i (x) i_Z_i.
KoszulCochain h1(const KoszulContext &ctx, const KoszulCochain &c);
KoszulCochain h2(const KoszulContext &ctx, const KoszulCochain &c);
enum class Summand { h1, h2 };
// h1 or h2 restricted to its summand; throws WrongSummand otherwise.
KoszulCochain homotopy_step(const KoszulContext &ctx, Summand part, const KoszulCochain &c);

// c = s omega + D(b), with D = Delta' or Delta_sigma.
struct ContractionCertificate {
    int degree = 0;
    Cyclotomic s;
    KoszulCochain b;
    bool verified = false;
};
// For a Delta'-cocycle. Throws NotACocycle.
ContractionCertificate contract(const KoszulContext &ctx, const KoszulCochain &c);
// For a Delta_sigma-cocycle, through xi. Throws NotACocycle.
ContractionCertificate contract_sigma(const KoszulContext &ctx, const KoszulCochain &c);
// Recomputes s omega + Delta(b) and compares with c.
bool verify_certificate(const KoszulContext &ctx, const KoszulCochain &c, const ContractionCertificate &cert,
                        bool sigma_differential);

// True iff c(Z_1, ..., Z_2k) has a nonzero constant term. Throws NotACocycle.
bool noncoboundary_witness(const KoszulContext &ctx, const KoszulCochain &c);

// Exact cohomology of the Delta' complex restricted to the (e1, e2) pieces
// with e1 = d1 - i1, e2 = d2 + i2 that lie entirely in W-degree <= dmax.
// Each such piece is a finite subcomplex, so the sums are exact for it.
struct TruncatedCohomology {
    std::map<int, std::size_t> dims;
    std::size_t interior_pieces = 0;
    // Pieces that meet the window but are cut by it; left out of dims.
    std::vector<std::pair<int, int>> boundary_pieces;
};
// Throws WindowTooSmall when dmax < 2.
TruncatedCohomology truncated_cohomology_dims(const KoszulContext &ctx, int dmax);

// Normalized Bar complex check for the untwisted Weyl bimodule: for every
// k-subset of the canonical basis and all monomials a, b of degree <= coeff_degree,
// compares d^B(iota(a (x) Z_I (x) b)) with iota(d^K(a (x) Z_I (x) b)).
struct BarReport {
    std::size_t cases = 0;
    std::size_t failures = 0;
};
// Throws DegreeCapExceeded for k > 3 unless allow_degree_four (k <= 4).
BarReport bar_subcomplex_check(std::size_t pairs, int k, int coeff_degree, bool allow_degree_four = false);

} // namespace weylcoh

#endif
