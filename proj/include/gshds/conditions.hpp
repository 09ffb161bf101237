#pragma once

#include <string>
#include <vector>

#include "gshds/galgebra.hpp"
#include "gshds/galois.hpp"
#include "gshds/incidence.hpp"
#include "gshds/matrix.hpp"
#include "gshds/qrs.hpp"

namespace gshds {

/// The lambda matrix of GR(p^2, 2 alpha + 1) with quadratic-residue chosen
/// l_i: lambda_{s,t} = sum_j sym(Tr(l_j (1 + p(l'_s + l'_t)))) where sym
/// reads the entry rule of the incidence matrix (0 unless the trace is p
/// times a unit).  Indexed by the l' blocks, identified with
/// K = (Z/p)^{2 alpha}.
struct LambdaInstance {
    long p = 0;
    int alpha = 0;
    RingSpec ring;
    OrbitReps reps;
    BlockDecomposition blocks;
    GroupSpec K;
    std::vector<GroupElement> k_of_block;  // l' index -> element of K
    IntMat L;
    int eps0 = 0;  // A_{L,L_1} j = eps0 p^alpha j

    bool eigen_ok = false;      // J_{H,s,t} j = lambda_{s,t} j
    bool eps0_ok = false;
    bool square_ok = false;     // L^2 = p^{2a-1}(p^{2a} I - J)
    bool symmetric_ok = false;  // L^T = L
    bool row_sums_zero = false;
    bool identities_ok = false;
    std::string failure;
};

/// embedding_skip selects the n-th primitive modulus, giving an alternate
/// embedding for cross-checking the identities.
LambdaInstance lambda_matrix(long p, int alpha, int embedding_skip = 0);

/// L_0(x) = sum_i lambda_{1,i} x^{k_i} in Z[K], with its identity family:
/// zero principal character, |chi(L_0)|^2 = p^{4a-1}, the convolution
/// identity, and the regular-representation intertwining.
struct LZeroInstance {
    AlgebraElement L0;
    bool chi0_zero = false;
    bool char_norm_ok = false;
    bool convolution_ok = false;
    bool intertwine_ok = false;
    bool all_ok() const {
        return chi0_zero && char_norm_ok && convolution_ok && intertwine_ok;
    }
};
LZeroInstance build_L0(const LambdaInstance& inst);

/// Full provenance record (modulus, rep lists, lambda row, identity
/// verdicts); deterministic JSON.
std::string l0_artifact_json(const LambdaInstance& inst,
                             const LZeroInstance& lz);

/// Candidate witness for the seven necessary conditions on
/// G = (Z/p) x (Z/p^2)^{2 alpha + 1}.
struct ABWitness {
    AlgebraElement A, B;  // over K
    long long a0 = 0, b0 = 0;
};

struct AbCheck {
    bool ok = false;
    std::string first_violation;
};

/// The seven-part witness check (convolution identities, principal-character
/// formulas, parities).  Reports the first violated part.
AbCheck check_ab_witness(const LambdaInstance& inst, const LZeroInstance& lz,
                         const ABWitness& w);

/// Raw-data entry point: d' a +-1 vector over the Galois-ordered H_1 orbits
/// (blocks of length m), nu' odd integers in (-p, p).  Builds the inner
/// products a_i = <d'_i, j>, b_i = <nu'_i, j> and checks the proof equations
/// followed by the witness conditions.
AbCheck ab_conditions_check(const LambdaInstance& inst, const LZeroInstance& lz,
                            const std::vector<int>& dprime,
                            const std::vector<long long>& nuprime,
                            ABWitness* witness_out = nullptr);

struct AbSearchResult {
    std::vector<ABWitness> witnesses;
    long long pairs_examined = 0;
    bool exhausted = false;
    long long resume_token = 0;  // next pair index when not exhausted
    std::string box_description;
};

/// Enumerates (A, B) pairs with odd coefficients bounded by coeff_bound and
/// keeps those passing all seven conditions (a0, b0 derived from the
/// principal characters).  budget caps the pairs examined in this call;
/// resume continues a previous partial scan.
AbSearchResult ab_feasibility_search(const LambdaInstance& inst,
                                     const LZeroInstance& lz, int coeff_bound,
                                     long long budget, long long resume = 0);

/// The alpha = 1 refinements for G = (Z/p) x (Z/p^2)^3: D'' = D n L must be
/// a GSHDS in L and nu_{G,H'}(D) = p^2 d_{D n L}.  Runs diagnostically on
/// any QRS and reports which sub-conditions hold.
struct Alpha1Report {
    bool group_shape_ok = false;
    bool input_is_qrs = false;
    std::string qrs_failure;
    bool restriction_is_gshds = false;
    std::string restriction_reason;
    std::vector<long long> nu_values;       // nu_{G,H'} at the rep lifts
    std::vector<long long> expected_values; // p^2 d_{D n L}
    bool nu_identity_ok = false;
};
Alpha1Report alpha1_checks(const AlgebraElement& D, long n0 = 0);

/// D(x)^{p^k} = c[1] + a D(x) + b D(x^{n0}) for a verified GSHDS, with the
/// binomial closed form for a - b, the exact divisibility v_p(a-b) = k, and
/// the difference-intersection divisibility for L = Ker(mu_{p^k}).
struct PowerCoeffs {
    int k = 0;
    long long pk = 1;
    long long c = 0, a = 0, b = 0;
    long long a_minus_b_closed = 0;
    int vp_a_minus_b = 0;
    bool identity_ok = false;
    bool closed_form_ok = false;
    bool vp_ok = false;
    bool nu_divisible_ok = false;
    std::vector<long long> nu_values;  // at the H_1-orbit reps of H = p^k G
    bool orbit_congruence_ok = false;  // the Z[H] congruence with C_H
};
PowerCoeffs power_coeffs(const AlgebraElement& D, int k, long n0 = 0);
std::string power_coeffs_json(const GroupSpec& G, const PowerCoeffs& pc);

/// Mechanical application of the known non-existence rules.
struct BoundRule {
    std::string rule;
    bool applicable = false;
    bool excluded = false;
    std::string detail;
};
struct BoundReport {
    GroupSpec group;
    std::vector<BoundRule> rules;
    bool excluded = false;
};
BoundReport exponent_bound_report(const GroupSpec& G);
std::string bound_report_json(const BoundReport& rep);

}  // namespace gshds
