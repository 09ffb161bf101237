#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gshds/galgebra.hpp"
#include "gshds/incidence.hpp"
#include "gshds/pgroup.hpp"

namespace gshds {

/// The +-1 encoding of a Quadratic Residue Slice: d_i = +1 picks O_{g_i},
/// d_i = -1 picks O_{g_i}^{(n0)}, indexed like the orbit table.
using SignVector = std::vector<int>;

/// Everything the QRS operations need, built once per group: orbit table,
/// pairing, and the incidence matrix over the same rep choice.
struct QrsContext {
    GroupSpec group;
    Pairing theta;
    UnitOrbitTable table;
    IncidenceMatrix A;
    long r() const { return table.r(); }
};

QrsContext make_qrs_context(const GroupSpec& G,
                            OrbitOrdering ordering = OrbitOrdering::Auto);
QrsContext make_qrs_context(const GroupSpec& G, const Pairing& theta,
                            const UnitOrbitTable& table);

/// Encode a QRS subset; throws with the violated condition if D is not a
/// QRS (wrong size, not square-invariant, or not skew-complementary).
SignVector qrs_encode(const QrsContext& ctx, const AlgebraElement& D);
AlgebraElement qrs_decode(const QrsContext& ctx, const SignVector& d);

/// Difference coefficients A_{G,G_1} d, each an odd integer, and the
/// p-divisibility nu_p = max k with p^k dividing every entry.
struct DiffCoeffVector {
    std::vector<long long> values;
    int nu_p = 0;
};
DiffCoeffVector diff_coeffs(const QrsContext& ctx, const SignVector& d);

/// Divisibility verdict (p^alpha | A d) cross-checked against the
/// convolution oracle; the two must agree.
struct GshdsVerdict {
    bool is_gshds = false;
    std::string reason;  // set when negative
    DiffCoeffVector coeffs;
    GshdsCertificate convolution;  // from check_gshds
    std::optional<SignVector> dual;
};
GshdsVerdict is_gshds(const QrsContext& ctx, const SignVector& d);

/// d-bar = (A d)/p^alpha; requires d to be a GSHDS.
SignVector dual_sign_vector(const QrsContext& ctx, const SignVector& d);

/// Difference coefficients of the restriction of decode(d) to
/// G_l = { g : p^l g = 0 }.
std::vector<long long> restrict_prune(const QrsContext& ctx,
                                      const SignVector& d, int level);

/// JSON certificate for one verified GSHDS.
std::string certificate_json(const QrsContext& ctx, const SignVector& d,
                             const GshdsVerdict& verdict);

struct SearchHit {
    SignVector d;
    GshdsVerdict verdict;
};

struct SearchReport {
    long long candidates = 0;
    bool exhausted = false;
    bool sampled = false;
    std::uint64_t seed = 0;
    int prune_level = 0;
    std::vector<SearchHit> hits;          // deterministic order
    std::map<int, long long> nu_histogram;  // nu_p value -> count
};

/// Deterministic enumeration of all 2^r sign vectors (or a seeded sample
/// when the space exceeds the budget).  Every hit is double-verified by the
/// convolution oracle.  prune_level > 0 cuts branches whose restriction to
/// G_l already violates the divisibility requirement; the nu histogram is
/// only complete when pruning is off.
SearchReport exhaustive_search(const QrsContext& ctx, long long budget,
                               std::uint64_t seed = 0, int jobs = 1,
                               int prune_level = 0);

std::string search_report_json(const QrsContext& ctx, const SearchReport& rep);

/// Difference intersection numbers nu_{G,L}(g, D) = |D n gL| - |D^{(n0)} n gL|
/// together with the identity A_{H,H_1} nu = df_H(D) over H = G/L and the
/// covariance nu(n.g) = (n|p) nu(g).
struct NuVector {
    GroupSpec quotient;
    std::vector<GroupElement> reps;   // H_1-orbit reps of H \ {0}
    std::vector<GroupElement> lifts;  // coset lifts used for the values
    std::vector<long long> values;
    long long nu_zero_coset = 0;  // value at the coset of 0
    bool identity_ok = false;
    bool covariance_ok = false;
};
NuVector diff_intersection(const AlgebraElement& D, const Subgroup& L, long n0);

}  // namespace gshds
