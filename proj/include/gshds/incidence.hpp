#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gshds/galgebra.hpp"
#include "gshds/galois.hpp"
#include "gshds/matrix.hpp"
#include "gshds/pgroup.hpp"

namespace gshds {

/// The incidence matrix A_{G,G_1} on unit-group orbits: entry at
/// (Omega_{theta(g')}, Omega_g) is (n|p) o(p.g) when theta(g')(g) is the
/// primitive p-th root eta_p^n, and 0 otherwise.
struct IncidenceMatrix {
    GroupSpec group;
    IntMat entries;                       // r x r
    std::vector<GroupElement> col_reps;   // g_j (also indexes dual rows)
    std::string pairing_tag;
    OrbitOrdering ordering = OrbitOrdering::Lex;

    long r() const { return static_cast<long>(entries.size()); }
    std::string csv() const;
};

IncidenceMatrix build_A(const GroupSpec& G, const Pairing& theta,
                        const UnitOrbitTable& table);

/// Convenience: canonical table + diagonal pairing (cyclic order for cyclic
/// groups, lex otherwise).
IncidenceMatrix build_A(const GroupSpec& G);

/// Exact check of A^2 = (|G|/p) I.
struct SquareProof {
    bool ok = false;
    long long scalar = 0;  // |G|/p
    std::optional<std::pair<long, long>> counterexample;
    long long got = 0, want = 0;
};
SquareProof verify_A_square(const IncidenceMatrix& A);

/// H(G,K) character table (exact cyclotomic entries), K in {G_1, G_2}.
enum class UnitSubgroup { G1, G2 };

struct CharTable {
    GroupSpec group;
    UnitSubgroup K;
    std::vector<std::vector<Cyclotomic>> C;  // C(chi_i, O_{g_j})
    std::vector<std::vector<Cyclotomic>> B;  // entrywise conjugate of C
    // for K = G_2: the A_0 / A_0^{(n0)} blocks of the 3-block decomposition
    std::vector<std::vector<Cyclotomic>> A0, A0n;
    bool identities_ok = false;  // B C = C B = |G| I (and the block identity
                                 // for K = G_2)
    std::string failure;
};

CharTable build_char_table(const GroupSpec& G, UnitSubgroup K,
                           const Pairing& theta, const UnitOrbitTable& table);

/// An automorphism of G, presented by generator images.
struct Automorphism {
    GroupSpec group;
    std::vector<GroupElement> images;  // image of each standard generator
    GroupElement apply(const GroupElement& g) const;
};

Automorphism identity_automorphism(const GroupSpec& G);
Automorphism scalar_automorphism(const GroupSpec& G, long long n);
/// From generator images; throws unless bijective and homomorphic.
Automorphism automorphism_from_images(const GroupSpec& G,
                                      const std::vector<GroupElement>& imgs);

/// Verifies rho_Y(sigma) A = A rho_X(sigma) together with the adjoint
/// construction rho_Y(sigma) = rho_X((sigma*)^{-1}), sigma* defined by
/// theta(sigma*(g))(g') = theta(g)(sigma(g')).
struct EquivarianceProof {
    bool ok = false;
    IntMat rho_X, rho_Y;
    std::vector<GroupElement> sigma_star_images;
    std::string failure;
};
EquivarianceProof aut_equivariance_check(const IncidenceMatrix& A,
                                         const Pairing& theta,
                                         const UnitOrbitTable& table,
                                         const Automorphism& sigma);

/// The Galois-ordered block decomposition of A_{H,H_1} for H = (Z/p^2)^beta:
/// zero top-left m x m block, A_{L,L_1} border blocks, inner blocks
/// p J_{H,i,j} supported on the zero pattern of A_{L,L_1}.
struct BlockDecomposition {
    long p = 0;
    int beta = 0;
    long m = 0;                 // m_{beta,p} = (p^beta - 1)/(p - 1)
    IntMat A_full;              // A_{H,H_1} in the section enumeration
    IntMat A_L;                 // A_{L,L_1}
    std::vector<std::vector<IntMat>> J;  // J[i][j], p^{beta-1} x p^{beta-1} grid
    bool structure_ok = false;  // border blocks + zero pattern
    bool sums_ok = false;       // zero row and column block sums
    bool bh_ok = false;         // B_H^2 and B_H^3 identities
    std::string failure;
};

BlockDecomposition block_decompose(const OrbitReps& reps);

/// {"schema":"gshds/1","m":...,"beta":...,"p":...,"identities_checked":...}
std::string block_metadata_json(const BlockDecomposition& D);

}  // namespace gshds
