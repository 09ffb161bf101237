#pragma once

#include <string>
#include <vector>

#include "gshds/galgebra.hpp"
#include "gshds/pgroup.hpp"

namespace gshds {

/// Element of GR(p^k, beta) = (Z/p^k)[y]/(f), stored as the coefficient
/// vector of a degree < beta polynomial (constant term first), reduced
/// mod p^k and mod f.
using RingElement = std::vector<long long>;

/// GR(p^k, beta) for k = 1 (the field F_q) or k = 2, with f a monic
/// primitive polynomial mod p, lifted verbatim for k = 2.
struct RingSpec {
    long p = 0;
    int k = 1;     // modulus p^k
    int beta = 1;  // extension degree
    std::vector<long long> modulus;  // f, constant first, length beta+1, monic
    long long q = 0;    // p^beta
    long long pk = 0;   // p^k

    bool operator==(const RingSpec& o) const {
        return p == o.p && k == o.k && beta == o.beta && modulus == o.modulus;
    }

    RingElement zero() const { return RingElement(beta, 0); }
    RingElement one() const;
    RingElement from_int(long long n) const;
    RingElement gen() const;  // the class of y
    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement mul_scalar(const RingElement& a, long long n) const;
    RingElement pow(const RingElement& a, long long e) const;
    bool is_unit(const RingElement& a) const;  // nonzero mod p
    bool is_zero(const RingElement& a) const;

    /// Reduction mod p into the corresponding field spec (k = 1).
    RingElement reduce_mod_p(const RingElement& a) const;

    long long rank(const RingElement& a) const;  // mixed radix, for tables
    RingElement unrank(long long r) const;

    /// Additive identification GR(p^k,beta) ~ (Z/p^k)^beta.
    GroupSpec additive_group() const;
    GroupElement to_group(const RingElement& a) const;
    RingElement from_group(const GroupElement& g) const;

    std::string str() const;  // "GR(p^k, beta; modulus=[c0,c1,...])"
};

RingSpec parse_ring_spec(const std::string& text);

/// Lexicographically smallest primitive modulus (constant-first coefficient
/// order); `skip` selects later candidates for alternate embeddings.
RingSpec make_field(long p, int beta, int skip = 0);
RingSpec make_ring(long p, int beta, int skip = 0);

/// Teichmuller lift: the unique (q-1)-th root of unity congruent to x mod p.
/// Computed as the fixed point of z -> z^q.  Throws on non-units.
RingElement teichmuller(const RingSpec& R, const RingElement& x);
/// mu_{q-1}, listed as consecutive powers of the lift of y.
std::vector<RingElement> teichmuller_set(const RingSpec& R);

/// Teichmuller digits of gamma = r0 + p r1 (k = 2) with r_i in mu union {0}.
struct TeichDecomp {
    RingElement r0, r1;
};
TeichDecomp teich_decompose(const RingSpec& R, const RingElement& gamma);

RingElement frobenius(const RingSpec& R, const RingElement& gamma);
/// Tr(gamma) = sum of Frobenius iterates; lands in Z/p^k.
long long trace(const RingSpec& R, const RingElement& gamma);

/// Quadratic-residue symbol on F_q: 0 at 0, else x^{(q-1)/2} read as +-1.
int qr_symbol(const RingSpec& F, const RingElement& x);

/// The section-8 representative system for H = (Z/p^2)^beta viewed as
/// GR(p^2, beta):
///   l_1..l_m       reps of mu_{q-1}/mu_{p-1} (quadratic residues when beta
///                  is odd and qr_refined is set; l_1 = 1),
///   l'_1..l'_{p^{beta-1}}  Teichmuller lifts of additive coset reps of F_p
///                  in F_q, with l'_1 = 0,
///   h_{i,j} = l_i * (1 + p l'_j)  H_1-orbit reps of the order-p^2 elements.
struct OrbitReps {
    RingSpec ring;   // k = 2
    RingSpec field;  // k = 1, same modulus
    bool qr_refined = false;
    std::vector<RingElement> l;       // size m = (q-1)/(p-1)
    std::vector<RingElement> lprime;  // size p^{beta-1}
    std::vector<std::vector<RingElement>> h;  // h[i][j], m x p^{beta-1}
    long m() const { return static_cast<long>(l.size()); }
};

OrbitReps orbit_reps(const RingSpec& R, bool qr_refined);

/// Unit-orbit table of H = (Z/p^2)^beta in the section-8 enumeration:
/// first the order-p reps p.l_i, then for each j the block l_i (1 + p l'_j).
UnitOrbitTable galois_orbit_table(const OrbitReps& reps);
/// Same for L = (Z/p)^beta: reps are the reductions of the l_i.
UnitOrbitTable galois_orbit_table_field(const OrbitReps& reps);

/// theta(g')(g) = eta^{Tr(g' * g)}; Gram matrix Tr(y^{i+j}) mod p^k.
Pairing trace_pairing(const RingSpec& R);

/// Indicator of the nonzero squares of F_{p^m} inside (Z/p)^m.
AlgebraElement paley_set(long p, int m);

/// Paley construction certified by check_gshds.
GshdsCertificate verify_paley(long p, int m);

}  // namespace gshds
