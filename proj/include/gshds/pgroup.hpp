#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gshds {

/// Element of a finite abelian p-group, stored as a residue vector.
/// coords[i] lies in [0, p^{a_i}).
using GroupElement = std::vector<int>;

/// A finite abelian p-group  G = Z/p^{a_1} x ... x Z/p^{a_l}  with p an odd
/// prime and a_1 >= ... >= a_l >= 1.  Quotient and image constructions may
/// produce the trivial group (empty exponent list); make_group rejects it.
struct GroupSpec {
    long p = 0;                  // odd prime
    std::vector<int> exponents;  // descending
    int s = 0;                   // exp(G) = p^s
    long long v = 1;             // |G| = p^beta
    int beta = 0;                // sum of exponents
    std::vector<long long> moduli;   // p^{a_i}
    std::vector<long long> strides;  // mixed-radix strides for ranking

    bool is_trivial() const { return exponents.empty(); }
    bool operator==(const GroupSpec& o) const {
        return p == o.p && exponents == o.exponents;
    }

    long long rank(const GroupElement& g) const;
    GroupElement unrank(long long r) const;
    GroupElement zero() const { return GroupElement(exponents.size(), 0); }
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    bool valid(const GroupElement& g) const;
};

/// Normalized group constructor.  Rejects even/composite p, empty or
/// non-descending exponent lists.
GroupSpec make_group(long p, const std::vector<int>& exponents);

/// Internal constructor for quotients/images; allows the trivial group.
GroupSpec make_group_allow_trivial(long p, const std::vector<int>& exponents);

/// Parse "p=3;exps=2,2,1" (whitespace tolerated).  Throws on malformed input.
GroupSpec parse_group_dsl(const std::string& dsl);
std::string group_dsl(const GroupSpec& G);

std::string to_string(const GroupElement& g);

bool is_prime(long n);

/// Legendre symbol (n|p) in {-1,0,+1}.
int legendre(long long n, long p);

/// Smallest quadratic non-residue mod p^s (equivalently mod p).
long smallest_qnr(long p);

/// n . g  computed coordinate-wise mod p^{a_i}.
GroupElement scalar_mul(const GroupSpec& G, long long n, const GroupElement& g);

/// Order of g, returned as its exponent: o(g) = p^k.
int order_exp(const GroupSpec& G, const GroupElement& g);
long long elem_order(const GroupSpec& G, const GroupElement& g);

enum class OrbitOrdering {
    Auto,             // CyclicCanonical for cyclic groups, Lex otherwise
    Lex,              // orbits sorted by lexicographically smallest rep
    CyclicCanonical,  // Z/p^s only: reps p^{s-1}, p^{s-2}, ..., p, 1
    Galois,           // the Galois-ring enumeration (built by galois module)
};

/// Orbit tables for the unit action G_1 = (Z/p^s)^* on G \ {0}, split into
/// the square-class halves O_g and O_g^{(n0)} under G_2 = (Z/p^s)^{*2}.
struct UnitOrbitTable {
    GroupSpec group;
    long n0 = 0;  // fixed quadratic non-residue mod p^s
    OrbitOrdering ordering = OrbitOrdering::Lex;
    std::string pairing_tag;  // which theta pins the dual reps chi_i = theta(g_i)

    std::vector<GroupElement> reps;                    // g_1 ... g_r
    std::vector<std::vector<GroupElement>> orbit_pos;  // O_{g_i}
    std::vector<std::vector<GroupElement>> orbit_neg;  // O_{g_i}^{(n0)}
    std::vector<long long> omega_size;                 // |Omega_{g_i}|

    // per-element lookups, indexed by rank; orbit_of[0] = -1
    std::vector<int> orbit_of;
    std::vector<signed char> half_of;  // +1 in O, -1 in O^{(n0)}

    long r() const { return static_cast<long>(reps.size()); }
};

UnitOrbitTable orbit_tables(const GroupSpec& G,
                            OrbitOrdering ordering = OrbitOrdering::Auto);

/// Orbit table with a caller-supplied rep sequence (used for the Galois
/// ordering of incidence structures).  Validates that the reps hit every
/// G_1-orbit of G \ {0} exactly once.
UnitOrbitTable orbit_tables_with_reps(const GroupSpec& G,
                                      const std::vector<GroupElement>& reps,
                                      OrbitOrdering tag);

/// A subgroup stored as an explicit element list together with its abstract
/// structure and an embedding of that structure into the parent group.
struct Subgroup {
    GroupSpec parent;
    GroupSpec spec;                    // structure of the subgroup itself
    std::vector<GroupElement> basis;   // parent images of spec's generators
    std::vector<GroupElement> elements;  // sorted by parent rank
    std::vector<long long> sub_rank_of;  // parent rank -> rank in spec, or -1

    long long size() const { return static_cast<long long>(elements.size()); }
    bool contains(const GroupElement& g) const;
    GroupElement embed(const GroupElement& sub_elem) const;
    /// Coordinates in spec of a parent element; nullopt if not a member.
    std::optional<GroupElement> coords_of(const GroupElement& g) const;
};

/// Builds a Subgroup from an element list.  Throws if the list is not closed
/// under addition (or misses 0).
Subgroup subgroup_from_elements(const GroupSpec& G,
                                std::vector<GroupElement> elems);

/// L = Ker(mu_{p^k}) and H = Im(mu_{p^k}) = p^k . G.
struct KernelImage {
    Subgroup kernel;
    Subgroup image;
};
KernelImage kernel_image_mu(const GroupSpec& G, int k);

/// Quotient H = G/L with the canonical projection as a rank table and a
/// transversal of canonical (minimal-rank) coset representatives.
struct QuotientProjection {
    GroupSpec parent;
    GroupSpec quotient;
    std::vector<long long> proj;           // parent rank -> quotient rank
    std::vector<GroupElement> coset_reps;  // quotient rank -> lift in G
};
QuotientProjection quotient_projection(const GroupSpec& G, const Subgroup& L);

/// All elements of G in rank order (desk scale only).
std::vector<GroupElement> all_elements(const GroupSpec& G);

}  // namespace gshds
