#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gshds/cyclotomic.hpp"
#include "gshds/pgroup.hpp"

namespace gshds {

/// A symmetric pairing theta : G -> dual(G), theta(g)(g') = eta^{<g,g'>}
/// with eta a primitive p^s-th root of unity.  Both supported pairings are
/// bilinear, so a Gram matrix on the standard generators describes them
/// completely: <g,g'> = sum_{i,j} g_i M_{ij} g'_j mod p^s.
class Pairing {
  public:
    enum class Kind { Diagonal, GaloisTrace };

    /// theta(g)(g') with exponent sum_i p^{s-a_i} g_i g'_i  (the standard
    /// diagonal pairing; specializes to eta^{ab} on cyclic groups).
    static Pairing diagonal(const GroupSpec& G);
    /// Arbitrary symmetric Gram matrix (entries mod p^s); used by the
    /// trace pairings of the Galois-ring machinery.
    static Pairing from_gram(const GroupSpec& G, Kind kind,
                             std::vector<std::vector<long long>> gram,
                             std::string tag);

    long long exponent(const GroupElement& a, const GroupElement& b) const;
    bool is_symmetric_exhaustive() const;  // full enumeration check
    /// theta is an isomorphism onto the dual iff g -> theta(g) is injective.
    bool is_nondegenerate_exhaustive() const;

    const GroupSpec& group() const { return group_; }
    Kind kind() const { return kind_; }
    const std::string& tag() const { return tag_; }
    long long level() const { return level_; }  // p^s

  private:
    GroupSpec group_;
    Kind kind_ = Kind::Diagonal;
    std::vector<std::vector<long long>> gram_;
    std::string tag_;
    long long level_ = 1;
};

/// Element of the integer group algebra Z[G], stored densely by rank.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(const GroupSpec& G)
        : group_(G), coeff_(static_cast<size_t>(G.v), 0) {}

    static AlgebraElement unit(const GroupSpec& G);       // [1] = x^0
    static AlgebraElement whole_group(const GroupSpec& G);  // G(x)
    static AlgebraElement indicator(const GroupSpec& G,
                                    const std::vector<GroupElement>& set);

    const GroupSpec& group() const { return group_; }
    long long coeff(const GroupElement& g) const { return coeff_[group_.rank(g)]; }
    long long coeff_at_rank(long long r) const { return coeff_[r]; }
    void set_coeff(const GroupElement& g, long long c) { coeff_[group_.rank(g)] = c; }
    void add_coeff(const GroupElement& g, long long c) { coeff_[group_.rank(g)] += c; }

    long long coefficient_sum() const;
    long long support_size() const;
    bool is_zero_one() const;
    std::vector<GroupElement> support() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement operator*(long long n) const;
    bool operator==(const AlgebraElement& o) const {
        return group_ == o.group_ && coeff_ == o.coeff_;
    }

    std::string json() const;  // sorted [{"coords":[...],"coeff":n}, ...]
    static AlgebraElement from_json(const GroupSpec& G, const std::string& js);

  private:
    GroupSpec group_;
    std::vector<long long> coeff_;
};

/// Group-algebra product: (A*B)(g) = sum_h A(h) B(g-h).
AlgebraElement convolve(const AlgebraElement& A, const AlgebraElement& B);

/// A(x^n): transports the coefficient at g to n.g.
AlgebraElement power_map(const AlgebraElement& A, long long n);

/// Exact character value  sum_h A(h) eta^{<g,h>}  in Z[eta_{p^s}].
/// The principal character (g = 0) lands in degree 0.
Cyclotomic char_value(const AlgebraElement& A, const GroupElement& g,
                      const Pairing& theta);

/// Keeps only the coefficients supported on L, re-expressed over L's spec.
AlgebraElement restrict_to(const AlgebraElement& A, const Subgroup& L);

/// Pushes A forward along the projection (sums coefficients over fibers).
AlgebraElement project(const AlgebraElement& A, const QuotientProjection& pi);

enum class GshdsKind { SHDS, PaleyPDS, NotGSHDS };

std::string to_string(GshdsKind k);

/// Verification certificate for the defining identities
///   D(x) D(x^{n0}) = (k0 - lambda)[1] + lambda G(x)
///   D(x) + D(x^{n0}) = G(x) - [1].
/// SHDS: k0 = k, parameters (v, (v-1)/2, (v-3)/4).
/// Paley-type PDS: k0 = 0, parameters (v, (v-1)/2, (v-5)/4, (v-1)/4).
struct GshdsCertificate {
    GshdsKind kind = GshdsKind::NotGSHDS;
    long long v = 0, k = 0, k0 = 0, lambda = 0, mu = 0;
    long n0 = 0;
    std::optional<GroupElement> failure_witness;  // set when the skew
                                                  // condition fails
    std::string failure_reason;

    bool ok() const { return kind != GshdsKind::NotGSHDS; }
};

/// Exact verification by convolution.  D must be a 0/1 indicator with
/// 0 not in D; n0 defaults to the smallest quadratic non-residue.
GshdsCertificate check_gshds(const AlgebraElement& D, long n0 = 0);

}  // namespace gshds
