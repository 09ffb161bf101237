#include "gshds/galgebra.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace gshds {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Pairing Pairing::diagonal(const GroupSpec& G) {
    Pairing P;
    P.group_ = G;
    P.kind_ = Kind::Diagonal;
    P.tag_ = "diagonal";
    P.level_ = ipow(G.p, G.s);
    size_t l = G.exponents.size();
    P.gram_.assign(l, std::vector<long long>(l, 0));
    for (size_t i = 0; i < l; ++i)
        P.gram_[i][i] = ipow(G.p, G.s - G.exponents[i]);
    return P;
}

Pairing Pairing::from_gram(const GroupSpec& G, Kind kind,
                           std::vector<std::vector<long long>> gram,
                           std::string tag) {
    Pairing P;
    P.group_ = G;
    P.kind_ = kind;
    P.tag_ = std::move(tag);
    P.level_ = ipow(G.p, G.s);
    size_t l = G.exponents.size();
    if (gram.size() != l)
        throw std::invalid_argument("gram matrix size mismatch");
    for (auto& row : gram) {
        if (row.size() != l) throw std::invalid_argument("gram matrix ragged");
        for (auto& x : row) {
            x %= P.level_;
            if (x < 0) x += P.level_;
        }
    }
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("pairing gram not symmetric");
    P.gram_ = std::move(gram);
    return P;
}

long long Pairing::exponent(const GroupElement& a, const GroupElement& b) const {
    long long e = 0;
    size_t l = gram_.size();
    for (size_t i = 0; i < l; ++i) {
        if (a[i] == 0) continue;
        long long row = 0;
        for (size_t j = 0; j < l; ++j)
            if (b[j] != 0) row = (row + gram_[i][j] * b[j]) % level_;
        e = (e + row * a[i]) % level_;
    }
    return e;
}

bool Pairing::is_symmetric_exhaustive() const {
    for (long long a = 0; a < group_.v; ++a) {
        GroupElement ga = group_.unrank(a);
        for (long long b = a; b < group_.v; ++b) {
            GroupElement gb = group_.unrank(b);
            if (exponent(ga, gb) != exponent(gb, ga)) return false;
        }
    }
    return true;
}

bool Pairing::is_nondegenerate_exhaustive() const {
    for (long long a = 1; a < group_.v; ++a) {
        GroupElement ga = group_.unrank(a);
        bool trivial = true;
        for (long long b = 0; b < group_.v && trivial; ++b)
            if (exponent(ga, group_.unrank(b)) != 0) trivial = false;
        if (trivial) return false;
    }
    return true;
}

AlgebraElement AlgebraElement::unit(const GroupSpec& G) {
    AlgebraElement e(G);
    e.coeff_[0] = 1;
    return e;
}

AlgebraElement AlgebraElement::whole_group(const GroupSpec& G) {
    AlgebraElement e(G);
    std::fill(e.coeff_.begin(), e.coeff_.end(), 1);
    return e;
}

AlgebraElement AlgebraElement::indicator(const GroupSpec& G,
                                         const std::vector<GroupElement>& set) {
    AlgebraElement e(G);
    for (const auto& g : set) {
        if (!G.valid(g)) throw std::invalid_argument("element outside group");
        e.coeff_[G.rank(g)] = 1;
    }
    return e;
}

long long AlgebraElement::coefficient_sum() const {
    long long s = 0;
    for (long long c : coeff_) s += c;
    return s;
}

long long AlgebraElement::support_size() const {
    long long s = 0;
    for (long long c : coeff_)
        if (c != 0) ++s;
    return s;
}

bool AlgebraElement::is_zero_one() const {
    for (long long c : coeff_)
        if (c != 0 && c != 1) return false;
    return true;
}

std::vector<GroupElement> AlgebraElement::support() const {
    std::vector<GroupElement> out;
    for (long long r = 0; r < group_.v; ++r)
        if (coeff_[r] != 0) out.push_back(group_.unrank(r));
    return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (!(group_ == o.group_)) throw std::invalid_argument("group mismatch");
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (!(group_ == o.group_)) throw std::invalid_argument("group mismatch");
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

AlgebraElement AlgebraElement::operator*(long long n) const {
    AlgebraElement r = *this;
    for (auto& c : r.coeff_) c *= n;
    return r;
}

std::string AlgebraElement::json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (long long r = 0; r < group_.v; ++r) {
        if (coeff_[r] == 0) continue;
        nlohmann::ordered_json item;
        item["coords"] = group_.unrank(r);
        item["coeff"] = coeff_[r];
        arr.push_back(item);
    }
    return arr.dump();
}

AlgebraElement AlgebraElement::from_json(const GroupSpec& G,
                                         const std::string& js) {
    AlgebraElement e(G);
    auto arr = nlohmann::json::parse(js);
    for (const auto& item : arr) {
        GroupElement g = item.at("coords").get<std::vector<int>>();
        if (!G.valid(g)) throw std::invalid_argument("coords outside group");
        e.set_coeff(g, item.at("coeff").get<long long>());
    }
    return e;
}

AlgebraElement convolve(const AlgebraElement& A, const AlgebraElement& B) {
    if (!(A.group() == B.group()))
        throw std::invalid_argument("convolution needs a common group");
    const GroupSpec& G = A.group();
    AlgebraElement C(G);
    for (long long ra = 0; ra < G.v; ++ra) {
        long long ca = A.coeff_at_rank(ra);
        if (ca == 0) continue;
        GroupElement a = G.unrank(ra);
        for (long long rb = 0; rb < G.v; ++rb) {
            long long cb = B.coeff_at_rank(rb);
            if (cb == 0) continue;
            C.add_coeff(G.add(a, G.unrank(rb)), ca * cb);
        }
    }
    return C;
}

AlgebraElement power_map(const AlgebraElement& A, long long n) {
    const GroupSpec& G = A.group();
    AlgebraElement B(G);
    for (long long r = 0; r < G.v; ++r) {
        long long c = A.coeff_at_rank(r);
        if (c == 0) continue;
        B.add_coeff(scalar_mul(G, n, G.unrank(r)), c);
    }
    return B;
}

Cyclotomic char_value(const AlgebraElement& A, const GroupElement& g,
                      const Pairing& theta) {
    const GroupSpec& G = A.group();
    if (!(theta.group() == G))
        throw std::invalid_argument("pairing built for a different group");
    if (G.is_trivial())
        return Cyclotomic::integer(G.p, 1, A.coefficient_sum());
    std::vector<long long> full(theta.level(), 0);
    for (long long r = 0; r < G.v; ++r) {
        long long c = A.coeff_at_rank(r);
        if (c == 0) continue;
        full[theta.exponent(g, G.unrank(r))] += c;
    }
    return from_exponent_map(G.p, G.s, full);
}

AlgebraElement restrict_to(const AlgebraElement& A, const Subgroup& L) {
    if (!(L.parent == A.group()))
        throw std::invalid_argument("subgroup of a different group");
    AlgebraElement out(L.spec);
    for (const auto& el : L.elements) {
        long long c = A.coeff(el);
        if (c != 0) out.add_coeff(*L.coords_of(el), c);
    }
    return out;
}

AlgebraElement project(const AlgebraElement& A, const QuotientProjection& pi) {
    const GroupSpec& G = A.group();
    if (!(pi.parent == G))
        throw std::invalid_argument("projection built for a different group");
    AlgebraElement out(pi.quotient);
    for (long long r = 0; r < G.v; ++r) {
        long long c = A.coeff_at_rank(r);
        if (c == 0) continue;
        out.add_coeff(pi.quotient.unrank(pi.proj[r]), c);
    }
    return out;
}

std::string to_string(GshdsKind k) {
    switch (k) {
        case GshdsKind::SHDS: return "SHDS";
        case GshdsKind::PaleyPDS: return "PaleyPDS";
        default: return "NotGSHDS";
    }
}

GshdsCertificate check_gshds(const AlgebraElement& D, long n0) {
    const GroupSpec& G = D.group();
    GshdsCertificate cert;
    cert.v = G.v;
    cert.n0 = n0 ? n0 : smallest_qnr(G.p);
    if (legendre(cert.n0, G.p) != -1)
        throw std::invalid_argument("n0 must be a quadratic non-residue");
    if (G.v == 1) {
        cert.failure_reason = "trivial group";
        return cert;
    }
    if (!D.is_zero_one()) {
        cert.failure_reason = "not a subset indicator";
        return cert;
    }
    if (D.coeff_at_rank(0) != 0) {
        cert.failure_reason = "0 must not belong to D";
        return cert;
    }
    cert.k = D.support_size();

    // skew condition: D union n0.D = G \ {0}, disjointly
    AlgebraElement Dn = power_map(D, cert.n0);
    for (long long r = 1; r < G.v; ++r) {
        long long t = D.coeff_at_rank(r) + Dn.coeff_at_rank(r);
        if (t != 1) {
            cert.failure_witness = G.unrank(r);
            cert.failure_reason = "skew condition fails at " +
                                  to_string(*cert.failure_witness);
            return cert;
        }
    }

    // D(x) D(x^{n0}) must equal (k0 - lambda)[1] + lambda G(x)
    AlgebraElement C = convolve(D, Dn);
    long long lambda_eq = -1;
    for (long long r = 1; r < G.v; ++r) {
        if (lambda_eq < 0) lambda_eq = C.coeff_at_rank(r);
        if (C.coeff_at_rank(r) != lambda_eq) {
            cert.failure_witness = G.unrank(r);
            cert.failure_reason = "product not constant off the identity";
            return cert;
        }
    }
    cert.k0 = C.coeff_at_rank(0);
    if (cert.k0 != 0 && cert.k0 != cert.k) {
        cert.failure_reason = "k0 outside {0, k}";
        return cert;
    }
    if (cert.k0 == cert.k) {
        cert.kind = GshdsKind::SHDS;
        cert.lambda = (cert.v - 3) / 4;
        cert.mu = cert.lambda;
        if (lambda_eq != cert.lambda)
            throw std::logic_error("SHDS lambda mismatch");
    } else {
        cert.kind = GshdsKind::PaleyPDS;
        cert.lambda = (cert.v - 5) / 4;
        cert.mu = (cert.v - 1) / 4;
        if (lambda_eq != cert.mu)
            throw std::logic_error("PDS lambda mismatch");
    }
    return cert;
}

}  // namespace gshds
