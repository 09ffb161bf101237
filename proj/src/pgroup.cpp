#include "gshds/pgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gshds {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre(long long n, long p) {
    long long m = n % p;
    if (m < 0) m += p;
    if (m == 0) return 0;
    long long r = 1, b = m, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

long smallest_qnr(long p) {
    for (long n = 2; n < p; ++n)
        if (legendre(n, p) == -1) return n;
    throw std::logic_error("no quadratic non-residue found");
}

long long GroupSpec::rank(const GroupElement& g) const {
    long long r = 0;
    for (size_t i = 0; i < moduli.size(); ++i) r += strides[i] * g[i];
    return r;
}

GroupElement GroupSpec::unrank(long long r) const {
    GroupElement g(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i) {
        g[i] = static_cast<int>(r / strides[i]);
        r %= strides[i];
    }
    return g;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i)
        r[i] = static_cast<int>((a[i] + static_cast<long long>(b[i])) % moduli[i]);
    return r;
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
    GroupElement r(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i)
        r[i] = static_cast<int>((moduli[i] - a[i]) % moduli[i]);
    return r;
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

bool GroupSpec::valid(const GroupElement& g) const {
    if (g.size() != moduli.size()) return false;
    for (size_t i = 0; i < moduli.size(); ++i)
        if (g[i] < 0 || g[i] >= moduli[i]) return false;
    return true;
}

GroupSpec make_group_allow_trivial(long p, const std::vector<int>& exponents) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime");
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 1)
            throw std::invalid_argument("exponents must be positive");
        if (i > 0 && exponents[i] > exponents[i - 1])
            throw std::invalid_argument("exponents must be descending");
    }
    GroupSpec G;
    G.p = p;
    G.exponents = exponents;
    G.s = exponents.empty() ? 0 : exponents.front();
    G.beta = std::accumulate(exponents.begin(), exponents.end(), 0);
    G.v = ipow(p, G.beta);
    for (int a : exponents) G.moduli.push_back(ipow(p, a));
    G.strides.assign(G.moduli.size(), 1);
    for (int i = static_cast<int>(G.moduli.size()) - 2; i >= 0; --i)
        G.strides[i] = G.strides[i + 1] * G.moduli[i + 1];
    return G;
}

GroupSpec make_group(long p, const std::vector<int>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("exponent list must be nonempty");
    return make_group_allow_trivial(p, exponents);
}

GroupSpec parse_group_dsl(const std::string& dsl) {
    std::string t;
    for (char c : dsl)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    auto semi = t.find(';');
    if (semi == std::string::npos || t.rfind("p=", 0) != 0 ||
        t.compare(semi + 1, 5, "exps=") != 0)
        throw std::invalid_argument("group DSL must look like \"p=3;exps=2,2,1\"");
    long p = std::stol(t.substr(2, semi - 2));
    std::vector<int> exps;
    std::string rest = t.substr(semi + 6);
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad exponent list");
        exps.push_back(std::stoi(tok));
    }
    return make_group(p, exps);
}

std::string group_dsl(const GroupSpec& G) {
    std::string s = "p=" + std::to_string(G.p) + ";exps=";
    for (size_t i = 0; i < G.exponents.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(G.exponents[i]);
    }
    return s;
}

std::string to_string(const GroupElement& g) {
    std::string s = "(";
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i]);
    }
    return s + ")";
}

GroupElement scalar_mul(const GroupSpec& G, long long n, const GroupElement& g) {
    GroupElement r(G.moduli.size());
    for (size_t i = 0; i < G.moduli.size(); ++i) {
        long long m = (n % G.moduli[i]) * g[i] % G.moduli[i];
        if (m < 0) m += G.moduli[i];
        r[i] = static_cast<int>(m);
    }
    return r;
}

int order_exp(const GroupSpec& G, const GroupElement& g) {
    int k = 0;
    for (size_t i = 0; i < G.moduli.size(); ++i) {
        int x = g[i], a = G.exponents[i];
        int val = a;  // p-adic valuation of x in Z/p^a, capped at a
        if (x != 0) {
            val = 0;
            while (x % G.p == 0) {
                x /= static_cast<int>(G.p);
                ++val;
            }
        }
        k = std::max(k, a - val);
    }
    return k;
}

long long elem_order(const GroupSpec& G, const GroupElement& g) {
    return ipow(G.p, order_exp(G, g));
}

std::vector<GroupElement> all_elements(const GroupSpec& G) {
    std::vector<GroupElement> out;
    out.reserve(G.v);
    for (long long r = 0; r < G.v; ++r) out.push_back(G.unrank(r));
    return out;
}

namespace {

// Units of Z/p^s and the subgroup of squares.
std::vector<long long> units_mod(long p, int s) {
    long long m = ipow(p, s);
    std::vector<long long> u;
    for (long long n = 1; n < m; ++n)
        if (n % p != 0) u.push_back(n);
    return u;
}

std::vector<long long> square_units_mod(long p, int s) {
    long long m = ipow(p, s);
    std::vector<char> seen(m, 0);
    std::vector<long long> sq;
    for (long long n = 1; n < m; ++n) {
        if (n % p == 0) continue;
        long long t = n * n % m;
        if (!seen[t]) {
            seen[t] = 1;
            sq.push_back(t);
        }
    }
    std::sort(sq.begin(), sq.end());
    return sq;
}

UnitOrbitTable build_table(const GroupSpec& G,
                           const std::vector<GroupElement>& reps,
                           OrbitOrdering tag) {
    UnitOrbitTable T;
    T.group = G;
    T.ordering = tag;
    T.pairing_tag = "diagonal";
    T.n0 = G.is_trivial() ? 0 : smallest_qnr(G.p);
    T.reps = reps;
    T.orbit_of.assign(G.v, -1);
    T.half_of.assign(G.v, 0);
    auto squares = G.is_trivial() ? std::vector<long long>{}
                                  : square_units_mod(G.p, G.s);
    long long covered = 0;
    for (size_t i = 0; i < reps.size(); ++i) {
        const GroupElement& g = reps[i];
        if (!G.valid(g) || G.rank(g) == 0)
            throw std::invalid_argument("orbit rep invalid");
        std::vector<GroupElement> pos, neg;
        for (long long n : squares) {
            GroupElement h = scalar_mul(G, n, g);
            long long rh = G.rank(h);
            if (T.half_of[rh] == 0) {
                T.orbit_of[rh] = static_cast<int>(i);
                T.half_of[rh] = 1;
                pos.push_back(h);
            } else if (T.orbit_of[rh] != static_cast<int>(i)) {
                throw std::invalid_argument("orbit reps overlap");
            }
            GroupElement hn = scalar_mul(G, T.n0, h);
            long long rn = G.rank(hn);
            if (T.half_of[rn] == 0) {
                T.orbit_of[rn] = static_cast<int>(i);
                T.half_of[rn] = -1;
                neg.push_back(hn);
            } else if (T.orbit_of[rn] != static_cast<int>(i)) {
                throw std::invalid_argument("orbit reps overlap");
            }
        }
        if (pos.size() != neg.size())
            throw std::logic_error("orbit halves differ in size");
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        covered += static_cast<long long>(pos.size() + neg.size());
        T.orbit_pos.push_back(std::move(pos));
        T.orbit_neg.push_back(std::move(neg));
        T.omega_size.push_back(
            static_cast<long long>(T.orbit_pos.back().size() * 2));
    }
    if (covered != G.v - 1)
        throw std::invalid_argument("orbit reps do not cover G \\ {0}");
    return T;
}

}  // namespace

UnitOrbitTable orbit_tables(const GroupSpec& G, OrbitOrdering ordering) {
    if (ordering == OrbitOrdering::Auto)
        ordering = (G.exponents.size() == 1) ? OrbitOrdering::CyclicCanonical
                                             : OrbitOrdering::Lex;
    if (ordering == OrbitOrdering::Galois)
        throw std::invalid_argument(
            "Galois ordering requires ring data; use galois_orbit_table");
    if (G.is_trivial()) return build_table(G, {}, ordering);

    std::vector<GroupElement> reps;
    if (ordering == OrbitOrdering::CyclicCanonical) {
        if (G.exponents.size() != 1)
            throw std::invalid_argument("cyclic ordering needs a cyclic group");
        for (int k = G.s - 1; k >= 0; --k)
            reps.push_back(GroupElement{static_cast<int>(ipow(G.p, k))});
    } else {
        // lexicographically smallest member of each G_1 orbit, in lex order
        auto units = units_mod(G.p, G.s);
        std::vector<char> seen(G.v, 0);
        for (long long r = 1; r < G.v; ++r) {
            if (seen[r]) continue;
            GroupElement g = G.unrank(r);
            for (long long n : units) seen[G.rank(scalar_mul(G, n, g))] = 1;
            reps.push_back(g);
        }
        // ranks ascend = lex order on coordinate vectors
    }
    return build_table(G, reps, ordering);
}

UnitOrbitTable orbit_tables_with_reps(const GroupSpec& G,
                                      const std::vector<GroupElement>& reps,
                                      OrbitOrdering tag) {
    return build_table(G, reps, tag);
}

bool Subgroup::contains(const GroupElement& g) const {
    return parent.valid(g) && sub_rank_of[parent.rank(g)] >= 0;
}

GroupElement Subgroup::embed(const GroupElement& sub_elem) const {
    GroupElement r = parent.zero();
    for (size_t i = 0; i < basis.size(); ++i)
        r = parent.add(r, scalar_mul(parent, sub_elem[i], basis[i]));
    return r;
}

std::optional<GroupElement> Subgroup::coords_of(const GroupElement& g) const {
    if (!parent.valid(g)) return std::nullopt;
    long long sr = sub_rank_of[parent.rank(g)];
    if (sr < 0) return std::nullopt;
    return spec.unrank(sr);
}

namespace {

// Constructive basis extraction for a finite abelian p-group presented as a
// list of opaque element indices with an addition callback.  Returns basis
// indices with their order exponents, largest order first.
struct CayleyView {
    long long n;
    std::function<long long(long long, long long)> add;  // index add
    long long zero;
};

std::vector<std::pair<long long, int>> abelian_basis(const CayleyView& V,
                                                     long p) {
    std::vector<std::pair<long long, int>> basis;
    // span: element index -> coefficient vector over current basis (or empty)
    std::vector<long long> span = {V.zero};
    std::vector<char> in_span(V.n, 0);
    in_span[V.zero] = 1;
    std::vector<std::vector<int>> span_coords = {{}};
    std::vector<long long> span_pos(V.n, -1);
    span_pos[V.zero] = 0;

    auto scalar = [&](long long x, long long k) {
        long long acc = V.zero;
        while (k-- > 0) acc = V.add(acc, x);
        return acc;
    };

    while (static_cast<long long>(span.size()) < V.n) {
        // element with maximal coset order modulo the current span
        long long pick = -1;
        int pick_e = -1;
        for (long long x = 0; x < V.n; ++x) {
            if (in_span[x]) continue;
            int e = 0;
            long long y = x;
            while (!in_span[y]) {
                y = scalar(y, p);
                ++e;
            }
            if (e > pick_e) {
                pick_e = e;
                pick = x;
            }
        }
        long long pe = 1;
        for (int i = 0; i < pick_e; ++i) pe *= p;
        // p^e * pick lies in the span; its coefficients must all be
        // divisible by p^e, which lets us correct pick to have exact order
        long long tgt = scalar(pick, pe);
        const std::vector<int>& c = span_coords[span_pos[tgt]];
        long long corrected = pick;
        for (size_t i = 0; i < basis.size(); ++i) {
            long long ci = i < c.size() ? c[i] : 0;
            if (ci % pe != 0)
                throw std::logic_error("basis extraction: divisibility failed");
            long long oi = 1;
            for (int t = 0; t < basis[i].second; ++t) oi *= p;
            long long m = (oi - ci / pe % oi) % oi;  // subtract (ci/pe)*b_i
            corrected = V.add(corrected, scalar(basis[i].first, m));
        }
        if (scalar(corrected, pe) != V.zero)
            throw std::logic_error("basis extraction: correction failed");
        basis.emplace_back(corrected, pick_e);

        // rebuild the span with the enlarged basis
        std::vector<long long> nspan;
        std::vector<std::vector<int>> ncoords;
        std::fill(in_span.begin(), in_span.end(), 0);
        std::fill(span_pos.begin(), span_pos.end(), -1);
        long long total = 1;
        for (auto& [b, e] : basis) {
            long long o = 1;
            for (int t = 0; t < e; ++t) o *= p;
            total *= o;
        }
        nspan.reserve(total);
        std::vector<int> coef(basis.size(), 0);
        for (long long it = 0; it < total; ++it) {
            long long el = V.zero;
            for (size_t i = 0; i < basis.size(); ++i)
                el = V.add(el, scalar(basis[i].first, coef[i]));
            if (span_pos[el] >= 0)
                throw std::logic_error("basis extraction: not independent");
            span_pos[el] = static_cast<long long>(nspan.size());
            in_span[el] = 1;
            nspan.push_back(el);
            ncoords.push_back(coef);
            // increment mixed-radix counter
            for (size_t i = basis.size(); i-- > 0;) {
                long long o = 1;
                for (int t = 0; t < basis[i].second; ++t) o *= p;
                if (++coef[i] < o) break;
                coef[i] = 0;
            }
        }
        span = std::move(nspan);
        span_coords = std::move(ncoords);
    }
    std::stable_sort(basis.begin(), basis.end(),
                     [](auto& a, auto& b) { return a.second > b.second; });
    return basis;
}

}  // namespace

Subgroup subgroup_from_elements(const GroupSpec& G,
                                std::vector<GroupElement> elems) {
    std::vector<long long> ranks;
    ranks.reserve(elems.size());
    for (auto& e : elems) {
        if (!G.valid(e)) throw std::invalid_argument("subgroup element invalid");
        ranks.push_back(G.rank(e));
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    std::vector<long long> idx_of(G.v, -1);
    for (size_t i = 0; i < ranks.size(); ++i) idx_of[ranks[i]] = i;
    if (ranks.empty() || ranks[0] != 0)
        throw std::invalid_argument("subgroup must contain 0");
    // closure check
    for (long long a : ranks)
        for (long long b : ranks) {
            GroupElement sum = G.add(G.unrank(a), G.unrank(b));
            if (idx_of[G.rank(sum)] < 0)
                throw std::invalid_argument("element list not closed under +");
        }

    CayleyView V;
    V.n = static_cast<long long>(ranks.size());
    V.zero = 0;
    V.add = [&](long long i, long long j) {
        GroupElement sum = G.add(G.unrank(ranks[i]), G.unrank(ranks[j]));
        return idx_of[G.rank(sum)];
    };
    auto basis_idx = abelian_basis(V, G.p);

    Subgroup S;
    S.parent = G;
    std::vector<int> exps;
    for (auto& [bi, e] : basis_idx) {
        S.basis.push_back(G.unrank(ranks[bi]));
        exps.push_back(e);
    }
    S.spec = make_group_allow_trivial(G.p, exps);
    S.elements.reserve(ranks.size());
    for (long long r : ranks) S.elements.push_back(G.unrank(r));
    // coordinates: enumerate the abstract structure through the embedding
    S.sub_rank_of.assign(G.v, -1);
    for (long long sr = 0; sr < S.spec.v; ++sr) {
        GroupElement coords = S.spec.unrank(sr);
        GroupElement img = G.zero();
        for (size_t i = 0; i < S.basis.size(); ++i)
            img = G.add(img, scalar_mul(G, coords[i], S.basis[i]));
        long long pr = G.rank(img);
        if (idx_of[pr] < 0 || S.sub_rank_of[pr] != -1)
            throw std::logic_error("subgroup coordinateization failed");
        S.sub_rank_of[pr] = sr;
    }
    return S;
}

KernelImage kernel_image_mu(const GroupSpec& G, int k) {
    if (k < 0 || k > G.s) throw std::invalid_argument("need 0 <= k <= s");
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= G.p;
    std::vector<GroupElement> ker, img;
    std::vector<char> seen(G.v, 0);
    for (long long r = 0; r < G.v; ++r) {
        GroupElement g = G.unrank(r);
        GroupElement m = scalar_mul(G, pk, g);
        if (G.rank(m) == 0) ker.push_back(g);
        long long mr = G.rank(m);
        if (!seen[mr]) {
            seen[mr] = 1;
            img.push_back(m);
        }
    }
    KernelImage KI{subgroup_from_elements(G, ker), subgroup_from_elements(G, img)};
    if (KI.kernel.size() * KI.image.size() != G.v)
        throw std::logic_error("|L| * |H| != |G|");
    return KI;
}

QuotientProjection quotient_projection(const GroupSpec& G, const Subgroup& L) {
    if (!(L.parent == G)) throw std::invalid_argument("subgroup of wrong group");
    // canonical coset representative: minimal rank within g + L
    std::vector<long long> rep_rank(G.v, -1);
    std::vector<long long> coset_list;  // canonical rep ranks, ascending
    for (long long r = 0; r < G.v; ++r) {
        if (rep_rank[r] >= 0) continue;
        GroupElement g = G.unrank(r);
        long long best = r;
        std::vector<long long> members;
        members.reserve(L.elements.size());
        for (const auto& l : L.elements) {
            long long m = G.rank(G.add(g, l));
            members.push_back(m);
            best = std::min(best, m);
        }
        for (long long m : members) rep_rank[m] = best;
        coset_list.push_back(best);
    }
    std::sort(coset_list.begin(), coset_list.end());
    std::vector<long long> coset_idx(G.v, -1);
    for (size_t i = 0; i < coset_list.size(); ++i) coset_idx[coset_list[i]] = i;

    CayleyView V;
    V.n = static_cast<long long>(coset_list.size());
    V.zero = coset_idx[rep_rank[0]];
    V.add = [&](long long i, long long j) {
        GroupElement sum = G.add(G.unrank(coset_list[i]), G.unrank(coset_list[j]));
        return coset_idx[rep_rank[G.rank(sum)]];
    };
    auto basis_idx = abelian_basis(V, G.p);

    std::vector<int> exps;
    for (auto& [bi, e] : basis_idx) exps.push_back(e);
    GroupSpec H = make_group_allow_trivial(G.p, exps);

    // quotient rank of every coset: enumerate H and walk the basis images
    std::vector<long long> qrank_of_coset(coset_list.size(), -1);
    std::vector<GroupElement> reps_by_qrank(H.v);
    for (long long hr = 0; hr < H.v; ++hr) {
        GroupElement coords = H.unrank(hr);
        long long acc = V.zero;
        for (size_t i = 0; i < basis_idx.size(); ++i) {
            for (int t = 0; t < coords[i]; ++t)
                acc = V.add(acc, basis_idx[i].first);
        }
        if (qrank_of_coset[acc] != -1)
            throw std::logic_error("quotient coordinateization failed");
        qrank_of_coset[acc] = hr;
        reps_by_qrank[hr] = G.unrank(coset_list[acc]);
    }

    QuotientProjection Q;
    Q.parent = G;
    Q.quotient = H;
    Q.proj.assign(G.v, 0);
    for (long long r = 0; r < G.v; ++r)
        Q.proj[r] = qrank_of_coset[coset_idx[rep_rank[r]]];
    Q.coset_reps = std::move(reps_by_qrank);
    return Q;
}

}  // namespace gshds
