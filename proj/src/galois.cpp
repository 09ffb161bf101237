#include "gshds/galois.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gshds {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<long> prime_factors(long long n) {
    std::vector<long> fs;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(static_cast<long>(d));
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(static_cast<long>(n));
    return fs;
}

// --- polynomial helpers over F_p (vectors, constant first, no padding) ---

std::vector<long long> pnorm(std::vector<long long> a, long p) {
    for (auto& x : a) {
        x %= p;
        if (x < 0) x += p;
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

std::vector<long long> pmod(std::vector<long long> a,
                            const std::vector<long long>& b, long p) {
    a = pnorm(std::move(a), p);
    auto bb = pnorm(b, p);
    long long lead = bb.back();
    long long inv = 1;
    {  // inverse of lead mod p
        long long e = p - 2, base = lead, r = 1;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        inv = r;
    }
    while (a.size() >= bb.size() && !(a.size() == 1 && a[0] == 0)) {
        long long c = a.back() * inv % p;
        size_t shift = a.size() - bb.size();
        for (size_t i = 0; i < bb.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * bb[i]) % p + p) % p;
        a = pnorm(std::move(a), p);
        if (a.size() < bb.size()) break;
    }
    return a;
}

std::vector<long long> pgcd(std::vector<long long> a, std::vector<long long> b,
                            long p) {
    a = pnorm(std::move(a), p);
    b = pnorm(std::move(b), p);
    while (!(b.size() == 1 && b[0] == 0)) {
        auto r = pmod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

std::vector<long long> pmulmod(const std::vector<long long>& a,
                               const std::vector<long long>& b,
                               const std::vector<long long>& f, long p) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return pmod(std::move(r), f, p);
}

std::vector<long long> ppowmod(std::vector<long long> a, long long e,
                               const std::vector<long long>& f, long p) {
    std::vector<long long> r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, a, f, p);
        a = pmulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const std::vector<long long>& f, long p) {
    int beta = static_cast<int>(f.size()) - 1;
    std::vector<long long> x{0, 1};
    // x^{p^beta} == x mod f
    auto xq = ppowmod(x, ipow(p, beta), f, p);
    auto xr = pmod(x, f, p);
    if (pnorm(xq, p) != pnorm(xr, p)) return false;
    for (long l : prime_factors(beta)) {
        auto xe = ppowmod(x, ipow(p, beta / l), f, p);
        // gcd(x^{p^{beta/l}} - x, f) must be 1
        std::vector<long long> d = xe;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        auto g = pgcd(f, d, p);
        if (!(g.size() == 1 && g[0] != 0)) return false;
    }
    return true;
}

bool is_primitive(const std::vector<long long>& f, long p) {
    int beta = static_cast<int>(f.size()) - 1;
    if (!is_irreducible(f, p)) return false;
    long long q1 = ipow(p, beta) - 1;
    std::vector<long long> y = beta >= 2 ? std::vector<long long>{0, 1}
                                         : std::vector<long long>{(p - f[0]) % p};
    auto one = std::vector<long long>{1};
    if (pnorm(ppowmod(y, q1, f, p), p) != one) return false;
    for (long l : prime_factors(q1))
        if (pnorm(ppowmod(y, q1 / l, f, p), p) == one) return false;
    return true;
}

std::vector<long long> find_primitive_modulus(long p, int beta, int skip) {
    long long count = ipow(p, beta);
    int found = 0;
    for (long long code = 0; code < count; ++code) {
        // ascending code = lex order on (c_0, c_1, ..., c_{beta-1})
        std::vector<long long> f(beta + 1, 0);
        long long c = code;
        for (int i = beta - 1; i >= 0; --i) {
            f[i] = c % p;
            c /= p;
        }
        f[beta] = 1;
        if (is_primitive(f, p)) {
            if (found == skip) return f;
            ++found;
        }
    }
    throw std::logic_error("no primitive polynomial found");
}

}  // namespace

RingElement RingSpec::one() const { return from_int(1); }

RingElement RingSpec::from_int(long long n) const {
    RingElement r = zero();
    n %= pk;
    if (n < 0) n += pk;
    r[0] = n;
    return r;
}

RingElement RingSpec::gen() const {
    RingElement r = zero();
    if (beta == 1) {
        r[0] = ((pk - modulus[0]) % pk + pk) % pk;  // root of y + c0
    } else {
        r[1] = 1;
    }
    return r;
}

RingElement RingSpec::add(const RingElement& a, const RingElement& b) const {
    RingElement r(beta);
    for (int i = 0; i < beta; ++i) r[i] = (a[i] + b[i]) % pk;
    return r;
}

RingElement RingSpec::sub(const RingElement& a, const RingElement& b) const {
    RingElement r(beta);
    for (int i = 0; i < beta; ++i) r[i] = ((a[i] - b[i]) % pk + pk) % pk;
    return r;
}

RingElement RingSpec::neg(const RingElement& a) const { return sub(zero(), a); }

RingElement RingSpec::mul(const RingElement& a, const RingElement& b) const {
    std::vector<long long> r(2 * beta - 1, 0);
    for (int i = 0; i < beta; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < beta; ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % pk;
    }
    for (int i = 2 * beta - 2; i >= beta; --i) {
        long long c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (int j = 0; j < beta; ++j)
            r[i - beta + j] = ((r[i - beta + j] - c * modulus[j]) % pk + pk) % pk;
    }
    r.resize(beta);
    return r;
}

RingElement RingSpec::mul_scalar(const RingElement& a, long long n) const {
    RingElement r(beta);
    n %= pk;
    if (n < 0) n += pk;
    for (int i = 0; i < beta; ++i) r[i] = a[i] * n % pk;
    return r;
}

RingElement RingSpec::pow(const RingElement& a, long long e) const {
    RingElement r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool RingSpec::is_unit(const RingElement& a) const {
    for (long long c : a)
        if (c % p != 0) return true;
    return false;
}

bool RingSpec::is_zero(const RingElement& a) const {
    for (long long c : a)
        if (c != 0) return false;
    return true;
}

RingElement RingSpec::reduce_mod_p(const RingElement& a) const {
    RingElement r(beta);
    for (int i = 0; i < beta; ++i) r[i] = a[i] % p;
    return r;
}

long long RingSpec::rank(const RingElement& a) const {
    long long r = 0;
    for (int i = beta - 1; i >= 0; --i) r = r * pk + a[i];
    return r;
}

RingElement RingSpec::unrank(long long r) const {
    RingElement a(beta);
    for (int i = 0; i < beta; ++i) {
        a[i] = r % pk;
        r /= pk;
    }
    return a;
}

GroupSpec RingSpec::additive_group() const {
    return make_group(p, std::vector<int>(beta, k));
}

GroupElement RingSpec::to_group(const RingElement& a) const {
    GroupElement g(beta);
    for (int i = 0; i < beta; ++i) g[i] = static_cast<int>(a[i]);
    return g;
}

RingElement RingSpec::from_group(const GroupElement& g) const {
    RingElement a(beta);
    for (int i = 0; i < beta; ++i) a[i] = g[i];
    return a;
}

std::string RingSpec::str() const {
    std::string s = "GR(" + std::to_string(p) + "^" + std::to_string(k) + ", " +
                    std::to_string(beta) + "; modulus=[";
    for (int i = 0; i <= beta; ++i) {
        if (i) s += ",";
        s += std::to_string(modulus[i]);
    }
    return s + "])";
}

RingSpec parse_ring_spec(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    long p;
    int k, beta;
    if (sscanf(t.c_str(), "GR(%ld^%d,%d;modulus=[", &p, &k, &beta) != 3)
        throw std::invalid_argument("bad ring spec string");
    auto lb = t.find('[');
    auto rb = t.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw std::invalid_argument("bad ring spec string");
    std::vector<long long> mod;
    std::stringstream ss(t.substr(lb + 1, rb - lb - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) mod.push_back(std::stoll(tok));
    if (static_cast<int>(mod.size()) != beta + 1 || mod[beta] != 1)
        throw std::invalid_argument("modulus must be monic of degree beta");
    RingSpec R;
    R.p = p;
    R.k = k;
    R.beta = beta;
    R.modulus = mod;
    R.q = ipow(p, beta);
    R.pk = ipow(p, k);
    if (k != 1 && k != 2) throw std::invalid_argument("k must be 1 or 2");
    return R;
}

static RingSpec make_ring_impl(long p, int beta, int k, int skip) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    if (beta < 1) throw std::invalid_argument("beta must be positive");
    RingSpec R;
    R.p = p;
    R.k = k;
    R.beta = beta;
    R.modulus = find_primitive_modulus(p, beta, skip);
    R.q = ipow(p, beta);
    R.pk = ipow(p, k);
    return R;
}

RingSpec make_field(long p, int beta, int skip) {
    return make_ring_impl(p, beta, 1, skip);
}

RingSpec make_ring(long p, int beta, int skip) {
    return make_ring_impl(p, beta, 2, skip);
}

RingElement teichmuller(const RingSpec& R, const RingElement& x) {
    if (!R.is_unit(x)) throw std::invalid_argument("Teichmuller lift of a non-unit");
    RingElement t = x;
    for (int guard = 0; guard < 4; ++guard) {
        RingElement n = R.pow(t, R.q);
        if (n == t) return t;
        t = n;
    }
    throw std::logic_error("Teichmuller iteration did not stabilize");
}

std::vector<RingElement> teichmuller_set(const RingSpec& R) {
    RingElement g = teichmuller(R, R.gen());
    std::vector<RingElement> mu;
    mu.reserve(R.q - 1);
    RingElement cur = R.one();
    for (long long i = 0; i < R.q - 1; ++i) {
        mu.push_back(cur);
        cur = R.mul(cur, g);
    }
    if (!(cur == R.one()))
        throw std::logic_error("Teichmuller generator has wrong order");
    return mu;
}

TeichDecomp teich_decompose(const RingSpec& R, const RingElement& gamma) {
    if (R.k == 1) return {gamma, R.zero()};
    TeichDecomp d;
    d.r0 = R.is_unit(gamma) ? teichmuller(R, gamma) : R.zero();
    RingElement rem = R.sub(gamma, d.r0);  // divisible by p
    RingElement z(R.beta);
    for (int i = 0; i < R.beta; ++i) {
        if (rem[i] % R.p != 0)
            throw std::logic_error("Teichmuller decomposition failed");
        z[i] = rem[i] / R.p;
    }
    // the digit only depends on z mod p, and z^q mod p^2 computes its lift
    d.r1 = R.is_zero(R.reduce_mod_p(z)) ? R.zero() : R.pow(z, R.q);
    return d;
}

RingElement frobenius(const RingSpec& R, const RingElement& gamma) {
    if (R.k == 1) return R.pow(gamma, R.p);
    TeichDecomp d = teich_decompose(R, gamma);
    return R.add(R.pow(d.r0, R.p), R.mul_scalar(R.pow(d.r1, R.p), R.p));
}

long long trace(const RingSpec& R, const RingElement& gamma) {
    RingElement acc = R.zero(), cur = gamma;
    for (int i = 0; i < R.beta; ++i) {
        acc = R.add(acc, cur);
        cur = frobenius(R, cur);
    }
    if (!(cur == gamma)) throw std::logic_error("Frobenius order != beta");
    for (int i = 1; i < R.beta; ++i)
        if (acc[i] != 0) throw std::logic_error("trace did not land in Z/p^k");
    return acc[0];
}

int qr_symbol(const RingSpec& F, const RingElement& x) {
    if (F.k != 1) throw std::invalid_argument("qr_symbol works on fields");
    if (F.is_zero(x)) return 0;
    RingElement r = F.pow(x, (F.q - 1) / 2);
    if (r == F.one()) return 1;
    if (r == F.neg(F.one())) return -1;
    throw std::logic_error("x^{(q-1)/2} not +-1");
}

OrbitReps orbit_reps(const RingSpec& R, bool qr_refined) {
    if (R.k != 2) throw std::invalid_argument("orbit reps need GR(p^2, beta)");
    if (qr_refined && R.beta % 2 == 0)
        throw std::invalid_argument(
            "quadratic-residue representatives need odd beta");
    OrbitReps res;
    res.ring = R;
    res.field = R;
    res.field.k = 1;
    res.field.pk = R.p;
    res.qr_refined = qr_refined;

    auto mu = teichmuller_set(R);  // powers of the generator lift
    long long m = (R.q - 1) / (R.p - 1);
    // mu_{p-1} = <gen^m>; coset reps of mu/mu_{p-1} are gen^i, i < m.
    // For the quadratic-residue refinement use gen^{2i}, which represent
    // mu^2/mu_{p-1}^2 and hence also mu/mu_{p-1}.
    for (long long i = 0; i < m; ++i)
        res.l.push_back(mu[(qr_refined ? 2 * i : i) % (R.q - 1)]);

    // additive coset reps of F_p in F_q: zero constant coefficient, lex
    // order, then Teichmuller-lifted (0 stays 0).
    long long count = ipow(R.p, R.beta - 1);
    for (long long code = 0; code < count; ++code) {
        RingElement lift(R.beta, 0);
        long long tmp = code;
        for (int i = 1; i < R.beta; ++i) {
            lift[i] = tmp % R.p;
            tmp /= R.p;
        }
        res.lprime.push_back(R.is_unit(lift) ? teichmuller(R, lift) : lift);
    }
    // reps with l'_1 = 0 first; the remaining order is the lex order of the
    // underlying residue vectors, which the mixed-radix loop above provides
    if (!R.is_zero(res.lprime[0]))
        throw std::logic_error("l'_1 must correspond to 0");

    res.h.assign(res.l.size(), std::vector<RingElement>(res.lprime.size()));
    for (size_t i = 0; i < res.l.size(); ++i)
        for (size_t j = 0; j < res.lprime.size(); ++j) {
            RingElement u = R.add(R.one(), R.mul_scalar(res.lprime[j], R.p));
            res.h[i][j] = R.mul(res.l[i], u);
        }
    return res;
}

UnitOrbitTable galois_orbit_table(const OrbitReps& reps) {
    const RingSpec& R = reps.ring;
    GroupSpec H = R.additive_group();
    std::vector<GroupElement> order;
    for (const auto& li : reps.l)
        order.push_back(R.to_group(R.mul_scalar(li, R.p)));
    for (size_t j = 0; j < reps.lprime.size(); ++j)
        for (size_t i = 0; i < reps.l.size(); ++i)
            order.push_back(R.to_group(reps.h[i][j]));
    UnitOrbitTable T = orbit_tables_with_reps(H, order, OrbitOrdering::Galois);
    T.pairing_tag = "trace:" + R.str();
    return T;
}

UnitOrbitTable galois_orbit_table_field(const OrbitReps& reps) {
    const RingSpec& F = reps.field;
    GroupSpec L = F.additive_group();
    std::vector<GroupElement> order;
    for (const auto& li : reps.l)
        order.push_back(F.to_group(F.reduce_mod_p(li)));
    UnitOrbitTable T = orbit_tables_with_reps(L, order, OrbitOrdering::Galois);
    T.pairing_tag = "trace:" + F.str();
    return T;
}

Pairing trace_pairing(const RingSpec& R) {
    GroupSpec G = R.additive_group();
    std::vector<std::vector<long long>> gram(
        R.beta, std::vector<long long>(R.beta, 0));
    RingElement y = R.gen();
    for (int i = 0; i < R.beta; ++i)
        for (int j = 0; j < R.beta; ++j)
            gram[i][j] = trace(R, R.pow(y, i + j));
    return Pairing::from_gram(G, Pairing::Kind::GaloisTrace, std::move(gram),
                              "trace:" + R.str());
}

AlgebraElement paley_set(long p, int m) {
    if (m % 2 == 0) throw std::invalid_argument("Paley set needs odd degree");
    RingSpec F = make_field(p, m);
    GroupSpec G = F.additive_group();
    AlgebraElement D(G);
    for (long long r = 1; r < F.q; ++r) {
        RingElement x = F.unrank(r);
        if (qr_symbol(F, x) == 1) D.set_coeff(F.to_group(x), 1);
    }
    return D;
}

GshdsCertificate verify_paley(long p, int m) {
    return check_gshds(paley_set(p, m));
}

}  // namespace gshds
