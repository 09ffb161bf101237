#include "gshds/conditions.hpp"

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

int valuation(long long n, long p) {
    if (n == 0) throw std::logic_error("valuation of 0");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// entry-rule symbol: (T/p | p) when T is p times a unit mod p^2, else 0
int block_symbol(long long T, long p) {
    long long p2 = static_cast<long long>(p) * p;
    T %= p2;
    if (T < 0) T += p2;
    if (T == 0 || T % p != 0) return 0;
    return legendre(T / p, p);
}

}  // namespace

LambdaInstance lambda_matrix(long p, int alpha, int embedding_skip) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    LambdaInstance inst;
    inst.p = p;
    inst.alpha = alpha;
    int beta = 2 * alpha + 1;
    inst.ring = make_ring(p, beta, embedding_skip);
    inst.reps = orbit_reps(inst.ring, /*qr_refined=*/true);
    inst.blocks = block_decompose(inst.reps);
    if (!inst.blocks.bh_ok) {
        inst.failure = "block decomposition failed: " + inst.blocks.failure;
        return inst;
    }
    const RingSpec& R = inst.ring;
    long nb = static_cast<long>(inst.reps.lprime.size());  // p^{2 alpha}
    long m = inst.reps.m();

    inst.L = int_mat(nb, nb);
    for (long s = 0; s < nb; ++s)
        for (long t = 0; t < nb; ++t) {
            RingElement u = R.add(
                R.one(), R.mul_scalar(R.add(inst.reps.lprime[s],
                                            inst.reps.lprime[t]), p));
            long long acc = 0;
            for (long j = 0; j < m; ++j)
                acc += block_symbol(trace(R, R.mul(inst.reps.l[j], u)), p);
            inst.L[s][t] = acc;
        }

    // J_{H,s,t} j = lambda_{s,t} j
    inst.eigen_ok = true;
    for (long s = 0; s < nb && inst.eigen_ok; ++s)
        for (long t = 0; t < nb && inst.eigen_ok; ++t) {
            const IntMat& J = inst.blocks.J[s][t];
            for (long i = 0; i < m && inst.eigen_ok; ++i) {
                long long row = 0;
                for (long j = 0; j < m; ++j) row += J[i][j];
                if (row != inst.L[s][t]) {
                    inst.eigen_ok = false;
                    inst.failure = "J_{H,s,t} j != lambda_{s,t} j at (s,t) = (" +
                                   std::to_string(s) + "," + std::to_string(t) +
                                   ")";
                }
            }
        }
    if (!inst.eigen_ok) return inst;

    // A_{L,L_1} j = eps0 p^alpha j
    long long pa = ipow(p, alpha);
    long long first = 0;
    inst.eps0_ok = true;
    for (long i = 0; i < m && inst.eps0_ok; ++i) {
        long long row = 0;
        for (long j = 0; j < m; ++j) row += inst.blocks.A_L[i][j];
        if (i == 0) {
            first = row;
            if (row != pa && row != -pa) inst.eps0_ok = false;
        } else if (row != first) {
            inst.eps0_ok = false;
        }
    }
    if (!inst.eps0_ok) {
        inst.failure = "A_L j is not eps0 p^alpha j";
        return inst;
    }
    inst.eps0 = first > 0 ? 1 : -1;

    // L^2 = p^{2a-1} (p^{2a} I - J), L^T = L, zero row sums
    IntMat want = mat_scale(
        mat_sub(identity_mat(nb, ipow(p, 2 * alpha)), ones_mat(nb)),
        ipow(p, 2 * alpha - 1));
    inst.square_ok = mat_mul(inst.L, inst.L) == want;
    inst.symmetric_ok = mat_transpose(inst.L) == inst.L;
    inst.row_sums_zero = true;
    for (long s = 0; s < nb; ++s) {
        long long row = 0;
        for (long t = 0; t < nb; ++t) row += inst.L[s][t];
        if (row != 0) inst.row_sums_zero = false;
    }
    if (!inst.square_ok || !inst.symmetric_ok || !inst.row_sums_zero) {
        inst.failure = "lambda matrix identity failed";
        return inst;
    }

    // identify the l' blocks with K = (Z/p)^{2 alpha} by the nonconstant
    // field coordinates of their reductions
    inst.K = make_group(p, std::vector<int>(2 * alpha, 1));
    std::vector<char> seen(inst.K.v, 0);
    for (long j = 0; j < nb; ++j) {
        RingElement red = R.reduce_mod_p(inst.reps.lprime[j]);
        GroupElement kj(2 * alpha);
        for (int i = 1; i < beta; ++i) kj[i - 1] = static_cast<int>(red[i]);
        if (seen[inst.K.rank(kj)])
            throw std::logic_error("l' blocks do not biject onto K");
        seen[inst.K.rank(kj)] = 1;
        inst.k_of_block.push_back(kj);
    }
    inst.identities_ok = true;
    return inst;
}

LZeroInstance build_L0(const LambdaInstance& inst) {
    if (!inst.identities_ok)
        throw std::invalid_argument("lambda instance is not valid");
    const GroupSpec& K = inst.K;
    long nb = static_cast<long>(inst.k_of_block.size());
    LZeroInstance lz;
    lz.L0 = AlgebraElement(K);
    // block 0 is l'_1 = 0, so row 0 of L is the coefficient list
    for (long j = 0; j < nb; ++j)
        lz.L0.set_coeff(inst.k_of_block[j], inst.L[0][j]);

    long p = inst.p;
    int a = inst.alpha;
    lz.chi0_zero = lz.L0.coefficient_sum() == 0;

    Pairing theta = Pairing::diagonal(K);
    lz.char_norm_ok = true;
    long long want_norm = ipow(p, 4 * a - 1);
    for (long long r = 1; r < K.v; ++r) {
        Cyclotomic c = char_value(lz.L0, K.unrank(r), theta);
        Cyclotomic n = c * c.conj();
        if (!n.is_integer() || n.integer_value() != want_norm) {
            lz.char_norm_ok = false;
            break;
        }
    }

    // L0(x) L0(x^{-1}) = p^{4a-1}[1] - p^{2a-1} K(x)
    AlgebraElement conv = convolve(lz.L0, power_map(lz.L0, -1));
    AlgebraElement expect(K);
    for (long long r = 0; r < K.v; ++r)
        expect.add_coeff(K.unrank(r), -ipow(p, 2 * a - 1));
    expect.add_coeff(K.zero(), ipow(p, 4 * a - 1));
    lz.convolution_ok = conv == expect;

    // rho_K(g^{-1}) L = L rho_K(g): L[perm_g(s)][t] == L[s][perm_g(t)]
    lz.intertwine_ok = true;
    std::vector<long long> rank_of_block(nb);
    std::vector<long> block_of_rank(K.v);
    for (long j = 0; j < nb; ++j) {
        rank_of_block[j] = K.rank(inst.k_of_block[j]);
        block_of_rank[rank_of_block[j]] = j;
    }
    for (long long rg = 0; rg < K.v && lz.intertwine_ok; ++rg) {
        GroupElement g = K.unrank(rg);
        std::vector<long> perm(nb);
        for (long j = 0; j < nb; ++j)
            perm[j] = block_of_rank[K.rank(K.add(inst.k_of_block[j], g))];
        for (long s = 0; s < nb && lz.intertwine_ok; ++s)
            for (long t = 0; t < nb; ++t)
                if (inst.L[perm[s]][t] != inst.L[s][perm[t]]) {
                    lz.intertwine_ok = false;
                    break;
                }
    }
    return lz;
}

std::string l0_artifact_json(const LambdaInstance& inst,
                             const LZeroInstance& lz) {
    nlohmann::ordered_json j;
    j["schema"] = "gshds/1";
    j["p"] = inst.p;
    j["alpha"] = inst.alpha;
    j["ring"] = inst.ring.str();
    j["modulus"] = inst.ring.modulus;
    nlohmann::ordered_json lreps = nlohmann::ordered_json::array();
    for (const auto& l : inst.reps.l) lreps.push_back(l);
    j["l_reps"] = lreps;
    nlohmann::ordered_json lp = nlohmann::ordered_json::array();
    for (const auto& l : inst.reps.lprime) lp.push_back(l);
    j["lprime_reps"] = lp;
    j["eps0"] = inst.eps0;
    j["lambda_row0"] = inst.L[0];
    nlohmann::ordered_json l0 = nlohmann::ordered_json::array();
    for (long long r = 0; r < inst.K.v; ++r) {
        nlohmann::ordered_json item;
        item["coords"] = inst.K.unrank(r);
        item["coeff"] = lz.L0.coeff_at_rank(r);
        l0.push_back(item);
    }
    j["l0"] = l0;
    nlohmann::ordered_json ids;
    ids["eigenvector_blocks"] = inst.eigen_ok ? "pass" : "fail";
    ids["eps0_row_sums"] = inst.eps0_ok ? "pass" : "fail";
    ids["lambda_square"] = inst.square_ok ? "pass" : "fail";
    ids["lambda_symmetric"] = inst.symmetric_ok ? "pass" : "fail";
    ids["lambda_row_sums_zero"] = inst.row_sums_zero ? "pass" : "fail";
    ids["chi0_zero"] = lz.chi0_zero ? "pass" : "fail";
    ids["char_norm"] = lz.char_norm_ok ? "pass" : "fail";
    ids["convolution"] = lz.convolution_ok ? "pass" : "fail";
    ids["intertwining"] = lz.intertwine_ok ? "pass" : "fail";
    j["identities"] = ids;
    return j.dump(2) + "\n";
}

AbCheck check_ab_witness(const LambdaInstance& inst, const LZeroInstance& lz,
                         const ABWitness& w) {
    AbCheck res;
    const GroupSpec& K = inst.K;
    long p = inst.p;
    int a = inst.alpha;
    long long p2a = ipow(p, 2 * a);

    long long chiA = w.A.coefficient_sum();
    long long chiB = w.B.coefficient_sum();

    // part 1: p^{2a} A = chi0(A) K + L0 * B(x^{-1})
    {
        AlgebraElement rhs = convolve(lz.L0, power_map(w.B, -1));
        for (long long r = 0; r < K.v; ++r) rhs.add_coeff(K.unrank(r), chiA);
        if (!(w.A * p2a == rhs)) {
            res.first_violation = "part 1";
            return res;
        }
    }
    // part 2: p^{2a} B = chi0(B) K + p L0 * A(x^{-1})
    {
        AlgebraElement rhs = convolve(lz.L0, power_map(w.A, -1)) * p;
        for (long long r = 0; r < K.v; ++r) rhs.add_coeff(K.unrank(r), chiB);
        if (!(w.B * p2a == rhs)) {
            res.first_violation = "part 2";
            return res;
        }
    }
    if (chiA != ipow(p, a - 1) * inst.eps0 * w.b0) {
        res.first_violation = "part 3";
        return res;
    }
    if (chiB != ipow(p, a) * inst.eps0 * w.a0) {
        res.first_violation = "part 4";
        return res;
    }
    for (long long r = 0; r < K.v; ++r)
        if (w.A.coeff_at_rank(r) % 2 == 0) {
            res.first_violation = "part 5";
            return res;
        }
    if (chiA % 2 == 0) {
        res.first_violation = "part 5";
        return res;
    }
    for (long long r = 0; r < K.v; ++r)
        if (w.B.coeff_at_rank(r) % 2 == 0) {
            res.first_violation = "part 6";
            return res;
        }
    if (chiB % 2 == 0) {
        res.first_violation = "part 6";
        return res;
    }
    if (w.a0 % 2 == 0 || w.b0 % 2 == 0) {
        res.first_violation = "part 7";
        return res;
    }
    res.ok = true;
    return res;
}

AbCheck ab_conditions_check(const LambdaInstance& inst, const LZeroInstance& lz,
                            const std::vector<int>& dprime,
                            const std::vector<long long>& nuprime,
                            ABWitness* witness_out) {
    AbCheck res;
    const GroupSpec& K = inst.K;
    long p = inst.p;
    int a = inst.alpha;
    long nb = static_cast<long>(inst.k_of_block.size());  // p^{2a}
    long m = inst.reps.m();
    size_t want_len = static_cast<size_t>(m) * (nb + 1);
    if (dprime.size() != want_len || nuprime.size() != want_len)
        throw std::invalid_argument("d'/nu' must cover all H_1 orbit blocks");
    for (int x : dprime)
        if (x != 1 && x != -1)
            throw std::invalid_argument("d' entries must be +-1");
    for (long long x : nuprime)
        if (x % 2 == 0 || x <= -p || x >= p)
            throw std::invalid_argument("nu' entries must be odd in (-p, p)");

    auto block_sum = [&](const auto& vec, long i) {
        long long s = 0;
        for (long t = 0; t < m; ++t) s += vec[i * m + t];
        return s;
    };
    long long a0 = block_sum(dprime, 0), b0 = block_sum(nuprime, 0);
    std::vector<long long> av(nb), bv(nb);
    for (long i = 0; i < nb; ++i) {
        av[i] = block_sum(dprime, i + 1);
        bv[i] = block_sum(nuprime, i + 1);
    }
    long long sum_a = 0, sum_b = 0;
    for (long i = 0; i < nb; ++i) {
        sum_a += av[i];
        sum_b += bv[i];
    }

    if (sum_a != ipow(p, a - 1) * inst.eps0 * b0) {
        res.first_violation = "gr_cond_eqn1";
        return res;
    }
    std::vector<long long> La = mat_vec(inst.L, av);
    std::vector<long long> Lb = mat_vec(inst.L, bv);
    for (long i = 0; i < nb; ++i)
        if (ipow(p, 2 * a - 1) * bv[i] !=
            ipow(p, a - 1) * inst.eps0 * a0 + La[i]) {
            res.first_violation = "gr_cond_eqn2";
            return res;
        }
    if (sum_b != ipow(p, a) * inst.eps0 * a0) {
        res.first_violation = "gr_cond_eqn3";
        return res;
    }
    for (long i = 0; i < nb; ++i)
        if (ipow(p, 2 * a) * av[i] !=
            ipow(p, a - 1) * inst.eps0 * b0 + Lb[i]) {
            res.first_violation = "gr_cond_eqn4";
            return res;
        }

    ABWitness w;
    w.A = AlgebraElement(K);
    w.B = AlgebraElement(K);
    for (long i = 0; i < nb; ++i) {
        w.A.set_coeff(inst.k_of_block[i], av[i]);
        w.B.set_coeff(inst.k_of_block[i], bv[i]);
    }
    w.a0 = a0;
    w.b0 = b0;
    if (witness_out) *witness_out = w;
    return check_ab_witness(inst, lz, w);
}

AbSearchResult ab_feasibility_search(const LambdaInstance& inst,
                                     const LZeroInstance& lz, int coeff_bound,
                                     long long budget, long long resume) {
    if (coeff_bound < 1 || coeff_bound % 2 == 0)
        throw std::invalid_argument("coeff_bound must be odd and positive");
    const GroupSpec& K = inst.K;
    long p = inst.p;
    int a = inst.alpha;
    long dim = static_cast<long>(K.v);
    long vals = coeff_bound + 1;  // odd values in [-bound, bound]
    auto value_of = [&](long idx) {
        long long v = -coeff_bound + 2 * idx;
        return v;
    };

    long long side = 1;
    for (long i = 0; i < dim; ++i) side *= vals;
    long long total = side * side;

    AbSearchResult out;
    out.box_description =
        "A,B in Z[" + group_dsl(K) + "], coefficients odd with |c| <= " +
        std::to_string(coeff_bound);

    auto vector_at = [&](long long idx) {
        AlgebraElement e(K);
        for (long i = 0; i < dim; ++i) {
            e.add_coeff(K.unrank(i), value_of(idx % vals));
            idx /= vals;
        }
        return e;
    };

    // precompute the B side convolutions when the box is small enough
    std::vector<AlgebraElement> convB;
    bool cacheB = side <= 4096;
    if (cacheB) {
        convB.reserve(side);
        for (long long bi = 0; bi < side; ++bi)
            convB.push_back(convolve(lz.L0, power_map(vector_at(bi), -1)));
    }

    long long p2a = ipow(p, 2 * a);
    long long idx = resume;
    for (; idx < total && out.pairs_examined < budget; ++idx) {
        long long ai = idx / side, bi = idx % side;
        ++out.pairs_examined;
        AlgebraElement A = vector_at(ai);
        AlgebraElement B = vector_at(bi);
        long long chiA = A.coefficient_sum(), chiB = B.coefficient_sum();
        // parts 3/4 gate: a0, b0 must be odd integers
        long long pa1 = ipow(p, a - 1), pa = ipow(p, a);
        if (chiA % pa1 != 0 || chiB % pa != 0) continue;
        long long b0 = inst.eps0 * (chiA / pa1);
        long long a0 = inst.eps0 * (chiB / pa);
        if (a0 % 2 == 0 || b0 % 2 == 0) continue;
        // part 1 via the cached convolution
        AlgebraElement rhs =
            cacheB ? convB[bi] : convolve(lz.L0, power_map(B, -1));
        bool ok = true;
        for (long long r = 0; r < K.v && ok; ++r)
            if (A.coeff_at_rank(r) * p2a != rhs.coeff_at_rank(r) + chiA)
                ok = false;
        if (!ok) continue;
        ABWitness w{A, B, a0, b0};
        AbCheck chk = check_ab_witness(inst, lz, w);
        if (chk.ok) out.witnesses.push_back(std::move(w));
    }
    out.exhausted = idx >= total;
    out.resume_token = idx;
    return out;
}

Alpha1Report alpha1_checks(const AlgebraElement& D, long n0) {
    const GroupSpec& G = D.group();
    Alpha1Report rep;
    if (G.exponents.size() != 4 || G.exponents != std::vector<int>{2, 2, 2, 1})
        return rep;  // wrong family
    rep.group_shape_ok = true;
    if (n0 == 0) n0 = smallest_qnr(G.p);

    QrsContext ctx = make_qrs_context(G);
    try {
        qrs_encode(ctx, D);
        rep.input_is_qrs = true;
    } catch (const std::exception& e) {
        rep.qrs_failure = e.what();
        return rep;
    }

    KernelImage KI = kernel_image_mu(G, 1);
    const Subgroup& Hp = KI.kernel;  // H' = { g : p g = 0 }
    const Subgroup& L = KI.image;    // p G = (Z/p)^3
    AlgebraElement Drest = restrict_to(D, L);

    QrsContext sub = make_qrs_context(L.spec);
    SignVector d_rest;
    try {
        d_rest = qrs_encode(sub, Drest);
    } catch (const std::exception& e) {
        rep.restriction_reason = std::string("restriction not a QRS: ") + e.what();
        return rep;
    }
    GshdsVerdict verdict = is_gshds(sub, d_rest);
    rep.restriction_is_gshds = verdict.is_gshds;
    if (!verdict.is_gshds) rep.restriction_reason = verdict.reason;

    // nu_{G,H'}(g_i, D) = p^2 d_i at lifts g_i of the L_1-orbit reps
    AlgebraElement Dn = power_map(D, n0);
    long long p2 = static_cast<long long>(G.p) * G.p;
    rep.nu_identity_ok = true;
    for (long i = 0; i < sub.r(); ++i) {
        GroupElement emb = L.embed(sub.table.reps[i]);
        GroupElement lift = G.zero();
        for (size_t c = 0; c < G.exponents.size(); ++c) {
            if (G.exponents[c] >= 2) {
                lift[c] = static_cast<int>(emb[c] / G.p);
            } else if (emb[c] != 0) {
                throw std::logic_error("image element not in p G");
            }
        }
        long long nu = 0;
        for (const auto& h : Hp.elements) {
            GroupElement g = G.add(lift, h);
            nu += D.coeff(g) - Dn.coeff(g);
        }
        rep.nu_values.push_back(nu);
        rep.expected_values.push_back(p2 * d_rest[i]);
        if (nu != p2 * d_rest[i]) rep.nu_identity_ok = false;
    }
    return rep;
}

PowerCoeffs power_coeffs(const AlgebraElement& D, int k, long n0) {
    const GroupSpec& G = D.group();
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (n0 == 0) n0 = smallest_qnr(G.p);
    GshdsCertificate cert = check_gshds(D, n0);
    if (!cert.ok())
        throw std::invalid_argument("power coefficients need a verified GSHDS");
    int alpha = (G.beta - 1) / 2;
    long p = G.p;

    PowerCoeffs pc;
    pc.k = k;
    pc.pk = ipow(p, k);
    if (pc.pk > 2200)
        throw std::invalid_argument("p^k too large for the convolution path");

    AlgebraElement Dn = power_map(D, n0);
    AlgebraElement P = AlgebraElement::unit(G);
    for (long long i = 0; i < pc.pk; ++i) P = convolve(P, D);

    pc.c = P.coeff_at_rank(0);
    bool a_set = false, b_set = false;
    pc.identity_ok = true;
    for (long long r = 1; r < G.v; ++r) {
        if (D.coeff_at_rank(r) == 1) {
            if (!a_set) {
                pc.a = P.coeff_at_rank(r);
                a_set = true;
            } else if (P.coeff_at_rank(r) != pc.a) {
                pc.identity_ok = false;
            }
        } else {
            if (!b_set) {
                pc.b = P.coeff_at_rank(r);
                b_set = true;
            } else if (P.coeff_at_rank(r) != pc.b) {
                pc.identity_ok = false;
            }
        }
    }

    // a - b = 2^{1-p^k} sum_f C(p^k, 2f+1) p^{(2a+1) f} (-1|p)^f
    {
        __int128 sum = 0;
        __int128 binom = pc.pk;  // C(p^k, 1)
        for (long long f = 0; 2 * f + 1 <= pc.pk; ++f) {
            __int128 term = binom;
            for (long long t = 0; t < (2 * alpha + 1) * f; ++t) term *= p;
            if (f % 2 == 1 && legendre(-1, p) == -1) term = -term;
            sum += term;
            // C(n, r+2) = C(n, r) (n-r)(n-r-1) / ((r+1)(r+2))
            long long r = 2 * f + 1;
            binom = binom * (pc.pk - r) / (r + 1);
            binom = binom * (pc.pk - r - 1) / (r + 2);
        }
        __int128 denom = 1;
        for (long long t = 1; t < pc.pk; ++t) denom *= 2;
        if (sum % denom != 0)
            throw std::logic_error("closed form not divisible by 2^{p^k-1}");
        __int128 val = sum / denom;
        pc.a_minus_b_closed = static_cast<long long>(val);
        pc.closed_form_ok = (pc.a - pc.b) == pc.a_minus_b_closed;
    }
    pc.vp_a_minus_b = valuation(pc.a - pc.b, p);
    pc.vp_ok = pc.vp_a_minus_b == k;

    // parts 2 and 4 on H = p^k G: the pushforward of D - D^{(n0)} carries
    // every nu_{G,L}(g, D) as the coefficient at mu_{p^k}(g)
    KernelImage KI = kernel_image_mu(G, std::min(k, G.s));
    const Subgroup& H = KI.image;
    AlgebraElement push_G = power_map(D - Dn, pc.pk);
    AlgebraElement P2 = restrict_to(push_G, H);
    if (push_G.support_size() != P2.support_size())
        throw std::logic_error("pushforward escaped the image subgroup");

    pc.nu_divisible_ok = true;
    for (long long r = 0; r < H.spec.v; ++r)
        if (P2.coeff_at_rank(r) % pc.pk != 0) pc.nu_divisible_ok = false;

    pc.orbit_congruence_ok = true;
    if (!H.spec.is_trivial()) {
        UnitOrbitTable HT = orbit_tables(H.spec);
        // covariance collapse: P2 = sum_i nu_i (O_i - O_i^{(n0)})
        AlgebraElement S(H.spec);
        for (long i = 0; i < HT.r(); ++i) {
            long long nu = P2.coeff(HT.reps[i]);
            pc.nu_values.push_back(nu);
            for (const auto& g : HT.orbit_pos[i]) S.add_coeff(g, nu);
            for (const auto& g : HT.orbit_neg[i]) S.add_coeff(g, -nu);
        }
        if (!(S == P2)) pc.orbit_congruence_ok = false;
        // residual (a-b)(D_H - D_H^{(n0)}) - P2 = p^k (C_H - C_H^{(n0)})
        AlgebraElement DH = restrict_to(D, H);
        AlgebraElement DHn = power_map(DH, n0);
        AlgebraElement R = (DH - DHn) * (pc.a - pc.b) - P2;
        AlgebraElement Rn = power_map(R, n0);
        for (long long r = 0; r < H.spec.v; ++r) {
            if (R.coeff_at_rank(r) % pc.pk != 0) pc.orbit_congruence_ok = false;
            if (Rn.coeff_at_rank(r) != -R.coeff_at_rank(r))
                pc.orbit_congruence_ok = false;
        }
    } else {
        if (P2.coeff_at_rank(0) != 0) pc.orbit_congruence_ok = false;
    }
    return pc;
}

std::string power_coeffs_json(const GroupSpec& G, const PowerCoeffs& pc) {
    nlohmann::ordered_json j;
    j["schema"] = "gshds/1";
    j["group"] = group_dsl(G);
    j["k"] = pc.k;
    j["p_pow_k"] = pc.pk;
    j["c"] = pc.c;
    j["a"] = pc.a;
    j["b"] = pc.b;
    j["a_minus_b"] = pc.a - pc.b;
    j["a_minus_b_closed_form"] = pc.a_minus_b_closed;
    j["vp_a_minus_b"] = pc.vp_a_minus_b;
    j["identity"] = pc.identity_ok ? "pass" : "fail";
    j["closed_form"] = pc.closed_form_ok ? "pass" : "fail";
    j["vp_equals_k"] = pc.vp_ok ? "pass" : "fail";
    j["nu_divisible"] = pc.nu_divisible_ok ? "pass" : "fail";
    j["nu_values"] = pc.nu_values;
    j["orbit_congruence"] = pc.orbit_congruence_ok ? "pass" : "fail";
    return j.dump(2) + "\n";
}

BoundReport exponent_bound_report(const GroupSpec& G) {
    BoundReport rep;
    rep.group = G;
    int beta = G.beta, s = G.s;
    bool odd = beta % 2 == 1;
    int alpha = odd ? (beta - 1) / 2 : -1;

    {
        BoundRule r;
        r.rule = "square_order";
        r.applicable = true;
        r.excluded = !odd;
        r.detail = "beta = " + std::to_string(beta) +
                   (odd ? " is odd" : " is even, so |G| is a square");
        rep.rules.push_back(r);
    }
    {
        BoundRule r;
        r.rule = "composite_order";
        r.applicable = true;
        r.excluded = false;
        r.detail = "|G| = " + std::to_string(G.p) + "^" + std::to_string(beta) +
                   " is a prime power by construction";
        rep.rules.push_back(r);
    }
    {
        BoundRule r;
        r.rule = "camion_mann";
        r.applicable = s >= 2;
        if (r.applicable) {
            bool shape_ok = G.exponents.size() >= 2 && G.exponents[1] == s;
            r.excluded = !shape_ok;
            r.detail = shape_ok
                           ? "a1 = a2 = " + std::to_string(s)
                           : "requires a1 = a2 = s = " + std::to_string(s);
        } else {
            r.detail = "exp(G) = p, nothing to check";
        }
        rep.rules.push_back(r);
    }
    {
        BoundRule r;
        r.rule = "johnsen";
        r.applicable = odd;
        if (odd) {
            r.excluded = s > alpha + 1;
            r.detail = "s = " + std::to_string(s) +
                       (r.excluded ? " > " : " <= ") +
                       "alpha+1 = " + std::to_string(alpha + 1);
        } else {
            r.detail = "order is a square; bound not applicable";
        }
        rep.rules.push_back(r);
    }
    {
        BoundRule r;
        r.rule = "chen_sehgal_xiang";
        r.applicable = odd;
        if (odd) {
            r.excluded = 2 * s > alpha + 1;
            r.detail = "2s = " + std::to_string(2 * s) +
                       (r.excluded ? " > " : " <= ") +
                       "alpha+1 = " + std::to_string(alpha + 1);
        } else {
            r.detail = "order is a square; bound not applicable";
        }
        rep.rules.push_back(r);
    }
    for (const auto& r : rep.rules) rep.excluded |= r.excluded;
    return rep;
}

std::string bound_report_json(const BoundReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = "gshds/1";
    j["group"] = group_dsl(rep.group);
    j["beta"] = rep.group.beta;
    j["s"] = rep.group.s;
    if (rep.group.beta % 2 == 1)
        j["alpha"] = (rep.group.beta - 1) / 2;
    else
        j["alpha"] = nullptr;
    nlohmann::ordered_json rules = nlohmann::ordered_json::array();
    for (const auto& r : rep.rules) {
        nlohmann::ordered_json jr;
        jr["rule"] = r.rule;
        jr["applicable"] = r.applicable;
        jr["excluded"] = r.excluded;
        jr["detail"] = r.detail;
        rules.push_back(jr);
    }
    j["rules"] = rules;
    j["excluded"] = rep.excluded;
    return j.dump(2) + "\n";
}

}  // namespace gshds
