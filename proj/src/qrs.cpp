#include "gshds/qrs.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

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

}  // namespace

QrsContext make_qrs_context(const GroupSpec& G, OrbitOrdering ordering) {
    UnitOrbitTable T = orbit_tables(G, ordering);
    Pairing theta = Pairing::diagonal(G);
    IncidenceMatrix A = build_A(G, theta, T);
    return QrsContext{G, std::move(theta), std::move(T), std::move(A)};
}

QrsContext make_qrs_context(const GroupSpec& G, const Pairing& theta,
                            const UnitOrbitTable& table) {
    IncidenceMatrix A = build_A(G, theta, table);
    return QrsContext{G, theta, table, std::move(A)};
}

SignVector qrs_encode(const QrsContext& ctx, const AlgebraElement& D) {
    const GroupSpec& G = ctx.group;
    if (!(D.group() == G)) throw std::invalid_argument("wrong group");
    if (!D.is_zero_one() || D.coeff_at_rank(0) != 0)
        throw std::invalid_argument("QRS must be a subset of G \\ {0}");
    if (D.support_size() != (G.v - 1) / 2)
        throw std::invalid_argument("QRS must have size (v-1)/2");
    SignVector d(ctx.r());
    for (long i = 0; i < ctx.r(); ++i) {
        bool has_pos = D.coeff(ctx.table.orbit_pos[i][0]) == 1;
        for (const auto& g : ctx.table.orbit_pos[i])
            if ((D.coeff(g) == 1) != has_pos)
                throw std::invalid_argument(
                    "not invariant under the quadratic residues");
        for (const auto& g : ctx.table.orbit_neg[i])
            if ((D.coeff(g) == 1) == has_pos)
                throw std::invalid_argument(
                    "not skew-complementary on orbit halves");
        d[i] = has_pos ? 1 : -1;
    }
    return d;
}

AlgebraElement qrs_decode(const QrsContext& ctx, const SignVector& d) {
    if (static_cast<long>(d.size()) != ctx.r())
        throw std::invalid_argument("sign vector length mismatch");
    AlgebraElement D(ctx.group);
    for (long i = 0; i < ctx.r(); ++i) {
        const auto& half =
            d[i] == 1 ? ctx.table.orbit_pos[i] : ctx.table.orbit_neg[i];
        for (const auto& g : half) D.set_coeff(g, 1);
    }
    return D;
}

DiffCoeffVector diff_coeffs(const QrsContext& ctx, const SignVector& d) {
    if (static_cast<long>(d.size()) != ctx.r())
        throw std::invalid_argument("sign vector length mismatch");
    DiffCoeffVector out;
    out.values.assign(ctx.r(), 0);
    for (long i = 0; i < ctx.r(); ++i)
        for (long j = 0; j < ctx.r(); ++j)
            out.values[i] += ctx.A.entries[i][j] * d[j];
    out.nu_p = ctx.r() ? 1 << 30 : 0;
    for (long long v : out.values) {
        if (v % 2 == 0) throw std::logic_error("difference coefficient even");
        out.nu_p = std::min(out.nu_p, valuation(v, ctx.group.p));
    }
    return out;
}

GshdsVerdict is_gshds(const QrsContext& ctx, const SignVector& d) {
    const GroupSpec& G = ctx.group;
    GshdsVerdict v;
    v.coeffs = diff_coeffs(ctx, d);
    v.convolution = check_gshds(qrs_decode(ctx, d), ctx.table.n0);
    if (G.beta % 2 == 0) {
        v.reason = "|G| = p^" + std::to_string(G.beta) +
                   " is a square; no GSHDS exists in square-order groups";
        if (v.convolution.ok())
            throw std::logic_error("square-order oracle disagreement");
        return v;
    }
    int alpha = (G.beta - 1) / 2;
    bool divisible = v.coeffs.nu_p >= alpha;
    if (divisible != v.convolution.ok())
        throw std::logic_error("divisibility and convolution paths disagree");
    v.is_gshds = divisible;
    if (!divisible) {
        v.reason = "p^alpha does not divide every difference coefficient";
        return v;
    }
    v.dual = dual_sign_vector(ctx, d);
    return v;
}

SignVector dual_sign_vector(const QrsContext& ctx, const SignVector& d) {
    const GroupSpec& G = ctx.group;
    if (G.beta % 2 == 0)
        throw std::invalid_argument("dual needs odd-power order");
    int alpha = (G.beta - 1) / 2;
    long long pa = ipow(G.p, alpha);
    DiffCoeffVector c = diff_coeffs(ctx, d);
    SignVector dual(ctx.r());
    for (long i = 0; i < ctx.r(); ++i) {
        if (c.values[i] != pa && c.values[i] != -pa)
            throw std::invalid_argument("not a GSHDS sign vector");
        dual[i] = c.values[i] > 0 ? 1 : -1;
    }
    return dual;
}

std::vector<long long> restrict_prune(const QrsContext& ctx,
                                      const SignVector& d, int level) {
    const GroupSpec& G = ctx.group;
    if (level < 1 || level > G.s)
        throw std::invalid_argument("need 1 <= level <= s");
    if (level == G.s) return diff_coeffs(ctx, d).values;  // G_s = G
    KernelImage KI = kernel_image_mu(G, level);
    QrsContext sub = make_qrs_context(KI.kernel.spec);
    SignVector ds(sub.r());
    for (long i = 0; i < sub.r(); ++i) {
        GroupElement emb = KI.kernel.embed(sub.table.reps[i]);
        long long rk = G.rank(emb);
        ds[i] = d[ctx.table.orbit_of[rk]] * ctx.table.half_of[rk];
    }
    return diff_coeffs(sub, ds).values;
}

std::string certificate_json(const QrsContext& ctx, const SignVector& d,
                             const GshdsVerdict& verdict) {
    nlohmann::ordered_json j;
    j["schema"] = "gshds/1";
    j["group"] = group_dsl(ctx.group);
    j["n0"] = ctx.table.n0;
    j["sign_vector"] = d;
    j["kind"] = to_string(verdict.convolution.kind);
    j["k"] = verdict.convolution.k;
    j["k0"] = verdict.convolution.k0;
    j["lambda"] = verdict.convolution.lambda;
    if (verdict.convolution.kind == GshdsKind::PaleyPDS)
        j["mu"] = verdict.convolution.mu;
    j["diff_coeffs"] = verdict.coeffs.values;
    if (verdict.dual) j["dual_vector"] = *verdict.dual;
    j["verified_by"] = {"divisibility", "convolution"};
    return j.dump();
}

SearchReport exhaustive_search(const QrsContext& ctx, long long budget,
                               std::uint64_t seed, int jobs, int prune_level) {
    const GroupSpec& G = ctx.group;
    long r = ctx.r();
    SearchReport rep;
    rep.seed = seed;
    rep.prune_level = prune_level;
    bool odd_beta = G.beta % 2 == 1;
    int alpha = odd_beta ? (G.beta - 1) / 2 : 0;
    bool fits = r < 62 && (1LL << r) <= budget;
    rep.exhausted = fits;
    rep.sampled = !fits;

    if (!fits) {
        // seeded sampling; histogram and hits refer to the sample only
        std::mt19937_64 rng(seed);
        SignVector d(r);
        for (long long t = 0; t < budget; ++t) {
            for (long i = 0; i < r; ++i) d[i] = (rng() & 1) ? 1 : -1;
            DiffCoeffVector c = diff_coeffs(ctx, d);
            ++rep.nu_histogram[c.nu_p];
            ++rep.candidates;
            if (odd_beta && c.nu_p >= alpha) {
                GshdsVerdict v = is_gshds(ctx, d);
                if (v.is_gshds) rep.hits.push_back({d, std::move(v)});
            }
        }
        return rep;
    }
    if (r == 0) {
        rep.candidates = 1;
        return rep;
    }

    // column order: restriction coordinates first so the prune fires early
    std::vector<long> order;
    long prune_depth = -1;
    long long prune_mod = 1;
    IntMat A_sub;  // G_l incidence rows against the reordered columns
    if (prune_level > 0 && odd_beta && prune_level <= G.s) {
        long long pl = ipow(G.p, prune_level);
        std::vector<long> inside, outside;
        for (long i = 0; i < r; ++i)
            (elem_order(G, ctx.table.reps[i]) <= pl ? inside : outside)
                .push_back(i);
        order = inside;
        order.insert(order.end(), outside.begin(), outside.end());
        prune_depth = static_cast<long>(inside.size());
        prune_mod = ipow(G.p, std::min(prune_level, alpha));

        KernelImage KI = kernel_image_mu(G, prune_level);
        QrsContext sub = make_qrs_context(KI.kernel.spec);
        std::vector<long> ctx_col_of_sub(sub.r());
        std::vector<int> half_sign(sub.r());
        for (long t = 0; t < sub.r(); ++t) {
            long long rk = G.rank(KI.kernel.embed(sub.table.reps[t]));
            ctx_col_of_sub[t] = ctx.table.orbit_of[rk];
            half_sign[t] = ctx.table.half_of[rk];
        }
        A_sub = int_mat(sub.r(), prune_depth);
        for (long i = 0; i < sub.r(); ++i)
            for (long t = 0; t < sub.r(); ++t)
                for (long jj = 0; jj < prune_depth; ++jj)
                    if (ctx_col_of_sub[t] == order[jj])
                        A_sub[i][jj] += sub.A.entries[i][t] * half_sign[t];
    } else {
        for (long i = 0; i < r; ++i) order.push_back(i);
    }

    // depth-first over sign assignments, +1 branch first (lexicographic);
    // prefixes of the first `split` coordinates partition the work
    long split = jobs > 1 ? std::min<long>(r, 4) : 0;
    std::vector<std::vector<int>> prefixes;
    for (long long mask = 0; mask < (1LL << split); ++mask) {
        std::vector<int> pre;
        for (long b = 0; b < split; ++b)
            pre.push_back((mask >> (split - 1 - b)) & 1 ? -1 : 1);
        prefixes.push_back(std::move(pre));
    }

    std::vector<SearchReport> partial(prefixes.size());
    auto run_task = [&](size_t ti) {
        SearchReport& out = partial[ti];
        const std::vector<int>& prefix = prefixes[ti];
        SignVector d(r, 1);
        std::vector<long long> w(r, 0);
        std::vector<long long> wsub(A_sub.size(), 0);
        std::function<void(long)> dfs = [&](long depth) {
            if (depth == prune_depth && prune_mod > 1) {
                for (size_t i = 0; i < A_sub.size(); ++i)
                    if (wsub[i] % prune_mod != 0) return;
            }
            if (depth == r) {
                ++out.candidates;
                int nu_val = 1 << 30;
                bool hit = odd_beta;
                for (long i = 0; i < r; ++i) {
                    int v = valuation(w[i], G.p);
                    nu_val = std::min(nu_val, v);
                    if (v < alpha) hit = false;
                }
                ++out.nu_histogram[nu_val];
                if (hit) {
                    GshdsVerdict v = is_gshds(ctx, d);
                    if (!v.is_gshds)
                        throw std::logic_error("search verdicts disagree");
                    out.hits.push_back({d, std::move(v)});
                }
                return;
            }
            long col = order[depth];
            bool forced = depth < static_cast<long>(prefix.size());
            for (int sgn : {1, -1}) {
                if (forced && sgn != prefix[depth]) continue;
                d[col] = sgn;
                for (long i = 0; i < r; ++i) w[i] += sgn * ctx.A.entries[i][col];
                if (depth < prune_depth)
                    for (size_t i = 0; i < A_sub.size(); ++i)
                        wsub[i] += sgn * A_sub[i][depth];
                dfs(depth + 1);
                for (long i = 0; i < r; ++i) w[i] -= sgn * ctx.A.entries[i][col];
                if (depth < prune_depth)
                    for (size_t i = 0; i < A_sub.size(); ++i)
                        wsub[i] -= sgn * A_sub[i][depth];
            }
        };
        dfs(0);
    };

    if (jobs <= 1) {
        for (size_t ti = 0; ti < prefixes.size(); ++ti) run_task(ti);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    size_t ti = next.fetch_add(1);
                    if (ti >= prefixes.size()) break;
                    run_task(ti);
                }
            });
        for (auto& th : pool) th.join();
    }
    // canonical merge order = prefix order = lexicographic candidate order
    for (auto& out : partial) {
        rep.candidates += out.candidates;
        for (auto& [k, v] : out.nu_histogram) rep.nu_histogram[k] += v;
        for (auto& h : out.hits) rep.hits.push_back(std::move(h));
    }
    return rep;
}

std::string search_report_json(const QrsContext& ctx, const SearchReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = "gshds/1";
    j["group"] = group_dsl(ctx.group);
    j["n0"] = ctx.table.n0;
    j["r"] = ctx.r();
    j["candidates"] = rep.candidates;
    j["exhausted"] = rep.exhausted;
    j["sampled"] = rep.sampled;
    j["seed"] = rep.seed;
    j["prune_level"] = rep.prune_level;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (auto& [k, v] : rep.nu_histogram) hist[std::to_string(k)] = v;
    j["nu_p_histogram"] = hist;
    nlohmann::ordered_json hits = nlohmann::ordered_json::array();
    for (const auto& h : rep.hits)
        hits.push_back(
            nlohmann::ordered_json::parse(certificate_json(ctx, h.d, h.verdict)));
    j["hits"] = hits;
    j["hit_count"] = rep.hits.size();
    return j.dump(2) + "\n";
}

NuVector diff_intersection(const AlgebraElement& D, const Subgroup& L,
                           long n0) {
    const GroupSpec& G = D.group();
    if (!(L.parent == G)) throw std::invalid_argument("subgroup mismatch");
    if (n0 == 0) n0 = smallest_qnr(G.p);
    AlgebraElement Dn = power_map(D, n0);

    QuotientProjection pi = quotient_projection(G, L);
    const GroupSpec& H = pi.quotient;
    NuVector out;
    out.quotient = H;

    std::vector<long long> nu_all(H.v, 0);
    for (long long rg = 0; rg < G.v; ++rg)
        nu_all[pi.proj[rg]] += D.coeff_at_rank(rg) - Dn.coeff_at_rank(rg);
    out.nu_zero_coset = nu_all[pi.proj[0]];

    if (H.is_trivial()) {
        out.identity_ok = true;
        out.covariance_ok = true;
        return out;
    }

    out.covariance_ok = true;
    long long mod = ipow(H.p, H.s);
    for (long long rh = 0; rh < H.v && out.covariance_ok; ++rh) {
        GroupElement h = H.unrank(rh);
        for (long long n = 1; n < mod && out.covariance_ok; ++n) {
            if (n % H.p == 0) continue;
            long long lhs = nu_all[H.rank(scalar_mul(H, n, h))];
            if (lhs != legendre(n, H.p) * nu_all[rh]) out.covariance_ok = false;
        }
    }

    // identity A_{H,H_1} nu = df_H(D) with the quotient's own pairing
    QrsContext hctx = make_qrs_context(H);
    AlgebraElement diff_proj = project(D - Dn, pi);
    std::vector<long long> df(hctx.r(), 0);
    Cyclotomic g = gauss_sum(H.p, H.s);
    long long gsq = legendre(-1, H.p) * H.p;  // g^2
    for (long i = 0; i < hctx.r(); ++i) {
        Cyclotomic c = char_value(diff_proj, hctx.table.reps[i], hctx.theta);
        Cyclotomic t = c * g;  // (d g) g = d (-1|p) p
        if (!t.is_integer() || t.integer_value() % gsq != 0)
            throw std::logic_error("character value is not an integer "
                                   "multiple of the Gauss sum");
        df[i] = t.integer_value() / gsq;
    }
    std::vector<long long> nu_vec(hctx.r());
    for (long i = 0; i < hctx.r(); ++i) {
        long long hr = H.rank(hctx.table.reps[i]);
        nu_vec[i] = nu_all[hr];
        out.reps.push_back(hctx.table.reps[i]);
        out.lifts.push_back(pi.coset_reps[hr]);
    }
    out.values = nu_vec;
    out.identity_ok = mat_vec(hctx.A.entries, nu_vec) == df;
    return out;
}

}  // namespace gshds
