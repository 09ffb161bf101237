#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gshds/conditions.hpp"
#include "gshds/galois.hpp"
#include "gshds/incidence.hpp"
#include "gshds/qrs.hpp"

namespace {

// exit codes: 0 verified/complete, 1 verified-negative, 2 budget-partial,
// 3 input error
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kPartial = 2;
constexpr int kInputError = 3;

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path, std::ios::binary);
            f << text;
        }
    }
};

using gshds::GroupSpec;
using nlohmann::ordered_json;

int cmd_group(const std::string& dsl, const std::string& format,
              std::uint64_t seed, const Output& out) {
    GroupSpec G = gshds::parse_group_dsl(dsl);
    gshds::UnitOrbitTable T = gshds::orbit_tables(G);
    if (format == "text") {
        std::string s = "group " + gshds::group_dsl(G) +
                        ": v=" + std::to_string(G.v) +
                        " s=" + std::to_string(G.s) +
                        " beta=" + std::to_string(G.beta) +
                        " r=" + std::to_string(T.r()) +
                        " n0=" + std::to_string(T.n0) + "\n";
        out.write(s);
        return kOk;
    }
    ordered_json j;
    j["schema"] = "gshds/1";
    j["group"] = gshds::group_dsl(G);
    j["seed"] = seed;
    j["v"] = G.v;
    j["s"] = G.s;
    j["beta"] = G.beta;
    j["n0"] = T.n0;
    j["r"] = T.r();
    ordered_json orbits = ordered_json::array();
    for (long i = 0; i < T.r(); ++i) {
        ordered_json o;
        o["rep"] = T.reps[i];
        o["omega_size"] = T.omega_size[i];
        orbits.push_back(o);
    }
    j["orbits"] = orbits;
    out.write(j.dump(2) + "\n");
    return kOk;
}

int cmd_amatrix(const std::string& dsl, const std::string& format,
                std::uint64_t seed, const Output& out) {
    GroupSpec G = gshds::parse_group_dsl(dsl);
    gshds::IncidenceMatrix A = gshds::build_A(G);
    gshds::SquareProof proof = gshds::verify_A_square(A);
    if (format == "csv") {
        std::string s = A.csv();
        s += "# A^2 = " + std::to_string(proof.scalar) + " I: " +
             (proof.ok ? "pass" : "FAIL") + "\n";
        out.write(s);
        return proof.ok ? kOk : kNegative;
    }
    ordered_json j;
    j["schema"] = "gshds/1";
    j["group"] = gshds::group_dsl(G);
    j["seed"] = seed;
    j["r"] = A.r();
    j["pairing"] = A.pairing_tag;
    j["entries"] = A.entries;
    ordered_json reps = ordered_json::array();
    for (const auto& g : A.col_reps) reps.push_back(g);
    j["orbit_reps"] = reps;
    j["square_scalar"] = proof.scalar;
    j["square_identity"] = proof.ok ? "pass" : "fail";
    out.write(j.dump(2) + "\n");
    return proof.ok ? kOk : kNegative;
}

int cmd_verify_paley(long p, int m, std::uint64_t seed, const Output& out) {
    gshds::AlgebraElement D = gshds::paley_set(p, m);
    gshds::QrsContext ctx = gshds::make_qrs_context(D.group());
    gshds::SignVector d = gshds::qrs_encode(ctx, D);
    gshds::GshdsVerdict verdict = gshds::is_gshds(ctx, d);
    ordered_json j = ordered_json::parse(gshds::certificate_json(ctx, d, verdict));
    j["v"] = verdict.convolution.v;
    j["seed"] = seed;
    out.write(j.dump(2) + "\n");
    return verdict.is_gshds ? kOk : kNegative;
}

int cmd_search(const std::string& dsl, long long budget, std::uint64_t seed,
               int jobs, int prune, const Output& out) {
    GroupSpec G = gshds::parse_group_dsl(dsl);
    gshds::QrsContext ctx = gshds::make_qrs_context(G);
    gshds::SearchReport rep =
        gshds::exhaustive_search(ctx, budget, seed, jobs, prune);
    out.write(gshds::search_report_json(ctx, rep));
    return rep.exhausted ? kOk : kPartial;
}

int cmd_l0(long p, int alpha, int embedding, std::uint64_t seed,
           const Output& out) {
    gshds::LambdaInstance inst = gshds::lambda_matrix(p, alpha, embedding);
    if (!inst.identities_ok) {
        out.write("lambda identities failed: " + inst.failure + "\n");
        return kNegative;
    }
    gshds::LZeroInstance lz = gshds::build_L0(inst);
    ordered_json j = ordered_json::parse(gshds::l0_artifact_json(inst, lz));
    j["seed"] = seed;
    out.write(j.dump(2) + "\n");
    return lz.all_ok() ? kOk : kNegative;
}

int cmd_power(long p, int m, int k, std::uint64_t seed, const Output& out) {
    gshds::AlgebraElement D = gshds::paley_set(p, m);
    gshds::PowerCoeffs pc = gshds::power_coeffs(D, k);
    ordered_json j = ordered_json::parse(gshds::power_coeffs_json(D.group(), pc));
    j["seed"] = seed;
    out.write(j.dump(2) + "\n");
    bool ok = pc.identity_ok && pc.closed_form_ok && pc.vp_ok &&
              pc.nu_divisible_ok && pc.orbit_congruence_ok;
    return ok ? kOk : kNegative;
}

int cmd_bounds(const std::string& dsl, std::uint64_t seed, const Output& out) {
    GroupSpec G = gshds::parse_group_dsl(dsl);
    gshds::BoundReport rep = gshds::exponent_bound_report(G);
    ordered_json j = ordered_json::parse(gshds::bound_report_json(rep));
    j["seed"] = seed;
    out.write(j.dump(2) + "\n");
    return rep.excluded ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GSHDS toolkit: incidence matrices, Paley certificates, "
                 "QRS searches, Galois-ring instances"};
    app.require_subcommand(1);

    std::string group_dsl, format, out_path;
    std::uint64_t seed = 0;
    long long budget = 1LL << 20;
    int jobs = 1, prune = 0;
    long p = 3;
    int m = 3, kpow = 1, alpha = 1, embedding = 0;

    auto add_common = [&](CLI::App* sub, bool with_group) {
        if (with_group)
            sub->add_option("--group", group_dsl, "group DSL, e.g. p=3;exps=1,1,1")
                ->required();
        sub->add_option("--format", format, "json|csv|text");
        sub->add_option("--seed", seed, "seed recorded in outputs");
        sub->add_option("--out", out_path, "output file (default stdout)");
    };

    CLI::App* c_group = app.add_subcommand("group", "orbit table report");
    add_common(c_group, true);

    CLI::App* c_amatrix = app.add_subcommand("amatrix", "incidence matrix + "
                                             "square identity");
    add_common(c_amatrix, true);

    CLI::App* c_paley = app.add_subcommand("verify-paley",
                                           "certify the Paley construction");
    c_paley->add_option("-p", p, "odd prime")->required();
    c_paley->add_option("-m", m, "odd degree")->required();
    add_common(c_paley, false);

    CLI::App* c_search = app.add_subcommand("search", "enumerate sign vectors");
    add_common(c_search, true);
    c_search->add_option("--budget", budget, "candidate budget");
    c_search->add_option("--jobs", jobs, "worker threads");
    c_search->add_option("--prune-level", prune,
                         "restriction prune level (0 = off)");

    CLI::App* c_l0 = app.add_subcommand("l0", "lambda matrix and L0 instance");
    c_l0->add_option("-p", p, "odd prime")->required();
    c_l0->add_option("--alpha", alpha, "alpha >= 1")->required();
    c_l0->add_option("--embedding", embedding,
                     "primitive-modulus index (alternate embeddings)");
    add_common(c_l0, false);

    CLI::App* c_power = app.add_subcommand("power",
                                           "power coefficients of a Paley set");
    c_power->add_option("-p", p, "odd prime")->required();
    c_power->add_option("-m", m, "odd degree")->required();
    c_power->add_option("-k", kpow, "power level");
    add_common(c_power, false);

    CLI::App* c_bounds = app.add_subcommand("bounds", "exclusion report");
    add_common(c_bounds, true);

    CLI11_PARSE(app, argc, argv);
    Output out{out_path};
    try {
        if (app.got_subcommand(c_group))
            return cmd_group(group_dsl, format, seed, out);
        if (app.got_subcommand(c_amatrix))
            return cmd_amatrix(group_dsl, format == "json" ? "json" : "csv",
                               seed, out);
        if (app.got_subcommand(c_paley)) return cmd_verify_paley(p, m, seed, out);
        if (app.got_subcommand(c_search))
            return cmd_search(group_dsl, budget, seed, jobs, prune, out);
        if (app.got_subcommand(c_l0))
            return cmd_l0(p, alpha, embedding, seed, out);
        if (app.got_subcommand(c_power))
            return cmd_power(p, m, kpow, seed, out);
        if (app.got_subcommand(c_bounds))
            return cmd_bounds(group_dsl, seed, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
