#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "gshds/conditions.hpp"
#include "gshds/galois.hpp"
#include "gshds/incidence.hpp"
#include "gshds/qrs.hpp"

namespace py = pybind11;
using nlohmann::ordered_json;

namespace {

std::string group_summary_json(const std::string& dsl) {
    gshds::GroupSpec G = gshds::parse_group_dsl(dsl);
    gshds::UnitOrbitTable T = gshds::orbit_tables(G);
    ordered_json j;
    j["group"] = gshds::group_dsl(G);
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
    return j.dump();
}

std::string amatrix_json(const std::string& dsl) {
    gshds::GroupSpec G = gshds::parse_group_dsl(dsl);
    gshds::IncidenceMatrix A = gshds::build_A(G);
    gshds::SquareProof proof = gshds::verify_A_square(A);
    ordered_json j;
    j["group"] = gshds::group_dsl(G);
    j["r"] = A.r();
    j["entries"] = A.entries;
    j["square_scalar"] = proof.scalar;
    j["square_identity"] = proof.ok;
    return j.dump();
}

std::string verify_paley_json(long p, int m) {
    gshds::GshdsCertificate c = gshds::verify_paley(p, m);
    ordered_json j;
    j["kind"] = gshds::to_string(c.kind);
    j["v"] = c.v;
    j["k"] = c.k;
    j["k0"] = c.k0;
    j["lambda"] = c.lambda;
    if (c.kind == gshds::GshdsKind::PaleyPDS) j["mu"] = c.mu;
    j["n0"] = c.n0;
    return j.dump();
}

std::string check_gshds_json(const std::string& dsl,
                             const std::vector<std::vector<int>>& elements) {
    gshds::GroupSpec G = gshds::parse_group_dsl(dsl);
    std::vector<gshds::GroupElement> set(elements.begin(), elements.end());
    gshds::GshdsCertificate c =
        gshds::check_gshds(gshds::AlgebraElement::indicator(G, set));
    ordered_json j;
    j["kind"] = gshds::to_string(c.kind);
    j["v"] = c.v;
    j["k"] = c.k;
    j["k0"] = c.k0;
    j["lambda"] = c.lambda;
    j["n0"] = c.n0;
    if (!c.failure_reason.empty()) j["failure"] = c.failure_reason;
    return j.dump();
}

std::string search_json(const std::string& dsl, long long budget,
                        std::uint64_t seed, int jobs, int prune) {
    gshds::GroupSpec G = gshds::parse_group_dsl(dsl);
    gshds::QrsContext ctx = gshds::make_qrs_context(G);
    gshds::SearchReport rep =
        gshds::exhaustive_search(ctx, budget, seed, jobs, prune);
    return gshds::search_report_json(ctx, rep);
}

std::string l0_json(long p, int alpha, int embedding) {
    gshds::LambdaInstance inst = gshds::lambda_matrix(p, alpha, embedding);
    if (!inst.identities_ok)
        throw std::runtime_error("lambda identities failed: " + inst.failure);
    gshds::LZeroInstance lz = gshds::build_L0(inst);
    return gshds::l0_artifact_json(inst, lz);
}

std::string power_json(long p, int m, int k) {
    gshds::AlgebraElement D = gshds::paley_set(p, m);
    gshds::PowerCoeffs pc = gshds::power_coeffs(D, k);
    return gshds::power_coeffs_json(D.group(), pc);
}

std::string bounds_json(const std::string& dsl) {
    return gshds::bound_report_json(
        gshds::exponent_bound_report(gshds::parse_group_dsl(dsl)));
}

}  // namespace

PYBIND11_MODULE(_gshds, m) {
    m.doc() = "exact arithmetic for generalized skew Hadamard difference sets";
    m.def("group_summary_json", &group_summary_json, py::arg("group"),
          "orbit table summary for a group DSL string like 'p=3;exps=1,1,1'");
    m.def("amatrix_json", &amatrix_json, py::arg("group"),
          "incidence matrix with its square identity verdict");
    m.def("verify_paley_json", &verify_paley_json, py::arg("p"), py::arg("m"),
          "certificate for the Paley construction in F_{p^m}");
    m.def("check_gshds_json", &check_gshds_json, py::arg("group"),
          py::arg("elements"), "convolution certificate for a subset");
    m.def("search_json", &search_json, py::arg("group"),
          py::arg("budget") = 1 << 20, py::arg("seed") = 0,
          py::arg("jobs") = 1, py::arg("prune_level") = 0,
          "sign-vector search report");
    m.def("l0_json", &l0_json, py::arg("p"), py::arg("alpha"),
          py::arg("embedding") = 0, "lambda/L0 instance artifact");
    m.def("power_json", &power_json, py::arg("p"), py::arg("m"),
          py::arg("k") = 1, "power coefficients of the Paley set");
    m.def("bounds_json", &bounds_json, py::arg("group"),
          "exponent-bound exclusion report");
}
