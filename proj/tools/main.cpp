// Command-line front end. Parses arguments, drives the shared library through
// its C interface, prints the report, and maps failures to exit codes:
// 0 success, 1 domain error, 2 syntax error.
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropdiff/capi.h"

namespace {

std::vector<const char*> c_view(const std::vector<std::string>& items) {
    std::vector<const char*> out;
    out.reserve(items.size());
    for (const std::string& s : items) out.push_back(s.c_str());
    return out;
}

int finish(td_status status, td_report* report, bool json, bool honor_status) {
    if (status != TD_OK) {
        std::fprintf(stderr, "error: %s\n", td_last_error());
        return status == TD_ERR_SYNTAX ? 2 : 1;
    }
    for (size_t i = 0; i < td_report_warning_count(report); ++i)
        std::fprintf(stderr, "warning: %s\n", td_report_warning(report, i));
    std::fputs(json ? td_report_json(report) : td_report_text(report), stdout);
    if (json) std::fputc('\n', stdout);
    const int rc = honor_status && td_report_status(report) != 0 ? 1 : 0;
    td_report_free(report);
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropical differential algebra over Q[[t]]"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(td_version()));

    bool json = false;
    std::uint32_t trunc = 32;
    app.add_flag("--json", json, "emit a single JSON document instead of text");
    app.add_option("--trunc", trunc, "truncation order for parsed coefficients (default 32)")->capture_default_str();

    // val
    auto* val = app.add_subcommand("val", "evaluate Val_S at indices");
    std::string val_set;
    std::vector<std::uint32_t> val_js;
    val->add_option("--set", val_set, "the NatSet")->required();
    val->add_option("j", val_js, "indices j")->required();

    // trop
    auto* trop = app.add_subcommand("trop", "tropicalise a differential polynomial");
    std::string trop_poly;
    trop->add_option("poly", trop_poly, "differential polynomial")->required();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate trop(P) at a tuple of sets and test Definition 2.3");
    std::string eval_poly;
    std::vector<std::string> eval_sets;
    eval->add_option("poly", eval_poly)->required();
    eval->add_option("--set", eval_sets, "one NatSet per variable (repeat)")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "solve a tropical system over a finite universe");
    std::vector<std::string> solve_gens;
    int solve_depth = -1;
    std::uint32_t solve_tmax = 3, solve_pmax = 3;
    solve->add_option("--gen", solve_gens, "generator polynomial (repeat)")->required();
    solve->add_option("--depth", solve_depth, "also solve trop(d^k g) for k <= depth");
    solve->add_option("--tmax", solve_tmax, "universe threshold bound")->capture_default_str();
    solve->add_option("--pmax", solve_pmax, "universe period bound")->capture_default_str();

    // initial / initial-hugao
    auto* initial = app.add_subcommand("initial", "S-initial part In_S(P)");
    std::string initial_poly;
    std::vector<std::string> initial_sets;
    initial->add_option("poly", initial_poly)->required();
    initial->add_option("--set", initial_sets, "one NatSet per variable (repeat)")->required();
    auto* hugao = app.add_subcommand("initial-hugao", "Hu-Gao initial part in_S(P)");
    std::string hugao_poly;
    std::vector<std::string> hugao_sets;
    hugao->add_option("poly", hugao_poly)->required();
    hugao->add_option("--set", hugao_sets, "one NatSet per variable (repeat)")->required();

    // lift
    auto* lift = app.add_subcommand("lift", "lift a combination of initial parts into the ideal");
    std::vector<std::string> lift_parts, lift_sets;
    lift->add_option("--part", lift_parts, "\"alpha; monomial; polynomial\" (repeat)")->required();
    lift->add_option("--set", lift_sets, "one NatSet per variable (repeat)")->required();

    // check-basis
    auto* basis = app.add_subcommand("check-basis", "compare a candidate basis against a reference");
    std::vector<std::string> basis_gens, basis_ref;
    std::uint32_t basis_depth = 9, basis_tmax = 3, basis_pmax = 3;
    basis->add_option("--gen", basis_gens, "candidate generator (repeat)")->required();
    basis->add_option("--ref-gen", basis_ref, "reference generator (repeat)")->required();
    basis->add_option("--depth", basis_depth, "derivative depth K")->capture_default_str();
    basis->add_option("--tmax", basis_tmax)->capture_default_str();
    basis->add_option("--pmax", basis_pmax)->capture_default_str();

    // theorem-pp
    auto* thm = app.add_subcommand("theorem-pp", "three-set comparison of the fundamental theorem");
    std::vector<std::string> thm_gens, thm_solutions;
    std::uint32_t thm_depth = 9, thm_pd = 1, thm_tmax = 3, thm_pmax = 3;
    thm->add_option("--gen", thm_gens, "generator (repeat)")->required();
    thm->add_option("--solution", thm_solutions, "known solution \"s1; ...; sn\" (repeat)");
    thm->add_option("--depth", thm_depth, "derivative depth K")->capture_default_str();
    thm->add_option("--product-depth", thm_pd, "monomial multiplier degree bound")->capture_default_str();
    thm->add_option("--tmax", thm_tmax)->capture_default_str();
    thm->add_option("--pmax", thm_pmax)->capture_default_str();

    // suppmin
    auto* sm = app.add_subcommand("suppmin", "supp_min of a linear form and its stabilization");
    std::string sm_poly;
    std::uint32_t sm_kmax = 10;
    sm->add_option("poly", sm_poly)->required();
    sm->add_option("--kmax", sm_kmax, "derivatives to inspect")->capture_default_str();

    // matroid-check
    auto* matroid = app.add_subcommand("matroid-check", "uniform-matroid check of the band matrix");
    std::uint32_t matroid_r = 2;
    matroid->add_option("r", matroid_r, "truncation order r >= 2")->required();

    // qab-audit
    auto* qab = app.add_subcommand("qab-audit", "q_ab witness coverage audit");
    std::vector<std::string> qab_gens;
    std::uint32_t qab_r = 6, qab_depth = 20;
    int qab_a = -1, qab_b = -1;
    qab->add_option("--gen", qab_gens, "linear form (repeat)")->required();
    qab->add_option("--r", qab_r, "audit pairs inside {0..r}")->capture_default_str();
    qab->add_option("--depth", qab_depth, "derivative depth K")->capture_default_str();
    qab->add_option("--a", qab_a, "single-pair mode: a");
    qab->add_option("--b", qab_b, "single-pair mode: b");

    // denef
    auto* denef = app.add_subcommand("denef", "Denef-Lipshitz series for a scalar phi2");
    std::string denef_phi2;
    denef->add_option("--phi2", denef_phi2, "rational value of phi2")->required();

    // paper-examples
    auto* paper = app.add_subcommand("paper-examples", "run the pinned example suite");

    CLI11_PARSE(app, argc, argv);

    td_report* report = nullptr;
    td_status status = TD_OK;
    bool honor_status = false;

    if (app.got_subcommand(val)) {
        status = td_run_val(val_set.c_str(), val_js.data(), val_js.size(), &report);
    } else if (app.got_subcommand(trop)) {
        status = td_run_trop(trop_poly.c_str(), trunc, &report);
    } else if (app.got_subcommand(eval)) {
        auto sets = c_view(eval_sets);
        status = td_run_eval(eval_poly.c_str(), trunc, sets.data(), sets.size(), &report);
    } else if (app.got_subcommand(solve)) {
        auto gens = c_view(solve_gens);
        status = td_run_solve(gens.data(), gens.size(), trunc, solve_depth, solve_tmax, solve_pmax, &report);
    } else if (app.got_subcommand(initial)) {
        auto sets = c_view(initial_sets);
        status = td_run_initial(initial_poly.c_str(), trunc, sets.data(), sets.size(), 0, &report);
    } else if (app.got_subcommand(hugao)) {
        auto sets = c_view(hugao_sets);
        status = td_run_initial(hugao_poly.c_str(), trunc, sets.data(), sets.size(), 1, &report);
    } else if (app.got_subcommand(lift)) {
        auto parts = c_view(lift_parts);
        auto sets = c_view(lift_sets);
        status = td_run_lift(parts.data(), parts.size(), trunc, sets.data(), sets.size(), &report);
    } else if (app.got_subcommand(basis)) {
        auto gens = c_view(basis_gens);
        auto ref = c_view(basis_ref);
        status = td_run_check_basis(gens.data(), gens.size(), ref.data(), ref.size(), trunc, basis_depth, basis_tmax,
                                    basis_pmax, &report);
    } else if (app.got_subcommand(thm)) {
        auto gens = c_view(thm_gens);
        auto sols = c_view(thm_solutions);
        status = td_run_theorem_pp(gens.data(), gens.size(), sols.data(), sols.size(), trunc, thm_depth, thm_pd,
                                   thm_tmax, thm_pmax, &report);
        honor_status = true; // containment violations exit nonzero
    } else if (app.got_subcommand(sm)) {
        status = td_run_suppmin(sm_poly.c_str(), trunc, sm_kmax, &report);
    } else if (app.got_subcommand(matroid)) {
        status = td_run_matroid_check(matroid_r, &report);
    } else if (app.got_subcommand(qab)) {
        auto gens = c_view(qab_gens);
        status = td_run_qab_audit(gens.data(), gens.size(), trunc, qab_r, qab_depth, qab_a, qab_b, &report);
    } else if (app.got_subcommand(denef)) {
        status = td_run_denef(denef_phi2.c_str(), trunc, &report);
    } else if (app.got_subcommand(paper)) {
        status = td_run_paper_examples(&report);
        honor_status = true; // any mismatch exits nonzero
    } else {
        std::fprintf(stderr, "error: unknown command\n");
        return 1;
    }

    return finish(status, report, json, honor_status);
}
