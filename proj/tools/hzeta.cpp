// Command-line front end: every module surfaced as a subcommand, plus table
// regeneration and the cross-module verification suite.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hzeta/hzeta.hpp"
#include "hzeta/serialization.hpp"
#include "hzeta/verification.hpp"

using namespace hzeta;

namespace {

struct RunConfig {
    long prec = 128;
    unsigned order = 0; // 0 = per-command default
    std::string format = "json"; // json | csv | plain
    unsigned long seed = 0xC0FFEE;
    std::string out_path;

    std::ofstream out_file;
    std::ostream& out() {
        if (!out_path.empty()) {
            if (!out_file.is_open()) {
                out_file.open(out_path, std::ios::binary);
                if (!out_file) throw CLI::ValidationError("--out", "cannot open " + out_path);
            }
            return out_file;
        }
        return std::cout;
    }
};

void emit(RunConfig& cfg, const ordered_json& j, const std::string& plain) {
    if (cfg.format == "plain") cfg.out() << plain << "\n";
    else cfg.out() << j.dump(2) << "\n";
}

std::vector<unsigned long> parse_grid(const std::string& s) {
    std::vector<unsigned long> grid;
    std::size_t start = 0;
    while (start < s.size()) {
        auto pos = s.find(',', start);
        std::string tok = s.substr(start, pos == std::string::npos ? pos : pos - start);
        grid.push_back(std::stoul(tok));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return grid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic-zeta workbench: Euler sums, negative values, Laurent data,\n"
                 "asymptotics and divisor identities for sums of powers of harmonic numbers"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--prec", cfg.prec, "working precision in bits")
        ->check(CLI::Range(16L, 65536L))
        ->capture_default_str();
    app.add_option("--order", cfg.order, "truncation order override where a command takes one");
    app.add_option("--format", cfg.format, "output format: json|csv|plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps")->capture_default_str();
    app.add_option("--out", cfg.out_path, "write output to a file instead of stdout");

    // --- stieltjes ---------------------------------------------------------
    unsigned st_n = 0, st_m = 0;
    auto* st = app.add_subcommand("stieltjes", "Stieltjes constants gamma_n and the "
                                               "generalized constants for H^m");
    st->add_option("--n", st_n, "log power n")->required();
    st->add_option("--m", st_m, "harmonic power m (0 = classical gamma_n)")->capture_default_str();
    st->callback([&] {
        ordered_json j;
        j["m"] = st_m;
        j["n"] = st_n;
        if (st_m == 0) {
            BigFloat v = stieltjes_gamma(st_n, cfg.prec);
            j["value"] = v.str();
            emit(cfg, j, "gamma_" + std::to_string(st_n) + " = " + v.str());
        } else {
            auto hs = harmonic_stieltjes_constant(st_m, st_n, cfg.prec);
            j["value"] = hs.value.str();
            j["error_bound"] = hs.error_bound.str(4);
            j["method"] = "limit-accelerated";
            emit(cfg, j, hs.value.str() + "  (+/- " + hs.error_bound.str(3) + ")");
        }
    });

    // --- eulersum ----------------------------------------------------------
    unsigned es_m = 1;
    double es_s = 2.0;
    bool es_alt = false;
    auto* es = app.add_subcommand("eulersum", "H^m(s) or J^m(s) numerically");
    es->add_option("--m", es_m, "harmonic power")->required();
    es->add_option("--s", es_s, "argument (real; > 1 for H, > 0 for J)")->required();
    es->add_flag("--alternating", es_alt, "evaluate J^m(s) instead of H^m(s)");
    es->callback([&] {
        BigFloat s(es_s, cfg.prec + 16);
        EulerSumValue v = es_alt ? alternating_harmonic_zeta(es_m, s, cfg.prec)
                                 : harmonic_zeta(es_m, s, cfg.prec);
        ordered_json j;
        j["m"] = es_m;
        j["s"] = es_s;
        j["alternating"] = es_alt;
        j["value"] = v.value.str();
        j["error_bound"] = v.error_bound.str(4);
        j["rigorous"] = v.rigorous;
        emit(cfg, j, v.value.str() + "  (+/- " + v.error_bound.str(3) + ")");
    });

    // --- sums --------------------------------------------------------------
    std::string sums_family = "solved";
    unsigned sums_m = 1;
    auto* sums = app.add_subcommand("sums", "closed-form sum families");
    sums->add_option("--family", sums_family, "solved|skewed|weighted|alternating-gap")
        ->check(CLI::IsMember({"solved", "skewed", "weighted", "alternating-gap"}))
        ->capture_default_str();
    sums->add_option("--m", sums_m, "harmonic power")->required();
    sums->callback([&] {
        ordered_json j;
        j["family"] = sums_family;
        j["m"] = sums_m;
        std::string plain;
        if (sums_family == "solved") {
            auto s = solved_sum(sums_m, cfg.prec);
            j["closed_form"] = to_json(s.closed_form);
            j["value"] = s.value.str();
            plain = s.closed_form.str() + " = " + s.value.str();
        } else {
            BigFloat v = (sums_family == "skewed")     ? skewed_power_sum(sums_m, cfg.prec)
                         : (sums_family == "weighted") ? weighted_gap_sum(sums_m, cfg.prec)
                                                       : alternating_gap_sum(sums_m, cfg.prec);
            j["value"] = v.str();
            plain = v.str();
        }
        emit(cfg, j, plain);
    });

    // --- negval ------------------------------------------------------------
    unsigned nv_m = 1, nv_n = 0;
    bool nv_exact = false;
    auto* nv = app.add_subcommand("negval", "J^m(-n): exact combination and decimal value");
    nv->add_option("--m", nv_m, "harmonic power m (1..5)")->required();
    nv->add_option("--n", nv_n, "evaluate at -n")->required();
    nv->add_flag("--exact", nv_exact, "include the exact ConstCombo (m <= 3)");
    nv->callback([&] {
        NegValue v = j_negative_value(nv_m, nv_n, cfg.prec);
        ordered_json j;
        j["m"] = nv_m;
        j["n"] = nv_n;
        j["route"] = v.route;
        if (nv_exact && v.exact) j["exact"] = to_json(*v.exact);
        j["value"] = v.numeric.str();
        std::string plain = "J^" + std::to_string(nv_m) + "(-" + std::to_string(nv_n) + ") = ";
        if (v.exact) plain += v.exact->str() + " = ";
        plain += v.numeric.str();
        emit(cfg, j, plain);
    });

    // --- residue / laurent ---------------------------------------------------
    unsigned rs_m = 1;
    long rs_point = 1;
    auto* rs = app.add_subcommand("residue", "residue of H^m at an integer point <= 1 "
                                             "as a polynomial in gamma");
    rs->add_option("--m", rs_m, "harmonic power")->required();
    rs->add_option("--point", rs_point, "integer point (<= 1)")->required();
    rs->callback([&] {
        GammaPoly p = residue(rs_m, rs_point);
        ordered_json j;
        j["m"] = rs_m;
        j["point"] = rs_point;
        j["gamma_poly"] = to_json(p);
        emit(cfg, j, p.str());
    });

    unsigned lc_m = 1, lc_k = 1;
    long lc_point = 1;
    auto* lc = app.add_subcommand("laurent", "(s-p)^(-k) Laurent coefficient of H^m at p");
    lc->add_option("--m", lc_m, "harmonic power")->required();
    lc->add_option("--point", lc_point, "integer point (<= 1)")->required();
    lc->add_option("--k", lc_k, "pole-order index (1 = residue)")->required();
    lc->callback([&] {
        auto v = laurent_coeff(lc_m, lc_point, lc_k);
        ordered_json j;
        j["m"] = lc_m;
        j["point"] = lc_point;
        j["k"] = lc_k;
        j["gamma_poly"] = to_json(v.value);
        j["above_pole_order"] = v.above_pole_order;
        j["pole_order"] = pole_order(lc_m, lc_point);
        emit(cfg, j, v.value.str() + (v.above_pole_order ? "  (above pole order)" : ""));
    });

    // --- tables --------------------------------------------------------------
    std::string tb_list = "1,2,3";
    auto* tb = app.add_subcommand("tables", "regenerate the negative-value / residue / "
                                            "a-coefficient tables");
    tb->add_option("--regenerate", tb_list, "comma list from {1,2,3}")->capture_default_str();
    tb->callback([&] {
        auto ids = parse_grid(tb_list);
        if (ids.size() == 1) {
            cfg.out() << make_table((int)ids[0]).dump(2) << "\n";
            return;
        }
        ordered_json arr = ordered_json::array();
        for (auto id : ids) arr.push_back(make_table((int)id));
        cfg.out() << arr.dump(2) << "\n";
    });

    // --- asymptotic ----------------------------------------------------------
    std::string as_family = "harmonic-over-n";
    unsigned as_m = 1;
    std::string as_grid = "100,1000,10000";
    auto* as = app.add_subcommand("asymptotic", "residuals of the closed-form asymptotics "
                                                "over an N grid");
    as->add_option("--family", as_family, "harmonic-over-n|alternating|plain-power")
        ->check(CLI::IsMember({"harmonic-over-n", "alternating", "plain-power"}))
        ->capture_default_str();
    as->add_option("--m", as_m, "harmonic power")->required();
    as->add_option("--n-grid", as_grid, "comma-separated N values")->capture_default_str();
    as->callback([&] {
        AsymptoticFamily fam = as_family == "harmonic-over-n" ? AsymptoticFamily::harmonic_over_n
                               : as_family == "alternating"   ? AsymptoticFamily::alternating
                                                              : AsymptoticFamily::plain_power;
        auto grid = parse_grid(as_grid);
        auto resid = asymptotic_residuals(fam, as_m, grid, cfg.prec);
        if (cfg.format == "csv") {
            cfg.out() << "N,residual\n";
            for (std::size_t i = 0; i < grid.size(); ++i)
                cfg.out() << grid[i] << "," << resid[i].str(8) << "\n";
            return;
        }
        ordered_json j;
        j["family"] = as_family;
        j["m"] = as_m;
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            ordered_json row;
            row["N"] = grid[i];
            row["residual"] = resid[i].str(8);
            rows.push_back(row);
        }
        j["residuals"] = rows;
        std::string plain;
        for (std::size_t i = 0; i < grid.size(); ++i)
            plain += std::to_string(grid[i]) + ": " + resid[i].str(6) + "\n";
        if (!plain.empty()) plain.pop_back();
        emit(cfg, j, plain);
    });

    // --- divisor-check --------------------------------------------------------
    std::string dc_range = "1..2000";
    unsigned dc_kmax = 6;
    auto* dc = app.add_subcommand("divisor-check", "exact sweep of the divisor-count identity");
    dc->add_option("--m-range", dc_range, "A..B")->capture_default_str();
    dc->add_option("--k-max", dc_kmax, "largest power k")->capture_default_str();
    dc->callback([&] {
        auto dots = dc_range.find("..");
        if (dots == std::string::npos)
            throw CLI::ValidationError("--m-range", "expected A..B");
        unsigned long a = std::stoul(dc_range.substr(0, dots));
        unsigned long b = std::stoul(dc_range.substr(dots + 2));
        unsigned long checked = 0;
        ordered_json counterexamples = ordered_json::array();
        for (unsigned long m = a; m <= b; ++m)
            for (unsigned k = 0; k <= dc_kmax; ++k) {
                auto rep = cm_identity_check(m, k);
                ++checked;
                if (!rep.pass) {
                    ordered_json ce;
                    ce["m"] = m;
                    ce["k"] = k;
                    ce["lhs"] = rat_to_string(rep.lhs);
                    ce["rhs"] = rat_to_string(rep.rhs);
                    counterexamples.push_back(ce);
                }
            }
        ordered_json j;
        j["checked"] = checked;
        j["failures"] = counterexamples.size();
        j["counterexamples"] = counterexamples;
        emit(cfg, j, std::to_string(checked) + " checks, " +
                         std::to_string(counterexamples.size()) + " failures");
        if (!counterexamples.empty()) throw CLI::RuntimeError(1);
    });

    // --- q-check ---------------------------------------------------------------
    std::string qc_id = "harmonic_q";
    unsigned qc_n = 0;
    std::string qc_orders = "12,12";
    auto* qc = app.add_subcommand("q-check", "exact truncated q-analog identity checks");
    qc->add_option("--identity", qc_id, "harmonic_q|theta2|limit")
        ->check(CLI::IsMember({"harmonic_q", "theta2", "limit"}))
        ->capture_default_str();
    qc->add_option("--n", qc_n, "weight n")->capture_default_str();
    qc->add_option("--orders", qc_orders, "Q,X truncation orders")->capture_default_str();
    qc->callback([&] {
        auto ords = parse_grid(qc_orders);
        if (ords.size() != 2) throw CLI::ValidationError("--orders", "expected Q,X");
        if (cfg.order > 0) ords = {cfg.order, cfg.order};
        SeriesCheckReport rep;
        if (qc_id == "limit") rep = q_limit_check(qc_n, (unsigned)ords[1]);
        else
            rep = q_identity_check(qc_id == "harmonic_q" ? QIdentity::harmonic_q : QIdentity::theta2,
                                   qc_n, (unsigned)ords[0], (unsigned)ords[1]);
        ordered_json j;
        j["identity"] = qc_id;
        j["n"] = qc_n;
        j["orders"] = qc_orders;
        j["pass"] = rep.pass;
        j["first_mismatch"] = rep.first_mismatch;
        j["detail"] = rep.detail;
        emit(cfg, j, rep.detail);
        if (!rep.pass) throw CLI::RuntimeError(1);
    });

    // --- verify ------------------------------------------------------------------
    std::string golden_dir = "golden";
    auto* vf = app.add_subcommand("verify", "run the full cross-module identity suite");
    vf->add_option("--golden-dir", golden_dir, "directory with the golden table files")
        ->capture_default_str();
    vf->callback([&] {
        bool all = true;
        for (auto& r : run_acceptance_suite(golden_dir, cfg.seed)) {
            std::printf("criterion %2d %-28s %s  %s\n", r.id, r.name.c_str(),
                        r.pass ? "PASS" : "FAIL", r.detail.c_str());
            all = all && r.pass;
        }
        if (!all) throw CLI::RuntimeError(1);
    });

    // allow the global flags to appear after the subcommand name
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::RuntimeError&) {
        return 1; // verification or identity failure
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
