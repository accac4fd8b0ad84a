// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hzeta/verification.hpp"

int main(int argc, char** argv) {
    std::string golden_dir = "golden";
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--golden-dir") golden_dir = argv[i + 1];

    using hzeta::CriterionResult;
    std::vector<std::function<CriterionResult()>> criteria = {
        [&] { return hzeta::check_table1_regression(golden_dir); },
        [&] { return hzeta::check_table3_two_routes(golden_dir); },
        [] { return hzeta::check_constant_terms(); },
        [] { return hzeta::check_solved_sums(); },
        [] { return hzeta::check_j_at_zero(); },
        [] { return hzeta::check_negative_route_equality(); },
        [] { return hzeta::check_laurent_structure(); },
        [] { return hzeta::check_master_cauchy(); },
        [] { return hzeta::check_arithmetic_identities(); },
        [] { return hzeta::check_q_identities(); },
        [] { return hzeta::check_asymptotics(); },
        [] { return hzeta::check_h2_constant(); },
    };

    bool all_pass = true;
    for (auto& run : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %-28s %s  (%.2fs)  %s\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", secs, r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
