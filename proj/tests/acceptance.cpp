/**
 * Acceptance gate: one line per criterion, pass/fail, nonzero exit on any
 * failure. Criteria 1-10 map onto the named items of the deterministic
 * self-test suite; criterion 11 runs the suite twice and compares the reports
 * byte for byte.
 */
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "afq/selftest.hpp"

int main() {
    const afq::selftest::Config cfg{0, 200, false};
    const std::vector<afq::selftest::Item> items = afq::selftest::run_items(cfg);
    std::map<std::string, const afq::selftest::Item*> by_name;
    for (const auto& it : items) by_name[it.name] = &it;

    const std::vector<std::pair<std::string, std::string>> criteria = {
        {"defining-relations",
         "relation suite exact on A1 A2 A3 B3 B4 C2 C3 D4 D5, t-window [-3,3]"},
        {"loop-degree-closed-forms", "n(w_j) matches the closed forms for every fixture"},
        {"first-layer-min-dimension", "k = 1 and the min-equality at the lowest weight"},
        {"affine-raising-nilpotency", "E_0^{p+1} = F_0^{p+1} = 0 with p from root data"},
        {"loop-degree-inequalities", "degree bounds under every generator"},
        {"quotient-decomposition-cross-check",
         "dominance engine = chain engine on the Lambda sweep, plus the delta-shift law"},
        {"criteria-sweep",
         "triviality false on the sweep; reducibility agrees with the direct pairing"},
        {"tensor-coproduct-oracle", "lowering expansion solvable for nL in 0..6, strings 2,3"},
        {"q-combinatorics", "q-Pascal, palindromicity, q=1 specialization, ring axioms"},
        {"crystal-counts", "dominant-vertex count = summand count; A-type single cycle"},
    };

    int failures = 0;
    int n = 0;
    for (const auto& [name, what] : criteria) {
        ++n;
        const auto it = by_name.find(name);
        const bool pass = it != by_name.end() && it->second->pass;
        std::printf("criterion %2d: %s - %s\n", n, pass ? "PASS" : "FAIL", what.c_str());
        if (!pass) {
            ++failures;
            if (it != by_name.end() && !it->second->detail.empty())
                std::printf("              %s\n", it->second->detail.c_str());
        }
    }

    const afq::selftest::Result r1 = afq::selftest::run(cfg);
    const afq::selftest::Result r2 = afq::selftest::run(cfg);
    const bool deterministic = r1.report == r2.report;
    std::printf("criterion 11: %s - identical seeds give byte-identical reports\n",
                deterministic ? "PASS" : "FAIL");
    if (!deterministic) ++failures;

    // The root-data fixture table is part of the suite but not a numbered
    // criterion; surface it rather than hiding a red check.
    if (by_name.count("root-data-fixtures") && !by_name["root-data-fixtures"]->pass) {
        std::printf("supplement  : FAIL - root data fixture table: %s\n",
                    by_name["root-data-fixtures"]->detail.c_str());
        ++failures;
    }

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
