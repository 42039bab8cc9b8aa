/**
 * @file selftest.hpp
 * @brief Aggregated invariant suite over the whole library: relation checks,
 *        closed-form comparisons, cross-engine decomposition sweeps, criteria
 *        sweeps, the sl2 tensor oracle, q-combinatorics, and crystal counts.
 *
 * Deterministic: the seed fixes every randomized sample, so two runs with the
 * same configuration produce byte-identical reports.
 */
#ifndef AFQ_SELFTEST_HPP
#define AFQ_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace afq::selftest {

struct Config {
    std::uint64_t seed = 0;
    int samples = 200;   // random Lambda draws per rank-4/5 fixture
    bool corrupt = false;  // negative control: injects a table corruption
};

struct Item {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on pass; short diagnostic on failure
};

/// Runs every suite item (deterministically ordered).
std::vector<Item> run_items(const Config& cfg);

std::string format_report(const Config& cfg, const std::vector<Item>& items);

struct Result {
    std::string report;
    bool pass = false;
};

Result run(const Config& cfg);

}  // namespace afq::selftest

#endif
