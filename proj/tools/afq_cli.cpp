/**
 * Command-line surface: decompose / chain / criteria / verify-relations /
 * crystal-graph / selftest, JSON or text emission.
 *
 * Exit codes: 0 success, 1 usage or parse error, 2 out-of-scope input,
 * 3 check failure.
 */
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "afq/criteria.hpp"
#include "afq/crystal.hpp"
#include "afq/filtration.hpp"
#include "afq/natmod.hpp"
#include "afq/rootdata.hpp"
#include "afq/selftest.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOutOfScope = 2;
constexpr int kExitCheckFailed = 3;

struct WeightOptions {
    std::string weight;   // comma-separated n_0,...,n_l
    long delta = 0;
    std::string varpi;    // comma-separated m_1,...,m_l (embedded automatically)
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("malformed integer list: " + s);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

afq::AffineWeight parse_weight(const afq::CartanData& c, const WeightOptions& w) {
    if (!w.weight.empty() == !w.varpi.empty())
        throw std::invalid_argument("provide exactly one of --weight and --varpi");
    if (!w.varpi.empty()) {
        const std::vector<int> m = parse_int_list(w.varpi);
        if (static_cast<int>(m.size()) != c.rank)
            throw std::invalid_argument("--varpi needs " + std::to_string(c.rank) +
                                        " coordinates");
        return afq::add_delta(afq::embed(c, afq::FiniteWeight{m}), w.delta);
    }
    const std::vector<int> n = parse_int_list(w.weight);
    if (static_cast<int>(n.size()) != c.rank + 1)
        throw std::invalid_argument("--weight needs " + std::to_string(c.rank + 1) +
                                    " coordinates");
    return afq::AffineWeight{n, w.delta};
}

json weight_json(const afq::AffineWeight& w) {
    return json{{"omega", w.omega}, {"delta", w.delta_coeff}};
}

json chain_json(const std::vector<afq::ChainStep>& steps) {
    json arr = json::array();
    for (const auto& s : steps) {
        json collapse = json::array();
        for (const auto& [idx, threshold] : s.collapse) {
            if (threshold == 1)
                collapse.push_back("Lambda_" + std::to_string(idx));
            else
                collapse.push_back("Lambda_" + std::to_string(idx) +
                                   "<=" + std::to_string(threshold - 1));
        }
        arr.push_back(json{{"j", s.j},
                           {"generator", s.basis_index},
                           {"t_exp", s.t_exp},
                           {"strict", s.is_strict},
                           {"collapse", collapse}});
    }
    return arr;
}

json summands_json(const std::vector<afq::DecompositionSummand>& summands) {
    json arr = json::array();
    for (const auto& s : summands)
        arr.push_back(json{{"mu", json{{"varpi", s.mu.varpi}}},
                           {"n_mu", s.n_mu},
                           {"weight", weight_json(s.highest_weight)},
                           {"multiplicity", s.multiplicity}});
    return arr;
}

std::string weight_text(const afq::AffineWeight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.omega.size(); ++i)
        s += (i ? "," : "") + std::to_string(w.omega[i]);
    return s + ") + " + std::to_string(w.delta_coeff) + "*delta";
}

int run_decompose(const afq::NatModule& m, const afq::AffineWeight& lambda, long n,
                  const std::string& format, bool chain_only) {
    const auto steps = afq::chain(m, lambda, n);
    const auto summands = afq::decompose_quotient(m, lambda, n);
    if (format == "text") {
        if (!chain_only) {
            std::cout << "summands of Cx_" << n << "/Cx_" << n + 1 << ":\n";
            for (const auto& s : summands)
                std::cout << "  X" << weight_text(s.highest_weight) << "  (n_mu=" << s.n_mu
                          << ", mult=" << s.multiplicity << ")\n";
        }
        std::cout << "chain:\n";
        for (const auto& s : steps) {
            std::cout << "  step " << s.j << ": generator w_" << s.basis_index << " t^"
                      << s.t_exp << (s.is_strict ? "  strict" : "  collapses") << "\n";
        }
        return kExitOk;
    }
    json out{{"lambda", weight_json(lambda)}, {"n", n}, {"chain", chain_json(steps)}};
    if (!chain_only) out["summands"] = summands_json(summands);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_criteria(const afq::NatModule& m, const afq::AffineWeight& lambda) {
    const afq::PiData pi = afq::natural_pi_data(m);
    const afq::NaturalDims nd = afq::natural_dims(m);
    const bool trivial = afq::thmB_trivial(m.cartan(), lambda, pi, nd.dims, nd.dims_star);
    const bool reducible = afq::thmC_reducible(lambda, pi);
    json out{{"thmB_trivial", trivial},
             {"thmC_reducible", reducible},
             {"verdict", afq::verdict(trivial, reducible)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_verify(const afq::NatModule& m, long lo, long hi, const std::string& format) {
    const afq::RelationReport rep = afq::verify_relations(m, lo, hi);
    if (format == "text") {
        for (const auto& it : rep.items)
            if (!it.pass) std::cout << "FAIL " << it.id << "\n";
        std::cout << (rep.all_pass ? "all relations hold" : "relation failures present")
                  << " (" << rep.items.size() << " instances)\n";
    } else {
        json failures = json::array();
        for (const auto& id : rep.failures()) failures.push_back(id);
        json out{{"instances", rep.items.size()},
                 {"all_pass", rep.all_pass},
                 {"failures", failures}};
        std::cout << out.dump(2) << "\n";
    }
    return rep.all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with natural loop modules over classical "
                 "quantum affine algebras"};
    app.require_subcommand(1);

    std::string family_str = "A";
    int rank = 1;
    WeightOptions wopt;
    long n = 0;
    std::string format = "json";
    long window_lo = -3, window_hi = 3;
    std::uint64_t seed = 0;
    int samples = 200;
    bool corrupt = false;

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_str, "A, B, C or D")->required();
        cmd->add_option("--rank", rank, "finite rank l")->required();
    };
    auto add_weight = [&](CLI::App* cmd) {
        cmd->add_option("--weight", wopt.weight, "affine coordinates n_0,...,n_l");
        cmd->add_option("--delta", wopt.delta, "delta coefficient");
        cmd->add_option("--varpi", wopt.varpi, "finite coordinates m_1,...,m_l");
        cmd->add_option("--n", n, "filtration index");
    };

    CLI::App* decompose = app.add_subcommand("decompose", "summands of Cx_n/Cx_{n+1}");
    add_type(decompose);
    add_weight(decompose);
    decompose->add_option("--format", format, "json | text");

    CLI::App* chain_cmd = app.add_subcommand("chain", "chain of cyclic submodules");
    add_type(chain_cmd);
    add_weight(chain_cmd);
    chain_cmd->add_option("--format", format, "json | text");

    CLI::App* criteria = app.add_subcommand("criteria", "irreducibility / reducibility predicates");
    add_type(criteria);
    add_weight(criteria);

    CLI::App* verify = app.add_subcommand("verify-relations", "defining relation suite");
    add_type(verify);
    verify->add_option("--window-lo", window_lo, "lowest t-exponent");
    verify->add_option("--window-hi", window_hi, "highest t-exponent");
    verify->add_option("--format", format, "json | text");

    CLI::App* crystal = app.add_subcommand("crystal-graph", "crystal graph of the module");
    add_type(crystal);
    std::string crystal_format = "dot";
    crystal->add_option("--format", crystal_format, "dot | json");

    CLI::App* selftest = app.add_subcommand("selftest", "aggregated invariant suite");
    selftest->add_option("--seed", seed, "random seed");
    selftest->add_option("--samples", samples, "random weight draws per high-rank fixture");
    selftest->add_flag("--corrupt", corrupt, "inject a table corruption (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (selftest->parsed()) {
            if (const char* env = std::getenv("AFK_SEED")) seed = std::stoull(env);
            const afq::selftest::Result r =
                afq::selftest::run({seed, samples, corrupt});
            std::cout << r.report;
            return r.pass ? kExitOk : kExitCheckFailed;
        }
        const afq::CartanData c = afq::make_cartan(afq::family_from_string(family_str), rank);
        const afq::NatModule m = afq::build_natural(c);
        if (verify->parsed()) return run_verify(m, window_lo, window_hi, format);
        if (crystal->parsed()) {
            const afq::CrystalGraph g = afq::crystal_graph(m);
            if (crystal_format == "json") {
                json edges = json::array();
                for (const auto& e : g.edges)
                    edges.push_back(json{{"from", e.from}, {"to", e.to}, {"label", e.label}});
                std::cout << json{{"vertices", g.n_vertices}, {"edges", edges}}.dump(2)
                          << "\n";
            } else {
                std::cout << afq::crystal_dot(m, g);
            }
            return kExitOk;
        }
        const afq::AffineWeight lambda = parse_weight(c, wopt);
        if (criteria->parsed()) return run_criteria(m, lambda);
        return run_decompose(m, lambda, n, format, chain_cmd->parsed());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return kExitOutOfScope;
    }
}
