/**
 * @file filtration.hpp
 * @brief Decomposition of the tensor-filtration quotients Cx_n/Cx_{n+1} for
 *        the natural modules, by two independent engines.
 *
 * The primary engine enumerates Omega_Lambda (module weights mu with
 * Lambda + mu dominant, with the type-B zero-weight exclusion) and emits one
 * highest-weight summand X(Lambda + mu + (n + n(mu)) delta) per element. The
 * verification engine walks the per-type chain of cyclic submodules with its
 * transcribed collapse predicates and extracts one summand per strict step;
 * the two must agree as multisets.
 *
 * One transcription note: in type B the step generated by w_{l-1} sits at the
 * bottom of the 3-dimensional l-string, so it survives only when
 * Lambda_l >= 2 (the relation F_l^2 v_Lambda = 0 at Lambda_l = 1 produces the
 * collapse); the stated per-step condition lists the threshold explicitly.
 */
#ifndef AFQ_FILTRATION_HPP
#define AFQ_FILTRATION_HPP

#include <set>
#include <vector>

#include "afq/natmod.hpp"
#include "afq/rootdata.hpp"

namespace afq {

struct DecompositionSummand {
    FiniteWeight mu;
    int n_mu = 0;
    AffineWeight highest_weight;  // Lambda + mu + (n + n_mu) delta
    int multiplicity = 1;

    bool operator<(const DecompositionSummand& o) const {
        return highest_weight < o.highest_weight;
    }
    bool operator==(const DecompositionSummand& o) const {
        return mu == o.mu && n_mu == o.n_mu && highest_weight == o.highest_weight &&
               multiplicity == o.multiplicity;
    }
};

struct ChainStep {
    int j = 0;           // position in the displayed chain
    int basis_index = 0; // generator w_j of the quotient at this step
    long t_exp = 0;      // t-exponent of the generator: n + n(w_j)
    // Collapse predicate: the step collapses unless Lambda_idx >= threshold
    // for every (idx, threshold) listed; pairs encode the "or" steps.
    std::vector<std::pair<int, int>> collapse;
    bool is_strict = false;
};

/// Module weights mu with Lambda + mu dominant (type-B rule: mu = 0 excluded
/// when Lambda(alpha_l) = 0). Throws std::domain_error for non-dominant
/// Lambda and "not covered" for multiples of delta.
std::set<FiniteWeight> omega_lambda(const NatModule& m, const AffineWeight& lambda);

std::vector<DecompositionSummand> decompose_quotient(const NatModule& m,
                                                     const AffineWeight& lambda, long n);

std::vector<ChainStep> chain(const NatModule& m, const AffineWeight& lambda, long n);

std::vector<DecompositionSummand> chain_summands(const NatModule& m,
                                                 const AffineWeight& lambda, long n,
                                                 const std::vector<ChainStep>& steps);

}  // namespace afq

#endif
