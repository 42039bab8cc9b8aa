/**
 * @file crystal.hpp
 * @brief Crystal graph of the natural module, read off the raising arrows
 *        (legitimate because every weight space is 1-dimensional), and the
 *        dominant-vertex count underlying the branching bijection.
 */
#ifndef AFQ_CRYSTAL_HPP
#define AFQ_CRYSTAL_HPP

#include <string>
#include <vector>

#include "afq/natmod.hpp"
#include "afq/rootdata.hpp"

namespace afq {

struct CrystalGraph {
    struct Edge {
        int from, to, label;
    };
    int n_vertices = 0;
    std::vector<Edge> edges;  // sorted by (label, from)
};

CrystalGraph crystal_graph(const NatModule& m);

/// Number of basis indices j with Lambda + wt(w_j) dominant, adjusted by the
/// type-B zero-weight rule; equals |omega_lambda| since weight spaces are
/// 1-dimensional.
int lambda_dominant_count(const NatModule& m, const AffineWeight& lambda);

/// DOT rendering for external tools.
std::string crystal_dot(const NatModule& m, const CrystalGraph& g);

}  // namespace afq

#endif
