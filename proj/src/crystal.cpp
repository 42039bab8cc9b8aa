#include "afq/crystal.hpp"

#include <sstream>

#include "afq/filtration.hpp"

namespace afq {

CrystalGraph crystal_graph(const NatModule& m) {
    CrystalGraph g;
    g.n_vertices = m.dim();
    for (int i = 0; i <= m.cartan().rank; ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (const auto& a = m.e_arrow(i, j)) g.edges.push_back({j, a->first, i});
    return g;
}

int lambda_dominant_count(const NatModule& m, const AffineWeight& lambda) {
    return static_cast<int>(omega_lambda(m, lambda).size());
}

std::string crystal_dot(const NatModule& m, const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal_" << family_to_string(m.cartan().family) << m.cartan().rank
        << " {\n";
    out << "  rankdir=LR;\n";
    for (int j = 0; j < g.n_vertices; ++j) out << "  w" << j << ";\n";
    for (const auto& e : g.edges)
        out << "  w" << e.from << " -> w" << e.to << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace afq
