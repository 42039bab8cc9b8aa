#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afq/crystal.hpp"
#include "afq/filtration.hpp"

using namespace afq;

namespace {

NatModule make(Family f, int l) { return build_natural(make_cartan(f, l)); }

}  // namespace

TEST_CASE("edge counts") {
    CHECK(crystal_graph(make(Family::A, 2)).edges.size() == 3);
    CHECK(crystal_graph(make(Family::A, 3)).edges.size() == 4);
    CHECK(crystal_graph(make(Family::C, 2)).edges.size() == 4);
    CHECK(crystal_graph(make(Family::C, 3)).edges.size() == 6);
    CHECK(crystal_graph(make(Family::B, 3)).edges.size() == 8);
    CHECK(crystal_graph(make(Family::D, 4)).edges.size() == 10);
}

TEST_CASE("A-type graph is a single cycle") {
    const NatModule m = make(Family::A, 3);
    const CrystalGraph g = crystal_graph(m);
    std::vector<int> outdeg(g.n_vertices, 0), indeg(g.n_vertices, 0);
    for (const auto& e : g.edges) {
        ++outdeg[e.from];
        ++indeg[e.to];
    }
    for (int v = 0; v < g.n_vertices; ++v) {
        CHECK(outdeg[v] == 1);
        CHECK(indeg[v] == 1);
    }
}

TEST_CASE("dominant count equals the summand index set") {
    const NatModule a2 = make(Family::A, 2);
    CHECK(lambda_dominant_count(a2, AffineWeight{{1, 1, 0}, 0}) == 2);
    CHECK(lambda_dominant_count(a2, AffineWeight{{1, 1, 1}, 0}) == 3);
    const NatModule b3 = make(Family::B, 3);
    CHECK(lambda_dominant_count(b3, AffineWeight{{1, 1, 1, 1}, 0}) ==
          static_cast<int>(omega_lambda(b3, AffineWeight{{1, 1, 1, 1}, 0}).size()));
}

TEST_CASE("DOT rendering") {
    const NatModule m = make(Family::A, 2);
    const std::string dot = crystal_dot(m, crystal_graph(m));
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("w0 -> ") != std::string::npos);
    CHECK(dot.find("label=\"0\"") != std::string::npos);
    CHECK(dot.rfind("}\n") == dot.size() - 2);
}
