#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "afq/natmod.hpp"

using namespace afq;

namespace {

NatModule make(Family f, int l) { return build_natural(make_cartan(f, l)); }

}  // namespace

TEST_CASE("dimensions") {
    CHECK(make(Family::A, 2).dim() == 3);
    CHECK(make(Family::A, 3).dim() == 4);
    CHECK(make(Family::B, 3).dim() == 7);
    CHECK(make(Family::C, 2).dim() == 4);
    CHECK(make(Family::C, 3).dim() == 6);
    CHECK(make(Family::D, 4).dim() == 8);
}

TEST_CASE("A2 arrow structure is a 3-cycle") {
    const NatModule m = make(Family::A, 2);
    // E_1 w_2 = w_0? The raising arrows labeled 1..l step up the basis chain,
    // label 0 closes the cycle.
    int cycle = 0;
    int v = 0;
    for (int step = 0; step < 3; ++step) {
        int moved = -1;
        for (int i = 0; i <= 2; ++i)
            if (const auto a = m.e_arrow(i, v)) {
                CHECK(a->second == LaurentPoly(1));
                moved = a->first;
            }
        REQUIRE(moved >= 0);
        v = moved;
        ++cycle;
    }
    CHECK(v == 0);
    CHECK(cycle == 3);
}

TEST_CASE("highest weight is varpi_1") {
    for (auto [f, l] : std::vector<std::pair<Family, int>>{
             {Family::A, 3}, {Family::B, 3}, {Family::C, 2}, {Family::D, 4}}) {
        const NatModule m = make(f, l);
        FiniteWeight v1 = zero_finite(m.cartan());
        v1.varpi[0] = 1;
        CHECK(m.weight_of(0) == v1);
        // No raising arrow with a finite label leaves w_0.
        for (int i = 1; i <= l; ++i) CHECK_FALSE(m.e_arrow(i, 0).has_value());
    }
}

TEST_CASE("weight spaces are one-dimensional except the B zero weight") {
    const NatModule b3 = make(Family::B, 3);
    CHECK(weight_multiplicity(b3, zero_finite(b3.cartan())) == 1);
    FiniteWeight v1 = zero_finite(b3.cartan());
    v1.varpi[0] = 1;
    CHECK(weight_multiplicity(b3, v1) == 1);
    FiniteWeight absent = zero_finite(b3.cartan());
    absent.varpi[1] = 1;
    CHECK(weight_multiplicity(b3, absent) == 0);
}

TEST_CASE("loop degrees") {
    const NatModule a2 = make(Family::A, 2);
    CHECK(a2.n_of(0) == 0);
    CHECK(a2.n_of(1) == 1);
    CHECK(a2.n_of(2) == 1);
    const NatModule b3 = make(Family::B, 3);
    CHECK(b3.n_of(0) == 0);
    for (int j = 1; j < 6; ++j) CHECK(b3.n_of(j) == 1);
    CHECK(b3.n_of(6) == 2);
    const NatModule d4 = make(Family::D, 4);
    CHECK(d4.n_of(7) == 2);
}

TEST_CASE("graded action") {
    const NatModule m = make(Family::A, 2);
    const LoopVector v = LoopVector::basis(0, 0);
    // E_0 lowers the finite weight by theta and raises the t-exponent by one.
    const LoopVector e0v = act(m, Gen{Gen::E, 0}, v);
    REQUIRE(e0v.terms.size() == 1);
    CHECK(e0v.terms.count({1, 1}) == 1);
    // F_0 undoes it.
    CHECK(act(m, Gen{Gen::F, 0}, e0v) ==
          [&] {
              LoopVector w;
              w.add(0, 0, qint(1) * qint(1));
              return w;
          }());
    // D reads the t-exponent.
    const LoopVector dv = act(m, Gen{Gen::D, 0}, e0v);
    CHECK(dv.terms.at({1, 1}) == LaurentPoly::q_power(1));
}

TEST_CASE("relation suite passes on small fixtures") {
    for (auto [f, l] : std::vector<std::pair<Family, int>>{
             {Family::A, 1}, {Family::A, 2}, {Family::C, 2}, {Family::B, 3}}) {
        const RelationReport rep = verify_relations(make(f, l), -2, 2);
        CHECK(rep.all_pass);
        CHECK(rep.failures().empty());
    }
}

TEST_CASE("corrupted table is detected and named") {
    NatModule m = make(Family::B, 3);
    // Kill the first lowering arrow with label 1.
    for (int j = 0; j < m.dim(); ++j)
        if (m.f_arrow(1, j)) {
            m.corrupt_f(1, j);
            break;
        }
    const RelationReport rep = verify_relations(m, -1, 1);
    CHECK_FALSE(rep.all_pass);
    bool named = false;
    for (const auto& id : rep.failures())
        if (id.find("i=1") != std::string::npos || id.find("j=1") != std::string::npos)
            named = true;
    CHECK(named);
}

TEST_CASE("forced zero lowering arrow is inconsistent") {
    const CartanData c = make_cartan(Family::A, 2);
    // w_1 is the target of a raising arrow, so F must act on it by a nonzero
    // scalar; forcing it to zero contradicts the commutation relation.
    CHECK_THROWS_WITH_AS(build_natural(c, {{1, 0}}), "inconsistent table", std::domain_error);
}

TEST_CASE("module invariants") {
    for (auto [f, l] : std::vector<std::pair<Family, int>>{
             {Family::A, 2}, {Family::B, 3}, {Family::C, 2}, {Family::D, 4}}) {
        const NatModule m = make(f, l);
        CHECK(k_of_natural(m) == 1);
        const PiData pi = natural_pi_data(m);
        CHECK(pi.k == 1);
        CHECK(pi.m == 1);
        CHECK(pi.theta_pairing == 1);
        CHECK(pi.n_pi == ((f == Family::B || f == Family::D) ? 2 : 1));
    }
}

TEST_CASE("action table JSON round-trips") {
    const NatModule m = make(Family::B, 3);
    const auto j = nlohmann::json::parse(action_table_json(m));
    CHECK(j["family"] == "B");
    CHECK(j["rank"] == 3);
    int e_count = 0;
    for (int i = 0; i <= 3; ++i)
        for (int v = 0; v < m.dim(); ++v)
            if (m.e_arrow(i, v)) ++e_count;
    CHECK(j["E"].size() == e_count);
    for (const auto& a : j["E"]) {
        const auto arrow = m.e_arrow(a["i"], a["from"]);
        REQUIRE(arrow.has_value());
        CHECK(arrow->first == a["to"]);
        CHECK(arrow->second == LaurentPoly::parse(a["scalar"].get<std::string>()));
    }
    for (const auto& a : j["F"]) {
        const auto arrow = m.f_arrow(a["i"], a["from"]);
        REQUIRE(arrow.has_value());
        CHECK(arrow->second == LaurentPoly::parse(a["scalar"].get<std::string>()));
    }
}
