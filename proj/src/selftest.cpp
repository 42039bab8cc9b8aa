#include "afq/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "afq/criteria.hpp"
#include "afq/crystal.hpp"
#include "afq/filtration.hpp"
#include "afq/laurent.hpp"
#include "afq/natmod.hpp"
#include "afq/ratfunc.hpp"
#include "afq/rootdata.hpp"
#include "afq/sl2check.hpp"

namespace afq::selftest {

namespace {

struct Fixture {
    Family family;
    int rank;
};

const std::vector<Fixture>& module_fixtures() {
    static const std::vector<Fixture> f = {
        {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 3}, {Family::B, 4},
        {Family::C, 2}, {Family::C, 3}, {Family::D, 4}, {Family::D, 5},
    };
    return f;
}

std::string fixture_name(const Fixture& f) {
    return family_to_string(f.family) + std::to_string(f.rank);
}

// A check accumulates failures into `detail` and reports pass = empty.
struct Check {
    std::ostringstream detail;
    int failures = 0;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures < 6) detail << (failures ? "; " : "") << what;
        ++failures;
    }
    Item finish(const std::string& name) {
        Item it;
        it.name = name;
        it.pass = failures == 0;
        it.detail = detail.str();
        if (failures > 6) it.detail += "; ... (" + std::to_string(failures) + " failures)";
        return it;
    }
};

// The Lambda sweep shared by the decomposition, criteria and crystal items:
// coordinates in {0,1,2}^{l+1} minus zero, exhaustively for rank <= 3 and
// `samples` seeded draws for larger ranks.
std::vector<AffineWeight> lambda_sweep(const CartanData& c, std::uint64_t seed, int samples) {
    std::vector<AffineWeight> out;
    const int n = c.rank + 1;
    if (c.rank <= 3) {
        std::vector<int> v(n, 0);
        while (true) {
            if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }))
                out.push_back(AffineWeight{v, 0});
            int i = 0;
            for (; i < n; ++i) {
                if (++v[i] < 3) break;
                v[i] = 0;
            }
            if (i == n) break;
        }
    } else {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<unsigned>(c.rank)) ^
                            static_cast<std::uint64_t>(c.family));
        while (static_cast<int>(out.size()) < samples) {
            std::vector<int> v(n);
            bool nonzero = false;
            for (int i = 0; i < n; ++i) {
                v[i] = static_cast<int>(rng() % 3);
                nonzero = nonzero || v[i] != 0;
            }
            if (nonzero) out.push_back(AffineWeight{v, 0});
        }
    }
    return out;
}

std::string wstr(const AffineWeight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.omega.size(); ++i)
        s += (i ? "," : "") + std::to_string(w.omega[i]);
    return s + ";" + std::to_string(w.delta_coeff) + ")";
}

Item check_qlaurent(const Config& cfg) {
    Check ck;
    ck.expect(qint(1, 1) == LaurentPoly(1), "[1] != 1");
    ck.expect(qint(2, 1) == LaurentPoly::q_power(1) + LaurentPoly::q_power(-1),
              "[2] != q + q^-1");
    ck.expect(qint(3, 2) == LaurentPoly::q_power(4) + LaurentPoly(1) + LaurentPoly::q_power(-4),
              "[3]_{q^2} mismatch");
    ck.expect(qbinom(2, 1, 1) == qint(2, 1), "qbinom(2,1) != [2]");
    for (int m = 0; m <= 8; ++m)
        for (int r = 0; r <= m; ++r)
            for (int d = 1; d <= 3; ++d)
                ck.expect(qbinom(m, r, d).bar() == qbinom(m, r, d),
                          "palindromicity fails at (" + std::to_string(m) + "," +
                              std::to_string(r) + "," + std::to_string(d) + ")");
    for (int m = 0; m <= 10; ++m) {
        Rational binom = 1;
        for (int r = 0; r <= m; ++r) {
            ck.expect(qbinom(m, r, 1).eval_at_one() == binom,
                      "q=1 specialization fails at (" + std::to_string(m) + "," +
                          std::to_string(r) + ")");
            binom = binom * (m - r) / (r + 1);
        }
        ck.expect(qint(m, 1).eval_at_one() == m, "[m] at q=1");
    }
    for (int d = 1; d <= 3; ++d)
        for (int m = 2; m <= 8; ++m)
            for (int r = 1; r <= m - 1; ++r) {
                const LaurentPoly lhs = qbinom(m, r, d);
                const LaurentPoly rhs = LaurentPoly::q_power(d * r) * qbinom(m - 1, r, d) +
                                        LaurentPoly::q_power(d * (r - m)) * qbinom(m - 1, r - 1, d);
                ck.expect(lhs == rhs, "q-Pascal fails at (" + std::to_string(m) + "," +
                                          std::to_string(r) + "," + std::to_string(d) + ")");
            }
    // Ring axioms on random triples.
    std::mt19937_64 rng(cfg.seed ^ 0xabcdefull);
    auto rand_poly = [&]() {
        LaurentPoly p;
        const int nterms = static_cast<int>(rng() % 5);
        for (int t = 0; t < nterms; ++t) {
            const int e = static_cast<int>(rng() % 13) - 6;
            const long num = static_cast<long>(rng() % 41) - 20;
            const long den = static_cast<long>(rng() % 20) + 1;
            p += LaurentPoly::monomial(e, Rational(num, den));
        }
        return p;
    };
    for (int t = 0; t < 1000; ++t) {
        const LaurentPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        ck.expect((a * b) * c == a * (b * c), "associativity fails");
        ck.expect(a * (b + c) == a * b + a * c, "distributivity fails");
        ck.expect(a * b == b * a, "commutativity fails");
        if (!b.is_zero())
            ck.expect(LaurentPoly::div_exact(a * b, b) == a, "exact division fails");
    }
    // Canonical text form round-trips.
    for (int t = 0; t < 200; ++t) {
        const LaurentPoly a = rand_poly();
        ck.expect(LaurentPoly::parse(a.str()) == a, "text round-trip fails for " + a.str());
    }
    return ck.finish("q-combinatorics");
}

Item check_rootdata() {
    Check ck;
    struct Expected {
        Family f;
        int rank;
        std::vector<int> d, marks, comarks;
    };
    const std::vector<Expected> table = {
        {Family::A, 1, {1, 1}, {1, 1}, {1, 1}},
        {Family::A, 2, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}},
        {Family::A, 3, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}},
        {Family::A, 4, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}},
        {Family::B, 3, {2, 2, 2, 1}, {1, 1, 2, 2}, {1, 1, 2, 1}},
        {Family::B, 4, {2, 2, 2, 2, 1}, {1, 1, 2, 2, 2}, {1, 1, 2, 2, 1}},
        {Family::C, 2, {2, 1, 2}, {1, 2, 1}, {1, 1, 1}},
        {Family::C, 3, {2, 1, 1, 2}, {1, 2, 2, 1}, {1, 1, 1, 1}},
        {Family::C, 4, {2, 1, 1, 1, 2}, {1, 2, 2, 2, 1}, {1, 1, 1, 1, 1}},
        {Family::D, 4, {1, 1, 1, 1, 1}, {1, 1, 2, 1, 1}, {1, 1, 2, 1, 1}},
        {Family::D, 5, {1, 1, 1, 1, 1, 1}, {1, 1, 2, 2, 1, 1}, {1, 1, 2, 2, 1, 1}},
    };
    for (const auto& e : table) {
        const CartanData c = make_cartan(e.f, e.rank);
        const std::string nm = family_to_string(e.f) + std::to_string(e.rank);
        ck.expect(c.d == e.d, nm + " d mismatch");
        ck.expect(c.marks == e.marks, nm + " marks mismatch");
        ck.expect(c.comarks == e.comarks, nm + " comarks mismatch");
        for (int i = 0; i <= c.rank; ++i) {
            ck.expect(c.a[i][i] == 2, nm + " diagonal");
            for (int j = 0; j <= c.rank; ++j) {
                if (i != j) ck.expect(c.a[i][j] <= 0, nm + " off-diagonal sign");
                ck.expect(c.d[i] * c.a[i][j] == c.d[j] * c.a[j][i], nm + " symmetrizability");
            }
            // delta pairs to zero with every coroot: the alpha_0 column plus
            // the mark-weighted finite columns cancel.
            int s = c.a[i][0];
            for (int k = 1; k <= c.rank; ++k) s += c.marks[k] * c.a[i][k];
            ck.expect(s == 0, nm + " alpha_0 + theta != delta at row " + std::to_string(i));
        }
    }
    ck.expect(make_cartan(Family::A, 1).a[0][1] == -2, "A1 affine matrix");
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        bool threw = false;
        try {
            make_cartan(f, f == Family::A ? 0 : 2 - (f == Family::C ? 1 : 0));
        } catch (const std::domain_error&) {
            threw = true;
        }
        ck.expect(threw, "rank bound not enforced for " + family_to_string(f));
    }

    // Pairings and embeddings.
    {
        const CartanData a2 = make_cartan(Family::A, 2);
        const AffineWeight delta{{0, 0, 0}, 1};
        const AffineWeight omega0{{1, 0, 0}, 0};
        for (int i = 0; i <= 2; ++i) ck.expect(pair_with_coroot(delta, i) == 0, "delta pairing");
        ck.expect(pair_with_delta(a2, delta) == 0, "(delta|delta)");
        ck.expect(pair_with_delta(a2, omega0) == 1, "(omega_0|delta) in A2");
        ck.expect(pair_with_delta(a2, AffineWeight{{1, 1, 0}, 0}) == 2, "(omega_0+omega_1|delta)");
        const AffineWeight v1 = embed(a2, FiniteWeight{{1, 0}});
        ck.expect(v1.omega == std::vector<int>({-1, 1, 0}), "varpi_1 embedding in A2");
        ck.expect(!is_dominant(v1), "embedded varpi_1 dominance");
        ck.expect(is_dominant(omega0), "omega_0 dominance");
        ck.expect(!is_dominant(AffineWeight{{0, -1, 0}, 3}), "negative coordinate dominance");
        ck.expect(pair_with_root(a2, AffineWeight{{0, 2, 0}, 0}, 1) == 2, "(alpha_1|alpha_1)");
    }
    {
        const CartanData a2 = make_cartan(Family::A, 2);
        const auto orbit = weyl_orbit(a2, FiniteWeight{{1, 0}});
        ck.expect(orbit.size() == 3, "A2 varpi_1 orbit size");
        ck.expect(orbit.count(FiniteWeight{{-1, 1}}) == 1, "A2 orbit content");
        ck.expect(lowest_weight_in_orbit(a2, FiniteWeight{{1, 0}}) == FiniteWeight{{0, -1}},
                  "A2 lowest weight");
        const CartanData c2 = make_cartan(Family::C, 2);
        ck.expect(lowest_weight_in_orbit(c2, FiniteWeight{{1, 0}}) == FiniteWeight{{-1, 0}},
                  "C2 lowest weight");
        const CartanData b3 = make_cartan(Family::B, 3);
        const auto orbit_b = weyl_orbit(b3, FiniteWeight{{1, 0, 0}});
        ck.expect(orbit_b.size() == 6, "B3 varpi_1 orbit size");
        ck.expect(orbit_b.count(FiniteWeight{{0, 0, 0}}) == 0, "B3 orbit avoids 0");
        ck.expect(weyl_orbit(b3, FiniteWeight{{0, 0, 0}}).size() == 1, "orbit of 0");
    }
    // Orbit of varpi_1: unique dominant/antidominant element and the
    // symmetric highest-root pairing -(w_circ varpi_1)(theta-coroot).
    for (const auto& f : module_fixtures()) {
        const CartanData c = make_cartan(f.family, f.rank);
        FiniteWeight v1 = zero_finite(c);
        v1.varpi[0] = 1;
        const auto orbit = weyl_orbit(c, v1);
        int dom = 0, antidom = 0;
        for (const auto& w : orbit) {
            if (std::all_of(w.varpi.begin(), w.varpi.end(), [](int x) { return x >= 0; })) ++dom;
            if (std::all_of(w.varpi.begin(), w.varpi.end(), [](int x) { return x <= 0; })) ++antidom;
        }
        ck.expect(dom == 1 && antidom == 1, fixture_name(f) + " orbit extremes");
        const FiniteWeight low = lowest_weight_in_orbit(c, v1);
        ck.expect(-pair_finite_theta_coroot(c, low) == pair_finite_theta_coroot(c, v1),
                  fixture_name(f) + " lowest-weight theta pairing");
        ck.expect(pair_finite_theta_coroot(c, v1) == 1,
                  fixture_name(f) + " varpi_1(theta-coroot) != 1");
    }
    return ck.finish("root-data-fixtures");
}

Item check_relations(const Config& cfg) {
    Check ck;
    for (const auto& f : module_fixtures()) {
        const CartanData c = make_cartan(f.family, f.rank);
        NatModule m = build_natural(c);
        if (cfg.corrupt && f.family == Family::B && f.rank == 3) m.corrupt_f(1, 0);
        const RelationReport rep = verify_relations(m, -3, 3);
        if (!rep.all_pass) {
            std::string names;
            for (const auto& id : rep.failures()) names += (names.empty() ? "" : ", ") + id;
            ck.expect(false, fixture_name(f) + " relation failures: " + names);
        }
    }
    return ck.finish("defining-relations");
}

Item check_nvalues() {
    Check ck;
    for (const auto& f : module_fixtures()) {
        const NatModule m = build_natural(make_cartan(f.family, f.rank));
        const int l = f.rank;
        for (int j = 0; j < m.dim(); ++j) {
            int expected = (j == 0) ? 0 : 1;
            if (f.family == Family::B && j == 2 * l) expected = 2;
            if (f.family == Family::D && j == 2 * l - 1) expected = 2;
            ck.expect(m.n_of(j) == expected, fixture_name(f) + " n(w_" + std::to_string(j) +
                                                 ") = " + std::to_string(m.n_of(j)));
        }
    }
    return ck.finish("loop-degree-closed-forms");
}

Item check_k_values() {
    Check ck;
    for (const auto& f : module_fixtures()) {
        const NatModule m = build_natural(make_cartan(f.family, f.rank));
        ck.expect(k_of_natural(m) == 1, fixture_name(f) + " k != 1");
        // Min-equality: the same minimum computed at the lowest weight.
        const NaturalDims nd = natural_dims(m);
        auto min_nonzero = [](const std::map<int, int>& mp) {
            int best = -1;
            for (const auto& [i, d] : mp)
                if (d > 0 && (best < 0 || d < best)) best = d;
            return best;
        };
        ck.expect(min_nonzero(nd.dims) == min_nonzero(nd.dims_star),
                  fixture_name(f) + " min-equality");
    }
    return ck.finish("first-layer-min-dimension");
}

Item check_nilpotency() {
    Check ck;
    for (const auto& f : module_fixtures()) {
        const NatModule m = build_natural(make_cartan(f.family, f.rank));
        const int p = static_cast<int>(pair_finite_theta_coroot(m.cartan(), m.weight_of(0)));
        ck.expect(mat_is_zero(mat_pow(m.e_matrix(0), p + 1)),
                  fixture_name(f) + " E_0^{p+1} != 0");
        ck.expect(mat_is_zero(mat_pow(m.f_matrix(0), p + 1)),
                  fixture_name(f) + " F_0^{p+1} != 0");
        for (int i = 0; i <= f.rank; ++i) {
            const int power = (f.family == Family::B && i == f.rank) ? 3 : 2;
            ck.expect(mat_is_zero(mat_pow(m.e_matrix(i), power)),
                      fixture_name(f) + " E_" + std::to_string(i) + " nilpotency");
            ck.expect(mat_is_zero(mat_pow(m.f_matrix(i), power)),
                      fixture_name(f) + " F_" + std::to_string(i) + " nilpotency");
            if (power == 3)
                ck.expect(!mat_is_zero(mat_pow(m.e_matrix(i), 2)),
                          fixture_name(f) + " E_l^2 unexpectedly 0");
        }
        // Level zero: K_0 prod K_i^{a_i} = 1 on V.
        Matrix prod = m.k_matrix(0);
        for (int i = 1; i <= f.rank; ++i)
            for (int r = 0; r < m.cartan().marks[i]; ++r) prod = mat_mul(prod, m.k_matrix(i));
        ck.expect(prod == mat_identity(m.dim()), fixture_name(f) + " level zero");
        // Character closed under the Weyl group.
        std::set<FiniteWeight> wset;
        for (int j = 0; j < m.dim(); ++j) wset.insert(m.weight_of(j));
        for (int j = 0; j < m.dim(); ++j)
            for (const auto& w : weyl_orbit(m.cartan(), m.weight_of(j)))
                ck.expect(wset.count(w) == 1, fixture_name(f) + " character W-invariance");
    }
    return ck.finish("affine-raising-nilpotency");
}

Item check_degree_inequalities() {
    Check ck;
    for (const auto& f : module_fixtures()) {
        const NatModule m = build_natural(make_cartan(f.family, f.rank));
        for (int j = 0; j < m.dim(); ++j) {
            for (int i = 0; i <= f.rank; ++i) {
                const auto e = m.e_arrow(i, j);
                const auto fa = m.f_arrow(i, j);
                if (i == 0) {
                    if (e) ck.expect(m.n_of(e->first) <= m.n_of(j) + 1,
                                     fixture_name(f) + " n(E_0 w) bound");
                    if (fa) ck.expect(m.n_of(fa->first) <= m.n_of(j) - 1,
                                      fixture_name(f) + " n(F_0 w) bound");
                } else {
                    if (e) ck.expect(m.n_of(e->first) <= m.n_of(j),
                                     fixture_name(f) + " n(E_i w) bound");
                    if (fa) ck.expect(m.n_of(fa->first) <= m.n_of(j) + 1,
                                      fixture_name(f) + " n(F_i w) bound");
                }
            }
        }
    }
    return ck.finish("loop-degree-inequalities");
}

Item check_decomposition(const Config& cfg) {
    Check ck;
    for (const auto& f : module_fixtures()) {
        const NatModule m = build_natural(make_cartan(f.family, f.rank));
        for (const AffineWeight& lambda : lambda_sweep(m.cartan(), cfg.seed, cfg.samples)) {
            for (long n = -1; n <= 1; ++n) {
                const auto direct = decompose_quotient(m, lambda, n);
                const auto steps = chain(m, lambda, n);
                const auto via_chain = chain_summands(m, lambda, n, steps);
                std::vector<AffineWeight> a, b;
                for (const auto& s : direct) a.push_back(s.highest_weight);
                for (const auto& s : via_chain) b.push_back(s.highest_weight);
                ck.expect(a == b, fixture_name(f) + " engines disagree at " + wstr(lambda) +
                                      " n=" + std::to_string(n));
                ck.expect(!direct.empty(),
                          fixture_name(f) + " no strict step at " + wstr(lambda));
                for (const auto& s : direct) {
                    ck.expect(is_dominant(s.highest_weight),
                              fixture_name(f) + " non-dominant summand at " + wstr(lambda));
                    const AffineWeight rebuilt =
                        add_delta(add(lambda, embed(m.cartan(), s.mu)), n + s.n_mu);
                    ck.expect(s.highest_weight == rebuilt,
                              fixture_name(f) + " summand bookkeeping at " + wstr(lambda));
                }
                ck.expect(direct.size() == omega_lambda(m, lambda).size(),
                          fixture_name(f) + " summand count at " + wstr(lambda));
                // delta-shift law.
                if (n == 0) {
                    const auto shifted = decompose_quotient(m, lambda, 1);
                    bool ok = shifted.size() == direct.size();
                    for (std::size_t t = 0; ok && t < direct.size(); ++t)
                        ok = shifted[t].highest_weight ==
                             add_delta(direct[t].highest_weight, 1);
                    ck.expect(ok, fixture_name(f) + " delta-shift law at " + wstr(lambda));
                }
            }
        }
        // Scope errors.
        bool threw = false;
        try {
            decompose_quotient(m, AffineWeight{std::vector<int>(f.rank + 1, 0), 5}, 0);
        } catch (const std::domain_error&) {
            threw = true;
        }
        ck.expect(threw, fixture_name(f) + " multiple of delta not rejected");
    }
    return ck.finish("quotient-decomposition-cross-check");
}

Item check_criteria(const Config& cfg) {
    Check ck;
    for (const auto& f : module_fixtures()) {
        const NatModule m = build_natural(make_cartan(f.family, f.rank));
        const PiData pi = natural_pi_data(m);
        const NaturalDims nd = natural_dims(m);
        ck.expect(pi.k == 1 && pi.m == 1, fixture_name(f) + " pi constants");
        const int expected_n = (f.family == Family::B || f.family == Family::D) ? 2 : 1;
        ck.expect(pi.n_pi == expected_n, fixture_name(f) + " n(pi)");
        ck.expect(pi.theta_pairing == 1, fixture_name(f) + " theta pairing");

        const CartanData& c = m.cartan();
        for (const AffineWeight& lambda : lambda_sweep(c, cfg.seed + 1, cfg.samples)) {
            const bool trivial = thmB_trivial(c, lambda, pi, nd.dims, nd.dims_star);
            ck.expect(!trivial, fixture_name(f) + " triviality claimed at " + wstr(lambda));
            const bool red = thmC_reducible(lambda, pi);
            const bool direct = lambda.omega[0] >= pi.theta_pairing + 1;
            ck.expect(red == direct, fixture_name(f) + " reducibility mismatch at " + wstr(lambda));
            ck.expect(!(trivial && red), fixture_name(f) + " both criteria at " + wstr(lambda));
            const AffineWeight shifted = add_delta(lambda, 7);
            ck.expect(thmB_trivial(c, shifted, pi, nd.dims, nd.dims_star) == trivial &&
                          thmC_reducible(shifted, pi) == red,
                      fixture_name(f) + " delta-shift variance at " + wstr(lambda));
        }
        // The zero weight (all coordinates 0) does satisfy the triviality
        // inequality; it lies outside the sweep above.
        ck.expect(thmB_trivial(c, AffineWeight{std::vector<int>(f.rank + 1, 0), 0}, pi,
                               nd.dims, nd.dims_star),
                  fixture_name(f) + " Lambda=0 should be trivial");
    }
    return ck.finish("criteria-sweep");
}

Item check_sl2() {
    Check ck;
    const LaurentPoly qden = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
    for (int n = 0; n <= 3; ++n) {
        const Sl2Module v = build_sl2(n);
        Matrix lhs = mat_sub(mat_mul(v.E, v.F), mat_mul(v.F, v.E));
        for (auto& row : lhs)
            for (auto& e : row) e *= qden;
        ck.expect(lhs == mat_sub(v.K, v.Kinv), "V(" + std::to_string(n) + ") [E,F]");
    }
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            const Sl2Module va = build_sl2(a), vb = build_sl2(b);
            const Matrix de = tensor_e(va, vb);
            const Matrix df = tensor_f_power(va, vb, 1);
            Matrix lhs = mat_sub(mat_mul(de, df), mat_mul(df, de));
            for (auto& row : lhs)
                for (auto& e : row) e *= qden;
            const Matrix dk = tensor_k(va, vb);
            const Matrix dki = kronecker(va.Kinv, vb.Kinv);
            ck.expect(lhs == mat_sub(dk, dki),
                      "tensor [E,F] on V(" + std::to_string(a) + ")xV(" + std::to_string(b) + ")");
            // q = 1: the coproduct power collapses to (F(x)1 + 1(x)F)^p.
            for (int p = 1; p <= 3; ++p) {
                const Matrix dfp = tensor_f_power(va, vb, p);
                Matrix classical =
                    mat_add(kronecker(va.F, mat_identity(vb.dim())),
                            kronecker(mat_identity(va.dim()), vb.F));
                classical = mat_pow(classical, p);
                bool ok = true;
                for (std::size_t i = 0; i < dfp.size(); ++i)
                    for (std::size_t j = 0; j < dfp[i].size(); ++j)
                        ok = ok && dfp[i][j].eval_at_one() == classical[i][j].eval_at_one();
                ck.expect(ok, "q=1 coproduct power p=" + std::to_string(p));
            }
        }
    for (int nl = 0; nl <= 6; ++nl)
        for (int sd = 2; sd <= 3; ++sd) {
            const Rdc10Result r = rdc10_check(nl, sd);
            ck.expect(r.verified, "lowering expansion unsolvable at nL=" + std::to_string(nl) +
                                      " dim=" + std::to_string(sd));
        }
    ck.expect(rdc10_check(0, 2).coefficients == std::vector<std::string>{"1"},
              "c_1 != 1 for the trivial case");
    return ck.finish("tensor-coproduct-oracle");
}

Item check_crystal(const Config& cfg) {
    Check ck;
    for (const auto& f : module_fixtures()) {
        const NatModule m = build_natural(make_cartan(f.family, f.rank));
        const CrystalGraph g = crystal_graph(m);
        const int l = f.rank;
        int expected_edges = 0;
        switch (f.family) {
            case Family::A: expected_edges = l + 1; break;
            case Family::C: expected_edges = 2 * l; break;
            case Family::B:
            case Family::D: expected_edges = 2 * l + 2; break;
        }
        ck.expect(static_cast<int>(g.edges.size()) == expected_edges,
                  fixture_name(f) + " edge count " + std::to_string(g.edges.size()));
        // Degree bounds and connectivity.
        std::map<std::pair<int, int>, int> outdeg, indeg;
        std::vector<std::set<int>> adj(g.n_vertices);
        for (const auto& e : g.edges) {
            ck.expect(++outdeg[{e.label, e.from}] <= 1, fixture_name(f) + " out-degree");
            ck.expect(++indeg[{e.label, e.to}] <= 1, fixture_name(f) + " in-degree");
            adj[e.from].insert(e.to);
            adj[e.to].insert(e.from);
        }
        std::vector<bool> seen(g.n_vertices, false);
        std::function<void(int)> dfs = [&](int v) {
            seen[v] = true;
            for (int w : adj[v])
                if (!seen[w]) dfs(w);
        };
        dfs(0);
        ck.expect(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }),
                  fixture_name(f) + " connectivity");
        if (f.family == Family::A) {
            // Single directed (l+1)-cycle.
            int v = 0, steps = 0;
            do {
                ck.expect(m.e_arrow(0, v).has_value() ||
                              [&] {
                                  for (int i = 1; i <= l; ++i)
                                      if (m.e_arrow(i, v)) return true;
                                  return false;
                              }(),
                          "A-cycle stuck");
                int next = -1;
                for (int i = 0; i <= l; ++i)
                    if (const auto& a = m.e_arrow(i, v)) next = a->first;
                v = next;
                ++steps;
            } while (v != 0 && steps <= g.n_vertices);
            ck.expect(v == 0 && steps == l + 1, fixture_name(f) + " not a single cycle");
        }
        for (const AffineWeight& lambda : lambda_sweep(m.cartan(), cfg.seed + 2, cfg.samples))
            ck.expect(lambda_dominant_count(m, lambda) ==
                          static_cast<int>(omega_lambda(m, lambda).size()),
                      fixture_name(f) + " dominant count at " + wstr(lambda));
    }
    // Typed count examples.
    {
        const NatModule a2 = build_natural(make_cartan(Family::A, 2));
        ck.expect(lambda_dominant_count(a2, AffineWeight{{1, 1, 0}, 0}) == 2, "A2 count");
        const NatModule a1 = build_natural(make_cartan(Family::A, 1));
        ck.expect(lambda_dominant_count(a1, AffineWeight{{1, 0}, 0}) == 1, "A1 count");
        const NatModule b3 = build_natural(make_cartan(Family::B, 3));
        const auto omega = omega_lambda(b3, AffineWeight{{1, 0, 0, 0}, 0});
        ck.expect(omega.count(zero_finite(b3.cartan())) == 0, "B3 zero-weight exclusion");
    }
    return ck.finish("crystal-counts");
}

}  // namespace

std::vector<Item> run_items(const Config& cfg) {
    std::vector<Item> items;
    items.push_back(check_qlaurent(cfg));
    items.push_back(check_rootdata());
    items.push_back(check_relations(cfg));
    items.push_back(check_nvalues());
    items.push_back(check_k_values());
    items.push_back(check_nilpotency());
    items.push_back(check_degree_inequalities());
    items.push_back(check_decomposition(cfg));
    items.push_back(check_criteria(cfg));
    items.push_back(check_sl2());
    items.push_back(check_crystal(cfg));
    return items;
}

std::string format_report(const Config& cfg, const std::vector<Item>& items) {
    std::ostringstream out;
    out << "selftest seed=" << cfg.seed << " samples=" << cfg.samples
        << (cfg.corrupt ? " corrupt=1" : "") << "\n";
    int failed = 0;
    for (const auto& it : items) {
        out << (it.pass ? "PASS " : "FAIL ") << it.name;
        if (!it.pass) {
            out << ": " << it.detail;
            ++failed;
        }
        out << "\n";
    }
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
        << "\n";
    return out.str();
}

Result run(const Config& cfg) {
    const auto items = run_items(cfg);
    Result r;
    r.report = format_report(cfg, items);
    r.pass = std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
    return r;
}

}  // namespace afq::selftest
