#include "afq/rootdata.hpp"

#include <algorithm>
#include <deque>

#include <boost/multiprecision/cpp_int.hpp>

#include "realization.hpp"

namespace afq {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using detail::Realization;
using detail::dot;
using detail::realize;

// Solves theta = sum_{i=1..l} a_i alpha_i by exact elimination.
std::vector<int> solve_marks(const Realization& r, int l) {
    const int rows = r.dim;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(l + 1));
    for (int k = 0; k < rows; ++k) {
        for (int i = 1; i <= l; ++i) m[k][i - 1] = r.alpha[i][k];
        m[k][l] = r.theta[k];
    }
    int row = 0;
    std::vector<int> pivot_of_col(l, -1);
    for (int col = 0; col < l && row < rows; ++col) {
        int p = -1;
        for (int k = row; k < rows; ++k)
            if (m[k][col] != 0) { p = k; break; }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        for (int k = 0; k < rows; ++k) {
            if (k == row || m[k][col] == 0) continue;
            Rat fac = m[k][col] / m[row][col];
            for (int j = col; j <= l; ++j) m[k][j] -= fac * m[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<int> marks(l + 1, 0);
    marks[0] = 1;
    for (int col = 0; col < l; ++col) {
        const int p = pivot_of_col[col];
        if (p < 0) throw std::logic_error("singular mark system");
        Rat v = m[p][l] / m[p][col];
        if (denominator(v) != 1) throw std::logic_error("non-integral mark");
        marks[col + 1] = static_cast<int>(numerator(v));
    }
    return marks;
}

}  // namespace

Family family_from_string(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    throw std::invalid_argument("unknown family: " + s);
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
    }
    throw std::logic_error("unreachable");
}

CartanData make_cartan(Family family, int rank) {
    const int min_rank = family == Family::A   ? 1
                         : family == Family::B ? 3
                         : family == Family::C ? 2
                                               : 4;
    if (rank < min_rank)
        throw std::domain_error("rank " + std::to_string(rank) + " out of range for type " +
                                family_to_string(family));

    const Realization r = realize(family, rank);
    CartanData c;
    c.family = family;
    c.rank = rank;

    // alpha_0 enters the form only through -theta, since (delta|.) vanishes.
    std::vector<std::vector<int>> root(rank + 1);
    root[0].assign(r.dim, 0);
    for (int k = 0; k < r.dim; ++k) root[0][k] = -r.theta[k];
    for (int i = 1; i <= rank; ++i) root[i] = r.alpha[i];

    c.d.assign(rank + 1, 0);
    for (int i = 0; i <= rank; ++i) {
        const int norm = dot(r, root[i], root[i]);
        if (norm % 2 != 0) throw std::logic_error("odd root norm");
        c.d[i] = norm / 2;
    }

    c.a.assign(rank + 1, std::vector<int>(rank + 1, 0));
    for (int i = 0; i <= rank; ++i)
        for (int j = 0; j <= rank; ++j) {
            const int ip = dot(r, root[i], root[j]);
            if (ip % c.d[i] != 0) throw std::logic_error("non-integral Cartan entry");
            c.a[i][j] = ip / c.d[i];
        }

    c.marks = solve_marks(r, rank);
    c.comarks.assign(rank + 1, 0);
    for (int i = 0; i <= rank; ++i) {
        const int num = c.marks[i] * c.d[i];
        if (num % c.d[0] != 0) throw std::logic_error("non-integral comark");
        c.comarks[i] = num / c.d[0];
    }
    return c;
}

int pair_with_coroot(const AffineWeight& w, int i) {
    return w.omega.at(static_cast<std::size_t>(i));
}

long pair_with_delta(const CartanData& c, const AffineWeight& w) {
    long s = 0;
    for (int i = 0; i <= c.rank; ++i)
        s += static_cast<long>(w.omega.at(i)) * c.marks[i] * c.d[i];
    return s;
}

long pair_with_root(const CartanData& c, const AffineWeight& w, int i) {
    return static_cast<long>(c.d.at(i)) * pair_with_coroot(w, i);
}

bool is_dominant(const AffineWeight& w) {
    return std::all_of(w.omega.begin(), w.omega.end(), [](int n) { return n >= 0; });
}

AffineWeight embed(const CartanData& c, const FiniteWeight& m) {
    AffineWeight w;
    w.omega.assign(c.rank + 1, 0);
    int n0 = 0;
    for (int i = 1; i <= c.rank; ++i) {
        w.omega[i] = m.varpi.at(i - 1);
        n0 -= m.varpi.at(i - 1) * c.comarks[i];
    }
    w.omega[0] = n0;
    w.delta_coeff = 0;
    return w;
}

AffineWeight add(const AffineWeight& a, const AffineWeight& b) {
    if (a.omega.size() != b.omega.size()) throw std::invalid_argument("rank mismatch");
    AffineWeight r = a;
    for (std::size_t i = 0; i < r.omega.size(); ++i) r.omega[i] += b.omega[i];
    r.delta_coeff += b.delta_coeff;
    return r;
}

AffineWeight add_delta(AffineWeight w, long k) {
    w.delta_coeff += k;
    return w;
}

FiniteWeight zero_finite(const CartanData& c) {
    return FiniteWeight{std::vector<int>(static_cast<std::size_t>(c.rank), 0)};
}

FiniteWeight add(const FiniteWeight& a, const FiniteWeight& b) {
    if (a.varpi.size() != b.varpi.size()) throw std::invalid_argument("rank mismatch");
    FiniteWeight r = a;
    for (std::size_t i = 0; i < r.varpi.size(); ++i) r.varpi[i] += b.varpi[i];
    return r;
}

int pair_finite_coroot(const FiniteWeight& m, int i) {
    return m.varpi.at(static_cast<std::size_t>(i - 1));
}

long pair_finite_theta_coroot(const CartanData& c, const FiniteWeight& m) {
    long s = 0;
    for (int i = 1; i <= c.rank; ++i) s += static_cast<long>(m.varpi[i - 1]) * c.comarks[i];
    return s;
}

namespace {

// s_i(mu) in pairing coordinates: subtracts mu(alpha_i^vee) times the i-th
// column of the finite Cartan matrix.
FiniteWeight reflect(const CartanData& c, const FiniteWeight& m, int i) {
    FiniteWeight r = m;
    const int mi = m.varpi[i - 1];
    if (mi == 0) return r;
    for (int j = 1; j <= c.rank; ++j) r.varpi[j - 1] -= mi * c.a[j][i];
    return r;
}

}  // namespace

std::set<FiniteWeight> weyl_orbit(const CartanData& c, const FiniteWeight& mu) {
    std::set<FiniteWeight> seen{mu};
    std::deque<FiniteWeight> todo{mu};
    while (!todo.empty()) {
        FiniteWeight cur = todo.front();
        todo.pop_front();
        for (int i = 1; i <= c.rank; ++i) {
            FiniteWeight nxt = reflect(c, cur, i);
            if (seen.insert(nxt).second) todo.push_back(nxt);
        }
    }
    return seen;
}

FiniteWeight lowest_weight_in_orbit(const CartanData& c, const FiniteWeight& mu) {
    const auto orbit = weyl_orbit(c, mu);
    const FiniteWeight* found = nullptr;
    for (const auto& w : orbit) {
        if (std::all_of(w.varpi.begin(), w.varpi.end(), [](int n) { return n <= 0; })) {
            if (found) throw std::logic_error("orbit has two antidominant elements");
            found = &w;
        }
    }
    if (!found) throw std::logic_error("orbit has no antidominant element");
    return *found;
}

}  // namespace afq
