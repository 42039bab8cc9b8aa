#include "afq/natmod.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "realization.hpp"

namespace afq {

namespace {

using detail::Realization;

// Basis of the natural representation as Euclidean weight vectors, in the
// order the defining raising arrows traverse it.
std::vector<std::vector<int>> basis_vectors(const Realization& r, Family f, int l) {
    std::vector<std::vector<int>> w;
    auto eps = [&](int k, int sign) {
        std::vector<int> v(r.dim, 0);
        v[k - 1] = sign;
        return v;
    };
    switch (f) {
        case Family::A:
            // w_0 = e_1, then w_j = e_{l+2-j}: a single (l+1)-cycle.
            w.push_back(eps(1, +1));
            for (int j = 1; j <= l; ++j) w.push_back(eps(l + 2 - j, +1));
            break;
        case Family::C:
            w.push_back(eps(1, +1));
            for (int j = 1; j <= l; ++j) w.push_back(eps(j, -1));
            for (int j = 1; j <= l - 1; ++j) w.push_back(eps(l + 1 - j, +1));
            break;
        case Family::B:
            w.push_back(eps(1, +1));
            for (int j = 1; j <= l - 1; ++j) w.push_back(eps(j + 1, -1));
            w.push_back(std::vector<int>(r.dim, 0));
            for (int j = 1; j <= l - 1; ++j) w.push_back(eps(l + 1 - j, +1));
            w.push_back(eps(1, -1));
            break;
        case Family::D:
            w.push_back(eps(1, +1));
            for (int j = 1; j <= l - 1; ++j) w.push_back(eps(j + 1, -1));
            w.push_back(eps(l, +1));
            for (int j = 1; j <= l - 2; ++j) w.push_back(eps(l - j, +1));
            w.push_back(eps(1, -1));
            break;
    }
    return w;
}

}  // namespace

std::vector<std::string> RelationReport::failures() const {
    std::vector<std::string> f;
    for (const auto& it : items)
        if (!it.pass) f.push_back(it.id);
    return f;
}

std::optional<std::pair<int, LaurentPoly>> NatModule::e_arrow(int i, int j) const {
    return e_.at(i).at(j);
}

std::optional<std::pair<int, LaurentPoly>> NatModule::f_arrow(int i, int j) const {
    return f_.at(i).at(j);
}

Matrix NatModule::e_matrix(int i) const {
    Matrix m = mat_zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        if (const auto& a = e_[i][j]) m[a->first][j] = a->second;
    return m;
}

Matrix NatModule::f_matrix(int i) const {
    Matrix m = mat_zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        if (const auto& a = f_[i][j]) m[a->first][j] = a->second;
    return m;
}

Matrix NatModule::k_matrix(int i) const {
    Matrix m = mat_zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        m[j][j] = LaurentPoly::q_power(cartan_.d[i] * weight_pairing(j, i));
    return m;
}

int NatModule::weight_pairing(int j, int i) const {
    const FiniteWeight& w = weight_.at(j);
    if (i > 0) return w.varpi[i - 1];
    // alpha_0^vee = c - theta^vee; finite weights have level zero.
    int s = 0;
    for (int k = 1; k <= cartan_.rank; ++k) s -= w.varpi[k - 1] * cartan_.comarks[k];
    return s;
}

void NatModule::corrupt_f(int i, int from) {
    f_.at(i).at(from).reset();
}

NatModule build_natural(const CartanData& cartan,
                        const std::set<std::pair<int, int>>& forced_zero_f) {
    const int l = cartan.rank;
    const Realization real = detail::realize(cartan.family, l);
    const auto basis = basis_vectors(real, cartan.family, l);

    NatModule m;
    m.cartan_ = cartan;
    m.dim_ = static_cast<int>(basis.size());

    for (const auto& v : basis) {
        FiniteWeight w;
        for (int i = 1; i <= l; ++i) {
            const int ip = detail::dot(real, v, real.alpha[i]);
            if (ip % cartan.d[i] != 0) throw std::logic_error("non-integral weight pairing");
            w.varpi.push_back(ip / cartan.d[i]);
        }
        m.weight_.push_back(std::move(w));
    }

    // Weight shift of each label: alpha_i for i >= 1, -theta for i = 0.
    std::vector<std::vector<int>> shift(l + 1);
    shift[0].assign(real.dim, 0);
    for (int k = 0; k < real.dim; ++k) shift[0][k] = -real.theta[k];
    for (int i = 1; i <= l; ++i) shift[i] = real.alpha[i];

    // Raising arrows: E_i moves w_j to the (unique) basis vector whose weight
    // differs by the label's shift; every such arrow carries scalar 1.
    m.e_.assign(l + 1, std::vector<std::optional<std::pair<int, LaurentPoly>>>(m.dim_));
    m.f_.assign(l + 1, std::vector<std::optional<std::pair<int, LaurentPoly>>>(m.dim_));
    for (int i = 0; i <= l; ++i) {
        for (int j = 0; j < m.dim_; ++j) {
            std::vector<int> target = basis[j];
            for (int k = 0; k < real.dim; ++k) target[k] += shift[i][k];
            for (int j2 = 0; j2 < m.dim_; ++j2) {
                if (basis[j2] != target) continue;
                if (m.e_[i][j]) throw std::logic_error("ambiguous raising arrow");
                m.e_[i][j] = {j2, LaurentPoly(1)};
            }
        }
    }

    // Lowering scalars, one i-string at a time: with unit raising scalars the
    // string u_0 -> ... -> u_n must carry K_i-eigenvalues q_i^{2k-n}, and
    // [E_i, F_i] forces F_i u_k = [k]_{q_i} [n-k+1]_{q_i} u_{k-1}.
    for (int i = 0; i <= l; ++i) {
        std::vector<bool> has_pred(m.dim_, false);
        for (int j = 0; j < m.dim_; ++j)
            if (m.e_[i][j]) has_pred[m.e_[i][j]->first] = true;
        for (int j = 0; j < m.dim_; ++j) {
            if (has_pred[j]) continue;
            std::vector<int> string_idx{j};
            while (const auto& a = m.e_[i][string_idx.back()])
                string_idx.push_back(a->first);
            const int n = static_cast<int>(string_idx.size()) - 1;
            for (int k = 0; k <= n; ++k)
                if (m.weight_pairing(string_idx[k], i) != 2 * k - n)
                    throw std::domain_error("inconsistent table");
            for (int k = 1; k <= n; ++k) {
                const LaurentPoly c = qint(k, cartan.d[i]) * qint(n - k + 1, cartan.d[i]);
                if (forced_zero_f.count({i, string_idx[k]}))
                    throw std::domain_error("inconsistent table");
                m.f_[i][string_idx[k]] = {string_idx[k - 1], c};
            }
        }
    }

    // n_of: 0/1-BFS over raising arrows, edge weight 1 on label 0.
    m.nval_.assign(m.dim_, -1);
    m.nval_[0] = 0;
    std::deque<int> dq{0};
    while (!dq.empty()) {
        const int j = dq.front();
        dq.pop_front();
        for (int i = 0; i <= l; ++i) {
            const auto& a = m.e_[i][j];
            if (!a) continue;
            const int cost = m.nval_[j] + (i == 0 ? 1 : 0);
            if (m.nval_[a->first] == -1 || cost < m.nval_[a->first]) {
                m.nval_[a->first] = cost;
                if (i == 0)
                    dq.push_back(a->first);
                else
                    dq.push_front(a->first);
            }
        }
    }
    for (int j = 0; j < m.dim_; ++j)
        if (m.nval_[j] < 0) throw std::logic_error("basis vector unreachable from w_0");
    return m;
}

LoopVector act(const NatModule& m, Gen g, const LoopVector& v) {
    LoopVector out;
    for (const auto& [key, c] : v.terms) {
        const auto [j, t] = key;
        switch (g.kind) {
            case Gen::E: {
                if (const auto& a = m.e_arrow(g.index, j))
                    out.add(a->first, t + (g.index == 0 ? 1 : 0), c * a->second);
                break;
            }
            case Gen::F: {
                if (const auto& a = m.f_arrow(g.index, j))
                    out.add(a->first, t - (g.index == 0 ? 1 : 0), c * a->second);
                break;
            }
            case Gen::K:
                out.add(j, t, c * LaurentPoly::q_power(m.cartan().d[g.index] *
                                                       m.weight_pairing(j, g.index)));
                break;
            case Gen::Kinv:
                out.add(j, t, c * LaurentPoly::q_power(-m.cartan().d[g.index] *
                                                       m.weight_pairing(j, g.index)));
                break;
            case Gen::D:
                out.add(j, t, c * LaurentPoly::q_power(static_cast<int>(t)));
                break;
            case Gen::Dinv:
                out.add(j, t, c * LaurentPoly::q_power(-static_cast<int>(t)));
                break;
        }
    }
    return out;
}

namespace {

using Word = std::vector<Gen>;

LoopVector apply_word(const NatModule& m, const Word& w, LoopVector v) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = act(m, *it, v);
    return v;
}

}  // namespace

RelationReport verify_relations(const NatModule& m, long window_lo, long window_hi) {
    RelationReport rep;
    const CartanData& c = m.cartan();
    const int l = c.rank;

    auto for_all_basis = [&](auto&& check) {
        for (int j = 0; j < m.dim(); ++j)
            for (long t = window_lo; t <= window_hi; ++t)
                if (!check(LoopVector::basis(j, t))) return false;
        return true;
    };
    auto add_item = [&](std::string id, bool pass) {
        rep.items.push_back({std::move(id), pass});
        if (!pass) rep.all_pass = false;
    };

    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j) {
            const Gen Ki{Gen::K, i}, Kii{Gen::Kinv, i}, Ej{Gen::E, j}, Fj{Gen::F, j};
            const LaurentPoly qa = LaurentPoly::q_power(c.d[i] * c.a[i][j]);
            const LaurentPoly qai = LaurentPoly::q_power(-c.d[i] * c.a[i][j]);

            add_item("KEK i=" + std::to_string(i) + " j=" + std::to_string(j),
                     for_all_basis([&](const LoopVector& v) {
                         LoopVector lhs = apply_word(m, {Ki, Ej, Kii}, v);
                         LoopVector rhs = act(m, Ej, v);
                         for (auto& [k, co] : rhs.terms) co *= qa;
                         return lhs == rhs;
                     }));
            add_item("KFK i=" + std::to_string(i) + " j=" + std::to_string(j),
                     for_all_basis([&](const LoopVector& v) {
                         LoopVector lhs = apply_word(m, {Ki, Fj, Kii}, v);
                         LoopVector rhs = act(m, Fj, v);
                         for (auto& [k, co] : rhs.terms) co *= qai;
                         return lhs == rhs;
                     }));

            // [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1), cleared of
            // the denominator.
            const LaurentPoly denom =
                LaurentPoly::q_power(c.d[i]) - LaurentPoly::q_power(-c.d[i]);
            add_item("EF i=" + std::to_string(i) + " j=" + std::to_string(j),
                     for_all_basis([&](const LoopVector& v) {
                         LoopVector lhs = apply_word(m, {Gen{Gen::E, i}, Fj}, v);
                         LoopVector sub = apply_word(m, {Fj, Gen{Gen::E, i}}, v);
                         for (const auto& [k, co] : sub.terms) lhs.add(k.first, k.second, -co);
                         for (auto& [k, co] : lhs.terms) co *= denom;
                         LoopVector rhs;
                         if (i == j) {
                             rhs = act(m, Ki, v);
                             LoopVector neg = act(m, Kii, v);
                             for (const auto& [k, co] : neg.terms) rhs.add(k.first, k.second, -co);
                         }
                         return lhs == rhs;
                     }));

            if (i == j) continue;
            const int serre_m = 1 - c.a[i][j];
            auto serre = [&](Gen::Kind kind) {
                return for_all_basis([&](const LoopVector& v) {
                    LoopVector sum;
                    for (int r = 0; r <= serre_m; ++r) {
                        Word w;
                        for (int s = 0; s < r; ++s) w.push_back(Gen{kind, i});
                        w.push_back(Gen{kind, j});
                        for (int s = 0; s < serre_m - r; ++s) w.push_back(Gen{kind, i});
                        LoopVector term = apply_word(m, w, v);
                        const LaurentPoly coef =
                            (r % 2 ? LaurentPoly(-1) : LaurentPoly(1)) * qbinom(serre_m, r, c.d[i]);
                        for (const auto& [k, co] : term.terms) sum.add(k.first, k.second, -(coef * co));
                    }
                    return sum.is_zero();
                });
            };
            add_item("SerreE i=" + std::to_string(i) + " j=" + std::to_string(j),
                     serre(Gen::E));
            add_item("SerreF i=" + std::to_string(i) + " j=" + std::to_string(j),
                     serre(Gen::F));
        }

    for (int j = 0; j <= l; ++j) {
        const LaurentPoly qj = LaurentPoly::q_power(j == 0 ? 1 : 0);
        const LaurentPoly qji = LaurentPoly::q_power(j == 0 ? -1 : 0);
        add_item("DED j=" + std::to_string(j), for_all_basis([&](const LoopVector& v) {
                     LoopVector lhs = apply_word(m, {Gen{Gen::D, 0}, Gen{Gen::E, j}, Gen{Gen::Dinv, 0}}, v);
                     LoopVector rhs = act(m, Gen{Gen::E, j}, v);
                     for (auto& [k, co] : rhs.terms) co *= qj;
                     return lhs == rhs;
                 }));
        add_item("DFD j=" + std::to_string(j), for_all_basis([&](const LoopVector& v) {
                     LoopVector lhs = apply_word(m, {Gen{Gen::D, 0}, Gen{Gen::F, j}, Gen{Gen::Dinv, 0}}, v);
                     LoopVector rhs = act(m, Gen{Gen::F, j}, v);
                     for (auto& [k, co] : rhs.terms) co *= qji;
                     return lhs == rhs;
                 }));
    }

    // Level zero: C = K_0 prod K_i^{a_i} acts as the identity.
    add_item("level-zero C=1", for_all_basis([&](const LoopVector& v) {
                 Word w{Gen{Gen::K, 0}};
                 for (int i = 1; i <= l; ++i)
                     for (int r = 0; r < c.marks[i]; ++r) w.push_back(Gen{Gen::K, i});
                 return apply_word(m, w, v) == v;
             }));

    std::sort(rep.items.begin(), rep.items.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return rep;
}

int weight_multiplicity(const NatModule& m, const FiniteWeight& mu) {
    int n = 0;
    for (int j = 0; j < m.dim(); ++j)
        if (m.weight_of(j) == mu) ++n;
    return n;
}

int k_of_natural(const NatModule& m) {
    const CartanData& c = m.cartan();
    const FiniteWeight top = m.weight_of(0);
    int best = -1;
    for (int i = 1; i <= c.rank; ++i) {
        FiniteWeight mu = top;
        for (int j = 1; j <= c.rank; ++j) mu.varpi[j - 1] -= c.a[j][i];
        const int d = weight_multiplicity(m, mu);
        if (d > 0 && (best < 0 || d < best)) best = d;
    }
    if (best < 0) throw std::logic_error("no simple root drops the highest weight");
    return best;
}

PiData natural_pi_data(const NatModule& m) {
    PiData p;
    p.lambda_pi = m.weight_of(0);
    p.k = k_of_natural(m);
    p.m = 1;
    p.n_pi = 0;
    for (int j = 0; j < m.dim(); ++j) p.n_pi = std::max(p.n_pi, m.n_of(j));
    p.theta_pairing = pair_finite_theta_coroot(m.cartan(), p.lambda_pi);
    return p;
}

std::string action_table_json(const NatModule& m) {
    nlohmann::json j;
    j["family"] = family_to_string(m.cartan().family);
    j["rank"] = m.cartan().rank;
    j["E"] = nlohmann::json::array();
    j["F"] = nlohmann::json::array();
    for (int i = 0; i <= m.cartan().rank; ++i)
        for (int from = 0; from < m.dim(); ++from) {
            if (const auto& a = m.e_arrow(i, from))
                j["E"].push_back({{"i", i}, {"from", from}, {"to", a->first},
                                  {"scalar", a->second.str()}});
            if (const auto& a = m.f_arrow(i, from))
                j["F"].push_back({{"i", i}, {"from", from}, {"to", a->first},
                                  {"scalar", a->second.str()}});
        }
    return j.dump(2);
}

}  // namespace afq
