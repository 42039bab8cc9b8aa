/**
 * @file natmod.hpp
 * @brief The natural-representation loop module of a classical quantum affine
 *        algebra: explicit weight basis, generator action tables, and machine
 *        verification of the defining relations.
 *
 * Conventions: basis w_0..w_N with N = l (A), 2l (B), 2l-1 (C, D); every
 * weight space is 1-dimensional. The raising arrows E_i w_j = w_{j'} (scalar 1)
 * exist exactly where the weight shifts by the corresponding simple root
 * (alpha_0 acting as -theta on finite weights); the lowering scalars are
 * solved string-by-string from the [E_i, F_i] commutation relation. The loop
 * action puts everything on V (x) C(q)[t, t^-1]: E_0 shifts t by +1, F_0 by
 * -1, D reads off the t-exponent.
 */
#ifndef AFQ_NATMOD_HPP
#define AFQ_NATMOD_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "afq/laurent.hpp"
#include "afq/rootdata.hpp"
#include "afq/sl2check.hpp"  // Matrix

namespace afq {

struct Gen {
    enum Kind { E, F, K, Kinv, D, Dinv };
    Kind kind;
    int index = 0;  // label i in {0..l} for E/F/K/Kinv; unused for D/Dinv
};

/// Element of the loop module: finitely supported (basis index, t-exponent)
/// -> coefficient.
struct LoopVector {
    std::map<std::pair<int, long>, LaurentPoly> terms;

    static LoopVector basis(int j, long t) {
        LoopVector v;
        v.terms[{j, t}] = LaurentPoly(1);
        return v;
    }
    void add(int j, long t, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(std::make_pair(j, t), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const LoopVector& o) const { return terms == o.terms; }
    bool operator!=(const LoopVector& o) const { return !(*this == o); }
};

/// Invariants of the natural representation needed by the reducibility
/// criteria: highest weight varpi_1, the constants k, m, n, and
/// varpi_1(theta-coroot).
struct PiData {
    FiniteWeight lambda_pi;
    int k = 1;
    int m = 1;
    int n_pi = 1;
    long theta_pairing = 1;
};

struct RelationReport {
    struct Item {
        std::string id;
        bool pass;
    };
    std::vector<Item> items;  // sorted by id
    bool all_pass = true;
    std::vector<std::string> failures() const;
};

class NatModule {
public:
    const CartanData& cartan() const { return cartan_; }
    int dim() const { return dim_; }
    const FiniteWeight& weight_of(int j) const { return weight_.at(j); }

    /// Raising arrow from w_j for label i, if any: (target index, scalar).
    std::optional<std::pair<int, LaurentPoly>> e_arrow(int i, int j) const;
    std::optional<std::pair<int, LaurentPoly>> f_arrow(int i, int j) const;

    /// Dense matrices on V (entry [to][from]).
    Matrix e_matrix(int i) const;
    Matrix f_matrix(int i) const;
    /// K_i as a diagonal matrix; i = 0 through the level-zero identity.
    Matrix k_matrix(int i) const;

    /// Coroot pairing of a basis weight with alpha_i^vee, i in {0..l}
    /// (i = 0 via alpha_0^vee = c - theta^vee at level zero).
    int weight_pairing(int j, int i) const;

    /// Minimal number of E_0-edges on a raising walk w_0 -> w_j.
    int n_of(int j) const { return nval_.at(j); }

    /// Zeroes one lowering arrow (debug/negative-control hook).
    void corrupt_f(int i, int from);

    friend NatModule build_natural(const CartanData& cartan,
                                   const std::set<std::pair<int, int>>& forced_zero_f);

private:
    CartanData cartan_;
    int dim_ = 0;
    std::vector<FiniteWeight> weight_;
    // arrows[i][from] = (to, scalar); absent means the generator kills w_from.
    std::vector<std::vector<std::optional<std::pair<int, LaurentPoly>>>> e_, f_;
    std::vector<int> nval_;
};

/// Builds the module for the family/rank of `cartan`. Entries of
/// `forced_zero_f` are (label, from) lowering arrows constrained to zero;
/// a forced zero that the relations require to be nonzero makes the solve
/// throw std::domain_error("inconsistent table").
NatModule build_natural(const CartanData& cartan,
                        const std::set<std::pair<int, int>>& forced_zero_f = {});

/// Applies a single generator to a loop vector (graded action).
LoopVector act(const NatModule& m, Gen g, const LoopVector& v);

/// Checks every defining relation instance on {w_j t^n : n in window}.
/// All identities are t-degree homogeneous and the graded action is exact,
/// so each instance is checked in full rather than truncated.
RelationReport verify_relations(const NatModule& m, long window_lo, long window_hi);

/// min over i in I of dim V_{varpi_1 - alpha_i} over the nonzero spaces.
int k_of_natural(const NatModule& m);

PiData natural_pi_data(const NatModule& m);

/// dim V_mu as a function of a finite weight (0 or 1 here).
int weight_multiplicity(const NatModule& m, const FiniteWeight& mu);

/// Action tables as JSON text (schema: family, rank, E/F arrow lists).
std::string action_table_json(const NatModule& m);

}  // namespace afq

#endif
