/**
 * @file rootdata.hpp
 * @brief Finite and affine root/weight lattice data for the classical
 *        families A, B, C, D (untwisted affine diagrams, Kac numbering).
 *
 * Affine weights are stored as coroot-pairing vectors (n_0..n_l) together
 * with a delta coefficient r, i.e. the weight sum n_i omega_i + r delta.
 * The bilinear form is exposed only against delta and the simple roots,
 * which is all the criteria need.
 */
#ifndef AFQ_ROOTDATA_HPP
#define AFQ_ROOTDATA_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace afq {

enum class Family { A, B, C, D };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

struct CartanData {
    Family family;
    int rank = 0;                        // l
    std::vector<std::vector<int>> a;     // extended Cartan matrix, (l+1)x(l+1)
    std::vector<int> d;                  // symmetrizers d_0..d_l
    std::vector<int> marks;              // a_i with theta = sum_{i>=1} a_i alpha_i, a_0 = 1
    std::vector<int> comarks;            // a_i^vee, a_0^vee = 1

    int n_nodes() const { return rank + 1; }
};

/// Builds the extended symmetrized Cartan data; throws std::domain_error on
/// out-of-range rank (A: l>=1, B: l>=3, C: l>=2, D: l>=4).
CartanData make_cartan(Family family, int rank);

struct AffineWeight {
    std::vector<int> omega;  // n_0..n_l
    long delta_coeff = 0;

    bool operator==(const AffineWeight& o) const {
        return omega == o.omega && delta_coeff == o.delta_coeff;
    }
    bool operator<(const AffineWeight& o) const {
        if (omega != o.omega) return omega < o.omega;
        return delta_coeff < o.delta_coeff;
    }
};

struct FiniteWeight {
    std::vector<int> varpi;  // m_1..m_l

    bool operator==(const FiniteWeight& o) const { return varpi == o.varpi; }
    bool operator<(const FiniteWeight& o) const { return varpi < o.varpi; }
};

/// lambda(alpha_i^vee) = n_i.
int pair_with_coroot(const AffineWeight& w, int i);

/// (lambda|delta) = sum_i n_i a_i d_i.
long pair_with_delta(const CartanData& c, const AffineWeight& w);

/// (lambda|alpha_i) = d_i * n_i.
long pair_with_root(const CartanData& c, const AffineWeight& w, int i);

/// n_i >= 0 for all i in {0..l}; the delta coefficient is unconstrained.
bool is_dominant(const AffineWeight& w);

/// Embedding varpi_i = omega_i - a_i^vee omega_0: n_0 = -sum m_i a_i^vee, r = 0.
AffineWeight embed(const CartanData& c, const FiniteWeight& m);

AffineWeight add(const AffineWeight& a, const AffineWeight& b);
AffineWeight add_delta(AffineWeight w, long k);

FiniteWeight zero_finite(const CartanData& c);
FiniteWeight add(const FiniteWeight& a, const FiniteWeight& b);

/// mu(alpha_i^vee) for i in I = {1..l}.
int pair_finite_coroot(const FiniteWeight& m, int i);

/// mu(theta^vee) = sum_i m_i a_i^vee.
long pair_finite_theta_coroot(const CartanData& c, const FiniteWeight& m);

/// Closure of {mu} under the simple reflections of the finite Weyl group.
std::set<FiniteWeight> weyl_orbit(const CartanData& c, const FiniteWeight& mu);

/// The unique antidominant element of the orbit (w_circ mu for dominant mu).
FiniteWeight lowest_weight_in_orbit(const CartanData& c, const FiniteWeight& mu);

}  // namespace afq

#endif
