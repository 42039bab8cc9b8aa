// Internal: Euclidean realization of the classical root systems with an
// integer-valued inner product, shared by the Cartan-data builder and the
// natural-module table generator.
#ifndef AFQ_SRC_REALIZATION_HPP
#define AFQ_SRC_REALIZATION_HPP

#include <vector>

#include "afq/rootdata.hpp"

namespace afq::detail {

struct Realization {
    int dim;
    int gram;                             // (e_i|e_j) = gram * delta_ij
    std::vector<std::vector<int>> alpha;  // alpha[1..l]
    std::vector<int> theta;
};

inline Realization realize(Family f, int l) {
    Realization r;
    r.dim = (f == Family::A) ? l + 1 : l;
    r.gram = (f == Family::B) ? 2 : 1;
    r.alpha.assign(l + 1, std::vector<int>(r.dim, 0));
    r.theta.assign(r.dim, 0);
    for (int i = 1; i < l; ++i) {
        r.alpha[i][i - 1] = 1;
        r.alpha[i][i] = -1;
    }
    switch (f) {
        case Family::A:
            r.alpha[l][l - 1] = 1;
            r.alpha[l][l] = -1;
            r.theta[0] = 1;
            r.theta[l] = -1;
            break;
        case Family::B:
            r.alpha[l][l - 1] = 1;
            r.theta[0] = 1;
            r.theta[1] = 1;
            break;
        case Family::C:
            r.alpha[l][l - 1] = 2;
            r.theta[0] = 2;
            break;
        case Family::D:
            r.alpha[l][l - 2] = 1;
            r.alpha[l][l - 1] = 1;
            r.theta[0] = 1;
            r.theta[1] = 1;
            break;
    }
    return r;
}

inline int dot(const Realization& r, const std::vector<int>& x, const std::vector<int>& y) {
    int s = 0;
    for (int k = 0; k < r.dim; ++k) s += x[k] * y[k];
    return s * r.gram;
}

}  // namespace afq::detail

#endif
