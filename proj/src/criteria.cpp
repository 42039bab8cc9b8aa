#include "afq/criteria.hpp"

namespace afq {

bool thmB_trivial(const CartanData& c, const AffineWeight& lambda, const PiData& pi,
                  const std::map<int, int>& dims, const std::map<int, int>& dims_star) {
    if (!is_dominant(lambda)) throw std::domain_error("Lambda is not dominant");
    const long ld = pair_with_delta(c, lambda);

    const AffineWeight top = add(lambda, embed(c, pi.lambda_pi));
    for (const auto& [i, d] : dims) {
        if (d != pi.k) continue;
        if ((pi.k + pi.m) * ld < pair_with_root(c, top, i)) return true;
    }

    const FiniteWeight low = lowest_weight_in_orbit(c, pi.lambda_pi);
    const AffineWeight bot = add(lambda, embed(c, low));
    for (const auto& [i, d] : dims_star) {
        if (d != pi.k) continue;
        if (pi.k * ld < -pair_with_root(c, bot, i)) return true;
    }
    return false;
}

bool thmC_reducible(const AffineWeight& lambda, const PiData& pi) {
    if (!is_dominant(lambda)) throw std::domain_error("Lambda is not dominant");
    return pair_with_coroot(lambda, 0) >= pi.theta_pairing + pi.m;
}

NaturalDims natural_dims(const NatModule& m) {
    const CartanData& c = m.cartan();
    NaturalDims nd;
    const FiniteWeight top = m.weight_of(0);
    const FiniteWeight low = lowest_weight_in_orbit(c, top);
    for (int i = 1; i <= c.rank; ++i) {
        FiniteWeight down = top, up = low;
        for (int j = 1; j <= c.rank; ++j) {
            down.varpi[j - 1] -= c.a[j][i];
            up.varpi[j - 1] += c.a[j][i];
        }
        nd.dims[i] = weight_multiplicity(m, down);
        nd.dims_star[i] = weight_multiplicity(m, up);
    }
    return nd;
}

std::string verdict(bool trivial, bool reducible) {
    if (trivial) return "irreducible (Thm B)";
    if (reducible) return "reducible (Thm C)";
    return "undetermined";
}

}  // namespace afq
