/**
 * @file criteria.hpp
 * @brief Sufficient criteria for triviality (hence irreducibility) and for
 *        reducibility of the filtration on X(Lambda) (x) L(V).
 *
 * Triviality: (k+m)(Lambda,delta) < (Lambda+lambda_pi, alpha_i) for some i
 * with dim V_{lambda_pi - alpha_i} = k, or
 * k(Lambda,delta) < -(Lambda + w_circ lambda_pi, alpha_i) for some i with
 * dim V_{w_circ lambda_pi + alpha_i} = k.
 * Reducibility: Lambda(alpha_0-coroot) >= lambda_pi(theta-coroot) + m.
 */
#ifndef AFQ_CRITERIA_HPP
#define AFQ_CRITERIA_HPP

#include <map>
#include <string>

#include "afq/natmod.hpp"
#include "afq/rootdata.hpp"

namespace afq {

/// dims / dims_star map finite labels i to dim V_{lambda_pi - alpha_i} and
/// dim V_{w_circ lambda_pi + alpha_i}; callers with a general module supply
/// their own, the natural-representation versions come from natural_dims.
bool thmB_trivial(const CartanData& c, const AffineWeight& lambda, const PiData& pi,
                  const std::map<int, int>& dims, const std::map<int, int>& dims_star);

bool thmC_reducible(const AffineWeight& lambda, const PiData& pi);

struct NaturalDims {
    std::map<int, int> dims;
    std::map<int, int> dims_star;
};
NaturalDims natural_dims(const NatModule& m);

/// "irreducible (Thm B)", "reducible (Thm C)", or "undetermined".
std::string verdict(bool trivial, bool reducible);

}  // namespace afq

#endif
