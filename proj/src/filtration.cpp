#include "afq/filtration.hpp"

#include <algorithm>

namespace afq {

namespace {

void check_scope(const NatModule& m, const AffineWeight& lambda) {
    if (static_cast<int>(lambda.omega.size()) != m.cartan().rank + 1)
        throw std::invalid_argument("weight rank mismatch");
    if (!is_dominant(lambda)) throw std::domain_error("Lambda is not dominant");
    if (std::all_of(lambda.omega.begin(), lambda.omega.end(), [](int n) { return n == 0; }))
        throw std::domain_error("not covered by the decomposition: Lambda is a multiple of delta");
}

DecompositionSummand make_summand(const NatModule& m, const AffineWeight& lambda, long n,
                                  int basis_index) {
    DecompositionSummand s;
    s.mu = m.weight_of(basis_index);
    s.n_mu = m.n_of(basis_index);
    s.highest_weight = add_delta(add(lambda, embed(m.cartan(), s.mu)), n + s.n_mu);
    s.multiplicity = 1;
    return s;
}

}  // namespace

std::set<FiniteWeight> omega_lambda(const NatModule& m, const AffineWeight& lambda) {
    check_scope(m, lambda);
    const CartanData& c = m.cartan();
    std::set<FiniteWeight> out;
    for (int j = 0; j < m.dim(); ++j) {
        const FiniteWeight& mu = m.weight_of(j);
        if (!is_dominant(add(lambda, embed(c, mu)))) continue;
        if (c.family == Family::B && mu == zero_finite(c) && lambda.omega[c.rank] == 0)
            continue;
        out.insert(mu);
    }
    return out;
}

std::vector<DecompositionSummand> decompose_quotient(const NatModule& m,
                                                     const AffineWeight& lambda, long n) {
    std::vector<DecompositionSummand> out;
    for (const FiniteWeight& mu : omega_lambda(m, lambda)) {
        int idx = -1;
        for (int j = 0; j < m.dim(); ++j)
            if (m.weight_of(j) == mu) { idx = j; break; }
        out.push_back(make_summand(m, lambda, n, idx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ChainStep> chain(const NatModule& m, const AffineWeight& lambda, long n) {
    check_scope(m, lambda);
    const int l = m.cartan().rank;

    // Transcribed per-type step tables: generator index and collapse predicate
    // (Lambda coordinate, threshold) for each displayed inclusion.
    std::vector<ChainStep> steps;
    auto push = [&](int gen, std::vector<std::pair<int, int>> collapse) {
        ChainStep s;
        s.j = static_cast<int>(steps.size());
        s.basis_index = gen;
        s.t_exp = n + m.n_of(gen);
        s.collapse = std::move(collapse);
        s.is_strict = true;
        for (const auto& [idx, thr] : s.collapse)
            if (lambda.omega.at(idx) < thr) s.is_strict = false;
        steps.push_back(std::move(s));
    };

    switch (m.cartan().family) {
        case Family::A:
            // Collapse at step j iff Lambda_{l-j+1} = 0, indices mod l+1.
            push(0, {{0, 1}});
            for (int j = 1; j <= l; ++j) push(j, {{l - j + 1, 1}});
            break;
        case Family::C:
            // Steps 0..l: Lambda_j; steps l+j (1 <= j <= l-1): Lambda_{l-j}.
            for (int j = 0; j <= l; ++j) push(j, {{j, 1}});
            for (int j = 1; j <= l - 1; ++j) push(l + j, {{l - j, 1}});
            break;
        case Family::B:
            push(0, {{0, 1}});
            for (int j = 2; j <= l - 1; ++j) push(j - 1, {{j, 1}});
            // Bottom of the 3-dimensional l-string: needs Lambda_l >= 2.
            push(l - 1, {{l, 2}});
            for (int j = 0; j <= l - 2; ++j) push(l + j, {{l - j, 1}});
            push(2 * l - 1, {{0, 1}, {1, 1}});
            push(2 * l, {{1, 1}});
            break;
        case Family::D:
            push(0, {{0, 1}});
            for (int j = 1; j <= l - 3; ++j) push(j, {{j + 1, 1}});
            push(l - 2, {{l - 1, 1}, {l, 1}});
            // Parallel branch quotients sharing the successor Cx_{l+1}.
            push(l - 1, {{l, 1}});
            push(l, {{l - 1, 1}});
            for (int j = 2; j <= l - 2; ++j) push(l + j - 1, {{l - j, 1}});
            push(2 * l - 2, {{0, 1}, {1, 1}});
            push(2 * l - 1, {{1, 1}});
            break;
    }
    return steps;
}

std::vector<DecompositionSummand> chain_summands(const NatModule& m,
                                                 const AffineWeight& lambda, long n,
                                                 const std::vector<ChainStep>& steps) {
    std::vector<DecompositionSummand> out;
    for (const ChainStep& s : steps)
        if (s.is_strict) out.push_back(make_summand(m, lambda, n, s.basis_index));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace afq
