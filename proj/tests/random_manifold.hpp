#pragma once

// Randomized valid ManifoldData for property tests: |torsion(h1)| <= 64,
// b1 <= 3, b2 <= 4, with odd / spin / twisted cases all reachable.

#include "cohomotopy/classify.hpp"

#include <random>

namespace cohomotopy::testing {

inline const std::vector<std::vector<Int>>& small_torsion_chains() {
    static const std::vector<std::vector<Int>> chains = {
        {},     {2},    {3},    {4},     {2, 2}, {6},    {8},     {2, 4}, {2, 2, 2},
        {12},   {2, 6}, {16},   {4, 4},  {2, 8}, {3, 3}, {2, 12}, {24},  {2, 4, 4},
        {2, 2, 4}, {32}, {4, 8}, {2, 16}, {5},   {2, 10}, {48},   {2, 24}, {64}};
    return chains;
}

inline IntMat random_unimodular_symmetric(std::mt19937& rng, std::size_t n, bool force_even) {
    // Seed blocks: hyperbolic pairs when even, +-1 entries otherwise.
    IntMat q(n, n);
    std::uniform_int_distribution<int> sign(0, 1);
    std::size_t i = 0;
    while (i < n) {
        if (force_even || (n - i >= 2 && sign(rng))) {
            if (n - i >= 2) {
                q(i, i + 1) = 1;
                q(i + 1, i) = 1;
                i += 2;
                continue;
            }
            // odd leftover slot in an even form cannot happen: pad with
            // a hyperbolic-like diagonal 0 is not unimodular, so fall through
        }
        q(i, i) = sign(rng) ? 1 : -1;
        i += 1;
    }
    // Conjugate by random shears: P^T q P stays symmetric unimodular and
    // keeps the parity class.
    std::uniform_int_distribution<int> small(-2, 2);
    for (int step = 0; step < 8 && n > 1; ++step) {
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) continue;
        Int c = small(rng);
        IntMat p = IntMat::identity(n);
        p(a, b) = c;
        q = p.transposed() * q * p;
    }
    return q;
}

inline GroupElement random_element_of_order_dividing(std::mt19937& rng, const FinAbGroup& g,
                                                     const Int& d) {
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<Int> c(g.num_generators());
    for (std::size_t i = 0; i < g.torsion_rank(); ++i) {
        // multiples of d_i / gcd(d_i, d)
        Int di = g.torsion()[i];
        Int step = di / gcd(di, d);
        std::uniform_int_distribution<long long> mult(0, 7);
        c[i] = step * Int(mult(rng)) % di;
    }
    // free coordinates must vanish unless d = 0 (infinite order allowed)
    if (d == 0)
        for (std::size_t i = g.torsion_rank(); i < c.size(); ++i) c[i] = coin(rng) - 1;
    return GroupElement(g, std::move(c));
}

inline ManifoldData random_manifold(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> chain(0, small_torsion_chains().size() - 1);
    std::uniform_int_distribution<std::size_t> b1d(0, 3), b2d(0, 4);
    std::uniform_int_distribution<int> coin(0, 2), bit(0, 1);

    ManifoldData x;
    x.name = "random";
    std::vector<Int> torsion = small_torsion_chains()[chain(rng)];
    std::size_t b1 = b1d(rng), b2 = b2d(rng);
    x.h1 = FinAbGroup(torsion, b1);
    x.h2 = FinAbGroup(torsion, b2);
    x.h3_rank = b1;
    int style = coin(rng);  // 0 odd-ish, 1 even, 2 spin
    x.q = b2 ? random_unimodular_symmetric(rng, b2, style != 0) : IntMat(0, 0);

    x.mu.assign(x.h2.num_generators(),
                std::vector<GroupElement>(x.h3_rank, GroupElement::zero(x.h1)));
    for (std::size_t g = 0; g < x.h2.num_generators(); ++g) {
        Int order = g < x.h2.torsion_rank() ? x.h2.torsion()[g] : Int(0);
        for (std::size_t j = 0; j < x.h3_rank; ++j)
            x.mu[g][j] = random_element_of_order_dividing(rng, x.h1, order);
    }

    x.w = Z2Functional::zero(x.h1);
    if (style == 1)
        for (auto& b : x.w.bits) b = bit(rng);
    return x;
}

}  // namespace cohomotopy::testing
