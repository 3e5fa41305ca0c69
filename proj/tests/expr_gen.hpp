#pragma once

// Random bundle-expression generator shared by the Chern-calculus and the
// parser round-trip suites.  Expressions are built through the public
// factories, so every generated tree satisfies the constructor invariants
// (flattened sums, validated kernel/pullback/curve payloads).

#include <vector>

#include "segre/bundles.hpp"
#include "support.hpp"

namespace segre::testing {

// Curve payloads with admissible ranks, used for HS leaves.
struct HsSeed {
    CurveData curve;
    Divisor3 c1;
    Int rank_lo, rank_hi;
};

inline const std::vector<HsSeed>& hs_seeds() {
    static const std::vector<HsSeed> seeds = {
        {CurveData{{{{0, 1, 1}, 0}, {{0, 1, 1}, 0}}}, {2, 1, 1}, 2, 3},
        {CurveData{{{{2, 2, 2}, 1}}}, {1, 1, 1}, 3, 7},
        {CurveData{{{{2, 3, 3}, 2}}}, {2, 1, 1}, 3, 8},
        {CurveData{{{{1, 2, 2}, 0}}}, {2, 1, 1}, 3, 4},
        {CurveData{{{{0, 1, 1}, 0}}}, {1, 1, 1}, 2, 2},
    };
    return seeds;
}

inline ExprPtr random_leaf(Rng& rng) {
    switch (rand_int(rng, 0, 9)) {
        case 0: case 1: case 2: case 3:
            return line(random_divisor(rng, -2, 2));
        case 4: case 5: {
            Divisor3 d = random_divisor(rng, 0, 2);
            if (d == Divisor3{0, 0, 0}) d = {1, 0, 1};
            return kerev(d);
        }
        case 6: {
            PullbackData p;
            p.factors = FactorSet::of({static_cast<int>(rand_int(rng, 1, 3))});
            p.c1[0] = rand_int(rng, -2, 3);
            return pullback(p);
        }
        case 7: {
            static const FactorSet pairs[3] = {
                FactorSet::of({1, 2}), FactorSet::of({1, 3}), FactorSet::of({2, 3})};
            PullbackData p;
            p.factors = pairs[rand_int(rng, 0, 2)];
            p.rank = rand_int(rng, 1, 3);
            p.c1 = {rand_int(rng, -2, 2), rand_int(rng, -2, 2)};
            p.c2_degree = p.rank == 1 ? 0 : rand_int(rng, -2, 2);
            return pullback(p);
        }
        default: {
            const auto& seeds = hs_seeds();
            const auto& s = seeds[static_cast<std::size_t>(
                rand_int(rng, 0, static_cast<Int>(seeds.size()) - 1))];
            return hs(s.curve, s.c1, rand_int(rng, s.rank_lo, s.rank_hi));
        }
    }
}

inline ExprPtr random_expr(Rng& rng, int depth) {
    if (depth <= 0) return random_leaf(rng);
    switch (rand_int(rng, 0, 5)) {
        case 0: {
            std::vector<ExprPtr> terms;
            const Int n = rand_int(rng, 2, 3);
            for (Int i = 0; i < n; ++i) terms.push_back(random_expr(rng, depth - 1));
            return sum(std::move(terms));
        }
        case 1:
            return twist(random_expr(rng, depth - 1), random_divisor(rng, -2, 2));
        case 2:
            return dual(random_expr(rng, depth - 1));
        default:
            return random_leaf(rng);
    }
}

}  // namespace segre::testing
