#pragma once

// Shared helpers for the test suites: a deterministic RNG and generators
// for random algebra elements.  Every suite seeds its own engine so test
// ordering cannot change the cases a suite sees.

#include <random>

#include "segre/chow.hpp"

namespace segre::testing {

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline ChowClass random_class(Rng& rng, Int lo = -9, Int hi = 9) {
    ChowClass x;
    for (auto& v : x.c) v = rand_int(rng, lo, hi);
    return x;
}

inline Divisor3 random_divisor(Rng& rng, Int lo, Int hi) {
    return {rand_int(rng, lo, hi), rand_int(rng, lo, hi), rand_int(rng, lo, hi)};
}

inline Permutation random_permutation(Rng& rng) {
    return all_permutations()[static_cast<std::size_t>(rand_int(rng, 0, 5))];
}

/// Reference multiplication, written independently of ChowClass::operator*:
/// multiplies monomials as exponent vectors and drops any product in which
/// some exponent reaches 2.
inline ChowClass oracle_mul(const ChowClass& x, const ChowClass& y) {
    ChowClass r;
    for (int s = 0; s < 8; ++s) {
        for (int t = 0; t < 8; ++t) {
            int exp[3];
            bool dead = false;
            for (int i = 0; i < 3; ++i) {
                exp[i] = ((s >> i) & 1) + ((t >> i) & 1);
                if (exp[i] > 1) dead = true;
            }
            if (dead) continue;
            const int m = exp[0] + 2 * exp[1] + 4 * exp[2];
            r.c[static_cast<std::size_t>(m)] =
                checked_add(r.c[static_cast<std::size_t>(m)],
                            checked_mul(x.c[static_cast<std::size_t>(s)],
                                        y.c[static_cast<std::size_t>(t)]));
        }
    }
    return r;
}

}  // namespace segre::testing
