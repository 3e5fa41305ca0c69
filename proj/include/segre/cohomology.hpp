#pragma once

/// Line-bundle cohomology on X = P1 x P1 x P1 via the Kunneth formula.
///
/// On a single P1, h^0(O(a)) = max(a+1, 0) and h^1(O(a)) = max(-a-1, 0);
/// threefold cohomology is the convolution of the three factor tables.

#include <array>

#include "segre/chow.hpp"
#include "segre/ints.hpp"

namespace segre {

/// The four cohomology dimensions (h0, h1, h2, h3); entries are >= 0.
struct CohomologyVector {
    std::array<Int, 4> h{};

    Int operator[](std::size_t k) const { return h[k]; }
    bool operator==(const CohomologyVector&) const = default;
};

/// h^i(P1, O(a)) for i in {0,1}.
inline Int h_p1(int i, Int a) {
    if (i != 0 && i != 1) throw DomainError("h_p1: cohomological degree must be 0 or 1");
    if (i == 0) return a >= -1 ? a + 1 : 0;
    return a <= -1 ? checked_neg(a) - 1 : 0;
}

/// h^k(X, O(d)) for k = 0..3.
inline CohomologyVector h_line(const Divisor3& d) {
    CohomologyVector out;
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            for (int l = 0; l <= 1; ++l) {
                const Int term =
                    checked_mul(checked_mul(h_p1(i, d.a1), h_p1(j, d.a2)), h_p1(l, d.a3));
                const auto k = static_cast<std::size_t>(i + j + l);
                out.h[k] = checked_add(out.h[k], term);
            }
    return out;
}

/// chi(O(d)) = (a1+1)(a2+1)(a3+1); equals the alternating sum of h_line.
inline Int euler_char(const Divisor3& d) {
    return checked_mul(checked_mul(checked_add(d.a1, 1), checked_add(d.a2, 1)),
                       checked_add(d.a3, 1));
}

/// Canonical divisor class of X.
inline Divisor3 canonical_divisor() { return {-2, -2, -2}; }

/// Serre-dual divisor: h^k(O(d)) = h^(3-k)(O(serre_dual(d))).
inline Divisor3 serre_dual(const Divisor3& d) { return canonical_divisor() - d; }

/// dim Ext^1(O(a), O(b)) = h^1(O(b - a)).
inline Int ext1_line(const Divisor3& a, const Divisor3& b) { return h_line(b - a).h[1]; }

}  // namespace segre
