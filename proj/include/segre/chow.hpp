#pragma once

/// Chow ring of the Segre threefold X = P1 x P1 x P1.
///
///   A(X) = Z[t1,t2,t3] / (t1^2, t2^2, t3^2)
///
/// where t_i is the pullback of a point class from the i-th factor.  A class
/// is stored as 8 integer coefficients indexed by square-free monomials, i.e.
/// by subsets S of {1,2,3}.  Graded pieces and their integer coordinates:
///
///   A^0 = Z            constant term
///   A^1 = Z^3          a1*t1 + a2*t2 + a3*t3            (divisor classes)
///   A^2 = Z^3          e1*t2t3 + e2*t3t1 + e3*t1t2      (curve classes)
///   A^3 = Z            c*t1t2t3, deg(c*t1t2t3) = c      (point classes)
///
/// Note the A^2 convention: e_i is the coefficient of the monomial that
/// omits t_i, so e_i is the degree of the curve over the i-th factor.

#include <array>
#include <cstddef>

#include "segre/ints.hpp"

namespace segre {

/// Permutation of the three factors; maps factor i to image(i), 1-based.
struct Permutation {
    std::array<int, 3> image{1, 2, 3};

    static Permutation identity() { return {}; }

    /// One-line notation: sigma(1)=i1, sigma(2)=i2, sigma(3)=i3.
    static Permutation of(int i1, int i2, int i3) {
        Permutation s{{i1, i2, i3}};
        int seen = 0;
        for (int v : s.image) {
            if (v < 1 || v > 3) throw DomainError("permutation entries must be 1, 2, 3");
            seen |= 1 << (v - 1);
        }
        if (seen != 7) throw DomainError("permutation entries must be distinct");
        return s;
    }

    int operator()(int i) const { return image[static_cast<std::size_t>(i - 1)]; }

    bool operator==(const Permutation&) const = default;
};

/// All six permutations of the factors, identity first.
inline const std::array<Permutation, 6>& all_permutations() {
    static const std::array<Permutation, 6> all = {
        Permutation::of(1, 2, 3), Permutation::of(1, 3, 2), Permutation::of(2, 1, 3),
        Permutation::of(2, 3, 1), Permutation::of(3, 1, 2), Permutation::of(3, 2, 1)};
    return all;
}

/// Divisor class a1*t1 + a2*t2 + a3*t3, i.e. O(a1,a2,a3).
struct Divisor3 {
    Int a1 = 0, a2 = 0, a3 = 0;

    Int operator[](int i) const { return i == 1 ? a1 : i == 2 ? a2 : a3; }

    bool operator==(const Divisor3&) const = default;

    Divisor3 operator+(const Divisor3& o) const {
        return {checked_add(a1, o.a1), checked_add(a2, o.a2), checked_add(a3, o.a3)};
    }
    Divisor3 operator-(const Divisor3& o) const {
        return {checked_sub(a1, o.a1), checked_sub(a2, o.a2), checked_sub(a3, o.a3)};
    }
    Divisor3 operator-() const { return {checked_neg(a1), checked_neg(a2), checked_neg(a3)}; }

    Divisor3 permuted(const Permutation& s) const {
        Divisor3 r;
        Int* out[3] = {&r.a1, &r.a2, &r.a3};
        const Int in[3] = {a1, a2, a3};
        for (int i = 1; i <= 3; ++i) *out[s(i) - 1] = in[i - 1];
        return r;
    }
};

inline Divisor3 operator*(Int k, const Divisor3& d) {
    return {checked_mul(k, d.a1), checked_mul(k, d.a2), checked_mul(k, d.a3)};
}

/// Curve class e1*t2t3 + e2*t3t1 + e3*t1t2; e_i is the multidegree of the
/// curve over the i-th factor.
struct CurveClass {
    Int e1 = 0, e2 = 0, e3 = 0;

    Int operator[](int i) const { return i == 1 ? e1 : i == 2 ? e2 : e3; }

    bool operator==(const CurveClass&) const = default;

    CurveClass operator+(const CurveClass& o) const {
        return {checked_add(e1, o.e1), checked_add(e2, o.e2), checked_add(e3, o.e3)};
    }

    CurveClass permuted(const Permutation& s) const {
        CurveClass r;
        Int* out[3] = {&r.e1, &r.e2, &r.e3};
        const Int in[3] = {e1, e2, e3};
        for (int i = 1; i <= 3; ++i) *out[s(i) - 1] = in[i - 1];
        return r;
    }
};

inline CurveClass operator*(Int k, const CurveClass& e) {
    return {checked_mul(k, e.e1), checked_mul(k, e.e2), checked_mul(k, e.e3)};
}

/// Element of A(X); coefficients indexed by bitmask of {t1,t2,t3}
/// (bit i-1 set iff t_i divides the monomial).
struct ChowClass {
    std::array<Int, 8> c{};

    static ChowClass zero() { return {}; }

    static ChowClass unit() {
        ChowClass x;
        x.c[0] = 1;
        return x;
    }

    static ChowClass t(int i) {
        if (i < 1 || i > 3) throw DomainError("t(i) requires i in {1,2,3}");
        ChowClass x;
        x.c[static_cast<std::size_t>(1 << (i - 1))] = 1;
        return x;
    }

    static ChowClass of_divisor(const Divisor3& d) {
        ChowClass x;
        x.c[1] = d.a1;
        x.c[2] = d.a2;
        x.c[4] = d.a3;
        return x;
    }

    static ChowClass of_curve(const CurveClass& e) {
        ChowClass x;
        x.c[6] = e.e1;  // t2t3
        x.c[5] = e.e2;  // t3t1
        x.c[3] = e.e3;  // t1t2
        return x;
    }

    static ChowClass of_point(Int k) {
        ChowClass x;
        x.c[7] = k;
        return x;
    }

    bool operator==(const ChowClass&) const = default;

    ChowClass operator+(const ChowClass& o) const {
        ChowClass r;
        for (std::size_t m = 0; m < 8; ++m) r.c[m] = checked_add(c[m], o.c[m]);
        return r;
    }

    ChowClass operator-(const ChowClass& o) const {
        ChowClass r;
        for (std::size_t m = 0; m < 8; ++m) r.c[m] = checked_sub(c[m], o.c[m]);
        return r;
    }

    ChowClass operator-() const {
        ChowClass r;
        for (std::size_t m = 0; m < 8; ++m) r.c[m] = checked_neg(c[m]);
        return r;
    }

    /// Ring product; monomials sharing a variable multiply to zero.
    ChowClass operator*(const ChowClass& o) const {
        ChowClass r;
        for (std::size_t s = 0; s < 8; ++s) {
            if (c[s] == 0) continue;
            for (std::size_t t = 0; t < 8; ++t) {
                if ((s & t) != 0 || o.c[t] == 0) continue;
                r.c[s | t] = checked_add(r.c[s | t], checked_mul(c[s], o.c[t]));
            }
        }
        return r;
    }

    Int scalar_part() const { return c[0]; }

    Divisor3 divisor_part() const { return {c[1], c[2], c[4]}; }

    CurveClass curve_part() const { return {c[6], c[5], c[3]}; }

    /// Degree of the top (point) component: deg(c * t1t2t3) = c.
    Int degree() const { return c[7]; }

    ChowClass permuted(const Permutation& s) const {
        ChowClass r;
        for (std::size_t m = 0; m < 8; ++m) {
            std::size_t img = 0;
            for (int i = 1; i <= 3; ++i)
                if (m & (1u << (i - 1))) img |= 1u << (s(i) - 1);
            r.c[img] = c[m];
        }
        return r;
    }
};

inline ChowClass operator*(Int k, const ChowClass& x) {
    ChowClass r;
    for (std::size_t m = 0; m < 8; ++m) r.c[m] = checked_mul(k, x.c[m]);
    return r;
}

/// Inverse of a class with constant coefficient 1: with n = 1 - x nilpotent,
/// x^-1 = 1 + n + n^2 + n^3 (n^4 = 0 since every term of n has degree >= 1).
inline ChowClass invert_unit(const ChowClass& x) {
    if (x.c[0] != 1) throw DomainError("invert_unit requires constant coefficient 1");
    const ChowClass n = ChowClass::unit() - x;
    const ChowClass n2 = n * n;
    return ChowClass::unit() + n + n2 + n2 * n;
}

/// Serialization basis order: subsets of {1,2,3} sorted by (size, lex), i.e.
/// 1, t1, t2, t3, t1t2, t1t3, t2t3, t1t2t3.
inline constexpr std::array<std::size_t, 8> chow_basis_order = {0, 1, 2, 4, 3, 5, 6, 7};

inline std::array<Int, 8> to_coefficients(const ChowClass& x) {
    std::array<Int, 8> r{};
    for (std::size_t i = 0; i < 8; ++i) r[i] = x.c[chow_basis_order[i]];
    return r;
}

inline ChowClass from_coefficients(const std::array<Int, 8>& a) {
    ChowClass x;
    for (std::size_t i = 0; i < 8; ++i) x.c[chow_basis_order[i]] = a[i];
    return x;
}

}  // namespace segre
