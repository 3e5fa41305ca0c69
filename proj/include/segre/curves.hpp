#pragma once

/// Numeric data of smooth curves C in X = P1 x P1 x P1 used by the
/// kernel-bundle correspondence: a bundle E of rank r with c1(E) = c1 and
/// no trivial summand that is globally generated drops rank along a smooth
/// curve C with [C] = c2(E), and existence forces the twisted canonical
/// bundle omega_C(c1(X) - c1) to be spanned on every connected component.
///
/// Throughout, a component is (multidegree e, genus g) and the twist degree
/// against a target first Chern class c1 = (a1,a2,a3) is
///
///   tau = sum_j (2 - a_j) * e_j     (degree of O(2-a1,2-a2,2-a3) on C_i),
///
/// so omega_Ci(c1(X) - c1) has degree 2g - 2 + tau.

#include <string>
#include <vector>

#include "segre/cohomology.hpp"
#include "segre/chow.hpp"
#include "segre/ints.hpp"

namespace segre {

/// One connected component of a witness curve.  assume_trivial controls the
/// degree-0 case: a degree-0 twist on a rational component is always trivial,
/// on an elliptic component it is an assumption (it holds in every table row
/// shipped with this library).
struct Component {
    CurveClass e;
    Int g = 0;
    bool assume_trivial = true;

    bool operator==(const Component&) const = default;
};

struct CurveData {
    std::vector<Component> components;

    bool operator==(const CurveData&) const = default;
};

/// Admissible ranks for bundles witnessed by a fixed curve.  The range is
/// empty when max_rank < min_rank.
struct RankRange {
    Int min_rank = 0;
    Int max_rank = 0;
    bool rank2_allowed = false;

    bool operator==(const RankRange&) const = default;
};

inline void validate_component(const Component& c) {
    if (c.e.e1 < 0 || c.e.e2 < 0 || c.e.e3 < 0)
        throw DomainError("component multidegree entries must be >= 0");
    if (c.e.e1 == 0 && c.e.e2 == 0 && c.e.e3 == 0)
        throw DomainError("component multidegree must not be zero");
    if (c.g < 0) throw DomainError("component genus must be >= 0");
}

inline void validate_curve(const CurveData& c) {
    if (c.components.empty()) throw DomainError("curve must have at least one component");
    for (const auto& comp : c.components) validate_component(comp);
}

/// Multidegree of the complete intersection of two members of |O(d)|:
/// the curve class part of ell(d)^2.
inline CurveClass ci_multidegree(const Divisor3& d) {
    if (d.a1 < 0 || d.a2 < 0 || d.a3 < 0)
        throw DomainError("ci_multidegree requires entries >= 0");
    return {checked_mul(2, checked_mul(d.a2, d.a3)), checked_mul(2, checked_mul(d.a1, d.a3)),
            checked_mul(2, checked_mul(d.a1, d.a2))};
}

/// Arithmetic genus of that complete intersection:
/// p_a = 6*a1*a2*a3 - 2*(a1*a2 + a2*a3 + a3*a1) + 1.
inline Int ci_genus(const Divisor3& d) {
    if (d.a1 < 0 || d.a2 < 0 || d.a3 < 0) throw DomainError("ci_genus requires entries >= 0");
    const Int abc = checked_mul(checked_mul(d.a1, d.a2), d.a3);
    const Int pairs = checked_add(checked_add(checked_mul(d.a1, d.a2), checked_mul(d.a2, d.a3)),
                                  checked_mul(d.a3, d.a1));
    return checked_add(checked_sub(checked_mul(6, abc), checked_mul(2, pairs)), 1);
}

/// Dualizing sheaf of the complete intersection, by adjunction:
/// omega_Y = O_Y(2*d - 2) with K_X = (-2,-2,-2).
inline Divisor3 ci_canonical(const Divisor3& d) {
    return 2 * d + canonical_divisor();
}

/// The complete intersection curve of |O(d)| as curve data (one component).
inline CurveData ci_curve(const Divisor3& d) {
    return CurveData{{Component{ci_multidegree(d), ci_genus(d)}}};
}

/// Degree of O(b) restricted to a curve of multidegree e.
inline Int line_degree_on_curve(const CurveClass& e, const Divisor3& b) {
    return checked_add(checked_add(checked_mul(e.e1, b.a1), checked_mul(e.e2, b.a2)),
                       checked_mul(e.e3, b.a3));
}

/// Twist degree tau of the component against target c1.
inline Int canonical_twist_degree(const Component& c, const Divisor3& c1) {
    return line_degree_on_curve(c.e, Divisor3{2, 2, 2} - c1);
}

/// Degree of omega_Ci(c1(X) - c1) = 2g - 2 + tau.
inline Int omega_twist_degree(const Component& c, const Divisor3& c1) {
    return checked_add(checked_sub(checked_mul(2, c.g), 2), canonical_twist_degree(c, c1));
}

/// Necessary numeric conditions for omega_Ci(c1(X) - c1) to be spanned.
/// Returns a reason string when the component fails, empty when it passes:
///   - tau < 0: the twist is not effective on the component;
///   - 2g - 2 + tau < 0: the twisted canonical has negative degree;
///   - g = 0, tau < 2: a rational component needs twist degree >= 2
///     (in particular no component is a line);
///   - g = 1, tau = 1: a degree-1 bundle on an elliptic curve has a base
///     point.
inline std::string spannedness_failure(const Component& c, const Divisor3& c1) {
    const Int tau = canonical_twist_degree(c, c1);
    if (tau < 0) return "twist degree tau = " + std::to_string(tau) + " < 0: not effective";
    if (checked_add(checked_sub(checked_mul(2, c.g), 2), tau) < 0)
        return "twisted canonical degree 2g-2+tau < 0";
    if (c.g == 0 && tau < 2)
        return "rational component with twist degree " + std::to_string(tau) +
               " < 2 is not spanned (no component is a line)";
    if (c.g == 1 && tau == 1)
        return "degree-1 twist on an elliptic component has a base point";
    return {};
}

inline bool spanned_on_component(const Component& c, const Divisor3& c1) {
    return spannedness_failure(c, c1).empty();
}

/// h^0 of omega_Ci(c1(X) - c1) on one component.  Errors when the
/// spannedness predicate fails.  For tau > 0 this is Riemann-Roch
/// (g - 1 + tau); for tau = 0 the twist is a degree-0 line bundle, trivial
/// on rational components and by assumption (assume_trivial) otherwise, so
/// h^0 = g for g >= 2 (omega itself) and 1 for g <= 1 (the trivial bundle).
inline Int omega_twist_h0(const Component& c, const Divisor3& c1) {
    validate_component(c);
    if (const auto why = spannedness_failure(c, c1); !why.empty())
        throw DomainError("omega_twist_h0: " + why);
    const Int tau = canonical_twist_degree(c, c1);
    if (tau > 0) return checked_add(checked_sub(c.g, 1), tau);
    if (c.g >= 2) return c.g;
    return c.assume_trivial ? 1 : 0;
}

/// Whether the component admits a rank-2 witness: omega_Ci(c1(X) - c1) must
/// be trivial, i.e. have degree 0 (with triviality automatic for g = 0 and
/// assumed via assume_trivial for g = 1).
inline bool rank2_component(const Component& c, const Divisor3& c1) {
    return omega_twist_degree(c, c1) == 0 && (c.g == 0 || c.assume_trivial);
}

/// c3 of the bundle witnessed by C: deg omega_C(c1(X) - c1)
/// = sum_i (2*g_i - 2 + tau_i).  Zero exactly in the rank-2 situation.
inline Int c3_of_hs_bundle(const CurveData& curve, const Divisor3& c1) {
    validate_curve(curve);
    Int total = 0;
    for (const auto& comp : curve.components)
        total = checked_add(total, omega_twist_degree(comp, c1));
    return total;
}

inline CurveClass total_multidegree(const CurveData& curve) {
    CurveClass t;
    for (const auto& comp : curve.components) t = t + comp.e;
    return t;
}

/// Admissible ranks for bundles with c1 witnessed by this curve:
///   max_rank = sum_i h^0(omega_Ci(c1(X) - c1)) + 1,
///   min_rank = 2 when every component admits a rank-2 witness, else 3.
/// Errors when any component fails the spannedness predicate.
inline RankRange rank_range(const CurveData& curve, const Divisor3& c1) {
    validate_curve(curve);
    RankRange r;
    r.rank2_allowed = true;
    Int total_h0 = 0;
    for (const auto& comp : curve.components) {
        total_h0 = checked_add(total_h0, omega_twist_h0(comp, c1));
        if (!rank2_component(comp, c1)) r.rank2_allowed = false;
    }
    r.max_rank = checked_add(total_h0, 1);
    r.min_rank = r.rank2_allowed ? 2 : 3;
    return r;
}

}  // namespace segre
