#pragma once

/// Bundle expressions on X = P1 x P1 x P1 and their Chern data.
///
/// A bundle is described by an expression tree: line bundles O(a1,a2,a3),
/// direct sums, twists by line bundles, duals, pullbacks along projections
/// to one or two factors, the kernel-of-evaluation dual F of a spanned line
/// bundle L (0 -> L^v -> O^{h0(L)} -> F -> 0), and bundles presented by
/// curve data through 0 -> O^(r-1) -> E -> I_C(c1) -> 0.
///
/// chern() evaluates a tree to exact integer Chern data.  The optional h0
/// field is filled only when the expression itself determines the section
/// count (split bundles, line-bundle pullbacks, kernel-of-evaluation duals);
/// it is never an estimate.

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "segre/chow.hpp"
#include "segre/cohomology.hpp"
#include "segre/curves.hpp"
#include "segre/ints.hpp"

namespace segre {

/// Rank plus the graded pieces of the total Chern class c(E) = 1 + c1 + c2 + c3.
struct ChernData {
    Int rank = 1;
    Divisor3 c1;
    CurveClass c2;
    Int c3 = 0;
    std::optional<Int> h0;

    bool operator==(const ChernData&) const = default;
};

inline ChowClass total_class(const ChernData& d) {
    return ChowClass::unit() + ChowClass::of_divisor(d.c1) + ChowClass::of_curve(d.c2) +
           ChowClass::of_point(d.c3);
}

inline ChernData chern_data_from_total(Int rank, const ChowClass& x) {
    if (rank < 1) throw DomainError("bundle rank must be at least 1");
    if (x.scalar_part() != 1) throw DomainError("total Chern class must have constant term 1");
    return {rank, x.divisor_part(), x.curve_part(), x.degree(), std::nullopt};
}

/// Chern data of E (x) O(m) for E of rank r:
///   c1' = c1 + r*m
///   c2' = c2 + (r-1)*m*c1 + C(r,2)*m^2
///   c3' = c3 + (r-2)*m*c2 + C(r-1,2)*m^2*c1 + C(r,3)*m^3
/// with all products taken in the Chow ring.  h0 is dropped: section counts
/// of a twist are recomputed from the expression, not from Chern data.
inline ChernData twist(const ChernData& d, const Divisor3& m) {
    if (d.rank < 1) throw DomainError("bundle rank must be at least 1");
    const Int r = d.rank;
    const ChowClass M = ChowClass::of_divisor(m);
    const ChowClass M2 = M * M;
    const ChowClass C1 = ChowClass::of_divisor(d.c1);
    const ChowClass C2 = ChowClass::of_curve(d.c2);
    ChernData out;
    out.rank = r;
    out.c1 = d.c1 + r * m;
    out.c2 = d.c2 + ((r - 1) * (M * C1) + binomial(r, 2) * M2).curve_part();
    out.c3 = checked_add(
        d.c3, checked_add(checked_mul(r - 2, (M * C2).degree()),
                          checked_add(checked_mul(binomial(r - 1, 2), (M2 * C1).degree()),
                                      checked_mul(binomial(r, 3), (M2 * M).degree()))));
    return out;
}

/// c_i(E^v) = (-1)^i c_i(E).
inline ChernData dual(const ChernData& d) {
    if (d.rank < 1) throw DomainError("bundle rank must be at least 1");
    return {d.rank, -d.c1, d.c2, checked_neg(d.c3), std::nullopt};
}

/// Chern data of a rank-r bundle presented by curve data through
/// 0 -> O^(r-1) -> E -> I_C(c1) -> 0: c1(E) = c1, c2(E) = [C], and
/// c3(E) = sum over components of deg omega_Ci(c1(X) - c1).
inline ChernData hs_data(const CurveData& C, const Divisor3& c1, Int r) {
    const RankRange rr = rank_range(C, c1);
    if (rr.max_rank < rr.min_rank)
        throw DomainError("no admissible rank for this curve data (minimum " +
                          std::to_string(rr.min_rank) + " exceeds maximum " +
                          std::to_string(rr.max_rank) + ")");
    if (r < rr.min_rank)
        throw DomainError("rank " + std::to_string(r) + " is below the minimum admissible rank " +
                          std::to_string(rr.min_rank));
    if (r > rr.max_rank)
        throw DomainError("rank " + std::to_string(r) + " exceeds the maximum admissible rank " +
                          std::to_string(rr.max_rank));
    return {r, c1, total_multidegree(C), c3_of_hs_bundle(C, c1), std::nullopt};
}

/// Nonempty proper subset of the three projection factors {1,2,3}.
struct FactorSet {
    unsigned mask = 0;  // bit i-1 set iff factor i is kept

    static FactorSet of(std::initializer_list<int> factors) {
        FactorSet s;
        for (int i : factors) {
            if (i < 1 || i > 3) throw DomainError("projection factor out of range 1..3");
            s.mask |= 1u << (i - 1);
        }
        return s;
    }

    bool contains(int i) const { return (mask & (1u << (i - 1))) != 0; }

    int size() const { return (mask & 1 ? 1 : 0) + (mask & 2 ? 1 : 0) + (mask & 4 ? 1 : 0); }

    bool operator==(const FactorSet&) const = default;
};

inline void validate_factor_set(const FactorSet& s) {
    if (s.size() < 1 || s.size() > 2)
        throw DomainError("projection factor set must keep one or two of the three factors");
}

/// A bundle pulled back along the projection to the kept factors.  For one
/// kept factor the bundle is a line bundle O(c1[0]) on P1; for two it is a
/// rank-`rank` bundle on P1 x P1 with first Chern class (c1[0], c1[1]) in
/// ascending factor order and second Chern class c2_degree times the point
/// class.
struct PullbackData {
    FactorSet factors;
    Int rank = 1;
    std::array<Int, 2> c1{0, 0};
    Int c2_degree = 0;

    bool operator==(const PullbackData&) const = default;
};

inline void validate_pullback(const PullbackData& p) {
    validate_factor_set(p.factors);
    if (p.rank < 1) throw DomainError("bundle rank must be at least 1");
    if (p.factors.size() == 1 && p.rank != 1)
        throw DomainError(
            "a pullback from a single factor must be a line bundle; express higher "
            "rank as a sum of line-bundle pullbacks");
    if (p.rank == 1 && p.c2_degree != 0)
        throw DomainError("a rank-1 bundle has vanishing second Chern class");
}

/// Divisor on X obtained by placing the kept-factor degrees in their slots.
inline Divisor3 pullback_divisor(const PullbackData& p) {
    Int a[3] = {0, 0, 0};
    std::size_t next = 0;
    for (int i = 1; i <= 3; ++i)
        if (p.factors.contains(i)) a[i - 1] = p.c1[next++];
    return {a[0], a[1], a[2]};
}

/// Chern data of the pullback.  Classes embed slot by slot; the point class
/// of a two-factor quadric maps to t_i t_j, which pairs with the multidegree
/// slot of the omitted factor.  c3 vanishes for every pullback.
inline ChernData pullback_chern(const PullbackData& p) {
    validate_pullback(p);
    ChernData out;
    out.rank = p.rank;
    out.c1 = pullback_divisor(p);
    if (p.factors.size() == 2) {
        const int omitted = 6 - (p.factors.contains(1) ? 1 : 0) - (p.factors.contains(2) ? 2 : 0) -
                            (p.factors.contains(3) ? 3 : 0);
        Int e[3] = {0, 0, 0};
        e[omitted - 1] = p.c2_degree;
        out.c2 = {e[0], e[1], e[2]};
    }
    out.c3 = 0;
    if (p.rank == 1) out.h0 = h_line(out.c1).h[0];
    return out;
}

struct BundleExpr;
using ExprPtr = std::shared_ptr<const BundleExpr>;

struct LineNode {
    Divisor3 d;
    bool operator==(const LineNode&) const = default;
};

/// Direct sum; terms are never SumNodes themselves (sums are flattened).
struct SumNode {
    std::vector<ExprPtr> terms;
};

struct TwistNode {
    ExprPtr inner;
    Divisor3 m;
};

struct DualNode {
    ExprPtr inner;
};

/// Kernel-of-evaluation dual F of the spanned line bundle O(d):
/// 0 -> O(-d) -> O^(h0) -> F -> 0.
struct KerEvDualNode {
    Divisor3 d;
    bool operator==(const KerEvDualNode&) const = default;
};

struct PullbackNode {
    PullbackData data;
    bool operator==(const PullbackNode&) const = default;
};

struct HSNode {
    CurveData curve;
    Divisor3 c1;
    Int rank = 2;
    bool operator==(const HSNode&) const = default;
};

struct BundleExpr {
    std::variant<LineNode, SumNode, TwistNode, DualNode, KerEvDualNode, PullbackNode, HSNode> node;
};

bool operator==(const BundleExpr& x, const BundleExpr& y);

inline bool operator==(const SumNode& x, const SumNode& y) {
    if (x.terms.size() != y.terms.size()) return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
        if (!(*x.terms[i] == *y.terms[i])) return false;
    return true;
}

inline bool operator==(const TwistNode& x, const TwistNode& y) {
    return x.m == y.m && *x.inner == *y.inner;
}

inline bool operator==(const DualNode& x, const DualNode& y) { return *x.inner == *y.inner; }

inline bool operator==(const BundleExpr& x, const BundleExpr& y) { return x.node == y.node; }

namespace detail {
inline ExprPtr make_expr(BundleExpr e) { return std::make_shared<const BundleExpr>(std::move(e)); }
}  // namespace detail

inline ExprPtr line(const Divisor3& d) { return detail::make_expr({LineNode{d}}); }

/// Direct sum; nested sums are flattened so sum terms are never sums.
inline ExprPtr sum(std::vector<ExprPtr> terms) {
    if (terms.empty()) throw DomainError("a direct sum needs at least one summand");
    std::vector<ExprPtr> flat;
    for (auto& t : terms) {
        if (!t) throw DomainError("null summand in direct sum");
        if (const auto* s = std::get_if<SumNode>(&t->node))
            flat.insert(flat.end(), s->terms.begin(), s->terms.end());
        else
            flat.push_back(std::move(t));
    }
    if (flat.size() == 1) return flat.front();
    return detail::make_expr({SumNode{std::move(flat)}});
}

inline ExprPtr twist(ExprPtr e, const Divisor3& m) {
    if (!e) throw DomainError("null expression in twist");
    return detail::make_expr({TwistNode{std::move(e), m}});
}

inline ExprPtr dual(ExprPtr e) {
    if (!e) throw DomainError("null expression in dual");
    return detail::make_expr({DualNode{std::move(e)}});
}

inline ExprPtr kerev(const Divisor3& d) {
    if (d.a1 < 0 || d.a2 < 0 || d.a3 < 0 || d == Divisor3{0, 0, 0})
        throw DomainError(
            "kernel-of-evaluation dual needs a globally generated, nontrivial line bundle "
            "(entries >= 0, not all zero)");
    return detail::make_expr({KerEvDualNode{d}});
}

inline ExprPtr pullback(const PullbackData& p) {
    validate_pullback(p);
    return detail::make_expr({PullbackNode{p}});
}

inline ExprPtr hs(const CurveData& curve, const Divisor3& c1, Int rank) {
    hs_data(curve, c1, rank);  // validates the rank against the curve
    return detail::make_expr({HSNode{curve, c1, rank}});
}

/// The summands of the expression as line bundles, when the expression is a
/// direct sum of line bundles after pushing twists and duals inward; empty
/// optional otherwise.
inline std::optional<std::vector<Divisor3>> split_lines(const BundleExpr& e) {
    using Result = std::optional<std::vector<Divisor3>>;
    return std::visit(
        [](const auto& n) -> Result {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LineNode>) {
                return std::vector<Divisor3>{n.d};
            } else if constexpr (std::is_same_v<T, SumNode>) {
                std::vector<Divisor3> all;
                for (const auto& t : n.terms) {
                    auto part = split_lines(*t);
                    if (!part) return std::nullopt;
                    all.insert(all.end(), part->begin(), part->end());
                }
                return all;
            } else if constexpr (std::is_same_v<T, TwistNode>) {
                auto part = split_lines(*n.inner);
                if (!part) return std::nullopt;
                for (auto& d : *part) d = d + n.m;
                return part;
            } else if constexpr (std::is_same_v<T, DualNode>) {
                auto part = split_lines(*n.inner);
                if (!part) return std::nullopt;
                for (auto& d : *part) d = -d;
                return part;
            } else if constexpr (std::is_same_v<T, PullbackNode>) {
                if (n.data.rank == 1) return std::vector<Divisor3>{pullback_divisor(n.data)};
                return std::nullopt;
            } else {
                return std::nullopt;
            }
        },
        e.node);
}

inline ChernData chern(const BundleExpr& e) {
    using std::is_same_v;
    ChernData out = std::visit(
        [](const auto& n) -> ChernData {
            using T = std::decay_t<decltype(n)>;
            if constexpr (is_same_v<T, LineNode>) {
                return {1, n.d, {}, 0, h_line(n.d).h[0]};
            } else if constexpr (is_same_v<T, SumNode>) {
                Int rank = 0;
                ChowClass total = ChowClass::unit();
                std::optional<Int> h0 = 0;
                for (const auto& t : n.terms) {
                    const ChernData part = chern(*t);
                    rank = checked_add(rank, part.rank);
                    total = total * total_class(part);
                    if (h0 && part.h0)
                        h0 = checked_add(*h0, *part.h0);
                    else
                        h0 = std::nullopt;
                }
                ChernData d = chern_data_from_total(rank, total);
                d.h0 = h0;
                return d;
            } else if constexpr (is_same_v<T, TwistNode>) {
                return twist(chern(*n.inner), n.m);
            } else if constexpr (is_same_v<T, DualNode>) {
                return dual(chern(*n.inner));
            } else if constexpr (is_same_v<T, KerEvDualNode>) {
                const Int sections = checked_mul(n.d.a1 + 1, checked_mul(n.d.a2 + 1, n.d.a3 + 1));
                const ChowClass total =
                    invert_unit(ChowClass::unit() - ChowClass::of_divisor(n.d));
                ChernData d = chern_data_from_total(sections - 1, total);
                d.h0 = checked_add(sections, h_line(-n.d).h[1]);
                return d;
            } else if constexpr (is_same_v<T, PullbackNode>) {
                return pullback_chern(n.data);
            } else {
                return hs_data(n.curve, n.c1, n.rank);
            }
        },
        e.node);
    if (!out.h0) {
        if (auto lines = split_lines(e)) {
            Int h0 = 0;
            for (const auto& d : *lines) h0 = checked_add(h0, h_line(d).h[0]);
            out.h0 = h0;
        }
    }
    return out;
}

inline ChernData chern(const ExprPtr& e) {
    if (!e) throw DomainError("null bundle expression");
    return chern(*e);
}

/// Extension bookkeeping for a bundle splitting into exactly two line
/// summands O(a) and O(b): Whitney data is blind to the extension class, so
/// the dimensions of both extension spaces are carried alongside.
/// ext1_a_by_b = dim Ext^1(O(a), O(b)) counts extensions 0 -> O(b) -> E -> O(a) -> 0.
struct ExtensionInfo {
    Divisor3 a, b;
    Int ext1_a_by_b = 0;
    Int ext1_b_by_a = 0;

    bool operator==(const ExtensionInfo&) const = default;
};

inline std::optional<ExtensionInfo> extension_info(const BundleExpr& e) {
    const auto lines = split_lines(e);
    if (!lines || lines->size() != 2) return std::nullopt;
    const Divisor3 a = (*lines)[0], b = (*lines)[1];
    return ExtensionInfo{a, b, ext1_line(a, b), ext1_line(b, a)};
}

}  // namespace segre
