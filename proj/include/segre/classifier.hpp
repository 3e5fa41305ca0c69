#pragma once

/// Candidate enumeration for the classification tables: numeric
/// necessary conditions on tuples (s; e1,e2,e3; g_i) of dependency-curve
/// data for a fixed first Chern class, canonicalization under the
/// symmetry subgroup fixing c1, and audits against the bundled tables.
///
/// The enumeration is a necessary-condition sieve: every table row must
/// survive it, and surviving non-rows ("extras") are either matched by a
/// fixture's exclusion ledger — a geometric argument outside arithmetic —
/// or reported as unexplained.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "segre/chow.hpp"
#include "segre/curves.hpp"
#include "segre/fixtures.hpp"

namespace segre {

/// Which witnesses to enumerate: curves admitting a rank-2 bundle, or
/// curves admitting a bundle of any rank >= 2.
enum class RankFilter { rank_two, any_rank };

inline RankFilter rank_filter_from_string(const std::string& s) {
    if (s == "2" || s == "rank2") return RankFilter::rank_two;
    if (s == "all") return RankFilter::any_rank;
    throw DomainError("rank filter must be \"2\" or \"all\", got \"" + s + "\"");
}

struct CandidateTuple {
    CurveData curve;  // components in canonical order
    RankRange ranks;
    CurveClass c2;
    Int c3 = 0;
    std::string canonical_form;

    int s() const { return static_cast<int>(curve.components.size()); }

    bool operator==(const CandidateTuple&) const = default;
};

/// One numeric necessary condition.  `accepts` is a pure function of the
/// candidate curve and c1; `per_component` records whether the condition
/// factors through individual components (so enumeration may prune early).
struct Predicate {
    std::string id;
    std::string name;
    std::string paper_ref;
    bool per_component = false;
    bool rank2_only = false;
    std::function<bool(const CurveData&, const Divisor3&)> accepts;
};

/// Factor indices k with c1[k] = 1: the projection away from factor k
/// embeds every candidate component into P1 x P1.
inline std::vector<int> embedding_axes(const Divisor3& c1) {
    std::vector<int> axes;
    for (int k = 1; k <= 3; ++k)
        if (c1[k] == 1) axes.push_back(k);
    return axes;
}

/// Genus cap for candidate tuples: the dependency curve lies inside the
/// complete intersection Y of two general members of |I_C(c1)|, so the sum
/// of component genera is bounded by p_a(Y) when every entry of c1 is
/// positive (Y connected).  A zero entry makes every candidate component a
/// fiber-divisor class of genus 0, so the cap collapses to 0 there.
inline Int genus_budget(const Divisor3& c1) {
    if (c1.a1 >= 1 && c1.a2 >= 1 && c1.a3 >= 1) return ci_genus(c1);
    return 0;
}

namespace detail {

/// Genus of a smooth divisor of bidegree (x, y) on P1 x P1.
inline Int quadric_genus(Int x, Int y) {
    return checked_mul(checked_sub(x, 1), checked_sub(y, 1));
}

/// The two factor indices other than k, in increasing order.
inline std::pair<int, int> other_axes(int k) {
    switch (k) {
        case 1: return {2, 3};
        case 2: return {1, 3};
        default: return {1, 2};
    }
}

}  // namespace detail

/// The predicate registry, in id order P1..P8.
inline const std::vector<Predicate>& predicates() {
    static const std::vector<Predicate> all = {
        {"P1", "bound-by-complete-intersection",
         "Theorem 4.9 proof: \"Since Y has multidegree (2,4,4), so we have e_1 <= 2 and "
         "e_2, e_3 <= 4\"; same bound from Y in Sections 5 and 6",
         false, false,
         [](const CurveData& curve, const Divisor3& c1) {
             const CurveClass total = total_multidegree(curve);
             const CurveClass box = ci_multidegree(c1);
             return total.e1 <= box.e1 && total.e2 <= box.e2 && total.e3 <= box.e3;
         }},
        {"P2", "rank-two-genus-relation",
         "Section 4: omega_C = O_C(0,-1,-1); Section 5: omega_C = O_C(0,0,-1) — on every "
         "component 2g - 2 = sum_j (a_j - 2) e_j, the twisted canonical has degree 0",
         true, true,
         [](const CurveData& curve, const Divisor3& c1) {
             for (const auto& comp : curve.components)
                 if (omega_twist_degree(comp, c1) != 0) return false;
             return true;
         }},
        {"P3", "spanned-components",
         "Theorem 4.9 proof step (b): omega_C(0,1,1) is spanned; \"C_i is not a line\"",
         true, false,
         [](const CurveData& curve, const Divisor3& c1) {
             for (const auto& comp : curve.components)
                 if (!spanned_on_component(comp, c1)) return false;
             return true;
         }},
        {"P4", "degree-one-implies-rational",
         "Remark 6.2: \"Since C_i is not rational, we have e[i]_j != 1\"",
         true, false,
         [](const CurveData& curve, const Divisor3&) {
             for (const auto& comp : curve.components) {
                 const bool has_one = comp.e.e1 == 1 || comp.e.e2 == 1 || comp.e.e3 == 1;
                 if (has_one && comp.g != 0) return false;
             }
             return true;
         }},
        {"P5", "fiber-component-genus",
         "Remark 6.2 case analysis and Theorem 5.5 proof: a component with e_j = 0 lies in "
         "a fiber P1 x P1, where a smooth divisor of bidegree (e', e'') has genus "
         "(e' - 1)(e'' - 1)",
         true, false,
         [](const CurveData& curve, const Divisor3&) {
             for (const auto& comp : curve.components)
                 for (int j = 1; j <= 3; ++j)
                     if (comp.e[j] == 0) {
                         const auto [p, q] = detail::other_axes(j);
                         if (comp.g != detail::quadric_genus(comp.e[p], comp.e[q]))
                             return false;
                     }
             return true;
         }},
        {"P6", "quadric-embedding",
         "Lemma 2.10: pi_{ij}|_C is an embedding when a_k = 1, so each component is a "
         "smooth divisor on P1 x P1 with genus (e_i - 1)(e_j - 1); for s >= 2 disjointness "
         "forces one pair coordinate 0 and the other 1 on every component (Remark 2.11(2); "
         "Lemma 4.1: \"e_1 = 0, e[i]_2 = e[i]_3 = 1 for all i\")",
         false, false,
         [](const CurveData& curve, const Divisor3& c1) {
             for (int k : embedding_axes(c1)) {
                 const auto [i, j] = detail::other_axes(k);
                 for (const auto& comp : curve.components)
                     if (comp.g != detail::quadric_genus(comp.e[i], comp.e[j])) return false;
                 if (curve.components.size() >= 2) {
                     bool first_zero = true, second_zero = true;
                     for (const auto& comp : curve.components) {
                         first_zero = first_zero && comp.e[i] == 0 && comp.e[j] == 1;
                         second_zero = second_zero && comp.e[i] == 1 && comp.e[j] == 0;
                     }
                     if (!first_zero && !second_zero) return false;
                 }
             }
             return true;
         }},
        {"P7", "quadric-disjointness",
         "Proposition 3.1 proof: pi_13(C_1) and pi_13(C_2) meet — two bidegree-(1,1) "
         "curves on P1 x P1 are never disjoint",
         false, false,
         [](const CurveData& curve, const Divisor3& c1) {
             for (int k : embedding_axes(c1)) {
                 const auto [i, j] = detail::other_axes(k);
                 int diagonal = 0;
                 for (const auto& comp : curve.components)
                     if (comp.e[i] == 1 && comp.e[j] == 1) ++diagonal;
                 if (curve.components.size() >= 2 && diagonal >= 2) return false;
             }
             return true;
         }},
        {"P8", "genus-budget",
         "Theorem 6.1 proof: h^1(O_C) = sum_i h^1(O_{C_i}) <= h^1(O_Y) = 25; Theorem 5.7 "
         "proof: p_a(Y) = 9 bookkeeping on Y = C u D",
         false, false,
         [](const CurveData& curve, const Divisor3& c1) {
             Int total = 0;
             for (const auto& comp : curve.components) total = checked_add(total, comp.g);
             return total <= genus_budget(c1);
         }},
    };
    return all;
}

inline const Predicate& predicate_by_id(const std::string& id) {
    for (const auto& p : predicates())
        if (p.id == id) return p;
    throw DomainError("unknown predicate id: " + id);
}

/// Permutations of the three factors fixing c1.
inline std::vector<Permutation> stabilizer(const Divisor3& c1) {
    std::vector<Permutation> subgroup;
    for (const auto& s : all_permutations())
        if (c1.permuted(s) == c1) subgroup.push_back(s);
    return subgroup;
}

namespace detail {

using ComponentKey = std::array<Int, 4>;

inline ComponentKey component_key(const Component& c) {
    return {c.e.e1, c.e.e2, c.e.e3, c.g};
}

inline std::vector<ComponentKey> curve_key(const std::vector<Component>& comps) {
    std::vector<ComponentKey> key;
    key.reserve(comps.size());
    for (const auto& c : comps) key.push_back(component_key(c));
    return key;
}

}  // namespace detail

/// Canonical representative of a component list under the stabilizer of c1:
/// apply each symmetry, sort components, keep the lexicographically least.
inline std::vector<Component> canonical_components(const std::vector<Component>& comps,
                                                   const Divisor3& c1) {
    std::vector<Component> best;
    std::vector<detail::ComponentKey> best_key;
    for (const auto& sigma : stabilizer(c1)) {
        std::vector<Component> image = comps;
        for (auto& comp : image) comp.e = comp.e.permuted(sigma);
        std::sort(image.begin(), image.end(), [](const Component& a, const Component& b) {
            return detail::component_key(a) < detail::component_key(b);
        });
        auto key = detail::curve_key(image);
        if (best.empty() || key < best_key) {
            best = std::move(image);
            best_key = std::move(key);
        }
    }
    return best;
}

/// Printable canonical form "(s; E1,E2,E3) = (e1,e2,e3|g) + ...".
inline std::string canonical_form_string(const CurveData& canonical) {
    const CurveClass total = total_multidegree(canonical);
    std::string out = "(" + std::to_string(canonical.components.size()) + "; " +
                      std::to_string(total.e1) + "," + std::to_string(total.e2) + "," +
                      std::to_string(total.e3) + ") = ";
    bool first = true;
    for (const auto& comp : canonical.components) {
        if (!first) out += " + ";
        first = false;
        out += "(" + std::to_string(comp.e.e1) + "," + std::to_string(comp.e.e2) + "," +
               std::to_string(comp.e.e3) + "|" + std::to_string(comp.g) + ")";
    }
    return out;
}

struct EnumerateOptions {
    int max_s = 4;
    /// When set, only these predicate ids filter candidates (P1's total
    /// bound and the genus budget still confine the generation box, and a
    /// rank-two enumeration ignores P2 unless listed here).  Intended for
    /// monotonicity experiments; the default applies every predicate.
    std::optional<std::vector<std::string>> predicate_ids;
};

namespace detail {

inline bool component_passes_enabled(const Component& comp, const Divisor3& c1,
                                     const std::set<std::string>& enabled) {
    const CurveData single{{comp}};
    for (const auto& p : predicates()) {
        if (!enabled.count(p.id)) continue;
        if (p.per_component && !p.accepts(single, c1)) return false;
        // P6's per-component half (the genus relation) prunes safely too.
        if (p.id == "P6") {
            for (int k : embedding_axes(c1)) {
                const auto [i, j] = other_axes(k);
                if (comp.g != quadric_genus(comp.e[i], comp.e[j])) return false;
            }
        }
    }
    return true;
}

}  // namespace detail

/// Enumerate candidate tuples for c1: every multiset of at most max_s
/// components inside the complete-intersection box (P1) and genus budget,
/// passing the enabled predicates, deduplicated under the stabilizer of c1
/// and deterministically ordered by (s, total multidegree, genera).
inline std::vector<CandidateTuple> enumerate_candidates(const Divisor3& c1, RankFilter filter,
                                                        const EnumerateOptions& opts = {}) {
    if (c1.a1 < 0 || c1.a2 < 0 || c1.a3 < 0 || (c1.a1 == 0 && c1.a2 == 0 && c1.a3 == 0))
        throw DomainError("enumerate_candidates: c1 entries must be >= 0 and not all zero");
    if (opts.max_s < 1) throw DomainError("enumerate_candidates: max_s must be >= 1");

    std::set<std::string> enabled;
    if (opts.predicate_ids) {
        for (const auto& id : *opts.predicate_ids) enabled.insert(predicate_by_id(id).id);
    } else {
        for (const auto& p : predicates())
            if (!p.rank2_only || filter == RankFilter::rank_two) enabled.insert(p.id);
    }
    if (filter == RankFilter::any_rank) enabled.erase("P2");

    const CurveClass box = ci_multidegree(c1);
    const Int budget = genus_budget(c1);

    std::vector<Component> types;
    for (Int e1 = 0; e1 <= box.e1; ++e1)
        for (Int e2 = 0; e2 <= box.e2; ++e2)
            for (Int e3 = 0; e3 <= box.e3; ++e3) {
                if (e1 == 0 && e2 == 0 && e3 == 0) continue;
                for (Int g = 0; g <= budget; ++g) {
                    const Component comp{CurveClass{e1, e2, e3}, g, true};
                    if (detail::component_passes_enabled(comp, c1, enabled))
                        types.push_back(comp);
                }
            }

    std::map<std::vector<detail::ComponentKey>, CurveData> seen;
    std::vector<Component> stack;

    const std::function<void(std::size_t, CurveClass, Int)> dfs =
        [&](std::size_t start, CurveClass used, Int genus_used) {
            if (!stack.empty()) {
                const CurveData curve{stack};
                bool ok = true;
                for (const auto& p : predicates()) {
                    if (!enabled.count(p.id)) continue;
                    if (!p.accepts(curve, c1)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    CurveData canon{canonical_components(curve.components, c1)};
                    seen.emplace(detail::curve_key(canon.components), std::move(canon));
                }
            }
            if (stack.size() >= static_cast<std::size_t>(opts.max_s)) return;
            for (std::size_t idx = start; idx < types.size(); ++idx) {
                const Component& t = types[idx];
                if (used.e1 + t.e.e1 > box.e1 || used.e2 + t.e.e2 > box.e2 ||
                    used.e3 + t.e.e3 > box.e3 || genus_used + t.g > budget)
                    continue;
                stack.push_back(t);
                dfs(idx, used + t.e, genus_used + t.g);
                stack.pop_back();
            }
        };
    dfs(0, CurveClass{}, 0);

    std::vector<CandidateTuple> out;
    out.reserve(seen.size());
    for (const auto& [key, curve] : seen) {
        CandidateTuple tuple;
        tuple.curve = curve;
        bool spanned = true;
        for (const auto& comp : curve.components)
            spanned = spanned && spanned_on_component(comp, c1);
        tuple.ranks = spanned ? rank_range(curve, c1) : RankRange{0, 0, false};
        tuple.c2 = total_multidegree(curve);
        tuple.c3 = c3_of_hs_bundle(curve, c1);
        tuple.canonical_form = canonical_form_string(curve);
        out.push_back(std::move(tuple));
    }
    std::sort(out.begin(), out.end(), [](const CandidateTuple& a, const CandidateTuple& b) {
        const auto key = [](const CandidateTuple& t) {
            return std::make_tuple(t.curve.components.size(),
                                   detail::curve_key(t.curve.components));
        };
        return key(a) < key(b);
    });
    return out;
}

/// Admissible ranks for one enumerated candidate: delegates to the
/// curve-level rank range.
inline RankRange rank_table(const Divisor3& c1, const CandidateTuple& candidate) {
    return rank_range(candidate.curve, c1);
}

/// Existence range over all candidate curves for a c1 with every entry
/// positive: the maximum is attained by the full complete-intersection
/// curve, and rank 2 is reached exactly when c1 = A + B with A, B nonzero
/// and effective (witnessed by the split bundle O(A) + O(B), whose
/// dependency curve is not the complete intersection).
inline RankRange c1_rank_bounds(const Divisor3& c1) {
    if (c1.a1 < 1 || c1.a2 < 1 || c1.a3 < 1)
        throw DomainError("c1_rank_bounds requires every entry of c1 to be positive");
    const RankRange ci = rank_range(ci_curve(c1), c1);
    const bool split = checked_add(checked_add(c1.a1, c1.a2), c1.a3) >= 2;
    return RankRange{split ? 2 : ci.min_rank, ci.max_rank, split};
}

struct AuditMatch {
    FixtureRow row;
    CandidateTuple survivor;
    RankRange reported;  // survivor range after mode adjustment
};

struct AuditMissing {
    FixtureRow row;
    std::string reason;
};

struct AuditExtra {
    CandidateTuple survivor;
    RankRange reported;
    std::string annotation;
};

struct AuditReport {
    std::string fixture_id;
    Divisor3 c1;
    AuditMode mode = AuditMode::all;
    std::vector<CandidateTuple> survivors;
    std::vector<FixtureRow> paper_rows;
    std::vector<AuditMatch> matched;
    std::vector<AuditMissing> missing;
    std::vector<AuditExtra> extras;
};

namespace detail {

inline std::vector<Int> sorted_genera(const std::vector<Component>& comps) {
    std::vector<Int> g;
    g.reserve(comps.size());
    for (const auto& c : comps) g.push_back(c.g);
    std::sort(g.begin(), g.end());
    return g;
}

inline std::vector<Int> sorted_copy(std::vector<Int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Whether a table entry (s, e, genera, optional components) names the
/// survivor's curve up to the stabilizer of c1.
inline bool tuple_names_survivor(int s, const CurveClass& e, const std::vector<Int>& genera,
                                 const std::vector<CurveClass>& components,
                                 const CandidateTuple& survivor, const Divisor3& c1) {
    if (s != survivor.s()) return false;
    if (!genera.empty() &&
        sorted_copy(genera) != sorted_genera(survivor.curve.components))
        return false;
    if (!components.empty()) {
        std::vector<Component> comps;
        for (std::size_t k = 0; k < components.size(); ++k)
            comps.push_back(Component{components[k], genera.empty() ? 0 : genera[k], true});
        return canonical_components(comps, c1) == survivor.curve.components;
    }
    for (const auto& sigma : stabilizer(c1))
        if (e.permuted(sigma) == survivor.c2) return true;
    return false;
}

inline std::string format_range(const RankRange& r) {
    return std::to_string(r.min_rank) + ".." + std::to_string(r.max_rank);
}

}  // namespace detail

/// Replay one bundled (or overridden) table: enumerate candidates in the
/// table's mode, match every table row against a survivor (curve data and
/// rank range must both agree), and annotate surviving non-rows from the
/// exclusion ledger.
inline AuditReport audit(const Divisor3& c1, const std::string& fixture_id) {
    const std::vector<FixtureDoc> docs = load_fixture(fixture_id);
    const FixtureDoc* doc = nullptr;
    for (const auto& d : docs)
        if (d.c1 == c1) doc = &d;
    if (doc == nullptr)
        throw DomainError("fixture \"" + fixture_id + "\" has no table for c1 = (" +
                          std::to_string(c1.a1) + "," + std::to_string(c1.a2) + "," +
                          std::to_string(c1.a3) + ")");

    AuditReport report;
    report.fixture_id = fixture_id;
    report.c1 = c1;
    report.mode = doc->mode;
    report.paper_rows = doc->rows;

    const RankFilter filter =
        doc->mode == AuditMode::rank2 ? RankFilter::rank_two : RankFilter::any_rank;
    std::vector<CandidateTuple> survivors = enumerate_candidates(c1, filter);
    if (doc->mode == AuditMode::higher) {
        std::erase_if(survivors, [](const CandidateTuple& t) { return t.ranks.max_rank < 3; });
    }
    report.survivors = survivors;

    const auto reported_range = [&](const CandidateTuple& t) {
        RankRange r = t.ranks;
        if (doc->mode == AuditMode::higher && r.min_rank < 3) {
            r.min_rank = 3;
            r.rank2_allowed = false;
        }
        return r;
    };

    std::vector<bool> consumed(survivors.size(), false);
    for (const FixtureRow& row : doc->rows) {
        bool found = false;
        for (std::size_t i = 0; i < survivors.size() && !found; ++i) {
            if (!detail::tuple_names_survivor(row.s, row.e, row.genera, row.components,
                                              survivors[i], c1))
                continue;
            found = true;
            const RankRange got = reported_range(survivors[i]);
            if (got.min_rank == row.rank_min && got.max_rank == row.rank_max) {
                consumed[i] = true;
                report.matched.push_back({row, survivors[i], got});
            } else {
                report.missing.push_back(
                    {row, "rank range mismatch: table says " + std::to_string(row.rank_min) +
                              ".." + std::to_string(row.rank_max) + ", computed " +
                              detail::format_range(got)});
            }
        }
        if (!found)
            report.missing.push_back({row, "no surviving candidate matches this row"});
    }

    for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (consumed[i]) continue;
        std::string annotation = "unexplained";
        for (const FixtureExclusion& ex : doc->exclusions) {
            if (detail::tuple_names_survivor(ex.s, ex.e, ex.genera, ex.components,
                                             survivors[i], c1)) {
                annotation = "excluded in paper by non-numeric argument: " + ex.reason + " [" +
                             ex.paper_ref + "]";
                break;
            }
        }
        report.extras.push_back({survivors[i], reported_range(survivors[i]), annotation});
    }
    return report;
}

inline void to_json(Json& j, const CandidateTuple& t) {
    j = Json{{"s", t.s()},           {"curve", t.curve},
             {"c2", t.c2},           {"c3", t.c3},
             {"ranks", t.ranks},     {"canonical_form", t.canonical_form}};
}

inline void to_json(Json& j, const AuditMatch& m) {
    j = Json{{"row", m.row}, {"survivor", m.survivor}, {"reported", m.reported}};
}

inline void to_json(Json& j, const AuditMissing& m) {
    j = Json{{"row", m.row}, {"reason", m.reason}};
}

inline void to_json(Json& j, const AuditExtra& e) {
    j = Json{{"survivor", e.survivor}, {"reported", e.reported}, {"annotation", e.annotation}};
}

inline void to_json(Json& j, const AuditReport& r) {
    j = Json{{"fixture", r.fixture_id}, {"c1", r.c1},
             {"mode", to_string(r.mode)}, {"survivors", r.survivors},
             {"rows", r.paper_rows},      {"matched", r.matched},
             {"missing", r.missing},      {"extras", r.extras}};
}

}  // namespace segre
