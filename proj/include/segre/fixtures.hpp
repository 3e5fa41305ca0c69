#pragma once

/// Bundled classification tables ("fixtures") with their exclusion ledgers.
///
/// Each fixture id names one or more table documents.  A document records,
/// for a single first Chern class c1, the curve tuples (s; e1,e2,e3) with
/// component genera and admissible rank range as printed in the source,
/// together with an exclusion ledger for tuples that pass every numeric
/// predicate but are ruled out by a non-numeric (geometric) argument.
///
/// Document schema (JSON):
///   {
///     "c1": [2,1,1],
///     "mode": "rank2" | "higher" | "all",
///     "rows": [
///       {"s": 3, "e": [0,3,3], "g": [0,0,0],
///        "components": [[0,1,1],[0,1,1],[0,1,1]],       // optional
///        "rank_min": 2, "rank_max": 4, "paper_ref": "..."}
///     ],
///     "exclusions": [
///       {"tuple": {"s": 4, "e": [0,4,4], "g": [0,0,0,0]},
///        "reason": "...", "paper_ref": "..."}
///     ]
///   }
///
/// "g" lists the component genera in order (a bare integer is accepted and
/// is applied to every component).  "components" pins the per-component
/// multidegrees when the total alone would be ambiguous.  "mode" selects
/// which enumerated candidates an audit compares against the table:
///   - "rank2":  candidates admitting a rank-2 witness;
///   - "higher": candidates whose rank range reaches 3, with the reported
///               range clipped below at 3;
///   - "all":    every candidate, full rank ranges.
///
/// The environment variable SEGRE_FIXTURES may name a directory containing
/// "<id>.json" files (one document or an array of documents); when present
/// and readable, such a file replaces the bundled table for that id, so
/// edited tables can be audited without rebuilding.

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "segre/curves.hpp"
#include "segre/serialize.hpp"

namespace segre {

enum class AuditMode { rank2, higher, all };

inline std::string to_string(AuditMode m) {
    switch (m) {
        case AuditMode::rank2: return "rank2";
        case AuditMode::higher: return "higher";
        default: return "all";
    }
}

inline AuditMode audit_mode_from_string(const std::string& s) {
    if (s == "rank2") return AuditMode::rank2;
    if (s == "higher") return AuditMode::higher;
    if (s == "all") return AuditMode::all;
    throw DomainError("unknown fixture mode \"" + s + "\" (expected rank2, higher, or all)");
}

struct FixtureRow {
    int s = 1;
    CurveClass e;
    std::vector<Int> genera;             // one entry per component
    Int rank_min = 0;
    Int rank_max = 0;
    std::vector<CurveClass> components;  // optional; empty when unspecified
    std::string paper_ref;

    bool operator==(const FixtureRow&) const = default;
};

struct FixtureExclusion {
    int s = 1;
    CurveClass e;
    std::vector<Int> genera;             // optional; empty matches any genera
    std::vector<CurveClass> components;  // optional
    std::string reason;
    std::string paper_ref;

    bool operator==(const FixtureExclusion&) const = default;
};

struct FixtureDoc {
    Divisor3 c1;
    AuditMode mode = AuditMode::all;
    std::vector<FixtureRow> rows;
    std::vector<FixtureExclusion> exclusions;
};

namespace detail {

inline std::vector<Int> genera_from_json(const Json& j, int s, const std::string& where) {
    std::vector<Int> out;
    if (j.is_number_integer()) {
        out.assign(static_cast<std::size_t>(s), j.get<Int>());
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (!v.is_number_integer())
                throw DomainError(where + ": genus entries must be integers");
            out.push_back(v.get<Int>());
        }
    } else {
        throw DomainError(where + ": \"g\" must be an integer or an array of integers");
    }
    if (out.size() != static_cast<std::size_t>(s))
        throw DomainError(where + ": \"g\" must list one genus per component (s = " +
                          std::to_string(s) + ")");
    for (Int g : out)
        if (g < 0) throw DomainError(where + ": genus must be >= 0");
    return out;
}

inline std::vector<CurveClass> components_from_json(const Json& j, int s, const CurveClass& total,
                                                    const std::string& where) {
    std::vector<CurveClass> out;
    for (const auto& v : j) out.push_back(v.get<CurveClass>());
    if (out.size() != static_cast<std::size_t>(s))
        throw DomainError(where + ": \"components\" must list one multidegree per component");
    CurveClass sum;
    for (const auto& e : out) sum = sum + e;
    if (!(sum == total))
        throw DomainError(where + ": component multidegrees must sum to \"e\"");
    return out;
}

}  // namespace detail

inline void from_json(const Json& j, FixtureRow& row) {
    if (!j.is_object()) throw DomainError("fixture row must be a JSON object");
    row.s = j.at("s").get<int>();
    if (row.s < 1) throw DomainError("fixture row: s must be >= 1");
    row.e = j.at("e").get<CurveClass>();
    row.genera = detail::genera_from_json(j.at("g"), row.s, "fixture row");
    row.rank_min = j.at("rank_min").get<Int>();
    row.rank_max = j.at("rank_max").get<Int>();
    if (row.rank_min < 2 || row.rank_max < row.rank_min)
        throw DomainError("fixture row: rank range must satisfy 2 <= rank_min <= rank_max");
    row.components.clear();
    if (j.contains("components"))
        row.components = detail::components_from_json(j.at("components"), row.s, row.e,
                                                      "fixture row");
    row.paper_ref = j.at("paper_ref").get<std::string>();
}

inline void to_json(Json& j, const FixtureRow& row) {
    j = Json{{"s", row.s},       {"e", row.e},
             {"g", row.genera},  {"rank_min", row.rank_min},
             {"rank_max", row.rank_max}, {"paper_ref", row.paper_ref}};
    if (!row.components.empty()) j["components"] = row.components;
}

inline void from_json(const Json& j, FixtureExclusion& ex) {
    if (!j.is_object() || !j.contains("tuple"))
        throw DomainError("fixture exclusion must be an object with a \"tuple\" key");
    const Json& t = j.at("tuple");
    ex.s = t.at("s").get<int>();
    if (ex.s < 1) throw DomainError("fixture exclusion: s must be >= 1");
    ex.e = t.at("e").get<CurveClass>();
    ex.genera.clear();
    if (t.contains("g")) ex.genera = detail::genera_from_json(t.at("g"), ex.s, "fixture exclusion");
    ex.components.clear();
    if (t.contains("components"))
        ex.components = detail::components_from_json(t.at("components"), ex.s, ex.e,
                                                     "fixture exclusion");
    ex.reason = j.at("reason").get<std::string>();
    ex.paper_ref = j.at("paper_ref").get<std::string>();
}

inline void to_json(Json& j, const FixtureExclusion& ex) {
    Json tuple{{"s", ex.s}, {"e", ex.e}};
    if (!ex.genera.empty()) tuple["g"] = ex.genera;
    if (!ex.components.empty()) tuple["components"] = ex.components;
    j = Json{{"tuple", tuple}, {"reason", ex.reason}, {"paper_ref", ex.paper_ref}};
}

inline void from_json(const Json& j, FixtureDoc& doc) {
    if (!j.is_object()) throw DomainError("fixture document must be a JSON object");
    doc.c1 = j.at("c1").get<Divisor3>();
    doc.mode = j.contains("mode") ? audit_mode_from_string(j.at("mode").get<std::string>())
                                  : AuditMode::all;
    doc.rows.clear();
    for (const auto& r : j.at("rows")) doc.rows.push_back(r.get<FixtureRow>());
    doc.exclusions.clear();
    if (j.contains("exclusions"))
        for (const auto& e : j.at("exclusions")) doc.exclusions.push_back(e.get<FixtureExclusion>());
}

inline void to_json(Json& j, const FixtureDoc& doc) {
    j = Json{{"c1", doc.c1},
             {"mode", to_string(doc.mode)},
             {"rows", doc.rows},
             {"exclusions", doc.exclusions}};
}

/// Raw JSON text of the bundled classification tables, keyed by fixture id.
inline const std::map<std::string, std::string>& bundled_fixture_json() {
    static const std::map<std::string, std::string> tables = {
        {"thm-4.9-rank2", R"json(
{
  "c1": [2, 1, 1],
  "mode": "rank2",
  "rows": [
    {"s": 3, "e": [0, 3, 3], "g": [0, 0, 0],
     "components": [[0, 1, 1], [0, 1, 1], [0, 1, 1]],
     "rank_min": 2, "rank_max": 4,
     "paper_ref": "Theorem 4.9, non-connected list (1): (3;0,3,3), 2 <= r <= 4"},
    {"s": 2, "e": [0, 2, 2], "g": [0, 0],
     "components": [[0, 1, 1], [0, 1, 1]],
     "rank_min": 2, "rank_max": 3,
     "paper_ref": "Theorem 4.9, non-connected list (2): (2;0,2,2), 2 <= r <= 3"},
    {"s": 1, "e": [0, 1, 1], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 4.9, connected list (1): (0;0,1,1), E = O(1,1,1)+O(1,0,0); omitted from Theorem 1.1(i)"},
    {"s": 1, "e": [2, 1, 1], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 4.9, connected list (2): (0;2,1,1), the twisted Ulrich bundle U(0,0,-1)"},
    {"s": 1, "e": [1, 1, 1], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 4.9, connected list (3)(i): (0;1,1,1), E = O(1,1,0)+O(1,0,1)"},
    {"s": 1, "e": [1, 2, 0], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 4.9, connected list (3)(ii): (0;1,2,0), E = O(2,1,0)+O(0,0,1)"}
  ],
  "exclusions": [
    {"tuple": {"s": 4, "e": [0, 4, 4], "g": [0, 0, 0, 0],
               "components": [[0, 1, 1], [0, 1, 1], [0, 1, 1], [0, 1, 1]]},
     "reason": "disconnected curves have 2 <= s <= 3: each component is a (0,1,1) conic and a fourth disjoint conic is ruled out by arithmetic-genus bookkeeping for C inside the complete intersection Y",
     "paper_ref": "Lemma 4.1(i) and its proof"}
  ]
}
)json"},
        {"thm-5.5-rank2", R"json(
{
  "c1": [2, 2, 1],
  "mode": "rank2",
  "rows": [
    {"s": 2, "e": [2, 0, 4], "g": [0, 0],
     "components": [[1, 0, 2], [1, 0, 2]],
     "rank_min": 2, "rank_max": 3,
     "paper_ref": "Theorem 5.5, non-connected list (1): (2;2,0,4), two disjoint rational (1,0,2) components; r <= 3 for s = 2 by Remark 5.6"},
    {"s": 3, "e": [3, 0, 6], "g": [0, 0, 0],
     "components": [[1, 0, 2], [1, 0, 2], [1, 0, 2]],
     "rank_min": 2, "rank_max": 4,
     "paper_ref": "Theorem 5.5, non-connected list (2): (3;3,0,6); r <= 4 for s = 3 by Remark 5.6"},
    {"s": 1, "e": [2, 2, 0], "g": [1],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 5.5, connected list (1): C elliptic with (e1,e2,e3) = (2,2,0)"},
    {"s": 1, "e": [0, 1, 2], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 5.5, connected list (2)(i): E = O(1,2,1)+O(1,0,0)"},
    {"s": 1, "e": [1, 1, 2], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 5.5, connected list (2)(ii): E = O(1,1,1)+O(1,1,0)"},
    {"s": 1, "e": [2, 1, 2], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 5.5, connected list (2)(iii): extension of O(1,2,0) by O(1,0,1)"},
    {"s": 1, "e": [3, 1, 2], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 5.5, connected list (2)(iv)"},
    {"s": 1, "e": [4, 1, 2], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Theorem 5.5, connected list (2)(v)"}
  ],
  "exclusions": [
    {"tuple": {"s": 4, "e": [4, 0, 8], "g": [0, 0, 0, 0],
               "components": [[1, 0, 2], [1, 0, 2], [1, 0, 2], [1, 0, 2]]},
     "reason": "step (f) Claim proves s <= 3: with s = 4 the complete intersection Y = C u D would have 8 smooth rational components and p_a(Y) <= 1, contradicting p_a(Y) = 9",
     "paper_ref": "Theorem 5.5 proof, step (f) Claim"}
  ]
}
)json"},
        {"prop-3.5", R"json(
{
  "c1": [1, 1, 1],
  "mode": "all",
  "rows": [
    {"s": 1, "e": [0, 1, 1], "g": [0],
     "rank_min": 2, "rank_max": 2,
     "paper_ref": "Proposition 3.1: C a smooth conic of multidegree (0,1,1), E = O(1,0,0)+O(0,1,1) up to permutation"},
    {"s": 1, "e": [1, 1, 1], "g": [0],
     "rank_min": 3, "rank_max": 3,
     "paper_ref": "Proposition 3.5(ii): (0;1,1,1;3), E = O(1,0,0)+O(0,1,0)+O(0,0,1)"},
    {"s": 1, "e": [2, 1, 1], "g": [0],
     "rank_min": 3, "rank_max": 4,
     "paper_ref": "Proposition 3.5(iii): (0;2,1,1; 3 <= r <= 4), up to permutations on (e1,e2,e3)"},
    {"s": 1, "e": [2, 2, 2], "g": [1],
     "rank_min": 3, "rank_max": 7,
     "paper_ref": "Proposition 3.5(i): (1;2,2,2; 3 <= r <= 7), C = Y elliptic"}
  ],
  "exclusions": []
}
)json"},
        {"thm-1.1-higher", R"json(
[
  {
    "c1": [1, 1, 1],
    "mode": "higher",
    "rows": [
      {"s": 1, "e": [1, 1, 1], "g": [0],
       "rank_min": 3, "rank_max": 3,
       "paper_ref": "Proposition 3.5(ii): (0;1,1,1;3); Theorem 1.1(iii) prints (1;1,1,1; 3 <= r <= 7), conflating this row with Proposition 3.5(i)"},
      {"s": 1, "e": [2, 1, 1], "g": [0],
       "rank_min": 3, "rank_max": 4,
       "paper_ref": "Proposition 3.5(iii): (0;2,1,1; 3 <= r <= 4) up to permutations; omitted from Theorem 1.1(iii)"},
      {"s": 1, "e": [2, 2, 2], "g": [1],
       "rank_min": 3, "rank_max": 7,
       "paper_ref": "Proposition 3.5(i): (1;2,2,2; 3 <= r <= 7), C = Y; this is the range Theorem 1.1(iii) prints"}
    ],
    "exclusions": []
  },
  {
    "c1": [2, 1, 1],
    "mode": "higher",
    "rows": [
      {"s": 3, "e": [0, 3, 3], "g": [0, 0, 0],
       "components": [[0, 1, 1], [0, 1, 1], [0, 1, 1]],
       "rank_min": 3, "rank_max": 4,
       "paper_ref": "Theorem 1.1(iv): (3;0,3,3; 3 <= r <= 4); full range 2 <= r <= 4 in Theorem 4.9"},
      {"s": 2, "e": [0, 2, 2], "g": [0, 0],
       "components": [[0, 1, 1], [0, 1, 1]],
       "rank_min": 3, "rank_max": 3,
       "paper_ref": "Theorem 4.9, non-connected list (2): (2;0,2,2) with r = 3 realized by O(1,0,0)+O(1,0,0)+O(0,1,1); omitted from Theorem 1.1(iv)"},
      {"s": 1, "e": [2, 2, 2], "g": [1],
       "rank_min": 3, "rank_max": 5,
       "paper_ref": "Theorem 4.9, connected list (4): (1;2,2,2); Theorem 1.1(iv), 3 <= r <= 5"},
      {"s": 1, "e": [2, 3, 3], "g": [2],
       "rank_min": 3, "rank_max": 8,
       "paper_ref": "Theorem 4.9, connected list (5): (2;2,3,3), first slot p_a(C) = 2; Theorem 1.1(iv), 3 <= r <= 8"},
      {"s": 1, "e": [2, 4, 4], "g": [3],
       "rank_min": 3, "rank_max": 11,
       "paper_ref": "Theorem 4.9, connected list (6): (3;2,4,4), p_a(C) = 3; Theorem 1.1(iv), 3 <= r <= 11"},
      {"s": 1, "e": [1, 2, 1], "g": [0],
       "rank_min": 3, "rank_max": 3,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (2,1); Theorem 1.1(iv) family (1;1,a,b), 3 <= r <= a+b"},
      {"s": 1, "e": [1, 3, 0], "g": [0],
       "rank_min": 3, "rank_max": 3,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (3,0); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 2, 2], "g": [0],
       "rank_min": 3, "rank_max": 4,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (2,2); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 3, 1], "g": [0],
       "rank_min": 3, "rank_max": 4,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (3,1); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 4, 0], "g": [0],
       "rank_min": 3, "rank_max": 4,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (4,0); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 3, 2], "g": [0],
       "rank_min": 3, "rank_max": 5,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (3,2); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 4, 1], "g": [0],
       "rank_min": 3, "rank_max": 5,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (4,1); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 3, 3], "g": [0],
       "rank_min": 3, "rank_max": 6,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (3,3); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 4, 2], "g": [0],
       "rank_min": 3, "rank_max": 6,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (4,2); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 4, 3], "g": [0],
       "rank_min": 3, "rank_max": 7,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (4,3); Theorem 1.1(iv) family (1;1,a,b)"},
      {"s": 1, "e": [1, 4, 4], "g": [0],
       "rank_min": 3, "rank_max": 8,
       "paper_ref": "Theorem 4.9, connected list (3) with (a,b) = (4,4); Theorem 1.1(iv) family (1;1,a,b)"}
    ],
    "exclusions": [
      {"tuple": {"s": 4, "e": [0, 4, 4], "g": [0, 0, 0, 0],
                 "components": [[0, 1, 1], [0, 1, 1], [0, 1, 1], [0, 1, 1]]},
       "reason": "disconnected curves have 2 <= s <= 3: a fourth disjoint (0,1,1) conic is ruled out by arithmetic-genus bookkeeping for C inside the complete intersection Y",
       "paper_ref": "Lemma 4.1(i) and its proof"}
    ]
  }
]
)json"}};
    return tables;
}

/// Parse one fixture file or bundled blob: a single document or an array.
inline std::vector<FixtureDoc> parse_fixture_docs(const std::string& text,
                                                  const std::string& where) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError(where + ": not valid JSON");
    std::vector<FixtureDoc> docs;
    if (j.is_array()) {
        for (const auto& d : j) docs.push_back(d.get<FixtureDoc>());
    } else {
        docs.push_back(j.get<FixtureDoc>());
    }
    if (docs.empty()) throw DomainError(where + ": no fixture documents");
    return docs;
}

/// Load the documents for a fixture id, honoring the SEGRE_FIXTURES
/// directory override.  Throws DomainError for unknown ids.
inline std::vector<FixtureDoc> load_fixture(const std::string& id) {
    if (const char* dir = std::getenv("SEGRE_FIXTURES"); dir != nullptr && *dir != '\0') {
        const std::string path = std::string(dir) + "/" + id + ".json";
        if (std::ifstream in{path}; in) {
            std::ostringstream text;
            text << in.rdbuf();
            return parse_fixture_docs(text.str(), path);
        }
    }
    const auto& tables = bundled_fixture_json();
    const auto it = tables.find(id);
    if (it == tables.end()) throw DomainError("unknown fixture id: " + id);
    return parse_fixture_docs(it->second, "fixture \"" + id + "\"");
}

/// Ids of the bundled fixtures, sorted.
inline std::vector<std::string> bundled_fixture_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, text] : bundled_fixture_json()) ids.push_back(id);
    return ids;
}

}  // namespace segre
