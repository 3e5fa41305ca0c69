#pragma once

/// JSON adapters for the core types.  Arrays carry the graded data
/// (divisors, curve classes, cohomology vectors, Chow coefficients in the
/// (degree, lexicographic) basis order); structs become objects.  nlohmann
/// objects keep their keys sorted, so dump() output is canonical and stable
/// under re-serialization.

#include <json.hpp>

#include "segre/bundles.hpp"
#include "segre/chow.hpp"
#include "segre/cohomology.hpp"
#include "segre/curves.hpp"
#include "segre/ints.hpp"

namespace segre {

using Json = nlohmann::json;

namespace detail {

inline Int int_at(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
    return j.get<Int>();
}

inline std::array<Int, 3> triple(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw DomainError(std::string(what) + " must be an array of three integers");
    return {int_at(j[0], what), int_at(j[1], what), int_at(j[2], what)};
}

}  // namespace detail

inline void to_json(Json& j, const Divisor3& d) { j = Json::array({d.a1, d.a2, d.a3}); }

inline void from_json(const Json& j, Divisor3& d) {
    const auto a = detail::triple(j, "divisor");
    d = {a[0], a[1], a[2]};
}

inline void to_json(Json& j, const CurveClass& e) { j = Json::array({e.e1, e.e2, e.e3}); }

inline void from_json(const Json& j, CurveClass& e) {
    const auto a = detail::triple(j, "curve class");
    e = {a[0], a[1], a[2]};
}

inline void to_json(Json& j, const ChowClass& x) { j = to_coefficients(x); }

inline void from_json(const Json& j, ChowClass& x) {
    if (!j.is_array() || j.size() != 8)
        throw DomainError("Chow class must be an array of eight integers");
    std::array<Int, 8> a;
    for (std::size_t i = 0; i < 8; ++i) a[i] = detail::int_at(j[i], "Chow coefficient");
    x = from_coefficients(a);
}

inline void to_json(Json& j, const CohomologyVector& v) {
    j = Json::array({v.h[0], v.h[1], v.h[2], v.h[3]});
}

inline void to_json(Json& j, const Component& c) {
    j = Json{{"e", c.e}, {"g", c.g}};
    if (!c.assume_trivial) j["assume_trivial"] = false;
}

inline void from_json(const Json& j, Component& c) {
    if (!j.is_object() || !j.contains("e") || !j.contains("g"))
        throw DomainError("curve component must be an object with \"e\" and \"g\"");
    c.e = j.at("e").get<CurveClass>();
    c.g = detail::int_at(j.at("g"), "genus");
    c.assume_trivial = j.value("assume_trivial", true);
}

inline void to_json(Json& j, const CurveData& c) { j = Json{{"components", c.components}}; }

inline void from_json(const Json& j, CurveData& c) {
    if (!j.is_object() || !j.contains("components") || !j.at("components").is_array())
        throw DomainError("curve data must be an object with a \"components\" array");
    c.components = j.at("components").get<std::vector<Component>>();
}

inline void to_json(Json& j, const RankRange& r) {
    j = Json{{"min_rank", r.min_rank}, {"max_rank", r.max_rank}, {"rank2_allowed", r.rank2_allowed}};
}

inline void to_json(Json& j, const ChernData& d) {
    j = Json{{"rank", d.rank}, {"c1", d.c1}, {"c2", d.c2}, {"c3", d.c3}};
    if (d.h0) j["h0"] = *d.h0;
}

inline void to_json(Json& j, const ExtensionInfo& i) {
    j = Json{{"a", i.a}, {"b", i.b}, {"ext1_a_by_b", i.ext1_a_by_b}, {"ext1_b_by_a", i.ext1_b_by_a}};
}

}  // namespace segre
