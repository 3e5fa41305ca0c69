#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "expr_gen.hpp"
#include "segre/parser.hpp"
#include "support.hpp"

using namespace segre;
using segre::testing::random_expr;
using segre::testing::Rng;

namespace {

// Offset and expected-token set of the failure a text must produce.
void check_error(const std::string& text, std::size_t offset,
                 const std::vector<std::string>& expected) {
    CAPTURE(text);
    try {
        parse_expr(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.offset == offset);
        REQUIRE(e.expected == expected);
    }
}

}  // namespace

TEST_CASE("parsing canonical forms") {
    const ExprPtr s = parse_expr("O(1,0,0) (+) O(0,1,1)");
    REQUIRE(*s == *sum({line({1, 0, 0}), line({0, 1, 1})}));
    REQUIRE_FALSE(*s == *sum({line({0, 1, 1}), line({1, 0, 0})}));

    REQUIRE(*parse_expr("twist(kerev(1,1,1); 0,0,-1)") ==
            *twist(kerev({1, 1, 1}), {0, 0, -1}));
    REQUIRE(*parse_expr("dual(O(2,0,0))") == *dual(line({2, 0, 0})));
    REQUIRE(*parse_expr("O(-2,1,0)") == *line({-2, 1, 0}));

    PullbackData single;
    single.factors = FactorSet::of({3});
    single.c1 = {1, 0};
    REQUIRE(*parse_expr("p3*(1)") == *pullback(single));

    PullbackData quadric;
    quadric.factors = FactorSet::of({2, 3});
    quadric.rank = 2;
    quadric.c1 = {2, 1};
    quadric.c2_degree = 3;
    REQUIRE(*parse_expr("p23*(2; 2,1; 3)") == *pullback(quadric));

    const CurveData conics{{{{0, 1, 1}, 0}, {{0, 1, 1}, 0}}};
    const ExprPtr h = parse_expr(
        R"(hs({"components":[{"e":[0,1,1],"g":0},{"e":[0,1,1],"g":0}]}; 2,1,1; 2))");
    REQUIRE(*h == *hs(conics, {2, 1, 1}, 2));
    REQUIRE(chern(h).c2 == CurveClass{0, 2, 2});
}

TEST_CASE("whitespace never changes a parse") {
    const ExprPtr canonical = parse_expr("O(1,0,0) (+) dual(twist(O(2,0,0); 0,1,0))");
    REQUIRE(*parse_expr("O( 1 , 0 , 0 )(+)dual( twist( O(2,0,0) ; 0, 1 ,0 ) )") == *canonical);
    REQUIRE(*parse_expr("  O(1,0,0)\n(+)\tdual(twist(O(2,0,0);0,1,0))  ") == *canonical);
    // the sum token itself is a literal three-byte unit
    check_error("O(0,0,1) ( +) O(1,0,0)", 10, {"(+)", "end of input"});
}

TEST_CASE("parse failures carry offsets and expected tokens") {
    check_error("O(1,0", 6, {",", ")"});
    check_error("O(1,0,0", 8, {",", ")"});
    check_error("O(1,2)", 6, {","});
    check_error("O(1,0,0,2)", 8, {")"});
    check_error("O(a,1,1)", 3, {"integer"});
    check_error("", 1, {"O", "twist", "dual", "kerev", "p", "hs"});
    check_error("spin(1,1,1)", 1, {"O", "twist", "dual", "kerev", "p", "hs"});
    check_error("dual()", 6, {"O", "twist", "dual", "kerev", "p", "hs"});
    check_error("O(1,1,1) + O(2,0,0)", 10, {"(+)", "end of input"});
    check_error("p4*(1)", 2, {"1", "2", "3", "12", "13", "23"});
    check_error("p21*(1; 1,1; 0)", 2, {"1", "2", "3", "12", "13", "23"});
    check_error("twist(O(1,1,1), 0,0,1)", 15, {";"});
    check_error("hs(xyz; 1,1,1; 2)", 4, {"{"});
    check_error(R"(hs({"components":[)", 4, {"balanced JSON object"});
    check_error(R"(hs({"components";[]}; 1,1,1; 2))", 4, {"curve data JSON object"});
}

TEST_CASE("invalid payloads surface as domain errors, not parse errors") {
    REQUIRE_THROWS_AS(parse_expr("kerev(0,0,0)"), DomainError);
    REQUIRE_THROWS_AS(parse_expr("p12*(1; 2,1; 3)"), DomainError);
    REQUIRE_THROWS_AS(parse_expr(R"(hs({"x":1}; 1,1,1; 2))"), DomainError);
    // curve that only supports ranks 3..7
    REQUIRE_THROWS_AS(parse_expr(R"(hs({"components":[{"e":[2,2,2],"g":1}]}; 1,1,1; 2))"),
                      DomainError);
    REQUIRE_THROWS_AS(parse_expr("O(99999999999999999999,0,0)"), OverflowError);
}

TEST_CASE("printing produces the canonical form") {
    REQUIRE(print_expr(sum({line({1, 0, 0}), line({0, 1, 1})})) == "O(1,0,0) (+) O(0,1,1)");
    REQUIRE(print_expr(twist(kerev({1, 1, 1}), {0, 0, -1})) == "twist(kerev(1,1,1); 0,0,-1)");
    REQUIRE(print_expr(dual(sum({line({1, 0, 0}), line({0, 1, 0})}))) ==
            "dual(O(1,0,0) (+) O(0,1,0))");
    PullbackData quadric;
    quadric.factors = FactorSet::of({1, 3});
    quadric.rank = 2;
    quadric.c1 = {1, -1};
    quadric.c2_degree = 4;
    REQUIRE(print_expr(pullback(quadric)) == "p13*(2; 1,-1; 4)");
    REQUIRE(print_expr(hs(CurveData{{{{0, 1, 1}, 0}}}, {1, 1, 1}, 2)) ==
            R"(hs({"components":[{"e":[0,1,1],"g":0}]}; 1,1,1; 2))");
}

TEST_CASE("parse of print is the identity") {
    Rng rng(96111507u);
    for (int i = 0; i < 1200; ++i) {
        const ExprPtr e = random_expr(rng, 3);
        const std::string text = print_expr(e);
        CAPTURE(text);
        const ExprPtr back = parse_expr(text);
        REQUIRE(*back == *e);
        REQUIRE(print_expr(back) == text);
        REQUIRE(chern(back) == chern(e));
    }
}
