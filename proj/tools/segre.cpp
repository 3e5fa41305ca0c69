// Command-line calculator for curves and vector bundles on P^1 x P^1 x P^1:
// Chow-ring arithmetic, line-bundle cohomology, complete-intersection curve
// invariants, Chern data of bundle expressions, admissible rank ranges,
// candidate-curve classification, fixture audits, and the claims replay.
//
// Exit codes: 0 success, 1 domain error (valid syntax, impossible request),
// 2 parse error (malformed expression or arguments; messages carry 1-based
// byte offsets).

#include <CLI11.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segre/classifier.hpp"
#include "segre/parser.hpp"
#include "segre/verify.hpp"

namespace {

using namespace segre;

// ---------------------------------------------------------------------------
// Formatting

std::string fmt_divisor(const Divisor3& d) {
    return "(" + std::to_string(d.a1) + "," + std::to_string(d.a2) + "," +
           std::to_string(d.a3) + ")";
}

std::string fmt_bundle(const Divisor3& d) { return "O" + fmt_divisor(d); }

std::string fmt_curve_class(const CurveClass& e) {
    return "(" + std::to_string(e.e1) + "," + std::to_string(e.e2) + "," +
           std::to_string(e.e3) + ")";
}

std::string fmt_component(const Component& c) {
    return "(" + std::to_string(c.e.e1) + "," + std::to_string(c.e.e2) + "," +
           std::to_string(c.e.e3) + "|" + std::to_string(c.g) + ")";
}

std::string fmt_curve_data(const CurveData& c) {
    std::string out;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        if (i > 0) out += " + ";
        out += fmt_component(c.components[i]);
    }
    return out;
}

std::string fmt_genera(const std::vector<Int>& g) {
    std::string out = "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(g[i]);
    }
    return out + "]";
}

std::string fmt_bounds(const RankRange& r) {
    return std::to_string(r.min_rank) + " ≤ r ≤ " + std::to_string(r.max_rank);
}

// Coefficients in the reading order 1, t1, t2, t3, t1*t2, t1*t3, t2*t3, t1*t2*t3.
std::string fmt_coefficients(const ChowClass& x) {
    const auto a = to_coefficients(x);
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(a[i]);
    }
    return out + "]";
}

// Re-parseable pretty form, e.g. "1 + 4*t1 + 2*t2 + 2*t3 + 4*t1*t2".
std::string fmt_chow(const ChowClass& x) {
    static const std::array<const char*, 8> names = {"",      "t1",    "t2",      "t3",
                                                     "t1*t2", "t1*t3", "t2*t3",   "t1*t2*t3"};
    const auto a = to_coefficients(x);
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Int v = a[i];
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        if (v < 0) v = -v;
        if (names[i][0] == '\0')
            out += std::to_string(v);
        else if (v == 1)
            out += names[i];
        else
            out += std::to_string(v) + "*" + names[i];
    }
    return out.empty() ? "0" : out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Argument parsers (ParseError offsets are 1-based, matching the expression
// grammar's convention)

std::array<Int, 3> parse_triple(const std::string& s) {
    std::array<Int, 3> out{};
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    for (int i = 0; i < 3; ++i) {
        if (i > 0) {
            skip_ws();
            if (pos >= s.size() || s[pos] != ',') throw ParseError(pos + 1, {","});
            ++pos;
        }
        skip_ws();
        const std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        const auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, out[i]);
        if (ec != std::errc{} || ptr != s.data() + pos || pos == start)
            throw ParseError(start + 1, {"integer"});
    }
    skip_ws();
    if (pos != s.size()) throw ParseError(pos + 1, {"end of input"});
    return out;
}

Divisor3 parse_divisor(const std::string& s) {
    const auto a = parse_triple(s);
    return Divisor3{a[0], a[1], a[2]};
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        out.push_back(s.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chow-class expressions:
//
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" uint)?
//   atom   := uint | "t1" | "t2" | "t3" | "(" expr ")" | "-" atom

class ChowParser {
  public:
    explicit ChowParser(std::string_view text) : text_(text) {}

    ChowClass parse() {
        ChowClass v = expr();
        skip_ws();
        if (pos_ < text_.size()) fail({"+", "-", "*", "^", "end of input"});
        return v;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw ParseError(pos_ + 1, std::move(expected));
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ChowClass expr() {
        ChowClass v = term();
        while (true) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    ChowClass term() {
        ChowClass v = factor();
        while (eat('*')) v = v * factor();
        return v;
    }

    ChowClass factor() {
        const ChowClass v = atom();
        if (!eat('^')) return v;
        skip_ws();
        const Int e = integer();
        if (e > 64) throw DomainError("exponent " + std::to_string(e) + " is too large");
        ChowClass r = ChowClass::unit();
        for (Int i = 0; i < e; ++i) r = r * v;
        return r;
    }

    ChowClass atom() {
        skip_ws();
        if (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '(') {
                ++pos_;
                const ChowClass v = expr();
                if (!eat(')')) fail({")"});
                return v;
            }
            if (c == '-') {
                ++pos_;
                return ChowClass::zero() - atom();
            }
            if (c == 't') {
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] >= '1' && text_[pos_ + 1] <= '3') {
                    const int i = text_[pos_ + 1] - '0';
                    pos_ += 2;
                    return ChowClass::t(i);
                }
                fail({"t1", "t2", "t3"});
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::array<Int, 8> coeffs{};
                coeffs[0] = integer();
                return from_coefficients(coeffs);
            }
        }
        fail({"integer", "t1", "t2", "t3", "(", "-"});
    }

    Int integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail({"integer"});
        Int v{};
        const auto [ptr, ec] =
            std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc{} || ptr != text_.data() + pos_)
            throw DomainError("integer literal out of range");
        return v;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for curves and vector bundles on P^1 x P^1 x P^1"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of text");
    int exit_code = 0;

    // --- chow ---------------------------------------------------------------
    auto* chow_cmd = app.add_subcommand(
        "chow", "evaluate in the Chow ring Z[t1,t2,t3]/(t1^2, t2^2, t3^2)");
    chow_cmd->fallthrough();
    std::string chow_op, chow_text, chow_perm;
    chow_cmd->add_option("op", chow_op, "eval | degree | invert | permute")
        ->required()
        ->check(CLI::IsMember({"eval", "degree", "invert", "permute"}));
    chow_cmd->add_option("expr", chow_text, "class expression, e.g. \"(1+2*t1+t2+t3)^2\"")
        ->required();
    chow_cmd->add_option("perm", chow_perm,
                         "one-line permutation i1,i2,i3 (for `permute`), e.g. 2,3,1");
    chow_cmd->callback([&] {
        const ChowClass x = ChowParser(chow_text).parse();
        if (chow_op == "degree") {
            if (as_json)
                emit(Json{{"degree", x.degree()}});
            else
                std::cout << "degree = " << x.degree() << "\n";
            return;
        }
        ChowClass result = x;
        const char* label = "class";
        if (chow_op == "invert") {
            result = invert_unit(x);
            label = "inverse";
        } else if (chow_op == "permute") {
            if (chow_perm.empty())
                throw DomainError("`chow permute` needs a permutation argument, e.g. 2,3,1");
            const auto p = parse_triple(chow_perm);
            result = x.permuted(Permutation::of(static_cast<int>(p[0]), static_cast<int>(p[1]),
                                                static_cast<int>(p[2])));
            label = "image";
        }
        if (as_json)
            emit(Json{{"op", chow_op}, {"pretty", fmt_chow(result)}, {"coefficients", result}});
        else
            std::cout << label << " = " << fmt_chow(result) << "\n"
                      << "coefficients = " << fmt_coefficients(result) << "\n";
    });

    // --- coh ----------------------------------------------------------------
    auto* coh_cmd =
        app.add_subcommand("coh", "cohomology of the line bundle O(a1,a2,a3); "
                                  "use `--` before negative entries");
    coh_cmd->fallthrough();
    Int coh_a1 = 0, coh_a2 = 0, coh_a3 = 0;
    coh_cmd->add_option("a1", coh_a1)->required();
    coh_cmd->add_option("a2", coh_a2)->required();
    coh_cmd->add_option("a3", coh_a3)->required();
    coh_cmd->callback([&] {
        const Divisor3 d{coh_a1, coh_a2, coh_a3};
        const CohomologyVector v = h_line(d);
        if (as_json) {
            emit(Json{{"d", d}, {"h", v}, {"chi", euler_char(d)}});
        } else {
            std::cout << "h = [" << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3]
                      << "]\n"
                      << "chi = " << euler_char(d) << "\n";
        }
    });

    // --- ext1 ---------------------------------------------------------------
    auto* ext_cmd = app.add_subcommand(
        "ext1", "dimensions of the extension spaces between two line bundles");
    ext_cmd->fallthrough();
    std::string ext_a, ext_b;
    ext_cmd->add_option("a", ext_a, "first line bundle, a1,a2,a3")->required();
    ext_cmd->add_option("b", ext_b, "second line bundle, b1,b2,b3")->required();
    ext_cmd->callback([&] {
        const Divisor3 a = parse_divisor(ext_a);
        const Divisor3 b = parse_divisor(ext_b);
        const Int ab = ext1_line(a, b);
        const Int ba = ext1_line(b, a);
        if (as_json) {
            emit(Json{{"a", a}, {"b", b}, {"ext1_a_by_b", ab}, {"ext1_b_by_a", ba}});
        } else {
            std::cout << "dim Ext^1(" << fmt_bundle(a) << ", " << fmt_bundle(b)
                      << ") = " << ab << "\n"
                      << "dim Ext^1(" << fmt_bundle(b) << ", " << fmt_bundle(a)
                      << ") = " << ba << "\n";
        }
    });

    // --- ci -----------------------------------------------------------------
    auto* ci_cmd = app.add_subcommand(
        "ci", "invariants of the curve cut out by two general sections of O(c1)");
    ci_cmd->fallthrough();
    std::string ci_text;
    ci_cmd->add_option("c1", ci_text, "divisor a1,a2,a3 with positive entries")->required();
    ci_cmd->callback([&] {
        const Divisor3 d = parse_divisor(ci_text);
        const CurveClass e = ci_multidegree(d);
        const Int g = ci_genus(d);
        const Divisor3 k = ci_canonical(d);
        if (as_json) {
            emit(Json{{"c1", d}, {"multidegree", e}, {"genus", g}, {"canonical", k}});
        } else {
            std::cout << "multidegree = " << fmt_curve_class(e) << "\n"
                      << "genus = " << g << "\n"
                      << "canonical = " << fmt_bundle(k) << "\n";
        }
    });

    // --- chern --------------------------------------------------------------
    auto* chern_cmd =
        app.add_subcommand("chern", "Chern data of a bundle expression");
    chern_cmd->fallthrough();
    std::string chern_text;
    chern_cmd
        ->add_option("expr", chern_text,
                     "e.g. \"O(2,0,0) (+) O(0,1,1)\", \"kerev(1,1,1)\", "
                     "\"twist(dual(O(1,1,0)); 0,0,1)\"")
        ->required();
    chern_cmd->callback([&] {
        const ExprPtr e = parse_expr(chern_text);
        const ChernData d = chern(e);
        const auto info = extension_info(*e);
        if (as_json) {
            Json j{{"expr", print_expr(e)}, {"chern", d}};
            if (info) j["extension"] = *info;
            emit(j);
            return;
        }
        std::cout << "expr = " << print_expr(e) << "\n"
                  << "rank = " << d.rank << "\n"
                  << "c1 = " << fmt_divisor(d.c1) << "\n"
                  << "c2 = " << fmt_curve_class(d.c2) << "\n"
                  << "c3 = " << d.c3 << "\n";
        if (d.h0) std::cout << "h0 = " << *d.h0 << "\n";
        if (info) {
            std::cout << "dim Ext^1(" << fmt_bundle(info->a) << ", " << fmt_bundle(info->b)
                      << ") = " << info->ext1_a_by_b << "\n"
                      << "dim Ext^1(" << fmt_bundle(info->b) << ", " << fmt_bundle(info->a)
                      << ") = " << info->ext1_b_by_a << "\n";
        }
    });

    // --- ranks ---------------------------------------------------------------
    auto* ranks_cmd = app.add_subcommand(
        "ranks", "admissible ranks of bundles arising from a curve and c1");
    ranks_cmd->fallthrough();
    std::string ranks_c1, ranks_curve = "ci";
    ranks_cmd->add_option("--c1", ranks_c1, "first Chern class a1,a2,a3")->required();
    ranks_cmd->add_option(
        "--curve", ranks_curve,
        "\"ci\" (default) ranges over all curves up to the complete intersection; or "
        "explicit curve JSON {\"components\":[{\"e\":[e1,e2,e3],\"g\":g},...]}");
    ranks_cmd->callback([&] {
        const Divisor3 c1 = parse_divisor(ranks_c1);
        if (ranks_curve == "ci") {
            const RankRange b = c1_rank_bounds(c1);
            if (as_json) {
                emit(Json{{"c1", c1},
                          {"curve", "ci"},
                          {"multidegree", ci_multidegree(c1)},
                          {"genus", ci_genus(c1)},
                          {"range", b}});
            } else {
                std::cout << "c1 = " << fmt_divisor(c1) << "\n"
                          << "curve = complete intersection "
                          << fmt_curve_class(ci_multidegree(c1)) << ", genus "
                          << ci_genus(c1) << "\n"
                          << fmt_bounds(b) << "\n";
            }
            return;
        }
        const CurveData curve = Json::parse(ranks_curve).get<CurveData>();
        const RankRange r = rank_range(curve, c1);
        if (as_json) {
            emit(Json{{"c1", c1}, {"curve", curve}, {"range", r}});
        } else {
            std::cout << "c1 = " << fmt_divisor(c1) << "\n"
                      << "curve = " << fmt_curve_data(curve) << "\n"
                      << fmt_bounds(r) << "\n";
        }
    });

    // --- classify -------------------------------------------------------------
    auto* classify_cmd = app.add_subcommand(
        "classify", "enumerate candidate dependency curves surviving all predicates");
    classify_cmd->fallthrough();
    std::string classify_c1, classify_rank = "2", classify_preds;
    int classify_max_s = 4;
    classify_cmd->add_option("--c1", classify_c1, "first Chern class a1,a2,a3")->required();
    classify_cmd->add_option("--rank", classify_rank, "2 (default) or all");
    classify_cmd->add_option("--max-s", classify_max_s,
                             "maximum number of components (default 4)");
    classify_cmd->add_option("--predicates", classify_preds,
                             "comma-separated predicate ids to apply (default: all)");
    classify_cmd->callback([&] {
        const Divisor3 c1 = parse_divisor(classify_c1);
        const RankFilter filter = rank_filter_from_string(classify_rank);
        EnumerateOptions opts;
        opts.max_s = classify_max_s;
        if (!classify_preds.empty()) opts.predicate_ids = split_commas(classify_preds);
        const auto survivors = enumerate_candidates(c1, filter, opts);
        if (as_json) {
            emit(Json{{"c1", c1},
                      {"filter", filter == RankFilter::rank_two ? "rank2" : "all"},
                      {"max_s", opts.max_s},
                      {"survivors", survivors}});
            return;
        }
        std::cout << "c1 = " << fmt_divisor(c1) << "\n"
                  << "filter = " << (filter == RankFilter::rank_two ? "rank2" : "all")
                  << "\n"
                  << "survivors = " << survivors.size() << "\n";
        std::size_t width = 0;
        for (const auto& t : survivors) width = std::max(width, t.canonical_form.size());
        for (const auto& t : survivors) {
            std::cout << "  " << t.canonical_form
                      << std::string(width - t.canonical_form.size(), ' ')
                      << "  c2=" << fmt_curve_class(t.c2) << " c3=" << t.c3 << " rank "
                      << detail::format_range(t.ranks) << "\n";
        }
    });

    // --- audit ------------------------------------------------------------------
    auto* audit_cmd = app.add_subcommand(
        "audit", "replay a classification table fixture against the enumeration");
    audit_cmd->fallthrough();
    std::string audit_c1, audit_fixture;
    audit_cmd->add_option("--c1", audit_c1, "first Chern class a1,a2,a3")->required();
    std::string fixture_help = "fixture id (bundled:";
    for (const auto& id : bundled_fixture_ids()) fixture_help += " " + id;
    fixture_help += ") or a <id>.json in $SEGRE_FIXTURES";
    audit_cmd->add_option("--fixture", audit_fixture, fixture_help)->required();
    audit_cmd->callback([&] {
        const AuditReport report = audit(parse_divisor(audit_c1), audit_fixture);
        if (as_json) {
            emit(report);
            return;
        }
        std::cout << "fixture = " << report.fixture_id << "\n"
                  << "mode = " << to_string(report.mode) << "\n"
                  << "c1 = " << fmt_divisor(report.c1) << "\n"
                  << "survivors = " << report.survivors.size() << "\n"
                  << "rows = " << report.paper_rows.size() << "\n";
        std::cout << "matched = " << report.matched.size() << "\n";
        for (const auto& m : report.matched) {
            std::cout << "  (" << m.row.s << "; " << m.row.e.e1 << "," << m.row.e.e2 << ","
                      << m.row.e.e3 << ") g=" << fmt_genera(m.row.genera) << " rank "
                      << m.row.rank_min << ".." << m.row.rank_max << "  ["
                      << m.row.paper_ref << "]\n";
        }
        std::cout << "missing = " << report.missing.size() << "\n";
        for (const auto& m : report.missing) {
            std::cout << "  (" << m.row.s << "; " << m.row.e.e1 << "," << m.row.e.e2 << ","
                      << m.row.e.e3 << ") g=" << fmt_genera(m.row.genera) << " — "
                      << m.reason << "\n";
        }
        std::cout << "extras = " << report.extras.size() << "\n";
        for (const auto& e : report.extras) {
            std::cout << "  " << e.survivor.canonical_form << " rank "
                      << detail::format_range(e.reported) << " — " << e.annotation << "\n";
        }
    });

    // --- verify-paper -------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "recompute every claim in the bundled citation table");
    verify_cmd->fallthrough();
    verify_cmd->callback([&] {
        const auto results = verify_paper();
        std::size_t passed = 0;
        for (const auto& r : results) passed += r.passed ? 1 : 0;
        if (as_json) {
            emit(Json{{"claims", results}, {"passed", passed}, {"total", results.size()}});
        } else {
            std::size_t width = 0;
            for (const auto& r : results) width = std::max(width, r.id.size());
            for (const auto& r : results) {
                std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.id
                          << std::string(width - r.id.size(), ' ') << "  " << r.citation
                          << "\n";
            }
            std::cout << passed << "/" << results.size() << " claims passed\n";
        }
        if (!all_claims_pass(results)) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const segre::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
