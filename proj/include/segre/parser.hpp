#pragma once

/// Text form of bundle expressions.
///
///   expr  := primary ("(+)" primary)*
///   line  := "O(" int "," int "," int ")"
///   twist := "twist(" expr ";" int "," int "," int ")"
///   dual  := "dual(" expr ")"
///   ker   := "kerev(" int "," int "," int ")"
///   pull  := "p" factors "*(" payload ")"     factors in {1,2,3,12,13,23}
///            payload := int                       one kept factor
///                     | int ";" int "," int ";" int   rank; c1 pair; c2 degree
///   hs    := "hs(" curve-json ";" int "," int "," int ";" int ")"
///
/// Whitespace between tokens is ignored; "(+)" is a literal three-byte
/// token.  Parse failures throw ParseError carrying the 1-based byte offset
/// of the failure and the set of tokens that would have been accepted.

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "segre/bundles.hpp"
#include "segre/serialize.hpp"

namespace segre {

struct ParseError : std::runtime_error {
    std::size_t offset;  // 1-based byte position of the failure
    std::vector<std::string> expected;

    ParseError(std::size_t off, std::vector<std::string> exp)
        : std::runtime_error(format(off, exp)), offset(off), expected(std::move(exp)) {}

    static std::string format(std::size_t off, const std::vector<std::string>& exp) {
        std::string msg = "parse error at offset " + std::to_string(off) + ": expected ";
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (i > 0) msg += i + 1 == exp.size() ? " or " : ", ";
            msg += "\"" + exp[i] + "\"";
        }
        return msg;
    }
};

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) fail({"(+)", "end of input"});
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw ParseError(pos_ + 1, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool lookahead(std::string_view token) {
        skip_ws();
        return text_.substr(pos_, token.size()) == token;
    }

    void expect(std::string_view token) {
        if (!lookahead(token)) fail({std::string(token)});
        pos_ += token.size();
    }

    Int parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = start;
            fail({"integer"});
        }
        Int value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            value = checked_add(checked_mul(value, 10), Int(text_[pos_++] - '0'));
        return negative ? checked_neg(value) : value;
    }

    // Comma-separated integers up to `closer`, which is consumed.  The list
    // is read without committing to an arity, so a failure mid-list offers
    // both continuations; the arity check then points at the byte that
    // would have to change.
    std::vector<Int> parse_int_list(std::size_t arity, char closer) {
        const std::string comma = ",", close(1, closer);
        std::vector<Int> vals;
        std::vector<std::size_t> comma_offsets;
        vals.push_back(parse_int());
        std::size_t close_offset = 0;
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                comma_offsets.push_back(pos_ + 1);
                ++pos_;
                vals.push_back(parse_int());
                continue;
            }
            if (pos_ < text_.size() && text_[pos_] == closer) {
                close_offset = pos_ + 1;
                ++pos_;
                break;
            }
            fail({comma, close});
        }
        if (vals.size() < arity) throw ParseError(close_offset, {comma});
        if (vals.size() > arity) throw ParseError(comma_offsets[arity - 1], {close});
        return vals;
    }

    Divisor3 parse_int_triple(char closer) {
        const auto v = parse_int_list(3, closer);
        return {v[0], v[1], v[2]};
    }

    ExprPtr parse_expr() {
        std::vector<ExprPtr> terms;
        terms.push_back(parse_primary());
        while (lookahead("(+)")) {
            pos_ += 3;
            terms.push_back(parse_primary());
        }
        return sum(std::move(terms));
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            fail({"O", "twist", "dual", "kerev", "p", "hs"});
        if (text_[pos_] == 'O') {
            ++pos_;
            expect("(");
            return line(parse_int_triple(')'));
        }
        if (text_[pos_] == 'p') {
            ++pos_;
            return parse_pullback();
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view word = text_.substr(start, pos_ - start);
        if (word == "twist") {
            expect("(");
            ExprPtr inner = parse_expr();
            expect(";");
            return twist(std::move(inner), parse_int_triple(')'));
        }
        if (word == "dual") {
            expect("(");
            ExprPtr inner = parse_expr();
            expect(")");
            return dual(std::move(inner));
        }
        if (word == "kerev") {
            expect("(");
            return kerev(parse_int_triple(')'));
        }
        if (word == "hs") return parse_hs();
        pos_ = start;
        fail({"O", "twist", "dual", "kerev", "p", "hs"});
    }

    ExprPtr parse_pullback() {
        skip_ws();
        const std::size_t start = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) &&
               digits.size() < 3)
            digits += text_[pos_++];
        static const std::vector<std::string> valid = {"1", "2", "3", "12", "13", "23"};
        if (std::find(valid.begin(), valid.end(), digits) == valid.end()) {
            pos_ = start;
            fail(valid);
        }
        PullbackData p;
        for (char c : digits) p.factors.mask |= 1u << (c - '1');
        expect("*");
        expect("(");
        if (digits.size() == 1) {
            p.c1[0] = parse_int();
            expect(")");
        } else {
            p.rank = parse_int();
            expect(";");
            const auto pair = parse_int_list(2, ';');
            p.c1 = {pair[0], pair[1]};
            p.c2_degree = parse_int();
            expect(")");
        }
        return pullback(p);
    }

    ExprPtr parse_hs() {
        expect("(");
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '{') fail({"{"});
        const std::size_t json_start = pos_;
        int depth = 0;
        bool in_string = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_++];
            if (in_string) {
                if (c == '\\' && pos_ < text_.size())
                    ++pos_;
                else if (c == '"')
                    in_string = false;
            } else if (c == '"') {
                in_string = true;
            } else if (c == '{') {
                ++depth;
            } else if (c == '}' && --depth == 0) {
                break;
            }
        }
        if (depth != 0) {
            pos_ = json_start;
            fail({"balanced JSON object"});
        }
        const auto doc =
            Json::parse(text_.substr(json_start, pos_ - json_start), nullptr, false);
        if (doc.is_discarded()) {
            pos_ = json_start;
            fail({"curve data JSON object"});
        }
        const CurveData curve = doc.get<CurveData>();
        expect(";");
        const Divisor3 c1 = parse_int_triple(';');
        const Int rank = parse_int();
        expect(")");
        return hs(curve, c1, rank);
    }
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string print_expr(const BundleExpr& e) {
    const auto ints = [](const Divisor3& d) {
        return std::to_string(d.a1) + "," + std::to_string(d.a2) + "," + std::to_string(d.a3);
    };
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LineNode>) {
                return "O(" + ints(n.d) + ")";
            } else if constexpr (std::is_same_v<T, SumNode>) {
                std::string out;
                for (const auto& t : n.terms) {
                    if (!out.empty()) out += " (+) ";
                    out += print_expr(*t);
                }
                return out;
            } else if constexpr (std::is_same_v<T, TwistNode>) {
                return "twist(" + print_expr(*n.inner) + "; " + ints(n.m) + ")";
            } else if constexpr (std::is_same_v<T, DualNode>) {
                return "dual(" + print_expr(*n.inner) + ")";
            } else if constexpr (std::is_same_v<T, KerEvDualNode>) {
                return "kerev(" + ints(n.d) + ")";
            } else if constexpr (std::is_same_v<T, PullbackNode>) {
                std::string factors;
                for (int i = 1; i <= 3; ++i)
                    if (n.data.factors.contains(i)) factors += static_cast<char>('0' + i);
                if (n.data.factors.size() == 1)
                    return "p" + factors + "*(" + std::to_string(n.data.c1[0]) + ")";
                return "p" + factors + "*(" + std::to_string(n.data.rank) + "; " +
                       std::to_string(n.data.c1[0]) + "," + std::to_string(n.data.c1[1]) + "; " +
                       std::to_string(n.data.c2_degree) + ")";
            } else {
                return "hs(" + Json(n.curve).dump() + "; " + ints(n.c1) + "; " +
                       std::to_string(n.rank) + ")";
            }
        },
        e.node);
}

inline std::string print_expr(const ExprPtr& e) {
    if (!e) throw DomainError("null bundle expression");
    return print_expr(*e);
}

}  // namespace segre
