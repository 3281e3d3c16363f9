/*
   Copyright 2026 The gop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gop/cli/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace gop::cli {

namespace {

enum class Tok { Int, Z, D, Theta, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l = line, k = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), l, k});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            const std::string word = s.substr(i, j - i);
            Tok kind;
            if (word == "z") kind = Tok::Z;
            else if (word == "D") kind = Tok::D;
            else if (word == "theta") kind = Tok::Theta;
            else throw ParseError("unknown identifier '" + word + "'", l, k);
            out.push_back({kind, word, l, k});
            advance(j - i);
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", l, k);
        }
        out.push_back({kind, std::string(1, c), l, k});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// An operator together with the basis fixed by its derivation symbols, if any.
struct Val {
    std::optional<Basis> basis;
    DiffOp op;  // order 0 and D basis while basis is unset
};

bool is_scalar(const Val& v) { return v.op.order() == 0; }

DiffOp in_basis(const Val& v, Basis b) {
    if (v.op.basis() == b) return v.op;
    return DiffOp(b, v.op.coeffs());  // order 0
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    DiffOp run() {
        Val v = sum();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return v.op;
    }

private:
    std::vector<Token> t_;
    std::size_t pos_ = 0;

    const Token& peek() const { return t_[pos_]; }
    const Token& take() { return t_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }
    [[noreturn]] static void fail_at(const Token& at, const std::string& msg) { throw ParseError(msg, at.line, at.col); }

    static std::optional<Basis> unify(const Val& a, const Val& b, const Token& at) {
        if (a.basis && b.basis && *a.basis != *b.basis)
            throw MixedBasisError("D and theta cannot be mixed in one expression", at.line, at.col);
        return a.basis ? a.basis : b.basis;
    }

    static Val add(const Val& a, const Val& b, const Token& at, bool subtract) {
        auto basis = unify(a, b, at);
        const Basis B = basis.value_or(Basis::D);
        DiffOp x = in_basis(a, B), y = in_basis(b, B);
        return {basis, subtract ? x - y : x + y};
    }

    static Val mul(const Val& a, const Val& b, const Token& at) {
        auto basis = unify(a, b, at);
        const Basis B = basis.value_or(Basis::D);
        return {basis, op_mul(in_basis(a, B), in_basis(b, B))};
    }

    Val sum() {
        Val acc;
        bool have = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& sign = take();
            Val v = prod();
            acc = sign.kind == Tok::Minus ? Val{v.basis, -v.op} : v;
            have = true;
        }
        if (!have) acc = prod();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = take();
            Val rhs = prod();
            acc = add(acc, rhs, op, op.kind == Tok::Minus);
        }
        return acc;
    }

    Val prod() {
        Val acc = power();
        for (;;) {
            if (peek().kind == Tok::Star) {
                const Token& op = take();
                acc = mul(acc, power(), op);
            } else if (peek().kind == Tok::Slash) {
                const Token& op = take();
                Val rhs = power();
                if (!is_scalar(acc) || !is_scalar(rhs)) fail_at(op, "'/' applies to coefficient operands only");
                if (rhs.op.coeff(0).is_zero()) fail_at(op, "division by zero");
                acc = {unify(acc, rhs, op), DiffOp(acc.op.basis(), {acc.op.coeff(0) / rhs.op.coeff(0)})};
                if (acc.basis) acc.op = in_basis(acc, *acc.basis);
            } else if (starts_atom(peek().kind)) {
                fail("'*' is required between factors");
            } else {
                return acc;
            }
        }
    }

    static bool starts_atom(Tok k) { return k == Tok::Int || k == Tok::Z || k == Tok::D || k == Tok::Theta || k == Tok::LParen; }

    Val power() {
        Val base = atom();
        if (peek().kind != Tok::Caret) return base;
        const Token& caret = take();
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            take();
            negative = true;
        }
        if (peek().kind != Tok::Int) fail("expected a natural number exponent");
        const Token& e = take();
        if (e.text.size() > 4) fail_at(e, "exponent too large");
        const int k = std::stoi(e.text);
        if (negative) {
            if (!is_scalar(base)) fail_at(caret, "negative powers apply to coefficient operands only");
            if (base.op.coeff(0).is_zero()) fail_at(caret, "zero to a negative power");
            return {base.basis, DiffOp(base.op.basis(), {base.op.coeff(0).pow(-k)})};
        }
        const Basis B = base.basis.value_or(Basis::D);
        DiffOp result = DiffOp::scalar(RatFn(1), B);
        const DiffOp b = in_basis(base, B);
        for (int i = 0; i < k; ++i) result = op_mul(result, b);
        return {base.basis, result};
    }

    Val atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::Int: {
                take();
                return {std::nullopt, DiffOp::scalar(RatFn(BigRat(BigInt(tok.text))), Basis::D)};
            }
            case Tok::Z: take(); return {std::nullopt, DiffOp::scalar(RatFn(Poly::z()), Basis::D)};
            case Tok::D: take(); return {Basis::D, DiffOp::D()};
            case Tok::Theta: take(); return {Basis::Theta, DiffOp::theta()};
            case Tok::LParen: {
                take();
                Val v = sum();
                if (peek().kind != Tok::RParen) fail("expected ')'");
                take();
                return v;
            }
            case Tok::End: fail("unexpected end of input");
            default: fail("unexpected '" + tok.text + "'");
        }
    }
};

}  // namespace

DiffOp parse_operator(const std::string& text) {
    return Parser(lex(text)).run();
}

}  // namespace gop::cli
