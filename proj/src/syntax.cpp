#include "alc/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace alc {

namespace {

enum class Tok { Ident, Rat, Imag, Lambda, Dot, Plus, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;   // identifier name or numeric literal (without the 'i')
    size_t pos;
};

bool ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;
}
bool ident_cont(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    auto err = [&](const std::string& m, size_t p) { throw ParseError(m, p); };
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) { i++; continue; }
        size_t start = i;
        if (c == '\\') { out.push_back({Tok::Lambda, "\\", start}); i++; continue; }
        if (c == 0xCE && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xBB) {
            out.push_back({Tok::Lambda, "\xce\xbb", start});  // 'λ'
            i += 2;
            continue;
        }
        if (c == '.') { out.push_back({Tok::Dot, ".", start}); i++; continue; }
        if (c == '+') { out.push_back({Tok::Plus, "+", start}); i++; continue; }
        if (c == '(') { out.push_back({Tok::LParen, "(", start}); i++; continue; }
        if (c == ')') { out.push_back({Tok::RParen, ")", start}); i++; continue; }
        if (c == '-' || std::isdigit(c)) {
            i++;
            if (c == '-' && (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))))
                err("'-' must start a numeric literal", start);
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
            if (i < s.size() && s[i] == '/') {
                size_t den = ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
                if (i == den) err("missing denominator", i);
            }
            std::string text = s.substr(start, i - start);
            bool imag = false;
            if (i < s.size() && s[i] == 'i' &&
                (i + 1 >= s.size() || !ident_cont(static_cast<unsigned char>(s[i + 1])))) {
                imag = true;
                i++;
            }
            if (i < s.size() && ident_start(static_cast<unsigned char>(s[i])))
                err("identifier cannot start with a digit", start);
            out.push_back({imag ? Tok::Imag : Tok::Rat, text, start});
            continue;
        }
        if (ident_start(c)) {
            i++;
            while (i < s.size() && ident_cont(static_cast<unsigned char>(s[i]))) i++;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
            continue;
        }
        err(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

VarName name_for(const std::string& id) {
    if (id == "k") return cont_k();
    if (id == "b" || id == "b1" || id == "b2") return interm_var(id);
    return src_var(id);
}

Rational rational_of(const std::string& text, size_t pos) {
    auto sc = Scalar::parse(text, RingMode::Rational);
    if (!sc) throw ParseError("bad numeric literal '" + text + "'", pos);
    return sc->real();
}

class Parser {
public:
    Parser(std::vector<Token> toks, RingMode mode) : toks_(std::move(toks)), mode_(mode) {}

    TermPtr run() {
        TermPtr t = parse_sum();
        expect(Tok::End, "unexpected trailing input");
        return t;
    }

private:
    std::vector<Token> toks_;
    RingMode mode_;
    size_t pos_ = 0;

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    void expect(Tok k, const std::string& msg) {
        if (peek().kind != k) throw ParseError(msg, peek().pos);
        next();
    }

    TermPtr parse_sum() {
        std::vector<TermPtr> parts;
        parts.push_back(parse_scaled());
        while (peek().kind == Tok::Plus) {
            next();
            parts.push_back(parse_scaled());
        }
        TermPtr acc = parts.back();
        for (size_t i = parts.size() - 1; i-- > 0;) acc = sum(parts[i], acc);
        return acc;
    }

    // Tries to consume `scalar '.'`; leaves the stream untouched on failure.
    std::optional<Scalar> try_scalar_dot() {
        size_t save = pos_;
        const Token& t = peek();
        if (t.kind == Tok::Rat) {
            if (peek(1).kind == Tok::Imag && peek(2).kind == Tok::Dot &&
                peek(1).text[0] == '-') {
                Scalar sc(rational_of(t.text, t.pos), rational_of(peek(1).text, peek(1).pos));
                pos_ += 3;
                return require_gaussian(sc, t.pos);
            }
            if (peek(1).kind == Tok::Plus && peek(2).kind == Tok::Imag &&
                peek(3).kind == Tok::Dot) {
                Scalar sc(rational_of(t.text, t.pos), rational_of(peek(2).text, peek(2).pos));
                pos_ += 4;
                return require_gaussian(sc, t.pos);
            }
            if (peek(1).kind == Tok::Dot) {
                Scalar sc(rational_of(t.text, t.pos));
                pos_ += 2;
                return sc;
            }
        }
        if (t.kind == Tok::Imag && peek(1).kind == Tok::Dot) {
            Scalar sc(Rational(0), rational_of(t.text, t.pos));
            pos_ += 2;
            return require_gaussian(sc, t.pos);
        }
        pos_ = save;
        return std::nullopt;
    }

    Scalar require_gaussian(Scalar sc, size_t pos) {
        if (mode_ != RingMode::Gaussian)
            throw ParseError("imaginary scalar requires the Gaussian ring", pos);
        return sc;
    }

    TermPtr parse_scaled() {
        std::vector<Scalar> coeffs;
        while (auto sc = try_scalar_dot()) coeffs.push_back(*sc);
        TermPtr body = parse_app();
        for (size_t i = coeffs.size(); i-- > 0;) body = scale(coeffs[i], body);
        return body;
    }

    bool atom_ahead() const {
        switch (peek().kind) {
            case Tok::Ident:
            case Tok::LParen:
            case Tok::Lambda:
                return true;
            case Tok::Rat:
                // A bare `0` is the zero term unless it begins a scalar.
                return peek().text == "0" && peek(1).kind != Tok::Dot;
            default:
                return false;
        }
    }

    TermPtr parse_app() {
        if (!atom_ahead()) throw ParseError("expected a term", peek().pos);
        TermPtr acc = parse_atom();
        while (atom_ahead()) acc = app(acc, parse_atom());
        return acc;
    }

    TermPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Ident:
                next();
                return var(name_for(t.text));
            case Tok::Rat:
                next();
                if (t.text != "0") throw ParseError("a number is not a term", t.pos);
                return zero();
            case Tok::Lambda: {
                next();
                if (peek().kind != Tok::Ident) throw ParseError("expected a variable after lambda", peek().pos);
                VarName bound = name_for(next().text);
                expect(Tok::Dot, "expected '.' after the lambda variable");
                return lam(bound, parse_sum());
            }
            case Tok::LParen: {
                next();
                TermPtr inner = parse_sum();
                expect(Tok::RParen, "expected ')'");
                return inner;
            }
            default:
                throw ParseError("expected a term", t.pos);
        }
    }
};

enum class PrintLevel { SumArg, ScaleBody, AppFun, AppArg };

void print_rec(const TermPtr& m, bool tail, std::string& out);

// A lambda printed in non-tail position needs parentheses: its body would
// otherwise swallow whatever follows.
void print_atomish(const TermPtr& m, bool tail, std::string& out) {
    switch (m->kind()) {
        case TermKind::Var:
            out += m->as<VarNode>().name.name;
            return;
        case TermKind::Zero:
            out += '0';
            return;
        case TermKind::Lam: {
            const auto& l = m->as<LamNode>();
            if (!tail) out += '(';
            out += '\\';
            out += l.bound.name;
            out += '.';
            print_rec(l.body, true, out);
            if (!tail) out += ')';
            return;
        }
        default:
            out += '(';
            print_rec(m, true, out);
            out += ')';
            return;
    }
}

void print_app(const TermPtr& m, bool tail, std::string& out) {
    if (m->kind() == TermKind::App) {
        const auto& a = m->as<AppNode>();
        print_app(a.fun, false, out);
        out += ' ';
        print_atomish(a.arg, tail, out);
        return;
    }
    print_atomish(m, tail, out);
}

void print_scaled(const TermPtr& m, bool tail, std::string& out) {
    if (m->kind() == TermKind::Scale) {
        const auto& s = m->as<ScaleNode>();
        out += s.coeff.str();
        out += '.';
        if (s.body->kind() == TermKind::Sum) {
            out += '(';
            print_rec(s.body, true, out);
            out += ')';
        } else {
            print_scaled(s.body, tail, out);
        }
        return;
    }
    print_app(m, tail, out);
}

void print_rec(const TermPtr& m, bool tail, std::string& out) {
    if (m->kind() == TermKind::Sum) {
        const auto& s = m->as<SumNode>();
        if (s.lhs->kind() == TermKind::Sum) {
            out += '(';
            print_rec(s.lhs, true, out);
            out += ')';
        } else {
            print_scaled(s.lhs, false, out);
        }
        out += " + ";
        print_rec(s.rhs, tail, out);
        return;
    }
    print_scaled(m, tail, out);
}

}  // namespace

TermPtr parse_term(const std::string& text, RingMode mode) {
    return Parser(lex(text), mode).run();
}

std::string print_term(const TermPtr& m) {
    std::string out;
    print_rec(m, true, out);
    return out;
}

}  // namespace alc
