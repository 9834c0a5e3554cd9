#include "birmax/descriptor.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace birmax {

PositionedError::PositionedError(const std::string& msg, int line_, int column_)
    : std::runtime_error(msg), line(line_), column(column_) {}

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') ++line, col = 1;
            else ++col;
        }
    };
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        std::size_t j = i;
        Token::Kind kind;
        if (std::isalpha(c) || c == '_') {
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            kind = Token::Kind::Ident;
        } else if (std::isdigit(c)) {
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            kind = Token::Kind::Int;
        } else if (std::string_view(";{},:()+-*=").find(static_cast<char>(c)) != std::string_view::npos) {
            j = i + 1;
            kind = Token::Kind::Punct;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
        }
        out.push_back({kind, s.substr(i, j - i), line, col});
        advance(j - i);
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Query query(bool allow_bare_curve) {
        Query q;
        q.curve = curve();
        if (allow_bare_curve && at_end()) return q;
        punct(';');
        q.payload = payload(q.curve);
        finish();
        return q;
    }

    PicElement pic_only(const CurvePtr& c) {
        PicElement p = pic(c);
        finish();
        return p;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& next() {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    [[noreturn]] void fail(const Token& t, const std::string& expected) const {
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError("expected " + expected + ", found " + got, t.line, t.column);
    }

    bool is_punct(char c, std::size_t ahead = 0) const {
        const auto& t = peek(ahead);
        return t.kind == Token::Kind::Punct && t.text[0] == c;
    }
    bool is_word(const char* w, std::size_t ahead = 0) const {
        const auto& t = peek(ahead);
        return t.kind == Token::Kind::Ident && t.text == w;
    }
    void punct(char c) {
        if (!is_punct(c)) fail(peek(), std::string("'") + c + "'");
        next();
    }
    void word(const char* w) {
        if (!is_word(w)) fail(peek(), std::string("'") + w + "'");
        next();
    }
    const Token& ident(const char* what) {
        if (peek().kind != Token::Kind::Ident) fail(peek(), what);
        return next();
    }
    std::int64_t integer() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Int) fail(t, "an integer");
        if (t.text.size() > 12) throw ParseError("integer too large", t.line, t.column);
        next();
        return std::stoll(t.text);
    }
    std::int64_t signed_integer() {
        bool neg = is_punct('-');
        if (neg) next();
        auto v = integer();
        return neg ? -v : v;
    }
    void finish() {
        if (!at_end()) fail(peek(), "end of input");
    }

    template <class F>
    auto semantic(const Token& at, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const ContractError& e) {
            throw SemanticError(e.what(), at.line, at.column);
        }
    }

    CurvePtr curve() {
        const Token& start = peek();
        word("curve");
        word("genus");
        auto genus = integer();
        word("pic0");
        punct('{');
        std::vector<Generator> gens;
        if (!is_punct('}')) {
            do {
                if (!gens.empty()) next();
                std::string name = ident("a generator name").text;
                punct(':');
                if (is_word("inf")) {
                    next();
                    gens.push_back({name, std::nullopt});
                } else {
                    gens.push_back({name, integer()});
                }
            } while (is_punct(','));
        }
        punct('}');
        if (genus > std::numeric_limits<int>::max()) throw SemanticError("genus too large", start.line, start.column);
        return semantic(start, [&] { return make_curve(static_cast<int>(genus), gens); });
    }

    PicElement term(const CurvePtr& c, std::int64_t sign) {
        std::int64_t k = 1;
        if (peek().kind == Token::Kind::Int) {
            k = integer();
            punct('*');
        }
        const Token& name = ident("a generator name or p0");
        if (name.text == "p0") return PicElement::point(c, sign * k);
        return semantic(name, [&] { return PicElement::generator(c, name.text) * (sign * k); });
    }

    PicElement pic(const CurvePtr& c) {
        std::int64_t sign = 1;
        if (is_punct('-')) {
            next();
            sign = -1;
        }
        PicElement acc = term(c, sign);
        while (is_punct('+') || is_punct('-')) {
            sign = next().text == "+" ? 1 : -1;
            acc = acc + term(c, sign);
        }
        return acc;
    }

    bool starts_summand(std::size_t ahead) const {
        for (const char* w : {"O", "E20", "E21", "E30", "E31", "E32", "S2"})
            if (is_word(w, ahead)) return true;
        return false;
    }

    PicElement optional_class(const CurvePtr& c) {
        if (!is_punct('(')) return PicElement::zero(c);
        next();
        PicElement p = pic(c);
        punct(')');
        return p;
    }

    Atom summand(const CurvePtr& c) {
        const Token& t = peek();
        if (!starts_summand(0)) fail(t, "a summand (O, E20, E21, E30, E31, E32, S2)");
        next();
        if (t.text == "O") {
            PicElement p = optional_class(c);
            return Atom::line(p);
        }
        if (t.text == "S2") {
            punct('(');
            word("det");
            punct('=');
            PicElement det = pic(c);
            punct(')');
            return semantic(t, [&] { return Atom::stable2(det); });
        }
        int r = t.text[1] - '0', d = t.text[2] - '0';
        PicElement twist = optional_class(c);
        return semantic(t, [&] { return Atom::atiyah(r, d, twist); });
    }

    RuledBase ruled(const CurvePtr& c) {
        const Token& t = ident("a ruled surface (CxP1, A20, A21, Dec)");
        if (t.text == "CxP1") return RuledBase::trivial();
        if ((t.text == "A20" || t.text == "A21") && c->genus() != 1)
            throw SemanticError("Atiyah ruled surfaces need an elliptic curve", t.line, t.column);
        if (t.text == "A20") return RuledBase::a20();
        if (t.text == "A21") return RuledBase::a21();
        if (t.text == "Dec") {
            punct('(');
            PicElement l = pic(c);
            punct(')');
            if (l.deg() != 0) throw SemanticError("Dec(L) needs a degree-0 class", t.line, t.column);
            return RuledBase::dec(l);
        }
        fail(t, "a ruled surface (CxP1, A20, A21, Dec)");
    }

    Payload payload(const CurvePtr& c) {
        const Token& t = peek();
        if (is_word("P") && is_punct('(', 1)) {
            next();
            next();
            std::vector<Atom> atoms{summand(c)};
            while (is_punct('+')) {
                next();
                atoms.push_back(summand(c));
            }
            punct(')');
            return semantic(t, [&] { return VBundle(c, atoms); });
        }
        if (is_word("A30") || is_word("A31") || is_word("A32")) {
            next();
            int d = t.text[2] - '0';
            return semantic(t, [&] { return VBundle(c, {Atom::atiyah(3, d, c)}); });
        }
        if (is_word("P1over")) {
            next();
            punct('(');
            RuledBase base = ruled(c);
            punct(',');
            word("b");
            punct('=');
            auto b = signed_integer();
            punct(',');
            word("D");
            punct('=');
            PicElement d = pic(c);
            std::optional<std::int64_t> n;
            if (is_punct(',')) {
                next();
                const Token& nt = peek();
                word("n");
                punct('=');
                n = integer();
                bool shape_ok = base.kind == RuledBase::Kind::Dec && b >= 0 && *n <= b &&
                                d == *base.line * *n;
                if (!shape_ok)
                    throw SemanticError("A-family needs base Dec(M), 0 <= n <= b and D = n*M", nt.line,
                                        nt.column);
            }
            punct(')');
            return MfsDescriptor{P1OverRuled{base, b, d, n}};
        }
        if (is_word("FP")) {
            next();
            punct('(');
            RuledBase left = ruled(c);
            punct(',');
            RuledBase right = ruled(c);
            punct(')');
            return MfsDescriptor{FibreProduct{left, right}};
        }
        if (is_word("DP")) {
            next();
            punct('(');
            const Token& dt = peek();
            auto d = integer();
            punct(')');
            if (d < 1 || d > 9 || d == 7)
                throw SemanticError("no Mori Del Pezzo fibration descriptor of degree " + std::to_string(d),
                                    dt.line, dt.column);
            return MfsDescriptor{DelPezzoFibration{static_cast<int>(d), ""}};
        }
        fail(t, "a payload (P(...), A30, A31, A32, P1over, FP, DP)");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Query parse_query(const std::string& text, bool allow_bare_curve) {
    return Parser(text).query(allow_bare_curve);
}

PicElement parse_pic(const std::string& text, const CurvePtr& curve) {
    return Parser(text).pic_only(curve);
}

std::string print_curve(const CurveCtx& curve) {
    std::string s = "curve genus " + std::to_string(curve.genus()) + " pic0 {";
    bool first = true;
    for (const auto& g : curve.generators()) {
        s += first ? " " : ", ";
        s += g.name + ": " + (g.order ? std::to_string(*g.order) : "inf");
        first = false;
    }
    return s + " }";
}

std::string print_payload(const Payload& p) {
    if (auto e = std::get_if<VBundle>(&p)) {
        VBundle nf = normal_form(*e);
        const auto& s = nf.summands();
        if (s.size() == 1 && s[0].rank() == 3 && s[0].as_atiyah()->twist.is_zero())
            return "A3" + std::to_string(s[0].as_atiyah()->index);
        return "P(" + nf.to_string() + ")";
    }
    return to_string(std::get<MfsDescriptor>(p));
}

std::string print_query(const Query& q) {
    std::string s = print_curve(*q.curve);
    if (q.payload) s += " ; " + print_payload(*q.payload);
    return s;
}

bool same_query(const Query& a, const Query& b) {
    if (!(*a.curve == *b.curve)) return false;
    if (a.payload.has_value() != b.payload.has_value()) return false;
    if (!a.payload) return true;
    if (a.payload->index() != b.payload->index()) return false;
    if (auto e = std::get_if<VBundle>(&*a.payload)) return *e == std::get<VBundle>(*b.payload);
    const auto& x = std::get<MfsDescriptor>(*a.payload);
    const auto& y = std::get<MfsDescriptor>(*b.payload);
    if (x.index() != y.index()) return false;
    if (auto p = std::get_if<P2Bundle>(&x)) {
        const auto& q = std::get<P2Bundle>(y);
        return p->bundle.rank() == q.bundle.rank() && proj_iso(p->bundle, q.bundle);
    }
    return x == y;
}

}  // namespace birmax
