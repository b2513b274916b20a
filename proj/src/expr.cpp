#include "qgl/expr.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace qgl {

namespace {

struct Token {
    enum Kind { num, ident, op, end } kind = end;
    std::string text;           // identifier name, digits, or operator char
    std::vector<int> indices;   // for identifiers with [i,j]
    bool has_indices = false;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw ValidationError("parse error at position " + std::to_string(i) + " in '" + s + "': " + msg);
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::num, s.substr(i, j - i), {}, false});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            Token t{Token::ident, s.substr(i, j - i), {}, false};
            i = j;
            if (i < s.size() && s[i] == '[') {
                t.has_indices = true;
                ++i;
                for (;;) {
                    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
                    std::size_t k = i;
                    if (k < s.size() && s[k] == '-') ++k;
                    std::size_t st = k;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    if (k == st) fail("expected an index");
                    t.indices.push_back(std::stoi(s.substr(i, k - i)));
                    i = k;
                    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
                    if (i < s.size() && s[i] == ',') {
                        ++i;
                        continue;
                    }
                    if (i < s.size() && s[i] == ']') {
                        ++i;
                        break;
                    }
                    fail("expected ',' or ']'");
                }
            }
            out.push_back(std::move(t));
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::op, std::string(1, c), {}, false});
            ++i;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::end, "", {}, false});
    return out;
}

/// Operations the parser needs from a value domain.
template <class V>
struct Domain {
    std::function<V(const Scalar&)> scalar;
    /// Identifier raised to `power` (power may be negative); nullopt if the
    /// identifier is unknown.
    std::function<std::optional<V>(const Token&, int power)> ident;
    std::function<V(const V&, const V&)> add, mul;
    std::function<V(const V&, const Scalar&)> scale;
    std::function<std::optional<Scalar>(const V&)> as_scalar;
    std::function<V(const V&, int)> pow;  // power >= 0
};

template <class V>
class Parser {
public:
    Parser(const std::string& text, const Domain<V>& d, const Field& f) : src_(text), toks_(tokenize(text)), d_(d), f_(f) {}

    V parse() {
        V v = expr();
        if (peek().kind != Token::end) fail("unexpected trailing input '" + peek().text + "'");
        return v;
    }

private:
    std::string src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Domain<V>& d_;
    const Field& f_;

    const Token& peek() const { return toks_[pos_]; }
    bool is_op(const char* s) const { return peek().kind == Token::op && peek().text == s; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError("parse error in '" + src_ + "': " + msg);
    }

    V expr() {
        V v = term();
        while (is_op("+") || is_op("-")) {
            bool minus = peek().text == "-";
            ++pos_;
            V w = term();
            v = d_.add(v, minus ? d_.scale(w, f_.integer(-1)) : w);
        }
        return v;
    }

    bool starts_primary() const {
        return peek().kind == Token::num || peek().kind == Token::ident || is_op("(");
    }

    V term() {
        V v = unary();
        for (;;) {
            if (is_op("*")) {
                ++pos_;
                v = d_.mul(v, unary());
            } else if (is_op("/")) {
                ++pos_;
                V w = unary();
                auto s = d_.as_scalar(w);
                if (!s) fail("division by a non-scalar");
                if (s->is_zero()) throw DivisionByZero("division by zero in '" + src_ + "'");
                v = d_.scale(v, s->inverse());
            } else if (starts_primary()) {
                v = d_.mul(v, unary());
            } else {
                return v;
            }
        }
    }

    V unary() {
        if (is_op("-")) {
            ++pos_;
            return d_.scale(unary(), f_.integer(-1));
        }
        if (is_op("+")) {
            ++pos_;
            return unary();
        }
        return power();
    }

    int exponent() {
        bool paren = false, neg = false;
        if (is_op("(")) {
            paren = true;
            ++pos_;
        }
        if (is_op("-")) {
            neg = true;
            ++pos_;
        }
        if (peek().kind != Token::num) fail("expected an integer exponent");
        int e = std::stoi(peek().text);
        ++pos_;
        if (paren) {
            if (!is_op(")")) fail("expected ')'");
            ++pos_;
        }
        return neg ? -e : e;
    }

    V raise(const V& v, int e) {
        if (e >= 0) return d_.pow(v, e);
        auto s = d_.as_scalar(v);
        if (!s) fail("negative powers are only allowed for scalars and invertible generators");
        if (s->is_zero()) throw DivisionByZero("zero raised to a negative power in '" + src_ + "'");
        return d_.scalar(s->pow(e));
    }

    V power() {
        if (peek().kind == Token::ident) {
            Token t = peek();
            ++pos_;
            int e = 1;
            bool explicit_power = false;
            if (is_op("^")) {
                ++pos_;
                e = exponent();
                explicit_power = true;
            }
            std::optional<V> v = d_.ident(t, e);
            if (!v) {
                std::optional<V> base = d_.ident(t, 1);
                if (!base) fail("unknown identifier '" + t.text + (t.has_indices ? "[...]" : "") + "'");
                v = raise(*base, e);
            }
            while (is_op("^")) {
                ++pos_;
                v = raise(*v, exponent());
            }
            (void)explicit_power;
            return *v;
        }
        V v = primary();
        while (is_op("^")) {
            ++pos_;
            v = raise(v, exponent());
        }
        return v;
    }

    V primary() {
        if (peek().kind == Token::num) {
            Int k(peek().text);
            ++pos_;
            return d_.scalar(f_.rational(Rat(k)));
        }
        if (is_op("(")) {
            ++pos_;
            V v = expr();
            if (!is_op(")")) fail("expected ')'");
            ++pos_;
            return v;
        }
        fail(peek().kind == Token::end ? "unexpected end of input" : "unexpected '" + peek().text + "'");
    }
};

std::optional<Scalar> scalar_ident(const Token& t, const Field& f) {
    if (t.has_indices) return std::nullopt;
    if (t.text == "al") return f.alpha();
    if (t.text == "be") return f.beta();
    if (t.text == "q") return f.alpha().inverse() * f.beta();
    if (t.text == "z") {
        if (!f.is_root()) throw ValidationError("'z' is only available in root-of-unity mode");
        return f.zeta();
    }
    return std::nullopt;
}

std::string letter_name(const Token& t) {
    std::string s = t.text;
    if (t.has_indices) {
        s += "[";
        for (std::size_t i = 0; i < t.indices.size(); ++i) s += (i ? "," : "") + std::to_string(t.indices[i]);
        s += "]";
    }
    return s;
}

void need_indices(const Token& t, std::size_t k) {
    if (!t.has_indices || t.indices.size() != k)
        throw ValidationError("'" + t.text + "' expects " + std::to_string(k) + " index(es)");
}

}  // namespace

Scalar parse_scalar(const std::string& text, const Field& f) {
    Domain<Scalar> d;
    d.scalar = [](const Scalar& s) { return s; };
    d.ident = [&](const Token& t, int p) -> std::optional<Scalar> {
        auto s = scalar_ident(t, f);
        if (!s) return std::nullopt;
        if (p < 0 && s->is_zero()) throw DivisionByZero("zero to a negative power");
        return s->pow(p);
    };
    d.add = [](const Scalar& x, const Scalar& y) { return x + y; };
    d.mul = [](const Scalar& x, const Scalar& y) { return x * y; };
    d.scale = [](const Scalar& x, const Scalar& c) { return x * c; };
    d.as_scalar = [](const Scalar& x) { return std::optional<Scalar>(x); };
    d.pow = [](const Scalar& x, int e) { return x.pow(e); };
    return Parser<Scalar>(text, d, f).parse();
}

NCPoly parse_u(const std::string& text, const USession& s) {
    const Field& f = s.field();
    Domain<NCPoly> d;
    d.scalar = [](const Scalar& c) { return NCPoly::constant(c); };
    d.ident = [&](const Token& t, int p) -> std::optional<NCPoly> {
        if (auto c = scalar_ident(t, f)) return NCPoly::constant(c->pow(p));
        const std::string& k = t.text;
        if (k == "a" || k == "b" || k == "h" || k == "w" || k == "wp") {
            need_indices(t, 1);
            int i = t.indices[0];
            if (k == "a") return s.a(i, p);
            if (k == "b") return s.b(i, p);
            if (k == "h") return s.h(i, p);
            if (k == "w") return s.w(i, p);
            return s.wprime(i, p);
        }
        if (k == "ainv" || k == "binv") {
            need_indices(t, 1);
            return k == "ainv" ? s.a(t.indices[0], -p) : s.b(t.indices[0], -p);
        }
        if (p < 0) return std::nullopt;
        if (k == "E" || k == "F") {
            need_indices(t, 2);
            NCPoly r = k == "E" ? s.E(t.indices[0], t.indices[1]) : s.F(t.indices[0], t.indices[1]);
            return s.power(r, p);
        }
        if (k == "e" || k == "f") {
            need_indices(t, 1);
            return s.power(s.letter(k == "e" ? s.e(t.indices[0]) : s.f(t.indices[0])), p);
        }
        int id = s.alphabet().find(letter_name(t));
        if (id < 0) return std::nullopt;
        return s.power(s.letter(static_cast<Letter>(id)), p);
    };
    d.add = [](const NCPoly& x, const NCPoly& y) { return x + y; };
    d.mul = [&](const NCPoly& x, const NCPoly& y) { return s.mul(x, y); };
    d.scale = [](const NCPoly& x, const Scalar& c) { return x.scaled(c); };
    d.as_scalar = [](const NCPoly& x) -> std::optional<Scalar> {
        if (x.is_zero()) return Scalar().make_int(0);
        if (x.size() == 1 && x.terms().begin()->first.empty()) return x.terms().begin()->second;
        return std::nullopt;
    };
    d.pow = [&](const NCPoly& x, int e) { return s.power(x, e); };
    NCPoly r = Parser<NCPoly>(text, d, f).parse();
    // a bare zero constant may carry the wrong field; normalise
    return s.reduce(r);
}

GLElement parse_o(const std::string& text, const OSession& s) {
    const Field& f = s.field();
    Domain<GLElement> d;
    d.scalar = [&](const Scalar& c) { return s.scalar(c); };
    d.ident = [&](const Token& t, int p) -> std::optional<GLElement> {
        if (auto c = scalar_ident(t, f)) return s.scalar(c->pow(p));
        const std::string& k = t.text;
        if (k == "g" && !t.has_indices) return p >= 0 ? s.pow(s.g(), p) : s.pow(s.ginv(), -p);
        if (k == "gi" && !t.has_indices) return p >= 0 ? s.pow(s.ginv(), p) : s.pow(s.g(), -p);
        if (k == "x") {
            need_indices(t, 2);
            int i = t.indices[0], j = t.indices[1];
            if (i < 1 || j < 1 || i > s.n() || j > s.n())
                throw ValidationError("x[" + std::to_string(i) + "," + std::to_string(j) + "] out of range for n = " +
                                      std::to_string(s.n()));
            if (p >= 0) return s.pow(s.gen(i, j), p);
            if (i == j && s.has_inverse(i)) return s.pow(s.word_element({s.xinv(i)}), -p);
            return std::nullopt;
        }
        if (k == "xinv") {
            need_indices(t, 1);
            int i = t.indices[0];
            if (p >= 0) return s.pow(s.word_element({s.xinv(i)}), p);
            return s.pow(s.gen(i, i), -p);
        }
        if (p < 0) return std::nullopt;
        int id = s.alphabet().find(letter_name(t));
        if (id < 0) return std::nullopt;
        return s.pow(s.word_element({static_cast<Letter>(id)}), p);
    };
    d.add = [&](const GLElement& x, const GLElement& y) { return s.add(x, y); };
    d.mul = [&](const GLElement& x, const GLElement& y) { return s.mul(x, y); };
    d.scale = [&](const GLElement& x, const Scalar& c) { return s.scaled(x, c); };
    d.as_scalar = [](const GLElement& x) -> std::optional<Scalar> {
        if (x.t != 0) return std::nullopt;
        if (x.p.is_zero()) return Scalar().make_int(0);
        if (x.p.size() == 1 && x.p.terms().begin()->first.empty()) return x.p.terms().begin()->second;
        return std::nullopt;
    };
    d.pow = [&](const GLElement& x, int e) { return s.pow(x, e); };
    return s.simplify(Parser<GLElement>(text, d, f).parse());
}

}  // namespace qgl
