#include "qprime/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace qprime {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int m, n;

    Parser(const std::string& text, int m_, int n_) : s(text), m(m_), n(n_) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw std::invalid_argument(std::string("parse error: expected '") + c + "' at offset " + std::to_string(pos));
    }

    long parse_integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("parse error: expected integer at offset " + std::to_string(pos));
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    bool atom_ahead() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'x' || c == '(';
    }

    QMElement parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        QMElement acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+')) acc = acc + parse_term();
            else if (accept('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    QMElement parse_term() {
        QMElement acc = parse_power();
        while (true) {
            skip_ws();
            if (accept('*')) {
                acc = acc * parse_power();
            } else if (accept('/')) {
                QMElement d = parse_power();
                acc = acc * QMElement::unit(m, n).scaled(scalar_of(d).inv());
            } else if (atom_ahead()) {
                acc = acc * parse_power();
            } else {
                break;
            }
        }
        return acc;
    }

    QMElement parse_power() {
        QMElement base = parse_atom();
        skip_ws();
        if (accept('^')) {
            long e = parse_integer();
            if (std::abs(e) > 64) throw std::invalid_argument("parse error: exponent out of range");
            if (e < 0) return QMElement::unit(m, n).scaled(pow_scalar(scalar_of(base), -e).inv());
            QMElement r = QMElement::unit(m, n);
            for (long t = 0; t < e; ++t) r = r * base;
            return r;
        }
        return base;
    }

    static RatFunc pow_scalar(const RatFunc& b, long e) {
        RatFunc r(1);
        for (long t = 0; t < e; ++t) r = r * b;
        return r;
    }

    RatFunc scalar_of(const QMElement& e) {
        if (e.is_zero()) return RatFunc();
        if (e.term_count() != 1 || mono_degree(e.leading_mono()) != 0)
            throw std::invalid_argument("parse error: scalar expected");
        return e.leading_coeff();
    }

    QMElement parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("parse error: unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            QMElement e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = parse_integer();
            return QMElement::unit(m, n).scaled(RatFunc(v));
        }
        if (c == 'q') {
            ++pos;
            return QMElement::unit(m, n).scaled(RatFunc::q());
        }
        if (c == 'x') {
            ++pos;
            int i, j;
            skip_ws();
            if (accept('(')) {
                i = static_cast<int>(parse_integer());
                expect(',');
                j = static_cast<int>(parse_integer());
                expect(')');
            } else {
                if (pos + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])) ||
                    !std::isdigit(static_cast<unsigned char>(s[pos + 1])))
                    throw std::invalid_argument("parse error: variable index at offset " + std::to_string(pos));
                i = s[pos] - '0';
                j = s[pos + 1] - '0';
                pos += 2;
            }
            return QMElement::generator(m, n, i, j);
        }
        throw std::invalid_argument(std::string("parse error: unexpected character '") + c + "'");
    }
};

} // namespace

QMElement parse_element(int m, int n, const std::string& text) {
    Parser p(text, m, n);
    QMElement e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw std::invalid_argument("parse error: trailing input at offset " + std::to_string(p.pos));
    return e;
}

RatFunc parse_scalar(const std::string& text) {
    Parser p(text, 1, 1);
    QMElement e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw std::invalid_argument("parse error: trailing input");
    if (e.is_zero()) return RatFunc();
    return p.scalar_of(e);
}

} // namespace qprime
