#include "weitz/parse.hpp"

#include "weitz/error.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace weitz {
namespace {

class Parser {
public:
    Parser(std::string_view text, Ambient ambient) : text_(text), ambient_(ambient) {}

    Polynomial run() {
        Polynomial out(ambient_);
        skip_ws();
        if (at_end()) {
            fail("empty expression");
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            advance();
        }
        out += negative ? -term() : term();
        for (;;) {
            skip_ws();
            if (at_end()) {
                break;
            }
            const char op = peek();
            if (op != '+' && op != '-') {
                fail(std::string("expected '+' or '-', found '") + op + "'");
            }
            advance();
            out += op == '-' ? -term() : term();
        }
        return out;
    }

private:
    Polynomial term() {
        skip_ws();
        Rational coeff(1);
        Monomial mono = Monomial::one(ambient_);
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = coefficient();
            skip_ws();
            if (at_end() || peek() != '*') {
                return Polynomial::constant(ambient_, coeff);
            }
            advance();
        }
        mono = mono * factor();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') {
                break;
            }
            advance();
            mono = mono * factor();
        }
        return Polynomial::term(ambient_, mono, coeff);
    }

    Rational coefficient() {
        std::string num = digits("integer coefficient");
        skip_ws();
        if (!at_end() && peek() == '/') {
            advance();
            skip_ws();
            const std::size_t at = pos_;
            std::string den = digits("denominator");
            if (den.find_first_not_of('0') == std::string::npos) {
                throw SyntaxError(at, "zero denominator");
            }
            return Rational(mpz_class(num), mpz_class(den));
        }
        return Rational(mpz_class(num), mpz_class(1));
    }

    Monomial factor() {
        skip_ws();
        const std::size_t start = pos_;
        const VariableId v = variable();
        unsigned power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            advance();
            skip_ws();
            const std::size_t at = pos_;
            const std::string e = digits("exponent");
            unsigned long value = 0;
            try {
                value = std::stoul(e);
            } catch (const std::out_of_range&) {
                throw SyntaxError(at, "exponent too large");
            }
            if (value == 0) {
                throw SyntaxError(at, "exponent must be positive");
            }
            if (value > std::numeric_limits<unsigned>::max() / 2) {
                throw SyntaxError(at, "exponent too large");
            }
            power = static_cast<unsigned>(value);
        }
        if (!v.valid_in(ambient_)) {
            throw AmbientMismatch("variable " + v.name() + " at position " + std::to_string(start) +
                                  " is outside the ring " + to_string(ambient_));
        }
        return Monomial::variable(ambient_, v, power);
    }

    VariableId variable() {
        if (at_end()) {
            fail("expected a variable");
        }
        const std::size_t start = pos_;
        const char c = peek();
        if (c == 'C') {
            advance();
            if (!at_end() && peek() == 'X') {
                advance();
                return VariableId::cov_x();
            }
            if (!at_end() && peek() == 'Y') {
                advance();
                return VariableId::cov_y();
            }
            throw SyntaxError(start, "expected CX or CY");
        }
        int level = 0;
        switch (c) {
        case 'x':
            level = 0;
            break;
        case 'y':
            level = 1;
            break;
        case 'z':
            level = 2;
            break;
        case 'v':
            level = -1;
            break;
        default:
            throw SyntaxError(start, std::string("unexpected character '") + c + "'");
        }
        advance();
        const int block = small_int(digits("variable index"), start);
        if (level < 0) {
            if (at_end() || peek() != '.') {
                throw SyntaxError(pos_, "expected '.' in v<block>.<level>");
            }
            advance();
            level = small_int(digits("variable level"), start);
        }
        return VariableId::ring(block, level);
    }

    static int small_int(const std::string& s, std::size_t at) {
        if (s.size() > 6) {
            throw SyntaxError(at, "variable index too large");
        }
        return std::stoi(s);
    }

    std::string digits(const char* what) {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            advance();
        }
        if (start == pos_) {
            fail(std::string("expected ") + what);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }

    std::string_view text_;
    Ambient ambient_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse(std::string_view text, Ambient ambient) {
    return Parser(text, ambient).run();
}

VariableId parse_variable(std::string_view name, Ambient ambient) {
    const Polynomial p = parse(name, ambient);
    if (p.term_count() == 1) {
        const auto& [m, c] = *p.terms().begin();
        if (c.is_one() && m.total_degree() == 1) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 1) {
                    return VariableId::from_index(ambient, i);
                }
            }
        }
    }
    throw SyntaxError(0, "expected a single variable, got '" + std::string(name) + "'");
}

} // namespace weitz
