#pragma once

/**
 * @file text.hpp
 * @brief Human-readable formatting and parsing.
 *
 * Laurent polynomial grammar (whitespace ignored):
 *
 *     expr    := ['+'|'-'] term (('+'|'-') term)*
 *     term    := factor (('*' | '/' | <juxtaposition>) factor)*
 *     factor  := primary ['^' ['-'] integer]
 *     primary := integer | 'z' | '[' ['-'] integer ']' ['_z'] | 'binom(' integer ',' integer ')' | '(' expr ')'
 *
 * '[r]_z' is the quantum integer and 'binom(n,m)' the symmetrized Gauss
 * binomial. Negative powers are allowed only for monomials; '/' only by
 * nonzero constants.
 */

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "verlinde_ring.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace verlinde {

namespace detail {

inline void append_term(std::string& out, const Rational& c, const std::string& monomial) {
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    if (negative)
        out += '-';
    else if (!out.empty())
        out += '+';
    if (monomial.empty()) {
        out += a.str();
        return;
    }
    if (a != 1) {
        out += a.str();
        if (!is_integer(a)) out += '*';
    }
    out += monomial;
}

}  // namespace detail

/// Descending powers, e.g. "z^2+1+z^-2".
inline std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto j = it->first;
        const std::string mono = j == 0 ? "" : (j == 1 ? "z" : "z^" + std::to_string(j));
        detail::append_term(out, it->second, mono);
    }
    return out;
}

/// Canonical coordinates as a polynomial in q of degree < p-1, e.g. "1+q^2".
inline std::string to_string(const Cyclotomic& x) {
    std::string out;
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (x.coords()[i] == 0) continue;
        const std::string mono = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
        detail::append_term(out, Rational(x.coords()[i]), mono);
    }
    return out.empty() ? "0" : out;
}

/// "L1+3L3", "-L1+L3", or "0".
inline std::string to_string(const VerObj& x) {
    std::string out;
    for (std::int64_t r = 1; r < x.p(); ++r) {
        const auto a = x[r];
        if (a == 0) continue;
        if (a < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        const auto abs = a < 0 ? -a : a;
        if (abs != 1) out += std::to_string(abs);
        out += "L" + std::to_string(r);
    }
    return out.empty() ? "0" : out;
}

inline std::string to_string(const oracle::JordanType& t) {
    std::string out = "{";
    for (std::size_t k = 0; k < t.blocks().size(); ++k) {
        if (k) out += ',';
        out += std::to_string(t.blocks()[k]);
    }
    return out + "}";
}

/// Comma-separated integers, e.g. "3,1,0".
inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw invalid_input("not an integer: '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw invalid_input("not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw invalid_input("empty integer list");
    return out;
}

/// Compact multiplicity string "a1,a2,...,a_{p-1}".
inline VerObj parse_verobj(std::int64_t p, std::string_view text) { return VerObj(p, parse_int_list(text)); }

namespace detail {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }

    LaurentPoly parse() {
        if (text_.empty()) fail("empty expression");
        LaurentPoly out = expr();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw invalid_input("cannot parse Laurent polynomial '" + text_ + "' at offset " +
                            std::to_string(pos_) + ": " + why);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::int64_t integer() {
        const auto start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        try {
            return std::stoll(text_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            fail("integer out of range");
        }
    }

    std::int64_t signed_integer() { return accept('-') ? -integer() : integer(); }

    LaurentPoly expr() {
        LaurentPoly out;
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        LaurentPoly t = term();
        out = negative ? -t : t;
        while (true) {
            if (accept('+'))
                out += term();
            else if (accept('-'))
                out -= term();
            else
                break;
        }
        return out;
    }

    bool starts_factor() const {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == '[' || c == '(' || c == 'b';
    }

    LaurentPoly term() {
        LaurentPoly out = factor();
        while (true) {
            if (accept('*')) {
                out *= factor();
            } else if (accept('/')) {
                const LaurentPoly d = factor();
                if (d.is_zero() || d.terms().size() != 1 || d.terms().begin()->first != 0)
                    fail("division is only by nonzero constants");
                out *= Rational(1) / d.terms().begin()->second;
            } else if (starts_factor()) {
                out *= factor();
            } else {
                break;
            }
        }
        return out;
    }

    LaurentPoly factor() {
        LaurentPoly base = primary();
        if (!accept('^')) return base;
        const auto e = signed_integer();
        if (e >= 0) return base.pow(e);
        if (base.terms().size() != 1) fail("negative power of a non-monomial");
        const auto& [j, c] = *base.terms().begin();
        if (c != 1 && c != -1) fail("negative power of a non-unit monomial");
        return LaurentPoly::monomial(j * e, (e % 2 == 0) ? Rational(1) : c);
    }

    LaurentPoly primary() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly(integer());
        if (accept('z')) return LaurentPoly::monomial(1);
        if (accept('[')) {
            const auto r = signed_integer();
            expect(']');
            if (accept('_')) expect('z');
            return quantum_int(r);
        }
        if (text_.compare(pos_, 6, "binom(") == 0) {
            pos_ += 6;
            const auto n = integer();
            expect(',');
            const auto m = integer();
            expect(')');
            return gauss_binom(n, m);
        }
        if (accept('(')) {
            LaurentPoly inner = expr();
            expect(')');
            return inner;
        }
        fail("expected a term");
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly parse_laurent(std::string_view text) { return detail::LaurentParser(text).parse(); }

}  // namespace verlinde
