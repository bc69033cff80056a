#pragma once

#include "ordcalc/expr.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordcalc::ncalg {

namespace detail {

// true when a Gaussian value prints with a single leading sign that can be
// pulled out in front of a term
inline bool gaussian_negative(const GaussianRational& g) {
    if (g.im == 0) return g.re < 0;
    if (g.re == 0) return g.im < 0;
    return false;
}

inline bool scalar_sign_pullable(const Scalar& s) {
    return s.monomial_count() == 1 && gaussian_negative(s.monomials().begin()->second);
}

}  // namespace detail

inline std::string atom_to_string(const Algebra& alg, const VarAtom& atom) {
    std::string out = alg.name_of(atom.family);
    out.append(static_cast<std::size_t>(atom.shift), '\'');
    if (alg.traits_of(atom.family).index_count > 0) out += "[" + std::to_string(atom.index) + "]";
    return out;
}

// Canonical text form, e.g. "2*J^1*X'[1]*Y[2]" or "(3/2+1/2i)*q^-1*x*y".
// parse_expr accepts everything this emits; the round trip is exact.
inline std::string to_string(const Expr& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : e.terms()) {
        Scalar coeff = t.coeff;
        bool negative = false;
        if (detail::scalar_sign_pullable(coeff)) {
            negative = true;
            coeff = -coeff;
        }
        std::string body;
        if (t.jpow > 0) body = "J^" + std::to_string(t.jpow);
        for (const auto& atom : t.word) {
            if (!body.empty()) body += "*";
            body += atom_to_string(*e.algebra(), atom);
        }
        std::string piece;
        if (coeff.is_one() && !body.empty()) {
            piece = body;
        } else {
            piece = coeff.monomial_count() > 1 ? "(" + coeff.to_string() + ")" : coeff.to_string();
            if (!body.empty()) piece += "*" + body;
        }
        if (first) {
            out = negative ? "-" + piece : piece;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

namespace detail {

// Recursive-descent parser over sums and products of scalars, J powers and
// shifted/indexed variables. '*' may be omitted between factors, which also
// covers forms like "1/2i" and "2q^3".
class ExprParser {
public:
    ExprParser(std::shared_ptr<const Algebra> alg, std::string_view text)
        : alg_(std::move(alg)), text_(text) {}

    Expr parse() {
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    std::shared_ptr<const Algebra> alg_;
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_primary_start() {
        const char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Expr parse_sum() {
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        Expr acc = parse_product();
        if (neg) acc = -acc;
        while (true) {
            if (consume('+'))
                acc += parse_product();
            else if (consume('-'))
                acc -= parse_product();
            else
                break;
        }
        return acc;
    }

    Expr parse_product() {
        Expr acc = parse_factor();
        while (true) {
            if (consume('*'))
                acc = acc * parse_factor();
            else if (at_primary_start())
                acc = acc * parse_factor();
            else
                break;
        }
        return acc;
    }

    long parse_integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000L) fail("integer too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    std::string parse_digits() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out += text_[pos_++];
        if (out.empty()) fail("expected digits");
        return out;
    }

    Expr parse_factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return apply_exponent(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = parse_digits();
            std::string den;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                den = parse_digits();
            }
            Rational r = parse_rational(den.empty() ? num : num + "/" + den);
            return apply_exponent(Expr::scalar(Scalar(std::move(r))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_name();
            if (name == "i") return apply_exponent(Expr::scalar(Scalar::i()));
            if (name == "q") {
                long e = 1;
                if (consume('^')) e = parse_integer();
                return Expr::scalar(Scalar::q(static_cast<int>(e)));
            }
            if (name == "J") {
                long e = 1;
                if (consume('^')) e = parse_integer();
                if (e < 0) throw std::domain_error("parse: J has no inverse in the core ring");
                return Expr::j(static_cast<std::uint32_t>(e));
            }
            // variable atom: primes then optional [index]
            int primes = 0;
            while (pos_ < text_.size() && text_[pos_] == '\'') {
                ++primes;
                ++pos_;
            }
            int index = 0;
            if (pos_ < text_.size() && text_[pos_] == '[') {
                ++pos_;
                index = static_cast<int>(parse_integer());
                if (!consume(']')) fail("expected ']'");
            }
            if (!alg_) fail("variable '" + name + "' in a scalar-only context");
            return apply_exponent(Expr::var(alg_, name, index, primes));
        }
        fail("unexpected character");
    }

    std::string parse_name() {
        std::string out;
        out += text_[pos_++];
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            out += text_[pos_++];
        return out;
    }

    Expr apply_exponent(const Expr& base) {
        if (!consume('^')) return base;
        long e = parse_integer();
        if (e < 0) fail("negative exponent is only defined for q");
        return pow(base, static_cast<unsigned>(e));
    }
};

}  // namespace detail

inline Expr parse_expr(std::shared_ptr<const Algebra> alg, std::string_view text) {
    return detail::ExprParser(std::move(alg), text).parse();
}

inline Scalar parse_scalar(std::string_view text) {
    Expr e = detail::ExprParser(nullptr, text).parse();
    return e.scalar_value();
}

}  // namespace ordcalc::ncalg
