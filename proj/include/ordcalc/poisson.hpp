#pragma once

#include "ordcalc/rational.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ordcalc::poisson {

// Commutative polynomial in classical position q and momentum p with exact
// rational coefficients.
class PolyQP {
public:
    PolyQP() = default;

    static PolyQP constant(Rational c) { return monomial(0, 0, std::move(c)); }
    static PolyQP q(int degree = 1) { return monomial(degree, 0, Rational(1)); }
    static PolyQP p(int degree = 1) { return monomial(0, degree, Rational(1)); }
    static PolyQP monomial(int deg_q, int deg_p, Rational c) {
        if (deg_q < 0 || deg_p < 0) throw std::invalid_argument("PolyQP: negative degree");
        PolyQP out;
        out.add_term(deg_q, deg_p, std::move(c));
        return out;
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::pair<int, int>, Rational>& monomials() const { return coeffs_; }

    PolyQP& operator+=(const PolyQP& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
        return *this;
    }
    PolyQP& operator-=(const PolyQP& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, Rational(-c));
        return *this;
    }
    friend PolyQP operator+(PolyQP a, const PolyQP& b) { return a += b; }
    friend PolyQP operator-(PolyQP a, const PolyQP& b) { return a -= b; }
    friend PolyQP operator-(const PolyQP& a) {
        PolyQP out;
        for (const auto& [k, c] : a.coeffs_) out.coeffs_.emplace(k, Rational(-c));
        return out;
    }
    friend PolyQP operator*(const PolyQP& a, const PolyQP& b) {
        PolyQP out;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_)
                out.add_term(ka.first + kb.first, ka.second + kb.second, Rational(ca * cb));
        return out;
    }
    PolyQP& operator*=(const PolyQP& o) { return *this = *this * o; }

    friend bool operator==(const PolyQP& a, const PolyQP& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyQP& a, const PolyQP& b) { return !(a == b); }

    PolyQP partial_q() const {
        PolyQP out;
        for (const auto& [k, c] : coeffs_)
            if (k.first > 0) out.add_term(k.first - 1, k.second, Rational(c * k.first));
        return out;
    }
    PolyQP partial_p() const {
        PolyQP out;
        for (const auto& [k, c] : coeffs_)
            if (k.second > 0) out.add_term(k.first, k.second - 1, Rational(c * k.second));
        return out;
    }

    Rational evaluate(const Rational& qv, const Rational& pv) const {
        Rational acc(0);
        for (const auto& [k, c] : coeffs_)
            acc += c * rational_pow(qv, k.first) * rational_pow(pv, k.second);
        return acc;
    }

    // Sparse text such as "3/2*q^2*p - p^3"; highest (deg_q, deg_p) first.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [k, c] = *it;
            Rational mag = c < 0 ? Rational(-c) : c;
            std::string vars;
            if (k.first > 0) vars = k.first == 1 ? "q" : "q^" + std::to_string(k.first);
            if (k.second > 0) {
                if (!vars.empty()) vars += "*";
                vars += k.second == 1 ? "p" : "p^" + std::to_string(k.second);
            }
            std::string piece;
            if (vars.empty())
                piece = rational_to_string(mag);
            else if (mag == 1)
                piece = vars;
            else
                piece = rational_to_string(mag) + "*" + vars;
            if (first) {
                out = (c < 0 ? "-" : "") + piece;
                first = false;
            } else {
                out += (c < 0 ? " - " : " + ") + piece;
            }
        }
        return out;
    }

    static PolyQP parse(std::string_view text);

private:
    std::map<std::pair<int, int>, Rational> coeffs_;

    void add_term(int dq, int dp, Rational c) {
        if (c == 0) return;
        auto key = std::make_pair(dq, dp);
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(key, std::move(c));
            return;
        }
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
};

// Autonomous polynomial flow (qdot, pdot).
struct Flow {
    PolyQP qdot;
    PolyQP pdot;
};

// {A, B} = (dA/dq)(dB/dp) - (dA/dp)(dB/dq)
inline PolyQP poisson_bracket(const PolyQP& a, const PolyQP& b) {
    return a.partial_q() * b.partial_p() - a.partial_p() * b.partial_q();
}

// dA/dt along the flow: (dA/dq)·qdot + (dA/dp)·pdot
inline PolyQP total_derivative(const PolyQP& a, const Flow& f) {
    return a.partial_q() * f.qdot + a.partial_p() * f.pdot;
}

inline PolyQP divergence(const Flow& f) { return f.qdot.partial_q() + f.pdot.partial_p(); }

// qdot = dH/dp, pdot = -dH/dq; always divergence-free.
inline Flow hamiltonian_flow(const PolyQP& h) { return {h.partial_p(), -h.partial_q()}; }

// d/dt{a,b} - {da/dt, b} - {a, db/dt}. Identically equal to
// -{a,b}·(d(qdot)/dq + d(pdot)/dp), so it vanishes exactly on Hamiltonian
// flows.
inline PolyQP leibniz_defect(const PolyQP& a, const PolyQP& b, const Flow& f) {
    return total_derivative(poisson_bracket(a, b), f) -
           poisson_bracket(total_derivative(a, f), b) - poisson_bracket(a, total_derivative(b, f));
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    PolyQP parse() {
        PolyQP out = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("PolyQP parse error at offset " + std::to_string(pos_) + ": " + what);
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
    bool at_primary() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'p' || c == '(';
    }

    PolyQP parse_sum() {
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        PolyQP acc = parse_product();
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

    PolyQP parse_product() {
        PolyQP acc = parse_factor();
        while (true) {
            if (consume('*'))
                acc *= parse_factor();
            else if (at_primary())
                acc *= parse_factor();
            else
                break;
        }
        return acc;
    }

    int parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) fail("integer too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    PolyQP parse_factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            PolyQP inner = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return apply_exponent(inner);
        }
        if (c == 'q' || c == 'p') {
            ++pos_;
            int e = 1;
            if (consume('^')) e = parse_uint();
            return c == 'q' ? PolyQP::q(e) : PolyQP::p(e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                num += text_[pos_++];
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string den;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    den += text_[pos_++];
                if (den.empty()) fail("expected denominator");
                num += "/" + den;
            }
            return apply_exponent(PolyQP::constant(parse_rational(num)));
        }
        fail("unexpected character");
    }

    PolyQP apply_exponent(const PolyQP& base) {
        if (!consume('^')) return base;
        int e = parse_uint();
        PolyQP acc = PolyQP::constant(Rational(1));
        for (int k = 0; k < e; ++k) acc *= base;
        return acc;
    }
};

}  // namespace detail

inline PolyQP PolyQP::parse(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace ordcalc::poisson
