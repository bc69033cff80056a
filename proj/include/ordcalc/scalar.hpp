#pragma once

#include "ordcalc/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace ordcalc {

// Element of Q(i): exact complex number with rational parts. i*i == -1 exactly.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(long v) : re(v) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conjugate() const { return {re, Rational(-im)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {Rational(-a.re), Rational(-a.im)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational inverse() const {
        Rational n(re * re + im * im);
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return {Rational(re / n), Rational(-im / n)};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // "0", "3/2", "i", "-i", "3/4i", "3/2+1/2i", "3/2-i"
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        if (re != 0) out += rational_to_string(re);
        if (im != 0) {
            if (re != 0 && im > 0) out += "+";
            if (im == -1)
                out += "-";
            else if (im != 1)
                out += rational_to_string(im);
            out += "i";
        }
        return out;
    }
};

// Exact coefficient ring of the whole library: Laurent polynomials in the
// formal parameter q with Gaussian-rational coefficients. One ring serves the
// ordered calculus, the q-calculus and the network amplitudes.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) { add_term(0, GaussianRational(v)); }
    Scalar(Rational r) { add_term(0, GaussianRational(std::move(r))); }
    Scalar(GaussianRational g) { add_term(0, std::move(g)); }

    static Scalar i() { return Scalar(GaussianRational::i()); }
    static Scalar q(int exponent = 1) { return q_monomial(exponent, GaussianRational(1)); }
    static Scalar q_monomial(int exponent, GaussianRational coeff) {
        Scalar s;
        s.add_term(exponent, std::move(coeff));
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return *this == Scalar(1); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    bool is_real_rational() const {
        return is_constant() && (terms_.empty() || terms_.begin()->second.is_real());
    }
    // The q-free value; throws if the scalar depends on q.
    GaussianRational constant_value() const {
        if (terms_.empty()) return {};
        if (!is_constant()) throw std::logic_error("Scalar: not constant in q");
        return terms_.begin()->second;
    }

    std::size_t monomial_count() const { return terms_.size(); }
    const std::map<int, GaussianRational>& monomials() const { return terms_; }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator-(const Scalar& a) {
        Scalar out;
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
        return out;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar& mul_q_power(int exponent) {
        if (exponent == 0 || terms_.empty()) return *this;
        std::map<int, GaussianRational> shifted;
        for (auto& [e, c] : terms_) shifted.emplace(e + exponent, std::move(c));
        terms_ = std::move(shifted);
        return *this;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Exact Laurent division. An exact quotient has its exponents confined to
    // [num_min - den_min, num_max - den_max]; stepping below that window means
    // the division is inexact.
    static bool try_divide(const Scalar& num, const Scalar& den, Scalar& out) {
        if (den.is_zero()) return false;
        out = Scalar();
        if (num.is_zero()) return true;
        const int den_max = den.terms_.rbegin()->first;
        const int den_min = den.terms_.begin()->first;
        const int low_bound = num.terms_.begin()->first - den_min;
        const GaussianRational lead_inv = den.terms_.rbegin()->second.inverse();
        Scalar rem = num;
        while (!rem.is_zero()) {
            const int rem_max = rem.terms_.rbegin()->first;
            const int e = rem_max - den_max;
            if (e < low_bound) return false;
            GaussianRational c = rem.terms_.rbegin()->second * lead_inv;
            out.add_term(e, c);
            for (const auto& [de, dc] : den.terms_) rem.add_term(de + e, -(c * dc));
        }
        return true;
    }

    Scalar divide_exact(const Scalar& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("Scalar: division by zero");
        Scalar out;
        if (!try_divide(*this, divisor, out))
            throw std::logic_error("Scalar: inexact Laurent division");
        return out;
    }

    GaussianRational evaluate(const Rational& q_value) const {
        GaussianRational acc;
        for (const auto& [e, c] : terms_) acc += c * GaussianRational(rational_pow(q_value, e));
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string piece = monomial_string(e, c);
            if (first) {
                out = piece;
                first = false;
            } else if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        return out;
    }

private:
    std::map<int, GaussianRational> terms_;

    void add_term(int e, GaussianRational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    static std::string gaussian_factor_string(const GaussianRational& c) {
        // parenthesized when both parts are present so the result can stand
        // in a product
        std::string s = c.to_string();
        if (c.re != 0 && c.im != 0) return "(" + s + ")";
        return s;
    }

    static std::string monomial_string(int e, const GaussianRational& c) {
        std::string qpart;
        if (e == 1)
            qpart = "q";
        else if (e != 0)
            qpart = "q^" + std::to_string(e);
        if (qpart.empty()) return gaussian_factor_string(c);
        if (c == GaussianRational(1)) return qpart;
        if (c == GaussianRational(-1)) return "-" + qpart;
        return gaussian_factor_string(c) + "*" + qpart;
    }
};

}  // namespace ordcalc
