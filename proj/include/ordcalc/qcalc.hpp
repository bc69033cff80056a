#pragma once

#include "ordcalc/expr.hpp"
#include "ordcalc/scalar.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace ordcalc::qcalc {

using QScalar = ::ordcalc::Scalar;

// Polynomial in x whose coefficients are exact Laurent polynomials in q.
class QPoly {
public:
    QPoly() = default;

    static QPoly x(int degree = 1) { return monomial(degree, QScalar(1)); }
    static QPoly constant(QScalar c) { return monomial(0, std::move(c)); }
    static QPoly monomial(int degree, QScalar c) {
        if (degree < 0) throw std::invalid_argument("QPoly: negative degree");
        QPoly out;
        out.add_term(degree, std::move(c));
        return out;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    const std::map<int, QScalar>& monomials() const { return coeffs_; }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [d, c] : o.coeffs_) add_term(d, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(const QPoly& a) {
        QPoly out;
        for (const auto& [d, c] : a.coeffs_) out.coeffs_.emplace(d, -c);
        return out;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly out;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
        return out;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [d, c] = *it;
            std::string xpart;
            if (d == 1)
                xpart = "x";
            else if (d > 1)
                xpart = "x^" + std::to_string(d);
            std::string piece;
            if (xpart.empty())
                piece = c.monomial_count() > 1 ? "(" + c.to_string() + ")" : c.to_string();
            else if (c.is_one())
                piece = xpart;
            else if (c == QScalar(-1))
                piece = "-" + xpart;
            else
                piece = (c.monomial_count() > 1 ? "(" + c.to_string() + ")" : c.to_string()) + "*" +
                        xpart;
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
    std::map<int, QScalar> coeffs_;

    void add_term(int d, QScalar c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            coeffs_.emplace(d, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
};

// [n]_q = 1 + q + ... + q^(n-1); at q = 1 equals n.
inline QScalar q_integer(int n) {
    if (n < 0) throw std::invalid_argument("q_integer: negative n");
    QScalar out;
    for (int e = 0; e < n; ++e) out += QScalar::q(e);
    return out;
}

inline QScalar q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative n");
    QScalar out(1);
    for (int k = 1; k <= n; ++k) out *= q_integer(k);
    return out;
}

// [n]_q! / ([k]_q! [n-k]_q!); the division is exact and the result is a
// genuine polynomial in q.
inline QScalar q_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k));
}

// D_q f(x) = (f(qx) - f(x)) / (qx - x), computed by that quotient: the
// degree-n coefficient difference c*(q^n - 1) divides exactly by (q - 1) and
// one power of x drops.
inline QPoly dq(const QPoly& f) {
    const QScalar q_minus_1 = QScalar::q() - QScalar(1);
    QPoly out;
    for (const auto& [n, c] : f.monomials()) {
        if (n == 0) continue;  // q^0 - 1 == 0
        QScalar num = c * (QScalar::q(n) - QScalar(1));
        out += QPoly::monomial(n - 1, num.divide_exact(q_minus_1));
    }
    return out;
}

inline GaussianRational evaluate(const QPoly& f, const Rational& x, const Rational& q_value) {
    GaussianRational acc;
    for (const auto& [n, c] : f.monomials())
        acc += c.evaluate(q_value) * GaussianRational(rational_pow(x, n));
    return acc;
}

// Expands (x+y)^n on the quantum plane yx = qxy and checks every coefficient
// of x^k y^(n-k) against the q-binomial computed by the factorial ratio.
inline bool q_binomial_theorem_check(int n) {
    if (n < 0) throw std::invalid_argument("q_binomial_theorem_check: negative n");
    auto alg = std::make_shared<ncalg::Algebra>();
    alg->declare("x");
    alg->declare("y");
    alg->set_q_commute("x", "y", 1);
    const ncalg::FamilyId fx = alg->id_of("x");
    const ncalg::FamilyId fy = alg->id_of("y");
    ncalg::Expr sum = ncalg::Expr::var(alg, "x") + ncalg::Expr::var(alg, "y");
    ncalg::Expr expansion = ncalg::pow(sum, static_cast<unsigned>(n));
    if (expansion.term_count() != static_cast<std::size_t>(n) + 1) return false;
    for (int k = 0; k <= n; ++k) {
        ncalg::Word w;
        for (int c = 0; c < k; ++c) w.push_back({fx, 0, 0});
        for (int c = 0; c < n - k; ++c) w.push_back({fy, 0, 0});
        const Scalar* got = expansion.coefficient(0, w);
        const QScalar want = q_binomial(n, k);
        if (got == nullptr ? !want.is_zero() : *got != want) return false;
    }
    return true;
}

// Checks the bridge q = (x0 + delta)/x0 between the plain finite difference
// quotient and D_q, exactly in rationals.
inline bool doc_bridge_check(const QPoly& f, const Rational& x0, const Rational& delta) {
    if (x0 == 0) throw std::domain_error("doc_bridge_check: x0 must be nonzero");
    if (delta == 0) throw std::domain_error("doc_bridge_check: delta must be nonzero");
    Rational x1(x0 + delta);
    Rational qv((x0 + delta) / x0);
    GaussianRational lhs =
        (evaluate(f, x1, qv) - evaluate(f, x0, qv)) * GaussianRational(Rational(1) / delta);
    GaussianRational rhs = evaluate(dq(f), x0, qv);
    return lhs == rhs;
}

}  // namespace ordcalc::qcalc
