#pragma once

#include "ordcalc/algebra.hpp"
#include "ordcalc/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordcalc::ncalg {

struct VarAtom {
    FamilyId family = 0;
    std::int32_t index = 0;  // 0 for plain families, 1..n for indexed ones
    std::int32_t shift = 0;  // number of primes

    friend bool operator==(const VarAtom&, const VarAtom&) = default;
};

using Word = std::vector<VarAtom>;

struct NormalTerm {
    std::uint32_t jpow = 0;
    Word word;
    Scalar coeff;
};

namespace detail {

inline void shift_atom(const Algebra& alg, VarAtom& atom, int steps) {
    if (!alg.traits_of(atom.family).constant) atom.shift += steps;
}

inline bool atom_less(const Algebra& alg, const VarAtom& a, const VarAtom& b) {
    const int ra = alg.rank_of(a.family), rb = alg.rank_of(b.family);
    if (ra != rb) return ra < rb;
    if (a.index != b.index) return a.index < b.index;
    return a.shift < b.shift;
}

inline int word_compare(const Algebra* alg, const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == b[k]) continue;
        return atom_less(*alg, a[k], b[k]) ? -1 : 1;
    }
    return 0;
}

inline int term_key_compare(const Algebra* alg, std::uint32_t ja, const Word& wa, std::uint32_t jb,
                            const Word& wb) {
    if (ja != jb) return ja < jb ? -1 : 1;
    return word_compare(alg, wa, wb);
}

// Canonical reordering of a word using only the swaps the relation table
// permits: repeatedly emit the least atom whose whole remaining prefix it may
// cross, accumulating q exponents for each q-commuting crossing. The output is
// the lexicographically least word reachable from the input, so equal ring
// elements get identical words no matter how they were assembled.
inline Word canonicalize_word(const Algebra& alg, Word w, long& q_exp) {
    Word out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t chosen = 0;
        for (std::size_t i = 1; i < w.size(); ++i) {
            bool movable = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (alg.relation(w[j].family, w[i].family) == RelationKind::free) {
                    movable = false;
                    break;
                }
            }
            if (movable && atom_less(alg, w[i], w[chosen])) chosen = i;
        }
        for (std::size_t j = 0; j < chosen; ++j)
            q_exp += alg.swap_q_exponent(w[j].family, w[chosen].family);
        out.push_back(w[chosen]);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(chosen));
    }
    return out;
}

}  // namespace detail

// Normal-form element of the discrete ordered calculus ring: a sum of terms
// coeff * J^jpow * word with all J factors collected on the left by the
// rewrite Z*J -> J*Z', pairwise distinct (jpow, word) keys and nonzero
// coefficients. Values are immutable; every operation returns a new normal
// form, so construction order never shows in the result.
class Expr {
public:
    Expr() = default;  // zero

    static Expr scalar(Scalar s) {
        Expr out;
        if (!s.is_zero()) out.terms_.push_back({0, {}, std::move(s)});
        return out;
    }
    static Expr one() { return scalar(Scalar(1)); }

    static Expr j(std::uint32_t power = 1) {
        Expr out;
        out.terms_.push_back({power, {}, Scalar(1)});
        return out;
    }

    static Expr var(std::shared_ptr<const Algebra> alg, const std::string& family, int index = 0,
                    int shift = 0) {
        if (!alg) throw std::invalid_argument("Expr::var: null algebra");
        const FamilyId fid = alg->id_of(family);
        const FamilyTraits& tr = alg->traits_of(fid);
        if (tr.index_count == 0) {
            if (index != 0)
                throw std::invalid_argument("Expr::var: family '" + family + "' is not indexed");
        } else if (index < 1 || index > tr.index_count) {
            throw std::invalid_argument("Expr::var: index out of range for family '" + family + "'");
        }
        if (shift < 0) throw std::invalid_argument("Expr::var: negative shift");
        if (tr.constant) shift = 0;  // c' = c
        alg->mark_used();
        Expr out;
        out.alg_ = std::move(alg);
        out.terms_.push_back({0, Word{VarAtom{fid, index, shift}}, Scalar(1)});
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<NormalTerm>& terms() const { return terms_; }
    const std::shared_ptr<const Algebra>& algebra() const { return alg_; }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].jpow == 0 && terms_[0].word.empty());
    }
    Scalar scalar_value() const {
        if (terms_.empty()) return {};
        if (!is_scalar()) throw std::invalid_argument("Expr: expression is not a scalar");
        return terms_[0].coeff;
    }

    const Scalar* coefficient(std::uint32_t jpow, const Word& word) const {
        for (const auto& t : terms_) {
            int c = detail::term_key_compare(alg_.get(), t.jpow, t.word, jpow, word);
            if (c == 0) return &t.coeff;
            if (c > 0) break;
        }
        return nullptr;
    }

    friend Expr operator-(const Expr& e) {
        Expr out;
        out.alg_ = e.alg_;
        out.terms_.reserve(e.terms_.size());
        for (const auto& t : e.terms_) out.terms_.push_back({t.jpow, t.word, -t.coeff});
        return out;
    }

    friend Expr operator+(const Expr& a, const Expr& b) {
        auto alg = unify(a.alg_, b.alg_);
        std::vector<NormalTerm> raw;
        raw.reserve(a.terms_.size() + b.terms_.size());
        raw.insert(raw.end(), a.terms_.begin(), a.terms_.end());
        raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
        return from_raw(std::move(alg), std::move(raw));
    }
    friend Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

    friend Expr operator*(const Expr& a, const Expr& b) {
        auto alg = unify(a.alg_, b.alg_);
        std::vector<NormalTerm> raw;
        raw.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                NormalTerm t;
                t.coeff = ta.coeff * tb.coeff;
                t.jpow = ta.jpow + tb.jpow;
                t.word.reserve(ta.word.size() + tb.word.size());
                for (VarAtom at : ta.word) {
                    detail::shift_atom(*alg, at, static_cast<int>(tb.jpow));  // word crosses J^jpow
                    t.word.push_back(at);
                }
                t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
                if (!t.word.empty()) {
                    long q_exp = 0;
                    t.word = detail::canonicalize_word(*alg, std::move(t.word), q_exp);
                    if (q_exp != 0) t.coeff.mul_q_power(static_cast<int>(q_exp));
                }
                raw.push_back(std::move(t));
            }
        }
        return from_raw(std::move(alg), std::move(raw));
    }

    friend Expr operator*(const Scalar& s, const Expr& e) {
        Expr out;
        if (s.is_zero()) return out;
        out.alg_ = e.alg_;
        for (const auto& t : e.terms_) {
            Scalar c = s * t.coeff;
            if (!c.is_zero()) out.terms_.push_back({t.jpow, t.word, std::move(c)});
        }
        return out;
    }
    friend Expr operator*(const Expr& e, const Scalar& s) { return s * e; }

    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }

    friend bool operator==(const Expr& a, const Expr& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t k = 0; k < a.terms_.size(); ++k) {
            const NormalTerm& x = a.terms_[k];
            const NormalTerm& y = b.terms_[k];
            if (x.jpow != y.jpow || x.word != y.word || x.coeff != y.coeff) return false;
        }
        // words name families by id, so both sides must agree on the table
        if (a.alg_ && b.alg_ && a.alg_ != b.alg_) {
            for (const auto& t : a.terms_)
                if (!t.word.empty()) return false;
        }
        return true;
    }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    friend Expr shift(const Expr& e, int steps) {
        if (steps < 0) throw std::domain_error("shift: the core ring has no inverse shift");
        Expr out = e;
        for (auto& t : out.terms_)
            for (auto& at : t.word) detail::shift_atom(*out.alg_, at, steps);
        return out;  // uniform shifts preserve canonical order
    }

private:
    std::shared_ptr<const Algebra> alg_;
    std::vector<NormalTerm> terms_;

    static std::shared_ptr<const Algebra> unify(const std::shared_ptr<const Algebra>& x,
                                                const std::shared_ptr<const Algebra>& y) {
        if (!x) return y;
        if (!y) return x;
        if (x != y) throw std::invalid_argument("Expr: mixing expressions from different algebras");
        return x;
    }

    static Expr from_raw(std::shared_ptr<const Algebra> alg, std::vector<NormalTerm> raw) {
        const Algebra* a = alg.get();
        std::sort(raw.begin(), raw.end(), [a](const NormalTerm& x, const NormalTerm& y) {
            return detail::term_key_compare(a, x.jpow, x.word, y.jpow, y.word) < 0;
        });
        Expr out;
        out.alg_ = std::move(alg);
        for (auto& t : raw) {
            if (!out.terms_.empty() &&
                detail::term_key_compare(a, out.terms_.back().jpow, out.terms_.back().word, t.jpow,
                                         t.word) == 0) {
                out.terms_.back().coeff += t.coeff;
                if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.terms_.push_back(std::move(t));
            }
        }
        return out;
    }
};

inline Expr shift(const Expr& e) { return shift(e, 1); }

inline Expr pow(const Expr& base, unsigned exponent) {
    Expr result = Expr::one();
    Expr acc = base;
    unsigned e = exponent;
    while (e != 0) {
        if (e & 1u) result = result * acc;
        e >>= 1u;
        if (e != 0) acc = acc * acc;
    }
    return result;
}

// dX = X' - X, the plain finite difference.
inline Expr difference(const Expr& e) { return shift(e) - e; }

// DX = [X, J]: measuring a difference advances the clock for everything
// written to its left. Normalizes to J*(X' - X).
inline Expr derivative(const Expr& e) {
    const Expr clock = Expr::j();
    return e * clock - clock * e;
}

inline Expr commutator(const Expr& a, const Expr& b) { return a * b - b * a; }

// [a,[b,c]] + [b,[c,a]] + [c,[a,b]]; identically zero in an associative ring.
inline Expr jacobi_defect(const Expr& a, const Expr& b, const Expr& c) {
    return commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
           commutator(c, commutator(a, b));
}

// d(ab) - a'·d(b) - d(a)·b; identically zero.
inline Expr leibniz_defect_difference(const Expr& a, const Expr& b) {
    return difference(a * b) - shift(a) * difference(b) - difference(a) * b;
}

// D(ab) - a·D(b) - D(a)·b; identically zero.
inline Expr leibniz_defect_derivative(const Expr& a, const Expr& b) {
    return derivative(a * b) - a * derivative(b) - derivative(a) * b;
}

// g^{ij} candidate: [X_i, D(X_j)] for an indexed family. Symmetric in (i, j)
// exactly when the family is declared self-commuting.
inline Expr metric(const std::shared_ptr<const Algebra>& alg, const std::string& family, int i,
                   int j) {
    Expr xi = Expr::var(alg, family, i);
    Expr xj = Expr::var(alg, family, j);
    return commutator(xi, derivative(xj));
}

}  // namespace ordcalc::ncalg
