#pragma once

#include "ordcalc/scalar.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ordcalc::hopf {

using ::ordcalc::Scalar;

using Element = std::vector<Scalar>;  // coordinates over the basis

struct CoTerm {
    std::size_t left = 0;
    std::size_t right = 0;
    Scalar coeff;
};

// Finite-dimensional Hopf algebra by structure constants over exact scalars.
// mult[i][j] holds the coordinates of e_i * e_j; comult[i] lists the Sweedler
// summands of e_i; antipode[i] are the coordinates of S(e_i).
struct FiniteHopf {
    std::vector<std::string> basis;
    Element unit;
    std::vector<std::vector<Element>> mult;
    std::vector<std::vector<CoTerm>> comult;
    std::vector<Scalar> counit;
    std::vector<Element> antipode;

    std::size_t dim() const { return basis.size(); }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == label) return k;
        throw std::invalid_argument("FiniteHopf: unknown basis label '" + label + "'");
    }
};

inline void validate_shape(const FiniteHopf& h) {
    const std::size_t n = h.dim();
    if (n == 0) throw std::invalid_argument("FiniteHopf: empty basis");
    auto check_vec = [n](const Element& v, const char* what) {
        if (v.size() != n) throw std::invalid_argument(std::string("FiniteHopf: bad length for ") + what);
    };
    check_vec(h.unit, "unit");
    if (h.mult.size() != n || h.comult.size() != n || h.counit.size() != n || h.antipode.size() != n)
        throw std::invalid_argument("FiniteHopf: structure tensors do not match dimension");
    for (const auto& row : h.mult) {
        if (row.size() != n) throw std::invalid_argument("FiniteHopf: mult tensor not square");
        for (const auto& cell : row) check_vec(cell, "mult entry");
    }
    for (const auto& terms : h.comult)
        for (const auto& t : terms)
            if (t.left >= n || t.right >= n)
                throw std::invalid_argument("FiniteHopf: comult index out of range");
    for (const auto& s : h.antipode) check_vec(s, "antipode row");
}

inline Element zero_element(const FiniteHopf& h) { return Element(h.dim()); }

inline Element basis_element(const FiniteHopf& h, std::size_t k) {
    Element e(h.dim());
    e.at(k) = Scalar(1);
    return e;
}

inline bool is_zero(const Element& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

inline bool equal(const Element& a, const Element& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

inline Element add(const Element& a, const Element& b) {
    Element out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

inline Element sub(const Element& a, const Element& b) {
    Element out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
    return out;
}

inline Element scale(const Scalar& s, const Element& a) {
    Element out = a;
    for (auto& c : out) c = s * c;
    return out;
}

inline Element mul(const FiniteHopf& h, const Element& a, const Element& b) {
    Element out(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < h.dim(); ++j) {
            if (b[j].is_zero()) continue;
            const Scalar c = a[i] * b[j];
            const Element& coords = h.mult[i][j];
            for (std::size_t k = 0; k < h.dim(); ++k)
                if (!coords[k].is_zero()) out[k] += c * coords[k];
        }
    }
    return out;
}

inline Element apply_antipode(const FiniteHopf& h, const Element& a) {
    Element out(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t k = 0; k < h.dim(); ++k)
            if (!h.antipode[i][k].is_zero()) out[k] += a[i] * h.antipode[i][k];
    }
    return out;
}

inline Scalar apply_counit(const FiniteHopf& h, const Element& a) {
    Scalar out;
    for (std::size_t i = 0; i < h.dim(); ++i) out += a[i] * h.counit[i];
    return out;
}

using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, Scalar>;
using Tensor3 = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar>;

namespace detail {

inline void tensor_add(Tensor2& t, std::size_t a, std::size_t b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

inline void tensor_add(Tensor3& t, std::size_t a, std::size_t b, std::size_t c, const Scalar& v) {
    if (v.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
}

}  // namespace detail

inline Tensor2 comult_of(const FiniteHopf& h, const Element& a) {
    Tensor2 out;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& t : h.comult[i]) detail::tensor_add(out, t.left, t.right, a[i] * t.coeff);
    }
    return out;
}

inline Tensor2 tensor_product(const Element& a, const Element& b) {
    Tensor2 out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) detail::tensor_add(out, i, j, a[i] * b[j]);
    }
    return out;
}

// componentwise product in H (x) H
inline Tensor2 tensor_mul(const FiniteHopf& h, const Tensor2& x, const Tensor2& y) {
    Tensor2 out;
    for (const auto& [kx, cx] : x) {
        for (const auto& [ky, cy] : y) {
            const Scalar c = cx * cy;
            const Element& left = h.mult[kx.first][ky.first];
            const Element& right = h.mult[kx.second][ky.second];
            for (std::size_t a = 0; a < h.dim(); ++a) {
                if (left[a].is_zero()) continue;
                for (std::size_t b = 0; b < h.dim(); ++b)
                    if (!right[b].is_zero()) detail::tensor_add(out, a, b, c * left[a] * right[b]);
            }
        }
    }
    return out;
}

struct AxiomCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct HopfReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Verifies every Hopf axiom by finite enumeration over basis tuples.
inline HopfReport verify_hopf(const FiniteHopf& h) {
    validate_shape(h);
    if (h.dim() > 16) throw std::invalid_argument("verify_hopf: dimension cap is 16");
    const std::size_t n = h.dim();
    HopfReport report;
    auto record = [&](const std::string& name, bool ok, std::string detail = "") {
        report.checks.push_back({name, ok, std::move(detail)});
    };

    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                for (std::size_t k = 0; k < n && ok; ++k) {
                    Element lhs = mul(h, h.mult[i][j], basis_element(h, k));
                    Element rhs = mul(h, basis_element(h, i), h.mult[j][k]);
                    if (!equal(lhs, rhs)) {
                        ok = false;
                        where = "(" + h.basis[i] + "," + h.basis[j] + "," + h.basis[k] + ")";
                    }
                }
        record("multiplication associative", ok, where);
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Element e = basis_element(h, i);
            ok = equal(mul(h, h.unit, e), e) && equal(mul(h, e, h.unit), e);
        }
        record("unit law", ok);
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Tensor3 lhs, rhs;
            for (const auto& t : h.comult[i]) {
                for (const auto& u : h.comult[t.left])
                    detail::tensor_add(lhs, u.left, u.right, t.right, t.coeff * u.coeff);
                for (const auto& u : h.comult[t.right])
                    detail::tensor_add(rhs, t.left, u.left, u.right, t.coeff * u.coeff);
            }
            ok = lhs == rhs;
        }
        record("comultiplication coassociative", ok);
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Element left(n), right(n);
            for (const auto& t : h.comult[i]) {
                left = add(left, scale(t.coeff * h.counit[t.left], basis_element(h, t.right)));
                right = add(right, scale(t.coeff * h.counit[t.right], basis_element(h, t.left)));
            }
            Element e = basis_element(h, i);
            ok = equal(left, e) && equal(right, e);
        }
        record("counit law", ok);
    }
    {
        bool ok = comult_of(h, h.unit) == tensor_product(h.unit, h.unit);
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Tensor2 lhs = comult_of(h, h.mult[i][j]);
                Tensor2 rhs = tensor_mul(h, comult_of(h, basis_element(h, i)),
                                         comult_of(h, basis_element(h, j)));
                if (lhs != rhs) {
                    ok = false;
                    where = "(" + h.basis[i] + "," + h.basis[j] + ")";
                }
            }
        record("comultiplication is an algebra map", ok, where);
    }
    {
        bool ok = apply_counit(h, h.unit) == Scalar(1);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                ok = apply_counit(h, h.mult[i][j]) == h.counit[i] * h.counit[j];
        record("counit is an algebra map", ok);
    }
    {
        bool left_ok = true, right_ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            Element left(n), right(n);
            for (const auto& t : h.comult[i]) {
                left = add(left, scale(t.coeff, mul(h, h.antipode[t.left], basis_element(h, t.right))));
                right = add(right, scale(t.coeff, mul(h, basis_element(h, t.left), h.antipode[t.right])));
            }
            Element want = scale(h.counit[i], h.unit);
            if (!equal(left, want)) left_ok = false;
            if (!equal(right, want)) right_ok = false;
        }
        record("antipode axiom (left)", left_ok);
        record("antipode axiom (right)", right_ok);
    }
    {
        bool ok = equal(apply_antipode(h, h.unit), h.unit);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Element lhs = apply_antipode(h, h.mult[i][j]);
                Element rhs = mul(h, h.antipode[j], h.antipode[i]);
                ok = equal(lhs, rhs);
            }
        record("antipode is an antimorphism", ok);
    }
    return report;
}

// Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
inline bool is_grouplike(const FiniteHopf& h, const Element& g) {
    validate_shape(h);
    if (g.size() != h.dim()) throw std::invalid_argument("is_grouplike: wrong element length");
    if (comult_of(h, g) != tensor_product(g, g)) return false;
    if (apply_counit(h, g) != Scalar(1)) return false;
    const Element inv = apply_antipode(h, g);
    return equal(mul(h, inv, g), h.unit) && equal(mul(h, g, inv), h.unit);
}

// S^2(x) == g^{-1} x g for every basis x.
inline bool antipode_square_is_conjugation(const FiniteHopf& h, const Element& g) {
    if (!is_grouplike(h, g)) throw std::domain_error("antipode_square_is_conjugation: g is not grouplike");
    const Element inv = apply_antipode(h, g);
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Element s2 = apply_antipode(h, h.antipode[i]);
        Element conj = mul(h, inv, mul(h, basis_element(h, i), g));
        if (!equal(s2, conj)) return false;
    }
    return true;
}

// D(x) = [x, g] = x g - g x = g (S^2(x) - x) once S^2 is conjugation by g.
inline Element doc_derivative(const FiniteHopf& h, const Element& g, const Element& x) {
    if (!antipode_square_is_conjugation(h, g))
        throw std::domain_error("doc_derivative: S^2 is not conjugation by g");
    if (x.size() != h.dim()) throw std::invalid_argument("doc_derivative: wrong element length");
    return sub(mul(h, x, g), mul(h, g, x));
}

// The four-dimensional Hopf algebra on {1, g, x, gx} with g^2 = 1, x^2 = 0,
// xg = -gx; its antipode has order 4, so conjugation by g is a genuine clock.
inline FiniteHopf sweedler() {
    FiniteHopf h;
    h.basis = {"1", "g", "x", "gx"};
    const std::size_t n = 4;
    auto coords = [n](std::initializer_list<std::pair<std::size_t, long>> parts) {
        Element e(n);
        for (auto [k, v] : parts) e[k] = Scalar(v);
        return e;
    };
    h.unit = coords({{0, 1}});
    h.mult.assign(n, std::vector<Element>(n, Element(n)));
    // rows: left factor 1, g, x, gx
    h.mult[0][0] = coords({{0, 1}});
    h.mult[0][1] = coords({{1, 1}});
    h.mult[0][2] = coords({{2, 1}});
    h.mult[0][3] = coords({{3, 1}});
    h.mult[1][0] = coords({{1, 1}});
    h.mult[1][1] = coords({{0, 1}});
    h.mult[1][2] = coords({{3, 1}});
    h.mult[1][3] = coords({{2, 1}});
    h.mult[2][0] = coords({{2, 1}});
    h.mult[2][1] = coords({{3, -1}});
    h.mult[2][2] = coords({});
    h.mult[2][3] = coords({});
    h.mult[3][0] = coords({{3, 1}});
    h.mult[3][1] = coords({{2, -1}});
    h.mult[3][2] = coords({});
    h.mult[3][3] = coords({});
    h.comult = {
        {{0, 0, Scalar(1)}},
        {{1, 1, Scalar(1)}},
        {{2, 0, Scalar(1)}, {1, 2, Scalar(1)}},
        {{3, 1, Scalar(1)}, {0, 3, Scalar(1)}},
    };
    h.counit = {Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
    h.antipode = {coords({{0, 1}}), coords({{1, 1}}), coords({{3, -1}}), coords({{2, 1}})};
    return h;
}

// Group algebra of Z/n: every antipode square is the identity, so the doc
// derivative vanishes for every grouplike; no clock ticks here.
inline FiniteHopf cyclic_group_algebra(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group_algebra: n must be >= 1");
    FiniteHopf h;
    const std::size_t dim = static_cast<std::size_t>(n);
    h.basis.resize(dim);
    for (std::size_t k = 0; k < dim; ++k)
        h.basis[k] = k == 0 ? "1" : (k == 1 ? "g" : "g" + std::to_string(k));
    h.unit = Element(dim);
    h.unit[0] = Scalar(1);
    h.mult.assign(dim, std::vector<Element>(dim, Element(dim)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) h.mult[i][j][(i + j) % dim] = Scalar(1);
    h.comult.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) h.comult[i] = {{i, i, Scalar(1)}};
    h.counit.assign(dim, Scalar(1));
    h.antipode.assign(dim, Element(dim));
    for (std::size_t i = 0; i < dim; ++i) h.antipode[i][(dim - i) % dim] = Scalar(1);
    return h;
}

}  // namespace ordcalc::hopf
