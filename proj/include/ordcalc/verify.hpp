#pragma once

#include "ordcalc/checkerboard.hpp"
#include "ordcalc/expr.hpp"
#include "ordcalc/hopf.hpp"
#include "ordcalc/netamp.hpp"
#include "ordcalc/poisson.hpp"
#include "ordcalc/qcalc.hpp"

#include <cstdint>
#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ordcalc::verify {

// Seeded generator with hand-rolled draws so identical seeds give identical
// runs on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    int uniform(int lo, int hi) {  // inclusive
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    bool chance(int num, int den) { return uniform(1, den) <= num; }

    Rational small_rational(int max_num = 6, int max_den = 4) {
        int num = uniform(-max_num, max_num);
        if (num == 0) num = 1;
        return make_rational(num, uniform(1, max_den));
    }

private:
    std::mt19937_64 eng_;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string suite;
    int cases = 0;
    std::vector<Check> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// --- randomized expressions over a mixed algebra ----------------------------

struct DocContext {
    std::shared_ptr<ncalg::Algebra> alg;
    std::vector<std::string> free_families{"X", "Y"};
    std::vector<std::string> scalar_families{"T", "U"};
    std::vector<std::string> q_families{"x", "y"};
};

inline DocContext make_doc_context() {
    DocContext ctx;
    ctx.alg = std::make_shared<ncalg::Algebra>();
    for (const auto& f : ctx.free_families) ctx.alg->declare(f);
    for (const auto& f : ctx.scalar_families) ctx.alg->declare(f, ncalg::scalar_family());
    for (const auto& f : ctx.q_families) ctx.alg->declare(f);
    ctx.alg->set_q_commute("x", "y", 1);
    return ctx;
}

inline ncalg::Expr random_atom(const DocContext& ctx, Rng& rng, int max_shift) {
    const int pool = static_cast<int>(ctx.free_families.size() + ctx.scalar_families.size() +
                                      ctx.q_families.size());
    const int pick = rng.uniform(0, pool - 1);
    const std::string* name;
    if (pick < static_cast<int>(ctx.free_families.size()))
        name = &ctx.free_families[pick];
    else if (pick < static_cast<int>(ctx.free_families.size() + ctx.scalar_families.size()))
        name = &ctx.scalar_families[pick - ctx.free_families.size()];
    else
        name = &ctx.q_families[pick - ctx.free_families.size() - ctx.scalar_families.size()];
    return ncalg::Expr::var(ctx.alg, *name, 0, rng.uniform(0, max_shift));
}

inline Scalar random_coeff(Rng& rng) {
    Scalar s(rng.small_rational());
    if (rng.chance(1, 4)) s *= Scalar::i();
    if (rng.chance(1, 4)) s = s * Scalar::q(rng.uniform(-2, 2));
    return s;
}

// Random product term: up to max_atoms variable atoms with J factors mixed in.
inline ncalg::Expr random_term(const DocContext& ctx, Rng& rng, int max_atoms, int max_shift) {
    ncalg::Expr prod = ncalg::Expr::scalar(random_coeff(rng));
    const int atoms = rng.uniform(0, max_atoms);
    for (int k = 0; k < atoms; ++k) {
        if (rng.chance(1, 5))
            prod = prod * ncalg::Expr::j();
        else
            prod = prod * random_atom(ctx, rng, max_shift);
    }
    return prod;
}

inline ncalg::Expr random_expr(const DocContext& ctx, Rng& rng, int max_terms, int max_atoms,
                               int max_shift) {
    ncalg::Expr sum;
    const int terms = rng.uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) sum += random_term(ctx, rng, max_atoms, max_shift);
    return sum;
}

// --- suites ------------------------------------------------------------------

// Identity suite for the ordered calculus; every check is exact (the defect
// expressions must normalize to the empty sum).
inline Report doc_identities(std::uint64_t seed, int cases) {
    Report report{"doc-identities", cases, {}};
    DocContext ctx = make_doc_context();

    auto run = [&](const std::string& name, auto&& fn) {
        Rng rng(seed ^ std::hash<std::string>{}(name));
        bool ok = true;
        std::string detail;
        for (int c = 0; c < cases && ok; ++c) {
            if (!fn(rng)) {
                ok = false;
                detail = "failed at case " + std::to_string(c);
            }
        }
        report.checks.push_back({name, ok, detail});
    };

    run("difference Leibniz defect vanishes", [&](Rng& rng) {
        ncalg::Expr a = random_expr(ctx, rng, 2, 6, 3);
        ncalg::Expr b = random_expr(ctx, rng, 2, 6, 3);
        return ncalg::leibniz_defect_difference(a, b).is_zero();
    });
    run("ordered derivative Leibniz defect vanishes", [&](Rng& rng) {
        ncalg::Expr a = random_expr(ctx, rng, 2, 6, 3);
        ncalg::Expr b = random_expr(ctx, rng, 2, 6, 3);
        return ncalg::leibniz_defect_derivative(a, b).is_zero();
    });
    run("Jacobi defect vanishes", [&](Rng& rng) {
        ncalg::Expr a = random_expr(ctx, rng, 2, 4, 3);
        ncalg::Expr b = random_expr(ctx, rng, 2, 4, 3);
        ncalg::Expr c = random_expr(ctx, rng, 2, 4, 3);
        return ncalg::jacobi_defect(a, b, c).is_zero();
    });
    run("derivative of a commutator obeys Leibniz", [&](Rng& rng) {
        ncalg::Expr a = random_expr(ctx, rng, 2, 5, 3);
        ncalg::Expr b = random_expr(ctx, rng, 2, 5, 3);
        ncalg::Expr defect = ncalg::derivative(ncalg::commutator(a, b)) -
                             ncalg::commutator(ncalg::derivative(a), b) -
                             ncalg::commutator(a, ncalg::derivative(b));
        return defect.is_zero();
    });
    run("derivative equals J*(shift - id)", [&](Rng& rng) {
        ncalg::Expr a = random_expr(ctx, rng, 3, 6, 3);
        return ncalg::derivative(a) == ncalg::Expr::j() * (ncalg::shift(a) - a);
    });
    run("shift is a ring homomorphism", [&](Rng& rng) {
        ncalg::Expr a = random_expr(ctx, rng, 2, 5, 3);
        ncalg::Expr b = random_expr(ctx, rng, 2, 5, 3);
        return ncalg::shift(a * b) == ncalg::shift(a) * ncalg::shift(b) &&
               ncalg::shift(a + b) == ncalg::shift(a) + ncalg::shift(b);
    });
    run("products normalize independently of association", [&](Rng& rng) {
        const int n = rng.uniform(2, 6);
        std::vector<ncalg::Expr> parts;
        for (int k = 0; k < n; ++k) {
            if (rng.chance(1, 5))
                parts.push_back(ncalg::Expr::j());
            else
                parts.push_back(random_atom(ctx, rng, 3));
        }
        ncalg::Expr left = parts[0];
        for (int k = 1; k < n; ++k) left = left * parts[k];
        // random binary association
        std::vector<ncalg::Expr> work = parts;
        while (work.size() > 1) {
            const int at = rng.uniform(0, static_cast<int>(work.size()) - 2);
            work[at] = work[at] * work[at + 1];
            work.erase(work.begin() + at + 1);
        }
        return left == work[0];
    });
    run("additive inverses cancel", [&](Rng& rng) {
        ncalg::Expr a = random_expr(ctx, rng, 3, 6, 3);
        return (a - a).is_zero();
    });
    return report;
}

inline poisson::PolyQP random_poly(Rng& rng, int max_degree) {
    poisson::PolyQP out;
    const int terms = rng.uniform(1, 4);
    for (int t = 0; t < terms; ++t) {
        const int dq = rng.uniform(0, max_degree);
        const int dp = rng.uniform(0, max_degree - dq);
        out += poisson::PolyQP::monomial(dq, dp, rng.small_rational());
    }
    return out;
}

inline Report poisson_suite(std::uint64_t seed, int cases) {
    Report report{"poisson", cases, {}};
    auto run = [&](const std::string& name, auto&& fn) {
        Rng rng(seed ^ std::hash<std::string>{}(name));
        bool ok = true;
        std::string detail;
        for (int c = 0; c < cases && ok; ++c)
            if (!fn(rng)) {
                ok = false;
                detail = "failed at case " + std::to_string(c);
            }
        report.checks.push_back({name, ok, detail});
    };

    run("exact Leibniz formula: defect + {A,B}*div = 0", [&](Rng& rng) {
        poisson::PolyQP a = random_poly(rng, 4);
        poisson::PolyQP b = random_poly(rng, 4);
        poisson::Flow f{random_poly(rng, 4), random_poly(rng, 4)};
        poisson::PolyQP lhs = poisson::leibniz_defect(a, b, f) +
                              poisson::poisson_bracket(a, b) * poisson::divergence(f);
        return lhs.is_zero();
    });
    run("Hamiltonian flows have zero defect", [&](Rng& rng) {
        poisson::PolyQP a = random_poly(rng, 4);
        poisson::PolyQP b = random_poly(rng, 4);
        poisson::Flow f = poisson::hamiltonian_flow(random_poly(rng, 4));
        return poisson::leibniz_defect(a, b, f).is_zero() && poisson::divergence(f).is_zero();
    });
    run("bracket antisymmetry", [&](Rng& rng) {
        poisson::PolyQP a = random_poly(rng, 4);
        poisson::PolyQP b = random_poly(rng, 4);
        return (poisson::poisson_bracket(a, b) + poisson::poisson_bracket(b, a)).is_zero();
    });
    run("bracket Jacobi identity", [&](Rng& rng) {
        poisson::PolyQP a = random_poly(rng, 3);
        poisson::PolyQP b = random_poly(rng, 3);
        poisson::PolyQP c = random_poly(rng, 3);
        using poisson::poisson_bracket;
        poisson::PolyQP sum = poisson_bracket(a, poisson_bracket(b, c)) +
                              poisson_bracket(b, poisson_bracket(c, a)) +
                              poisson_bracket(c, poisson_bracket(a, b));
        return sum.is_zero();
    });
    return report;
}

inline qcalc::QPoly random_qpoly(Rng& rng, int max_degree) {
    qcalc::QPoly out;
    const int terms = rng.uniform(1, 4);
    for (int t = 0; t < terms; ++t)
        out += qcalc::QPoly::monomial(rng.uniform(0, max_degree), Scalar(rng.small_rational()));
    return out;
}

inline Report qcalc_suite(std::uint64_t seed, int bridge_cases) {
    Report report{"qcalc", bridge_cases, {}};
    auto push = [&](const std::string& name, bool ok, std::string detail = "") {
        report.checks.push_back({name, ok, std::move(detail)});
    };

    {
        bool ok = true;
        for (int n = 1; n <= 20 && ok; ++n)
            ok = qcalc::dq(qcalc::QPoly::x(n)) ==
                 qcalc::QPoly::monomial(n - 1, qcalc::q_integer(n));
        push("monomial rule dq(x^n) = [n]_q x^(n-1)", ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= 12 && ok; ++n)
            for (int k = 0; k <= n && ok; ++k)
                ok = qcalc::q_binomial(n, k) == qcalc::q_binomial(n, n - k);
        push("q-binomial symmetry", ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= 12 && ok; ++n) {
            GaussianRational v = qcalc::q_integer(n).evaluate(Rational(1));
            ok = v == GaussianRational(n);
        }
        for (int n = 0; n <= 10 && ok; ++n) {
            long long binom = 1;
            for (int k = 0; k <= n && ok; ++k) {
                ok = qcalc::q_binomial(n, k).evaluate(Rational(1)) ==
                     GaussianRational(static_cast<long>(binom));
                binom = binom * (n - k) / (k + 1);
            }
        }
        push("classical values at q = 1", ok);
    }
    {
        bool ok = true;
        int bad = -1;
        for (int n = 0; n <= 10 && ok; ++n)
            if (!qcalc::q_binomial_theorem_check(n)) {
                ok = false;
                bad = n;
            }
        push("quantum-plane binomial theorem", ok, ok ? "" : "n = " + std::to_string(bad));
    }
    {
        Rng rng(seed ^ 0x9c6aull);
        bool ok = true;
        std::string detail;
        for (int c = 0; c < bridge_cases && ok; ++c) {
            qcalc::QPoly f = random_qpoly(rng, 6);
            Rational x0 = rng.small_rational();
            Rational delta = rng.small_rational();
            if (!qcalc::doc_bridge_check(f, x0, delta)) {
                ok = false;
                detail = "failed at case " + std::to_string(c);
            }
        }
        push("finite-difference / D_q bridge", ok, detail);
    }
    return report;
}

inline Report hopf_suite() {
    Report report{"hopf", 0, {}};
    auto push = [&](const std::string& name, bool ok, std::string detail = "") {
        report.checks.push_back({name, ok, std::move(detail)});
    };

    const hopf::FiniteHopf sw = hopf::sweedler();
    {
        hopf::HopfReport r = hopf::verify_hopf(sw);
        std::string detail;
        for (const auto& c : r.checks)
            if (!c.passed) detail += c.name + "; ";
        push("sweedler satisfies every Hopf axiom", r.all_passed(), detail);
    }
    const hopf::Element g = hopf::basis_element(sw, sw.index_of("g"));
    push("g is grouplike in sweedler", hopf::is_grouplike(sw, g));
    push("x is not grouplike in sweedler",
         !hopf::is_grouplike(sw, hopf::basis_element(sw, sw.index_of("x"))));
    push("S^2 = conjugation by g on sweedler", hopf::antipode_square_is_conjugation(sw, g));
    {
        bool s2_nontrivial = false;
        bool s4_identity = true;
        for (std::size_t k = 0; k < sw.dim(); ++k) {
            hopf::Element e = hopf::basis_element(sw, k);
            hopf::Element s2 = hopf::apply_antipode(sw, hopf::apply_antipode(sw, e));
            if (!hopf::equal(s2, e)) s2_nontrivial = true;
            hopf::Element s4 = hopf::apply_antipode(sw, hopf::apply_antipode(sw, s2));
            if (!hopf::equal(s4, e)) s4_identity = false;
        }
        push("sweedler antipode has order 4", s2_nontrivial && s4_identity);
    }
    {
        bool ok = true;
        for (std::size_t a = 0; a < sw.dim() && ok; ++a)
            for (std::size_t b = 0; b < sw.dim() && ok; ++b) {
                hopf::Element ea = hopf::basis_element(sw, a);
                hopf::Element eb = hopf::basis_element(sw, b);
                hopf::Element lhs = hopf::doc_derivative(sw, g, hopf::mul(sw, ea, eb));
                hopf::Element rhs = hopf::add(hopf::mul(sw, ea, hopf::doc_derivative(sw, g, eb)),
                                              hopf::mul(sw, hopf::doc_derivative(sw, g, ea), eb));
                ok = hopf::equal(lhs, rhs);
            }
        push("doc derivative obeys the product rule on sweedler", ok);
    }
    {
        bool ok = true;
        for (std::size_t k = 0; k < sw.dim() && ok; ++k) {
            hopf::Element e = hopf::basis_element(sw, k);
            hopf::Element via_antipode = hopf::mul(
                sw, g,
                hopf::sub(hopf::apply_antipode(sw, hopf::apply_antipode(sw, e)), e));
            ok = hopf::equal(hopf::doc_derivative(sw, g, e), via_antipode);
        }
        push("D(x) = g*(S^2(x) - x) on sweedler", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 6 && ok; ++n) {
            hopf::FiniteHopf cg = hopf::cyclic_group_algebra(n);
            if (!hopf::verify_hopf(cg).all_passed()) {
                ok = false;
                break;
            }
            for (std::size_t gi = 0; gi < cg.dim() && ok; ++gi) {
                hopf::Element cand = hopf::basis_element(cg, gi);
                if (!hopf::is_grouplike(cg, cand)) {
                    ok = false;
                    break;
                }
                for (std::size_t k = 0; k < cg.dim() && ok; ++k)
                    ok = hopf::is_zero(hopf::doc_derivative(cg, cand, hopf::basis_element(cg, k)));
            }
        }
        push("group algebras verify and have vanishing doc derivative", ok);
    }
    return report;
}

inline netamp::WeightMatrix random_matrix(Rng& rng, int n) {
    netamp::WeightMatrix m(n, std::vector<Scalar>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Scalar s(static_cast<long>(rng.uniform(-2, 2)));
            if (rng.chance(1, 3)) s += Scalar::i() * Scalar(static_cast<long>(rng.uniform(-1, 1)));
            m[r][c] = s;
        }
    return m;
}

inline Report netamp_oracles(std::uint64_t seed) {
    Report report{"netamp-oracles", 0, {}};
    auto push = [&](const std::string& name, bool ok, std::string detail = "") {
        report.checks.push_back({name, ok, std::move(detail)});
    };
    Rng rng(seed);

    {
        struct Case {
            const char* name;
            netamp::Network net;
        };
        const Case corpus[] = {{"theta", netamp::theta_graph()},
                               {"k4", netamp::k4_graph()},
                               {"prism", netamp::prism_graph()},
                               {"bridged", netamp::bridged_graph()},
                               {"cube", netamp::cube_graph()}};
        bool ok = true;
        std::string detail;
        for (const auto& c : corpus) {
            const long long amp = netamp::penrose_count(c.net);
            const long long brute = netamp::count_proper_3_edge_colorings(c.net);
            if (amp != brute) {
                ok = false;
                detail += std::string(c.name) + ": amp " + std::to_string(amp) + " vs brute " +
                          std::to_string(brute) + "; ";
            }
        }
        push("penrose amplitude counts proper 3-edge colorings", ok, detail);
    }
    {
        // permuted edge ids, rotated cyclic orders, reordered vertices
        netamp::Network net = netamp::k4_graph();
        netamp::Network perm;
        std::vector<int> relabel = {4, 2, 0, 5, 1, 3};
        perm.edges.resize(net.edges.size());
        for (std::size_t e = 0; e < net.edges.size(); ++e)
            perm.edges[relabel[e]] = {relabel[e], net.edges[e].domain};
        for (const auto& v : net.vertices) {
            std::vector<int> ids;
            for (int id : v) ids.push_back(relabel[id]);
            std::rotate(ids.begin(), ids.begin() + 1, ids.end());
            perm.vertices.push_back(ids);
        }
        std::rotate(perm.vertices.begin(), perm.vertices.begin() + 2, perm.vertices.end());
        const bool ok = netamp::penrose_count(net) == netamp::penrose_count(perm);
        push("amplitude independent of presentation", ok);
    }
    {
        // measurement reduction: summing the amplitude over all colors of any
        // one edge reproduces the unrestricted amplitude
        bool ok = true;
        for (const netamp::Network& net : {netamp::theta_graph(), netamp::k4_graph()}) {
            netamp::Amplitude whole = netamp::partition_function(net, netamp::penrose_rule());
            for (const auto& edge : net.edges) {
                Scalar sum;
                for (int c = 1; c <= edge.domain; ++c) {
                    netamp::Network measured = net;
                    measured.fixed[edge.id] = c;
                    sum += netamp::partition_function(measured, netamp::penrose_rule()).value;
                }
                ok = ok && sum == whole.value;
            }
        }
        push("measurement at an edge reduces the summation", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 4 && ok; ++n) {
            netamp::WeightMatrix m = random_matrix(rng, n);
            for (int len = 0; len <= 8 && ok; ++len) {
                const int a = rng.uniform(0, n - 1);
                const int b = rng.uniform(0, n - 1);
                Scalar fast = netamp::chain_amplitude(m, len, a, b);
                Scalar brute = netamp::chain_amplitude_brute_force(m, len, a, b);
                Scalar matpow = netamp::matrix_power_entry(m, len + 1, a, b);
                if (fast != brute || fast != matpow) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " m=" + std::to_string(len);
                }
            }
        }
        push("chain amplitude = path enumeration = matrix power", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int t = 0; t <= 10 && ok; ++t) {
            netamp::CheckerboardState st = netamp::checkerboard_evolve(t, 0, netamp::Dir::right);
            for (int x = -t; x <= t && ok; ++x)
                for (netamp::Dir dd : {netamp::Dir::left, netamp::Dir::right}) {
                    Scalar want = netamp::brute_force_path_sum(t, 0, netamp::Dir::right, x, dd);
                    if (st.at(t, x, dd) != want) {
                        ok = false;
                        detail = "t=" + std::to_string(t) + " x=" + std::to_string(x);
                    }
                }
        }
        push("checkerboard table equals the path sum", ok, detail);
    }
    {
        // random networks with random sparse weight tables: the pruned
        // depth-first evaluation must agree with plain enumeration
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 40 && ok; ++trial) {
            const int n_edges = rng.uniform(2, 6);
            const int n_vertices = rng.uniform(1, 3);
            netamp::Network net;
            std::vector<std::vector<int>> lists(n_vertices);
            for (int e = 0; e < n_edges; ++e) {
                net.edges.push_back({e, rng.uniform(2, 3)});
                lists[rng.uniform(0, n_vertices - 1)].push_back(e);
                if (rng.chance(1, 2)) lists[rng.uniform(0, n_vertices - 1)].push_back(e);
            }
            net.vertices.clear();
            for (auto& l : lists)
                if (!l.empty()) net.vertices.push_back(l);
            if (net.vertices.empty()) continue;
            if (rng.chance(1, 3)) net.fixed[rng.uniform(0, n_edges - 1)] = 1;
            // sparse random weights; zeros exercise the pruning path
            auto rule = [&, weights = trial](std::size_t v, const std::vector<int>& colors) {
                std::size_t h = v * 31 + static_cast<std::size_t>(weights) * 131;
                for (int c : colors) h = h * 37 + static_cast<std::size_t>(c);
                switch (h % 5) {
                    case 0: return Scalar();
                    case 1: return Scalar(1);
                    case 2: return Scalar(-2);
                    case 3: return Scalar::i();
                    default: return Scalar(GaussianRational(make_rational(1, 2), Rational(1)));
                }
            };
            netamp::Amplitude fast = netamp::partition_function(net, rule);
            netamp::Amplitude brute = netamp::partition_function_brute_force(net, rule);
            if (fast.value != brute.value || fast.colorings != brute.colorings) {
                ok = false;
                detail = "trial " + std::to_string(trial);
            }
        }
        push("pruned evaluation equals plain enumeration on random networks", ok, detail);
    }
    return report;
}

}  // namespace ordcalc::verify
