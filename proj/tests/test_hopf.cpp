#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordcalc/hopf.hpp"
#include "ordcalc/json_io.hpp"
#include "ordcalc/verify.hpp"

using namespace ordcalc;
using namespace ordcalc::hopf;

TEST_CASE("sweedler satisfies every axiom") {
    FiniteHopf h = sweedler();
    CHECK(h.dim() == 4);
    HopfReport r = verify_hopf(h);
    for (const auto& c : r.checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.passed);
    }
    CHECK(r.all_passed());
}

TEST_CASE("corrupted multiplication is reported") {
    FiniteHopf h = sweedler();
    h.mult[1][1][2] = Scalar(1);  // g*g picks up a spurious x component
    HopfReport r = verify_hopf(h);
    CHECK_FALSE(r.all_passed());
    bool assoc_failed = false;
    for (const auto& c : r.checks)
        if (c.name == "multiplication associative" && !c.passed) assoc_failed = true;
    CHECK(assoc_failed);
}

TEST_CASE("corrupted antipode is reported") {
    FiniteHopf h = sweedler();
    h.antipode[2] = basis_element(h, 2);  // S(x) = x breaks the antipode axioms
    HopfReport r = verify_hopf(h);
    CHECK_FALSE(r.all_passed());
    bool axiom_failed = false;
    for (const auto& c : r.checks)
        if (c.name.rfind("antipode axiom", 0) == 0 && !c.passed) axiom_failed = true;
    CHECK(axiom_failed);
}

TEST_CASE("cyclic group algebras verify") {
    for (int n : {1, 2, 3, 5}) {
        FiniteHopf h = cyclic_group_algebra(n);
        CHECK(h.dim() == static_cast<std::size_t>(n));
        CHECK(verify_hopf(h).all_passed());
    }
    CHECK_THROWS_AS(cyclic_group_algebra(0), std::invalid_argument);
}

TEST_CASE("grouplike detection") {
    FiniteHopf h = sweedler();
    CHECK(is_grouplike(h, h.unit));
    CHECK(is_grouplike(h, basis_element(h, h.index_of("g"))));
    CHECK_FALSE(is_grouplike(h, basis_element(h, h.index_of("x"))));
    CHECK_FALSE(is_grouplike(h, basis_element(h, h.index_of("gx"))));
}

TEST_CASE("antipode square as conjugation") {
    FiniteHopf h = sweedler();
    const Element g = basis_element(h, h.index_of("g"));
    CHECK(antipode_square_is_conjugation(h, g));
    // S^2(x) = -x = g x g
    const Element x = basis_element(h, h.index_of("x"));
    CHECK(equal(apply_antipode(h, apply_antipode(h, x)), scale(Scalar(-1), x)));
    // the unit is grouplike but S^2 is not conjugation by it
    CHECK_FALSE(antipode_square_is_conjugation(h, h.unit));

    FiniteHopf cg = cyclic_group_algebra(4);
    CHECK(antipode_square_is_conjugation(cg, cg.unit));  // S^2 = id there
    CHECK_THROWS_AS(antipode_square_is_conjugation(h, x), std::domain_error);
}

TEST_CASE("doc derivative in the sweedler clock") {
    FiniteHopf h = sweedler();
    const Element g = basis_element(h, h.index_of("g"));
    const Element x = basis_element(h, h.index_of("x"));
    const Element gx = basis_element(h, h.index_of("gx"));

    CHECK(is_zero(doc_derivative(h, g, g)));
    CHECK(is_zero(doc_derivative(h, g, h.unit)));
    // xg - gx = -2 gx
    CHECK(equal(doc_derivative(h, g, x), scale(Scalar(-2), gx)));
    // product rule on all basis pairs
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = 0; b < h.dim(); ++b) {
            Element ea = basis_element(h, a);
            Element eb = basis_element(h, b);
            Element lhs = doc_derivative(h, g, mul(h, ea, eb));
            Element rhs = add(mul(h, ea, doc_derivative(h, g, eb)),
                              mul(h, doc_derivative(h, g, ea), eb));
            CHECK(equal(lhs, rhs));
        }
    CHECK_THROWS_AS(doc_derivative(h, x, g), std::domain_error);
}

TEST_CASE("time does not exist in a group algebra") {
    for (int n : {1, 2, 5}) {
        FiniteHopf h = cyclic_group_algebra(n);
        for (std::size_t gi = 0; gi < h.dim(); ++gi) {
            const Element cand = basis_element(h, gi);
            REQUIRE(is_grouplike(h, cand));
            for (std::size_t k = 0; k < h.dim(); ++k)
                CHECK(is_zero(doc_derivative(h, cand, basis_element(h, k))));
        }
    }
}

TEST_CASE("hopf suite") {
    verify::Report r = verify::hopf_suite();
    for (const auto& c : r.checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("structure constants round trip through json") {
    FiniteHopf h = sweedler();
    io::json j = io::hopf_to_json(h);
    FiniteHopf back = io::hopf_from_json(j);
    CHECK(back.dim() == 4);
    CHECK(verify_hopf(back).all_passed());
    CHECK(back.basis == h.basis);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) CHECK(equal(back.mult[i][k], h.mult[i][k]));

    io::json bad = j;
    bad["counit"] = {"1", "1"};
    CHECK_THROWS_AS(io::hopf_from_json(bad), std::invalid_argument);
}
