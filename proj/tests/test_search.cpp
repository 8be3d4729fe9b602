#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfk/parse.hpp"
#include "mfk/search.hpp"

using namespace mfk;

namespace {

Polynomial P(const std::string& text, std::uint32_t nvars, Field k) {
    return parse_polynomial(text, k, VarTable::defaults(nvars));
}

// All linear forms in nvars variables over F_p (including zero), as
// coefficient-vector enumerations.
std::vector<Polynomial> all_linear_forms(Field k, std::uint32_t nvars) {
    const std::uint64_t p = k.characteristic();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < nvars; ++i) total *= p;
    std::vector<Polynomial> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        Polynomial f(k, nvars);
        for (std::uint32_t i = 0; i < nvars; ++i) {
            f += Polynomial::variable(k, nvars, i).scaled(Scalar::of_int(k, (long)(c % p)));
            c /= p;
        }
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

TEST_CASE("rank-1 non-existence matches brute force over products") {
    // Oracle first: over F2, multiply out every pair of linear forms in four
    // variables (256 products) and confirm none equals z0*z2 + z1*z3.  The
    // search over the same space must then be exhaustive with no hit.
    Field k = Field::prime(2);
    Polynomial f = P("z0*z2 + z1*z3", 4, k);
    bool hit = false;
    std::vector<Polynomial> lin = all_linear_forms(k, 4);
    for (const Polynomial& g : lin)
        for (const Polynomial& h : lin)
            if (g * h == f) hit = true;
    REQUIRE(!hit);

    SearchResult r = search_reduced_mf(f, FreeModule{{0}}, FreeModule{{1}});
    CHECK(!r.found.has_value());
    CHECK(r.exhaustive);
    CHECK(r.candidates_tried == 16); // 2^4 coefficient vectors for phi
}

TEST_CASE("rank-2 search finds a verified factorization") {
    Field k = Field::prime(2);
    Polynomial f = P("z0*z2 + z1*z3", 4, k);
    SearchResult r = search_reduced_mf(f, FreeModule{{0, 0}}, FreeModule{{1, 1}});
    REQUIRE(r.found.has_value());
    CHECK(verify(*r.found).ok());
    CHECK(r.found->f == f);
    CHECK(r.found->rank() == 2);
    CHECK(!r.exhaustive); // stopped at the first hit
    CHECK(r.candidates_tried > 0);

    // The enumeration order is canonical, so a second run retraces it.
    SearchResult r2 = search_reduced_mf(f, FreeModule{{0, 0}}, FreeModule{{1, 1}});
    REQUIRE(r2.found.has_value());
    CHECK(r2.candidates_tried == r.candidates_tried);
    CHECK(r2.found->phi == r.found->phi);
    CHECK(r2.found->psi == r.found->psi);
}

TEST_CASE("rank-1 search solves a product form") {
    // f = z0*z1 factors as (g)*(h) with g linear; the first candidate in
    // canonical order with a solvable partner is g = z1 (the trailing
    // coefficient varies fastest), giving psi = (z0).
    Field k = Field::prime(2);
    Polynomial f = P("z0*z1", 2, k);
    SearchResult r = search_reduced_mf(f, FreeModule{{0}}, FreeModule{{1}});
    REQUIRE(r.found.has_value());
    CHECK(verify(*r.found).ok());
    CHECK(r.found->phi.entry(0, 0) == P("z1", 2, k));
    CHECK(r.found->psi.entry(0, 0) == P("z0", 2, k));
    CHECK(r.candidates_tried == 2); // zero matrix skipped, then (z1) hits

    // Over F3 the same pattern works and still finds a factorization.
    Field k3 = Field::prime(3);
    Polynomial f3 = P("z0*z1", 2, k3);
    SearchResult r3 = search_reduced_mf(f3, FreeModule{{0}}, FreeModule{{1}});
    REQUIRE(r3.found.has_value());
    CHECK(verify(*r3.found).ok());
}

TEST_CASE("mixed-degree pattern with forced zeros") {
    // Pattern 0,1 : 1,2 over F2 for a cubic: phi entry degrees are
    //   [[1, 2], [0, 1]], so the (1,0) entry is forced to zero (a reduced
    //   factorization has no constants) but the diagonal stays feasible.
    Field k = Field::prime(2);
    Polynomial f = P("z0^2*z1 + z1^3 + z0*z1*z2", 3, k); // z1 * (z0^2 + z1^2 + z0*z2)
    SearchResult r = search_reduced_mf(f, FreeModule{{0, 1}}, FreeModule{{1, 2}});
    if (r.found.has_value()) {
        CHECK(verify(*r.found).ok());
        CHECK(r.found->phi.entry(1, 0).is_zero());
    } else {
        CHECK(r.exhaustive);
    }
}

TEST_CASE("infeasible diagonal is rejected without enumeration") {
    // Pattern 0,1 : 1,1 makes the (1,1) diagonal entry degree 0: that row of
    // phi is identically zero in any reduced candidate, so no product can
    // equal f * id.  The search reports exhaustive non-existence at cost 0.
    Field k = Field::prime(2);
    Polynomial f = P("z0*z2 + z1*z3", 4, k);
    SearchResult r = search_reduced_mf(f, FreeModule{{0, 1}}, FreeModule{{1, 1}});
    CHECK(!r.found.has_value());
    CHECK(r.exhaustive);
    CHECK(r.candidates_tried == 0);
}

TEST_CASE("search budget") {
    // Four cubic-entry slots in four variables over F3: 3^80 assignments,
    // far past the 2^30 cap.
    Field k = Field::prime(3);
    Polynomial f = P("z0^4 + z1^4 + z2^4 + z3^4", 4, k);
    CHECK_THROWS_AS(
        search_reduced_mf(f, FreeModule{{0, 0}}, FreeModule{{3, 3}}), budget_error);
}

TEST_CASE("scope validation") {
    Field k2 = Field::prime(2);
    Field q = Field::rationals();

    CHECK_THROWS_AS(search_reduced_mf(P("z0*z1", 2, q), FreeModule{{0}}, FreeModule{{1}}),
                    domain_error); // rationals
    CHECK_THROWS_AS(
        search_reduced_mf(P("z0*z1", 2, Field::prime(5)), FreeModule{{0}}, FreeModule{{1}}),
        domain_error); // p too large
    CHECK_THROWS_AS(
        search_reduced_mf(P("z0*z4", 5, k2), FreeModule{{0}}, FreeModule{{1}}),
        domain_error); // too many variables
    CHECK_THROWS_AS(search_reduced_mf(P("z0*z1", 2, k2), FreeModule{{0, 0, 0}},
                                      FreeModule{{1, 1, 1}}),
                    domain_error); // rank 3
    CHECK_THROWS_AS(search_reduced_mf(P("z0*z1", 2, k2), FreeModule{{0, 0}}, FreeModule{{1}}),
                    domain_error); // not square
    CHECK_THROWS_AS(search_reduced_mf(P("z0", 2, k2), FreeModule{{0}}, FreeModule{{1}}),
                    domain_error); // degree 1
    CHECK_THROWS_AS(search_reduced_mf(P("z0 + z0*z1", 2, k2), FreeModule{{0}}, FreeModule{{1}}),
                    domain_error); // inhomogeneous
}
