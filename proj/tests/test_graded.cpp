#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mfk/graded.hpp"
#include "mfk/parse.hpp"

using namespace mfk;

namespace {

const Field Q = Field::rationals();

Polynomial P(const std::string& text, std::uint32_t nvars, Field k = Q) {
    return parse_polynomial(text, k, VarTable::defaults(nvars));
}

// Independent oracle for determinant checks: evaluate the matrix at a scalar
// point and run plain Gaussian elimination over the field.
Scalar det_at_point(const GradedMatrix& m, const std::vector<Scalar>& pt) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar::zero(m.field())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.entry(i, j).evaluate(pt);
    Scalar det = Scalar::one(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Scalar::zero(m.field());
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Scalar inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            Scalar factor = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

// Random graded matrix: all twists zero on the source, -deg on nothing;
// simplest useful shape is entries of uniform degree d.
GradedMatrix random_uniform_matrix(std::uint32_t n, long deg, std::uint32_t nvars,
                                   std::mt19937_64& rng) {
    FreeModule tgt{std::vector<long>(n, 0)};
    FreeModule src{std::vector<long>(n, deg)};
    GradedMatrix m(Q, nvars, src, tgt);
    const std::vector<Monomial> monos = monomials_of_degree(nvars, deg);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::vector<Term> terms;
            const std::size_t count = 1 + rng() % 2;
            for (std::size_t t = 0; t < count; ++t)
                terms.push_back({monos[rng() % monos.size()],
                                 Scalar::of_int(Q, static_cast<long>(rng() % 7) - 3)});
            m.set_entry(i, j, Polynomial::from_terms(Q, nvars, std::move(terms)));
        }
    return m;
}

} // namespace

TEST_CASE("modules and twists") {
    FreeModule m{{0, 1, 2}};
    CHECK(m.rank() == 3);
    FreeModule t = m.twisted(2);
    CHECK(t.twists == std::vector<long>{-2, -1, 0});
    CHECK(m.twisted(0) == m);
    FreeModule s = FreeModule::direct_sum(m, t);
    CHECK(s.twists == std::vector<long>{0, 1, 2, -2, -1, 0});
}

TEST_CASE("entry degrees and violations") {
    FreeModule src{{2, 3}};
    FreeModule tgt{{0, 1}};
    GradedMatrix m(Q, 2, src, tgt);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.entry_degree(0, 0) == 2);
    CHECK(m.entry_degree(1, 0) == 1);
    CHECK(m.entry_degree(0, 1) == 3);
    CHECK(m.entry_degree(1, 1) == 2);

    // Zero entries never violate the grading.
    CHECK(!m.graded_violation().has_value());

    m.set_entry(0, 0, P("z0*z1", 2));
    m.set_entry(1, 0, P("z0 + 2*z1", 2));
    CHECK(!m.graded_violation().has_value());
    CHECK(!m.constant_term_violation().has_value());

    // Entries from a different ring are refused outright; entries with the
    // wrong degree are stored (documents from disk must be representable)
    // and flagged by the violation scan.
    CHECK_THROWS_AS(m.set_entry(0, 0, P("z0", 3)), domain_error);
    CHECK_THROWS_AS(m.set_entry(0, 0, P("z0", 2, Field::prime(5))), domain_error);
    CHECK_THROWS_AS(m.set_entry(2, 0, P("z0", 2)), domain_error);

    m.set_entry(0, 1, P("z0", 2)); // degree 1 where 3 is expected
    auto g = m.graded_violation();
    REQUIRE(g.has_value());
    CHECK(g->row == 0);
    CHECK(g->col == 1);
    m.set_entry(0, 1, Polynomial::zero(Q, 2));

    m.set_entry(0, 0, P("z0^2 + 1", 2)); // inhomogeneous
    CHECK(m.graded_violation().has_value());
    m.set_entry(0, 0, P("z0*z1", 2));
    CHECK(!m.graded_violation().has_value());

    // Negative expected degree admits only the zero entry.
    GradedMatrix neg(Q, 2, FreeModule{{0}}, FreeModule{{1}});
    CHECK(neg.entry_degree(0, 0) == -1);
    neg.set_entry(0, 0, P("z0", 2));
    CHECK(neg.graded_violation().has_value());
    neg.set_entry(0, 0, Polynomial::zero(Q, 2));
    CHECK(!neg.graded_violation().has_value());

    // A constant-term violation is a reducedness matter, not a grading one.
    GradedMatrix c(Q, 2, FreeModule{{0}}, FreeModule{{0}});
    c.set_entry(0, 0, P("5", 2));
    CHECK(!c.graded_violation().has_value());
    auto v = c.constant_term_violation();
    REQUIRE(v.has_value());
    CHECK(v->row == 0);
    CHECK(v->col == 0);
}

TEST_CASE("identity scalar map and blocks") {
    FreeModule m{{0, -1}};
    GradedMatrix id = GradedMatrix::identity(Q, 2, m);
    CHECK(id.source() == m);
    CHECK(id.target() == m);
    CHECK(id.entry(0, 0) == P("1", 2));
    CHECK(id.entry(0, 1).is_zero());

    Polynomial f = P("z0^2 + z1^2", 2);
    GradedMatrix fm = GradedMatrix::scalar_map(f, m);
    CHECK(fm.target() == m);
    CHECK(fm.source() == m.twisted(-2));
    CHECK(fm.entry(0, 0) == f);
    CHECK(fm.entry(1, 0).is_zero());
    CHECK(!fm.graded_violation().has_value());

    // compose(f*id, id) = f*id.
    GradedMatrix idt = GradedMatrix::identity(Q, 2, m.twisted(-2));
    GradedMatrix prod = compose(fm, idt);
    CHECK(prod == fm);

    // Interface mismatch is refused.
    CHECK_THROWS_AS(compose(fm, fm), domain_error);

    // 2x2 block assembly keeps shapes and entries.
    GradedMatrix b = GradedMatrix::block2x2(fm, fm, fm, fm);
    CHECK(b.rows() == 4);
    CHECK(b.cols() == 4);
    CHECK(b.entry(0, 0) == f);
    CHECK(b.entry(0, 2) == f);
    CHECK(b.entry(2, 0) == f);
    CHECK(b.entry(0, 1).is_zero());
    CHECK(b.source() == FreeModule::direct_sum(fm.source(), fm.source()));

    // Blocks must agree on their shared modules.
    GradedMatrix other = GradedMatrix::scalar_map(f, FreeModule{{0, 0}});
    CHECK_THROWS_AS(GradedMatrix::block2x2(fm, fm, other, fm), domain_error);
}

TEST_CASE("negation") {
    Polynomial f = P("z0^3", 1);
    GradedMatrix fm = GradedMatrix::scalar_map(f, FreeModule{{0}});
    GradedMatrix n = -fm;
    CHECK(n.entry(0, 0) == -f);
    CHECK(n.source() == fm.source());
}

TEST_CASE("determinant of small matrices") {
    // 1x1 and 2x2 against hand values.
    GradedMatrix one(Q, 2, FreeModule{{1}}, FreeModule{{0}});
    one.set_entry(0, 0, P("z0", 2));
    CHECK(determinant(one) == P("z0", 2));

    GradedMatrix two(Q, 2, FreeModule{{1, 1}}, FreeModule{{0, 0}});
    two.set_entry(0, 0, P("z0", 2));
    two.set_entry(0, 1, P("z1", 2));
    two.set_entry(1, 0, P("-z1", 2));
    two.set_entry(1, 1, P("z0", 2));
    CHECK(determinant(two) == P("z0^2 + z1^2", 2));

    // Zero row means zero determinant.
    GradedMatrix zr(Q, 2, FreeModule{{1, 1}}, FreeModule{{0, 0}});
    zr.set_entry(0, 0, P("z0", 2));
    zr.set_entry(0, 1, P("z1", 2));
    CHECK(determinant(zr).is_zero());

    // Non-square input is refused.
    GradedMatrix rect(Q, 2, FreeModule{{1, 1}}, FreeModule{{0}});
    CHECK_THROWS_AS(determinant(rect), domain_error);
}

TEST_CASE("determinant agrees with scalar elimination at random points") {
    std::mt19937_64 rng(41);
    // Size 5 exercises the cofactor path, size 8 the fraction-free one.
    for (std::uint32_t n : {5u, 8u}) {
        GradedMatrix m = random_uniform_matrix(n, 1, 3, rng);
        Polynomial d = determinant(m);
        CHECK((d.is_zero() || d.degree() == static_cast<long>(n)));
        for (int t = 0; t < 4; ++t) {
            std::vector<Scalar> pt;
            for (int i = 0; i < 3; ++i)
                pt.push_back(Scalar::of_int(Q, static_cast<long>(rng() % 19) - 9));
            CHECK(d.evaluate(pt) == det_at_point(m, pt));
        }
    }
}

TEST_CASE("determinant size cap") {
    FreeModule tgt{std::vector<long>(17, 0)};
    FreeModule src{std::vector<long>(17, 1)};
    GradedMatrix m(Q, 1, src, tgt);
    for (int i = 0; i < 17; ++i) m.set_entry(i, i, P("z0", 1));
    CHECK_THROWS_AS(determinant(m), budget_error);
}

TEST_CASE("randomized determinant check") {
    // det [[z0, z1],[-z1, z0]] = z0^2 + z1^2 = f^1.
    Polynomial f = P("z0^2 + z1^2", 2);
    GradedMatrix two(Q, 2, FreeModule{{1, 1}}, FreeModule{{0, 0}});
    two.set_entry(0, 0, P("z0", 2));
    two.set_entry(0, 1, P("z1", 2));
    two.set_entry(1, 0, P("-z1", 2));
    two.set_entry(1, 1, P("z0", 2));

    RandomizedDetReport rep = randomized_det_check(two, f, 1, 8, 12345);
    CHECK(rep.ok);
    CHECK(rep.c == Scalar::one(Q));
    CHECK(rep.trials == 8);

    // Same seed, same outcome (the report is deterministic).
    RandomizedDetReport rep2 = randomized_det_check(two, f, 1, 8, 12345);
    CHECK(rep2.ok);
    CHECK(rep2.c == rep.c);

    // Scaling a row scales the constant.
    GradedMatrix scaled = two;
    scaled.set_entry(0, 0, P("3*z0", 2));
    scaled.set_entry(0, 1, P("3*z1", 2));
    RandomizedDetReport rep3 = randomized_det_check(scaled, f, 1, 8, 999);
    CHECK(rep3.ok);
    CHECK(rep3.c == Scalar::of_int(Q, 3));

    // Wrong exponent fails.
    CHECK(!randomized_det_check(two, f, 2, 8, 7).ok);
    // Degenerate matrix (det 0) fails: no nonzero constant works.
    GradedMatrix zr(Q, 2, FreeModule{{1, 1}}, FreeModule{{0, 0}});
    zr.set_entry(0, 0, P("z0", 2));
    zr.set_entry(0, 1, P("z1", 2));
    CHECK(!randomized_det_check(zr, f, 1, 8, 7).ok);

    // Cubes: det of the 2x2 built from f^2 and f has det f^3.
    GradedMatrix cube(Q, 2, FreeModule{{4, 2}}, FreeModule{{0, 0}});
    cube.set_entry(0, 0, f * f);
    cube.set_entry(1, 1, -f);
    RandomizedDetReport rep4 = randomized_det_check(cube, f, 3, 6, 31337);
    CHECK(rep4.ok);
    CHECK(rep4.c == Scalar::of_int(Q, -1));
}
