#include <doctest.h>

#include "helpers.hpp"
#include "symcone/certify.hpp"
#include "symcone/families.hpp"
#include "symcone/matrix.hpp"
#include "symcone/poly1.hpp"

using namespace symcone;
using testing_util::R;

TEST_CASE("det of small matrices") {
    CHECK(det(RationalMatrix::identity(3)) == 1);
    CHECK(det(RationalMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK_THROWS_AS(det(RationalMatrix(2, 3)), DomainError);
}

TEST_CASE("det with a zero pivot and fractions") {
    auto m = RationalMatrix::from_rows({{0, R(1, 2), 1}, {R(2, 3), 0, 1}, {1, 1, 0}});
    // cofactor expansion by hand: 0*(0-1) - 1/2*(0-1) + 1*(2/3-0) = 1/2 + 2/3
    CHECK(det(m) == R(7, 6));
}

TEST_CASE("bordered quartic matrix at (2,2) matches the closed form") {
    ParamMap p{{"t", R(2)}, {"u", R(2)}};
    auto spec = catalog_spec("thm2.2", p);
    auto a = constraint_matrix(spec);
    CHECK(a.rows() == 4);
    CHECK(a.cols() == 5);
    std::vector<Rational> e1(5, 0);
    e1[0] = 1;
    Rational expected = 3 * 1 * 3 * 4 * pG(R(2), omega(R(2)))[0];
    CHECK(omega(R(2)) == R(1, 2));
    CHECK(det(a.bordered_above(e1)) == expected);
}

TEST_CASE("rank") {
    CHECK(rank(RationalMatrix(4, 6)) == 0);
    CHECK(rank(RationalMatrix::identity(7)) == 7);
    CHECK(rank(RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
    auto k = kernel_basis(RationalMatrix::from_rows({{1, -1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Rational>{1, 1});
}

TEST_CASE("kernel of A(3,2) is spanned by g_{3,2}") {
    ParamMap p{{"t", R(3)}, {"u", R(2)}};
    auto a = constraint_matrix(catalog_spec("thm2.2", p));
    auto k = kernel_basis(a);
    REQUIRE(k.size() == 1);
    auto g = to_basis(build(FamilyId{"g_tu", p}), Space::H44s);
    CHECK(in_span(k, g.coords));
}

TEST_CASE("solve and in_span") {
    auto m = RationalMatrix::from_rows({{1, 1}, {1, -1}});
    auto x = solve(m, {R(3), R(1)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve(RationalMatrix::from_rows({{1, 1}, {2, 2}}), {R(1), R(3)}));
    CHECK_FALSE(in_span({{1, 0, 0}}, {0, 1, 0}));
}

TEST_CASE("resultant") {
    auto x = UnivariatePoly::x();
    auto one = UnivariatePoly::constant(1);
    CHECK(resultant(x - one, x - 2 * one) == 1);  // Res(x-a, x-b) = b - a
    CHECK(resultant(x * x - one, x - one) == 0);
    CHECK(resultant(x * x, x + 3 * one) == 9);
    CHECK_THROWS_AS(resultant(UnivariatePoly(), x), DomainError);
}

TEST_CASE("discriminant_n") {
    CHECK(discriminant_n({1, 0, 0, 0}) == 0);
    CHECK(discriminant_n({1, 0, -1, 0}) == 4);
    CHECK(discriminant_n({1, 1, 1, 1}) == -16);
    CHECK_THROWS_AS(discriminant_n({0, 1, 1}), DomainError);
    // quadratic: b^2 - 4ac
    CHECK(discriminant_n({2, 3, 1}) == 1);
}

TEST_CASE("real root isolation") {
    auto x = UnivariatePoly::x();
    auto one = UnivariatePoly::constant(1);
    auto p = (x - one) * (x - 2 * one) * (x * x - 2 * one);
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].hi <= 0);
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
    CHECK(count_roots(p, R(0), R(3)) == 3);
    auto r = refine_root(p, roots[2], R(1, 1000));
    CHECK(r.hi - r.lo <= R(1, 1000));
    CHECK(r.lo * r.lo <= 2);
    CHECK(r.hi * r.hi >= 2);
}

TEST_CASE("polynomial division and gcd") {
    auto x = UnivariatePoly::x();
    auto one = UnivariatePoly::constant(1);
    auto a = pow(x - one, 2) * (x + one);
    auto [q, r] = divmod(a, x - one);
    CHECK(r.is_zero());
    CHECK(q == (x - one) * (x + one));
    CHECK(gcd(a, a.derivative()) == x - one);
    CHECK(squarefree_part(a).degree() == 2);
    CHECK_THROWS_AS(divmod(a, UnivariatePoly()), DomainError);
}
