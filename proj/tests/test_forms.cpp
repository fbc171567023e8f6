#include <doctest.h>

#include "helpers.hpp"
#include "symcone/families.hpp"
#include "symcone/symbasis.hpp"

using namespace symcone;
using testing_util::R;

namespace {

HomogeneousForm var(int n, int i) { return HomogeneousForm::variable(n, i); }

UnivariatePoly on_x11(const HomogeneousForm& f) {
    return f.restrict_line({LinearEntry::x(), LinearEntry::value(1), LinearEntry::value(1)});
}
UnivariatePoly on_0x1(const HomogeneousForm& f) {
    return f.restrict_line({LinearEntry::value(0), LinearEntry::x(), LinearEntry::value(1)});
}

}  // namespace

TEST_CASE("expand named symmetric sums") {
    auto a = var(3, 0), b = var(3, 1), c = var(3, 2);
    CHECK(expand({SymBasisElement::Tag::PowerSum, {2}}) == a * a + b * b + c * c);
    CHECK(T3v(2, 1) == a * a * b + b * b * c + c * c * a + a * b * b + b * c * c + c * a * a);
    auto d = var(4, 3);
    CHECK(U4v() == var(4, 0) * var(4, 1) * var(4, 2) * d);
    CHECK_THROWS_AS(expand({SymBasisElement::Tag::TripleSum, {1, 2, 3}}), DomainError);
}

TEST_CASE("from_basis / to_basis") {
    auto a = var(4, 0), b = var(4, 1), c = var(4, 2), d = var(4, 3);
    auto s0 = from_basis({Space::H44s, {1, 0, 0, 0, 0}});
    CHECK(s0 == pow(a, 4) + pow(b, 4) + pow(c, 4) + pow(d, 4) - R(4) * a * b * c * d);

    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    CHECK(from_basis({Space::H35s, {0, 0, 0, 0, 1}}) == x * y * z * (x * y + y * z + z * x));
    CHECK(from_basis({Space::H35s, {0, 0, 0, 0, 0}}).is_zero());

    auto f = pow(x, 5) + pow(y, 5) + pow(z, 5) - x * y * z * (x * y + y * z + z * x);
    CHECK(to_basis(f, Space::H35s).coords == std::vector<Rational>{1, 0, 0, 0, 0});
    CHECK_THROWS_AS(to_basis(x * x * y * (x + y + z) * (x + y + z), Space::H35s), MembershipError);
}

TEST_CASE("evaluate") {
    auto f = from_basis({Space::H35s, {1, 2, 3, 4, 5}});
    CHECK(f.evaluate({0, 0, 0}) == 0);
    // eC_0 at (2,1,1): 2 (2-1)^2 (2-0)^2
    CHECK(build(parse_family("eC_t(t=0)")).evaluate({2, 1, 1}) == 8);
}

TEST_CASE("frak_p at (0,0,0,1)") {
    // printed as 1; every term of the defining sum vanishes there (see ledger)
    CHECK(build(parse_family("frak_p")).evaluate({0, 0, 0, 1}) == 0);
}

TEST_CASE("partials and even substitution") {
    auto a = var(3, 0), b = var(3, 1), c = var(3, 2);
    CHECK((a * a * b).partial(0) == R(2) * a * b);
    CHECK(U3v().partial(0) == b * c);
    CHECK((a + b + c).even_substitution() == a * a + b * b + c * c);
    CHECK(U3v().even_substitution() == U3v(2));
}

TEST_CASE("line restrictions") {
    auto x = UnivariatePoly::x();
    auto one = UnivariatePoly::constant(1);
    for (Rational t : {R(3), R(1, 2), R(-7, 3)}) {
        FamilyId d{"eD_t", {{"t", t}}};
        CHECK(on_x11(build(d)) == R(2) * pow(x - one, 2) * pow(x - t * one, 2));
    }
    for (Rational t : {R(0), R(3, 2), R(5)}) {
        FamilyId c{"eC_t", {{"t", t}}};
        CHECK(on_0x1(build(c)) == pow(x - one, 2) * (x + one) * (pow(x - one, 2) + (2 - t) * x));
    }
    CHECK(on_x11(HomogeneousForm(3, 5)).is_zero());
}

TEST_CASE("sigma decomposition") {
    auto a = var(3, 0), b = var(3, 1), c = var(3, 2);
    auto e3sq = U3v(2);
    auto s = sigma_decompose(e3sq);
    CHECK(s.g0 == 1);
    CHECK(s.g1.terms.empty());
    CHECK(s.g2.terms.empty());

    auto p6 = pow(a + b + c, 6);
    auto s6 = sigma_decompose(p6);
    CHECK(s6.g0 == 0);
    CHECK(s6.g1.terms.empty());
    REQUIRE(s6.g2.terms.size() == 1);
    CHECK(s6.g2.terms.begin()->first == std::pair<int, int>{6, 0});

    std::vector<Rational> unit(space_dimension(Space::H36s0), 0);
    unit[0] = 1;
    auto s0 = from_basis({Space::H36s0, unit});
    CHECK(sigma_decompose(s0).recompose() == s0);
    CHECK_THROWS_AS(sigma_decompose(a * a * b * b * b * c), DomainError);
}

TEST_CASE("phi map sums over dropped variables") {
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    auto f = x * y + y * z + z * x;
    auto g = phi_map(f);
    CHECK(g.nvars() == 4);
    // each unordered pair of the 4 variables appears in two of the four restrictions
    CHECK(g == R(2) * (var(4, 0) * var(4, 1) + var(4, 0) * var(4, 2) + var(4, 0) * var(4, 3) +
                       var(4, 1) * var(4, 2) + var(4, 1) * var(4, 3) + var(4, 2) * var(4, 3)));
}
