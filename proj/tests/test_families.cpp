#include <doctest.h>

#include "helpers.hpp"
#include "symcone/families.hpp"
#include "symcone/symbasis.hpp"

using namespace symcone;
using testing_util::R;

namespace {

HomogeneousForm fam(const std::string& text) { return build(parse_family(text)); }

}  // namespace

TEST_CASE("parse_family") {
    auto id = parse_family("family:eA_tu(t=3,u=-1/2)");
    CHECK(id.name == "eA_tu");
    CHECK(id.param("t") == 3);
    CHECK(id.param("u") == R(-1, 2));
    CHECK_THROWS_AS(parse_family("no_such_family"), DomainError);
    CHECK_THROWS_AS(parse_family("eC_t(t=1/0)"), DomainError);
    CHECK_THROWS_AS(parse_family("eC_t(t=x)"), DomainError);
    CHECK_THROWS_AS(build(parse_family("eC_t")), DomainError);  // missing t
}

TEST_CASE("degenerate members") {
    CHECK(fam("g_tu(t=1,u=1)").is_zero());
    CHECK(fam("eB_tu(t=2,u=1)") == fam("eC_t(t=2)"));
    CHECK(fam("eA_t0(t=7)") == R(1296) * fam("eE_t(t=7)"));
    CHECK(fam("eA_t0(t=1)") == R(36) * fam("eD_t(t=1)"));
}

TEST_CASE("omega and mu functions") {
    CHECK(omega(R(1)) == 0);
    CHECK(omega(R(2)) == R(1, 2));
    CHECK_THROWS_AS(omega(R(0)), DomainError);
    CHECK(mu_L(R(1)) == 0);
    CHECK(mu_L(R(5, 2)) == R(81, 4));
    CHECK(mu_H(R(5, 2)) == R(81, 4));
    testing_util::RandomRationals rng(11);
    for (int i = 0; i < 20; ++i) {
        Rational t = rng.in(0, 10);
        if (t == 0) continue;
        CHECK(mu_Z(t, mu_H(t)) == 0);
    }
}

TEST_CASE("coefficient tables") {
    std::vector<Rational> z = {R(-1, 2), R(-1, 3), R(1)};
    CHECK(pF(z, R(9, 10))[0] == R(2838188587, 147622500));
    for (int w = 1; w <= 3; ++w) CHECK(pG(R(1), R(w))[0] == 6 * w * w);
    testing_util::RandomRationals rng(12);
    for (int i = 0; i < 10; ++i) {
        Rational u = rng.in(0, 6);
        if (u == 0) continue;
        CHECK(pA(R(1), u)[4] == 0);
    }
    CHECK(coefficient_tables(CoeffKind::pF, {R(-1, 2), R(-1, 3), R(1), R(9, 10)}) == pF(z, R(9, 10)));
}

TEST_CASE("delta values") {
    std::vector<Rational> z = {R(-1, 2), R(-1, 3), R(1)};
    Rational w = R(9, 10);
    CHECK(delta(1, z, w) == R(722, 135));
    // printed at (-1/2,-1/2,1,9/10) for delta2; the value holds at (-1/2,-1/3,1,9/10)
    CHECK(delta(2, z, w) == R(1279, 225));
    CHECK(delta(4, z, w) == R(255823, 24300));
    CHECK(xi(z, w) == R(461719, 911250));

    testing_util::RandomRationals rng(13);
    for (int i = 0; i < 20; ++i) {
        Rational x = rng.any(), ww = rng.any();
        CHECK(delta(3, {x, 1, 1}, ww) == (x - 1) * (x - 1) * (x - ww) * (x - ww));
        Rational a = rng.any(), b = rng.any(), c = rng.any();
        Rational f = ((ww + 1) * a - b - c) * ((ww + 1) * b - c - a) * ((ww + 1) * c - a - b);
        CHECK(delta(5, {a, b, c}, ww) == f);
    }
}

TEST_CASE("equality conditions") {
    auto f1 = fam("f3s_1");
    CHECK(f1.evaluate({1, 0, 0}) == 0);
    CHECK(f1.evaluate({1, 1, 1}) == 0);
    auto q1 = fam("q1");
    CHECK(q1.evaluate({1, 1, 1, 0}) == 0);
    CHECK(q1.evaluate({1, 1, 0, 0}) == 0);
    CHECK(q1.evaluate({1, 0, 0, 0}) == 0);
    auto g2 = fam("g3s_2");
    CHECK(g2.evaluate({1, 1, 1, 0}) == 0);
    CHECK(g2.evaluate({1, 1, 1, 1}) == 0);
}

TEST_CASE("g_tu zeros") {
    testing_util::RandomRationals rng(14);
    int done = 0;
    while (done < 20) {
        Rational t = rng.any(), u = rng.any();
        if (u == 0 || u == 1 || u == -1 || t == 1) continue;
        auto g = build(FamilyId{"g_tu", {{"t", t}, {"u", u}}});
        CHECK(g.evaluate({t, 1, 1, 1}) == 0);
        CHECK(g.evaluate({u, u, 1, 1}) == 0);
        ++done;
    }
}

TEST_CASE("family coordinates") {
    auto s3 = family_coords(parse_family("s3_quintic"));
    REQUIRE(s3);
    CHECK(s3->space == Space::H35s);
    CHECK(s3->coords == std::vector<Rational>{0, 0, 0, 1, 0});
    auto c = family_coords(parse_family("eC_t(t=3)"));
    REQUIRE(c);
    CHECK(c->coords == std::vector<Rational>{1, -4, 3, 16, 0});
}
