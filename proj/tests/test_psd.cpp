#include <doctest.h>

#include "helpers.hpp"
#include "symcone/families.hpp"
#include "symcone/psd.hpp"
#include "symcone/symbasis.hpp"

using namespace symcone;
using testing_util::R;

namespace {

HomogeneousForm fam(const std::string& text) { return build(parse_family(text)); }

void check_witness(const HomogeneousForm& f, const PsdVerdict& v) {
    REQUIRE(v.witness);
    CHECK(f.evaluate(*v.witness) < 0);
}

}  // namespace

TEST_CASE("univariate nonnegativity") {
    auto x = UnivariatePoly::x();
    auto one = UnivariatePoly::constant(1);
    CHECK(univariate_nonneg(x * x - 2 * x + one, Domain::AllReals).psd());

    auto cube = univariate_nonneg(x * x * x, Domain::AllReals);
    CHECK_FALSE(cube.psd());
    REQUIRE(cube.witness);
    CHECK((*cube.witness)[0] < 0);

    auto p = x * (x - one) * (x - 2 * one);
    auto v = univariate_nonneg(p, Domain::NonnegReals);
    CHECK_FALSE(v.psd());
    REQUIRE(v.witness);
    Rational w = (*v.witness)[0];
    CHECK(w > 1);
    CHECK(w < 2);
    CHECK(p(w) < 0);
    CHECK(p(R(3, 2)) == R(-3, 8));
}

TEST_CASE("symmetric quartics in four variables") {
    auto g = build(FamilyId{"g_tu", {{"t", R(3)}, {"u", R(2)}}});
    CHECK(V_F(R(3), R(1, 2)) == -9);
    auto v = psd_s44(g);
    CHECK_FALSE(v.psd());
    check_witness(g, v);

    CHECK(psd_s44(fam("frak_p")).psd());

    auto minus_s4 = -U4v();
    auto m = psd_s44(minus_s4);
    CHECK_FALSE(m.psd());
    check_witness(minus_s4, m);

    auto a = HomogeneousForm::variable(4, 0);
    CHECK_THROWS_AS(psd_s44(pow(a, 4)), DomainError);
}

TEST_CASE("symmetric cubics on the orthant") {
    CHECK(psd_plus_s43(fam("g3s_4")).psd());
    auto neg = -fam("g3s_3");
    auto v = psd_plus_s43(neg);
    CHECK_FALSE(v.psd());
    check_witness(neg, v);
    CHECK(psd_plus_s43(fam("g3s_2")).psd());
}

TEST_CASE("symmetric quintics on the orthant") {
    CHECK(psd_plus_s35(fam("eC_t(t=3/2)")).psd());
    auto c3 = fam("eC_t(t=3)");
    auto v = psd_plus_s35(c3);
    CHECK_FALSE(v.psd());
    check_witness(c3, v);
    REQUIRE(v.witness);
    for (const auto& z : *v.witness) CHECK(z >= 0);

    auto s3 = fam("s3_quintic");
    CHECK(psd_plus_s35(s3).psd());
    CHECK(s3.restrict_line({LinearEntry::value(0), LinearEntry::x(), LinearEntry::value(1)}).is_zero());
}

TEST_CASE("cubic on x >= 0") {
    CHECK(cubic_nonneg_plus(0, 0, 0));
    CHECK_FALSE(cubic_nonneg_plus(-3, 3, -1));
    CHECK(cubic_nonneg_plus(-2, 1, 0));
}

TEST_CASE("symmetric sextics") {
    auto a = HomogeneousForm::variable(3, 0), b = HomogeneousForm::variable(3, 1), c = HomogeneousForm::variable(3, 2);
    CHECK(psd_sextic_s36(pow(a * a + b * b + c * c, 3)).psd());
    auto neg = -U3v(2);
    auto v = psd_sextic_s36(neg);
    CHECK_FALSE(v.psd());
    check_witness(neg, v);
    REQUIRE(v.witness);
    CHECK(*v.witness == std::vector<Rational>{1, 1, 1});

    auto f = build(FamilyId{"f_uw", {{"u", R(-1, 2)}, {"v", R(-1, 3)}, {"w", R(9, 10)}}});
    CHECK(psd_sextic_s36(f).psd());
}

TEST_CASE("psd_gtu") {
    testing_util::RandomRationals rng(21);
    for (int i = 0; i < 10; ++i) {
        Rational u = rng.in(-4, 4);
        if (u == 0 || u == 1) continue;
        CHECK(psd_gtu(R(1), u).psd());
    }
    CHECK_FALSE(psd_gtu(R(3), R(2)).psd());
    CHECK_THROWS_AS(psd_gtu(R(3), R(0)), DomainError);
    CHECK_THROWS_AS(psd_gtu(R(3), R(1)), DomainError);
    for (auto [t, u] : {std::pair{R(2), R(3)}, std::pair{R(1, 2), R(-2)}, std::pair{R(5), R(1, 3)}}) {
        auto g = build(FamilyId{"g_tu", {{"t", t}, {"u", u}}});
        auto v = psd_s44(-g);
        CHECK_FALSE(v.psd());
        check_witness(-g, v);
    }
}

TEST_CASE("psd_fuw") {
    auto v = psd_fuw(R(-1, 2), R(-1, 3), R(9, 10));
    CHECK(v.psd());
    testing_util::RandomRationals rng(22);
    int done = 0;
    for (int i = 0; i < 200 && done < 5; ++i) {
        Rational u = rng.in(-3, 3), vv = rng.in(-3, 3);
        try {
            auto r = psd_fuw(u, vv, R(1));
            CHECK(r.psd());
            ++done;
        } catch (const DomainError&) {
        }
    }
    CHECK(done == 5);
}

TEST_CASE("dispatch") {
    CHECK(psd_check(fam("eC_t(t=3/2)")).psd());
    CHECK_FALSE(psd_check(build(FamilyId{"g_tu", {{"t", R(3)}, {"u", R(2)}}})).psd());
}
