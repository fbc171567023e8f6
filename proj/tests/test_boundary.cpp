#include <doctest.h>

#include "helpers.hpp"
#include "symcone/boundary.hpp"

using namespace symcone;
using testing_util::R;

namespace {

std::vector<Rational> coords(const std::string& text) {
    auto c = family_coords(parse_family(text));
    REQUIRE(c);
    return c->coords;
}

bool has_member(const CrossSection& cs, const std::string& name) {
    for (const auto& v : cs.vertices)
        if (v.member.name == name) return true;
    return false;
}

bool has_arc(const CrossSection& cs, const std::string& family) {
    for (const auto& a : cs.arcs)
        if (a.family == family) return true;
    return false;
}

}  // namespace

TEST_CASE("discriminant ids") {
    CHECK(parse_disc_id("Cb") == DiscId::Cb);
    CHECK(to_string(DiscId::P3) == "P3");
    CHECK(all_disc_ids().size() == 5);
    CHECK_THROWS_AS(parse_disc_id("Q7"), DomainError);
}

TEST_CASE("discriminant examples") {
    CHECK(eval_discriminant(DiscId::C0, {1, 0, 0, 0, 0}) == 5);
    testing_util::RandomRationals rng(41);
    for (int i = 0; i < 10; ++i) {
        Rational t = rng.in(0, 2);
        CHECK(eval_discriminant(DiscId::P3, coords("eC_t(t=" + to_string(t) + ")")) == 0);
    }
    CHECK_THROWS_AS(eval_discriminant(DiscId::Cb, coords("eC_t(t=1)")), DomainError);
    CHECK(eval_discriminant(DiscId::Cb, coords("eA_tu(t=3,u=2)")) == 0);
}

TEST_CASE("Cb division is exact") {
    testing_util::RandomRationals rng(42);
    for (int i = 0; i < 30; ++i) {
        std::vector<Rational> p;
        for (int k = 0; k < 5; ++k) p.push_back(rng.in(-9, 9, 1));
        if (p[4] == 0) p[4] = 1;
        CHECK(cb_division_exact(p));
    }
}

TEST_CASE("ray normalisation keeps the sign") {
    auto v = normalize_ray({0, -2, 4});
    CHECK(v == std::vector<Rational>{0, -1, 2});
    CHECK(normalize_ray({0, 3, 6}) == std::vector<Rational>{0, 1, 2});
}

TEST_CASE("atlas rows") {
    auto s3 = atlas_row(parse_family("s3_quintic"));
    REQUIRE(s3.disc[0]);
    REQUIRE(s3.disc[2]);
    CHECK(*s3.disc[0] == 0);
    CHECK(*s3.disc[2] == 0);
    auto d = atlas_row(parse_family("eD_t(t=3)"));
    CHECK(*d.disc[0] == 0);
    auto c = atlas_row(parse_family("eC_t(t=3/2)"));
    CHECK(c.coords[0] + c.coords[1] + c.coords[2] == 0);
    CHECK(*c.disc[1] == 0);
}

TEST_CASE("cross sections by regime") {
    auto one = cross_section(R(1), 3);
    CHECK(one.regime == 1);
    CHECK(has_member(one, "eC_t"));
    CHECK(has_member(one, "eD_t"));

    auto three = cross_section(R(3), 3);
    CHECK(three.regime == 3);
    CHECK(has_arc(three, "eA"));
    CHECK(has_arc(three, "eB"));
    CHECK(has_member(three, "eD_t"));
    for (const auto& a : three.arcs)
        if (a.family == "eA") {
            CHECK(a.u_lo == 0);
            CHECK(a.u_hi == 20);
        }

    auto ten = cross_section(R(10), 3);
    CHECK(ten.regime == 4);
    CHECK(has_arc(ten, "eB"));
    CHECK(has_member(ten, "eD_t"));
    CHECK(has_member(ten, "eE_t"));

    for (const auto* cs : {&one, &three, &ten}) {
        for (const auto& a : cs->arcs)
            for (const auto& s : a.samples) {
                CHECK(s.on_section);
                CHECK(s.psd);
            }
        for (const auto& v : cs->vertices) {
            CHECK(v.on_section);
            CHECK(v.psd);
        }
    }
}

TEST_CASE("csv columns") {
    auto csv = atlas_csv({atlas_row(parse_family("s3_quintic"))});
    CHECK(csv.rfind("family,t,u,p0,p1,p2,p3,p4,discP1,discP2,discP3,discC0,discCb,psd,extremal_certified\n", 0) == 0);
}
