#include <doctest.h>

#include "helpers.hpp"
#include "symcone/certify.hpp"
#include "symcone/families.hpp"

using namespace symcone;
using testing_util::R;

TEST_CASE("constraint matrix shapes") {
    auto a = constraint_matrix(catalog_spec("thm2.2", {{"t", R(3)}, {"u", R(2)}}));
    CHECK(a.rows() == 4);
    CHECK(a.cols() == 5);
    ConstraintSpec empty{"empty", FormSpace::symmetric(Space::H35s), {}};
    auto e = constraint_matrix(empty);
    CHECK(e.rows() == 0);
    CHECK(e.cols() == 5);
}

TEST_CASE("quartic bordered determinant at (3,2)") {
    auto d = verify_det_identity("thm2.2-det", {{"t", R(3)}, {"u", R(2)}});
    CHECK(d.matched);
    CHECK(d.expected == 3 * 4 * 3 * 4 * pG(R(3), R(1, 2))[0]);
}

TEST_CASE("sextic determinant at random points") {
    testing_util::RandomRationals rng(31);
    int done = 0;
    for (int i = 0; i < 100 && done < 5; ++i) {
        ParamMap p{{"u", rng.any()}, {"v", rng.any()}, {"w", rng.any()}};
        auto d = verify_det_identity("prop3.5-det", p);
        CHECK(d.matched);
        ++done;
    }
}

TEST_CASE("characterisation kernels") {
    // V_F(2, omega(3)) = 11*16/9 - 8 > 0
    auto g = certify_catalog("thm2.5", {{"t", R(2)}, {"u", R(3)}});
    CHECK(g.matrix.rows() == 34);
    CHECK(g.matrix.cols() == 35);
    CHECK(g.kernel_dim == 1);
    CHECK(g.certified());

    auto c = certify_catalog("thm4.3-2", {{"t", R(3, 2)}});
    CHECK(c.certified());
    REQUIRE(c.det_identity);
    CHECK(c.det_identity->matched);
    Rational t = R(3, 2);
    CHECK(c.det_identity->expected == -12 * t * t * pow(t - 1, 4));

    auto d = certify_catalog("thm4.4-2", {{"t", R(3)}});
    CHECK(d.kernel_dim == 1);
    CHECK(d.certified());
    CHECK(d.target.name == "eD_t");
}

TEST_CASE("hypothesis violations are reported") {
    CHECK_THROWS_AS(certify_catalog("thm2.2", {{"t", R(1)}, {"u", R(2)}}), HypothesisError);
    try {
        certify_catalog("thm2.2", {{"t", R(1)}, {"u", R(2)}});
    } catch (const HypothesisError& e) {
        CHECK_FALSE(e.failed().empty());
    }
    CHECK_THROWS_AS(certify_catalog("thm2.2", {{"t", R(3)}}), DomainError);
}

TEST_CASE("sos obstructions") {
    auto q = sos_catalog("thm2.6", {{"t", R(2)}, {"u", R(3)}});
    CHECK(q.kernel_dim == 0);
    CHECK(q.conclusion == SosConclusion::NOT_SOS);

    auto cubic = sos_catalog("thm2.10-2", {});
    CHECK(cubic.rank == 20);
    CHECK(cubic.kernel_dim == 0);
    CHECK(cubic.zeros.size() == 28);

    auto line = sos_obstruction({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}, 3, 1);
    CHECK(line.kernel_dim == 1);
    CHECK(line.conclusion == SosConclusion::INCONCLUSIVE);
}

TEST_CASE("general position") {
    auto g = general_position_check(R(-1, 2), R(-1, 3), R(9, 10));
    CHECK(g.ok);
    CHECK_FALSE(general_position_check(R(1, 2), R(1, 2), R(3)).ok);
    CHECK_FALSE(general_position_check(R(1, 2), R(3, 2), R(3)).ok);
}

TEST_CASE("full cone rank of the even cubic") {
    auto c = certify_extremal_full_cone("thm2.10-1", {});
    CHECK(c.rank == 83);
    CHECK(c.kernel_dim == 1);
    CHECK(c.certified());
}
