#include <cmath>

#include "doctest.h"
#include "theta_agm/agm.hpp"
#include "theta_agm/errors.hpp"
#include "theta_agm/special.hpp"

using namespace theta_agm;

namespace {

bool rel_close(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::abs(want);
}

} // namespace

TEST_SUITE("agm") {

TEST_CASE("equal starting values converge in zero iterations") {
    const AgmTrace tr = agm_general(7, 3.2, 3.2);
    CHECK(tr.iterations() == 0);
    CHECK(tr.limit == 3.2);
}

TEST_CASE("classical mean of (sqrt2, 1) is the reciprocal Gauss constant") {
    const double lim = ag2(std::sqrt(2.0), 1.0);
    CHECK(rel_close(lim, 1.1981402347355922, 1e-13));
    CHECK(rel_close(lim * constant_gauss(), 1.0, 1e-10));
}

TEST_CASE("cubic mean of (cbrt2, 1) is twice the Landau constant") {
    const double lim = ag3(std::cbrt(2.0), 1.0);
    CHECK(rel_close(lim, 1.0865179306859534, 1e-12));
    CHECK(rel_close(lim, 2.0 * constant_landau_plus(), 1e-10));
}

TEST_CASE("argument order does not matter") {
    CHECK(ag2(1.0, std::sqrt(2.0)) == ag2(std::sqrt(2.0), 1.0));
    CHECK(ag3(0.3, 2.0) == ag3(2.0, 0.3));
    CHECK(agm_general(4, 1.0, 2.0).limit == agm_general(4, 2.0, 1.0).limit);
}

TEST_CASE("homogeneity") {
    for (double x : {0.5, 3.0}) {
        CHECK(rel_close(ag2(x * 1.9, x * 0.4), x * ag2(1.9, 0.4), 1e-13));
        CHECK(rel_close(ag3(x * 1.9, x * 0.4), x * ag3(1.9, 0.4), 1e-13));
    }
}

TEST_CASE("closed iterations agree with the general engine") {
    CHECK(rel_close(agm_general(2, std::sqrt(2.0), 1.0).limit, ag2(std::sqrt(2.0), 1.0), 1e-13));
    CHECK(rel_close(agm_general(3, std::cbrt(2.0), 1.0).limit, ag3(std::cbrt(2.0), 1.0), 1e-13));
    CHECK(rel_close(agm_general(2, 5.0, 0.2).limit, ag2(5.0, 0.2), 1e-13));
    CHECK(rel_close(agm_general(3, 5.0, 0.2).limit, ag3(5.0, 0.2), 1e-13));
}

TEST_CASE("trace structure: recursion, monotonicity, bracketing") {
    for (int order : {2, 3, 5}) {
        const AgmTrace tr = agm_general(order, 2.3, 0.7);
        const double n = order;
        REQUIRE(tr.a_seq.size() == tr.b_seq.size());
        REQUIRE(tr.a_seq.size() == tr.c_seq.size());
        for (std::size_t i = 1; i < tr.a_seq.size(); ++i) {
            // a-update is literally the arithmetic mean step
            CHECK(tr.a_seq[i] ==
                  (tr.a_seq[i - 1] + (n - 1.0) * tr.b_seq[i - 1]) / n);
            CHECK(tr.c_seq[i] == (tr.a_seq[i - 1] - tr.b_seq[i - 1]) / n);
            CHECK(tr.a_seq[i] <= tr.a_seq[i - 1]);
            CHECK(tr.b_seq[i] >= tr.b_seq[i - 1]);
            // order-N gap identity a^N - b^N = c^N
            const double an = std::pow(tr.a_seq[i], n);
            const double bn = std::pow(tr.b_seq[i], n);
            const double cn = std::pow(tr.c_seq[i], n);
            CHECK(std::abs(an - bn - cn) <= 1e-12 * an);
        }
        CHECK(tr.limit >= 0.7);
        CHECK(tr.limit <= 2.3);
        CHECK(std::abs(tr.a_seq.back() - tr.b_seq.back()) <= 1e-14 * tr.a_seq.back());
    }
}

TEST_CASE("quadratic convergence of the classical mean") {
    const AgmTrace tr = agm_general(2, std::sqrt(2.0), 1.0);
    for (std::size_t i = 1; i < tr.a_seq.size(); ++i) {
        const double prev_gap = tr.a_seq[i - 1] - tr.b_seq[i - 1];
        const double gap = tr.a_seq[i] - tr.b_seq[i];
        if (prev_gap < 0.1) CHECK(gap <= 0.5 * prev_gap * prev_gap);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(agm_general(1, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(agm_general(2, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(agm_general(2, 1.0, -2.0), DomainError);
    CHECK_THROWS_AS(agm_general(2, 1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(ag2(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(ag3(1.0, 0.0), DomainError);
}

TEST_CASE("theta means: Gauss and Borwein limit theorems on a spot value") {
    const Nome q{0.2};
    const double t3 = theta3(q), t4 = theta4(q);
    CHECK(std::abs(ag2(t3 * t3, t4 * t4) - 1.0) < 1e-11);
    CHECK(std::abs(ag3(cubic_a(q), cubic_b(q)) - 1.0) < 1e-11);
}

} // TEST_SUITE
