#include <cmath>
#include <numbers>

#include "doctest.h"
#include "theta_agm/agm.hpp"
#include "theta_agm/gabor.hpp"
#include "theta_agm/special.hpp"

using namespace theta_agm;

namespace {

constexpr double kPi = std::numbers::pi;

bool rel_close(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::abs(want);
}

} // namespace

TEST_SUITE("gabor") {

TEST_CASE("square closed form at density 2") {
    const FrameBounds fb = bounds_square_closed(1);
    CHECK(fb.density == 2.0);
    CHECK(std::abs(fb.lower - 0.834627) < 5e-6);
    CHECK(rel_close(fb.upper, std::sqrt(2.0) * fb.lower, 1e-11));
    CHECK(rel_close(fb.kappa(), std::sqrt(2.0), 1e-12));
    CHECK(fb.lower <= 1.0);
    CHECK(fb.upper >= 1.0);
}

TEST_CASE("square closed form at density 4 equals one classical AGM step") {
    const FrameBounds d2 = bounds_square_closed(1);
    const FrameBounds d4 = bounds_square_closed(2);
    CHECK(rel_close(d4.upper, 0.5 * (d2.lower + d2.upper), 1e-12));
    CHECK(rel_close(d4.lower, std::sqrt(d2.lower * d2.upper), 1e-12));
    CHECK(rel_close(d4.lower, 0.9925441784910574, 1e-12));
    CHECK(rel_close(d4.upper, 1.0074837203450847, 1e-12));
    // and directly against the theta constants at the doubled parameter
    const Nome q{std::exp(-2.0 * kPi)};
    CHECK(rel_close(d4.lower, theta4(q) * theta4(q), 1e-13));
    CHECK(rel_close(d4.upper, theta3(q) * theta3(q), 1e-13));
}

TEST_CASE("square bounds flatten to 1 at high density") {
    const FrameBounds fb = bounds_square_closed(64);
    CHECK(std::abs(fb.lower - 1.0) < 1e-10);
    CHECK(std::abs(fb.upper - 1.0) < 1e-10);
    CHECK_FALSE(fb.saturated);
}

TEST_CASE("hexagonal closed form at density 2") {
    const FrameBounds fb = bounds_hexagonal_closed(1);
    CHECK(std::abs(fb.lower - 0.920371) < 5e-6);
    CHECK(rel_close(fb.upper, std::cbrt(2.0) * fb.lower, 1e-11));
    CHECK(rel_close(fb.kappa(), std::cbrt(2.0), 1e-12));
}

TEST_CASE("hexagonal closed form at density 6 equals one cubic AGM step") {
    const FrameBounds d2 = bounds_hexagonal_closed(1);
    const FrameBounds d6 = bounds_hexagonal_closed(3);
    const double up = (d2.upper + 2.0 * d2.lower) / 3.0;
    const double lo = std::cbrt(
        d2.lower * ((d2.lower * d2.lower + d2.lower * d2.upper + d2.upper * d2.upper) / 3.0));
    CHECK(rel_close(d6.upper, up, 1e-11));
    CHECK(rel_close(d6.lower, lo, 1e-11));
    CHECK(rel_close(d6.upper, 1.0001126711999378, 1e-11));
    CHECK(rel_close(d6.lower, 0.9999436644000907, 1e-11));
}

TEST_CASE("hexagonal bounds flatten to 1 at density 54") {
    const FrameBounds fb = bounds_hexagonal_closed(27);
    CHECK(std::abs(fb.lower - 1.0) < 1e-9);
    CHECK(std::abs(fb.upper - 1.0) < 1e-9);
}

TEST_CASE("rectangular closed form") {
    // reduces to the square lattice at a = 1
    const FrameBounds sq = bounds_square_closed(2);
    const FrameBounds rect1 = bounds_rectangular_closed(1.0, 2);
    CHECK(rel_close(rect1.lower, sq.lower, 1e-14));
    CHECK(rel_close(rect1.upper, sq.upper, 1e-14));

    // lower bounds obey the geometric-mean doubling identity
    for (double a : {std::sqrt(2.0), 2.0}) {
        for (long long n = 1; n <= 3; ++n) {
            const FrameBounds lo = bounds_rectangular_closed(a, 1LL << (n - 1));
            const FrameBounds hi = bounds_rectangular_closed(a, 1LL << n);
            CHECK(rel_close(hi.lower, std::sqrt(lo.lower * lo.upper), 1e-10));
        }
    }
    CHECK_THROWS_AS(bounds_rectangular_closed(0.0, 1), DomainError);
    CHECK_THROWS_AS(bounds_rectangular_closed(1.0, 0), DomainError);
}

TEST_CASE("janssen extremization matches the closed forms") {
    for (long long n : {1LL, 2LL, 3LL}) {
        const double density = 2.0 * static_cast<double>(n);

        const FrameBounds sq_c = bounds_square_closed(n);
        const FrameBounds sq_n = bounds_janssen_numeric(Lattice2D::von_neumann(density));
        CHECK(rel_close(sq_n.lower, sq_c.lower, 1e-8));
        CHECK(rel_close(sq_n.upper, sq_c.upper, 1e-8));

        const FrameBounds hx_c = bounds_hexagonal_closed(n);
        const FrameBounds hx_n = bounds_janssen_numeric(Lattice2D::hexagonal(density));
        CHECK(rel_close(hx_n.lower, hx_c.lower, 1e-8));
        CHECK(rel_close(hx_n.upper, hx_c.upper, 1e-8));

        const FrameBounds rc_c = bounds_rectangular_closed(std::sqrt(2.0), n);
        const FrameBounds rc_n =
            bounds_janssen_numeric(Lattice2D::rectangular(std::sqrt(2.0), density));
        CHECK(rel_close(rc_n.lower, rc_c.lower, 1e-8));
        CHECK(rel_close(rc_n.upper, rc_c.upper, 1e-8));
    }

    // wider rectangle
    const FrameBounds wide_c = bounds_rectangular_closed(2.0, 1);
    const FrameBounds wide_n = bounds_janssen_numeric(Lattice2D::rectangular(2.0, 2.0));
    CHECK(rel_close(wide_n.lower, wide_c.lower, 1e-8));
    CHECK(rel_close(wide_n.upper, wide_c.upper, 1e-8));
}

TEST_CASE("janssen minimizer sits at the deep hole of the square lattice") {
    const Lattice2D vn2 = Lattice2D::von_neumann(2.0);
    const FrameBounds fb = bounds_janssen_numeric(vn2);
    REQUIRE(fb.minimizer.has_value());
    const Vec2 hole = vn2.deep_hole();
    // compare modulo the lattice
    const Mat2 inv = vn2.scaled_generator().inverse();
    Vec2 diff = inv * (*fb.minimizer - hole);
    diff = {diff.x - std::round(diff.x), diff.y - std::round(diff.y)};
    CHECK((vn2.scaled_generator() * diff).norm() < 1e-6);
}

TEST_CASE("janssen rejects non-even densities") {
    CHECK_THROWS_AS(bounds_janssen_numeric(Lattice2D::von_neumann(3.0)), DensityError);
    CHECK_THROWS_AS(bounds_janssen_numeric(Lattice2D::von_neumann(2.0001)), DensityError);
    CHECK_THROWS_AS(bounds_janssen_numeric(Lattice2D::von_neumann(1.0)), DensityError);
}

TEST_CASE("bessel bound") {
    // on the density-2 square lattice all phases align: B~ equals B
    const double b_tilde = bessel_bound(Lattice2D::von_neumann(2.0));
    const FrameBounds sq = bounds_square_closed(1);
    CHECK(rel_close(b_tilde, sq.upper, 1e-12));

    // generally it only dominates
    CHECK(bessel_bound(Lattice2D::hexagonal(2.0)) >=
          bounds_hexagonal_closed(1).upper - 1e-12);
    for (long long n : {1LL, 2LL, 3LL}) {
        CHECK(bessel_bound(Lattice2D::hexagonal(2.0 * n)) >=
              bounds_hexagonal_closed(n).upper - 1e-12);
        CHECK(bessel_bound(Lattice2D::rectangular(2.0, 2.0 * n)) >=
              bounds_rectangular_closed(2.0, n).upper - 1e-12);
    }

    // odd densities are allowed here
    const double b1 = bessel_bound(Lattice2D::von_neumann(1.0));
    CHECK(b1 > 1.0);
    CHECK(std::isfinite(b1));
}

TEST_CASE("bound ladders agree between closed form and AGM recursion") {
    const AgmBoundSequence sq = agm_bound_sequence(LatticeKind::square, 8);
    REQUIRE(sq.steps.size() == 8);
    for (std::size_t i = 0; i < sq.steps.size(); ++i) {
        const AgmBoundStep& s = sq.steps[i];
        CHECK(s.density == 2.0 * std::pow(2.0, static_cast<double>(i)));
        CHECK(rel_close(s.lower_iterated, s.lower_closed, 1e-11));
        CHECK(rel_close(s.upper_iterated, s.upper_closed, 1e-11));
        CHECK(std::abs(ag2(s.upper_closed, s.lower_closed) - 1.0) < 1e-11);
        CHECK(s.lower_closed <= 1.0 + 1e-12);
        CHECK(s.upper_closed >= 1.0 - 1e-12);
    }

    const AgmBoundSequence hx = agm_bound_sequence(LatticeKind::hexagonal, 6);
    REQUIRE(hx.steps.size() == 6);
    for (const AgmBoundStep& s : hx.steps) {
        CHECK(rel_close(s.lower_iterated, s.lower_closed, 1e-11));
        CHECK(rel_close(s.upper_iterated, s.upper_closed, 1e-11));
        CHECK(std::abs(ag3(s.upper_closed, s.lower_closed) - 1.0) < 1e-11);
    }
    CHECK_THROWS_AS(agm_bound_sequence(LatticeKind::rectangular, 3), DomainError);
}

TEST_CASE("ladders saturate to exact 1 past the underflow point") {
    const AgmBoundSequence hx = agm_bound_sequence(LatticeKind::hexagonal, 7);
    CHECK(hx.saturated);
    const AgmBoundStep& last = hx.steps.back();
    CHECK(last.saturated);
    CHECK(last.lower_closed == 1.0);
    CHECK(last.upper_closed == 1.0);
    CHECK(last.lower_iterated == 1.0);
    CHECK(last.upper_iterated == 1.0);
}

TEST_CASE("bound gaps shrink at the expected order along the ladders") {
    const AgmBoundSequence sq = agm_bound_sequence(LatticeKind::square, 6);
    for (std::size_t i = 1; i < sq.steps.size(); ++i) {
        const double prev = 1.0 - sq.steps[i - 1].lower_closed;
        const double cur = 1.0 - sq.steps[i].lower_closed;
        if (prev < 0.1 && prev > 1e-120) CHECK(cur <= std::pow(prev, 1.8));
    }
    const AgmBoundSequence hx = agm_bound_sequence(LatticeKind::hexagonal, 5);
    for (std::size_t i = 1; i < hx.steps.size(); ++i) {
        const double prev = 1.0 - hx.steps[i - 1].lower_closed;
        const double cur = 1.0 - hx.steps[i].lower_closed;
        if (prev < 0.1 && prev > 1e-80) CHECK(cur <= std::pow(prev, 1.8));
    }
}

TEST_CASE("condition-number recursions") {
    const KappaSequence sq = kappa_sequence(LatticeKind::square, 6);
    CHECK(sq.kappas[0] == std::sqrt(2.0));
    CHECK(rel_close(sq.kappas[1], 1.0150517651282178, 1e-12));
    CHECK(std::abs(sq.kappas.back() - 1.0) < 1e-12);

    const KappaSequence hx = kappa_sequence(LatticeKind::hexagonal, 5);
    CHECK(hx.kappas[0] == std::cbrt(2.0));
    CHECK(rel_close(hx.kappas[1], 1.0001690163214829, 1e-12));
    CHECK(std::abs(hx.kappas.back() - 1.0) < 1e-12);

    // strictly decreasing until floating point saturates at 1
    for (const KappaSequence* ks : {&sq, &hx}) {
        for (std::size_t i = 1; i < ks->kappas.size(); ++i) {
            if (ks->kappas[i - 1] > 1.0)
                CHECK(ks->kappas[i] < ks->kappas[i - 1]);
            else
                CHECK(ks->kappas[i] == 1.0);
        }
    }

    // matches the closed-form condition numbers
    const AgmBoundSequence ladder = agm_bound_sequence(LatticeKind::square, 6);
    for (std::size_t i = 0; i < ladder.steps.size(); ++i) {
        const double closed = ladder.steps[i].upper_closed / ladder.steps[i].lower_closed;
        CHECK(rel_close(sq.kappas[i], closed, 1e-11));
    }
}

TEST_CASE("conjectured asymptotic constants") {
    const ConjectureConstants c = conjecture_constants();
    CHECK(std::abs(c.c3 - 0.387438) < 5e-6);
    CHECK(std::abs(c.c4 - 0.456947) < 5e-6);
    CHECK(rel_close(c.c3, 0.3874382387848854, 1e-12));
    CHECK(rel_close(c.c4, 0.4569465810444636, 1e-12));
    CHECK(c.c4 > c.c3);
}

} // TEST_SUITE
