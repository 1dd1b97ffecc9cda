#include "g2seq/series.hpp"

#include "g2seq/holonomic.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace g2seq;

TEST_CASE("reciprocal of 1 - t is the geometric series") {
    const PowerSeries r = ps_reciprocal(PowerSeries::from_poly(Poly{1, -1}, 12));
    for (long i = 0; i < 12; ++i) CHECK(r[i] == 1);
    CHECK_THROWS_AS(ps_reciprocal(PowerSeries::from_poly(Poly{0, 1}, 4)),
                    std::domain_error);
}

TEST_CASE("composition: geometric series at t/(1-t) gives (1-t)/(1-2t)") {
    const long n = 16;
    const PowerSeries outer = ps_reciprocal(PowerSeries::from_poly(Poly{1, -1}, n));
    const PowerSeries inner =
        ps_mul(PowerSeries::from_poly(Poly{0, 1}, n),
               ps_reciprocal(PowerSeries::from_poly(Poly{1, -1}, n)));
    const PowerSeries got = ps_compose(outer, inner);
    // (1-t)/(1-2t) = 1 + t + 2 t^2 + 4 t^3 + ...
    CHECK(got[0] == 1);
    Rat p = 1;
    for (long i = 1; i < n; ++i) {
        CHECK(got[i] == p);
        p *= 2;
    }
    CHECK_THROWS_AS(ps_compose(outer, outer), std::domain_error);
}

TEST_CASE("rational powers") {
    const PowerSeries s = ps_pow_rational(PowerSeries::from_poly(Poly{1, 1}, 8), Rat(1, 2));
    CHECK(s[0] == 1);
    CHECK(s[1] == Rat(1, 2));
    CHECK(s[2] == Rat(-1, 8));
    CHECK(s[3] == Rat(1, 16));
    // squaring recovers 1 + t
    const PowerSeries sq = ps_mul(s, s);
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 1);
    for (long i = 2; i < 8; ++i) CHECK(sq[i] == 0);
    CHECK_THROWS_AS(ps_pow_rational(PowerSeries::from_poly(Poly{2}, 4), Rat(1, 2)),
                    std::domain_error);
}

TEST_CASE("gauss hypergeometric series") {
    const PowerSeries geo = hypergeom_2f1(1, 1, 1, 10);
    for (long i = 0; i < 10; ++i) CHECK(geo[i] == 1);
    CHECK(hypergeom_2f1(Rat(1, 3), Rat(2, 3), 2, 5)[1] == Rat(1, 9));
    CHECK(hypergeom_2f1(Rat(1, 2), Rat(3, 4), Rat(5, 6), 1).order() == 1);
    CHECK(hypergeom_2f1(Rat(1, 2), Rat(3, 4), Rat(5, 6), 1)[0] == 1);
    CHECK_THROWS_AS(hypergeom_2f1(1, 1, 0, 4), std::domain_error);
    CHECK_THROWS_AS(hypergeom_2f1(1, 1, -2, 4), std::domain_error);
}

TEST_CASE("series-level binomial transform") {
    const Sequence t3 = rec_generate(t3_recurrence(), {1, 0, 1}, 39);
    const Sequence e3 = rec_generate(e3_recurrence(), {1, 1}, 39);
    const PowerSeries tg = PowerSeries::from_sequence(t3);
    const PowerSeries eg = PowerSeries::from_sequence(e3);
    CHECK(ps_integer_coeffs(bt_series(tg, 1, 40)) == e3.terms);
    CHECK(ps_integer_coeffs(bt_series(eg, -1, 40)) == t3.terms);
    CHECK(bt_series(tg, 0, 40) == ps_truncate(tg, 40));
    // geometric series transforms to 1/(1-2t)
    const PowerSeries two = bt_series(
        ps_reciprocal(PowerSeries::from_poly(Poly{1, -1}, 20)), 1, 20);
    Rat p = 1;
    for (long i = 0; i < 20; ++i) {
        CHECK(two[i] == p);
        p *= 2;
    }
    CHECK_THROWS_AS(bt_series(tg, 1, 60), std::domain_error);
}

TEST_CASE("series transform agrees with the term-level transform") {
    const Sequence t3 = rec_generate(t3_recurrence(), {1, 0, 1}, 39);
    const PowerSeries tg = PowerSeries::from_sequence(t3);
    for (long k = -3; k <= 3; ++k)
        CHECK(ps_integer_coeffs(bt_series(tg, k, 40)) ==
              binomial_transform(t3, k).terms);
}

TEST_CASE("hypergeometric closed form reproduces the octant row") {
    const PowerSeries s = t3_closed_form_hypergeom(10);
    CHECK(ps_integer_coeffs(s) == reference("A059710").terms);
    CHECK(s[0] == 1);
}

TEST_CASE("weierstrass closed form reproduces the octant row") {
    CHECK(ps_integer_coeffs(t3_closed_form_weierstrass(10)) ==
          reference("A059710").terms);
}

TEST_CASE("the closed forms agree with each other to 50 terms") {
    CHECK(t3_closed_form_hypergeom(50) == t3_closed_form_weierstrass(50));
}

TEST_CASE("L3 annihilates the closed-form series") {
    CHECK(apply_operator(l3_operator(), t3_closed_form_hypergeom(60), 50).is_zero());
}

TEST_CASE("the second-family ODE maps its series to the constant 30") {
    const PowerSeries e =
        PowerSeries::from_sequence(rec_generate(e3_recurrence(), {1, 1}, 59));
    const PowerSeries got = apply_operator(e3_ode_operator(), e, 50);
    CHECK(got[0] == 30);
    for (long i = 1; i < 50; ++i) CHECK(got[i] == 0);
}

TEST_CASE("integer extraction rejects fractional coefficients") {
    CHECK_THROWS_AS(ps_integer_coeffs(PowerSeries({Rat(1), Rat(1, 2)})),
                    std::domain_error);
}
