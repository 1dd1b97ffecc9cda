#include "g2seq/holonomic.hpp"
#include "g2seq/laurent.hpp"
#include "g2seq/walks.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace g2seq;

TEST_CASE("built-in recurrences regenerate the printed rows") {
    CHECK(rec_generate(t3_recurrence(), {1, 0, 1}, 9).terms == reference("A059710").terms);
    CHECK(rec_generate(e3_recurrence(), {1, 1}, 9).terms == reference("A108307").terms);
    CHECK(rec_generate(c2_recurrence(), {1, 3}, 5).terms == reference("A216947").terms);
}

TEST_CASE("recurrence shapes transcribed correctly") {
    CHECK(t3_recurrence().order() == 3);
    CHECK(e3_recurrence().order() == 2);
    CHECK(c2_recurrence().order() == 2);
    CHECK(poly_eval(e3_recurrence().coeffs[2], 0) == -56);   // -(n+8)(n+7) at n=0
    CHECK(poly_eval(c2_recurrence().coeffs[1], 0) == -122);  // -2(5n^2+36n+61) at n=0
}

TEST_CASE("rec_verify accepts the table row and rejects a perturbation") {
    CHECK(rec_verify(t3_recurrence(), reference("A059710")));
    Sequence bad = reference("A059710");
    bad.terms[6] += 1;
    CHECK_FALSE(rec_verify(t3_recurrence(), bad));
    CHECK_THROWS_AS(rec_verify(t3_recurrence(), Sequence{"", {1, 0, 1}}),
                    std::invalid_argument);
}

TEST_CASE("second-family recurrence holds for the transformed walk counts") {
    const Sequence e3 =
        binomial_transform(count_excursions(octant_g2_model(), 40), 1);
    CHECK(rec_verify(e3_recurrence(), e3));
}

TEST_CASE("rec_generate flags wrong data loudly") {
    // wrong initial terms make the very first division inexact
    CHECK_THROWS_AS(rec_generate(t3_recurrence(), {1, 1, 1}, 9), std::domain_error);
    CHECK_THROWS_AS(rec_generate(t3_recurrence(), {1, 0}, 9), std::invalid_argument);
}

TEST_CASE("uniform recurrence specializations") {
    CHECK(poly_is_zero(uniform_recurrence(0).coeffs[0])); // k^2 factor
    CHECK(poly_is_zero(uniform_recurrence(1).coeffs[0])); // (k-1) factor
    CHECK_FALSE(poly_is_zero(uniform_recurrence(2).coeffs[0]));
    CHECK(uniform_recurrence(3).order() == 4);
    CHECK(uniform_recurrence(2).coeffs[4] == Poly{56, 15, 1}); // (n+7)(n+8)
    CHECK_THROWS_AS(uniform_recurrence(4), std::invalid_argument);
    CHECK_THROWS_AS(uniform_recurrence(-1), std::invalid_argument);
}

TEST_CASE("each uniform specialization annihilates exactly one printed row") {
    for (long k = 0; k <= 3; ++k) {
        int matches = 0;
        for (long r = 0; r <= 3; ++r)
            if (rec_verify(uniform_recurrence(k), ct_sequence(sl3_kernel(r), 30))) ++matches;
        CHECK(matches == 1);
    }
}

TEST_CASE("weyl product rule") {
    const DiffOperator d{{Poly{}, Poly{1}}};  // D
    const DiffOperator t{{Poly{0, 1}}};       // multiplication by t
    const DiffOperator dt = weyl_mul(d, t);   // t D + 1
    CHECK(dt.coeffs == std::vector<Poly>{Poly{1}, Poly{0, 1}});
    const DiffOperator td = weyl_mul(t, d);   // t D
    CHECK(td.coeffs == std::vector<Poly>{Poly{}, Poly{0, 1}});
    const DiffOperator id{{Poly{1}}};
    CHECK(weyl_mul(q_operator(), id).coeffs == q_operator().coeffs);
}

TEST_CASE("weyl multiplication is associative on the built-ins") {
    const DiffOperator d{{Poly{}, Poly{1}}};
    const DiffOperator t{{Poly{0, 1}}};
    const DiffOperator ops[] = {q_operator(), l3_operator(), d, t};
    for (const auto& a : ops)
        for (const auto& b : ops)
            for (const auto& c : ops)
                CHECK(weyl_mul(weyl_mul(a, b), c).coeffs ==
                      weyl_mul(a, weyl_mul(b, c)).coeffs);
}

TEST_CASE("the order-6 operator factors as Q * L3") {
    CHECK(weyl_mul(q_operator(), l3_operator()).coeffs == l6_operator().coeffs);
}

TEST_CASE("diff_to_rec on tiny operators") {
    const DiffOperator d{{Poly{}, Poly{1}}};
    const PRecurrence rd = diff_to_rec(d);
    CHECK(rd.coeffs == std::vector<Poly>{Poly{}, Poly{1}}); // a(n+1) = 0 after removing (n+1)

    const DiffOperator td_minus_1{{Poly{-1}, Poly{0, 1}}};
    const PRecurrence rt = diff_to_rec(td_minus_1);
    CHECK(rt.coeffs == std::vector<Poly>{Poly{-1, 1}}); // (n-1) a(n) = 0
}

TEST_CASE("diff_to_rec of L3 is the order-3 recurrence") {
    const PRecurrence r = diff_to_rec(l3_operator());
    CHECK(rec_proportional(r, t3_recurrence()));
    CHECK(rec_verify(r, reference("A059710")));
}

TEST_CASE("diff_to_rec of L6 annihilates the sequence") {
    CHECK(rec_verify(diff_to_rec(l6_operator()),
                     rec_generate(t3_recurrence(), {1, 0, 1}, 30)));
}

TEST_CASE("Q converts to the stated two-term relation") {
    CHECK(q_recurrence_check());
    const PRecurrence q{{Poly{4, 2}, Poly{6, 1}}, {}};
    // a zero seed forces the whole solution to vanish
    CHECK(rec_generate(q, {0}, 20).terms == std::vector<Int>(21, Int(0)));
    // a nonzero seed hits non-integer terms immediately
    CHECK_THROWS_AS(rec_generate(q, {1}, 20), std::domain_error);
}

TEST_CASE("apply_operator basics") {
    const DiffOperator d{{Poly{}, Poly{1}}};
    CHECK(apply_operator(d, PowerSeries::one(20), 10).is_zero());
    CHECK_THROWS_AS(apply_operator(l3_operator(), PowerSeries::one(10), 10),
                    std::domain_error);
}

TEST_CASE("rendering is stable") {
    CHECK(to_string(PRecurrence{{Poly{4, 2}, Poly{6, 1}}, {}}) ==
          "(4 + 2*n)*a(n+0) + (6 + n)*a(n+1) = 0");
    CHECK(to_string(DiffOperator{{Poly{30, 48}, Poly{0, 42, 72}}}) ==
          "(30 + 48*t)*D^0 + (42*t + 72*t^2)*D^1");
}
