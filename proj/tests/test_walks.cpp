#include "g2seq/walks.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace g2seq;

TEST_CASE("octant model reproduces the first octant row") {
    const Sequence s = count_excursions(octant_g2_model(), 9);
    CHECK(s.terms == reference("A059710").terms);
}

TEST_CASE("hesitating model reproduces the second octant row") {
    const Sequence s = count_excursions(hesitating_model(), 9);
    CHECK(s.terms == reference("A108307").terms);
    // n=1: only the unrestricted zero step; n=2: two zero steps or (1,0)(-1,0)
    CHECK(s.terms[1] == 1);
    CHECK(s.terms[2] == 2);
}

TEST_CASE("empty walk counts once for any model") {
    CHECK(count_excursions(octant_g2_model(), 0).terms == std::vector<Int>{1});
    CHECK(count_excursions(hesitating_model(), 0).terms == std::vector<Int>{1});
}

TEST_CASE("one extra zero step gives the binomial transform rows") {
    CHECK(count_excursions(with_extra_zero_steps(octant_g2_model(), 1), 9).terms ==
          reference("A108307").terms);
    CHECK(count_excursions(with_extra_zero_steps(octant_g2_model(), 2), 9).terms ==
          reference("A108304").terms);
}

TEST_CASE("adding zero steps is a walk-level binomial transform") {
    for (const WalkModel& m : {octant_g2_model(), hesitating_model()}) {
        const Sequence base = count_excursions(m, 40);
        CHECK(count_excursions(with_extra_zero_steps(m, 1), 40).terms ==
              binomial_transform(base, 1).terms);
    }
}

TEST_CASE("zero extra steps leaves the model unchanged") {
    const WalkModel m = with_extra_zero_steps(octant_g2_model(), 0);
    CHECK(m.steps.size() == octant_g2_model().steps.size());
    CHECK(count_excursions(m, 12).terms == count_excursions(octant_g2_model(), 12).terms);
}

TEST_CASE("excursion counts are invariant under unimodular coordinate changes") {
    const WalkModel m = octant_g2_model();
    const Sequence base = count_excursions(m, 15);
    CHECK(count_excursions(apply_unimodular(m, Mat2{1, 0, 0, 1}), 15).terms == base.terms);
    // (x, y) -> (x, y + x)
    CHECK(count_excursions(apply_unimodular(m, Mat2{1, 0, 1, 1}), 15).terms == base.terms);
    // (x, y) -> (x + y, y)
    CHECK(count_excursions(apply_unimodular(m, Mat2{1, 1, 0, 1}), 15).terms == base.terms);
}

TEST_CASE("coordinate change identifies the hesitating model with the octant model") {
    // (x, y) -> (x - y, y) carries the hesitating steps, domain and boundary
    // restriction onto the weight-lattice model.
    const WalkModel mapped = apply_unimodular(hesitating_model(), Mat2{1, -1, 0, 1});
    CHECK(nonzero_step_set(mapped) == nonzero_step_set(octant_g2_model()));
    CHECK(count_excursions(mapped, 20).terms ==
          count_excursions(hesitating_model(), 20).terms);
}

TEST_CASE("non-unimodular matrices are rejected") {
    CHECK_THROWS_AS(apply_unimodular(octant_g2_model(), Mat2{2, 0, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("excursion counts have the requested length") {
    const Sequence s = count_excursions(octant_g2_model(), 12);
    CHECK(s.terms.size() == 13);
}
