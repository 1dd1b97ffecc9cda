#pragma once

#include "g2seq/sequence.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace g2seq {

/// Lattice predicate on a point (x, y).
using PointPredicate = std::function<bool(long, long)>;

/// One step of a walk model. `forbidden`, when set, is evaluated at the point
/// the walk currently occupies; the step may not be used where it holds.
struct Step {
    long dx = 0;
    long dy = 0;
    PointPredicate forbidden; // empty: step always admissible
};

/// A multiset of steps plus a domain the walk must stay inside. Walks start
/// at the origin, which must lie in the domain.
struct WalkModel {
    std::vector<Step> steps;
    PointPredicate domain;
};

/// G2 weight-lattice model: seven steps, quadrant domain x >= 0, y >= 0,
/// zero step forbidden on the boundary line x = 0.
WalkModel octant_g2_model();

/// Height-2 hesitating-tableau model: eight steps (two of them zero),
/// domain x >= y >= 0, one zero step forbidden on the diagonal x = y.
WalkModel hesitating_model();

/// Adjoins j unrestricted zero steps (each application of which realizes one
/// binomial transform of the excursion counts).
WalkModel with_extra_zero_steps(WalkModel m, long j);

struct Mat2 {
    long a = 1, b = 0, c = 0, d = 1; // (x, y) -> (a x + b y, c x + d y)
};

/// Transforms steps, domain and step restrictions by a determinant-±1 integer
/// matrix. Throws std::invalid_argument otherwise.
WalkModel apply_unimodular(const WalkModel& m, const Mat2& u);

/// Excursion counts: term n is the number of n-step walks from the origin
/// back to the origin staying in the domain and honoring step restrictions.
Sequence count_excursions(const WalkModel& m, long n_max);

/// Sorted distinct nonzero (dx, dy) pairs, for step-set comparisons.
std::vector<std::pair<long, long>> nonzero_step_set(const WalkModel& m);

} // namespace g2seq
