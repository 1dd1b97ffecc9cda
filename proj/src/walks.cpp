#include "g2seq/walks.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace g2seq {

WalkModel octant_g2_model() {
    WalkModel m;
    m.steps = {
        {1, 0, {}},  {-1, 1, {}}, {-2, 1, {}},
        {-1, 0, {}}, {1, -1, {}}, {2, -1, {}},
        {0, 0, [](long x, long) { return x == 0; }},
    };
    m.domain = [](long x, long y) { return x >= 0 && y >= 0; };
    return m;
}

WalkModel hesitating_model() {
    WalkModel m;
    m.steps = {
        {1, 0, {}},  {0, 1, {}},  {-1, 0, {}}, {0, -1, {}},
        {1, -1, {}}, {-1, 1, {}},
        {0, 0, {}}, // add then remove a cell on the first row
        {0, 0, [](long x, long y) { return x == y; }}, // same on the second row
    };
    m.domain = [](long x, long y) { return x >= y && y >= 0; };
    return m;
}

WalkModel with_extra_zero_steps(WalkModel m, long j) {
    for (long i = 0; i < j; ++i) m.steps.push_back(Step{0, 0, {}});
    return m;
}

WalkModel apply_unimodular(const WalkModel& m, const Mat2& u) {
    const long det = u.a * u.d - u.b * u.c;
    if (det != 1 && det != -1)
        throw std::invalid_argument("apply_unimodular: matrix determinant must be ±1");
    // Integer inverse: det * inv = adjugate.
    const long ia = u.d * det, ib = -u.b * det, ic = -u.c * det, id = u.a * det;
    auto pull_back = [=](const PointPredicate& p) -> PointPredicate {
        if (!p) return {};
        return [=](long x, long y) { return p(ia * x + ib * y, ic * x + id * y); };
    };
    WalkModel out;
    out.domain = pull_back(m.domain);
    for (const Step& s : m.steps)
        out.steps.push_back(Step{u.a * s.dx + u.b * s.dy,
                                 u.c * s.dx + u.d * s.dy,
                                 pull_back(s.forbidden)});
    return out;
}

Sequence count_excursions(const WalkModel& m, long n_max) {
    if (n_max < 0) throw std::invalid_argument("count_excursions: n_max must be >= 0");
    if (!m.domain || !m.domain(0, 0))
        throw std::invalid_argument("count_excursions: origin not in domain");

    long max_dx = 0, max_dy = 0;
    for (const Step& s : m.steps) {
        max_dx = std::max(max_dx, std::labs(s.dx));
        max_dy = std::max(max_dy, std::labs(s.dy));
    }
    // A point can contribute to an excursion of length <= n_max only if both
    // |x| <= max_dx * min(k, n_max - k) and likewise for y; the half-length
    // box therefore covers every useful state.
    const long half = (n_max + 1) / 2;
    const long bx = max_dx * half, by = max_dy * half;
    const long w = 2 * bx + 1, h = 2 * by + 1;
    auto idx = [=](long x, long y) { return (x + bx) * h + (y + by); };

    std::vector<Int> cur(static_cast<size_t>(w * h), Int(0));
    std::vector<Int> next(static_cast<size_t>(w * h), Int(0));
    cur[static_cast<size_t>(idx(0, 0))] = 1;

    Sequence out;
    out.terms.reserve(static_cast<size_t>(n_max) + 1);
    out.terms.push_back(1); // the empty walk

    long lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0; // occupied bounds
    for (long k = 0; k < n_max; ++k) {
        // Reachability/returnability cap for the next level.
        const long lim = std::max(std::min(k + 1, n_max - (k + 1)), 0L);
        const long cx = max_dx * lim;
        const long cy = max_dy * lim;

        long nlo_x = 0, nhi_x = 0, nlo_y = 0, nhi_y = 0;
        bool any = false;
        for (long x = lo_x; x <= hi_x; ++x) {
            for (long y = lo_y; y <= hi_y; ++y) {
                const Int& c = cur[static_cast<size_t>(idx(x, y))];
                if (c == 0) continue;
                for (const Step& s : m.steps) {
                    if (s.forbidden && s.forbidden(x, y)) continue;
                    const long tx = x + s.dx, ty = y + s.dy;
                    if (std::labs(tx) > cx || std::labs(ty) > cy) continue;
                    if (!m.domain(tx, ty)) continue;
                    next[static_cast<size_t>(idx(tx, ty))] += c;
                    if (!any) {
                        nlo_x = nhi_x = tx;
                        nlo_y = nhi_y = ty;
                        any = true;
                    } else {
                        nlo_x = std::min(nlo_x, tx);
                        nhi_x = std::max(nhi_x, tx);
                        nlo_y = std::min(nlo_y, ty);
                        nhi_y = std::max(nhi_y, ty);
                    }
                }
            }
        }
        // clear the old level and swap
        for (long x = lo_x; x <= hi_x; ++x)
            for (long y = lo_y; y <= hi_y; ++y)
                cur[static_cast<size_t>(idx(x, y))] = 0;
        std::swap(cur, next);
        lo_x = nlo_x;
        hi_x = nhi_x;
        lo_y = nlo_y;
        hi_y = nhi_y;
        out.terms.push_back(any ? cur[static_cast<size_t>(idx(0, 0))] : Int(0));
        if (!any) {
            // no states left; remaining counts are zero
            while (static_cast<long>(out.terms.size()) <= n_max) out.terms.push_back(0);
            break;
        }
    }
    return out;
}

std::vector<std::pair<long, long>> nonzero_step_set(const WalkModel& m) {
    std::vector<std::pair<long, long>> v;
    for (const Step& s : m.steps)
        if (s.dx != 0 || s.dy != 0) v.emplace_back(s.dx, s.dy);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace g2seq
