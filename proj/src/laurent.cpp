#include "g2seq/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace g2seq {

LaurentPoly::LaurentPoly(Terms t) : terms_(std::move(t)) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::monomial(const Int& c, int i, int j) {
    Terms t;
    if (c != 0) t[{i, j}] = c;
    return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::constant(const Int& c) { return monomial(c, 0, 0); }

Int LaurentPoly::coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly::Terms t = a.terms();
    for (const auto& [e, c] : b.terms()) {
        Int& slot = t[e];
        slot += c;
        if (slot == 0) t.erase(e);
    }
    return LaurentPoly(std::move(t));
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly::Terms t;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            const LaurentPoly::Exponents e{ea.first + eb.first, ea.second + eb.second};
            Int& slot = t[e];
            slot += ca * cb;
            if (slot == 0) t.erase(e);
        }
    }
    return LaurentPoly(std::move(t));
}

Int constant_term(const LaurentPoly& a) { return a.coefficient(0, 0); }

Kernel g2_kernel() {
    LaurentPoly::Terms k;
    k[{0, 0}] = 1;
    k[{1, 0}] = 1;
    k[{0, 1}] = 1;
    k[{1, 1}] = 1;
    k[{-1, 0}] = 1;
    k[{0, -1}] = 1;
    k[{-1, -1}] = 1;

    // W = x^-2 y^-3 * (x^2 y^3 - x y^3 + x^-1 y^2 - x^-2 y + x^-3 y^-1
    //     - x^-3 y^-2 + x^-2 y^-3 - x^-1 y^-3 + x y^-2 - x^2 y^-1 + x^3 y - x^3 y^2)
    LaurentPoly::Terms w;
    const std::pair<LaurentPoly::Exponents, int> inner[] = {
        {{2, 3}, 1},    {{1, 3}, -1},  {{-1, 2}, 1},  {{-2, 1}, -1},
        {{-3, -1}, 1},  {{-3, -2}, -1}, {{-2, -3}, 1}, {{-1, -3}, -1},
        {{1, -2}, 1},   {{2, -1}, -1}, {{3, 1}, 1},   {{3, 2}, -1},
    };
    for (const auto& [e, c] : inner) w[{e.first - 2, e.second - 3}] = c;
    return Kernel{LaurentPoly(std::move(k)), LaurentPoly(std::move(w))};
}

Kernel sl3_kernel(long k) {
    LaurentPoly::Terms kk;
    if (k != 0) kk[{0, 0}] = k;
    kk[{1, 0}] = 1;
    kk[{0, 1}] = 1;
    kk[{-1, 0}] = 1;
    kk[{0, -1}] = 1;
    kk[{1, -1}] = 1;
    kk[{-1, 1}] = 1;

    // W = 1 - x^2/y + x^3 - x^2 y^2 + y^3 - y^2/x
    LaurentPoly::Terms w;
    w[{0, 0}] = 1;
    w[{2, -1}] = -1;
    w[{3, 0}] = 1;
    w[{2, 2}] = -1;
    w[{0, 3}] = 1;
    w[{-1, 2}] = -1;
    return Kernel{LaurentPoly(std::move(kk)), LaurentPoly(std::move(w))};
}

namespace {

// Dense grid used by the constant-term engine. Exponents are confined to the
// Minkowski sum of the W support and n copies of the K support, further
// clipped to monomials that can still reach (0,0) with the remaining
// multiplications.
struct Grid {
    long lo_x, hi_x, lo_y, hi_y;
    std::vector<Int> cells;

    Grid(long lx, long hx, long ly, long hy)
        : lo_x(lx), hi_x(hx), lo_y(ly), hi_y(hy),
          cells(static_cast<size_t>((hx - lx + 1) * (hy - ly + 1)), Int(0)) {}

    Int& at(long x, long y) {
        return cells[static_cast<size_t>((x - lo_x) * (hi_y - lo_y + 1) + (y - lo_y))];
    }
};

} // namespace

Sequence ct_sequence(const LaurentPoly& K, const LaurentPoly& W, long n_max) {
    if (n_max < 0) throw std::invalid_argument("ct_sequence: n_max must be >= 0");

    long kx = 0, ky = 0; // max exponent move per K factor, per coordinate
    for (const auto& [e, c] : K.terms()) {
        kx = std::max(kx, std::labs(e.first));
        ky = std::max(ky, std::labs(e.second));
    }
    long wlx = 0, whx = 0, wly = 0, why = 0;
    for (const auto& [e, c] : W.terms()) {
        wlx = std::min<long>(wlx, e.first);
        whx = std::max<long>(whx, e.first);
        wly = std::min<long>(wly, e.second);
        why = std::max<long>(why, e.second);
    }

    Grid cur(wlx - n_max * kx, whx + n_max * kx, wly - n_max * ky, why + n_max * ky);
    Grid next = cur;
    long lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const auto& [e, c] : W.terms()) {
        // Clip W itself to monomials that can return within n_max factors.
        if (std::labs(e.first) > n_max * kx || std::labs(e.second) > n_max * ky) continue;
        cur.at(e.first, e.second) = c;
        if (first) {
            lo_x = hi_x = e.first;
            lo_y = hi_y = e.second;
            first = false;
        } else {
            lo_x = std::min<long>(lo_x, e.first);
            hi_x = std::max<long>(hi_x, e.first);
            lo_y = std::min<long>(lo_y, e.second);
            hi_y = std::max<long>(hi_y, e.second);
        }
    }

    Sequence out;
    out.terms.reserve(static_cast<size_t>(n_max) + 1);
    out.terms.push_back(first ? Int(0) : cur.at(0, 0));

    for (long n = 1; n <= n_max; ++n) {
        const long budget_x = (n_max - n) * kx; // reachability clip after this factor
        const long budget_y = (n_max - n) * ky;
        long nlo_x = 0, nhi_x = 0, nlo_y = 0, nhi_y = 0;
        bool any = false;
        for (long x = lo_x; x <= hi_x; ++x) {
            for (long y = lo_y; y <= hi_y; ++y) {
                const Int& c = cur.at(x, y);
                if (c == 0) continue;
                for (const auto& [e, kc] : K.terms()) {
                    const long tx = x + e.first, ty = y + e.second;
                    if (std::labs(tx) > budget_x || std::labs(ty) > budget_y) continue;
                    next.at(tx, ty) += c * kc;
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
        for (long x = lo_x; x <= hi_x; ++x)
            for (long y = lo_y; y <= hi_y; ++y) cur.at(x, y) = 0;
        std::swap(cur.cells, next.cells);
        lo_x = nlo_x;
        hi_x = nhi_x;
        lo_y = nlo_y;
        hi_y = nhi_y;
        if (!any) {
            while (static_cast<long>(out.terms.size()) <= n_max) out.terms.push_back(0);
            break;
        }
        out.terms.push_back(cur.at(0, 0));
    }
    return out;
}

std::string to_string(const LaurentPoly& a) {
    if (a.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str() << "*x^" << e.first << "*y^" << e.second;
    }
    return out.str();
}

} // namespace g2seq
