#include "g2seq/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2seq {

namespace {

Rat rat(long n, long d = 1) { return Rat(n, d); }

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

} // namespace

PowerSeries PowerSeries::zero(long order) {
    return PowerSeries(std::vector<Rat>(static_cast<size_t>(order), Rat(0)));
}

PowerSeries PowerSeries::one(long order) {
    auto s = zero(order);
    std::vector<Rat> c = s.coeffs();
    if (order > 0) c[0] = 1;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::from_poly(const Poly& p, long order) {
    std::vector<Rat> c(static_cast<size_t>(order), Rat(0));
    for (size_t i = 0; i < p.size() && i < static_cast<size_t>(order); ++i)
        c[i] = Rat(p[i]);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::from_sequence(const Sequence& s) {
    std::vector<Rat> c;
    c.reserve(s.terms.size());
    for (const auto& t : s.terms) c.emplace_back(t);
    return PowerSeries(std::move(c));
}

bool PowerSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

PowerSeries ps_truncate(const PowerSeries& a, long n) {
    require(a.order() >= n, "truncation: series has fewer known coefficients than requested");
    std::vector<Rat> c(a.coeffs().begin(), a.coeffs().begin() + n);
    return PowerSeries(std::move(c));
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    const long n = std::min(a.order(), b.order());
    std::vector<Rat> c(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
    return PowerSeries(std::move(c));
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
    const long n = std::min(a.order(), b.order());
    std::vector<Rat> c(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) c[static_cast<size_t>(i)] = a[i] - b[i];
    return PowerSeries(std::move(c));
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    const long n = std::min(a.order(), b.order());
    std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
    for (long i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; i + j < n; ++j) {
            if (b[j] == 0) continue;
            c[static_cast<size_t>(i + j)] += a[i] * b[j];
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries ps_scale(const PowerSeries& a, const Rat& k) {
    std::vector<Rat> c = a.coeffs();
    for (auto& x : c) x *= k;
    return PowerSeries(std::move(c));
}

PowerSeries ps_derivative(const PowerSeries& a) {
    require(a.order() >= 1, "derivative of an empty series");
    std::vector<Rat> c(static_cast<size_t>(a.order() - 1));
    for (long i = 1; i < a.order(); ++i) c[static_cast<size_t>(i - 1)] = a[i] * i;
    return PowerSeries(std::move(c));
}

PowerSeries ps_reciprocal(const PowerSeries& a) {
    require(a.order() >= 1, "reciprocal of an empty series");
    require(a[0] != 0, "reciprocal: constant term is zero");
    const long n = a.order();
    std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
    c[0] = 1 / a[0];
    for (long m = 1; m < n; ++m) {
        Rat acc = 0;
        for (long i = 1; i <= m; ++i) acc += a[i] * c[static_cast<size_t>(m - i)];
        c[static_cast<size_t>(m)] = -acc / a[0];
    }
    return PowerSeries(std::move(c));
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
    require(g.order() >= 1, "compose: inner series is empty");
    require(g[0] == 0, "compose: inner constant term is nonzero");
    const long n = std::min(f.order(), g.order());
    // Horner over the inner series.
    PowerSeries r = PowerSeries::zero(n);
    const PowerSeries gt = ps_truncate(g, n);
    // Coefficients of f at index >= n only feed t^{>=n} terms (val g >= 1),
    // so the Horner loop can start at index n-1.
    for (long i = std::min(f.order(), n); i-- > 0;) {
        r = ps_mul(r, gt);
        std::vector<Rat> c = r.coeffs();
        if (!c.empty()) c[0] += f[i];
        r = PowerSeries(std::move(c));
    }
    return r;
}

PowerSeries ps_pow_rational(const PowerSeries& f, const Rat& e) {
    require(f.order() >= 1, "pow: series is empty");
    require(f[0] == 1, "pow: constant term must be 1");
    const long n = f.order();
    std::vector<Rat> g(static_cast<size_t>(n), Rat(0));
    g[0] = 1;
    // n g_n = sum_{k=1..n} ((e+1) k - n) f_k g_{n-k}, from f g' = e f' g.
    for (long m = 1; m < n; ++m) {
        Rat acc = 0;
        for (long k = 1; k <= m; ++k) {
            if (f[k] == 0) continue;
            acc += ((e + 1) * k - m) * f[k] * g[static_cast<size_t>(m - k)];
        }
        g[static_cast<size_t>(m)] = acc / m;
    }
    return PowerSeries(std::move(g));
}

PowerSeries bt_series(const PowerSeries& G, long k, long N) {
    require(G.order() >= N, "bt_series: insufficient truncation of G");
    if (k == 0) return ps_truncate(G, N);
    // 1/(1 - k t) and t/(1 - k t) as exact series of order N.
    std::vector<Rat> geo(static_cast<size_t>(N));
    Rat p = 1;
    for (long i = 0; i < N; ++i) {
        geo[static_cast<size_t>(i)] = p;
        p *= k;
    }
    const PowerSeries inv(std::move(geo));
    std::vector<Rat> sub(static_cast<size_t>(N), Rat(0));
    for (long i = 1; i < N; ++i) sub[static_cast<size_t>(i)] = inv[i - 1];
    return ps_mul(inv, ps_compose(ps_truncate(G, N), PowerSeries(std::move(sub))));
}

PowerSeries hypergeom_2f1(const Rat& a, const Rat& b, const Rat& c, long N) {
    if (c <= 0 && c.get_den() == 1)
        throw std::domain_error("2F1: c is a nonpositive integer");
    std::vector<Rat> s(static_cast<size_t>(N), Rat(0));
    Rat term = 1;
    for (long m = 0; m < N; ++m) {
        s[static_cast<size_t>(m)] = term;
        term *= (a + m) * (b + m);
        term /= (c + m) * (m + 1);
    }
    return PowerSeries(std::move(s));
}

namespace {

// Divides a series by 30-or-360 times t^5 after checking the low-order
// coefficients vanish.
PowerSeries strip_t5(const PowerSeries& bracket, long denom, long N) {
    for (long i = 0; i < 5 && i < bracket.order(); ++i)
        if (bracket[i] != 0)
            throw std::domain_error("closed-form transcription inconsistent: "
                                    "bracket not divisible by t^5");
    require(bracket.order() >= N + 5, "closed form: insufficient working precision");
    std::vector<Rat> c(static_cast<size_t>(N));
    for (long i = 0; i < N; ++i) c[static_cast<size_t>(i)] = bracket[i + 5] / denom;
    return PowerSeries(std::move(c));
}

const Poly kPolyP{1, 15, 46, 66, 28}; // 28 t^4 + 66 t^3 + 46 t^2 + 15 t + 1

} // namespace

PowerSeries t3_closed_form_hypergeom(long N) {
    require(N >= 1, "closed form: N must be >= 1");
    const long M = N + 5;

    // phi = 27 (t+1) t^2 / (1-t)^3
    const Poly one_minus_t{1, -1};
    const PowerSeries inv1 = ps_reciprocal(PowerSeries::from_poly(
        poly_mul(poly_mul(one_minus_t, one_minus_t), one_minus_t), M));
    const PowerSeries phi =
        ps_mul(PowerSeries::from_poly(Poly{0, 0, 27, 27}, M), inv1);

    const PowerSeries f1 = ps_compose(hypergeom_2f1(rat(1, 3), rat(2, 3), rat(2), M), phi);
    const PowerSeries f2 = ps_compose(hypergeom_2f1(rat(2, 3), rat(4, 3), rat(3), M), phi);

    // R1 = (t+1)^2 (214 t^3 + 45 t^2 + 60 t + 5) / (t-1)
    const Poly t_minus_1{-1, 1};
    const Poly sq{1, 2, 1}; // (t+1)^2
    const PowerSeries r1 =
        ps_mul(PowerSeries::from_poly(poly_mul(sq, Poly{5, 60, 45, 214}), M),
               ps_reciprocal(PowerSeries::from_poly(t_minus_1, M)));
    // R2 = 6 t^2 (t+1)^2 (101 t^2 + 74 t + 5) / (t-1)^2
    const PowerSeries r2 =
        ps_mul(PowerSeries::from_poly(
                   poly_scale(poly_mul(poly_mul(Poly{0, 0, 1}, sq), Poly{5, 74, 101}), 6), M),
               ps_reciprocal(PowerSeries::from_poly(poly_mul(t_minus_1, t_minus_1), M)));

    const PowerSeries bracket =
        ps_add(ps_add(ps_mul(r1, f1), ps_mul(r2, f2)),
               ps_scale(PowerSeries::from_poly(kPolyP, M), rat(5)));
    return strip_t5(bracket, 30, N);
}

PowerSeries t3_closed_form_weierstrass(long N) {
    require(N >= 1, "closed form: N must be >= 1");
    const long M = N + 6; // one extra coefficient feeds H'

    const Poly g2poly = poly_mul(Poly{-1, 1}, Poly{-1, 3, 21, 25}); // (t-1)(25t^3+21t^2+3t-1)

    // 1728/J = 1728 t^6 (1-7t)(2t+1)^2 (t+1)^3 / ((t-1)^3 (25t^3+21t^2+3t-1)^3)
    Poly num = Poly{0, 0, 0, 0, 0, 0, 1}; // t^6
    num = poly_mul(num, Poly{1, -7});
    num = poly_mul(num, poly_mul(Poly{1, 2}, Poly{1, 2}));
    const Poly t_plus_1{1, 1};
    num = poly_mul(num, poly_mul(poly_mul(t_plus_1, t_plus_1), t_plus_1));
    num = poly_scale(num, 1728);
    Poly den = poly_mul(poly_mul(g2poly, g2poly), g2poly);
    const PowerSeries j_inv =
        ps_mul(PowerSeries::from_poly(num, M),
               ps_reciprocal(PowerSeries::from_poly(den, M)));

    const PowerSeries h =
        ps_mul(ps_pow_rational(PowerSeries::from_poly(g2poly, M), rat(-1, 4)),
               ps_compose(hypergeom_2f1(rat(1, 12), rat(5, 12), rat(1), M), j_inv));
    const PowerSeries hp = ps_derivative(h);

    const PowerSeries combo = ps_add(
        ps_mul(PowerSeries::from_poly(poly_mul(Poly{59, 182, 155}, Poly{1, 11}), M), h),
        ps_mul(PowerSeries::from_poly(poly_mul(Poly{1, 231, 507, 341}, Poly{1, 5}), M - 1), hp));

    const Poly front = poly_mul(poly_mul(Poly{-1, 7}, Poly{1, 2}), t_plus_1);
    const PowerSeries bracket =
        ps_add(ps_scale(PowerSeries::from_poly(kPolyP, M - 1), rat(60)),
               ps_mul(PowerSeries::from_poly(front, M - 1), combo));
    return strip_t5(bracket, 360, N);
}

std::vector<Int> ps_integer_coeffs(const PowerSeries& a) {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(a.order()));
    for (long i = 0; i < a.order(); ++i) {
        if (a[i].get_den() != 1)
            throw std::domain_error("series coefficient at index " + std::to_string(i) +
                                    " is not an integer");
        out.push_back(a[i].get_num());
    }
    return out;
}

} // namespace g2seq
