#include "g2seq/holonomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace g2seq {

namespace {

Poly zero_if_missing(const std::vector<Poly>& v, size_t i) {
    return i < v.size() ? v[i] : Poly{};
}

} // namespace

Sequence rec_generate(const PRecurrence& r, const std::vector<Int>& initial, long n_max) {
    const long ord = r.order();
    if (ord < 1) throw std::invalid_argument("rec_generate: recurrence order must be >= 1");
    if (static_cast<long>(initial.size()) != ord)
        throw std::invalid_argument("rec_generate: need exactly order-many initial terms");
    Sequence s;
    s.terms = initial;
    for (long n = 0; static_cast<long>(s.terms.size()) <= n_max; ++n) {
        const Int lead = poly_eval(r.coeffs.back(), Int(n));
        if (lead == 0)
            throw std::domain_error("rec_generate: leading coefficient vanishes at n = " +
                                    std::to_string(n));
        Int acc = poly_eval(r.inhom, Int(n));
        for (long i = 0; i < ord; ++i)
            acc += poly_eval(r.coeffs[static_cast<size_t>(i)], Int(n)) *
                   s.terms[static_cast<size_t>(n + i)];
        acc = -acc;
        if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("rec_generate: inexact division at index " +
                                    std::to_string(n + ord));
        s.terms.push_back(acc / lead);
    }
    return s;
}

bool rec_verify(const PRecurrence& r, const Sequence& s) {
    const long ord = r.order();
    if (static_cast<long>(s.terms.size()) <= ord)
        throw std::invalid_argument("rec_verify: sequence shorter than order+1");
    for (long n = 0; n + ord < static_cast<long>(s.terms.size()); ++n) {
        Int acc = poly_eval(r.inhom, Int(n));
        for (long i = 0; i <= ord; ++i)
            acc += poly_eval(r.coeffs[static_cast<size_t>(i)], Int(n)) *
                   s.terms[static_cast<size_t>(n + i)];
        if (acc != 0) return false;
    }
    return true;
}

bool rec_proportional(const PRecurrence& a, const PRecurrence& b) {
    const size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    size_t pivot = n;
    for (size_t i = 0; i < n; ++i) {
        const bool za = poly_is_zero(zero_if_missing(a.coeffs, i));
        const bool zb = poly_is_zero(zero_if_missing(b.coeffs, i));
        if (za != zb) return false;
        if (!za && pivot == n) pivot = i;
    }
    if (pivot == n) return poly_is_zero(a.inhom) == poly_is_zero(b.inhom);
    const Poly pa = zero_if_missing(a.coeffs, pivot);
    const Poly pb = zero_if_missing(b.coeffs, pivot);
    for (size_t i = 0; i < n; ++i) {
        if (poly_mul(zero_if_missing(a.coeffs, i), pb) !=
            poly_mul(zero_if_missing(b.coeffs, i), pa))
            return false;
    }
    return poly_mul(a.inhom, pb) == poly_mul(b.inhom, pa);
}

PRecurrence t3_recurrence() {
    // 14(n+1)(n+2) a(n) + (n+2)(19n+75) a(n+1) + 2(n+2)(2n+11) a(n+2)
    //   - (n+8)(n+9) a(n+3) = 0
    return PRecurrence{{Poly{28, 42, 14}, Poly{150, 113, 19}, Poly{44, 30, 4},
                        Poly{-72, -17, -1}},
                       {}};
}

PRecurrence e3_recurrence() {
    // 8(n+3)(n+1) a(n) + (7n^2+53n+88) a(n+1) - (n+8)(n+7) a(n+2) = 0
    return PRecurrence{{Poly{24, 32, 8}, Poly{88, 53, 7}, Poly{-56, -15, -1}}, {}};
}

PRecurrence c2_recurrence() {
    // 9(n+1)(n+4) a(n) - 2(5n^2+36n+61) a(n+1) + (n+5)(n+6) a(n+2) = 0
    return PRecurrence{{Poly{36, 45, 9}, Poly{-122, -72, -10}, Poly{30, 11, 1}}, {}};
}

PRecurrence uniform_recurrence(long k) {
    if (k < 0 || k > 3)
        throw std::invalid_argument("uniform_recurrence: k must be in 0..3");
    const Int K(k);
    const Int A = (K - 9) * (K - 1) * K * K;
    PRecurrence r;
    r.coeffs.resize(5);
    r.coeffs[0] = poly_scale(Poly{2, 3, 1}, A); // (n+1)(n+2)
    // 2k(n+2)((2k^2-15k+9) n + 8k^2 - 56k + 36)
    r.coeffs[1] = poly_scale(
        poly_mul(Poly{2, 1}, Poly{8 * K * K - 56 * K + 36, 2 * K * K - 15 * K + 9}),
        2 * K);
    r.coeffs[2] = Poly{114 * K * K - 510 * K + 162, 54 * K * K - 254 * K + 81,
                       6 * K * K - 30 * K + 9};
    r.coeffs[3] = poly_scale(Poly{70 * K - 153, 24 * K - 56, 2 * K - 5}, 2);
    r.coeffs[4] = Poly{56, 15, 1}; // (n+7)(n+8)
    for (auto& p : r.coeffs) p = poly_trim(std::move(p));
    return r;
}

namespace {

Poly pmul(const Poly& a, const Poly& b) { return poly_mul(a, b); }

} // namespace

DiffOperator l6_operator() {
    DiffOperator op;
    op.coeffs.resize(7);
    const Poly t{0, 1}, t2{0, 0, 1}, t3{0, 0, 0, 1}, t4{0, 0, 0, 0, 1},
        t5{0, 0, 0, 0, 0, 1};
    op.coeffs[6] = pmul(t5, pmul(Poly{1, 1}, pmul(Poly{-1, 7}, pmul(Poly{1, 2}, Poly{1, 2}))));
    op.coeffs[5] = poly_scale(pmul(t4, pmul(Poly{1, 2}, Poly{-11, 40, 211, 168})), 3);
    op.coeffs[4] = poly_scale(pmul(t3, Poly{-61, 79, 1616, 3475, 2100}), 6);
    op.coeffs[3] = poly_scale(pmul(t2, Poly{-273, 268, 7556, 17400, 11200}), 6);
    op.coeffs[2] = poly_scale(pmul(t, Poly{-77, 54, 2442, 6100, 4200}), 36);
    op.coeffs[1] = poly_scale(Poly{-35, 16, 1646, 4540, 3360}, 36);
    op.coeffs[0] = Poly{0, 8064, 25200, 20160};
    return op;
}

DiffOperator q_operator() {
    // (2t+1) t^3 D^3 + (24t+13) t^2 D^2 + 6(12t+7) t D + 48t + 30
    return DiffOperator{{Poly{30, 48}, Poly{0, 42, 72}, Poly{0, 0, 13, 24},
                         Poly{0, 0, 0, 1, 2}}};
}

DiffOperator l3_operator() {
    // t^2 (2t+1)(7t-1)(t+1) D^3 + 2t(t+1)(63t^2+22t-7) D^2
    //   + (252t^3+338t^2+36t-42) D + 28t(3t+4)
    DiffOperator op;
    op.coeffs.resize(4);
    op.coeffs[3] = pmul(Poly{0, 0, 1}, pmul(Poly{1, 2}, pmul(Poly{-1, 7}, Poly{1, 1})));
    op.coeffs[2] = poly_scale(pmul(Poly{0, 1}, pmul(Poly{1, 1}, Poly{-7, 22, 63})), 2);
    op.coeffs[1] = Poly{-42, 36, 338, 252};
    op.coeffs[0] = Poly{0, 112, 84};
    return op;
}

DiffOperator e3_ode_operator() {
    // t^2 (1+t)(1-8t) D^2 + 2t(6-23t-20t^2) D + 6(5-7t-4t^2)
    return DiffOperator{{Poly{30, -42, -24}, Poly{0, 12, -46, -40},
                         pmul(Poly{0, 0, 1}, pmul(Poly{1, 1}, Poly{1, -8}))}};
}

DiffOperator weyl_mul(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Poly{});
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (poly_is_zero(a.coeffs[i])) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            if (poly_is_zero(b.coeffs[j])) continue;
            // D^i q(t) = sum_r C(i,r) q^(r)(t) D^(i-r)
            Poly deriv = b.coeffs[j];
            Int binom = 1;
            for (size_t r = 0; r <= i; ++r) {
                if (!poly_is_zero(deriv)) {
                    Poly term = poly_scale(poly_mul(a.coeffs[i], deriv), binom);
                    size_t target = i - r + j;
                    out.coeffs[target] = poly_add(out.coeffs[target], term);
                }
                deriv = poly_derivative(deriv);
                binom = binom * static_cast<long>(i - r) / static_cast<long>(r + 1);
            }
        }
    }
    while (out.coeffs.size() > 1 && poly_is_zero(out.coeffs.back())) out.coeffs.pop_back();
    return out;
}

PowerSeries apply_operator(const DiffOperator& a, const PowerSeries& f, long n_keep) {
    if (f.order() < n_keep + a.order())
        throw std::domain_error("apply_operator: series truncation too short for requested output");
    PowerSeries acc = PowerSeries::zero(n_keep);
    PowerSeries deriv = f;
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (!poly_is_zero(a.coeffs[i]))
            acc = ps_add(acc, ps_mul(PowerSeries::from_poly(a.coeffs[i], n_keep),
                                     ps_truncate(deriv, n_keep)));
        if (i + 1 < a.coeffs.size()) deriv = ps_derivative(deriv);
    }
    return acc;
}

PRecurrence diff_to_rec(const DiffOperator& a) {
    // t^j D^i maps a_n t^n to falling(n, i) a_n t^(n-i+j); collecting the
    // coefficient of t^m gives sum over shifts s = i-j of c_s(m) a_(m+s).
    std::map<long, Poly> shifts;
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        const Poly& p = a.coeffs[i];
        for (size_t j = 0; j < p.size(); ++j) {
            if (p[j] == 0) continue;
            const long s = static_cast<long>(i) - static_cast<long>(j);
            Poly factor{1};
            for (size_t u = 0; u < i; ++u)
                factor = poly_mul(factor, Poly{Int(s) - static_cast<long>(u), Int(1)});
            shifts[s] = poly_add(shifts[s], poly_scale(factor, p[j]));
        }
    }
    for (auto it = shifts.begin(); it != shifts.end();)
        it = poly_is_zero(it->second) ? shifts.erase(it) : std::next(it);
    if (shifts.empty()) throw std::domain_error("diff_to_rec: zero operator");

    const long s_min = shifts.begin()->first;
    const long s_max = shifts.rbegin()->first;
    PRecurrence r;
    if (s_min < 0) {
        // re-index so the lowest shift becomes a(n)
        r.coeffs.assign(static_cast<size_t>(s_max - s_min) + 1, Poly{});
        for (const auto& [s, p] : shifts)
            r.coeffs[static_cast<size_t>(s - s_min)] = poly_shift_arg(p, -s_min);
    } else {
        r.coeffs.assign(static_cast<size_t>(s_max) + 1, Poly{});
        for (const auto& [s, p] : shifts) r.coeffs[static_cast<size_t>(s)] = p;
    }

    // normalize: common polynomial factor (when root-free on n >= 0),
    // integer content, positive leading coefficient
    Poly g{};
    for (const auto& p : r.coeffs)
        if (!poly_is_zero(p)) g = poly_gcd(g, p);
    if (poly_degree(g) >= 1 && !poly_has_nonneg_integer_root(g))
        for (auto& p : r.coeffs)
            if (!poly_is_zero(p)) p = poly_exact_div(p, g);
    Int content = 0;
    for (const auto& p : r.coeffs)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), poly_content(p).get_mpz_t());
    if (content > 1)
        for (auto& p : r.coeffs)
            for (auto& c : p) c /= content;
    if (!r.coeffs.empty() && !poly_is_zero(r.coeffs.back()) && r.coeffs.back().back() < 0)
        for (auto& p : r.coeffs)
            for (auto& c : p) c = -c;
    return r;
}

bool q_recurrence_check() {
    const PRecurrence target{{Poly{4, 2}, Poly{6, 1}}, {}}; // 2(n+2), (n+6)
    return rec_proportional(diff_to_rec(q_operator()), target);
}

std::string to_string(const PRecurrence& r) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (poly_is_zero(r.coeffs[i])) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << poly_to_string(r.coeffs[i], "n") << ")*a(n+" << i << ")";
    }
    if (!poly_is_zero(r.inhom)) {
        if (!first) out << " + ";
        out << "(" << poly_to_string(r.inhom, "n") << ")";
    }
    out << " = 0";
    return out.str();
}

std::string to_string(const DiffOperator& a) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (poly_is_zero(a.coeffs[i])) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << poly_to_string(a.coeffs[i], "t") << ")*D^" << i;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace g2seq
