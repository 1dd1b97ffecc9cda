#pragma once

#include "g2seq/numeric.hpp"
#include "g2seq/sequence.hpp"

#include <vector>

namespace g2seq {

/// Truncated power series over exact rationals. `order()` is the number of
/// known coefficients: coefficients 0 .. order()-1 are exact, everything
/// above is unknown. Operations propagate the tightest valid order and throw
/// std::domain_error when they cannot deliver the requested precision.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

    static PowerSeries zero(long order);
    static PowerSeries one(long order);
    /// The polynomial sum p[i] t^i viewed as a series exact to `order`.
    static PowerSeries from_poly(const Poly& p, long order);
    static PowerSeries from_sequence(const Sequence& s);

    long order() const { return static_cast<long>(c_.size()); }
    const Rat& operator[](long i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    bool operator==(const PowerSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rat> c_;
};

PowerSeries ps_truncate(const PowerSeries& a, long n);
PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, const Rat& c);
PowerSeries ps_derivative(const PowerSeries& a);

/// 1/a; requires a(0) != 0.
PowerSeries ps_reciprocal(const PowerSeries& a);

/// f(g); requires g(0) = 0.
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);

/// f^e for rational e; requires f(0) = 1.
PowerSeries ps_pow_rational(const PowerSeries& f, const Rat& e);

/// Generating-function binomial transform: (bt^k G)(t) = G(t/(1-kt))/(1-kt),
/// truncated to N. Requires G known to at least N coefficients.
PowerSeries bt_series(const PowerSeries& G, long k, long N);

/// Gauss hypergeometric series 2F1(a, b; c; z) to N coefficients.
/// Throws std::domain_error when c is a nonpositive integer.
PowerSeries hypergeom_2f1(const Rat& a, const Rat& b, const Rat& c, long N);

/// Generating function of the first octant sequence from the hypergeometric
/// closed form (two 2F1 values at an algebraic pullback, divided by 30 t^5).
PowerSeries t3_closed_form_hypergeom(long N);

/// The same generating function from the Weierstrass-invariant expression
/// (H = g2^{-1/4} 2F1(1/12, 5/12; 1; 1728/J) and its derivative).
PowerSeries t3_closed_form_weierstrass(long N);

/// Coefficients as exact integers; throws std::domain_error if any
/// coefficient has a denominator.
std::vector<Int> ps_integer_coeffs(const PowerSeries& a);

} // namespace g2seq
