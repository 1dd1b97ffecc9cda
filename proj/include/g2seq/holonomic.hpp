#pragma once

#include "g2seq/numeric.hpp"
#include "g2seq/sequence.hpp"
#include "g2seq/series.hpp"

#include <string>
#include <vector>

namespace g2seq {

/// Linear recurrence sum_i coeffs[i](n) * a(n+i) + inhom(n) = 0 with
/// integer-polynomial coefficients.
struct PRecurrence {
    std::vector<Poly> coeffs; // index i multiplies a(n+i)
    Poly inhom;               // usually empty (zero)

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

/// Extends `initial` (which must have exactly order() entries) to n_max+1
/// terms. Throws std::domain_error on a vanishing leading coefficient or an
/// inexact division, naming the offending index.
Sequence rec_generate(const PRecurrence& r, const std::vector<Int>& initial, long n_max);

/// True iff the recurrence holds at every n with n + order < length(s).
/// Throws std::invalid_argument if s is shorter than order+1.
bool rec_verify(const PRecurrence& r, const Sequence& s);

/// True iff the two recurrences have proportional coefficient vectors
/// (identical up to one overall nonzero rational factor).
bool rec_proportional(const PRecurrence& a, const PRecurrence& b);

// Recurrences transcribed from the source results.
PRecurrence t3_recurrence(); // order 3
PRecurrence e3_recurrence(); // order 2
PRecurrence c2_recurrence(); // order 2

/// Order-4 recurrence for the quadrant sequences, with the loop count k
/// (0..3) substituted into its five coefficient polynomials.
PRecurrence uniform_recurrence(long k);

/// Differential operator sum_i coeffs[i](t) * d^i/dt^i.
struct DiffOperator {
    std::vector<Poly> coeffs; // index i multiplies the i-th derivative

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

// Built-in operators annihilating (or mapping) the octant generating
// functions.
DiffOperator l6_operator();
DiffOperator q_operator();
DiffOperator l3_operator();
/// Homogeneous part of the second-family ODE; applied to its series it
/// yields the constant 30.
DiffOperator e3_ode_operator();

/// Noncommutative product with the commutation rule d*p(t) = p(t)*d + p'(t).
DiffOperator weyl_mul(const DiffOperator& a, const DiffOperator& b);

/// sum coeffs[i](t) f^(i)(t), truncated to n_keep coefficients. Requires
/// f known to at least n_keep + order(a) coefficients.
PowerSeries apply_operator(const DiffOperator& a, const PowerSeries& f, long n_keep);

/// Recurrence satisfied by the coefficient sequence of every power-series
/// solution of the operator. Normalized by removing the common polynomial
/// factor (when it has no nonnegative integer root), the integer content,
/// and by a positive leading coefficient.
PRecurrence diff_to_rec(const DiffOperator& a);

/// Checks that diff_to_rec(Q) is the two-term relation
/// 2(n+2) f_n + (n+6) f_{n+1} = 0, up to an overall unit.
bool q_recurrence_check();

std::string to_string(const PRecurrence& r);
std::string to_string(const DiffOperator& a);

} // namespace g2seq
