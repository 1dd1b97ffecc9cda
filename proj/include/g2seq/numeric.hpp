#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace g2seq {

using Int = mpz_class;
using Rat = mpq_class;

// Dense integer polynomial, poly[i] = coefficient of the i-th power.
// Canonical form has no trailing zero coefficients; the zero polynomial
// is the empty vector.
using Poly = std::vector<Int>;

Poly poly_trim(Poly p);
bool poly_is_zero(const Poly& p);
int poly_degree(const Poly& p); // -1 for the zero polynomial

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Int& c);
Poly poly_derivative(const Poly& a);
Int poly_eval(const Poly& a, const Int& x);

// p(n + shift) as a polynomial in n.
Poly poly_shift_arg(const Poly& p, long shift);

// gcd of the integer coefficients (nonnegative; 0 for the zero polynomial).
Int poly_content(const Poly& a);

// Primitive gcd over the integers, positive leading coefficient.
Poly poly_gcd(Poly a, Poly b);

// Exact division; throws std::domain_error if b does not divide a.
Poly poly_exact_div(const Poly& a, const Poly& b);

// True if p has a root at some nonnegative integer (used before dividing a
// recurrence by a common polynomial factor).
bool poly_has_nonneg_integer_root(const Poly& p);

std::string poly_to_string(const Poly& p, const std::string& var);

} // namespace g2seq
