#pragma once

#include "g2seq/sequence.hpp"

#include <map>
#include <string>
#include <utility>

namespace g2seq {

/// Sparse bivariate Laurent polynomial with exact integer coefficients.
/// Canonical form: no stored zero coefficients, so equality is structural.
class LaurentPoly {
public:
    using Exponents = std::pair<int, int>; // (i, j) for x^i y^j
    using Terms = std::map<Exponents, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(Terms t);

    static LaurentPoly monomial(const Int& c, int i, int j);
    static LaurentPoly constant(const Int& c);

    const Terms& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    Int coefficient(int i, int j) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Coefficient of x^0 y^0.
Int constant_term(const LaurentPoly& a);

struct Kernel {
    LaurentPoly K;
    LaurentPoly W;
};

/// The seven-step G2 character K and its twelve-term alternant W.
Kernel g2_kernel();

/// The SL(3) kernel with k loops: K = k + x + y + 1/x + 1/y + x/y + y/x and
/// the six-term W.
Kernel sl3_kernel(long k);

/// Constant-term sequence: term n is the coefficient of x^0 y^0 in W K^n.
Sequence ct_sequence(const LaurentPoly& K, const LaurentPoly& W, long n_max);

inline Sequence ct_sequence(const Kernel& k, long n_max) {
    return ct_sequence(k.K, k.W, n_max);
}

/// Monomials sorted lexicographically by (i, j), rendered "c*x^i*y^j"
/// joined by " + ".
std::string to_string(const LaurentPoly& a);

} // namespace g2seq
