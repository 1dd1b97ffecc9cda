#include "g2seq/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2seq {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool poly_is_zero(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const Int& c) { return c == 0; });
}

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, const Int& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Poly poly_derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    return poly_trim(std::move(r));
}

Int poly_eval(const Poly& a, const Int& x) {
    Int r = 0;
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

Poly poly_shift_arg(const Poly& p, long shift) {
    // Horner: p(n+shift) built from the top coefficient down.
    Poly r;
    const Poly lin{Int(shift), Int(1)};
    for (size_t i = p.size(); i-- > 0;) {
        r = poly_mul(r, lin);
        r = poly_add(r, Poly{p[i]});
    }
    return r;
}

Int poly_content(const Poly& a) {
    Int g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

namespace {

Poly primitive_part(Poly p) {
    p = poly_trim(std::move(p));
    Int g = poly_content(p);
    if (g == 0) return {};
    for (auto& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Poly pseudo_rem(Poly a, const Poly& b) {
    const int db = poly_degree(b);
    const Int& lb = b[static_cast<size_t>(db)];
    int da = poly_degree(a);
    while (da >= db) {
        const Int lead = a[static_cast<size_t>(da)];
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(da - db + j)] -= lead * b[static_cast<size_t>(j)];
        a = poly_trim(std::move(a));
        da = poly_degree(a);
    }
    return a;
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (poly_is_zero(a)) return b;
    if (poly_is_zero(b)) return a;
    if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
    while (!poly_is_zero(b)) {
        Poly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(std::move(a));
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    const int db = poly_degree(b);
    if (db < 0) throw std::domain_error("poly_exact_div: division by zero polynomial");
    Poly rem = poly_trim(a);
    int da = poly_degree(rem);
    if (da < 0) return {};
    if (da < db) throw std::domain_error("poly_exact_div: not divisible");
    Poly q(static_cast<size_t>(da - db) + 1, Int(0));
    const Int& lb = b[static_cast<size_t>(db)];
    while ((da = poly_degree(rem)) >= db) {
        const Int& la = rem[static_cast<size_t>(da)];
        if (!mpz_divisible_p(la.get_mpz_t(), lb.get_mpz_t()))
            throw std::domain_error("poly_exact_div: not divisible");
        Int c = la / lb;
        q[static_cast<size_t>(da - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(da - db + j)] -= c * b[static_cast<size_t>(j)];
        rem = poly_trim(std::move(rem));
        if (rem.empty()) break;
    }
    if (!poly_is_zero(rem)) throw std::domain_error("poly_exact_div: nonzero remainder");
    return poly_trim(std::move(q));
}

bool poly_has_nonneg_integer_root(const Poly& p) {
    const int d = poly_degree(p);
    if (d < 0) return true; // zero polynomial vanishes everywhere
    if (d == 0) return false;
    if (p[0] == 0) return true; // root at 0
    // Cauchy bound on root magnitude, then scan the (small) integer range.
    Int maxc = 0;
    for (const auto& c : p) {
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    Int lead = abs(p[static_cast<size_t>(d)]);
    Int bound = maxc / lead + 2;
    if (bound > 100000) bound = 100000; // degrees here are tiny; this never triggers
    for (Int n = 1; n <= bound; ++n)
        if (poly_eval(p, n) == 0) return true;
    return false;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (poly_is_zero(p)) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        Int c = p[i];
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace g2seq
