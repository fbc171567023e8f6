#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

// Dense univariate polynomial, coefficients in ascending degree. The zero
// polynomial has an empty coefficient list.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> ascending);
    static UnivariatePoly constant(const Rational& c);
    static UnivariatePoly x();
    // c0 + c1 x
    static UnivariatePoly linear(const Rational& c0, const Rational& c1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational lead() const;

    Rational operator()(const Rational& x) const;
    UnivariatePoly derivative() const;
    UnivariatePoly monic() const;
    // p(q(x))
    UnivariatePoly compose(const UnivariatePoly& q) const;

    UnivariatePoly operator-() const;
    UnivariatePoly& operator+=(const UnivariatePoly& o);
    UnivariatePoly& operator-=(const UnivariatePoly& o);
    UnivariatePoly& operator*=(const UnivariatePoly& o);
    UnivariatePoly& operator*=(const Rational& s);
    friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
    friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
    friend UnivariatePoly operator*(UnivariatePoly a, const UnivariatePoly& b) { return a *= b; }
    friend UnivariatePoly operator*(UnivariatePoly a, const Rational& s) { return a *= s; }
    friend UnivariatePoly operator*(const Rational& s, UnivariatePoly a) { return a *= s; }
    bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UnivariatePoly pow(const UnivariatePoly& p, unsigned e);

// Quotient and remainder; throws DomainError on division by zero.
std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b);

// Monic gcd (zero if both inputs are zero).
UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

// p / gcd(p, p'): same real roots, all simple.
UnivariatePoly squarefree_part(const UnivariatePoly& p);

// Sylvester determinant, signed so that Res(x - a, x - b) = b - a. Throws
// DomainError on a zero input.
Rational resultant(const UnivariatePoly& f, const UnivariatePoly& g);

// Disc_n of c_n x^n + ... + c_0, coefficients given leading first:
// (-1)^{n(n-1)/2} Res(f, f') / c_n.
Rational discriminant_n(const std::vector<Rational>& leading_first);
Rational discriminant(const UnivariatePoly& f);

// Isolating interval of one real root: exact when lo == hi, otherwise the
// root lies in the open interval (lo, hi) whose endpoints are not roots.
struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
};

// Distinct real roots in increasing order, with pairwise disjoint intervals.
std::vector<RootInterval> isolate_real_roots(const UnivariatePoly& p);

// Shrinks a non-exact isolating interval of a root of p until hi - lo <= width.
RootInterval refine_root(const UnivariatePoly& p, RootInterval iv, const Rational& width);

// Number of distinct real roots in the half-open interval (a, b].
int count_roots(const UnivariatePoly& p, const Rational& a, const Rational& b);

// One rational point inside every open interval cut out by the real roots
// of p (including the two unbounded ones). A constant polynomial yields {0}.
std::vector<Rational> cell_samples(const std::vector<RootInterval>& roots);

}  // namespace symcone
