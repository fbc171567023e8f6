#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symcone/poly1.hpp"
#include "symcone/rational.hpp"

namespace symcone {

using Exponent = std::vector<int>;

// Coordinate of a line through projective space: constant + slope * x.
struct LinearEntry {
    Rational constant = 0;
    Rational slope = 0;
    static LinearEntry x() { return {0, 1}; }
    static LinearEntry value(const Rational& c) { return {c, 0}; }
};

// Homogeneous polynomial in nvars variables (a, b, c, d). Terms are kept in
// graded-lex order with a > b > c > d; zero coefficients are never stored.
class HomogeneousForm {
public:
    using TermMap = std::map<Exponent, Rational, std::greater<Exponent>>;

    HomogeneousForm() = default;
    HomogeneousForm(int nvars, int degree);
    static HomogeneousForm variable(int nvars, int index);
    static HomogeneousForm monomial(const Exponent& e, const Rational& c = 1);
    // Constant form of degree 0.
    static HomogeneousForm constant(int nvars, const Rational& c);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Exponent& e) const;
    void set(const Exponent& e, const Rational& c);
    void add(const Exponent& e, const Rational& c);

    Rational evaluate(const std::vector<Rational>& point) const;
    Rational operator()(const std::vector<Rational>& point) const { return evaluate(point); }

    HomogeneousForm partial(int var) const;
    // Mixed partial: orders[i] derivatives in variable i.
    HomogeneousForm derivative(const std::vector<int>& orders) const;
    // Every variable replaced by its square.
    HomogeneousForm even_substitution() const;
    // Variable i of the result is variable perm[i] of this form.
    HomogeneousForm permuted(const std::vector<int>& perm) const;
    // Substitute arbitrary forms for the variables (all of one degree).
    HomogeneousForm substitute(const std::vector<HomogeneousForm>& images) const;
    bool is_symmetric() const;

    UnivariatePoly restrict_line(const std::vector<LinearEntry>& pattern) const;

    // Coefficients listed along the given monomials.
    std::vector<Rational> coefficients(const std::vector<Exponent>& basis) const;

    // "coeff * a^i b^j c^k" terms joined by " + ".
    std::string to_text() const;

    HomogeneousForm operator-() const;
    HomogeneousForm& operator+=(const HomogeneousForm& o);
    HomogeneousForm& operator-=(const HomogeneousForm& o);
    HomogeneousForm& operator*=(const Rational& s);
    friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
    friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
    friend HomogeneousForm operator*(HomogeneousForm a, const Rational& s) { return a *= s; }
    friend HomogeneousForm operator*(const Rational& s, HomogeneousForm a) { return a *= s; }
    friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
    bool operator==(const HomogeneousForm& o) const;

private:
    void check_compatible(const HomogeneousForm& o) const;
    int nvars_ = 0, degree_ = 0;
    TermMap terms_;
};

HomogeneousForm pow(const HomogeneousForm& f, unsigned e);

// All exponent vectors of the given degree, in graded-lex order (a > b > ...).
std::vector<Exponent> monomials(int nvars, int degree);

// Variable names used in text output and parsing.
char variable_name(int index);

}  // namespace symcone
