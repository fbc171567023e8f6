#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symcone/form.hpp"

namespace symcone {

// Sum over the distinct permutations of an exponent pattern.
HomogeneousForm monomial_symmetric(int nvars, std::vector<int> pattern);

// Named symmetric (and cyclic) sums in 3 or 4 variables.
struct SymBasisElement {
    enum class Tag {
        PowerSum,      // S_n = a^n + b^n + c^n
        Cyclic,        // S_{m,n} = a^m b^n + b^m c^n + c^m a^n
        PairSum,       // T_{m,n} = S_{m,n} + S_{n,m}
        TripleSum,     // T_{l,m,n}, l > m > n, all six orderings
        SingleDouble,  // S_{l,m,m}
        DoubleSingle,  // S_{l,l,m}
        Product,       // U_l = (abc)^l
        PowerSum4,     // S^4_d
        PairSum4,      // T^4_{p,q}
        Square4,       // S^4_{p,p}
        TripleSum4,    // T^4_{p,q,q}
        Cube4,         // S^4_{p,p,p}
        Product4,      // U^4 = abcd
    };
    Tag tag;
    std::vector<int> indices;
};

// Throws DomainError on violated index constraints.
HomogeneousForm expand(const SymBasisElement& e);

// Shorthands in three variables.
HomogeneousForm S3v(int n);
HomogeneousForm S3v(int m, int n);
HomogeneousForm T3v(int m, int n);
HomogeneousForm T3v(int l, int m, int n);
HomogeneousForm U3v(int l = 1);
// Shorthands in four variables.
HomogeneousForm S4v(int d);
HomogeneousForm T4v(int p, int q);
HomogeneousForm S4pp(int p);
HomogeneousForm T4pqq(int p, int q);
HomogeneousForm S4ppp(int p);
HomogeneousForm U4v();

enum class Space { H35s, H36s0, H44s, H44s0, H43s };

std::string space_name(Space s);
Space parse_space(const std::string& name);
std::vector<HomogeneousForm> basis_forms(Space s);
std::size_t space_dimension(Space s);

struct BasisCoords {
    Space space;
    std::vector<Rational> coords;
};

HomogeneousForm from_basis(const BasisCoords& bc);
// Throws MembershipError naming a monomial of the residual when f is
// outside the span.
BasisCoords to_basis(const HomogeneousForm& f, Space s);

// Sum of f over the n+1 ways of dropping one of n+1 variables.
HomogeneousForm phi_map(const HomogeneousForm& f);

// Polynomial in (s1, s2) keyed by exponent pairs.
struct SigmaPoly {
    std::map<std::pair<int, int>, Rational> terms;
    Rational operator()(const Rational& s1, const Rational& s2) const;
};

// f = g0 * e3^2 + g1(e1, e2) * e3 + g2(e1, e2) in elementary symmetric
// polynomials e1 = a+b+c, e2 = ab+bc+ca, e3 = abc.
struct SigmaDecomposition {
    Rational g0;
    SigmaPoly g1, g2;
    HomogeneousForm recompose() const;
};

// f symmetric sextic in three variables; throws DomainError otherwise.
SigmaDecomposition sigma_decompose(const HomogeneousForm& f);

}  // namespace symcone
