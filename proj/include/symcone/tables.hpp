#pragma once

#include <array>
#include <vector>

namespace symcone::tables {

// One summand c(w) * m_pattern: pattern is the descending exponent triple of
// a monomial symmetric sum in (a, b, c), wcoeffs an integer polynomial in
// the parameter (ascending).
struct TableTerm {
    int index;
    std::array<int, 3> pattern;
    std::vector<long long> wcoeffs;
};

// p_0 .. p_5 of the sextic family.
extern const std::vector<TableTerm> kSexticCoeffTerms;
// The divisor D_L of the discriminant D_f; index k is the coefficient of t^k.
extern const std::vector<TableTerm> kDLTerms;

}  // namespace symcone::tables
