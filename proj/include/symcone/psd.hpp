#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcone/families.hpp"
#include "symcone/form.hpp"
#include "symcone/poly1.hpp"

namespace symcone {

enum class PsdResult { PSD, NOT_PSD };

// A sign-invariant splitting of [lo, hi] by the real roots of polys.
struct SignCellDecomposition {
    Rational lo, hi;
    std::vector<UnivariatePoly> polys;
    std::vector<RootInterval> roots;   // roots strictly inside (lo, hi)
    std::vector<Rational> samples;     // one per open cell, left to right
    std::vector<bool> active;          // the cell lies in the quantified set
    std::vector<bool> satisfied;       // one of the closed alternatives holds
};

struct PsdVerdict {
    PsdResult result = PsdResult::PSD;
    // Exact point with a negative value; always present for NOT_PSD.
    std::optional<std::vector<Rational>> witness;
    std::string criterion;
    std::vector<std::string> checks;
    std::optional<SignCellDecomposition> cells;
    // Outcome of an independent route, when one was run.
    std::optional<bool> cross_check_agrees;

    bool psd() const { return result == PsdResult::PSD; }
};

enum class Domain { AllReals, NonnegReals };

PsdVerdict univariate_nonneg(const UnivariatePoly& f, Domain domain);

// Symmetric quartic in four variables.
PsdVerdict psd_s44(const HomogeneousForm& f);
// Symmetric cubic in four variables, on the nonnegative orthant.
PsdVerdict psd_plus_s43(const HomogeneousForm& f);
// Symmetric quintic in three variables, on the nonnegative orthant.
PsdVerdict psd_plus_s35(const HomogeneousForm& f);
// x^3 + a x^2 + b x + c >= 0 for all x >= 0.
bool cubic_nonneg_plus(const Rational& a, const Rational& b, const Rational& c);
// Symmetric sextic in three variables.
PsdVerdict psd_sextic_s36(const HomogeneousForm& f);
PsdVerdict psd_gtu(const Rational& t, const Rational& u);
PsdVerdict psd_fuw(const Rational& u, const Rational& v, const Rational& w);

// Dispatch on shape: (4,4) -> psd_s44, (4,3) -> psd_plus_s43,
// (3,5) -> psd_plus_s35, (3,6) -> psd_sextic_s36.
PsdVerdict psd_check(const HomogeneousForm& f);

std::string to_string(PsdResult r);

SignCellDecomposition sign_cells(const std::vector<UnivariatePoly>& polys, const Rational& lo, const Rational& hi);

}  // namespace symcone
