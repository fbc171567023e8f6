#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcone/form.hpp"
#include "symcone/poly1.hpp"
#include "symcone/symbasis.hpp"

namespace symcone {

// A named family member, e.g. "eA_tu(t=3,u=2)". Parameters are looked up by
// name; missing ones raise DomainError.
struct FamilyId {
    std::string name;
    std::map<std::string, Rational> params;

    Rational param(const std::string& key) const;
    std::string to_string() const;
};

// Accepts "name(k=v,...)" with an optional "family:" prefix; values are
// rational literals.
FamilyId parse_family(const std::string& text);

// All recognised family names.
const std::vector<std::string>& family_names();

// Policy for eE_t with t < 7 (outside the PSD range).
enum class RangePolicy { Warn, Refuse, Silent };
void set_eE_policy(RangePolicy p);

HomogeneousForm build(const FamilyId& id);

// Coordinates in the family's natural basis space, when it has one
// (H35s for the quintics, H44s for g_tu, H36s0 for f_uw).
std::optional<BasisCoords> family_coords(const FamilyId& id);

// ---- scalar helpers -------------------------------------------------------

Rational omega(const Rational& u);

struct Enclosure {
    Rational lo, hi;
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Interval of width <= width containing sqrt(x), x >= 0.
Enclosure sqrt_enclosure(const Rational& x, const Rational& width);

Rational mu_L(const Rational& t);
Rational mu_H(const Rational& t);
Rational mu_A(const Rational& t);
Rational mu_Z(const Rational& t, const Rational& u);
Enclosure mu_R(const Rational& t, const Rational& width);
Enclosure mu_B(const Rational& t, const Rational& width);
// Exact tests for t >= 2 and 0 < u <= 1.
bool at_least_mu_B(const Rational& t, const Rational& u);
bool above_mu_B(const Rational& t, const Rational& u);

struct MuValues {
    Rational muL, muH, muA;
    std::optional<Rational> muZ;
    std::optional<Enclosure> muR, muB;
};
MuValues mu_values(const Rational& t, const std::optional<Rational>& u, const Rational& width = Rational(1, 1000000));

enum class CoeffKind { pG, pF, pA, pB };
CoeffKind parse_coeff_kind(const std::string& s);
// pG: (t, w); pF: (a, b, c, w); pA: (t, u); pB: (t, w).
std::vector<Rational> coefficient_tables(CoeffKind kind, const std::vector<Rational>& params);

std::vector<Rational> pG(const Rational& t, const Rational& w);
std::vector<Rational> pF(const std::vector<Rational>& point, const Rational& w);
std::vector<Rational> pA(const Rational& t, const Rational& u);
std::vector<Rational> pB(const Rational& t, const Rational& w);

Rational V_F(const Rational& t, const Rational& w);
Rational D_F(const Rational& t, const Rational& u);

// delta_1 .. delta_5 at (a, b, c) with parameter w.
Rational delta(int i, const std::vector<Rational>& point, const Rational& w);
Rational xi(const std::vector<Rational>& point, const Rational& w);

// Quantities of the sextic family in the variable t, for a fixed point and w.
struct SexticCellData {
    Rational g0;
    UnivariatePoly g1_line, g2_line;  // g1, g2 at (t+2, 2t+1)
    UnivariatePoly h1, h3, Df, DL;     // h3 with denominators cleared
};
SexticCellData sextic_cell_data(const std::vector<Rational>& point, const Rational& w);
// Same data from an arbitrary symmetric sextic (via its sigma decomposition).
SexticCellData sextic_cell_data(const HomogeneousForm& f);

// (4-t)(1+2t)^3 h((4-t)/(1+2t)) for a cubic h.
UnivariatePoly h3_from_h1(const UnivariatePoly& h1);

// Pieces of the B family: g^B(t, w, x) = c0 x^3 + c1 x^2 + c2 x + c3.
std::vector<Rational> cB(const Rational& t, const Rational& w);
Rational b1B(const Rational& t, const Rational& w);
Rational b2B(const Rational& t, const Rational& w);
Rational b3B(const Rational& t, const Rational& w);
Rational hA(const Rational& t, const Rational& u);
Rational gA(const Rational& t, const Rational& u, const Rational& w);

}  // namespace symcone
