#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcone/families.hpp"
#include "symcone/psd.hpp"

namespace symcone {

enum class DiscId { P1, P2, P3, C0, Cb };
DiscId parse_disc_id(const std::string& s);
std::string to_string(DiscId d);
const std::vector<DiscId>& all_disc_ids();

// c5..c0 built from (p0..p4); the quintic whose discriminant gives Cb.
std::vector<Rational> cb_quintic(const std::vector<Rational>& p);
// Disc_n with formal degree n: a zero leading coefficient drops the degree
// and multiplies by the square of the next one.
Rational formal_discriminant(const std::vector<Rational>& leading_first);
// Disc5 before the division by 16 p4.
Rational cb_numerator(const std::vector<Rational>& p);
// True when the numerator vanishes on p4 = 0 along this point and, for
// integer coordinates, Disc5 / (16 p4) is an integer.
bool cb_division_exact(const std::vector<Rational>& p);
// Value of the polynomial Disc5 / (16 p4) itself, also on p4 = 0 (there the
// quotient polynomial is read off from 8 values along p4 = 1..8). Only the
// identity checks use this; eval_discriminant keeps Cb undefined at p4 = 0.
Rational cb_quotient_polynomial(const std::vector<Rational>& p);

// p is a coordinate vector in H35s; Cb with p4 = 0 raises DomainError.
Rational eval_discriminant(DiscId id, const std::vector<Rational>& p);
Rational eval_discriminant(DiscId id, const BasisCoords& coords);

// Scales by 1/|first nonzero entry| (never flips the sign of the ray).
std::vector<Rational> normalize_ray(std::vector<Rational> v);

// Whether the characterisation systems certify this family member as extremal
// in the symmetric positive cone of quintics; empty when no system applies.
std::optional<bool> extremality_status(const FamilyId& id);

struct SectionPoint {
    FamilyId member;
    std::vector<Rational> coords;  // normalised H35s coordinates
    bool on_section = false;       // f(t,1,1) = 0
    bool psd = false;
    std::optional<std::vector<Rational>> chart;  // barycentric w.r.t. chart_basis
};

struct SectionArc {
    std::string family;
    Rational u_lo, u_hi;                  // sampled parameter range
    std::optional<Enclosure> lower_end;   // muB(t) when it is the true endpoint
    std::vector<SectionPoint> samples;
};

struct SectionSegment {
    std::string from, to;
    std::vector<Rational> from_coords, to_coords;
};

struct CrossSection {
    Rational t;
    int regime = 0;  // 1: t <= 2, 2: 2 < t <= 5/2, 3: 5/2 < t < 7, 4: t >= 7
    std::string regime_text;
    std::vector<SectionArc> arcs;
    std::vector<SectionPoint> vertices;
    std::vector<SectionSegment> segments;
    std::vector<std::vector<Rational>> chart_basis;
};

CrossSection cross_section(const Rational& t, int samples_per_arc);

struct AtlasRow {
    std::string family;
    std::optional<Rational> t, u;
    std::vector<Rational> coords;
    std::vector<std::optional<Rational>> disc;  // P1, P2, P3, C0, Cb (Cb empty when p4 = 0)
    PsdResult psd = PsdResult::PSD;
    std::optional<bool> extremal_certified;
    bool some_disc_vanishes() const;
};

struct AtlasGrid {
    std::vector<Rational> t_values;
    int u_samples = 5;
    static AtlasGrid standard();
};

std::vector<AtlasRow> extremal_atlas(const AtlasGrid& grid);
AtlasRow atlas_row(const FamilyId& id);

std::string atlas_csv(const std::vector<AtlasRow>& rows);

}  // namespace symcone
