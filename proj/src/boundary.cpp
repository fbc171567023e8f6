#include "symcone/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symcone/certify.hpp"
#include "symcone/matrix.hpp"

namespace symcone {

namespace {

std::vector<Rational> section_coords(const FamilyId& id) {
    auto c = family_coords(id);
    if (!c || c->space != Space::H35s) throw DomainError(id.name + " is not a symmetric quintic family");
    return c->coords;
}

bool proportional_rays(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return normalize_ray(a) == normalize_ray(b);
}

// positive on nonzero forms that are nonnegative on the orthant, unless the
// form vanishes at all of these points
Rational chart_weight(const HomogeneousForm& f) {
    static const std::vector<std::vector<Rational>> pts = {
        {1, 1, 1}, {1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {3, 1, 1}, {1, 2, 3}, {5, 2, 0}};
    Rational s = 0;
    for (const auto& p : pts) s += f.evaluate(p);
    return s;
}

}  // namespace

DiscId parse_disc_id(const std::string& s) {
    if (s == "P1") return DiscId::P1;
    if (s == "P2") return DiscId::P2;
    if (s == "P3") return DiscId::P3;
    if (s == "C0") return DiscId::C0;
    if (s == "Cb") return DiscId::Cb;
    throw DomainError("unknown discriminant: " + s);
}

std::string to_string(DiscId d) {
    switch (d) {
        case DiscId::P1: return "P1";
        case DiscId::P2: return "P2";
        case DiscId::P3: return "P3";
        case DiscId::C0: return "C0";
        case DiscId::Cb: return "Cb";
    }
    return "?";
}

const std::vector<DiscId>& all_disc_ids() {
    static const std::vector<DiscId> ids = {DiscId::P1, DiscId::P2, DiscId::P3, DiscId::C0, DiscId::Cb};
    return ids;
}

std::vector<Rational> cb_quintic(const std::vector<Rational>& p) {
    if (p.size() != 5) throw DomainError("expected 5 coordinates in H35s");
    return {p[0],
            2 * p[1],
            2 * p[2] + p[3],
            -2 * (p[0] + 2 * p[1] + p[2] + p[3] - p[4]),
            -p[0] - 2 * p[2] + p[3] + p[4],
            2 * (p[0] + p[1] + p[2])};
}

Rational formal_discriminant(const std::vector<Rational>& c) {
    if (c.size() <= 2) return 1;
    if (c.front() != 0) return discriminant_n(c);
    std::vector<Rational> rest(c.begin() + 1, c.end());
    return rest.front() * rest.front() * formal_discriminant(rest);
}

Rational cb_numerator(const std::vector<Rational>& p) { return formal_discriminant(cb_quintic(p)); }

bool cb_division_exact(const std::vector<Rational>& p) {
    auto q = p;
    q[4] = 0;
    if (cb_numerator(q) != 0) return false;
    if (p[4] == 0) return true;
    auto ip = primitive(p);
    Rational quotient = cb_numerator(ip) / (16 * ip[4]);
    return quotient.get_den() == 1;
}

Rational cb_quotient_polynomial(const std::vector<Rational>& p) {
    if (p.size() != 5) throw DomainError("expected 5 coordinates in H35s");
    if (p[4] != 0) return cb_numerator(p) / (16 * p[4]);
    // Disc5 has degree 8 in the coefficients, so the quotient has degree <= 7
    // in p4; Lagrange at 0 from p4 = 1..8
    const int n = 8;
    Rational out = 0;
    for (int k = 1; k <= n; ++k) {
        auto q = p;
        q[4] = k;
        Rational value = cb_numerator(q) / (16 * q[4]);
        Rational weight = 1;
        for (int j = 1; j <= n; ++j)
            if (j != k) weight *= Rational(-j) / Rational(k - j);
        out += weight * value;
    }
    return out;
}

Rational eval_discriminant(DiscId id, const std::vector<Rational>& p) {
    if (p.size() != 5) throw DomainError("expected 5 coordinates in H35s");
    switch (id) {
        case DiscId::P1: return p[0];
        case DiscId::P2: return p[0] + p[1] + p[2];
        case DiscId::P3: return p[4];
        case DiscId::C0: return 5 * p[0] * p[0] + 2 * p[0] * p[1] + p[1] * p[1] - 4 * p[0] * p[2];
        case DiscId::Cb:
            if (p[4] == 0) throw DomainError("Cb undefined at p4 = 0");
            return cb_numerator(p) / (16 * p[4]);
    }
    return 0;
}

Rational eval_discriminant(DiscId id, const BasisCoords& coords) {
    if (coords.space != Space::H35s) throw DomainError("discriminants live on H35s");
    return eval_discriminant(id, coords.coords);
}

std::vector<Rational> normalize_ray(std::vector<Rational> v) {
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return v;
    Rational s = abs(*it);
    for (auto& x : v) x /= s;
    return v;
}

std::optional<bool> extremality_status(const FamilyId& id) {
    std::string spec;
    ParamMap params;
    const std::string& n = id.name;
    auto t = [&] { return id.param("t"); };
    if (n == "eA_tu" || n == "eA_t0") {
        if (t() == 1) {
            spec = "thm4.4-3";  // eA_{1,0} is a multiple of eD_1
            if (n == "eA_tu" && id.param("u") != 0) return std::nullopt;
        } else {
            spec = "thm4.7-2";
            params = {{"t", t()}, {"u", n == "eA_t0" ? Rational(0) : id.param("u")}};
        }
    } else if (n == "eB_tu") {
        if (id.param("u") == 1) {
            spec = "thm4.10-3";
            params = {{"t", t()}};
        } else {
            spec = "thm4.10-2";
            params = {{"t", t()}, {"u", id.param("u")}};
        }
    } else if (n == "eC_t") {
        if (t() == 0) spec = "thm4.3-3";
        else if (t() == 1) spec = "thm4.3-4";
        else { spec = "thm4.3-2"; params = {{"t", t()}}; }
    } else if (n == "eD_t") {
        if (t() == 1) spec = "thm4.4-3";
        else { spec = "thm4.4-2"; params = {{"t", t()}}; }
    } else if (n == "eD_inf") {
        spec = "thm4.4-4";
    } else if (n == "eE_t") {
        spec = "thm4.5-2";
        params = {{"t", t()}};
    } else if (n == "eE_inf") {
        spec = "thm4.5-4";
    } else if (n == "s3_quintic") {
        spec = "thm4.6-2";
    } else {
        return std::nullopt;
    }
    if (!hypothesis_violations(spec, params).empty()) return std::nullopt;
    auto c = certify_extremal(id, catalog_spec(spec, params));
    return c.certified();
}

// ---- cross-sections ------------------------------------------------------------

namespace {

SectionPoint section_point(const FamilyId& id, const Rational& t) {
    SectionPoint p;
    p.member = id;
    HomogeneousForm f = build(id);
    p.coords = normalize_ray(section_coords(id));
    p.on_section = f.evaluate({t, 1, 1}) == 0;
    p.psd = psd_plus_s35(f).psd();
    return p;
}

FamilyId member_A(const Rational& t, const Rational& u) {
    if (u == 0) return {"eA_t0", {{"t", t}}};
    return {"eA_tu", {{"t", t}, {"u", u}}};
}

void attach_chart(CrossSection& cs) {
    std::vector<SectionPoint*> all;
    for (auto& v : cs.vertices) all.push_back(&v);
    for (auto& a : cs.arcs) {
        if (!a.samples.empty()) all.push_back(&a.samples.front());
        if (a.samples.size() > 1) all.push_back(&a.samples.back());
    }
    // three independent rays, each scaled to unit weight
    std::vector<std::vector<Rational>> basis;
    for (auto* p : all) {
        if (basis.size() == 3) break;
        auto trial = basis;
        trial.push_back(p->coords);
        if (rank(RationalMatrix::from_rows(trial)) == trial.size()) {
            Rational w = chart_weight(from_basis({Space::H35s, p->coords}));
            if (w <= 0) continue;
            auto b = p->coords;
            for (auto& x : b) x /= w;
            basis.push_back(b);
        }
    }
    if (basis.size() < 3) return;
    cs.chart_basis = basis;
    RationalMatrix m = RationalMatrix::from_rows(basis).transpose();
    auto place = [&](SectionPoint& p) {
        Rational w = chart_weight(from_basis({Space::H35s, p.coords}));
        if (w <= 0) return;
        auto sol = solve(m, p.coords);
        if (!sol) return;
        for (auto& x : *sol) x /= w;
        p.chart = *sol;
    };
    for (auto& v : cs.vertices) place(v);
    for (auto& a : cs.arcs)
        for (auto& s : a.samples) place(s);
}

// Boundary pieces in angular order around the centroid of the chart; two
// neighbouring pieces that do not share an endpoint are joined by a segment.
void attach_segments(CrossSection& cs) {
    auto xy = [](const SectionPoint& p) {
        return std::make_pair(p.chart->at(0).get_d(), p.chart->at(1).get_d());
    };
    std::vector<const SectionPoint*> charted;
    for (auto& v : cs.vertices)
        if (v.chart) charted.push_back(&v);
    for (auto& a : cs.arcs)
        for (auto& s : a.samples)
            if (s.chart) charted.push_back(&s);
    if (charted.size() < 3) return;
    double cx = 0, cy = 0;
    for (auto* p : charted) {
        auto [x, y] = xy(*p);
        cx += x;
        cy += y;
    }
    cx /= double(charted.size());
    cy /= double(charted.size());
    auto angle = [&](const SectionPoint& p) {
        auto [x, y] = xy(p);
        return std::atan2(y - cy, x - cx);
    };
    // each point is tagged with its piece; walk the cyclic order
    struct Tagged {
        const SectionPoint* p;
        std::string piece;
        double a;
    };
    std::vector<Tagged> tagged;
    for (auto& v : cs.vertices)
        if (v.chart) tagged.push_back({&v, v.member.to_string(), angle(v)});
    for (auto& arc : cs.arcs)
        for (auto& s : arc.samples)
            if (s.chart) tagged.push_back({&s, arc.family + " arc", angle(s)});
    std::sort(tagged.begin(), tagged.end(), [](const Tagged& a, const Tagged& b) { return a.a < b.a; });
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        const auto& a = tagged[i];
        const auto& b = tagged[(i + 1) % tagged.size()];
        if (a.piece == b.piece || proportional_rays(a.p->coords, b.p->coords)) continue;
        cs.segments.push_back({a.p->member.to_string(), b.p->member.to_string(), a.p->coords, b.p->coords});
    }
}

}  // namespace

CrossSection cross_section(const Rational& t, int samples_per_arc) {
    if (t < 0) throw DomainError("cross-section needs t >= 0");
    if (samples_per_arc < 2) samples_per_arc = 2;
    CrossSection cs;
    cs.t = t;
    const Rational two = 2, five_halves(5, 2), seven = 7;
    if (t <= two) cs.regime = 1, cs.regime_text = "0 <= t <= 2";
    else if (t <= five_halves) cs.regime = 2, cs.regime_text = "2 < t <= 5/2";
    else if (t < seven) cs.regime = 3, cs.regime_text = "5/2 < t < 7";
    else cs.regime = 4, cs.regime_text = "t >= 7";

    if (cs.regime <= 3) {
        Rational top = cs.regime == 3 ? mu_H(t) : mu_L(t);
        SectionArc arc{"eA", 0, top, std::nullopt, {}};
        int n = top == 0 ? 1 : samples_per_arc;
        for (int k = 0; k < n; ++k) {
            Rational u = n == 1 ? Rational(0) : Rational(top * k / (n - 1));
            arc.samples.push_back(section_point(member_A(t, u), t));
        }
        cs.arcs.push_back(arc);
    }
    if (cs.regime >= 2) {
        Enclosure mb = mu_B(t, Rational(1, 1000000));
        SectionArc arc{"eB", mb.hi, 1, mb, {}};
        for (int k = 0; k < samples_per_arc; ++k) {
            Rational u = mb.hi + (1 - mb.hi) * k / (samples_per_arc - 1);
            if (!above_mu_B(t, u)) continue;  // keep only exactly verified samples
            arc.samples.push_back(section_point({"eB_tu", {{"t", t}, {"u", u}}}, t));
        }
        arc.u_lo = arc.samples.empty() ? Rational(1) : arc.samples.front().member.param("u");
        cs.arcs.push_back(arc);
    }
    if (cs.regime == 1) cs.vertices.push_back(section_point({"eC_t", {{"t", t}}}, t));
    cs.vertices.push_back(section_point({"eD_t", {{"t", t}}}, t));
    if (cs.regime == 4) cs.vertices.push_back(section_point({"eE_t", {{"t", t}}}, t));

    attach_chart(cs);
    attach_segments(cs);
    return cs;
}

// ---- atlas ---------------------------------------------------------------------------

bool AtlasRow::some_disc_vanishes() const {
    return std::any_of(disc.begin(), disc.end(), [](const auto& d) { return d && *d == 0; });
}

AtlasGrid AtlasGrid::standard() {
    AtlasGrid g;
    for (auto [n, d] : std::vector<std::pair<long, long>>{
             {0, 1}, {1, 2}, {1, 1}, {3, 2}, {2, 1}, {9, 4}, {3, 1}, {5, 1}, {7, 1}, {10, 1}})
        g.t_values.push_back(make_rational(n, d));
    return g;
}

AtlasRow atlas_row(const FamilyId& id) {
    AtlasRow r;
    r.family = id.name;
    if (id.params.count("t")) r.t = id.param("t");
    if (id.params.count("u")) r.u = id.param("u");
    if (id.name == "eA_t0") r.u = Rational(0);
    r.coords = normalize_ray(section_coords(id));
    for (DiscId d : all_disc_ids()) {
        if (d == DiscId::Cb && r.coords[4] == 0) r.disc.push_back(std::nullopt);
        else r.disc.push_back(eval_discriminant(d, r.coords));
    }
    r.psd = psd_plus_s35(build(id)).result;
    r.extremal_certified = extremality_status(id);
    return r;
}

std::vector<AtlasRow> extremal_atlas(const AtlasGrid& grid) {
    std::vector<AtlasRow> rows;
    for (const auto& t : grid.t_values) {
        auto cs = cross_section(t, grid.u_samples);
        for (const auto& a : cs.arcs)
            for (const auto& s : a.samples) rows.push_back(atlas_row(s.member));
        for (const auto& v : cs.vertices) rows.push_back(atlas_row(v.member));
    }
    for (const char* n : {"eD_inf", "eE_inf", "s3_quintic"}) rows.push_back(atlas_row({n, {}}));
    return rows;
}

std::string atlas_csv(const std::vector<AtlasRow>& rows) {
    std::ostringstream out;
    out << "family,t,u,p0,p1,p2,p3,p4,discP1,discP2,discP3,discC0,discCb,psd,extremal_certified\n";
    for (const auto& r : rows) {
        out << r.family << ',' << (r.t ? to_string(*r.t) : "") << ',' << (r.u ? to_string(*r.u) : "");
        for (const auto& c : r.coords) out << ',' << to_string(c);
        for (const auto& d : r.disc) out << ',' << (d ? to_string(*d) : "undefined");
        out << ',' << to_string(r.psd) << ','
            << (r.extremal_certified ? (*r.extremal_certified ? "true" : "false") : "n/a") << '\n';
    }
    return out.str();
}

}  // namespace symcone
