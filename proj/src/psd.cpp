#include "symcone/psd.hpp"

#include <stdexcept>

namespace symcone {

namespace {

using LE = LinearEntry;

UnivariatePoly line(const HomogeneousForm& f, std::vector<LE> pattern) { return f.restrict_line(pattern); }

std::vector<Rational> plug(const std::vector<LE>& pattern, const Rational& x) {
    std::vector<Rational> p;
    for (const auto& e : pattern) p.push_back(e.constant + e.slope * x);
    return p;
}

void require_shape(const HomogeneousForm& f, int nvars, int degree, const char* what) {
    if (f.nvars() != nvars || f.degree() != degree)
        throw DomainError(std::string(what) + " expects " + std::to_string(nvars) + " variables and degree " +
                          std::to_string(degree));
    if (!f.is_symmetric()) throw DomainError(std::string(what) + " expects a symmetric form");
}

PsdVerdict negative(std::vector<Rational> witness, std::string criterion, std::vector<std::string> checks) {
    PsdVerdict v;
    v.result = PsdResult::NOT_PSD;
    v.witness = std::move(witness);
    v.criterion = std::move(criterion);
    v.checks = std::move(checks);
    return v;
}

// Nonnegativity of f along each line; returns a refutation at the first
// failing line.
std::optional<PsdVerdict> check_lines(const HomogeneousForm& f, const std::vector<std::vector<LE>>& patterns,
                                      Domain dom, const std::string& criterion, std::vector<std::string>& checks) {
    for (const auto& pat : patterns) {
        UnivariatePoly p = line(f, pat);
        PsdVerdict r = univariate_nonneg(p, dom);
        std::string label = "f(";
        for (std::size_t i = 0; i < pat.size(); ++i) {
            if (i) label += ",";
            label += pat[i].slope != 0 ? "x" : to_string(pat[i].constant);
        }
        label += dom == Domain::AllReals ? ") >= 0 on R" : ") >= 0 on x >= 0";
        checks.push_back(label + (r.psd() ? ": yes" : ": no"));
        if (!r.psd()) return negative(plug(pat, (*r.witness)[0]), criterion, checks);
    }
    return std::nullopt;
}

std::vector<Rational> refine_all(const UnivariatePoly& q, std::vector<RootInterval>& roots) {
    std::vector<Rational> mids;
    for (auto& iv : roots) {
        if (!iv.exact()) iv = refine_root(q, iv, (iv.hi - iv.lo) / 2);
        mids.push_back(iv.exact() ? iv.lo : (iv.lo + iv.hi) / 2);
    }
    return mids;
}

// Rational point whose elementary symmetric values approximate (s1, s2, s3)
// closely enough that f is negative there.
std::optional<std::vector<Rational>> point_from_sigma(const HomogeneousForm& f, const Rational& s1,
                                                      const Rational& s2, const Rational& s3) {
    UnivariatePoly cubic({-s3, s2, -s1, 1});
    UnivariatePoly q = squarefree_part(cubic);
    auto roots = isolate_real_roots(q);
    if (roots.size() != 3) return std::nullopt;
    for (int it = 0; it < 200; ++it) {
        auto m = refine_all(q, roots);
        if (f(m) < 0) return m;
    }
    return std::nullopt;
}

std::optional<std::vector<Rational>> grid_search(const HomogeneousForm& f) {
    for (int i = -32; i <= 32; ++i)
        for (int j = -32; j <= 32; ++j) {
            std::vector<Rational> p{Rational(i, 8), Rational(j, 8), 1};
            if (f(p) < 0) return p;
        }
    return std::nullopt;
}

// Shared quantified check over [-2, 1]. activeness is decided by `gate`,
// the alternatives by h1 >= 0 or h3 <= 0.
PsdVerdict cell_check(const HomogeneousForm& f, const SexticCellData& d, const UnivariatePoly& gate,
                      std::vector<UnivariatePoly> extra_cuts, const std::string& criterion,
                      std::vector<std::string> checks) {
    std::vector<UnivariatePoly> polys{gate, d.h1, d.h3, UnivariatePoly::linear(1, 2)};
    for (auto& p : extra_cuts) polys.push_back(p);
    SignCellDecomposition cells = sign_cells(polys, Rational(-2), Rational(1));
    std::vector<Rational> pts = cells.samples;
    pts.push_back(cells.lo);
    pts.push_back(cells.hi);
    std::optional<Rational> bad;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Rational& s = pts[i];
        bool active = gate(s) > 0;
        bool ok = d.h1(s) >= 0 || d.h3(s) <= 0;
        if (i < cells.samples.size()) {
            cells.active.push_back(active);
            cells.satisfied.push_back(ok);
        }
        if (active && !ok && !bad) bad = s;
    }
    checks.push_back("cells on [-2,1]: " + std::to_string(cells.samples.size()));
    if (!bad) {
        PsdVerdict v;
        v.criterion = criterion;
        v.checks = std::move(checks);
        v.cells = std::move(cells);
        return v;
    }
    const Rational& t = *bad;
    checks.push_back("condition fails at t = " + to_string(t));
    Rational s3 = -d.g1_line(t) / (2 * d.g0);
    auto w = point_from_sigma(f, t + 2, 2 * t + 1, s3);
    if (!w) w = grid_search(f);
    if (!w) throw std::logic_error("quantified condition failed but no negative point was found");
    PsdVerdict v = negative(*w, criterion, std::move(checks));
    v.cells = std::move(cells);
    return v;
}

}  // namespace

std::string to_string(PsdResult r) { return r == PsdResult::PSD ? "PSD" : "NOT_PSD"; }

namespace {

Rational floor_q(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

// Simplest rational in the open interval (lo, hi); missing ends are infinite.
Rational simplest_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (!lo && !hi) return 0;
    if (!lo) return *hi > 0 ? Rational(0) : Rational(floor_q(*hi) - (floor_q(*hi) == *hi ? 1 : 0));
    if (!hi) return *lo < 0 ? Rational(0) : floor_q(*lo) + 1;
    if (*lo < 0 && *hi > 0) return 0;
    if (*hi <= 0) return -simplest_between(-*hi, -*lo);
    Rational n = floor_q(*lo) + 1;
    if (n < *hi) return n;
    Rational fl = floor_q(*lo);
    std::optional<Rational> top;
    if (*lo != fl) top = 1 / (*lo - fl);
    return fl + 1 / simplest_between(1 / (*hi - fl), top);
}

}  // namespace

PsdVerdict univariate_nonneg(const UnivariatePoly& f, Domain domain) {
    PsdVerdict v;
    v.criterion = domain == Domain::AllReals ? "univariate on R" : "univariate on x >= 0";
    if (f.is_zero()) return v;
    UnivariatePoly q = squarefree_part(f);
    auto roots = q.degree() > 0 ? isolate_real_roots(q) : std::vector<RootInterval>{};
    for (auto& iv : roots)
        if (!iv.exact() && iv.hi - iv.lo > Rational(1, 2)) iv = refine_root(q, iv, Rational(1, 2));
    if (domain == Domain::NonnegReals)
        for (auto& iv : roots)
            while (iv.lo < 0 && 0 < iv.hi) {
                if (q(Rational(0)) == 0) iv = {0, 0};
                else iv = refine_root(q, iv, (iv.hi - iv.lo) / 2);
            }
    // cell i lies between roots[i-1] and roots[i]
    for (std::size_t i = 0; i <= roots.size(); ++i) {
        std::optional<Rational> lo, hi;
        if (i > 0) lo = roots[i - 1].hi;
        if (i < roots.size()) hi = roots[i].lo;
        if (domain == Domain::NonnegReals) {
            if (hi && *hi <= 0) continue;
            if (!lo || *lo < 0) lo = Rational(0);
        }
        if (lo && hi && *lo > *hi) continue;
        Rational s = lo && hi && *lo == *hi ? *lo : simplest_between(lo, hi);
        if (q(s) == 0) continue;
        if (f(s) < 0) {
            v.result = PsdResult::NOT_PSD;
            v.witness = std::vector<Rational>{s};
            return v;
        }
    }
    if (domain == Domain::NonnegReals && f(Rational(0)) < 0) {
        v.result = PsdResult::NOT_PSD;
        v.witness = std::vector<Rational>{0};
    }
    return v;
}

SignCellDecomposition sign_cells(const std::vector<UnivariatePoly>& polys, const Rational& lo, const Rational& hi) {
    SignCellDecomposition out;
    out.lo = lo;
    out.hi = hi;
    out.polys = polys;
    UnivariatePoly prod = UnivariatePoly::constant(1);
    for (const auto& p : polys)
        if (p.degree() > 0) prod *= p;
    std::vector<RootInterval> inside;
    UnivariatePoly q = squarefree_part(prod);
    if (q.degree() > 0) {
        for (auto iv : isolate_real_roots(q)) {
            if (iv.exact()) {
                if (iv.lo > lo && iv.lo < hi) inside.push_back(iv);
                continue;
            }
            if (iv.hi <= lo || iv.lo >= hi) continue;
            if (q(lo) == 0 && iv.lo < lo && lo < iv.hi) continue;
            if (q(hi) == 0 && iv.lo < hi && hi < iv.hi) continue;
            while (!iv.exact() && ((iv.lo <= lo && lo < iv.hi) || (iv.lo < hi && hi <= iv.hi)))
                iv = refine_root(q, iv, (iv.hi - iv.lo) / 2);
            if (iv.lo > lo && iv.hi < hi) inside.push_back(iv);
        }
    }
    for (;;) {
        std::vector<Rational> samples;
        Rational left = lo;
        bool good = true;
        for (const auto& iv : inside) {
            samples.push_back((left + iv.lo) / 2);
            left = iv.hi;
        }
        samples.push_back((left + hi) / 2);
        Rational prev = lo;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const Rational& s = samples[i];
            Rational next = i < inside.size() ? inside[i].lo : hi;
            if (!(s > prev && s < next) || q(s) == 0) good = false;
            if (i < inside.size()) prev = inside[i].hi;
        }
        if (good) {
            out.samples = samples;
            break;
        }
        for (auto& iv : inside)
            if (!iv.exact()) iv = refine_root(q, iv, (iv.hi - iv.lo) / 2);
    }
    out.roots = inside;
    return out;
}

PsdVerdict psd_s44(const HomogeneousForm& f) {
    require_shape(f, 4, 4, "psd_s44");
    std::vector<std::string> checks;
    LE x = LE::x(), one = LE::value(1);
    if (auto r = check_lines(f, {{x, x, one, one}, {x, one, one, one}}, Domain::AllReals, "four-variable quartic line test", checks))
        return *r;
    PsdVerdict v;
    v.criterion = "four-variable quartic line test";
    v.checks = checks;
    return v;
}

PsdVerdict psd_plus_s43(const HomogeneousForm& f) {
    require_shape(f, 4, 3, "psd_plus_s43");
    std::vector<std::string> checks;
    LE x = LE::x(), one = LE::value(1), zero = LE::value(0);
    const std::string crit = "four-variable cubic orthant line test";
    std::vector<std::vector<Rational>> vertices = {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}};
    bool vertex_ok = true;
    for (const auto& p : vertices) vertex_ok = vertex_ok && f(p) >= 0;
    auto r = check_lines(f, {{zero, zero, x, one}, {zero, x, one, one}, {x, x, one, one}, {x, one, one, one}},
                         Domain::NonnegReals, crit, checks);
    PsdVerdict v;
    if (r) v = *r;
    else {
        v.criterion = crit;
        v.checks = checks;
    }
    v.checks.push_back(std::string("vertex test: ") + (vertex_ok ? "yes" : "no"));
    v.cross_check_agrees = vertex_ok == v.psd();
    return v;
}

PsdVerdict psd_plus_s35(const HomogeneousForm& f) {
    require_shape(f, 3, 5, "psd_plus_s35");
    std::vector<std::string> checks;
    LE x = LE::x(), one = LE::value(1), zero = LE::value(0);
    const std::string crit = "three-variable quintic orthant line test";
    if (auto r = check_lines(f, {{x, one, one}, {zero, x, one}}, Domain::NonnegReals, crit, checks)) return *r;
    PsdVerdict v;
    v.criterion = crit;
    v.checks = checks;
    return v;
}

bool cubic_nonneg_plus(const Rational& a, const Rational& b, const Rational& c) {
    if (a >= 0 && b >= 0 && c >= 0) return true;
    if (c == 0) return a * a - 4 * b <= 0;
    if (c > 0) return discriminant_n({1, a, b, c}) <= 0;
    return false;
}

PsdVerdict psd_sextic_s36(const HomogeneousForm& f) {
    require_shape(f, 3, 6, "psd_sextic_s36");
    const std::string crit = "symmetric sextic sigma criterion";
    std::vector<std::string> checks;
    std::vector<Rational> e3{0, 0, 1};
    checks.push_back("f(0,0,1) = " + to_string(f(e3)));
    if (f(e3) < 0) return negative(e3, crit, checks);
    std::vector<Rational> diag{1, 1, 1};
    checks.push_back("f(1,1,1) = " + to_string(f(diag)));
    if (f(diag) < 0) return negative(diag, crit, checks);
    LE x = LE::x(), one = LE::value(1);
    if (auto r = check_lines(f, {{x, one, one}}, Domain::AllReals, crit, checks)) return *r;
    SexticCellData d = sextic_cell_data(f);
    checks.push_back("g0 = " + to_string(d.g0));
    if (d.g0 <= 0) {
        PsdVerdict v;
        v.criterion = crit;
        v.checks = checks;
        return v;
    }
    return cell_check(f, d, d.Df, {}, crit, checks);
}

PsdVerdict psd_gtu(const Rational& t, const Rational& u) {
    if (u == 0 || u == 1) throw DomainError("psd_gtu needs u not in {0, 1}");
    Rational vf = V_F(t, omega(u));
    PsdVerdict lines = psd_s44(build(FamilyId{"g_tu", {{"t", t}, {"u", u}}}));
    PsdVerdict v;
    v.criterion = "sign of V_F(t, omega(u))";
    v.checks.push_back("V_F = " + to_string(vf));
    v.result = vf >= 0 ? PsdResult::PSD : PsdResult::NOT_PSD;
    v.cross_check_agrees = lines.result == v.result;
    if (!v.psd()) {
        if (!lines.witness) throw std::logic_error("V_F < 0 but the line test found no negative point");
        v.witness = lines.witness;
    }
    return v;
}

PsdVerdict psd_fuw(const Rational& u, const Rational& v, const Rational& w) {
    std::vector<Rational> pt{u, v, 1};
    HomogeneousForm f = build(FamilyId{"f_uw", {{"u", u}, {"v", v}, {"w", w}}});
    Rational p0 = pF(pt, w)[0];
    if (p0 == 0) throw DomainError("degenerate parameters: p0F(u,v,1,w) = 0");
    std::vector<std::string> checks{"p0F = " + to_string(p0)};
    PsdVerdict out;
    if (p0 < 0) {
        checks.push_back("p0F < 0: the negated-form criterion is unsupported; f(0,0,1) = p0F refutes");
        out = negative({0, 0, 1}, "p0F sign", checks);
    } else {
        const std::string crit = "xi sign and D_L cells";
        Rational x = xi(pt, w);
        checks.push_back("xi = " + to_string(x));
        bool degenerate = (u - v) * (v - 1) * (1 - u) == 0;
        if (degenerate) checks.push_back("two coordinates of (u,v,1) coincide: xi test replaced by the line test");
        PsdVerdict line_r = univariate_nonneg(f.restrict_line({LE::x(), LE::value(1), LE::value(1)}), Domain::AllReals);
        if (degenerate && !line_r.psd()) {
            out = negative({(*line_r.witness)[0], 1, 1}, crit, checks);
        } else if (!degenerate && x < 0) {
            PsdVerdict r = univariate_nonneg(f.restrict_line({LE::x(), LE::value(1), LE::value(1)}), Domain::AllReals);
            if (r.psd()) throw std::logic_error("xi < 0 but f(x,1,1) is nonnegative");
            out = negative({(*r.witness)[0], 1, 1}, crit, checks);
        } else {
            SexticCellData d = sextic_cell_data(pt, w);
            UnivariatePoly gate = (w - 1) * d.DL;
            Rational s2 = u * u + v * v + 1, s11 = u * v + u + v;
            // (2t+1) S2 - (t^2+2) S11
            UnivariatePoly sq({s2 - 2 * s11, 2 * s2, -s11});
            out = cell_check(f, d, gate, {sq}, crit, checks);
        }
    }
    PsdVerdict full = psd_sextic_s36(f);
    out.cross_check_agrees = full.result == out.result;
    return out;
}

PsdVerdict psd_check(const HomogeneousForm& f) {
    if (f.nvars() == 4 && f.degree() == 4) return psd_s44(f);
    if (f.nvars() == 4 && f.degree() == 3) return psd_plus_s43(f);
    if (f.nvars() == 3 && f.degree() == 5) return psd_plus_s35(f);
    if (f.nvars() == 3 && f.degree() == 6) return psd_sextic_s36(f);
    throw DomainError("no decision procedure for this number of variables and degree");
}

}  // namespace symcone
