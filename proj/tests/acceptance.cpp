// One line per acceptance criterion (1-9) plus a classification line.
// Exit status is nonzero when any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symcone/boundary.hpp"
#include "symcone/certify.hpp"
#include "symcone/families.hpp"
#include "symcone/identities.hpp"
#include "symcone/psd.hpp"
#include "symcone/symbasis.hpp"

using namespace symcone;

namespace {

constexpr std::uint64_t kSeed = 20261015;

Rational R(long n, long d = 1) { return make_rational(n, d); }

class Draw {
public:
    explicit Draw(std::uint64_t seed) : gen_(seed) {}
    Rational in(long lo, long hi, long max_den = 12) {
        long d = std::uniform_int_distribution<long>(1, max_den)(gen_);
        return make_rational(std::uniform_int_distribution<long>(lo * d, hi * d)(gen_), d);
    }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

private:
    std::mt19937_64 gen_;
};

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void report(const std::string& label, double limit_s, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < limit_s;
    bool pass = o.ok && in_time;
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, limit_s);
    std::cout << label << ": " << (pass ? "PASS" : "FAIL") << "  " << o.detail << "  [" << timing
              << (in_time ? "" : ", over time limit") << "]" << std::endl;
}

// sweep a list of identities; every one must pass all of its samples
Outcome sweep_all(const std::vector<std::string>& ids, std::size_t samples, std::size_t min_samples) {
    Outcome o;
    auto reports = sweep_identities(ids, samples, kSeed, 0);
    std::ostringstream bad, summary;
    std::size_t total = 0;
    for (const auto& r : reports) {
        total += r.passed;
        bool enough = r.samples >= min_samples || identity_info(r.id).params.empty();
        if (!r.ok() || !enough) {
            o.ok = false;
            bad << " " << r.id << " " << r.passed << "/" << r.samples;
            if (r.first_failure) bad << " (" << r.first_failure->detail.substr(0, 120) << ")";
        }
    }
    summary << reports.size() << " identities, " << total << " exact checks";
    if (!o.ok) summary << "; failing:" << bad.str();
    o.detail = summary.str();
    return o;
}

Outcome constants() {
    std::vector<Rational> z = {R(-1, 2), R(-1, 3), R(1)};
    Rational w = R(9, 10);
    struct C {
        const char* name;
        Rational got, want;
    };
    std::vector<C> cs = {{"p0F", pF(z, w)[0], R(2838188587, 147622500)},
                         {"delta1", delta(1, z, w), R(722, 135)},
                         {"delta2", delta(2, z, w), R(1279, 225)},
                         {"delta4", delta(4, z, w), R(255823, 24300)},
                         {"xi", xi(z, w), R(461719, 911250)}};
    Outcome o;
    std::ostringstream d;
    for (const auto& c : cs) {
        bool m = c.got == c.want;
        o.ok = o.ok && m;
        d << c.name << (m ? "=" : "!=") << to_string(c.want) << " ";
    }
    o.detail = d.str() + "(all at (-1/2,-1/3,1,9/10))";
    return o;
}

Outcome ranks() {
    Outcome o;
    auto even_cubic = certify_extremal_full_cone("thm2.10-1", {});
    auto cubic = sos_catalog("thm2.10-2", {});
    auto decic = certify_extremal_full_cone("thm4.28", {{"p", R(2)}, {"q", R(7, 10)}});
    o.ok = even_cubic.rank == 83 && cubic.rank == 20 && decic.rank == 65 && decic.certified() &&
           even_cubic.certified() && cubic.kernel_dim == 0;
    std::ostringstream d;
    d << "even cubic rank " << even_cubic.rank << " (83), 28-point cubic rank " << cubic.rank
      << " (20), decic rank " << decic.rank << " (65) at (p,q)=(2,7/10), kernel contains target: "
      << (decic.kernel_contains_target ? "yes" : "no");
    o.detail = d.str();
    return o;
}

Outcome psd_equivalence() {
    Outcome o;
    Draw draw(kSeed + 4);
    int total = 0, negatives = 0, mismatches = 0, bad_witness = 0;
    // first 10 deliberately refuted members, then 90 unconstrained ones
    while (total < 100) {
        Rational t = draw.in(-6, 8), u = draw.in(-6, 6);
        if (u == 0 || u == 1) continue;
        Rational vf = V_F(t, omega(u));
        if (negatives < 10 && vf >= 0) continue;
        auto g = build(FamilyId{"g_tu", {{"t", t}, {"u", u}}});
        auto v = psd_s44(g);
        bool expect = vf >= 0;
        if (v.psd() != expect) ++mismatches;
        if (!v.psd()) {
            ++negatives;
            if (!v.witness || g.evaluate(*v.witness) >= 0) ++bad_witness;
        }
        ++total;
    }
    auto f = build(FamilyId{"f_uw", {{"u", R(-1, 2)}, {"v", R(-1, 3)}, {"w", R(9, 10)}}});
    bool sextic = psd_sextic_s36(f).psd();
    o.ok = mismatches == 0 && bad_witness == 0 && negatives >= 10 && sextic;
    std::ostringstream d;
    d << total << " (t,u), " << negatives << " NOT_PSD with witnesses verified, " << mismatches
      << " disagreements with V_F; f(-1/2,-1/3,9/10) " << (sextic ? "PSD" : "NOT PSD");
    o.detail = d.str();
    return o;
}

Outcome kernels() {
    const std::vector<std::string> ids = {"thm4.3-2", "thm4.3-3", "thm4.3-4", "thm4.4-2", "thm4.4-3",
                                          "thm4.4-4", "thm4.5-2", "thm4.5-4", "thm4.6-2", "thm4.7-2",
                                          "thm4.10-2", "thm4.10-3"};
    Outcome o;
    Draw draw(kSeed + 6);
    std::ostringstream bad;
    int certs = 0;
    for (const auto& id : ids) {
        const auto& info = spec_info(id);
        int want = info.params.empty() ? 1 : 10, got = 0, tries = 0;
        while (got < want && tries < 4000) {
            ++tries;
            ParamMap p;
            for (const auto& k : info.params) {
                if (k == "t") p[k] = draw.in(0, 12);
                else if (id == "thm4.10-2") p[k] = draw.in(0, 1, 24);
                else p[k] = draw.in(0, 22);
            }
            if (!hypothesis_violations(id, p).empty()) continue;
            auto c = certify_catalog(id, p);
            ++got;
            ++certs;
            if (c.kernel_dim != 1 || !c.kernel_contains_target) {
                o.ok = false;
                bad << " " << id << "@";
                for (const auto& [k, v] : p) bad << k << "=" << to_string(v) << ",";
            }
        }
        if (got < want) {
            o.ok = false;
            bad << " " << id << " only " << got << " valid points";
        }
    }
    std::ostringstream d;
    d << ids.size() << " systems, " << certs << " certificates (10 random points each, 1 for parameter-free systems)";
    if (!o.ok) d << "; failing:" << bad.str();
    o.detail = d.str();
    return o;
}

Outcome discriminants() {
    Outcome o = sweep_all({"thm4.17-disc-Cb-eA", "thm4.17-disc-Cb-eB", "thm4.17-disc-Cb-eC", "thm4.17-disc-Cb-eD",
                           "thm4.17-disc-Cb-eE"},
                          10, 10);
    Draw draw(kSeed + 7);
    int c0_bad = 0, div_bad = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> p;
        for (int k = 0; k < 5; ++k) p.push_back(draw.in(-20, 20, 6));
        Rational c0 = 5 * p[0] * p[0] + 2 * p[0] * p[1] + p[1] * p[1] - 4 * p[0] * p[2];
        if (eval_discriminant(DiscId::C0, p) != c0) ++c0_bad;
        std::vector<Rational> q;
        for (int k = 0; k < 5; ++k) q.push_back(draw.integer(-30, 30));
        if (q[4] == 0) q[4] = draw.integer(1, 30);
        if (!cb_division_exact(q)) ++div_bad;
    }
    o.ok = o.ok && c0_bad == 0 && div_bad == 0;
    o.detail += "; C0 formula mismatches " + std::to_string(c0_bad) + "/200; inexact 16p4 divisions " +
                std::to_string(div_bad) + "/200";
    return o;
}

// dense rational grid over [-bound, bound]: true if some grid value is negative
bool grid_finds_negative(const UnivariatePoly& p, bool nonneg_only) {
    Rational bound = 1;
    for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(1 + abs(p.coeff(i) / p.lead())));
    long steps = 400;
    for (long k = nonneg_only ? 0 : -steps; k <= steps; ++k)
        if (p(bound * Rational(k, steps)) < 0) return true;
    return false;
}

Outcome oracles() {
    Outcome o;
    Draw draw(kSeed + 8);
    int uni_bad = 0, grid_missed = 0, refuted = 0;
    for (int i = 0; i < 500; ++i) {
        // half of them built from factors so double roots and tangencies occur
        UnivariatePoly p;
        if (i % 2) {
            std::vector<Rational> c;
            int deg = static_cast<int>(draw.integer(1, 6));
            for (int k = 0; k <= deg; ++k) c.push_back(draw.integer(-6, 6));
            if (c.back() == 0) c.back() = 1;
            p = UnivariatePoly(c);
        } else {
            p = UnivariatePoly::constant(draw.integer(1, 3));
            int factors = static_cast<int>(draw.integer(1, 3));
            for (int k = 0; k < factors; ++k) {
                auto lin = UnivariatePoly::linear(draw.in(-4, 4, 3), 1);
                p *= draw.integer(0, 2) ? lin * lin : lin;
            }
            p += UnivariatePoly::constant(draw.in(-1, 1, 8));
        }
        Domain dom = i % 4 < 2 ? Domain::AllReals : Domain::NonnegReals;
        auto v = univariate_nonneg(p, dom);
        bool grid_neg = grid_finds_negative(p, dom == Domain::NonnegReals);
        if (v.psd()) {
            if (grid_neg) ++uni_bad;
        } else {
            ++refuted;
            Rational x = (*v.witness)[0];
            if (p(x) >= 0 || (dom == Domain::NonnegReals && x < 0)) ++uni_bad;
            if (!grid_neg) ++grid_missed;
        }
    }

    int cubic_bad = 0;
    for (int i = 0; i < 1000; ++i) {
        Rational a, b, c;
        if (i % 3 == 0) {
            // x (x - r)^2 + s: touches zero at r when s = 0
            Rational r = draw.in(-3, 3, 4), s = i % 2 ? Rational(0) : draw.in(-1, 1, 8);
            a = -2 * r;
            b = r * r;
            c = s;
        } else {
            a = draw.in(-6, 6, 4);
            b = draw.in(-6, 6, 4);
            c = draw.in(-6, 6, 4);
        }
        UnivariatePoly cubic({c, b, a, Rational(1)});
        if (cubic_nonneg_plus(a, b, c) != univariate_nonneg(cubic, Domain::NonnegReals).psd()) ++cubic_bad;
    }

    int fuw_bad = 0, fuw_done = 0, fuw_neg = 0;
    for (int i = 0; i < 400 && fuw_done < 25; ++i) {
        Rational u = draw.in(-2, 2, 6), v = draw.in(-2, 2, 6), w = draw.in(-2, 3, 10);
        if (i % 5 == 0) w = 1;
        PsdVerdict a;
        try {
            a = psd_fuw(u, v, w);
        } catch (const DomainError&) {
            continue;
        }
        auto f = build(FamilyId{"f_uw", {{"u", u}, {"v", v}, {"w", w}}});
        auto b = psd_sextic_s36(f);
        if (a.result != b.result) ++fuw_bad;
        if (!a.psd()) {
            ++fuw_neg;
            if (!a.witness || f.evaluate(*a.witness) >= 0) ++fuw_bad;
        }
        ++fuw_done;
    }
    o.ok = uni_bad == 0 && cubic_bad == 0 && fuw_bad == 0 && fuw_done == 25;
    std::ostringstream d;
    d << "univariate vs grid: " << uni_bad << "/500 disagreements (" << refuted << " refuted, " << grid_missed
      << " of them between grid points); cubic: " << cubic_bad << "/1000; f_uw vs sextic test: " << fuw_bad << "/"
      << fuw_done << " (" << fuw_neg << " NOT_PSD)";
    o.detail = d.str();
    return o;
}

Outcome degenerate() {
    auto fam = [](const std::string& s) { return build(parse_family(s)); };
    struct Item {
        const char* what;
        bool ok;
    };
    std::vector<Item> items = {
        {"g_{1,1} = 0", fam("g_tu(t=1,u=1)").is_zero()},
        {"eB_{2,1} = eC_2", fam("eB_tu(t=2,u=1)") == fam("eC_t(t=2)")},
        {"eA_{7,0} = 1296 eE_7", fam("eA_t0(t=7)") == R(1296) * fam("eE_t(t=7)")},
        {"eA_{1,0} = 36 eD_1", fam("eA_t0(t=1)") == R(36) * fam("eD_t(t=1)")},
        {"muL(5/2) = muH(5/2) = 81/4", mu_L(R(5, 2)) == R(81, 4) && mu_H(R(5, 2)) == R(81, 4)},
    };
    Outcome o;
    std::ostringstream d;
    for (const auto& it : items) {
        o.ok = o.ok && it.ok;
        d << it.what << (it.ok ? " ok; " : " FAILS; ");
    }
    o.detail = d.str();
    return o;
}

// emitted cross sections against the case lists of the four regimes
Outcome classification() {
    struct Expect {
        Rational t;
        int regime;
        std::vector<std::string> arcs, vertices;
        Rational a_upper;  // upper end of the A arc (unused when there is none)
    };
    std::vector<Expect> cases = {
        {R(1), 1, {"eA"}, {"eC_t", "eD_t"}, mu_L(R(1))},
        {R(9, 4), 2, {"eA", "eB"}, {"eD_t"}, mu_L(R(9, 4))},
        {R(3), 3, {"eA", "eB"}, {"eD_t"}, mu_H(R(3))},
        {R(10), 4, {"eB"}, {"eD_t", "eE_t"}, 0},
    };
    Outcome o;
    std::ostringstream d;
    int points = 0;
    for (const auto& e : cases) {
        auto cs = cross_section(e.t, 5);
        std::vector<std::string> arcs, verts;
        bool ok = cs.regime == e.regime;
        for (const auto& a : cs.arcs) {
            arcs.push_back(a.family);
            if (a.family == "eA") ok = ok && a.u_lo == 0 && a.u_hi == e.a_upper;
            // lowest B sample must sit at or above muB(t), exactly
            if (a.family == "eB") ok = ok && a.u_hi == 1 && at_least_mu_B(e.t, a.u_lo);
            for (const auto& s : a.samples) {
                auto f = from_basis({Space::H35s, s.coords});
                ok = ok && s.on_section && f.evaluate({e.t, 1, 1}) == 0 && psd_plus_s35(f).psd();
                ++points;
            }
        }
        for (const auto& v : cs.vertices) {
            verts.push_back(v.member.name);
            auto f = from_basis({Space::H35s, v.coords});
            ok = ok && v.on_section && f.evaluate({e.t, 1, 1}) == 0 && psd_plus_s35(f).psd();
            ++points;
        }
        ok = ok && arcs == e.arcs && verts == e.vertices;
        o.ok = o.ok && ok;
        d << "t=" << to_string(e.t) << (ok ? " ok; " : " MISMATCH; ");
    }
    d << points << " emitted points on the section and PSD on the orthant";
    o.detail = d.str();
    return o;
}

}  // namespace

int main() {
    report("criterion 1 (reference constants)", 1, constants);
    report("criterion 2 (determinant identities)", 300, [] {
        return sweep_all({"thm2.2-det", "thm2.5-det", "thm2.6-det", "prop3.4-det", "prop3.5-det", "thm4.7-2-det",
                          "thm4.10-2-det", "thm4.26-1-det", "thm4.26-2-det", "thm4.28-det"},
                         20, 20);
    });
    report("criterion 3 (rank claims)", 120, ranks);
    report("criterion 4 (PSD equivalences)", 120, psd_equivalence);
    report("criterion 5 (identity suites)", 120, [] {
        return sweep_all({"sec1-f4s-sos", "thm1.7-squares", "prop3.8-2-g0", "prop3.8-3-sign-DL", "prop3.8-4-Df-at-1",
                          "prop3.8-5-Df-at-minus-2", "prop3.8-6-h1-at-minus-2", "prop3.8-7-h1-at-1",
                          "prop3.8-8-f-at-0-m1-1", "prop3.9-factorization", "rem3.11-square", "thm4.4-eD-sum",
                          "rem4.8-1-square", "thm4.25-1-product", "thm4.25-2-product", "thm4.25-3-product",
                          "thm4.25-4-product"},
                         50, 50);
    });
    report("criterion 6 (characterisation kernels)", 120, kernels);
    report("criterion 7 (discriminant vanishing)", 60, discriminants);
    report("criterion 8 (oracle equivalences)", 180, oracles);
    report("criterion 9 (degenerate members)", 1, degenerate);
    report("classification (cross sections at t = 1, 9/4, 3, 10)", 120, classification);
    std::cout << (failures ? std::to_string(failures) + " line(s) failed" : std::string("all lines passed"))
              << std::endl;
    return failures ? 1 : 0;
}
