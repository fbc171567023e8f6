#include "symcone/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "symcone/boundary.hpp"
#include "symcone/families.hpp"
#include "symcone/symbasis.hpp"

namespace symcone {

namespace {

using Point = std::vector<Rational>;
using Rng = std::mt19937_64;

Rational get(const ParamMap& p, const std::string& k) {
    auto it = p.find(k);
    if (it == p.end()) throw DomainError("missing parameter " + k);
    return it->second;
}

void nonzero(const Rational& x, const std::string& what) {
    if (x == 0) throw DomainError(what + " = 0");
}

// collects the first mismatch
class Sides {
public:
    void eq(const Rational& lhs, const Rational& rhs, const std::string& what) {
        if (lhs != rhs) fail(what + ": " + to_string(lhs) + " != " + to_string(rhs));
    }
    void eq(const HomogeneousForm& lhs, const HomogeneousForm& rhs, const std::string& what) {
        if (!(lhs == rhs)) fail(what + ": difference " + (lhs - rhs).to_text());
    }
    void eq(const UnivariatePoly& lhs, const UnivariatePoly& rhs, const std::string& what) {
        if (!(lhs == rhs)) fail(what + ": " + lhs.to_string() + " != " + rhs.to_string());
    }
    void eq(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs, const std::string& what) {
        if (lhs != rhs) fail(what + ": " + to_string(lhs) + " != " + to_string(rhs));
    }
    void zero(const Rational& v, const std::string& what) { eq(v, Rational(0), what); }
    void that(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    bool ok() const { return detail_.empty(); }
    const std::string& detail() const { return detail_; }

private:
    void fail(const std::string& s) {
        if (detail_.empty()) detail_ = s;
    }
    std::string detail_;
};

using Check = std::function<void(const ParamMap&, Sides&)>;
using Sampler = std::function<ParamMap(Rng&)>;

struct Entry {
    IdentityInfo info;
    Check check;
    Sampler sampler;  // empty: every parameter uniform
};

Rational random_rational(Rng& g) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return make_rational(num(g), den(g));
}

Rational random_positive(Rng& g) {
    std::uniform_int_distribution<long> num(1, 60), den(1, 12);
    return make_rational(num(g), den(g));
}

// ---- small builders ----------------------------------------------------------

HomogeneousForm var3(int i) { return HomogeneousForm::variable(3, i); }
HomogeneousForm var4(int i) { return HomogeneousForm::variable(4, i); }
HomogeneousForm sq(const HomogeneousForm& f) { return f * f; }

HomogeneousForm quintic(const std::vector<Rational>& coords) { return from_basis({Space::H35s, coords}); }
HomogeneousForm family(const std::string& name, const ParamMap& p = {}) { return build({name, p}); }

std::vector<Rational> quintic_coords(const std::string& name, const ParamMap& p = {}) {
    auto c = family_coords({name, p});
    if (!c) throw DomainError(name + " has no coordinates");
    return c->coords;
}

UnivariatePoly along_x11(const HomogeneousForm& f) {
    return f.restrict_line({LinearEntry::x(), LinearEntry::value(1), LinearEntry::value(1)});
}
UnivariatePoly along_0x1(const HomogeneousForm& f) {
    return f.restrict_line({LinearEntry::value(0), LinearEntry::x(), LinearEntry::value(1)});
}

UnivariatePoly X() { return UnivariatePoly::x(); }
UnivariatePoly C(const Rational& c) { return UnivariatePoly::constant(c); }
UnivariatePoly lin(const Rational& root) { return X() - C(root); }

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

Point abc(const ParamMap& p) { return {get(p, "a"), get(p, "b"), get(p, "c")}; }

Rational S2at(const Point& x) { return S3v(2).evaluate(x); }
Rational S11at(const Point& x) { return S3v(1, 1).evaluate(x); }

HomogeneousForm f_sextic(const Point& point, const Rational& w) { return from_basis({Space::H36s0, pF(point, w)}); }

// x_i ordered cyclically
HomogeneousForm cyclic_sum3(const std::function<HomogeneousForm(const HomogeneousForm&, const HomogeneousForm&,
                                                                   const HomogeneousForm&)>& term) {
    HomogeneousForm a = var3(0), b = var3(1), c = var3(2);
    return term(a, b, c) + term(b, c, a) + term(c, a, b);
}

// ---- checks ------------------------------------------------------------------

void f4s_sos(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    HomogeneousForm rhs = cyclic_sum3([&](const HomogeneousForm& x, const HomogeneousForm& y, const HomogeneousForm& z) {
        return sq(2 * x * x - y * y - z * z - (t + 1) * (x * y + x * z - 2 * y * z));
    });
    s.eq(6 * family("f4s_t", {{"t", t}}), rhs, "6 f4s_t vs sum of squares");
}

HomogeneousForm three_squares(const Rational& t) {
    HomogeneousForm a = var4(0), b = var4(1), c = var4(2), d = var4(3);
    return sq(a * a + b * b - c * c - d * d + (t + 1) * (c * d - a * b)) +
           sq(a * a - b * b + c * c - d * d + (t + 1) * (b * d - a * c)) +
           sq(a * a - b * b - c * c + d * d + (t + 1) * (b * c - a * d));
}

void frak_g_squares(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    HomogeneousForm sum = three_squares(t);
    s.eq(3 * family("frak_g_t", {{"t", t}}), sum, "3 g_t vs three squares");
    s.that(sum.is_symmetric(), "sum of squares is symmetric");
    s.zero(sum.evaluate({1, 1, 1, 1}), "vanishes on the diagonal");
    auto coords = to_basis(sum, Space::H44s).coords;
    s.zero(coords[4], "abcd coefficient beyond H44s0");
    s.zero(sum.evaluate({t, 1, 1, 1}), "g_t(t,1,1,1)");
    s.zero(sum.evaluate({-1, -1, 1, 1}), "g_t(-1,-1,1,1)");
}

void frak_p_proportional(const ParamMap&, Sides& s) {
    HomogeneousForm rhs = S4pp(2) - T4pqq(2, 1) + 6 * U4v();
    s.eq(family("frak_p"), 2 * rhs, "sum-of-squares p vs 2 (S22 - T211 + 6U)");
}

void sec1_equalities(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t"), x = get(p, "x");
    auto f = [](const std::string& n, const Point& z, const ParamMap& q = {}) { return family(n, q).evaluate(z); };
    s.zero(f("f3s_1", pt({1, 0, 0})), "f1(1,0,0)");
    s.zero(f("f3s_1", pt({1, 1, 1})), "f1(1,1,1)");
    s.zero(f("f3s_2", pt({1, 1, 0})), "f2(1,1,0)");
    s.zero(f("f3s_2", pt({1, 1, 1})), "f2(1,1,1)");
    s.zero(f("f3s_3", pt({1, 0, 0})), "f3(1,0,0)");
    s.zero(f("f3s_3", pt({1, 1, 0})), "f3(1,1,0)");
    s.zero(f("f4s_t", pt({t, 1, 1}), {{"t", t}}), "f4s_t(t,1,1)");
    s.zero(f("f4s_t", pt({1, 1, 1}), {{"t", t}}), "f4s_t(1,1,1)");
    s.zero(f("g3s_1", pt({1, 0, 0, 0})), "g1(1,0,0,0)");
    s.zero(f("g3s_1", pt({1, 1, 1, 1})), "g1(1,1,1,1)");
    s.zero(f("g3s_2", pt({1, 1, 1, 0})), "g2(1,1,1,0)");
    s.zero(f("g3s_2", pt({1, 1, 1, 1})), "g2(1,1,1,1)");
    s.zero(f("g3s_3", pt({1, 0, 0, 0})), "g3(1,0,0,0)");
    s.zero(f("g3s_3", pt({1, 1, 0, 0})), "g3(1,1,0,0)");
    s.zero(f("g3s_4", pt({1, 1, 0, 0})), "g4(1,1,0,0)");
    s.zero(f("g3s_4", pt({1, 1, 1, 0})), "g4(1,1,1,0)");
    s.zero(f("frak_g_inf", pt({0, 0, 0, 1})), "g_inf(0,0,0,1)");
    s.zero(f("frak_g_inf", pt({-1, -1, 1, 1})), "g_inf(-1,-1,1,1)");
    s.zero(f("frak_p", pt({x, 1, 1, 1})), "p(s,1,1,1)");
    s.zero(f("frak_g_t", pt({x, x, 1, 1}), {{"t", 1}}), "g_1(x,x,1,1)");
    s.zero(family("frak_g_t", {{"t", -3}}).evaluate({x, t, 1, -x - t - 1}), "g_-3 on a+b+c+d = 0");
}

void frak_f_equalities(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t"), u = get(p, "u"), x = get(p, "x");
    ParamMap tp = {{"t", t}};
    s.zero(family("fab_t", tp).evaluate({t, 1, 1, 1}), "f^ab_t(t,1,1,1)");
    s.zero(family("fab_t", tp).evaluate({0, 0, 1, 1}), "f^ab_t(0,0,1,1)");
    nonzero(u, "u");
    // u > 0 is a root of 3u^2 - (t'+1)u + 3 for t' = 3u + 3/u - 1 >= 5
    Rational tc = 3 * u + 3 / u - 1;
    s.zero(3 * u * u - (tc + 1) * u + 3, "u solves the quadratic");
    HomogeneousForm fc = family("fc_t", {{"t", tc}});
    s.zero(fc.evaluate({tc, 1, 1, 1}), "f^c_t(t,1,1,1)");
    s.zero(fc.evaluate({0, 0, u, 1}), "f^c_t(0,0,u,1)");
    HomogeneousForm f1 = family("fab_t", {{"t", 1}});
    s.zero(f1.evaluate({x, x, 1, 1}), "f^ab_1(x,x,1,1)");
    s.zero(f1.derivative({2, 0, 0, 0}).evaluate({1, 1, 1, 1}), "d^2/da^2 f^ab_1(1,1,1,1)");
    HomogeneousForm q1 = family("q1"), q2 = family("q2");
    s.zero(q1.evaluate({1, 1, 1, 0}), "q1(1,1,1,0)");
    s.zero(q1.evaluate({1, 1, 0, 0}), "q1(1,1,0,0)");
    s.zero(q1.evaluate({1, 0, 0, 0}), "q1(1,0,0,0)");
    s.zero(q2.evaluate({x, 1, 0, 0}), "q2(s,1,0,0)");
}

void gtu_zeros(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t"), u = get(p, "u");
    HomogeneousForm g = family("g_tu", {{"t", t}, {"u", u}});
    s.zero(g.evaluate({t, 1, 1, 1}), "g_tu(t,1,1,1)");
    s.zero(g.evaluate({u, u, 1, 1}), "g_tu(u,u,1,1)");
}

void sextic_vanishing(const ParamMap& p, Sides& s) {
    Rational u = get(p, "u"), v = get(p, "v"), w = get(p, "w");
    HomogeneousForm f = f_sextic({u, v, 1}, w);
    HomogeneousForm fa = f.partial(0), fb = f.partial(1);
    for (const Point& z : {pt({u, v, 1}), pt({w, 1, 1})}) {
        std::string at = to_string(z);
        s.zero(f.evaluate(z), "f" + at);
        s.zero(fa.evaluate(z), "f_a" + at);
        s.zero(fb.evaluate(z), "f_b" + at);
    }
    s.zero(f.evaluate({1, 1, 1}), "f(1,1,1)");
}

void delta5_factored(const ParamMap& p, Sides& s) {
    Point x = abc(p);
    Rational w = get(p, "w");
    Rational a = x[0], b = x[1], c = x[2];
    Rational rhs = ((w + 1) * a - b - c) * ((w + 1) * b - c - a) * ((w + 1) * c - a - b);
    s.eq(delta(5, x, w), rhs, "delta5");
}

struct SexticSides {
    Point x;
    Rational w, S1, S2mS11, d1, d2, d3, d4, d5;
    SexticCellData form, table;
};

SexticSides sextic_sides(const ParamMap& p) {
    SexticSides q;
    q.x = abc(p);
    q.w = get(p, "w");
    q.S1 = q.x[0] + q.x[1] + q.x[2];
    q.S2mS11 = S2at(q.x) - S11at(q.x);
    q.d1 = delta(1, q.x, q.w);
    q.d2 = delta(2, q.x, q.w);
    q.d3 = delta(3, q.x, q.w);
    q.d4 = delta(4, q.x, q.w);
    q.d5 = delta(5, q.x, q.w);
    // g0, g1, g2 from the sigma decomposition of the expanded form; D_L from its table
    q.form = sextic_cell_data(f_sextic(q.x, q.w));
    q.table = sextic_cell_data(q.x, q.w);
    return q;
}

void delta3_nonneg(const ParamMap& p, Sides& s) {
    Rational w = get(p, "w"), x = get(p, "x");
    s.eq(delta(3, {x, 1, 1}, w), pow(x - 1, 2) * pow(x - w, 2), "delta3(x,1,1,w)");
    s.that(delta(3, abc(p), w) >= 0, "delta3(a,b,c,w) >= 0");
}

void g0_factored(const ParamMap& p, Sides& s) {
    auto q = sextic_sides(p);
    s.eq(q.form.g0, 9 * q.S1 * q.S1 * q.S2mS11 * q.d2 * q.d2 * q.d3, "g0");
    s.eq(q.form.g0, q.table.g0, "g0 from the table");
    s.that(q.form.g0 >= 0, "g0 >= 0");
}

void sextic_disc_sign(const ParamMap& p, Sides& s) {
    auto q = sextic_sides(p);
    Rational S2 = S2at(q.x), S11 = S11at(q.x);
    // (2t+1) S2 - (t^2+2) S11
    UnivariatePoly lead({S2 - 2 * S11, 2 * S2, -S11});
    UnivariatePoly rhs = (q.w - 1) * q.d1 * q.d1 * q.d2 * q.d2 * (lead * lead) * q.table.DL;
    s.eq(q.form.Df, rhs, "D_f(t)");
    // sign(D_f) = sign((w-1) D_L) wherever the square factors are nonzero
    for (int k = -4; k <= 4; ++k) {
        Rational t = Rational(k, 2);
        Rational sq_part = q.d1 * q.d1 * q.d2 * q.d2 * pow(lead(t), 2);
        if (sq_part == 0) continue;
        s.that(sign(q.form.Df(t)) == sign((q.w - 1) * q.table.DL(t)), "sign of D_f at t = " + to_string(t));
    }
}

void sextic_disc_at_one(const ParamMap& p, Sides& s) {
    auto q = sextic_sides(p);
    s.eq(q.form.Df(1), pow(9 * (q.w - 1) * q.S2mS11 * q.d1 * q.d2 * q.d4, 2), "D_f(1)");
}

void sextic_disc_at_minus_two(const ParamMap& p, Sides& s) {
    auto q = sextic_sides(p);
    Rational rhs = 972 * (q.w - 1) * pow(q.S1, 5) * q.S2mS11 * q.d1 * q.d1 * q.d2 * q.d2 * q.d3 * q.d5;
    s.eq(q.form.Df(-2), rhs, "D_f(-2)");
}

void h1_at_minus_two(const ParamMap& p, Sides& s) {
    auto q = sextic_sides(p);
    s.eq(q.form.h1(-2), -4 * q.form.g0, "h1(-2)");
}

void h1_at_one(const ParamMap& p, Sides& s) {
    auto q = sextic_sides(p);
    s.eq(q.form.h1(1), 9 * (1 - q.w) * q.S2mS11 * q.d1 * q.d2 * q.d4, "h1(1)");
}

void sextic_at_0_m1_1(const ParamMap& p, Sides& s) {
    auto q = sextic_sides(p);
    Rational lhs = f_sextic(q.x, q.w).evaluate({0, -1, 1});
    s.eq(lhs, (1 - q.w) * pow(q.S1, 3) * q.d1 * q.d1 * q.d5, "f(0,-1,1)");
}

void sextic_restriction_factored(const ParamMap& p, Sides& s) {
    Point x = abc(p);
    Rational w = get(p, "w");
    HomogeneousForm f = f_sextic(x, w);
    Rational p0 = f.evaluate({0, 0, 1});
    if (p0 == 0) throw DomainError("p0 vanishes");
    s.eq(p0, pF(x, w)[0], "f(0,0,1) = p0");
    UnivariatePoly lhs = p0 * along_x11(f);
    UnivariatePoly zeros = pow(lin(1), 2) * pow(lin(w), 2);
    auto [quot, rem] = divmod(lhs, zeros);
    s.that(rem.is_zero(), "(x-1)^2 (x-w)^2 divides p0 f(x,1,1)");
    s.that(quot.degree() <= 2, "quadratic cofactor");
    if (!s.ok()) return;
    s.eq(quot.coeff(2), p0 * p0, "x^2 coefficient");
    Rational f1 = quot.coeff(1) / (2 * p0);
    Rational a = x[0], b = x[1], c = x[2];
    Rational rest = pow(a - b, 4) * pow(b - c, 4) * pow(c - a, 4) * pow(a + b + c, 3) * (1 - w) * delta(1, x, w) *
                    pow(delta(2, x, w), 3);
    s.eq(quot.coeff(0) - f1 * f1, rest, "constant term minus f1^2");
    // the criterion: xi >= 0 iff p0 f(x,1,1) >= 0 on the line, as the cofactor is (p0 x + f1)^2 + rest
    s.eq(quot, pow(UnivariatePoly::linear(f1, p0), 2) + C(rest), "completed square");
}

void sextic_u1_square(const ParamMap& p, Sides& s) {
    Point u = abc(p);
    Rational S3u = S3v(3).evaluate(u), T21u = T3v(2, 1).evaluate(u), Uu = U3v().evaluate(u);
    HomogeneousForm inner = (T21u - 6 * Uu) * S3v(3) - (S3u - 3 * Uu) * T3v(2, 1) + (6 * S3u - 3 * T21u) * U3v();
    HomogeneousForm rhs = pow(S2at(u) - S11at(u), 3) * sq(inner);
    s.eq(f_sextic(u, 1), rhs, "f_{u,1}");
}

void eC_restrictions(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    HomogeneousForm f = family("eC_t", {{"t", t}});
    s.eq(along_x11(f), X() * pow(lin(1), 2) * pow(lin(t), 2), "eC(x,1,1)");
    s.eq(along_0x1(f), pow(lin(1), 2) * (X() + C(1)) * (pow(lin(1), 2) + (2 - t) * X()), "eC(0,x,1)");
}

void eD_restrictions(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    HomogeneousForm f = family("eD_t", {{"t", t}});
    s.eq(along_x11(f), 2 * pow(lin(1), 2) * pow(lin(t), 2), "eD(x,1,1)");
    s.eq(along_0x1(f), X() * (X() + C(1)) * (pow(lin(1), 2) + t * t * X()), "eD(0,x,1)");
    // the two restrictions of eD_inf = s2 - 2 s3 are printed under exchanged labels
    HomogeneousForm g = family("eD_inf");
    s.eq(along_0x1(g), (X() + C(1)) * X() * X(), "eD_inf(0,x,1)");
    s.eq(along_x11(g), 2 * pow(lin(1), 2), "eD_inf(x,1,1)");
}

void eD_sum(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    HomogeneousForm rhs = cyclic_sum3([&](const HomogeneousForm& a, const HomogeneousForm& b, const HomogeneousForm& c) {
        return a * sq(b - c) * sq((t + 1) * a - b - c);
    });
    s.eq(family("eD_t", {{"t", t}}), rhs, "eD_t");
}

void eE_restrictions(const ParamMap& p, Sides& s) {
    Rational t = 7 + pow(get(p, "t"), 2);
    HomogeneousForm f = family("eE_t", {{"t", t}});
    s.eq(along_0x1(f), X() * (X() + C(1)) * pow(lin(1), 2), "eE(0,x,1)");
    s.eq(along_x11(f), X() * pow(lin(t), 2) * (2 * X() + C((t - 7) / (t + 2))), "eE(x,1,1)");
    HomogeneousForm g = family("eE_inf");
    s.that(along_0x1(g).is_zero(), "eE_inf(0,x,1) = 0");
    s.eq(along_x11(g), X() * (2 * X() + C(1)), "eE_inf(x,1,1)");
}

void s3_restrictions(const ParamMap&, Sides& s) {
    HomogeneousForm f = family("s3_quintic");
    s.eq(along_x11(f), X() * pow(lin(1), 2), "s3(x,1,1)");
    s.that(along_0x1(f).is_zero(), "s3(0,x,1) = 0");
}

void eA_restrictions(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t"), u = get(p, "u");
    HomogeneousForm f = family("eA_tu", {{"t", t}, {"u", u}});
    Rational z = mu_Z(t, u);
    Rational shift = 2 * (t + 2) * (mu_L(t) - u) / ((5 * t + 1) * u);
    s.eq(along_x11(f), pow(lin(t), 2) * pow(lin(z), 2) * (X() + C(shift)), "eA(x,1,1)");
    // x^2 g^A(t, u, x + 1/x - 2) = A (x-1)^4 + B x (x-1)^2 + C x^2 for g^A = A w^2 + B w + C
    Rational q = 5 * t + 1, h = mu_H(t) - u;
    Rational A = (t + 2) * q * q * q * u, B = q * q * hA(t, u), Cc = t * t * h * h * (mu_L(t) - u);
    s.eq(gA(t, u, 3), 9 * A + 3 * B + Cc, "g^A coefficients");
    UnivariatePoly num = A * pow(lin(1), 4) + B * X() * pow(lin(1), 2) + Cc * X() * X();
    UnivariatePoly rhs = (X() + C(1)) * num * (1 / (u * (t + 2) * q * q * q));
    s.eq(along_0x1(f), rhs, "eA(0,x,1)");
}

void eB_restrictions(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t"), u = get(p, "u");
    HomogeneousForm f = family("eB_tu", {{"t", t}, {"u", u}});
    s.eq(along_0x1(f), (X() + C(1)) * pow(lin(u), 2) * pow(lin(1 / u), 2), "eB(0,x,1)");
    auto c = cB(t, omega(u));
    UnivariatePoly g({c[3], c[2], c[1], c[0]});
    s.eq(along_x11(f), pow(lin(t), 2) * g * (1 / (t * t * (t + 2))), "eB(x,1,1)");
}

void eB_zeros(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t"), u = get(p, "u");
    HomogeneousForm f = family("eB_tu", {{"t", t}, {"u", u}});
    s.zero(f.evaluate({t, 1, 1}), "eB(t,1,1)");
    s.zero(f.evaluate({0, u, 1}), "eB(0,u,1)");
    s.zero(f.partial(1).evaluate({0, u, 1}), "d/db eB(0,u,1)");
}

HomogeneousForm quartic_g(const Rational& t) {
    return S3v(4) - (t + 1) * T3v(3, 1) + (t * t + 2 * t) * S3v(2, 2) - (t * t - 1) * monomial_symmetric(3, {2, 1, 1});
}

void gt_restriction(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    HomogeneousForm g = quartic_g(t);
    s.eq(along_x11(g), pow(lin(1), 2) * pow(lin(t), 2), "g_t(x,1,1)");
    s.eq(g, family("f4s_t", {{"t", t}}), "same as f4s_t");
}

HomogeneousForm S1_times_square(const Rational& k) {
    return S3v(1) * sq(S3v(2) - k * S3v(1, 1));
}

void square_product_eA_eB(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    nonzero(2 * t + 1, "2t+1");
    HomogeneousForm lhs = S1_times_square((t * t + 2) / (2 * t + 1));
    Rational mu0 = 3 * pow(t - 1, 2) * (t + 2) / (2 * t + 1);
    s.eq(lhs, quintic(pA(t, mu0)), "eA_{t,mu0}");
    // e^B depends on u through omega(u); b1B(t, w) = 0 pins w
    Rational w = t * (t - 4) / (2 * t + 1);
    s.zero(b1B(t, w), "b1B(t, w)");
    s.eq(lhs, quintic(pB(t, w)), "eB_{t,alpha}");
}

void product_eC1(const ParamMap&, Sides& s) {
    HomogeneousForm base = S3v(2) - S3v(1, 1);
    s.eq(base * (S3v(3) + 3 * U3v() - T3v(2, 1)), family("eC_t", {{"t", 1}}), "eC_1");
}

void product_eD1(const ParamMap&, Sides& s) {
    HomogeneousForm base = S3v(2) - S3v(1, 1);
    s.eq(base * (T3v(2, 1) - 6 * U3v()), family("eD_t", {{"t", 1}}), "eD_1");
}

void product_s3(const ParamMap&, Sides& s) {
    HomogeneousForm base = S3v(2) - S3v(1, 1);
    s.eq(base * U3v(), family("s3_quintic"), "s3");
}

void reducible_sums(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    s.eq(S3v(1) * quartic_g(t), family("eC_t", {{"t", t}}) + family("eD_t", {{"t", t}}), "S1 g_t = eC_t + eD_t");
    s.eq(S3v(1) * (T3v(3, 1) - 2 * S3v(2, 2)), family("eD_t", {{"t", 0}}) + 4 * family("s3_quintic"),
         "S1 (T31 - 2 S22) = eD_0 + 4 s3");
}

void eA_square_member(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    nonzero(2 * t + 1, "2t+1");
    Rational u0 = 3 * pow(t - 1, 2) * (t + 2) / (2 * t + 1);
    Point z = {t, 1, 1};
    HomogeneousForm rhs = S1_times_square(S2at(z) / S11at(z));
    s.eq(family("eA_tu", {{"t", t}, {"u", u0}}), rhs, "eA_{t,u0}");
}

void eA_muL_muH_coords(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    nonzero(t + 2, "t+2");
    nonzero(7 - t, "7-t");
    Rational r = t + 2;
    std::vector<Rational> low = {1, -(t * t + 5) / r, (t * t - t + 3) / r,
                                 (pow(t, 4) - 6 * pow(t, 3) + 10 * t * t + 18 * t + 13) / (r * r),
                                 3 * pow(t - 1, 4) / (r * r)};
    s.eq(pA(t, mu_L(t)), low, "eA_{t,muL}");
    Rational m = 7 - t;
    std::vector<Rational> high = {1, (t * t - 5 * t - 5) / m, -(t * t - 6 * t + 2) / m,
                                  -(t + 2) * (t * t - 3 * t - 2) / m, pow(t - 1, 3) / m};
    s.eq(pA(t, mu_H(t)), high, "eA_{t,muH}");
}

// t = (m^2 + 2)/(1 + 2m) makes (t-1)(t+2) = (m - t)^2 a rational square
void eB_muB_coords(const ParamMap& p, Sides& s) {
    Rational m = get(p, "m");
    nonzero(1 + 2 * m, "1+2m");
    Rational t = (m * m + 2) / (1 + 2 * m);
    if (t < 2) throw DomainError("needs t >= 2");
    Rational root = abs(m - t);
    s.eq(root * root, (t - 1) * (t + 2), "square root of (t-1)(t+2)");
    Rational muR = 2 - t * t + t * root;
    // omega(mu_B) = mu_B + 1/mu_B - 2 = mu_R - 2
    std::vector<Rational> expected = {1, 1 - 2 * muR, t * t * t + 2 * t * t - 2 - 2 * (t * t - 1) * muR,
                                      -((t + 1) * (t + 1) * (2 * t + 3) - 4 * (t + 1) * (t + 1) * muR), 0};
    s.eq(pB(t, muR - 2), expected, "eB_{t,muB}");
}

void eB_square_member(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    nonzero(2 * t + 1, "2t+1");
    Rational w = t * (t - 4) / (2 * t + 1);
    Point z = {t, 1, 1};
    Rational k = S2at(z) / S11at(z);
    // S2(0,u,1)/S11(0,u,1) = u + 1/u = omega(u) + 2
    s.eq(k, w + 2, "k from (t,1,1) vs k from (0,u,1)");
    s.eq(quintic(pB(t, w)), S1_times_square(k), "eB when b1B = 0");
}

void degenerate_members(const ParamMap&, Sides& s) {
    s.that(family("g_tu", {{"t", 1}, {"u", 1}}).is_zero(), "g_{1,1} = 0");
    s.eq(family("eB_tu", {{"t", 2}, {"u", 1}}), family("eC_t", {{"t", 2}}), "eB_{2,1} = eC_2");
    s.eq(family("eA_t0", {{"t", 7}}), 1296 * family("eE_t", {{"t", 7}}), "eA_{7,0} = 1296 eE_7");
    s.eq(family("eA_t0", {{"t", 1}}), 36 * family("eD_t", {{"t", 1}}), "eA_{1,0} = 36 eD_1");
    s.eq(mu_L(Rational(5, 2)), Rational(81, 4), "muL(5/2)");
    s.eq(mu_H(Rational(5, 2)), Rational(81, 4), "muH(5/2)");
}

void disc_cb(const std::string& fam, const ParamMap& p, Sides& s) {
    std::vector<Rational> c;
    Rational t = get(p, "t");
    if (fam == "eA") c = pA(t, get(p, "u"));
    if (fam == "eB") c = pB(t, omega(get(p, "u")));
    if (fam == "eC") c = quintic_coords("eC_t", {{"t", t}});
    if (fam == "eD") c = quintic_coords("eD_t", {{"t", t}});
    if (fam == "eE") c = quintic_coords("eE_t", {{"t", 7 + t * t}});
    s.zero(cb_quotient_polynomial(c), "disc_Cb(" + fam + ")");
}

void disc_c0_B(const ParamMap& p, Sides& s) {
    s.zero(eval_discriminant(DiscId::C0, pB(get(p, "t"), omega(get(p, "u")))), "disc_C0(eB)");
}

void disc_p1_p2(const ParamMap& p, Sides& s) {
    Rational t = get(p, "t");
    s.zero(eval_discriminant(DiscId::P1, quintic_coords("eD_t", {{"t", t}})), "disc_P1(eD)");
    s.zero(eval_discriminant(DiscId::P2, quintic_coords("eC_t", {{"t", t}})), "disc_P2(eC)");
}

void disc_p3(const ParamMap& p, Sides& s) {
    Rational m = get(p, "m");
    nonzero(1 + 2 * m, "1+2m");
    Rational t = (m * m + 2) / (1 + 2 * m);
    if (t < 2) throw DomainError("needs t >= 2");
    Rational muR = 2 - t * t + t * abs(m - t);
    s.zero(eval_discriminant(DiscId::P3, pB(t, muR - 2)), "disc_P3(eB_{t,muB})");
    s.zero(eval_discriminant(DiscId::P3, quintic_coords("eC_t", {{"t", t}})), "disc_P3(eC)");
    s.zero(eval_discriminant(DiscId::P3, quintic_coords("eD_t", {{"t", t}})), "disc_P3(eD)");
    s.zero(eval_discriminant(DiscId::P3, quintic_coords("s3_quintic")), "disc_P3(s3)");
}

void cb_division(const ParamMap& p, Sides& s) {
    std::vector<Rational> c;
    for (auto k : {"p0", "p1", "p2", "p3", "p4"}) c.push_back(get(p, k));
    if (c[4] == 0) throw DomainError("p4 = 0");
    s.that(cb_division_exact(c), "Disc5 / (16 p4) exact");
    // the quotient is a polynomial: interpolation from p4 = 1..8 reproduces it
    auto q = c;
    s.eq(cb_quotient_polynomial(c), cb_numerator(c) / (16 * c[4]), "quotient value");
    q[4] = 0;
    s.zero(cb_numerator(q), "numerator on p4 = 0");
}

void det_check(const std::string& id, const ParamMap& p, Sides& s) {
    DetCheck d = verify_det_identity(id, p);
    s.eq(d.computed, d.expected, "determinant vs closed form");
}

std::vector<Entry> make_entries() {
    std::vector<Entry> v;
    auto add = [&](std::string id, std::string statement, std::vector<std::string> params, std::string kind, Check c,
                   Sampler smp = {}) {
        v.push_back({{std::move(id), std::move(statement), std::move(params), std::move(kind)}, std::move(c), std::move(smp)});
    };
    const std::string P = "polynomial", E = "equality", D = "discriminant";

    add("sec1-f4s-sos", "6 f4s_t = sum over i of (2x_i^2 - x_{i+1}^2 - x_{i+2}^2 - (t+1)(x_i x_{i+1} + x_i x_{i+2} - 2 x_{i+1} x_{i+2}))^2",
        {"t"}, P, f4s_sos);
    add("sec1-equality-conditions",
        "characterising zeros of f^{3,s}_i, f4s_t, g^{3,s}_i, g_inf, p, g_1, g_-3", {"t", "x"}, E, sec1_equalities);
    add("thm1.7-squares", "3 g_t = three squares; symmetric, in H44s0, zero at (t,1,1,1) and (-1,-1,1,1)", {"t"}, P,
        frak_g_squares);
    add("thm1.7-1.8-frak-p-proportional", "sum-of-squares p = 2 (S22 - T211 + 6U) in four variables", {}, P,
        frak_p_proportional);
    add("thm1.8-equality-conditions", "zeros of f^ab_t, f^c_t (u root of 3u^2-(t+1)u+3), f^ab_1, q1, q2",
        {"t", "u", "x"}, E, frak_f_equalities, [](Rng& g) {
            return ParamMap{{"t", random_rational(g)}, {"u", random_positive(g)}, {"x", random_rational(g)}};
        });
    add("thm1.9-1-zeros", "g_tu(t,1,1,1) = g_tu(u,u,1,1) = 0", {"t", "u"}, E, gtu_zeros);
    add("prop3.5-vanishing", "f_uw, f_a, f_b vanish at (u,v,1) and (w,1,1)", {"u", "v", "w"}, E, sextic_vanishing);
    add("delta5-factored", "delta5 = ((w+1)a-b-c)((w+1)b-c-a)((w+1)c-a-b)", {"a", "b", "c", "w"}, P, delta5_factored);
    add("prop3.8-1-delta3-nonneg", "delta3(x,1,1,w) = (x-1)^2 (x-w)^2 and delta3 >= 0", {"a", "b", "c", "w", "x"}, E,
        delta3_nonneg);
    add("prop3.8-2-g0", "g0 = 9 S1^2 (S2 - S11) delta2^2 delta3", {"a", "b", "c", "w"}, P, g0_factored);
    add("prop3.8-3-sign-DL",
        "D_f(t) = (w-1)((2t+1)S2 - (t^2+2)S11)^2 delta1^2 delta2^2 D_L(t); sign(D_f) = sign((w-1) D_L)",
        {"a", "b", "c", "w"}, P, sextic_disc_sign);
    add("prop3.8-4-Df-at-1", "D_f(1) = (9(w-1)(S2 - S11) delta1 delta2 delta4)^2", {"a", "b", "c", "w"}, P, sextic_disc_at_one);
    add("prop3.8-5-Df-at-minus-2", "D_f(-2) = 972 (w-1) S1^5 (S2 - S11) delta1^2 delta2^2 delta3 delta5",
        {"a", "b", "c", "w"}, P, sextic_disc_at_minus_two);
    add("prop3.8-6-h1-at-minus-2", "h1(-2) = -4 g0", {"a", "b", "c", "w"}, P, h1_at_minus_two);
    add("prop3.8-7-h1-at-1", "h1(1) = 9(1-w)(S2 - S11) delta1 delta2 delta4", {"a", "b", "c", "w"}, P, h1_at_one);
    add("prop3.8-8-f-at-0-m1-1", "f_uw(0,-1,1) = (1-w) S1^3 delta1^2 delta5", {"a", "b", "c", "w"}, P, sextic_at_0_m1_1);
    add("prop3.9-factorization",
        "p0 f(x,1,1) = (x-1)^2 (x-w)^2 ((p0 x + f1)^2 + prod (u_i-u_j)^4 S1^3 (1-w) delta1 delta2^3)",
        {"a", "b", "c", "w"}, P, sextic_restriction_factored);
    add("rem3.11-square", "f_{u,1} = (S2(u) - S11(u))^3 (linear combination of S3, T21, U)^2", {"a", "b", "c"}, P,
        sextic_u1_square);
    add("thm4.3-restrictions", "eC(x,1,1) = x(x-1)^2(x-t)^2, eC(0,x,1) = (x-1)^2(x+1)((x-1)^2 + (2-t)x)", {"t"}, P,
        eC_restrictions);
    add("thm4.4-restrictions", "eD(x,1,1) = 2(x-1)^2(x-t)^2, eD(0,x,1) = x(x+1)((x-1)^2 + t^2 x); eD_inf(0,x,1) = (x+1)x^2, eD_inf(x,1,1) = 2(x-1)^2", {"t"}, P,
        eD_restrictions);
    add("thm4.4-eD-sum", "eD_t = a(b-c)^2((t+1)a-b-c)^2 + cyclic", {"t"}, P, eD_sum);
    add("thm4.5-restrictions", "eE(0,x,1) = x(x+1)(x-1)^2, eE(x,1,1) = x(x-t)^2(2x + (t-7)/(t+2)) at t = 7 + t'^2; eE_inf",
        {"t"}, P, eE_restrictions);
    add("thm4.6-restrictions", "s3(x,1,1) = x(x-1)^2, s3(0,x,1) = 0", {}, P, s3_restrictions);
    add("thm4.7-restrictions", "eA(x,1,1) = (x-t)^2 (x-muZ)^2 (x + 2(t+2)(muL-u)/((5t+1)u)); eA(0,x,1) via g^A",
        {"t", "u"}, P, eA_restrictions);
    add("thm4.10-restrictions", "eB(0,x,1) = (x+1)(x-u)^2(x-1/u)^2, eB(x,1,1) = (x-t)^2 g^B(t,omega(u),x)/(t^2(t+2))",
        {"t", "u"}, P, eB_restrictions);
    add("thm4.10-zeros", "eB(t,1,1) = eB(0,u,1) = d/db eB(0,u,1) = 0", {"t", "u"}, E, eB_zeros);
    add("lemma4.24-restriction", "g_t(x,1,1) = (x-1)^2 (x-t)^2", {"t"}, P, gt_restriction);
    add("thm4.25-1-product", "S1 (S2 - (t^2+2)/(2t+1) S11)^2 = eA_{t,mu0} = eB_{t,alpha}", {"t"}, P, square_product_eA_eB);
    add("thm4.25-2-product", "(S2 - S11)(S3 + 3U - T21) = eC_1", {}, P, product_eC1);
    add("thm4.25-3-product", "(S2 - S11)(T21 - 6U) = eD_1", {}, P, product_eD1);
    add("thm4.25-4-product", "(S2 - S11) U = s3", {}, P, product_s3);
    add("thm4.25-reducible-sums", "S1 g_t = eC_t + eD_t and S1 (T31 - 2 S22) = eD_0 + 4 s3", {"t"}, P, reducible_sums);
    add("rem4.8-1-square", "eA_{t,u0} = S1 (S2 - S2(t,1,1)/S11(t,1,1) S11)^2, u0 = 3(t-1)^2(t+2)/(2t+1)", {"t"}, P,
        eA_square_member);
    add("rem4.8-2-coordinates", "coordinates of eA_{t,muL} and eA_{t,muH}", {"t"}, P, eA_muL_muH_coords);
    Sampler m_sampler = [](Rng& g) { return ParamMap{{"m", 4 + random_positive(g)}}; };
    add("rem4.11-1-muB", "eB_{t,muB} coordinates linear in muR (t with (t-1)(t+2) a rational square)", {"m"}, P,
        eB_muB_coords, m_sampler);
    add("rem4.11-3-square", "b1B(t, omega(u)) = 0 gives eB_{t,u} = S1 (S2 - k S11)^2", {"t"}, P, eB_square_member);
    add("sec4-degenerate-members", "g_{1,1} = 0, eB_{2,1} = eC_2, eA_{7,0} = 1296 eE_7, eA_{1,0} = 36 eD_1, muL(5/2) = muH(5/2) = 81/4",
        {}, E, degenerate_members);
    for (std::string fam : {"eA", "eB", "eC", "eD", "eE"}) {
        std::vector<std::string> ps = {"t"};
        if (fam == "eA" || fam == "eB") ps.push_back("u");
        add("thm4.17-disc-Cb-" + fam, "disc_Cb vanishes on " + fam + (fam == "eE" ? " (at t = 7 + t'^2)" : ""), ps, D,
            [fam](const ParamMap& p, Sides& s) { disc_cb(fam, p, s); });
    }
    add("thm4.17-disc-C0-eB", "disc_C0 vanishes on eB", {"t", "u"}, D, disc_c0_B);
    add("thm4.17-disc-P1-P2", "disc_P1 vanishes on eD, disc_P2 on eC", {"t"}, D, disc_p1_p2);
    add("thm4.29-disc-P3", "disc_P3 vanishes on eB_{t,muB}, eC, eD, s3", {"m"}, D, disc_p3, m_sampler);
    add("thm4.17-cb-division", "Disc5 of the Cb quintic is divisible by 16 p4", {"p0", "p1", "p2", "p3", "p4"}, D,
        cb_division);
    for (const auto& id : det_identity_ids()) {
        std::vector<std::string> ps;
        if (id == "prop3.4-det" || id == "prop3.5-det") ps = {"u", "v", "w"};
        else if (id.rfind("thm4.26", 0) == 0 || id == "thm4.28-det") ps = {"p", "q"};
        else if (id == "thm4.3-2-det") ps = {"t"};
        else ps = {"t", "u"};
        add(id, "elimination determinant equals the closed form (sign fixed per identity)", ps, "determinant",
            [id](const ParamMap& p, Sides& s) { det_check(id, p, s); });
    }
    return v;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> v = make_entries();
    return v;
}

const Entry& entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.info.id == id) return e;
    throw DomainError("unknown identity: " + id);
}

std::uint64_t stream_seed(std::uint64_t seed, const std::string& id, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(std::hash<std::string>{}(id)), static_cast<std::uint32_t>(index)};
    std::uint32_t parts[2];
    seq.generate(parts, parts + 2);
    return (static_cast<std::uint64_t>(parts[0]) << 32) | parts[1];
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
    static const std::vector<IdentityInfo> v = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return v;
}

const IdentityInfo& identity_info(const std::string& id) { return entry(id).info; }

std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (const auto& e : entries()) ids.push_back(e.info.id);
    return ids;
}

IdentitySample check_identity(const std::string& id, const ParamMap& params) {
    const Entry& e = entry(id);
    for (const auto& k : e.info.params) get(params, k);
    Sides s;
    e.check(params, s);
    IdentitySample out;
    out.params = params;
    out.holds = s.ok();
    out.detail = s.detail();
    return out;
}

ParamMap sample_identity_params(const std::string& id, std::uint64_t seed, std::size_t index) {
    const Entry& e = entry(id);
    Rng g(stream_seed(seed, id, index));
    if (e.sampler) return e.sampler(g);
    ParamMap p;
    for (const auto& k : e.info.params) p[k] = random_rational(g);
    return p;
}

IdentityReport sweep_identity(const std::string& id, std::size_t samples, std::uint64_t seed) {
    IdentityReport r;
    r.id = id;
    auto start = std::chrono::steady_clock::now();
    const bool fixed = entry(id).info.params.empty();
    std::size_t want = fixed ? 1 : samples;
    std::size_t draw = 0;
    const std::size_t max_draws = want * 20 + 20;
    while (r.samples < want && draw < max_draws) {
        ParamMap p = sample_identity_params(id, seed, draw++);
        IdentitySample s;
        try {
            s = check_identity(id, p);
        } catch (const DomainError&) {
            ++r.rejected;
            continue;
        }
        ++r.samples;
        if (s.holds) ++r.passed;
        else if (!r.first_failure) r.first_failure = s;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<IdentityReport> sweep_identities(const std::vector<std::string>& ids, std::size_t samples,
                                             std::uint64_t seed, unsigned workers) {
    for (const auto& id : ids) entry(id);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, ids.size())));
    std::vector<IdentityReport> out(ids.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) out[i] = sweep_identity(ids[i], samples, seed);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < ids.size(); i = next++) out[i] = sweep_identity(ids[i], samples, seed);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace symcone
