#include "symcone/families.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <iostream>
#include <sstream>

#include "symcone/tables.hpp"

namespace symcone {

namespace {

std::atomic<RangePolicy> g_eE_policy{RangePolicy::Warn};

void require_nonzero(const Rational& v, const std::string& factor) {
    if (v == 0) throw DomainError("parameter makes " + factor + " vanish");
}

Rational wpoly(const std::vector<long long>& c, const Rational& w) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + Rational(static_cast<long>(*it));
    return acc;
}

// Monomial symmetric sum m_pattern evaluated at a 3-point.
Rational msym(std::array<int, 3> pat, const std::vector<Rational>& x) {
    std::sort(pat.begin(), pat.end());
    Rational s = 0;
    do {
        s += pow(x[0], pat[0]) * pow(x[1], pat[1]) * pow(x[2], pat[2]);
    } while (std::next_permutation(pat.begin(), pat.end()));
    return s;
}

void check_point3(const std::vector<Rational>& p) {
    if (p.size() != 3) throw DomainError("expected a point with 3 coordinates");
}

const Rational& P(const FamilyId& id, const char* k, Rational& slot) {
    slot = id.param(k);
    return slot;
}

}  // namespace

// ---- FamilyId -------------------------------------------------------------

Rational FamilyId::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw DomainError("family " + name + " needs parameter " + key);
    return it->second;
}

std::string FamilyId::to_string() const {
    std::string s = name;
    if (params.empty()) return s;
    s += "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) s += ",";
        first = false;
        s += k + "=" + symcone::to_string(v);
    }
    return s + ")";
}

FamilyId parse_family(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.rfind("family:", 0) == 0) s = s.substr(7);
    FamilyId id;
    auto open = s.find('(');
    id.name = s.substr(0, open);
    if (open != std::string::npos) {
        if (s.back() != ')') throw DomainError("malformed family id: " + text);
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos) throw DomainError("expected key=value in " + text);
            id.params[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
        }
    }
    const auto& names = family_names();
    if (std::find(names.begin(), names.end(), id.name) == names.end())
        throw DomainError("unknown family: " + id.name);
    return id;
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "f3s_1", "f3s_2", "f3s_3", "f4s_t", "f4s_inf", "eX_k", "g3s_1", "g3s_2", "g3s_3",
        "g3s_4", "frak_g_t", "frak_g_inf", "frak_p", "fab_t", "fc_t", "q1", "q2", "g_tu",
        "f_uw", "eA_tu", "eA_t0", "eB_tu", "eC_t", "eD_t", "eD_inf", "eE_t", "eE_inf",
        "s3_quintic"};
    return names;
}

void set_eE_policy(RangePolicy p) { g_eE_policy = p; }

// ---- scalar helpers -------------------------------------------------------

Rational omega(const Rational& u) {
    require_nonzero(u, "u");
    return (u - 1) * (u - 1) / u;
}

Enclosure sqrt_enclosure(const Rational& x, const Rational& width) {
    if (x < 0) throw DomainError("square root of a negative number");
    mpz_class n = x.get_num(), d = x.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        Rational r(rn, rd);
        r.canonicalize();
        return {r, r};
    }
    Rational lo = 0, hi = x > 1 ? x : Rational(1);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= x) lo = mid; else hi = mid;
    }
    return {lo, hi};
}

Rational mu_L(const Rational& t) { return 9 * (t - 1) * (t - 1); }
Rational mu_H(const Rational& t) { return (t + 2) * (7 - t); }
Rational mu_A(const Rational& t) { return std::min(mu_L(t), mu_H(t)); }

Rational mu_Z(const Rational& t, const Rational& u) {
    require_nonzero(t + 2, "t+2");
    require_nonzero(5 * t + 1, "5t+1");
    return (mu_H(t) - u) / ((t + 2) * (5 * t + 1));
}

Enclosure mu_R(const Rational& t, const Rational& width) {
    Rational rad = (t - 1) * (t + 2);
    if (rad < 0) throw DomainError("mu_R needs (t-1)(t+2) >= 0");
    Rational scale = abs(t) > 1 ? abs(t) : Rational(1);
    Enclosure s = sqrt_enclosure(rad, width / scale);
    Rational a = 2 - t * t + t * s.lo, b = 2 - t * t + t * s.hi;
    return {std::min(a, b), std::max(a, b)};
}

bool at_least_mu_B(const Rational& t, const Rational& u) {
    if (t < 2) throw DomainError("mu_B is used for t >= 2");
    if (u <= 0) return false;
    if (u > 1) throw DomainError("mu_B comparison needs u <= 1");
    Rational lhs = omega(u) + t * t;
    return lhs * lhs <= t * t * (t - 1) * (t + 2);
}

bool above_mu_B(const Rational& t, const Rational& u) {
    if (t < 2) throw DomainError("mu_B is used for t >= 2");
    if (u <= 0) return false;
    if (u > 1) throw DomainError("mu_B comparison needs u <= 1");
    Rational lhs = omega(u) + t * t;
    return lhs * lhs < t * t * (t - 1) * (t + 2);
}

Enclosure mu_B(const Rational& t, const Rational& width) {
    if (t < 2) throw DomainError("mu_B is used for t >= 2");
    Rational lo = 0, hi = 1;
    // invariant: mu_B in (lo, hi]
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (at_least_mu_B(t, mid)) hi = mid; else lo = mid;
    }
    return {lo, hi};
}

MuValues mu_values(const Rational& t, const std::optional<Rational>& u, const Rational& width) {
    MuValues m;
    m.muL = mu_L(t);
    m.muH = mu_H(t);
    m.muA = mu_A(t);
    if (u) m.muZ = mu_Z(t, *u);
    if ((t - 1) * (t + 2) >= 0) m.muR = mu_R(t, width);
    if (t >= 2) m.muB = mu_B(t, width);
    return m;
}

CoeffKind parse_coeff_kind(const std::string& s) {
    if (s == "pG") return CoeffKind::pG;
    if (s == "pF") return CoeffKind::pF;
    if (s == "pA") return CoeffKind::pA;
    if (s == "pB") return CoeffKind::pB;
    throw DomainError("unknown coefficient table: " + s);
}

std::vector<Rational> pG(const Rational& t, const Rational& w) {
    Rational a = (t - 1) * (t - 1), b = a * a, w2 = w * w;
    return {
        (4 * t + 2) * w2 - 3 * a * w,
        -2 * (t + 1) * (t + 1) * w2 + 2 * (t + 1) * a * w,
        4 * t * t * w2 - 2 * a * (2 * t - 1) * w + 2 * b,
        2 * (t + 1) * (t + 1) * w2 - a * (t * t + 3) * w - 2 * b,
        2 * b * w2,
    };
}

std::vector<Rational> pF(const std::vector<Rational>& point, const Rational& w) {
    check_point3(point);
    std::vector<Rational> p(6, Rational(0));
    for (const auto& term : tables::kSexticCoeffTerms)
        p[term.index] += wpoly(term.wcoeffs, w) * msym(term.pattern, point);
    return p;
}

std::vector<Rational> pA(const Rational& t, const Rational& u) {
    require_nonzero(u, "u");
    require_nonzero(t + 2, "t+2");
    require_nonzero(5 * t + 1, "5t+1");
    Rational t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    Rational u2 = u * u, u3 = u2 * u;
    Rational q = 5 * t + 1, q3 = q * q * q, r = t + 2;
    Rational tm = t - 1;
    Rational p1 = (u2 - r * (5 * t2 + t + 9) * u + 9 * tm * tm * r * r) / (q * r * u);
    Rational p2 = (-t2 * u3 + tm * (7 * t3 - t2 + 11 * t + 1) * u2 +
                   r * (17 * t5 - 25 * t4 + 199 * t3 - 59 * t2 + 76 * t + 8) * u +
                   9 * pow(tm, 4) * r * r * (t2 - 12 * t - 1)) /
                  (q3 * r * u);
    Rational p3 = ((2 * t3 + 4 * t2 + 5 * t + 1) * u3 -
                   2 * r * (7 * t4 + 42 * t3 + 37 * t2 + 48 * t + 10) * u2 +
                   r * r * (91 * t5 + 125 * t4 + 682 * t3 + 182 * t2 + 523 * t + 125) * u -
                   18 * tm * tm * r * r * r * (t4 + 36 * t3 + 34 * t2 + 60 * t + 13)) /
                  (r * r * q3 * u);
    Rational p4 = pow(tm, 3) * pow(6 * t2 + 6 * t - 12 + u, 3) / (r * r * q3 * u);
    return {1, p1, p2, p3, p4};
}

std::vector<Rational> pB(const Rational& t, const Rational& w) {
    require_nonzero(t, "t");
    require_nonzero(t + 2, "t+2");
    Rational t2 = t * t, t3 = t2 * t, w2 = w * w;
    Rational p3 = -(2 * t3 + 4 * t2 + 5 * t + 1) / (t2 * (t + 2)) * w2 +
                  2 * (4 * t2 + 5 * t + 3) / (t + 2) * w - (3 * t3 - 7 * t2 - 12 * t - 8) / (t + 2);
    Rational p4 = pow(t - 1, 3) * (-w2 - 2 * t2 * w + t2 * (t - 2)) / (t2 * (t + 2));
    return {1, -2 * w - 3, w2 + 2 * w + 2, p3, p4};
}

std::vector<Rational> coefficient_tables(CoeffKind kind, const std::vector<Rational>& ps) {
    auto need = [&](std::size_t n) {
        if (ps.size() != n) throw DomainError("coefficient table expects " + std::to_string(n) + " parameters");
    };
    switch (kind) {
        case CoeffKind::pG: need(2); return pG(ps[0], ps[1]);
        case CoeffKind::pF: need(4); return pF({ps[0], ps[1], ps[2]}, ps[3]);
        case CoeffKind::pA: need(2); return pA(ps[0], ps[1]);
        case CoeffKind::pB: need(2); return pB(ps[0], ps[1]);
    }
    return {};
}

Rational V_F(const Rational& t, const Rational& w) {
    return (3 + 6 * t - t * t) * w * w - 6 * (t - 1) * (t - 1) * w;
}

Rational D_F(const Rational& t, const Rational& u) {
    Rational t2 = t * t, t3 = t2 * t;
    return (3 + 6 * t - t2) - (13 + 6 * t + 5 * t2) * u + (10 + 9 * t + 4 * t2 + t3) * u * u -
           (1 + 6 * t + t2) * u * u * u;
}

Rational delta(int i, const std::vector<Rational>& x, const Rational& w) {
    check_point3(x);
    auto m = [&](int p, int q, int r) { return msym({p, q, r}, x); };
    Rational w2 = w * w;
    switch (i) {
        case 1: return 2 * m(3, 0, 0) - (w + 2) * m(2, 1, 0) + (6 * w + 6) * m(1, 1, 1);
        case 2: return (2 * w + 1) * m(2, 0, 0) - (w2 + 2) * m(1, 1, 0);
        case 3:
            return m(4, 0, 0) - (w + 1) * m(3, 1, 0) + (w2 + 2 * w) * m(2, 2, 0) - (w2 - 1) * m(2, 1, 1);
        case 4:
            return 2 * m(5, 0, 0) - (2 * w + 3) * m(4, 1, 0) + (-w2 + 2 * w + 1) * m(3, 2, 0) +
                   4 * (w + 1) * (w + 1) * m(3, 1, 1) - (2 * w2 + 8 * w + 2) * m(2, 2, 1);
        case 5:
            return (w + 1) * m(3, 0, 0) - (w2 + w + 1) * m(2, 1, 0) + (w2 * w + 3 * w2 + 6 * w + 2) * m(1, 1, 1);
    }
    throw DomainError("delta index must be 1..5");
}

Rational xi(const std::vector<Rational>& x, const Rational& w) {
    check_point3(x);
    return (x[0] + x[1] + x[2]) * (1 - w) * delta(1, x, w) * delta(2, x, w);
}

UnivariatePoly h3_from_h1(const UnivariatePoly& h1) {
    // sum_k c_k (4-t)^k (1+2t)^(4-k), degree of h1 at most 3
    if (h1.degree() > 3) throw DomainError("h3 needs a cubic");
    UnivariatePoly a = UnivariatePoly::linear(4, -1), b = UnivariatePoly::linear(1, 2);
    UnivariatePoly out;
    for (int k = 0; k <= h1.degree(); ++k)
        out += h1.coeff(k) * pow(a, k + 1) * pow(b, 3 - k);
    return out;
}

namespace {

// s1 = t+2, s2 = 2t+1
UnivariatePoly on_line(const SigmaPoly& g) {
    UnivariatePoly s1 = UnivariatePoly::linear(2, 1), s2 = UnivariatePoly::linear(1, 2);
    UnivariatePoly out;
    for (const auto& [e, c] : g.terms) out += c * pow(s1, e.first) * pow(s2, e.second);
    return out;
}

SexticCellData finish(const Rational& g0, const SigmaPoly& g1, const SigmaPoly& g2) {
    SexticCellData d;
    d.g0 = g0;
    d.g1_line = on_line(g1);
    d.g2_line = on_line(g2);
    d.h1 = UnivariatePoly::linear(0, 2 * g0) + d.g1_line;
    d.h3 = h3_from_h1(d.h1);
    d.Df = d.g1_line * d.g1_line - 4 * g0 * d.g2_line;
    return d;
}

}  // namespace

SexticCellData sextic_cell_data(const std::vector<Rational>& point, const Rational& w) {
    auto p = pF(point, w);
    Rational g0 = -9 * (p[1] + p[2] + p[5]);
    SigmaPoly g1, g2;
    g1.terms[{3, 0}] = 6 * p[0] - p[1] - 2 * p[2] + p[4];
    g1.terms[{1, 1}] = -12 * p[0] + 7 * p[1] + 4 * p[2] - 3 * p[3] - 3 * p[4] + p[5];
    g2.terms[{6, 0}] = p[0];
    g2.terms[{4, 1}] = -6 * p[0] + p[1];
    g2.terms[{2, 2}] = 9 * p[0] - 4 * p[1] + p[2];
    g2.terms[{0, 3}] = -2 * p[0] + 2 * p[1] - 2 * p[2] + p[3];
    SexticCellData d = finish(g0, g1, g2);
    std::vector<Rational> dl(3, Rational(0));
    for (const auto& term : tables::kDLTerms)
        dl[term.index] += wpoly(term.wcoeffs, w) * msym(term.pattern, point);
    d.DL = UnivariatePoly(dl);
    return d;
}

SexticCellData sextic_cell_data(const HomogeneousForm& f) {
    SigmaDecomposition sd = sigma_decompose(f);
    return finish(sd.g0, sd.g1, sd.g2);
}

std::vector<Rational> cB(const Rational& t, const Rational& w) {
    Rational t2 = t * t;
    return {
        t2 * (t + 2),
        2 * t2 * (t + 2) * (-2 * w + t - 3),
        -(5 * t + 1) * w * w - 2 * t2 * (t - 7) * w + t2 * (t - 4) * (t - 4),
        2 * (t + 2) * w * w,
    };
}

Rational b1B(const Rational& t, const Rational& w) { return (2 * t + 1) * w - t * (t - 4); }
Rational b2B(const Rational& t, const Rational& w) { return -w * w - 2 * t * t * w + t * t * (t - 2); }
Rational b3B(const Rational& t, const Rational& w) {
    Rational t2 = t * t;
    return (t + 1) * (5 * t + 1) * (5 * t + 1) * w * w +
           2 * t * (t2 * t2 - 13 * t2 * t + 25 * t2 + 27 * t - 4) * w -
           t2 * (t - 4) * (t - 4) * (t2 - 3 * t - 1);
}

Rational hA(const Rational& t, const Rational& u) {
    return u * u - (t + 2) * (5 * t * t - 14 * t + 6) * u + (t + 2) * (t + 2) * mu_L(t);
}

Rational gA(const Rational& t, const Rational& u, const Rational& w) {
    Rational q = 5 * t + 1;
    Rational h = mu_H(t) - u;
    return (t + 2) * q * q * q * u * w * w + q * q * hA(t, u) * w + t * t * h * h * (mu_L(t) - u);
}

// ---- constructors ---------------------------------------------------------

std::optional<BasisCoords> family_coords(const FamilyId& id) {
    const std::string& n = id.name;
    Rational t, u, v, w;
    if (n == "eA_tu") {
        P(id, "t", t); P(id, "u", u);
        return BasisCoords{Space::H35s, pA(t, u)};
    }
    if (n == "eA_t0") {
        P(id, "t", t);
        Rational t2 = t * t, t3 = t2 * t, t4 = t3 * t;
        return BasisCoords{Space::H35s,
                           {0, (5 * t + 1) * (5 * t + 1), (t - 1) * (t - 1) * (t2 - 12 * t - 1),
                            -2 * (t4 + 36 * t3 + 34 * t2 + 60 * t + 13), 24 * pow(t - 1, 4)}};
    }
    if (n == "eB_tu") {
        P(id, "t", t); P(id, "u", u);
        return BasisCoords{Space::H35s, pB(t, omega(u))};
    }
    if (n == "eC_t") {
        P(id, "t", t);
        return BasisCoords{Space::H35s, {1, -(t + 1), t, (t + 1) * (t + 1), 0}};
    }
    if (n == "eD_t") {
        P(id, "t", t);
        return BasisCoords{Space::H35s, {0, 1, t * t - 1, -2 * (t + 1) * (t + 1), 0}};
    }
    if (n == "eD_inf") return BasisCoords{Space::H35s, {0, 0, 1, -2, 0}};
    if (n == "eE_t") {
        P(id, "t", t);
        require_nonzero(t + 2, "t+2");
        if (t < 7) {
            RangePolicy pol = g_eE_policy;
            if (pol == RangePolicy::Refuse) throw DomainError("eE_t is only nonnegative for t >= 7");
            if (pol == RangePolicy::Warn)
                std::cerr << "warning: eE_t with t = " << to_string(t) << " < 7 is not nonnegative\n";
        }
        return BasisCoords{Space::H35s,
                           {0, 1, -1, -(4 * t * t + 5 * t + 3) / (t + 2), pow(t - 1, 3) / (t + 2)}};
    }
    if (n == "eE_inf") return BasisCoords{Space::H35s, {0, 0, 0, 0, 1}};
    if (n == "s3_quintic") return BasisCoords{Space::H35s, {0, 0, 0, 1, 0}};
    if (n == "g_tu") {
        P(id, "t", t); P(id, "u", u);
        auto c = pG(t, omega(u));
        for (auto& x : c) x *= u * u;
        return BasisCoords{Space::H44s, c};
    }
    if (n == "f_uw") {
        P(id, "u", u); P(id, "v", v); P(id, "w", w);
        return BasisCoords{Space::H36s0, pF({u, v, 1}, w)};
    }
    HomogeneousForm f = build(id);
    if (f.nvars() == 4 && f.degree() == 4) return to_basis(f, Space::H44s);
    if (f.nvars() == 4 && f.degree() == 3) return to_basis(f, Space::H43s);
    return std::nullopt;
}

HomogeneousForm build(const FamilyId& id) {
    const std::string& n = id.name;
    Rational t, k;
    if (auto c = [&]() -> std::optional<BasisCoords> {
            static const std::vector<std::string> coord_families = {
                "eA_tu", "eA_t0", "eB_tu", "eC_t", "eD_t", "eD_inf", "eE_t", "eE_inf", "s3_quintic", "g_tu", "f_uw"};
            if (std::find(coord_families.begin(), coord_families.end(), n) == coord_families.end())
                return std::nullopt;
            return family_coords(id);
        }())
        return from_basis(*c);

    // three variables
    const HomogeneousForm U = U3v(1);
    if (n == "f3s_1") return T3v(2, 1) - 6 * U;
    if (n == "f3s_2") return S3v(3) + 3 * U - T3v(2, 1);
    if (n == "f3s_3") return U;
    if (n == "f4s_t") {
        P(id, "t", t);
        return S3v(4) - (t + 1) * T3v(3, 1) + (t * t + 2 * t) * S3v(2, 2) - (t * t - 1) * (U * S3v(1));
    }
    if (n == "f4s_inf") return S3v(2, 2) - U * S3v(1);
    if (n == "eX_k") {
        P(id, "k", k);
        HomogeneousForm q = k * S3v(2) - S3v(1, 1);
        return q * q;
    }

    // four variables
    const HomogeneousForm U4 = U4v();
    if (n == "g3s_1") return T4v(2, 1) - 3 * S4ppp(1);
    if (n == "g3s_2") return 3 * S4v(3) + 3 * S4ppp(1) - 2 * T4v(2, 1);
    if (n == "g3s_3") return S4ppp(1);
    if (n == "g3s_4") return S4v(3) + 3 * S4ppp(1) - T4v(2, 1);
    auto var = [](int i) { return HomogeneousForm::variable(4, i); };
    HomogeneousForm a = var(0), b = var(1), c = var(2), d = var(3);
    if (n == "frak_g_t") {
        P(id, "t", t);
        HomogeneousForm x = a * a + b * b - c * c - d * d + (t + 1) * (c * d - a * b);
        HomogeneousForm y = a * a - b * b + c * c - d * d + (t + 1) * (b * d - a * c);
        HomogeneousForm z = a * a - b * b - c * c + d * d + (t + 1) * (b * c - a * d);
        return Rational(1, 3) * (x * x + y * y + z * z);
    }
    if (n == "frak_g_inf") {
        HomogeneousForm x = a * b - c * d, y = a * c - b * d, z = a * d - b * c;
        return x * x + y * y + z * z;
    }
    if (n == "frak_p") {
        auto sq = [](const HomogeneousForm& f) { return f * f; };
        return sq(a - b) * sq(c - d) + sq(a - c) * sq(b - d) + sq(a - d) * sq(b - c);
    }
    if (n == "fab_t") {
        P(id, "t", t);
        return Rational(1, 3) * (3 * S4v(4) - 2 * (t + 1) * T4v(3, 1) + 2 * (2 * t - 1) * S4pp(2) +
                                 (t * t + 3) * T4pqq(2, 1) - 12 * (t * t + 1) * U4);
    }
    if (n == "fc_t") {
        P(id, "t", t);
        // printed as 2(t^2+5t+8); -8 is what makes f(t,1,1,1) = 0
        return Rational(1, 9) * (9 * S4v(4) - 6 * (t + 1) * T4v(3, 1) + (t * t + 2 * t + 19) * S4pp(2) +
                                 2 * (t * t + 5 * t - 8) * T4pqq(2, 1) -
                                 6 * (5 * t * t + 10 * t - 19) * U4);
    }
    if (n == "q1") return T4v(3, 1) - 2 * S4pp(2);
    if (n == "q2") return T4pqq(2, 1) - 12 * U4;
    throw DomainError("unknown family: " + n);
}

}  // namespace symcone
