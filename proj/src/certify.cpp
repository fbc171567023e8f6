#include "symcone/certify.hpp"

#include <algorithm>
#include <set>

namespace symcone {

namespace {

using Point = std::vector<Rational>;

Rational falling(int e, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= e - i;
    return r;
}

const Rational& get(const ParamMap& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw DomainError("missing parameter " + key);
    return it->second;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) out += (out.empty() ? "" : ", ") + s;
    return out;
}

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

// value row plus the listed first partials
void value_and_partials(std::vector<Functional>& rows, const Point& p, const std::vector<int>& vars) {
    rows.push_back(Functional::value(p));
    for (int v : vars) {
        std::vector<int> o(p.size(), 0);
        o[v] = 1;
        rows.push_back(Functional::derivative(p, o));
    }
}

Functional d(const Point& p, std::vector<int> orders) { return Functional::derivative(p, std::move(orders)); }

}  // namespace

HypothesisError::HypothesisError(const std::vector<std::string>& failed)
    : DomainError("hypothesis violated: " + join(failed)), failed_(failed) {}

// ---- spaces and functionals -----------------------------------------------

FormSpace FormSpace::symmetric(Space s) {
    auto b = basis_forms(s);
    return {b.front().nvars(), b.front().degree(), s};
}

std::size_t FormSpace::dim() const {
    return sym ? space_dimension(*sym) : monomials(nvars, degree).size();
}

std::vector<HomogeneousForm> FormSpace::basis() const {
    if (sym) return basis_forms(*sym);
    std::vector<HomogeneousForm> out;
    for (const auto& e : monomials(nvars, degree)) out.push_back(HomogeneousForm::monomial(e));
    return out;
}

std::vector<Rational> FormSpace::coords(const HomogeneousForm& f) const {
    if (sym) return to_basis(f, *sym).coords;
    if (f.nvars() != nvars || (f.degree() != degree && !f.is_zero()))
        throw MembershipError("form is not in H(" + std::to_string(nvars) + "," + std::to_string(degree) + ")");
    return f.coefficients(monomials(nvars, degree));
}

std::string FormSpace::name() const {
    if (sym) return space_name(*sym);
    return "H" + std::to_string(nvars) + "," + std::to_string(degree);
}

Functional Functional::value(std::vector<Rational> point) {
    Functional f;
    f.terms.push_back({1, std::vector<int>(point.size(), 0)});
    f.label = "f" + to_string(point);
    f.point = std::move(point);
    return f;
}

Functional Functional::derivative(std::vector<Rational> point, std::vector<int> orders) {
    Functional f;
    std::string lab = "f_";
    for (std::size_t i = 0; i < orders.size(); ++i) lab += std::string(orders[i], variable_name(int(i)));
    f.label = lab + to_string(point);
    f.terms.push_back({1, std::move(orders)});
    f.point = std::move(point);
    return f;
}

Functional& Functional::plus(const Rational& c, std::vector<int> orders) {
    std::string lab = "f_";
    for (std::size_t i = 0; i < orders.size(); ++i) lab += std::string(orders[i], variable_name(int(i)));
    label += " + " + (c == 1 ? std::string() : to_string(c) + "*") + lab + to_string(point);
    terms.push_back({c, std::move(orders)});
    return *this;
}

Rational Functional::apply_monomial(const Exponent& e) const {
    Rational total = 0;
    for (const auto& term : terms) {
        Rational v = term.coeff;
        for (std::size_t i = 0; i < e.size() && v != 0; ++i) {
            int k = term.orders[i];
            if (k > e[i]) { v = 0; break; }
            v *= falling(e[i], k) * pow(point[i], unsigned(e[i] - k));
        }
        total += v;
    }
    return total;
}

Rational Functional::apply(const HomogeneousForm& f) const {
    Rational total = 0;
    for (const auto& [e, c] : f.terms()) total += c * apply_monomial(e);
    return total;
}

RationalMatrix constraint_matrix(const ConstraintSpec& spec) {
    RationalMatrix m(0, spec.space.dim());
    if (spec.space.sym) {
        auto basis = spec.space.basis();
        for (const auto& c : spec.constraints) {
            std::vector<Rational> row;
            for (const auto& b : basis) row.push_back(c.apply(b));
            m.append_row(row);
        }
    } else {
        auto mons = monomials(spec.space.nvars, spec.space.degree);
        for (const auto& c : spec.constraints) {
            std::vector<Rational> row;
            for (const auto& e : mons) row.push_back(c.apply_monomial(e));
            m.append_row(row);
        }
    }
    return m;
}

// ---- point sets --------------------------------------------------------------

std::vector<Point> quartic_points(const Rational& t, const Rational& u) {
    return {pt({t, 1, 1, 1}), pt({1, t, 1, 1}), pt({1, 1, t, 1}), pt({1, 1, 1, t}), pt({u, u, 1, 1}),
            pt({u, 1, u, 1}), pt({u, 1, 1, u}), pt({1, u, u, 1}), pt({1, u, 1, u}), pt({1, 1, u, u})};
}

std::vector<Point> ten_points(const Rational& u, const Rational& v, const Rational& w) {
    return {pt({1, 1, 1}), pt({u, v, 1}), pt({u, 1, v}), pt({v, u, 1}), pt({v, 1, u}),
            pt({1, u, v}), pt({1, v, u}), pt({w, 1, 1}), pt({1, w, 1}), pt({1, 1, w})};
}

std::vector<Point> cubic_orbit_zeros() {
    // orbits of (1,1,1,0) and (1,1,0,0) under permutations and sign changes,
    // one representative per projective point (first nonzero entry +1)
    std::set<Point> seen;
    std::vector<Point> out;
    for (const Point& base : {pt({1, 1, 1, 0}), pt({1, 1, 0, 0})}) {
        Point p = base;
        std::sort(p.begin(), p.end());
        do {
            for (int s = 0; s < 16; ++s) {
                Point q = p;
                for (int i = 0; i < 4; ++i)
                    if (s >> i & 1) q[i] = -q[i];
                auto first = std::find_if(q.begin(), q.end(), [](const Rational& x) { return x != 0; });
                if (*first < 0)
                    for (auto& x : q) x = -x;
                if (seen.insert(q).second) out.push_back(q);
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

std::vector<Point> decic_orbit_zeros(const Rational& p, const Rational& q) {
    return {pt({p, 1, 1}),  pt({-p, 1, 1}), pt({p, -1, 1}), pt({p, 1, -1}), pt({1, p, 1}),  pt({-1, p, 1}),
            pt({1, -p, 1}), pt({1, p, -1}), pt({1, 1, p}),  pt({-1, 1, p}), pt({1, -1, p}), pt({1, 1, -p}),
            pt({q, 1, 0}),  pt({-q, 1, 0}), pt({1, q, 0}),  pt({1, -q, 0}), pt({q, 0, 1}),  pt({-q, 0, 1}),
            pt({1, 0, q}),  pt({1, 0, -q}), pt({0, q, 1}),  pt({0, -q, 1}), pt({0, 1, q}),  pt({0, 1, -q})};
}

std::vector<Point> sos_points_A(const Rational& p, const Rational& q) {
    return {pt({-p, 1, 1}), pt({p, -1, 1}), pt({p, 1, -1}), pt({1, p, 1}),  pt({-1, p, 1}), pt({1, -p, 1}),
            pt({1, p, -1}), pt({1, 1, p}),  pt({-1, 1, p}), pt({1, -1, p}), pt({q, 1, 1}),  pt({-q, 1, 1}),
            pt({q, -1, 1}), pt({q, 1, -1}), pt({1, q, 1}),  pt({-1, q, 1}), pt({1, -q, 1}), pt({1, q, -1}),
            pt({1, 1, q}),  pt({-1, 1, q}), pt({1, -1, q})};
}

std::vector<Point> sos_points_B(const Rational& p, const Rational& q) {
    return {pt({p, 1, 1}),  pt({-p, 1, 1}), pt({p, -1, 1}), pt({p, 1, -1}), pt({1, p, 1}),  pt({-1, p, 1}),
            pt({1, -p, 1}), pt({1, p, -1}), pt({1, 1, p}),  pt({-1, 1, p}), pt({1, -1, p}), pt({q, 1, 0}),
            pt({q, 0, 1}),  pt({-q, 1, 0}), pt({-q, 0, 1}), pt({1, q, 0}),  pt({1, 0, q}),  pt({1, 0, -q}),
            pt({0, -q, 1}), pt({0, 1, q}),  pt({0, 1, -q})};
}

// ---- catalog -----------------------------------------------------------------

namespace {

struct Entry {
    SpecInfo info;
    std::function<ConstraintSpec(const ParamMap&)> build;
    std::function<FamilyId(const ParamMap&)> target;
    std::function<std::vector<std::string>(const ParamMap&)> hypotheses;
    std::optional<std::size_t> border;  // unit row index for the bordered det
    std::string det_id;
};

FamilyId fam(std::string name, ParamMap params = {}) { return FamilyId{std::move(name), std::move(params)}; }

std::vector<std::string> check(std::initializer_list<std::pair<bool, const char*>> conds) {
    std::vector<std::string> out;
    for (const auto& [ok, what] : conds)
        if (!ok) out.emplace_back(what);
    return out;
}

ConstraintSpec quintic(const std::string& id, std::vector<Functional> rows) {
    return {id, FormSpace::symmetric(Space::H35s), std::move(rows)};
}

// (t,u) of the A family from (p,q) = (sqrt(muZ), sqrt(t))
std::pair<Rational, Rational> tu_from_A(const Rational& p, const Rational& q) {
    Rational t = q * q;
    return {t, mu_H(t) - p * p * (t + 2) * (5 * t + 1)};
}

std::vector<std::string> hyp_thm428(const Rational& p, const Rational& q, bool open_range) {
    Rational t = p * p, u = q * q;
    std::vector<std::string> out;
    if (p <= 0) out.emplace_back("p > 0");
    if (q <= 0) out.emplace_back("q > 0");
    if (open_range ? !(t > 2) : !(t >= 2)) out.emplace_back(open_range ? "t > 2" : "t >= 2");
    if (!(u < 1)) out.emplace_back("u < 1");
    if (t >= 2 && u > 0 && u < 1 && !(open_range ? above_mu_B(t, u) : at_least_mu_B(t, u)))
        out.emplace_back(open_range ? "u > muB(t)" : "u >= muB(t)");
    if (u > 0 && b1B(t, omega(u)) == 0) out.emplace_back("b1B(t,omega(u)) != 0");
    return out;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> v;
        auto no_hyp = [](const ParamMap&) { return std::vector<std::string>{}; };

        v.push_back({{"thm2.2", "extremal", {"t", "u"}, "symmetric quartics vanishing to order 2 at (t,1,1,1) and (u,u,1,1)"},
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         std::vector<Functional> rows;
                         value_and_partials(rows, pt({t, 1, 1, 1}), {0});
                         value_and_partials(rows, pt({u, u, 1, 1}), {0});
                         return ConstraintSpec{"thm2.2", FormSpace::symmetric(Space::H44s), rows};
                     },
                     [](const ParamMap& p) { return fam("g_tu", {{"t", get(p, "t")}, {"u", get(p, "u")}}); },
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         auto out = check({{t != 1, "t != 1"}, {u != 0, "u != 0"}, {u * u != 1, "u^2 != 1"}});
                         if (out.empty() && pG(t, omega(u))[0] == 0) out.emplace_back("p0G(t,omega(u)) != 0");
                         return out;
                     },
                     0, "thm2.2-det"});

        v.push_back({{"thm2.5", "extremal", {"t", "u"}, "the 34 quartic conditions at a1..a10 in the full space H4,4"},
                     [](const ParamMap& p) {
                         auto pts = quartic_points(get(p, "t"), get(p, "u"));
                         std::vector<Functional> rows;
                         for (int i = 0; i < 7; ++i) value_and_partials(rows, pts[i], {0, 1, 2});
                         value_and_partials(rows, pts[7], {0, 1});
                         value_and_partials(rows, pts[8], {0});
                         value_and_partials(rows, pts[9], {});
                         return ConstraintSpec{"thm2.5", FormSpace::full(4, 4), rows};
                     },
                     [](const ParamMap& p) { return fam("g_tu", {{"t", get(p, "t")}, {"u", get(p, "u")}}); },
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         auto out = check({{t != 0, "t != 0"}, {t != 1, "t != 1"}, {u != 0, "u != 0"},
                                           {u * u != 1, "u^2 != 1"}, {2 * u != t + 1, "2u != t+1"},
                                           {t * u + u != 2, "tu+u != 2"}});
                         if (u != 0) {
                             if (D_F(t, u) == 0) out.emplace_back("D_F(t,u) != 0");
                             if (!(V_F(t, omega(u)) > 0)) out.emplace_back("V_F(t,omega(u)) > 0");
                         }
                         return out;
                     },
                     0, "thm2.5-det"});

        v.push_back({{"prop3.5", "extremal", {"u", "v", "w"}, "symmetric sextics singular at (u,v,1) and (w,1,1)"},
                     [](const ParamMap& p) {
                         auto u = get(p, "u"), vv = get(p, "v"), w = get(p, "w");
                         std::vector<Functional> rows;
                         value_and_partials(rows, pt({u, vv, 1}), {0, 1});
                         value_and_partials(rows, pt({w, 1, 1}), {0});
                         return ConstraintSpec{"prop3.5", FormSpace::symmetric(Space::H36s0), rows};
                     },
                     [](const ParamMap& p) {
                         return fam("f_uw", {{"u", get(p, "u")}, {"v", get(p, "v")}, {"w", get(p, "w")}});
                     },
                     [](const ParamMap& p) {
                         auto u = get(p, "u"), vv = get(p, "v"), w = get(p, "w");
                         auto out = check({{u != 1, "u != 1"}, {vv != 1, "v != 1"}, {w != 1, "w != 1"}, {u != vv, "u != v"}});
                         if (pF({u, vv, 1}, w)[0] == 0) out.emplace_back("p0F(u,v,1,w) != 0");
                         return out;
                     },
                     0, "prop3.5-det"});

        v.push_back({{"thm4.3-2", "extremal", {"t"}, "f(t,1,1) = f_a(t,1,1) = f(1,1,1) = f(0,1,1) = 0"},
                     [](const ParamMap& p) {
                         auto t = get(p, "t");
                         std::vector<Functional> rows;
                         value_and_partials(rows, pt({t, 1, 1}), {0});
                         rows.push_back(Functional::value(pt({1, 1, 1})));
                         rows.push_back(Functional::value(pt({0, 1, 1})));
                         return quintic("thm4.3-2", rows);
                     },
                     [](const ParamMap& p) { return fam("eC_t", {{"t", get(p, "t")}}); },
                     [](const ParamMap& p) {
                         auto t = get(p, "t");
                         return check({{t > 0, "t > 0"}, {t <= 2, "t <= 2"}, {t != 1, "t != 1"}});
                     },
                     0, "thm4.3-2-det"});

        v.push_back({{"thm4.3-3", "extremal", {}, "f(1,1,1) = f(0,1,1) = f_a(0,1,1) = f_aa(0,1,1) = 0"},
                     [](const ParamMap&) {
                         return quintic("thm4.3-3", {Functional::value(pt({1, 1, 1})), Functional::value(pt({0, 1, 1})),
                                                     d(pt({0, 1, 1}), {1, 0, 0}), d(pt({0, 1, 1}), {2, 0, 0})});
                     },
                     [](const ParamMap&) { return fam("eC_t", {{"t", 0}}); }, no_hyp, 0, ""});

        v.push_back({{"thm4.3-4", "extremal", {}, "f(0,1,1) = f(1,1,1) = f_aa(1,1,1) = f_aaa(1,1,1) = 0"},
                     [](const ParamMap&) {
                         return quintic("thm4.3-4", {Functional::value(pt({0, 1, 1})), Functional::value(pt({1, 1, 1})),
                                                     d(pt({1, 1, 1}), {2, 0, 0}), d(pt({1, 1, 1}), {3, 0, 0})});
                     },
                     [](const ParamMap&) { return fam("eC_t", {{"t", 1}}); }, no_hyp, 0, ""});

        v.push_back({{"thm4.4-2", "extremal", {"t"}, "f(t,1,1) = f_a(t,1,1) = f(1,1,1) = f(0,0,1) = 0"},
                     [](const ParamMap& p) {
                         auto t = get(p, "t");
                         std::vector<Functional> rows;
                         value_and_partials(rows, pt({t, 1, 1}), {0});
                         rows.push_back(Functional::value(pt({1, 1, 1})));
                         rows.push_back(Functional::value(pt({0, 0, 1})));
                         return quintic("thm4.4-2", rows);
                     },
                     [](const ParamMap& p) { return fam("eD_t", {{"t", get(p, "t")}}); },
                     [](const ParamMap& p) {
                         auto t = get(p, "t");
                         return check({{t > 0, "t > 0"}, {t != 1, "t != 1"}});
                     },
                     1, ""});

        v.push_back({{"thm4.4-3", "extremal", {}, "f(1,1,1) = f_aa(1,1,1) = f_aaa(1,1,1) = f(0,0,1) = 0"},
                     [](const ParamMap&) {
                         return quintic("thm4.4-3", {Functional::value(pt({1, 1, 1})), d(pt({1, 1, 1}), {2, 0, 0}),
                                                     d(pt({1, 1, 1}), {3, 0, 0}), Functional::value(pt({0, 0, 1}))});
                     },
                     [](const ParamMap&) { return fam("eD_t", {{"t", 1}}); }, no_hyp, 1, ""});

        v.push_back({{"thm4.4-4", "extremal", {}, "f(1,1,1) = f(0,0,1) = f_a(0,0,1) = f_aa(0,0,1) + f_ab(0,0,1) = 0"},
                     [](const ParamMap&) {
                         return quintic("thm4.4-4", {Functional::value(pt({1, 1, 1})), Functional::value(pt({0, 0, 1})),
                                                     d(pt({0, 0, 1}), {1, 0, 0}),
                                                     d(pt({0, 0, 1}), {2, 0, 0}).plus(1, {1, 1, 0})});
                     },
                     [](const ParamMap&) { return fam("eD_inf"); }, no_hyp, 2, ""});

        v.push_back({{"thm4.5-2", "extremal", {"t"}, "f(t,1,1) = f_a(t,1,1) = f(0,1,1) = f(0,0,1) = 0"},
                     [](const ParamMap& p) {
                         auto t = get(p, "t");
                         std::vector<Functional> rows;
                         value_and_partials(rows, pt({t, 1, 1}), {0});
                         rows.push_back(Functional::value(pt({0, 1, 1})));
                         rows.push_back(Functional::value(pt({0, 0, 1})));
                         return quintic("thm4.5-2", rows);
                     },
                     [](const ParamMap& p) { return fam("eE_t", {{"t", get(p, "t")}}); },
                     [](const ParamMap& p) { return check({{get(p, "t") >= 7, "t >= 7"}}); }, 1, ""});

        v.push_back({{"thm4.5-4", "extremal", {}, "f(0,1,1) = f(0,0,1) = f_a(0,0,1) = f_ab(0,0,1) = 0"},
                     [](const ParamMap&) {
                         return quintic("thm4.5-4", {Functional::value(pt({0, 1, 1})), Functional::value(pt({0, 0, 1})),
                                                     d(pt({0, 0, 1}), {1, 0, 0}), d(pt({0, 0, 1}), {1, 1, 0})});
                     },
                     [](const ParamMap&) { return fam("eE_inf"); }, no_hyp, 4, ""});

        v.push_back({{"thm4.6-2", "extremal", {}, "f(1,1,1) = f(0,1,1) = f(0,0,1) = f_a(0,0,1) = 0"},
                     [](const ParamMap&) {
                         return quintic("thm4.6-2", {Functional::value(pt({1, 1, 1})), Functional::value(pt({0, 1, 1})),
                                                     Functional::value(pt({0, 0, 1})), d(pt({0, 0, 1}), {1, 0, 0})});
                     },
                     [](const ParamMap&) { return fam("s3_quintic"); }, no_hyp, 3, ""});

        v.push_back({{"thm4.7-2", "extremal", {"t", "u"}, "f(t,1,1) = f_a(t,1,1) = f(muZ,1,1) = f_a(muZ,1,1) = 0"},
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         std::vector<Functional> rows;
                         value_and_partials(rows, pt({t, 1, 1}), {0});
                         value_and_partials(rows, pt({mu_Z(t, u), 1, 1}), {0});
                         return quintic("thm4.7-2", rows);
                     },
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         if (u == 0) return fam("eA_t0", {{"t", t}});
                         return fam("eA_tu", {{"t", t}, {"u", u}});
                     },
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         auto out = check({{t >= 0, "t >= 0"}, {t <= 7, "t <= 7"}, {t != 1, "t != 1"}, {u >= 0, "u >= 0"}});
                         if (t >= 0 && !(u <= mu_A(t))) out.emplace_back("u <= muA(t)");
                         return out;
                     },
                     4, "thm4.7-2-det"});

        v.push_back({{"thm4.10-2", "extremal", {"t", "u"}, "f(t,1,1) = f_a(t,1,1) = f(0,u,1) = f_b(0,u,1) = 0"},
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         std::vector<Functional> rows;
                         value_and_partials(rows, pt({t, 1, 1}), {0});
                         value_and_partials(rows, pt({0, u, 1}), {1});
                         return quintic("thm4.10-2", rows);
                     },
                     [](const ParamMap& p) { return fam("eB_tu", {{"t", get(p, "t")}, {"u", get(p, "u")}}); },
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         auto out = check({{t >= 2, "t >= 2"}, {u > 0, "u > 0"}, {u < 1, "u < 1"}});
                         if (out.empty() && !at_least_mu_B(t, u)) out.emplace_back("u >= muB(t)");
                         return out;
                     },
                     0, "thm4.10-2-det"});

        v.push_back({{"thm4.10-3", "extremal", {"t"}, "f(t,1,1) = f_a(t,1,1) = f(0,1,1) = f_bb(0,1,1) = 0"},
                     [](const ParamMap& p) {
                         auto t = get(p, "t");
                         std::vector<Functional> rows;
                         value_and_partials(rows, pt({t, 1, 1}), {0});
                         rows.push_back(Functional::value(pt({0, 1, 1})));
                         rows.push_back(d(pt({0, 1, 1}), {0, 2, 0}));
                         return quintic("thm4.10-3", rows);
                     },
                     [](const ParamMap& p) { return fam("eB_tu", {{"t", get(p, "t")}, {"u", 1}}); },
                     [](const ParamMap& p) { return check({{get(p, "t") >= 2, "t >= 2"}}); }, 0, ""});

        // no-square-root obstructions: zero sets on which no half-degree form vanishes
        v.push_back({{"thm2.6", "sos", {"t", "u"}, "quadrics through a1..a10"},
                     [](const ParamMap& p) {
                         std::vector<Functional> rows;
                         for (auto& z : quartic_points(get(p, "t"), get(p, "u"))) rows.push_back(Functional::value(z));
                         return ConstraintSpec{"thm2.6", FormSpace::full(4, 2), rows};
                     },
                     [](const ParamMap& p) { return fam("g_tu", {{"t", get(p, "t")}, {"u", get(p, "u")}}); },
                     [](const ParamMap& p) {
                         auto t = get(p, "t"), u = get(p, "u");
                         auto out = check({{t != 1, "t != 1"}, {u != 0, "u != 0"}, {u * u != 1, "u^2 != 1"}});
                         if (u != 0 && !(V_F(t, omega(u)) > 0)) out.emplace_back("V_F(t,omega(u)) > 0");
                         return out;
                     },
                     std::nullopt, "thm2.6-det"});

        v.push_back({{"prop3.4", "sos", {"u", "v", "w"}, "cubics through the ten points of V(u,v,w)"},
                     [](const ParamMap& p) {
                         std::vector<Functional> rows;
                         for (auto& z : ten_points(get(p, "u"), get(p, "v"), get(p, "w")))
                             rows.push_back(Functional::value(z));
                         return ConstraintSpec{"prop3.4", FormSpace::full(3, 3), rows};
                     },
                     [](const ParamMap& p) {
                         return fam("f_uw", {{"u", get(p, "u")}, {"v", get(p, "v")}, {"w", get(p, "w")}});
                     },
                     no_hyp, std::nullopt, "prop3.4-det"});

        v.push_back({{"thm2.10-2", "sos", {}, "cubics through the 28 orbit zeros"},
                     [](const ParamMap&) {
                         std::vector<Functional> rows;
                         for (auto& z : cubic_orbit_zeros()) rows.push_back(Functional::value(z));
                         return ConstraintSpec{"thm2.10-2", FormSpace::full(4, 3), rows};
                     },
                     [](const ParamMap&) { return fam("g3s_4"); }, no_hyp, std::nullopt, ""});

        v.push_back({{"thm4.26-1", "sos", {"p", "q"}, "quintics through 21 zeros of eA(a^2,b^2,c^2), p^2 = muZ, q^2 = t"},
                     [](const ParamMap& p) {
                         std::vector<Functional> rows;
                         for (auto& z : sos_points_A(get(p, "p"), get(p, "q"))) rows.push_back(Functional::value(z));
                         return ConstraintSpec{"thm4.26-1", FormSpace::full(3, 5), rows};
                     },
                     [](const ParamMap& p) {
                         auto [t, u] = tu_from_A(get(p, "p"), get(p, "q"));
                         return fam("eA_tu", {{"t", t}, {"u", u}});
                     },
                     [](const ParamMap& p) {
                         auto pp = get(p, "p"), q = get(p, "q");
                         auto [t, u] = tu_from_A(pp, q);
                         auto out = check({{pp > 0, "p > 0"}, {q > 0, "q > 0"}, {t > 0, "t > 0"}, {t < 7, "t < 7"},
                                           {t != 1, "t != 1"}, {u > 0, "u > 0"}});
                         if (t > 0 && !(u < mu_A(t))) out.emplace_back("u < muA(t)");
                         if (u * (2 * t + 1) == 3 * (t - 1) * (t - 1) * (t + 2)) out.emplace_back("u != 3(t-1)^2(t+2)/(2t+1)");
                         return out;
                     },
                     std::nullopt, "thm4.26-1-det"});

        v.push_back({{"thm4.26-2", "sos", {"p", "q"}, "quintics through 21 zeros of eB(a^2,b^2,c^2), p^2 = t, q^2 = u"},
                     [](const ParamMap& p) {
                         std::vector<Functional> rows;
                         for (auto& z : sos_points_B(get(p, "p"), get(p, "q"))) rows.push_back(Functional::value(z));
                         return ConstraintSpec{"thm4.26-2", FormSpace::full(3, 5), rows};
                     },
                     [](const ParamMap& p) {
                         auto pp = get(p, "p"), q = get(p, "q");
                         return fam("eB_tu", {{"t", pp * pp}, {"u", q * q}});
                     },
                     [](const ParamMap& p) { return hyp_thm428(get(p, "p"), get(p, "q"), true); }, std::nullopt,
                     "thm4.26-2-det"});

        v.push_back({{"thm2.10-1", "full-cone", {}, "value and gradient at the 28 orbit zeros in H4,6"},
                     [](const ParamMap&) {
                         std::vector<Functional> rows;
                         for (auto& z : cubic_orbit_zeros()) value_and_partials(rows, z, {0, 1, 2, 3});
                         return ConstraintSpec{"thm2.10-1", FormSpace::full(4, 6), rows};
                     },
                     [](const ParamMap&) { return fam("g3s_4"); }, no_hyp, std::nullopt, ""});

        v.push_back({{"thm4.28", "full-cone", {"p", "q"}, "value, f_x, f_y at 24 orbit zeros in H3,10, t = p^2, u = q^2"},
                     [](const ParamMap& p) {
                         std::vector<Functional> rows;
                         for (auto& z : decic_orbit_zeros(get(p, "p"), get(p, "q"))) value_and_partials(rows, z, {0, 1});
                         return ConstraintSpec{"thm4.28", FormSpace::full(3, 10), rows};
                     },
                     [](const ParamMap& p) {
                         auto pp = get(p, "p"), q = get(p, "q");
                         return fam("eB_tu", {{"t", pp * pp}, {"u", q * q}});
                     },
                     [](const ParamMap& p) { return hyp_thm428(get(p, "p"), get(p, "q"), false); }, std::nullopt,
                     "thm4.28-det"});
        return v;
    }();
    return table;
}

const Entry& entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.info.id == id) return e;
    throw DomainError("unknown constraint spec: " + id);
}

// ---- determinant identities ----------------------------------------------------

struct DetIdentity {
    std::string id;
    std::vector<std::string> params;
    std::function<Rational(const ParamMap&)> computed;
    std::function<Rational(const ParamMap&)> formula;
};

Rational bordered_det(const std::string& spec, const ParamMap& p, std::size_t unit) {
    auto m = constraint_matrix(entry(spec).build(p));
    std::vector<Rational> e(m.cols(), 0);
    e[unit] = 1;
    return det(m.bordered_above(e));
}

Rational square_det(const std::string& spec, const ParamMap& p) { return det(constraint_matrix(entry(spec).build(p))); }

const std::vector<DetIdentity>& det_table() {
    static const std::vector<DetIdentity> table = [] {
        std::vector<DetIdentity> v;
        v.push_back({"thm2.2-det", {"t", "u"}, [](const ParamMap& p) -> Rational { return bordered_det("thm2.2", p, 0); },
                     [](const ParamMap& p) -> Rational {
                         auto t = get(p, "t"), u = get(p, "u");
                         return 3 * pow(t - 1, 2) * (u * u - 1) * u * u * pG(t, omega(u))[0];
                     }});
        v.push_back({"thm2.5-det", {"t", "u"}, [](const ParamMap& p) -> Rational { return bordered_det("thm2.5", p, 0); },
                     [](const ParamMap& p) -> Rational {
                         auto t = get(p, "t"), u = get(p, "u");
                         Rational w = omega(u);
                         return t * pow(t - 1, 29) * pow(u, 5) * pow(u - 1, 27) * pow(u + 1, 9) * pow(t - 2 * u + 1, 4) *
                                pow(t * u + u - 2, 3) * pG(t, w)[0] * V_F(t, w) * pow(D_F(t, u), 2);
                     }});
        v.push_back({"thm2.6-det", {"t", "u"}, [](const ParamMap& p) -> Rational { return square_det("thm2.6", p); },
                     [](const ParamMap& p) -> Rational {
                         auto t = get(p, "t"), u = get(p, "u");
                         return pow(t - 1, 6) * pow(u - 1, 5) * pow(u + 1, 3) * u * u * V_F(t, omega(u));
                     }});
        v.push_back({"prop3.4-det", {"u", "v", "w"}, [](const ParamMap& p) -> Rational { return square_det("prop3.4", p); },
                     [](const ParamMap& p) -> Rational {
                         auto u = get(p, "u"), vv = get(p, "v"), w = get(p, "w");
                         Point z = {u, vv, 1};
                         return pow(u - vv, 3) * pow(vv - 1, 3) * pow(1 - u, 3) * pow(u + vv + 1, 2) * pow(w - 1, 4) *
                                delta(1, z, w) * pow(delta(2, z, w), 2);
                     }});
        v.push_back({"prop3.5-det", {"u", "v", "w"}, [](const ParamMap& p) -> Rational { return bordered_det("prop3.5", p, 0); },
                     [](const ParamMap& p) -> Rational {
                         auto u = get(p, "u"), vv = get(p, "v"), w = get(p, "w");
                         return 2 * (u - vv) * (vv - 1) * (1 - u) * pow(w - 1, 4) * pF({u, vv, 1}, w)[0];
                     }});
        v.push_back({"thm4.3-2-det", {"t"}, [](const ParamMap& p) -> Rational { return bordered_det("thm4.3-2", p, 0); },
                     [](const ParamMap& p) -> Rational {
                         auto t = get(p, "t");
                         return -12 * t * t * pow(t - 1, 4);
                     }});
        v.push_back({"thm4.7-2-det", {"t", "u"}, [](const ParamMap& p) -> Rational { return bordered_det("thm4.7-2", p, 4); },
                     [](const ParamMap& p) -> Rational {
                         auto t = get(p, "t"), u = get(p, "u");
                         return -4 * pow(t - 1, 4) * pow(u + 6 * (t - 1) * (t + 2), 4) *
                                pow(u + (t - 1) * (t + 2) * (5 * t + 7), 4) / (pow(t + 2, 8) * pow(5 * t + 1, 8));
                     }});
        v.push_back({"thm4.10-2-det", {"t", "u"}, [](const ParamMap& p) -> Rational { return bordered_det("thm4.10-2", p, 0); },
                     [](const ParamMap& p) -> Rational {
                         auto t = get(p, "t"), u = get(p, "u");
                         return 2 * u * u * (u - 1) * pow(u + 1, 3) * t * t * (t - 1) * (t + 2);
                     }});
        v.push_back({"thm4.26-1-det", {"p", "q"}, [](const ParamMap& p) -> Rational { return square_det("thm4.26-1", p); },
                     [](const ParamMap& p) -> Rational {
                         auto a = get(p, "p"), b = get(p, "q");
                         Rational a2 = a * a, b2 = b * b;
                         return 262144 * pow(a, 4) * pow(a2 - 1, 6) * pow(b, 5) * pow(b2 - 1, 7) * pow(a2 - b2, 10) *
                                pow(2 * a2 * b2 + a2 + b2 - 4, 3);
                     }});
        v.push_back({"thm4.26-2-det", {"p", "q"}, [](const ParamMap& p) -> Rational { return square_det("thm4.26-2", p); },
                     [](const ParamMap& p) -> Rational {
                         auto a = get(p, "p"), b = get(p, "q");
                         Rational a2 = a * a, b2 = b * b;
                         return 16384 * pow(a, 6) * pow(a2 - 1, 7) * (a2 + 2) * pow(b, 8) * pow(b - 1, 5) * pow(b + 1, 4) *
                                pow(b2 + 1, 4) * (pow(b + 1, 2) + a2 * b) * (b2 * (a2 + 1) - 1) *
                                pow(a2 * a2 * b2 - 2 * a2 * b2 * b2 - 2 * a2 - pow(b2 - 1, 2), 3);
                     }});
        v.push_back({"thm4.28-det", {"p", "q"},
                     [](const ParamMap& p) -> Rational {
                         auto m = constraint_matrix(entry("thm4.28").build(p));
                         // rows: 3 per point (value, d/dx, d/dy)
                         std::vector<std::size_t> drop = {3 * 0 + 2, 3 * 1 + 2, 3 * 3 + 2, 3 * 12 + 2,
                                                          3 * 13 + 1, 3 * 14 + 2, 3 * 15 + 2};
                         return det(m.without(drop, {m.cols() - 1}));
                     },
                     [](const ParamMap& p) -> Rational {
                         auto a = get(p, "p"), b = get(p, "q");
                         Rational a2 = a * a, b2 = b * b;
                         Rational f1 = a2 - b2 + 1, f2 = a2 * b2 + a2 - 1, f3 = b2 - (a2 + 2) * b + 1;
                         Rational f4 = (2 * a2 + 1) * pow(b2 - 1, 2) - a2 * b2 * (a2 - 4);
                         return pow(Rational(2), 81) * pow(a, 45) * pow(a2 - 1, 38) * pow(a2 + 2, 5) * pow(b, 61) *
                                pow(1 - b2, 28) * pow(a2 * b + pow(b + 1, 2), 5) * pow(f1, 3) * pow(f2, 3) * pow(f3, 5) *
                                pow(f4, 9);
                     }});
        return v;
    }();
    return table;
}

// signs of the identities printed with a plus-minus, fixed once against the
// elimination
int det_sign(const std::string& id) {
    static const std::map<std::string, int> signs = {
        {"thm2.5-det", -1},   {"thm2.6-det", -1},    {"prop3.4-det", 1}, {"prop3.5-det", 1},
        {"thm4.26-1-det", 1}, {"thm4.26-2-det", -1}, {"thm4.28-det", 1},
    };
    auto it = signs.find(id);
    return it == signs.end() ? 1 : it->second;
}

}  // namespace

const std::vector<SpecInfo>& spec_catalog() {
    static const std::vector<SpecInfo> infos = [] {
        std::vector<SpecInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const SpecInfo& spec_info(const std::string& id) { return entry(id).info; }

ConstraintSpec catalog_spec(const std::string& id, const ParamMap& params) { return entry(id).build(params); }

FamilyId catalog_target(const std::string& id, const ParamMap& params) { return entry(id).target(params); }

std::vector<std::string> hypothesis_violations(const std::string& id, const ParamMap& params) {
    const auto& e = entry(id);
    for (const auto& k : e.info.params) get(params, k);
    return e.hypotheses(params);
}

const std::vector<std::string>& det_identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& d : det_table()) v.push_back(d.id);
        return v;
    }();
    return ids;
}

DetCheck verify_det_identity(const std::string& id, const ParamMap& params) {
    for (const auto& d : det_table()) {
        if (d.id != id) continue;
        DetCheck c;
        c.id = id;
        c.computed = d.computed(params);
        c.expected = det_sign(id) * d.formula(params);
        c.matched = c.computed == c.expected;
        return c;
    }
    throw DomainError("unknown determinant identity: " + id);
}

// ---- certificates ------------------------------------------------------------------

ExtremalityCertificate certify_extremal(const FamilyId& target, const ConstraintSpec& spec) {
    ExtremalityCertificate c;
    c.spec_id = spec.id;
    c.target = target;
    c.space = spec.space.name();
    c.matrix = constraint_matrix(spec);
    c.kernel = kernel_basis(c.matrix);
    c.kernel_dim = c.kernel.size();
    c.rank = spec.space.dim() - c.kernel_dim;
    HomogeneousForm f = build(target);
    if (spec.space.sym) {
        c.target_coords = to_basis(f, *spec.space.sym).coords;
    } else {
        // full-cone specs are stated for the even substitution when degrees differ
        if (f.degree() * 2 == spec.space.degree && f.nvars() == spec.space.nvars) f = f.even_substitution();
        c.target_coords = spec.space.coords(f);
    }
    c.kernel_contains_target = !c.kernel.empty() && in_span(c.kernel, c.target_coords) &&
                               std::any_of(c.target_coords.begin(), c.target_coords.end(),
                                           [](const Rational& x) { return x != 0; });
    return c;
}

ExtremalityCertificate certify_catalog(const std::string& id, const ParamMap& params) {
    const auto& e = entry(id);
    auto bad = hypothesis_violations(id, params);
    if (!bad.empty()) throw HypothesisError(bad);
    auto c = certify_extremal(e.target(params), e.build(params));
    c.params = params;
    if (!e.det_id.empty() && e.info.kind == "extremal") c.det_identity = verify_det_identity(e.det_id, params);
    if (e.border) {
        std::vector<Rational> unit(c.matrix.cols(), 0);
        unit[*e.border] = 1;
        bool nonzero = det(c.matrix.bordered_above(unit)) != 0;
        bool expect = c.kernel_dim == 1 && c.kernel[0][*e.border] != 0;
        c.border_consistent = nonzero == expect;
    }
    return c;
}

ExtremalityCertificate certify_extremal_full_cone(const std::string& id, const ParamMap& params) {
    const auto& e = entry(id);
    if (e.info.kind != "full-cone") throw DomainError(id + " is not a full-cone spec");
    auto c = certify_catalog(id, params);
    if (!e.det_id.empty()) c.det_identity = verify_det_identity(e.det_id, params);
    return c;
}

SosObstruction sos_obstruction(const std::vector<std::vector<Rational>>& zeros, int nvars, int half_degree,
                               const std::vector<Functional>& gradient_rows) {
    ConstraintSpec spec{"", FormSpace::full(nvars, half_degree), {}};
    for (const auto& z : zeros) {
        if (int(z.size()) != nvars) throw DomainError("zero has the wrong number of coordinates");
        if (std::all_of(z.begin(), z.end(), [](const Rational& x) { return x == 0; }))
            throw DomainError("zero point is not projective");
        spec.constraints.push_back(Functional::value(z));
    }
    for (const auto& g : gradient_rows) spec.constraints.push_back(g);
    SosObstruction s;
    s.zeros = zeros;
    s.half_space = spec.space.name();
    s.matrix = constraint_matrix(spec);
    s.rank = rank(s.matrix);
    s.kernel_dim = spec.space.dim() - s.rank;
    s.conclusion = s.kernel_dim == 0 ? SosConclusion::NOT_SOS : SosConclusion::INCONCLUSIVE;
    return s;
}

SosObstruction sos_catalog(const std::string& id, const ParamMap& params) {
    const auto& e = entry(id);
    if (e.info.kind != "sos") throw DomainError(id + " is not an obstruction spec");
    auto bad = hypothesis_violations(id, params);
    if (!bad.empty()) throw HypothesisError(bad);
    auto spec = e.build(params);
    std::vector<Point> zeros;
    for (const auto& c : spec.constraints) zeros.push_back(c.point);
    auto s = sos_obstruction(zeros, spec.space.nvars, spec.space.degree);
    s.spec_id = id;
    // the form being obstructed has degree twice the half space (after the
    // even substitution for the squared-variable quintic cases)
    HomogeneousForm f = build(e.target(params));
    if (f.degree() != 2 * spec.space.degree) f = f.even_substitution();
    if (f.degree() == 2 * spec.space.degree) {
        bool all = true;
        for (const auto& z : zeros) all = all && f.evaluate(z) == 0;
        s.zeros_verified = all;
    }
    if (!e.det_id.empty()) s.det_identity = verify_det_identity(e.det_id, params);
    return s;
}

GeneralPosition general_position_check(const Rational& u, const Rational& v, const Rational& w) {
    GeneralPosition g;
    Point z = {u, v, 1};
    if (delta(1, z, w) == 0) g.failing.emplace_back("delta1(u,v,1,w) != 0");
    if (delta(2, z, w) == 0) g.failing.emplace_back("delta2(u,v,1,w) != 0");
    for (const auto& s : check({{u != 1, "u != 1"}, {v != 1, "v != 1"}, {w != 1, "w != 1"}, {u != v, "u != v"},
                                {u + v + 1 != 0, "u+v+1 != 0"}, {u + v != 2, "u+v != 2"}, {2 * u - v != 1, "2u-v != 1"}}))
        g.failing.push_back(s);
    g.ok = g.failing.empty();
    g.det = verify_det_identity("prop3.4-det", {{"u", u}, {"v", v}, {"w", w}});
    return g;
}

}  // namespace symcone
