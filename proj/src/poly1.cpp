#include "symcone/poly1.hpp"

#include <algorithm>

#include "symcone/matrix.hpp"

namespace symcone {

UnivariatePoly::UnivariatePoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UnivariatePoly UnivariatePoly::constant(const Rational& c) { return UnivariatePoly({c}); }
UnivariatePoly UnivariatePoly::x() { return UnivariatePoly({0, 1}); }
UnivariatePoly UnivariatePoly::linear(const Rational& c0, const Rational& c1) { return UnivariatePoly({c0, c1}); }

void UnivariatePoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UnivariatePoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational UnivariatePoly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UnivariatePoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::monic() const {
    if (is_zero()) return *this;
    UnivariatePoly m = *this;
    Rational l = lead();
    for (auto& c : m.c_) c /= l;
    return m;
}

UnivariatePoly UnivariatePoly::compose(const UnivariatePoly& q) const {
    UnivariatePoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
}

UnivariatePoly UnivariatePoly::operator-() const {
    UnivariatePoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const UnivariatePoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> p(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!sgn(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(p);
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (!sgn(c)) continue;
        if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) out += "-";
        Rational a = symcone::abs(c);
        bool unit = a == 1 && i > 0;
        if (!unit) out += symcone::to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UnivariatePoly pow(const UnivariatePoly& p, unsigned e) {
    UnivariatePoly r = UnivariatePoly::constant(1), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UnivariatePoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    Rational lb = b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational coef = r[static_cast<std::size_t>(k + db)] / lb;
        q[static_cast<std::size_t>(k)] = coef;
        if (!sgn(coef)) continue;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k + j)] -= coef * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UnivariatePoly(std::move(q)), UnivariatePoly(std::move(r))};
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly x = a, y = b;
    while (!y.is_zero()) {
        UnivariatePoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
    if (p.degree() <= 0) return p;
    UnivariatePoly g = gcd(p, p.derivative());
    return divmod(p, g).first;
}

Rational resultant(const UnivariatePoly& f, const UnivariatePoly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return 1;
    std::size_t size = static_cast<std::size_t>(m + n);
    RationalMatrix s(size, size);
    // Rows: n shifted copies of f, then m shifted copies of g (leading first).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) = g.coeff(n - j);
    // sign convention: Res(x - a, x - b) = b - a, i.e. (-1)^(mn) times the
    // f-rows-first Sylvester determinant. Disc is unaffected (m n even there).
    Rational d = det(s);
    return (m * n) % 2 ? Rational(-d) : d;
}

Rational discriminant_n(const std::vector<Rational>& leading_first) {
    if (leading_first.size() < 2) throw DomainError("discriminant needs degree at least 1");
    if (!sgn(leading_first.front())) throw DomainError("discriminant with zero leading coefficient");
    std::vector<Rational> asc(leading_first.rbegin(), leading_first.rend());
    return discriminant(UnivariatePoly(asc));
}

Rational discriminant(const UnivariatePoly& f) {
    int n = f.degree();
    if (n < 1) throw DomainError("discriminant needs degree at least 1");
    if (n == 1) return 1;
    Rational r = resultant(f, f.derivative()) / f.lead();
    return (n * (n - 1) / 2) % 2 ? Rational(-r) : r;
}

namespace {

std::vector<UnivariatePoly> sturm_chain(const UnivariatePoly& p) {
    std::vector<UnivariatePoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UnivariatePoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_changes(const std::vector<UnivariatePoly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sgn(q(x));
        if (!s) continue;
        if (prev && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Every real root has absolute value strictly below the returned bound.
Rational cauchy_bound(const UnivariatePoly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, symcone::abs(p.coeff(i) / p.lead()));
    return m + 1;
}

struct Isolator {
    UnivariatePoly p;
    std::vector<UnivariatePoly> chain;
    std::vector<RootInterval> out;

    int count(const Rational& a, const Rational& b) const {
        return sign_changes(chain, a) - sign_changes(chain, b);
    }

    // Roots in (a, b]; a is never a root of p.
    void run(const Rational& a, const Rational& b) {
        int n = count(a, b);
        if (n == 0) return;
        if (n == 1 && sgn(p(b)) != 0) {
            out.push_back({a, b});
            return;
        }
        if (n == 1) {
            out.push_back({b, b});
            return;
        }
        Rational m = (a + b) / 2;
        if (sgn(p(m)) == 0) {
            // Split around the exact root without using it as an open endpoint.
            Rational eps = (b - a) / 4;
            Rational lo = m - eps, hi = m + eps;
            while (sgn(p(lo)) == 0 || sgn(p(hi)) == 0 || count(lo, hi) != 1) {
                eps /= 2;
                lo = m - eps;
                hi = m + eps;
            }
            run(a, lo);
            out.push_back({m, m});
            run(hi, b);
            return;
        }
        run(a, m);
        run(m, b);
    }
};

}  // namespace

int count_roots(const UnivariatePoly& p, const Rational& a, const Rational& b) {
    UnivariatePoly q = squarefree_part(p);
    if (q.degree() < 1) return 0;
    auto chain = sturm_chain(q);
    return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<RootInterval> isolate_real_roots(const UnivariatePoly& p) {
    if (p.degree() < 1) return {};
    Isolator iso{squarefree_part(p), {}, {}};
    iso.chain = sturm_chain(iso.p);
    Rational b = cauchy_bound(iso.p);
    iso.run(-b, b);
    // Open intervals whose right end is a root of a neighbour never occur:
    // run() only emits (a, b) with p(b) != 0, and a is a previous split point
    // that is either a non-root or an exact root; shrink the latter case.
    for (auto& iv : iso.out) {
        if (iv.exact()) continue;
        while (sgn(iso.p(iv.lo)) == 0) {
            Rational m = (iv.lo + iv.hi) / 2;
            if (sgn(iso.p(m)) == 0) {
                iv = {m, m};
                break;
            }
            if (iso.count(iv.lo, m) == 1) iv.hi = m;
            else iv.lo = m;
        }
    }
    std::sort(iso.out.begin(), iso.out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return iso.out;
}

RootInterval refine_root(const UnivariatePoly& p, RootInterval iv, const Rational& width) {
    if (iv.exact()) return iv;
    UnivariatePoly q = squarefree_part(p);
    int slo = sgn(q(iv.lo));
    while (iv.hi - iv.lo > width) {
        Rational m = (iv.lo + iv.hi) / 2;
        int sm = sgn(q(m));
        if (sm == 0) return {m, m};
        if (sm == slo) iv.lo = m;
        else iv.hi = m;
    }
    return iv;
}

std::vector<Rational> cell_samples(const std::vector<RootInterval>& roots) {
    if (roots.empty()) return {Rational(0)};
    std::vector<Rational> s;
    s.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        const Rational& left = roots[i].hi;
        const Rational& right = roots[i + 1].lo;
        s.push_back(left < right ? Rational((left + right) / 2) : left);
    }
    s.push_back(roots.back().hi + 1);
    return s;
}

}  // namespace symcone
