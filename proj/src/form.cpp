#include "symcone/form.hpp"

#include <algorithm>
#include <numeric>

namespace symcone {

HomogeneousForm::HomogeneousForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1 || degree < 0) throw DomainError("bad form shape");
}

HomogeneousForm HomogeneousForm::variable(int nvars, int index) {
    HomogeneousForm f(nvars, 1);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    f.set(e, 1);
    return f;
}

HomogeneousForm HomogeneousForm::monomial(const Exponent& e, const Rational& c) {
    HomogeneousForm f(static_cast<int>(e.size()), std::accumulate(e.begin(), e.end(), 0));
    f.set(e, c);
    return f;
}

HomogeneousForm HomogeneousForm::constant(int nvars, const Rational& c) {
    HomogeneousForm f(nvars, 0);
    f.set(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return f;
}

Rational HomogeneousForm::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousForm::set(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_ || std::accumulate(e.begin(), e.end(), 0) != degree_)
        throw DomainError("exponent does not match form shape");
    if (sgn(c) == 0) terms_.erase(e);
    else terms_[e] = c;
}

void HomogeneousForm::add(const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) return;
    set(e, coefficient(e) + c);
}

Rational HomogeneousForm::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw DomainError("point has wrong length");
    // powers[i][k] = point[i]^k
    std::vector<std::vector<Rational>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        powers[i].push_back(1);
        for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= powers[i][static_cast<std::size_t>(e[i])];
        acc += m;
    }
    return acc;
}

HomogeneousForm HomogeneousForm::partial(int var) const {
    HomogeneousForm d(nvars_, std::max(degree_ - 1, 0));
    if (degree_ == 0) return d;
    auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (!e.at(v)) continue;
        Exponent f = e;
        f[v] -= 1;
        d.add(f, c * e[v]);
    }
    return d;
}

HomogeneousForm HomogeneousForm::derivative(const std::vector<int>& orders) const {
    HomogeneousForm f = *this;
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (int k = 0; k < orders[i]; ++k) f = f.partial(static_cast<int>(i));
    return f;
}

HomogeneousForm HomogeneousForm::even_substitution() const {
    HomogeneousForm f(nvars_, 2 * degree_);
    for (const auto& [e, c] : terms_) {
        Exponent g = e;
        for (auto& x : g) x *= 2;
        f.set(g, c);
    }
    return f;
}

HomogeneousForm HomogeneousForm::permuted(const std::vector<int>& perm) const {
    HomogeneousForm f(nvars_, degree_);
    for (const auto& [e, c] : terms_) {
        Exponent g(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) g[i] = e[static_cast<std::size_t>(perm[i])];
        f.set(g, c);
    }
    return f;
}

HomogeneousForm HomogeneousForm::substitute(const std::vector<HomogeneousForm>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw DomainError("substitution needs one image per variable");
    int n = images.front().nvars(), k = images.front().degree();
    for (const auto& g : images)
        if (g.nvars() != n || g.degree() != k) throw DomainError("substituted forms must share shape");
    HomogeneousForm out(n, degree_ * k);
    std::vector<std::vector<HomogeneousForm>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        powers[i].push_back(constant(n, 1));
        for (int p = 1; p <= degree_; ++p) powers[i].push_back(powers[i].back() * images[i]);
    }
    for (const auto& [e, c] : terms_) {
        HomogeneousForm m = constant(n, c);
        for (std::size_t i = 0; i < e.size(); ++i) m = m * powers[i][static_cast<std::size_t>(e[i])];
        out += m;
    }
    return out;
}

bool HomogeneousForm::is_symmetric() const {
    std::vector<int> perm(static_cast<std::size_t>(nvars_));
    std::iota(perm.begin(), perm.end(), 0);
    // Transpositions (0 1) and the cycle generate the symmetric group.
    std::vector<int> swap01 = perm, cycle = perm;
    if (nvars_ > 1) std::swap(swap01[0], swap01[1]);
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    return permuted(swap01) == *this && permuted(cycle) == *this;
}

UnivariatePoly HomogeneousForm::restrict_line(const std::vector<LinearEntry>& pattern) const {
    if (static_cast<int>(pattern.size()) != nvars_) throw DomainError("line pattern has wrong length");
    std::vector<std::vector<UnivariatePoly>> powers(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        UnivariatePoly l = UnivariatePoly::linear(pattern[i].constant, pattern[i].slope);
        powers[i].push_back(UnivariatePoly::constant(1));
        for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * l);
    }
    UnivariatePoly acc;
    for (const auto& [e, c] : terms_) {
        UnivariatePoly m = UnivariatePoly::constant(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= powers[i][static_cast<std::size_t>(e[i])];
        acc += m;
    }
    return acc;
}

std::vector<Rational> HomogeneousForm::coefficients(const std::vector<Exponent>& basis) const {
    std::vector<Rational> v;
    v.reserve(basis.size());
    for (const auto& e : basis) v.push_back(coefficient(e));
    return v;
}

std::string HomogeneousForm::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += symcone::to_string(c);
        bool first = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            out += first ? " * " : " ";
            first = false;
            out += variable_name(static_cast<int>(i));
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

HomogeneousForm HomogeneousForm::operator-() const {
    HomogeneousForm f = *this;
    for (auto& [e, c] : f.terms_) c = -c;
    return f;
}

void HomogeneousForm::check_compatible(const HomogeneousForm& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_) throw DomainError("forms of different shape");
}

HomogeneousForm& HomogeneousForm::operator+=(const HomogeneousForm& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

HomogeneousForm& HomogeneousForm::operator-=(const HomogeneousForm& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

HomogeneousForm& HomogeneousForm::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("forms in different numbers of variables");
    HomogeneousForm out(a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add(e, ca * cb);
        }
    return out;
}

bool HomogeneousForm::operator==(const HomogeneousForm& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

HomogeneousForm pow(const HomogeneousForm& f, unsigned e) {
    HomogeneousForm r = HomogeneousForm::constant(f.nvars(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * f;
    return r;
}

namespace {
void fill(int nvars, int remaining, Exponent& cur, std::vector<Exponent>& out) {
    auto i = cur.size();
    if (static_cast<int>(i) == nvars - 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur.push_back(k);
        fill(nvars, remaining - k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Exponent> monomials(int nvars, int degree) {
    std::vector<Exponent> out;
    Exponent cur;
    fill(nvars, degree, cur, out);
    return out;
}

char variable_name(int index) { return static_cast<char>('a' + index); }

}  // namespace symcone
