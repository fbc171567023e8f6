#include "symcone/symbasis.hpp"

#include <algorithm>
#include <set>

#include "symcone/matrix.hpp"

namespace symcone {

HomogeneousForm monomial_symmetric(int nvars, std::vector<int> pattern) {
    pattern.resize(static_cast<std::size_t>(nvars), 0);
    std::sort(pattern.begin(), pattern.end());
    int deg = 0;
    for (int p : pattern) deg += p;
    HomogeneousForm f(nvars, deg);
    do {
        f.set(pattern, 1);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return f;
}

namespace {

HomogeneousForm cyclic3(int m, int n) {
    HomogeneousForm f(3, m + n);
    for (int i = 0; i < 3; ++i) {
        Exponent e(3, 0);
        e[static_cast<std::size_t>(i)] += m;
        e[static_cast<std::size_t>((i + 1) % 3)] += n;
        f.add(e, 1);
    }
    return f;
}

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

}  // namespace

HomogeneousForm expand(const SymBasisElement& e) {
    using Tag = SymBasisElement::Tag;
    const auto& ix = e.indices;
    auto need = [&](std::size_t n) { require(ix.size() == n, "wrong number of indices"); };
    for (int i : ix) require(i >= 0, "negative index");
    switch (e.tag) {
    case Tag::PowerSum:
        need(1);
        return cyclic3(ix[0], 0);
    case Tag::Cyclic:
        need(2);
        return cyclic3(ix[0], ix[1]);
    case Tag::PairSum:
        need(2);
        return cyclic3(ix[0], ix[1]) + cyclic3(ix[1], ix[0]);
    case Tag::TripleSum:
        need(3);
        require(ix[0] > ix[1] && ix[1] > ix[2], "T_{l,m,n} needs l > m > n");
        return monomial_symmetric(3, ix);
    case Tag::SingleDouble:
        need(3);
        require(ix[1] == ix[2], "S_{l,m,m} needs equal last indices");
        return monomial_symmetric(3, ix);
    case Tag::DoubleSingle:
        need(3);
        require(ix[0] == ix[1], "S_{l,l,m} needs equal first indices");
        return monomial_symmetric(3, ix);
    case Tag::Product:
        need(1);
        return HomogeneousForm::monomial({ix[0], ix[0], ix[0]});
    case Tag::PowerSum4:
        need(1);
        return monomial_symmetric(4, {ix[0]});
    case Tag::PairSum4: {
        need(2);
        require(ix[0] != ix[1], "T^4_{p,q} needs p != q");
        return monomial_symmetric(4, {ix[0], ix[1]});
    }
    case Tag::Square4:
        need(1);
        return monomial_symmetric(4, {ix[0], ix[0]});
    case Tag::TripleSum4:
        need(2);
        require(ix[0] != ix[1], "T^4_{p,q,q} needs p != q");
        return monomial_symmetric(4, {ix[0], ix[1], ix[1]});
    case Tag::Cube4:
        need(1);
        return monomial_symmetric(4, {ix[0], ix[0], ix[0]});
    case Tag::Product4:
        need(0);
        return HomogeneousForm::monomial({1, 1, 1, 1});
    }
    throw DomainError("unknown symbol");
}

HomogeneousForm S3v(int n) { return cyclic3(n, 0); }
HomogeneousForm S3v(int m, int n) { return cyclic3(m, n); }
HomogeneousForm T3v(int m, int n) { return cyclic3(m, n) + cyclic3(n, m); }
HomogeneousForm T3v(int l, int m, int n) {
    return expand({SymBasisElement::Tag::TripleSum, {l, m, n}});
}
HomogeneousForm U3v(int l) { return HomogeneousForm::monomial({l, l, l}); }
HomogeneousForm S4v(int d) { return monomial_symmetric(4, {d}); }
HomogeneousForm T4v(int p, int q) { return monomial_symmetric(4, {p, q}); }
HomogeneousForm S4pp(int p) { return monomial_symmetric(4, {p, p}); }
HomogeneousForm T4pqq(int p, int q) { return monomial_symmetric(4, {p, q, q}); }
HomogeneousForm S4ppp(int p) { return monomial_symmetric(4, {p, p, p}); }
HomogeneousForm U4v() { return HomogeneousForm::monomial({1, 1, 1, 1}); }

std::string space_name(Space s) {
    switch (s) {
    case Space::H35s: return "H35s";
    case Space::H36s0: return "H36s0";
    case Space::H44s: return "H44s";
    case Space::H44s0: return "H44s0";
    case Space::H43s: return "H43s";
    }
    return "?";
}

Space parse_space(const std::string& name) {
    for (Space s : {Space::H35s, Space::H36s0, Space::H44s, Space::H44s0, Space::H43s})
        if (space_name(s) == name) return s;
    throw DomainError("unknown space " + name);
}

std::vector<HomogeneousForm> basis_forms(Space s) {
    switch (s) {
    case Space::H35s: {
        HomogeneousForm us11 = U3v() * S3v(1, 1);
        return {S3v(5) - us11, T3v(4, 1) - 2 * us11, T3v(3, 2) - 2 * us11, U3v() * S3v(2) - us11, us11};
    }
    case Space::H36s0: {
        HomogeneousForm u2 = U3v(2);
        return {S3v(6) - 3 * u2,
                T3v(5, 1) - 6 * u2,
                T3v(4, 2) - 6 * u2,
                S3v(3, 3) - 3 * u2,
                monomial_symmetric(3, {4, 1, 1}) - 3 * u2,
                T3v(3, 2, 1) - 6 * u2};
    }
    case Space::H44s:
    case Space::H44s0: {
        HomogeneousForm u = U4v();
        std::vector<HomogeneousForm> b{S4v(4) - 4 * u, T4v(3, 1) - 12 * u, S4pp(2) - 6 * u, T4pqq(2, 1) - 12 * u};
        if (s == Space::H44s) b.push_back(u);
        return b;
    }
    case Space::H43s: {
        HomogeneousForm s111 = S4ppp(1);
        return {S4v(3) - s111, T4v(2, 1) - 3 * s111, s111};
    }
    }
    throw DomainError("unknown space");
}

std::size_t space_dimension(Space s) { return basis_forms(s).size(); }

HomogeneousForm from_basis(const BasisCoords& bc) {
    auto b = basis_forms(bc.space);
    if (bc.coords.size() != b.size()) throw DomainError("coordinate count does not match space");
    HomogeneousForm f(b.front().nvars(), b.front().degree());
    for (std::size_t i = 0; i < b.size(); ++i) f += bc.coords[i] * b[i];
    return f;
}

BasisCoords to_basis(const HomogeneousForm& f, Space s) {
    auto b = basis_forms(s);
    if (f.nvars() != b.front().nvars() || f.degree() != b.front().degree())
        throw MembershipError("form has the wrong shape for " + space_name(s));
    auto mons = monomials(f.nvars(), f.degree());
    // Pick monomials whose coefficient rows are independent.
    RationalMatrix picked(0, b.size());
    std::vector<Exponent> rows;
    for (const auto& m : mons) {
        std::vector<Rational> r;
        for (const auto& g : b) r.push_back(g.coefficient(m));
        RationalMatrix trial = picked;
        trial.append_row(r);
        if (rank(trial) > picked.rows()) {
            picked = trial;
            rows.push_back(m);
            if (picked.rows() == b.size()) break;
        }
    }
    std::vector<Rational> rhs;
    for (const auto& m : rows) rhs.push_back(f.coefficient(m));
    auto sol = solve(picked, rhs);
    if (!sol) throw MembershipError("no solution");
    BasisCoords bc{s, *sol};
    HomogeneousForm residual = f - from_basis(bc);
    if (!residual.is_zero()) {
        const auto& [e, c] = *residual.terms().begin();
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) mono += std::string(1, variable_name(static_cast<int>(i))) + "^" + std::to_string(e[i]);
        throw MembershipError("form is not in " + space_name(s) + ": residual coefficient " + to_string(c) +
                              " at " + mono);
    }
    return bc;
}

HomogeneousForm phi_map(const HomogeneousForm& f) {
    int n = f.nvars();
    HomogeneousForm out(n + 1, f.degree());
    for (const auto& [e, c] : f.terms()) {
        for (int drop = 0; drop <= n; ++drop) {
            Exponent g;
            for (int i = 0, j = 0; i <= n; ++i) g.push_back(i == drop ? 0 : e[static_cast<std::size_t>(j++)]);
            out.add(g, c);
        }
    }
    return out;
}

Rational SigmaPoly::operator()(const Rational& s1, const Rational& s2) const {
    Rational acc = 0;
    for (const auto& [k, c] : terms) acc += c * pow(s1, static_cast<unsigned>(k.first)) * pow(s2, static_cast<unsigned>(k.second));
    return acc;
}

namespace {

const HomogeneousForm& e1() {
    static const HomogeneousForm f = S3v(1);
    return f;
}
const HomogeneousForm& e2() {
    static const HomogeneousForm f = S3v(1, 1);
    return f;
}
const HomogeneousForm& e3() {
    static const HomogeneousForm f = U3v();
    return f;
}

// Monomials e1^i e2^j e3^k of weight 6, with the slot they feed.
struct SigmaMonomial {
    int i, j, k;
};
const std::vector<SigmaMonomial> kSextic{{0, 0, 2}, {3, 0, 1}, {1, 1, 1}, {6, 0, 0}, {4, 1, 0}, {2, 2, 0}, {0, 3, 0}};

HomogeneousForm sigma_monomial(const SigmaMonomial& m) {
    return pow(e1(), static_cast<unsigned>(m.i)) * pow(e2(), static_cast<unsigned>(m.j)) *
           pow(e3(), static_cast<unsigned>(m.k));
}

}  // namespace

HomogeneousForm SigmaDecomposition::recompose() const {
    HomogeneousForm f = g0 * pow(e3(), 2);
    for (const auto& [k, c] : g1.terms)
        f += c * sigma_monomial({k.first, k.second, 1});
    for (const auto& [k, c] : g2.terms)
        f += c * sigma_monomial({k.first, k.second, 0});
    return f;
}

SigmaDecomposition sigma_decompose(const HomogeneousForm& f) {
    if (f.nvars() != 3 || f.degree() != 6) throw DomainError("sigma_decompose needs a sextic in three variables");
    if (!f.is_symmetric()) throw DomainError("sigma_decompose needs a symmetric form");
    auto mons = monomials(3, 6);
    RationalMatrix m(mons.size(), kSextic.size());
    for (std::size_t c = 0; c < kSextic.size(); ++c) {
        HomogeneousForm g = sigma_monomial(kSextic[c]);
        for (std::size_t r = 0; r < mons.size(); ++r) m(r, c) = g.coefficient(mons[r]);
    }
    auto sol = solve(m, f.coefficients(mons));
    if (!sol) throw DomainError("sigma decomposition failed");
    SigmaDecomposition d;
    d.g0 = (*sol)[0];
    for (std::size_t c = 1; c < kSextic.size(); ++c) {
        if (!sgn((*sol)[c])) continue;
        auto& target = kSextic[c].k == 1 ? d.g1 : d.g2;
        target.terms[{kSextic[c].i, kSextic[c].j}] = (*sol)[c];
    }
    if (!(d.recompose() == f)) throw DomainError("sigma decomposition does not reproduce the form");
    return d;
}

}  // namespace symcone
