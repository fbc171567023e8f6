#include "symcone/rational.hpp"

#include <cctype>

namespace symcone {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    Integer num, den = 1;
    auto slash = text.find('/');
    bool ok;
    if (slash == std::string_view::npos) {
        ok = parse_integer(text, num);
    } else {
        ok = parse_integer(text.substr(0, slash), num);
        std::string_view d = text.substr(slash + 1);
        ok = ok && !d.empty() && d[0] != '+' && d[0] != '-' && parse_integer(d, den);
    }
    if (!ok) throw DomainError("malformed rational literal '" + std::string(text) + "'");
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

int sign(const Rational& r) { return sgn(r); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result = 1, b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace symcone
