#pragma once

#include <random>
#include <vector>

#include "symcone/rational.hpp"

namespace testing_util {

inline symcone::Rational R(long n, long d = 1) { return symcone::make_rational(n, d); }

// small random rationals, num in [lo*den, hi*den] so the value lies in [lo, hi]
class RandomRationals {
public:
    explicit RandomRationals(std::uint64_t seed) : gen_(seed) {}
    symcone::Rational in(long lo, long hi, long max_den = 12) {
        std::uniform_int_distribution<long> dd(1, max_den);
        long d = dd(gen_);
        std::uniform_int_distribution<long> nd(lo * d, hi * d);
        return symcone::make_rational(nd(gen_), d);
    }
    symcone::Rational any() { return in(-5, 5); }

private:
    std::mt19937_64 gen_;
};

}  // namespace testing_util
