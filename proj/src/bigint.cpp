#include "polarws/bigint.hpp"

#include <cmath>
#include <cstdlib>

namespace polarws {

void DyadicRational::canonicalize() {
    if (num == 0) {
        exp2 = 0;
        return;
    }
    while (exp2 > 0 && (num & 1) == 0) {
        num >>= 1;
        --exp2;
    }
    // A value may also be an exact integer written with excess shifts.
    if (exp2 < 0) {
        num <<= -exp2;
        exp2 = 0;
    }
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& other) {
    if (other.num == 0) return *this;
    if (num == 0) {
        *this = other;
        return *this;
    }
    const long e = std::max(exp2, other.exp2);
    num = (num << (e - exp2)) + (other.num << (e - other.exp2));
    exp2 = e;
    canonicalize();
    return *this;
}

double big_to_double(const BigInt& value) {
    if (value == 0) return 0.0;
    const bool neg = value < 0;
    BigInt v = neg ? BigInt(-value) : value;
    const long bits = static_cast<long>(boost::multiprecision::msb(v)) + 1;
    long shift = bits - 62;
    if (shift < 0) shift = 0;
    const double top = static_cast<double>(static_cast<std::uint64_t>(v >> shift));
    const double r = std::ldexp(top, static_cast<int>(shift));
    return neg ? -r : r;
}

double DyadicRational::to_double() const {
    if (num == 0) return 0.0;
    const long bits = static_cast<long>(boost::multiprecision::msb(num)) + 1;
    long shift = bits - 62;
    if (shift < 0) shift = 0;
    const double top = static_cast<double>(static_cast<std::uint64_t>(num >> shift));
    return std::ldexp(top, static_cast<int>(shift - exp2));
}

std::string DyadicRational::to_string() const {
    return num.str() + "/2^" + std::to_string(exp2);
}

} // namespace polarws
