#ifndef POLARWS_BIGINT_HPP
#define POLARWS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace polarws {

// Codeword counts overflow 64 bits already for moderate m, so every count in
// the library is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Exact value num / 2^exp2.  Canonical form keeps num odd (or zero with
// exp2 = 0) so equal values compare equal.
struct DyadicRational {
    BigInt num;
    long exp2 = 0;

    DyadicRational() = default;
    DyadicRational(BigInt n, long e) : num(std::move(n)), exp2(e) { canonicalize(); }

    void canonicalize();
    bool is_zero() const { return num == 0; }

    DyadicRational& operator+=(const DyadicRational& other);
    friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.num == b.num && a.exp2 == b.exp2;
    }

    double to_double() const;
    std::string to_string() const; // "num/2^exp2"
};

// double(x) that stays finite for values far beyond the range of a direct
// integer conversion (splits off the binary exponent first).
double big_to_double(const BigInt& value);

} // namespace polarws

#endif
