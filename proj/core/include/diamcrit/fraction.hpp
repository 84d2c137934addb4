#ifndef DIAMCRIT_FRACTION_HPP
#define DIAMCRIT_FRACTION_HPP

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>

namespace diamcrit {

// Exact nonnegative rational on 64-bit parts.  Comparisons cross-multiply in
// 128 bits, so they stay exact for every quantity this project produces
// (numerators up to ~n^3, denominators up to ~n*m).  Ratios are emitted as
// num/den plus a fixed 6-digit decimal rendering; verdicts never go through
// floating point.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return a < b || a == b; }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return b <= a; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string decimal(int digits = 6) const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*f", digits, to_double());
        return buf;
    }
};

}  // namespace diamcrit

#endif  // DIAMCRIT_FRACTION_HPP
