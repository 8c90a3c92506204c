// Exact rational values for closed-form densities.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stardens {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator.
struct Rational {
    BigInt num{0};
    BigInt den{1};

    Rational() = default;
    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    // "p/q", or just "p" when q == 1.
    std::string str() const {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }

    double to_double() const {
        return static_cast<double>(boost::multiprecision::cpp_rational(num, den));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

inline BigInt big_binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// C(n, k) as uint64; throws if the value does not fit.
inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
    BigInt b = big_binomial(n, k);
    if (b > BigInt(UINT64_MAX))
        throw std::invalid_argument("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                    ") exceeds 64-bit range");
    return b.convert_to<std::uint64_t>();
}

// copies / C(n, order) as a reduced fraction; zero when n < order.
inline Rational exact_density(std::uint64_t copies, int n, int order) {
    if (n < order) return Rational(BigInt(0), BigInt(1));
    return Rational(BigInt(copies), big_binomial(static_cast<unsigned>(n), static_cast<unsigned>(order)));
}

}  // namespace stardens
