#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "zpk/error.hpp"

namespace zpk {

using BigInt = boost::multiprecision::cpp_int;

/// x^e as an exact integer, no modulus.
inline BigInt int_pow(BigInt x, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

/// Canonical representative of a in [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

/// a^e mod m (m >= 1, e >= 0).
inline BigInt pow_mod(const BigInt& a, const BigInt& e, const BigInt& m) {
    if (e < 0) fail(errc::out_of_range, "negative exponent");
    if (m == 1) return 0;
    return boost::multiprecision::powm(mod_floor(a, m), e, m);
}

/// Inverse of a mod m; requires gcd(a, m) = 1.
inline BigInt inv_mod(const BigInt& a, const BigInt& m) {
    BigInt r0 = m, r1 = mod_floor(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) fail(errc::not_a_unit, "value not invertible for this modulus");
    return mod_floor(s0, m);
}

} // namespace zpk
