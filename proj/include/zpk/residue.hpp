#pragma once

#include "zpk/bigint.hpp"
#include "zpk/modulus.hpp"

namespace zpk {

/// Canonical value in [0, p^k) together with its Modulus. Immutable after
/// construction; every operation is a pure function, so residues can be
/// shared across threads freely.
class Residue {
public:
    /// Reduces value into [0, p^k); negative inputs wrap to the complement.
    Residue(BigInt value, Modulus mod);

    const BigInt& value() const noexcept { return val_; }
    const Modulus& modulus() const noexcept { return mod_; }

    bool is_zero() const { return val_ == 0; }
    bool is_unit() const { return val_ % mod_.p() != 0; }

    /// Complement -n, the unique r with n + r = 0.
    Residue operator-() const;

    /// n^{-1} in G_k; errc::not_a_unit when p divides n.
    Residue inverse() const;

    /// Square-and-multiply power, exponent >= 0.
    Residue pow(const BigInt& e) const;

    /// The unique r with n + r = -1. For unit pairs the base-p digits of n
    /// and r sum positionwise to p-1 with no carry.
    Residue one_complement() const;

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    friend bool operator==(const Residue& a, const Residue& b);
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    BigInt val_;
    Modulus mod_;
};

/// Shorthand for Residue(v, m) used all over the tests.
inline Residue res(BigInt v, const Modulus& m) { return Residue(std::move(v), m); }

} // namespace zpk
