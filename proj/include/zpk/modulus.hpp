#pragma once

#include <cstdint>

#include "zpk/bigint.hpp"

namespace zpk {

/// Validated prime-power context p^k (odd prime p, k >= 1). Every Residue
/// carries one; two contexts are interchangeable iff (p, k) match.
class Modulus {
public:
    Modulus(std::uint64_t p, unsigned k);

    std::uint64_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    const BigInt& value() const noexcept { return pk_; }

    /// |G_k| = (p-1) p^{k-1}
    BigInt unit_group_order() const { return BigInt(p_ - 1) * int_pow(p_, k_ - 1); }

    /// |B_k| = p^{k-1}
    BigInt extension_group_order() const { return int_pow(p_, k_ - 1); }

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
        return a.p_ == b.p_ && a.k_ == b.k_;
    }
    friend bool operator!=(const Modulus& a, const Modulus& b) noexcept { return !(a == b); }

private:
    std::uint64_t p_;
    unsigned k_;
    BigInt pk_;
};

/// Validates p (odd prime, deterministic test below 2^64) and k >= 1.
Modulus make_modulus(std::uint64_t p, unsigned k);

} // namespace zpk
