#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zpk/bigint.hpp"
#include "zpk/residue.hpp"

namespace zpk {

/// Fixed-width base-p digit vector. Stored least-significant-first so that
/// index i carries weight p^i; rendering flips to most-significant-first.
struct DigitString {
    std::vector<std::uint32_t> digits;
    std::uint64_t base = 0;

    std::size_t width() const noexcept { return digits.size(); }
};

/// Low `width` base-p digits of n (i.e. n mod p^width, zero-padded).
DigitString to_digits(const BigInt& n, std::uint64_t base, std::size_t width);

/// Digits of a residue; width must be >= k.
DigitString to_digits(const Residue& r, std::size_t width);

/// Value of the digit vector; rejects digits >= base.
BigInt from_digits(const DigitString& d);

/// Most-significant-first text. Bases <= 36 use 0-9a-z; larger bases join
/// decimal digits with '.'.
std::string render(const DigitString& d);

/// Parse the render() format back into a DigitString.
DigitString parse_digits(const std::string& text, std::uint64_t base);

/// Smallest digit index where the base-p expansions of x and y differ;
/// nullopt when x == y.
std::optional<std::size_t> first_mismatch_digit(const BigInt& x, const BigInt& y, std::uint64_t base);

/// Carry propagations in base-p schoolbook addition of a and b.
std::size_t carry_count_add(const BigInt& a, const BigInt& b, std::uint64_t base);

} // namespace zpk
