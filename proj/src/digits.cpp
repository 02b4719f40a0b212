#include "zpk/digits.hpp"

#include <algorithm>

#include "zpk/error.hpp"

namespace zpk {

namespace {

void check_base(std::uint64_t base) {
    if (base < 2) fail(errc::out_of_range, "digit base must be >= 2");
}

char digit_char(std::uint32_t d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

std::uint32_t char_digit(char c) {
    if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 10);
    fail(errc::bad_digit, "unrecognized digit character");
}

} // namespace

DigitString to_digits(const BigInt& n, std::uint64_t base, std::size_t width) {
    check_base(base);
    if (width < 1) fail(errc::out_of_range, "digit width must be >= 1");
    if (n < 0) fail(errc::out_of_range, "digit conversion needs n >= 0");
    DigitString out;
    out.base = base;
    out.digits.reserve(width);
    BigInt v = n;
    for (std::size_t i = 0; i < width; ++i) {
        out.digits.push_back(static_cast<std::uint32_t>(v % base));
        v /= base;
    }
    return out;
}

DigitString to_digits(const Residue& r, std::size_t width) {
    if (width < r.modulus().k()) fail(errc::out_of_range, "width must be >= k for residues");
    return to_digits(r.value(), r.modulus().p(), width);
}

BigInt from_digits(const DigitString& d) {
    check_base(d.base);
    BigInt v = 0;
    for (std::size_t i = d.digits.size(); i-- > 0;) {
        if (d.digits[i] >= d.base) fail(errc::bad_digit, "digit >= base");
        v = v * d.base + d.digits[i];
    }
    return v;
}

std::string render(const DigitString& d) {
    std::string out;
    if (d.base <= 36) {
        out.reserve(d.digits.size());
        for (std::size_t i = d.digits.size(); i-- > 0;) out.push_back(digit_char(d.digits[i]));
    } else {
        for (std::size_t i = d.digits.size(); i-- > 0;) {
            out += std::to_string(d.digits[i]);
            if (i) out.push_back('.');
        }
    }
    return out;
}

DigitString parse_digits(const std::string& text, std::uint64_t base) {
    check_base(base);
    DigitString out;
    out.base = base;
    if (base <= 36) {
        out.digits.reserve(text.size());
        for (std::size_t i = text.size(); i-- > 0;) {
            std::uint32_t d = char_digit(text[i]);
            if (d >= base) fail(errc::bad_digit, "digit >= base");
            out.digits.push_back(d);
        }
    } else {
        std::size_t start = 0;
        std::vector<std::uint32_t> msf;
        while (start <= text.size()) {
            std::size_t dot = text.find('.', start);
            std::string part = text.substr(start, dot == std::string::npos ? dot : dot - start);
            std::uint64_t d = std::stoull(part);
            if (d >= base) fail(errc::bad_digit, "digit >= base");
            msf.push_back(static_cast<std::uint32_t>(d));
            if (dot == std::string::npos) break;
            start = dot + 1;
        }
        out.digits.assign(msf.rbegin(), msf.rend());
    }
    return out;
}

std::optional<std::size_t> first_mismatch_digit(const BigInt& x, const BigInt& y, std::uint64_t base) {
    check_base(base);
    if (x == y) return std::nullopt;
    BigInt a = x, b = y;
    std::size_t i = 0;
    while (true) {
        if (a % base != b % base) return i;
        a /= base;
        b /= base;
        ++i;
    }
}

std::size_t carry_count_add(const BigInt& a, const BigInt& b, std::uint64_t base) {
    check_base(base);
    if (a < 0 || b < 0) fail(errc::out_of_range, "carry count needs non-negative inputs");
    BigInt x = a, y = b;
    std::size_t carries = 0;
    std::uint32_t carry = 0;
    while (x != 0 || y != 0 || carry != 0) {
        BigInt s = x % base + y % base + carry;
        carry = s >= base ? 1 : 0;
        carries += carry;
        x /= base;
        y /= base;
    }
    return carries;
}

} // namespace zpk
