#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zpk/bigint.hpp"
#include "zpk/modulus.hpp"
#include "zpk/residue.hpp"

namespace zpk {

/// EDS ("exponent distributes over a sum"): (a+b)^p = a^p + b^p mod p^k.
bool eds_check(const Residue& a, const Residue& b);

/// Exact integer record of a powersum equivalence x^p + y^p = z^p mod p^k:
/// 0-extensions X, Y, Z, the exact p-th powers, and the first base-p digit
/// where X^p + Y^p and Z^p disagree (always >= k; the two are never equal).
struct PowerSumWitness {
    std::uint64_t p = 0;
    unsigned k = 0;
    BigInt x, y, z;       // the residues
    BigInt X, Y, Z;       // 0-extensions (same values, as plain integers)
    BigInt lhs, rhs;      // X^p + Y^p and Z^p, exact
    std::size_t mismatch_index = 0;
};

PowerSumWitness powersum_witness(const Residue& x, const Residue& y, const Residue& z);

/// Tests whether the core increment A(n+1) - A(n) mod p^k is a p-th power
/// residue; returns a root r_n (r_n = 1 mod p) when it is. 1 <= n <= p-2,
/// k >= 2.
std::optional<Residue> core_increment_root(std::uint64_t n, const Modulus& mod);

/// All pairs (a', b') in F_k x F_k with a' = a^p, b' = b^p mod p^2 and
/// a' + b' = -1 mod p^k, for a normed root a^p + b^p = -1 mod p^2.
/// Exactly p^{k-2} pairs exist.
std::vector<std::pair<Residue, Residue>> hensel_extensions(const Residue& a, const Residue& b,
                                                           unsigned k);

/// Both sides of the quadratic binomial truncation of (u p^k + x)^p at
/// precision p^{3k+1}: truncated = u^2 x^{p-2} h p^{2k+1} + u x^{p-1} p^{k+1} + x^p
/// with h = (p-1)/2, and the directly computed power.
struct ExpansionPair {
    BigInt truncated, direct;
};

ExpansionPair triple_precision_expansion(const Residue& x, const BigInt& u);

/// Exhaustive search for x^p +- y^p = (cp)^p with x, y coprime to p and
/// x, y, c <= bound, plus the form-(8) instance facts for the core mod p^p.
struct Case2Report {
    std::uint64_t p = 0;
    std::uint64_t bound = 0;
    std::vector<std::array<std::uint64_t, 3>> hits;  // (x, y, c); expected empty
    bool form8_sum_strict = false;  // U^p + U^p > U + U for every core U > 1
    bool form8_sum_equal_at_one = false;  // equality at U = 1
    bool form8_diff_zero = false;   // U^p - U^p = 0 always
};

Case2Report case2_scan(std::uint64_t p, std::uint64_t bound);

/// Primes p < limit with 2^p = 2 mod p^2. Desk scale: limit <= 10^7.
std::vector<std::uint64_t> wieferich_scan(std::uint64_t limit);

/// One row of the digit table: n (4 digits), F(n) = n^p, and the periodic
/// differences PDi(n) = F(n + p^i) - F(n), i = 0, 1, 2, all mod p^width and
/// rendered most-significant-first.
struct Table1Row {
    std::uint64_t n = 0;
    std::string n_digits, f, pd0, pd1, pd2;
};

struct Table1 {
    std::uint64_t p = 0;
    unsigned width = 0;
    std::vector<Table1Row> rows;
};

Table1 table1_generate(std::uint64_t p, unsigned width, unsigned rows);

} // namespace zpk
