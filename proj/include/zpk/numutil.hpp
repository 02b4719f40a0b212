#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Machine-word number theory used by the prime scans. Everything here is
// exact for 64-bit inputs; intermediate products go through __int128.
namespace zpk::num {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(std::uint64_t n);

/// Ascending primes < limit (simple sieve).
std::vector<std::uint64_t> primes_below(std::uint64_t limit);

/// Trial-division factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Smallest primitive root mod an odd prime p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Smallest unit generating the full group mod p^k (p^k must fit u64).
std::uint64_t smallest_generator_mod_pk(std::uint64_t p, unsigned k);

} // namespace zpk::num
