#include "zpk/numutil.hpp"

#include "zpk/error.hpp"

namespace zpk::num {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = m == 1 ? 0 : 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    // extended gcd on signed 128-bit; m is desk-scale so this is plenty
    __int128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) fail(errc::not_a_unit, "value not invertible for this modulus");
    s0 %= static_cast<__int128>(m);
    if (s0 < 0) s0 += m;
    return static_cast<std::uint64_t>(s0);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set proven sufficient below 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit <= 2) return out;
    std::vector<bool> sieve(limit, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i < limit; ++i) {
        if (!sieve[i]) continue;
        for (std::uint64_t j = i * i; j < limit; j += i) sieve[j] = false;
    }
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (sieve[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

bool generates_full_group(std::uint64_t g, std::uint64_t order, std::uint64_t m,
                          const std::vector<std::pair<std::uint64_t, unsigned>>& order_factors) {
    for (const auto& [q, e] : order_factors) {
        (void)e;
        if (pow_mod(g, order / q, m) == 1) return false;
    }
    return true;
}

} // namespace

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    const auto factors = factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        if (generates_full_group(g, p - 1, p, factors)) return g;
    }
    fail(errc::out_of_range, "no primitive root found (p not an odd prime?)");
}

std::uint64_t smallest_generator_mod_pk(std::uint64_t p, unsigned k) {
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    std::uint64_t order = (p - 1) * (pk / p);
    auto factors = factorize(p - 1);
    if (k > 1) factors.emplace_back(p, k - 1);
    for (std::uint64_t g = 2; g < pk; ++g) {
        if (g % p == 0) continue;
        if (generates_full_group(g, order, pk, factors)) return g;
    }
    fail(errc::out_of_range, "no generator found");
}

} // namespace zpk::num
