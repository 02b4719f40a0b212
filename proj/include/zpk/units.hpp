#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zpk/bigint.hpp"
#include "zpk/modulus.hpp"
#include "zpk/residue.hpp"

namespace zpk {

/// n = unit_part * p^e with unit_part coprime to p, taken mod p^{k-e}.
/// e == k exactly for n == 0, in which case unit_part is absent.
struct SemigroupDecomposition {
    std::optional<Residue> unit_part;
    unsigned e = 0;
};

SemigroupDecomposition semigroup_decompose(const Residue& n);

/// A_k(n) = n^{p^{k-1}} mod p^k for 1 <= n <= p-1.
Residue core_element(std::uint64_t n, const Modulus& mod);

/// The p-1 core entries A_k(1) .. A_k(p-1). Each entry is a fixed point of
/// x -> x^p and reduces to its index mod p.
class CoreTable {
public:
    explicit CoreTable(Modulus mod);

    const Modulus& modulus() const noexcept { return mod_; }
    const Residue& at(std::uint64_t n) const;  // n in [1, p-1]
    const std::vector<Residue>& entries() const noexcept { return entries_; }
    bool contains(const Residue& r) const;
    BigInt q() const { return mod_.extension_group_order(); }

private:
    Modulus mod_;
    std::vector<Residue> entries_;
};

inline CoreTable core_table(const Modulus& mod) { return CoreTable(mod); }

/// Multiplicative order of a unit, via the factored group order.
BigInt order_of(const Residue& n);

/// Smallest unit whose order is the full (p-1) p^{k-1}.
Residue find_generator(const Modulus& mod);

/// Core component generator g_A: the core lift of the smallest primitive
/// root mod p. Generates A_k.
Residue core_generator(const Modulus& mod);

/// Cor 1.3 coordinates of a unit: n = g_A^i (p+1)^j with i < p-1,
/// j < p^{k-1}, both unique.
struct UnitExponents {
    BigInt i, j;
};

UnitExponents decompose_unit(const Residue& n);
Residue unit_from_exponents(const UnitExponents& e, const Modulus& mod);

/// Discrete log of value in the cyclic group generated by base (order of
/// base given). Brute force at or below 2^20 elements, BSGS above.
BigInt discrete_log(const Residue& base, const Residue& value, const BigInt& order);

/// The unique subgroup of order d of the cyclic group G_k (d must divide
/// |G_k|), listed in ascending residue order.
std::vector<Residue> subgroup_of_order(const BigInt& d, const Modulus& mod);

Residue subgroup_sum(const std::vector<Residue>& subgroup);

/// Membership in F_k = {n^p}, the index-p subgroup of G_k (k >= 2).
bool is_pth_power(const Residue& n);

/// Some r with r^p = n, via exponent division in (i, j) coordinates.
/// errc::no_root when n is not in F_k.
Residue pth_root(const Residue& n);

/// n^{p^j} mod p^m for any integer n >= 0 (the core function extended to
/// precision m), and its increment d(n) = (n+1)^{p^j} - n^{p^j} mod p^m.
BigInt core_function_at_precision(const BigInt& n, unsigned j, unsigned m, std::uint64_t p);
BigInt core_increment(const BigInt& n, unsigned j, unsigned m, std::uint64_t p);

} // namespace zpk
