#include "zpk/units.hpp"

#include <algorithm>
#include <map>

#include "zpk/error.hpp"
#include "zpk/numutil.hpp"

namespace zpk {

namespace {

void require_unit(const Residue& n, const char* what) {
    if (!n.is_unit()) fail(errc::not_a_unit, what);
}

// (prime, exponent) factorization of |G_k| = (p-1) p^{k-1}
std::vector<std::pair<std::uint64_t, unsigned>> group_order_factors(const Modulus& mod) {
    auto f = num::factorize(mod.p() - 1);
    if (mod.k() > 1) f.emplace_back(mod.p(), mod.k() - 1);
    return f;
}

} // namespace

BigInt discrete_log(const Residue& base, const Residue& h, const BigInt& order) {
    const Modulus& mod = base.modulus();
    if (order <= (1 << 20)) {
        Residue x(1, mod);
        for (BigInt i = 0; i < order; ++i) {
            if (x == h) return i;
            x = x * base;
        }
        fail(errc::precondition, "element not in the subgroup generated by base");
    }
    const BigInt order_m1 = order - 1;
    BigInt m = boost::multiprecision::sqrt(order_m1) + 1;  // ceil(sqrt(order))
    std::map<BigInt, BigInt> baby;
    Residue x(1, mod);
    for (BigInt j = 0; j < m; ++j) {
        baby.emplace(x.value(), j);
        x = x * base;
    }
    Residue step = base.pow(m).inverse();
    Residue gamma = h;
    for (BigInt i = 0; i < m; ++i) {
        auto it = baby.find(gamma.value());
        if (it != baby.end()) return mod_floor(i * m + it->second, order);
        gamma = gamma * step;
    }
    fail(errc::precondition, "element not in the subgroup generated by base");
}

SemigroupDecomposition semigroup_decompose(const Residue& n) {
    const Modulus& mod = n.modulus();
    if (n.is_zero()) return {std::nullopt, mod.k()};
    BigInt v = n.value();
    unsigned e = 0;
    while (v % mod.p() == 0) {
        v /= mod.p();
        ++e;
    }
    return {Residue(v, make_modulus(mod.p(), mod.k() - e)), e};
}

Residue core_element(std::uint64_t n, const Modulus& mod) {
    if (n < 1 || n > mod.p() - 1) fail(errc::out_of_range, "core index must be in [1, p-1]");
    return Residue(n, mod).pow(mod.extension_group_order());
}

CoreTable::CoreTable(Modulus mod) : mod_(std::move(mod)) {
    entries_.reserve(mod_.p() - 1);
    for (std::uint64_t n = 1; n < mod_.p(); ++n) entries_.push_back(core_element(n, mod_));
}

const Residue& CoreTable::at(std::uint64_t n) const {
    if (n < 1 || n > mod_.p() - 1) fail(errc::out_of_range, "core index must be in [1, p-1]");
    return entries_[n - 1];
}

bool CoreTable::contains(const Residue& r) const {
    if (r.modulus() != mod_) fail(errc::modulus_mismatch, "core lookup with foreign modulus");
    if (!r.is_unit()) return false;
    // A_k(n) = n mod p, so one reduction picks the only candidate
    return entries_[static_cast<std::uint64_t>(r.value() % mod_.p()) - 1] == r;
}

BigInt order_of(const Residue& n) {
    require_unit(n, "order is defined for units only");
    const Modulus& mod = n.modulus();
    BigInt order = mod.unit_group_order();
    for (const auto& [q, e] : group_order_factors(mod)) {
        for (unsigned i = 0; i < e; ++i) {
            BigInt reduced = order / q;
            if (n.pow(reduced).value() == 1) order = reduced;
            else break;
        }
    }
    return order;
}

Residue find_generator(const Modulus& mod) {
    const auto factors = group_order_factors(mod);
    const BigInt order = mod.unit_group_order();
    for (BigInt g = 2; g < mod.value(); ++g) {
        if (g % mod.p() == 0) continue;
        Residue cand(g, mod);
        bool full = true;
        for (const auto& [q, e] : factors) {
            (void)e;
            if (cand.pow(order / q).value() == 1) {
                full = false;
                break;
            }
        }
        if (full) return cand;
    }
    fail(errc::out_of_range, "no generator found");
}

Residue core_generator(const Modulus& mod) {
    return core_element(num::smallest_primitive_root(mod.p()), mod);
}

UnitExponents decompose_unit(const Residue& n) {
    require_unit(n, "unit decomposition needs a unit");
    const Modulus& mod = n.modulus();
    const std::uint64_t p = mod.p();
    // Core exponent from the mod-p image: g_A reduces to the primitive root.
    const std::uint64_t g1 = num::smallest_primitive_root(p);
    Modulus mod1 = make_modulus(p, 1);
    BigInt i = discrete_log(Residue(g1, mod1), Residue(n.value(), mod1), BigInt(p - 1));
    // Peel the core part off; the rest lives in B_k = (p+1)^*.
    Residue b = n * core_generator(mod).pow(i).inverse();
    BigInt j = discrete_log(Residue(p + 1, mod), b, mod.extension_group_order());
    return {i, j};
}

Residue unit_from_exponents(const UnitExponents& e, const Modulus& mod) {
    return core_generator(mod).pow(e.i) * Residue(mod.p() + 1, mod).pow(e.j);
}

std::vector<Residue> subgroup_of_order(const BigInt& d, const Modulus& mod) {
    const BigInt order = mod.unit_group_order();
    if (d < 1 || order % d != 0) fail(errc::out_of_range, "d must divide |G_k|");
    Residue h = find_generator(mod).pow(order / d);
    std::vector<Residue> out;
    out.reserve(static_cast<std::size_t>(d));
    Residue x(1, mod);
    for (BigInt t = 0; t < d; ++t) {
        out.push_back(x);
        x = x * h;
    }
    std::sort(out.begin(), out.end(),
              [](const Residue& a, const Residue& b) { return a.value() < b.value(); });
    return out;
}

Residue subgroup_sum(const std::vector<Residue>& subgroup) {
    if (subgroup.empty()) fail(errc::precondition, "sum of an empty subgroup");
    Residue acc(0, subgroup.front().modulus());
    for (const Residue& r : subgroup) acc = acc + r;
    return acc;
}

bool is_pth_power(const Residue& n) {
    require_unit(n, "F_k membership is defined for units");
    const Modulus& mod = n.modulus();
    if (mod.k() < 2) fail(errc::precondition, "F_k membership needs k >= 2");
    return n.pow(mod.unit_group_order() / mod.p()).value() == 1;
}

Residue pth_root(const Residue& n) {
    if (!is_pth_power(n)) fail(errc::no_root, "not a p-th power residue");
    const Modulus& mod = n.modulus();
    const std::uint64_t p = mod.p();
    UnitExponents e = decompose_unit(n);
    // r = g_A^{i/p} (p+1)^{j/p}: p is invertible mod p-1, and p | j exactly
    // when n is a member (checked above).
    BigInt ir = mod_floor(e.i * inv_mod(p, BigInt(p - 1)), BigInt(p - 1));
    BigInt jr = e.j / p;
    return unit_from_exponents({ir, jr}, mod);
}

BigInt core_function_at_precision(const BigInt& n, unsigned j, unsigned m, std::uint64_t p) {
    if (n < 0) fail(errc::out_of_range, "core function needs n >= 0");
    const BigInt pm = int_pow(p, m);
    return pow_mod(n, int_pow(p, j), pm);
}

BigInt core_increment(const BigInt& n, unsigned j, unsigned m, std::uint64_t p) {
    const BigInt pm = int_pow(p, m);
    return mod_floor(core_function_at_precision(n + 1, j, m, p) - core_function_at_precision(n, j, m, p), pm);
}

} // namespace zpk
