#include "zpk/fermat.hpp"

#include <algorithm>

#include "zpk/digits.hpp"
#include "zpk/error.hpp"
#include "zpk/numutil.hpp"
#include "zpk/units.hpp"

namespace zpk {

bool eds_check(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus()) fail(errc::modulus_mismatch, "eds operands differ in modulus");
    const BigInt p(a.modulus().p());
    return (a + b).pow(p) == a.pow(p) + b.pow(p);
}

PowerSumWitness powersum_witness(const Residue& x, const Residue& y, const Residue& z) {
    const Modulus& mod = x.modulus();
    if (y.modulus() != mod || z.modulus() != mod)
        fail(errc::modulus_mismatch, "witness operands differ in modulus");
    if (!x.is_unit() || !y.is_unit() || !z.is_unit())
        fail(errc::not_a_unit, "witness needs unit operands");
    const BigInt p(mod.p());
    if (x.pow(p) + y.pow(p) != z.pow(p))
        fail(errc::precondition, "x^p + y^p = z^p mod p^k does not hold");

    PowerSumWitness w;
    w.p = mod.p();
    w.k = mod.k();
    w.x = x.value();
    w.y = y.value();
    w.z = z.value();
    w.X = x.value();
    w.Y = y.value();
    w.Z = z.value();
    w.lhs = int_pow(w.X, w.p) + int_pow(w.Y, w.p);
    w.rhs = int_pow(w.Z, w.p);
    auto idx = first_mismatch_digit(w.lhs, w.rhs, w.p);
    if (!idx) fail(errc::precondition, "0-extensions produced an integer equality");
    w.mismatch_index = *idx;
    return w;
}

std::optional<Residue> core_increment_root(std::uint64_t n, const Modulus& mod) {
    if (mod.k() < 2) fail(errc::precondition, "increment root needs k >= 2");
    if (n < 1 || n > mod.p() - 2) fail(errc::out_of_range, "n must be in [1, p-2]");
    Residue d = core_element(n + 1, mod) - core_element(n, mod);
    if (!d.is_unit() || !is_pth_power(d)) return std::nullopt;
    return pth_root(d);
}

std::vector<std::pair<Residue, Residue>> hensel_extensions(const Residue& a, const Residue& b,
                                                           unsigned k) {
    const Modulus& mod2 = a.modulus();
    if (b.modulus() != mod2) fail(errc::modulus_mismatch, "extension pair differs in modulus");
    if (mod2.k() != 2) fail(errc::precondition, "inputs must be residues mod p^2");
    if (k < 2) fail(errc::precondition, "target precision must be >= 2");
    const std::uint64_t p = mod2.p();
    const BigInt p2 = mod2.value();
    const BigInt alpha = a.pow(p).value();
    const BigInt beta = b.pow(p).value();
    if (mod_floor(alpha + beta + 1, p2) != 0)
        fail(errc::precondition, "a^p + b^p = -1 mod p^2 does not hold");

    Modulus modk = make_modulus(p, k);
    const BigInt count = int_pow(p, k - 2);
    std::vector<std::pair<Residue, Residue>> out;
    for (BigInt m = 0; m < count; ++m) {
        Residue ax(alpha + m * p2, modk);
        if (!is_pth_power(ax)) continue;  // never skipped: extensions of F_2 lie in F_k
        Residue bx = Residue(-1, modk) - ax;
        if (mod_floor(bx.value(), p2) != beta || !is_pth_power(bx)) continue;
        out.emplace_back(ax, bx);
    }
    return out;
}

ExpansionPair triple_precision_expansion(const Residue& x, const BigInt& u) {
    const Modulus& mod = x.modulus();
    if (!x.is_unit()) fail(errc::not_a_unit, "expansion base must be a unit");
    if (u < 0 || u >= mod.value()) fail(errc::out_of_range, "u must be in [0, p^k)");
    const std::uint64_t p = mod.p();
    const unsigned k = mod.k();
    const BigInt P = int_pow(p, 3 * k + 1);
    const BigInt h((p - 1) / 2);
    const BigInt xv = x.value();

    ExpansionPair e;
    e.truncated = mod_floor(u * u * pow_mod(xv, p - 2, P) % P * h % P * int_pow(p, 2 * k + 1) +
                                u * pow_mod(xv, p - 1, P) % P * int_pow(p, k + 1) +
                                pow_mod(xv, p, P),
                            P);
    e.direct = pow_mod(u * mod.value() + xv, p, P);
    return e;
}

Case2Report case2_scan(std::uint64_t p, std::uint64_t bound) {
    if (!num::is_prime(p) || p < 3) fail(errc::out_of_range, "p must be an odd prime");
    if (bound < 1) fail(errc::out_of_range, "bound must be >= 1");
    Case2Report rep;
    rep.p = p;
    rep.bound = bound;

    std::vector<BigInt> pows(bound + 1);
    for (std::uint64_t x = 0; x <= bound; ++x) pows[x] = int_pow(x, p);
    std::vector<BigInt> rhs;  // (cp)^p for c = 1..bound, ascending
    for (std::uint64_t c = 1; c <= bound; ++c) rhs.push_back(int_pow(BigInt(c) * p, p));
    auto match_c = [&](const BigInt& v) -> std::uint64_t {
        auto it = std::lower_bound(rhs.begin(), rhs.end(), v);
        if (it != rhs.end() && *it == v) return static_cast<std::uint64_t>(it - rhs.begin()) + 1;
        return 0;
    };

    for (std::uint64_t x = 1; x <= bound; ++x) {
        if (x % p == 0) continue;
        for (std::uint64_t y = 1; y <= bound; ++y) {
            if (y % p == 0) continue;
            if (std::uint64_t c = match_c(pows[x] + pows[y])) rep.hits.push_back({x, y, c});
            if (x != y) {
                if (std::uint64_t c = match_c(x > y ? pows[x] - pows[y] : pows[y] - pows[x]))
                    rep.hits.push_back({x, y, c});
            }
        }
    }

    // form (8): 0-extensions U of core A_p residues; U^p + U^p > U + U for
    // U > 1 (equality at U = 1), and U^p - U^p = 0 identically.
    Modulus modp = make_modulus(p, static_cast<unsigned>(p));
    rep.form8_sum_strict = true;
    rep.form8_diff_zero = true;
    for (std::uint64_t n = 1; n < p; ++n) {
        BigInt U = core_element(n, modp).value();
        BigInt Up = int_pow(U, p);
        if (U == 1) rep.form8_sum_equal_at_one = (Up + Up == U + U);
        else if (Up + Up <= U + U) rep.form8_sum_strict = false;
        if (Up - Up != 0) rep.form8_diff_zero = false;
    }
    return rep;
}

std::vector<std::uint64_t> wieferich_scan(std::uint64_t limit) {
    if (limit > 10'000'000) fail(errc::out_of_range, "wieferich scan capped at 10^7");
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : num::primes_below(limit)) {
        if (p == 2) continue;
        if (num::pow_mod(2, p, p * p) == 2) out.push_back(p);
    }
    return out;
}

Table1 table1_generate(std::uint64_t p, unsigned width, unsigned rows) {
    Modulus mod = make_modulus(p, width);
    const BigInt P = mod.value();
    Table1 t;
    t.p = p;
    t.width = width;
    t.rows.reserve(rows);
    const BigInt bp(p);
    auto F = [&](std::uint64_t n) { return pow_mod(n, bp, P); };
    for (std::uint64_t n = 0; n < rows; ++n) {
        Table1Row row;
        row.n = n;
        row.n_digits = render(to_digits(BigInt(n), p, 4));
        BigInt f = F(n);
        row.f = render(to_digits(f, p, width));
        row.pd0 = render(to_digits(mod_floor(F(n + 1) - f, P), p, width));
        row.pd1 = render(to_digits(mod_floor(F(n + p) - f, P), p, width));
        row.pd2 = render(to_digits(mod_floor(F(n + p * p) - f, P), p, width));
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace zpk
