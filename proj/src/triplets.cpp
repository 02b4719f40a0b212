#include "zpk/triplets.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "zpk/error.hpp"
#include "zpk/numutil.hpp"
#include "zpk/units.hpp"

namespace zpk {

namespace {

// Division-by-zero guards per composition; the blanket exclusion
// {0, 1, -1 mod p} is exactly the union over the four kinds and keeps a
// seed safe for all of them.
void require_dfs_domain(DfsKind kind, const Residue& n) {
    const std::uint64_t p = n.modulus().p();
    if (!n.is_unit()) fail(errc::precondition, "dfs needs a unit (n = 0 mod p excluded)");
    const BigInt r = n.value() % p;
    if (kind == DfsKind::SCI && r == p - 1)
        fail(errc::precondition, "SCI is undefined at n = -1 mod p");
    if (kind == DfsKind::CSI && r == 1)
        fail(errc::precondition, "CSI is undefined at n = 1 mod p");
}

Residue one(const Modulus& m) { return Residue(1, m); }

TripletKind classify(const Residue& a, const Residue& b, const Residue& c) {
    const Modulus& mod = a.modulus();
    if (a.value() == 1 || b.value() == 1 || c.value() == 1) return TripletKind::degenerate;
    if (a == b && b == c) return TripletKind::cubic_root;
    if (mod.k() >= 2 && is_pth_power(a) && is_pth_power(b) && is_pth_power(c))
        return TripletKind::pth_power;
    return TripletKind::generic;
}

void validate_triplet(const Residue& a, const Residue& b, const Residue& c) {
    const Modulus& mod = a.modulus();
    Residue minus_one(-1, mod);
    if (a + b.inverse() != minus_one || b + c.inverse() != minus_one ||
        c + a.inverse() != minus_one || (a * b * c) != one(mod))
        fail(errc::precondition, "triplet conditions violated");
}

} // namespace

std::string to_string(TripletKind k) {
    switch (k) {
        case TripletKind::generic: return "generic";
        case TripletKind::pth_power: return "pth_power";
        case TripletKind::cubic_root: return "cubic_root";
        case TripletKind::degenerate: return "degenerate";
    }
    return "?";
}

Residue dfs_apply(DfsKind kind, const Residue& n) {
    require_dfs_domain(kind, n);
    const Modulus& m = n.modulus();
    switch (kind) {
        case DfsKind::ICS: return one(m) - n.inverse();
        case DfsKind::SCI: return -(n + one(m)).inverse();
        case DfsKind::CSI: return (one(m) - n).inverse();
        case DfsKind::ISC: return -(one(m) + n.inverse());
    }
    fail(errc::out_of_range, "bad dfs kind");
}

Triplet generate_triplet(const Residue& n) {
    const Modulus& mod = n.modulus();
    if (n.is_zero() || !n.is_unit()) fail(errc::not_a_unit, "triplet seed must be a unit");
    if ((n.value() + 1) % mod.p() == 0)
        fail(errc::precondition, "excluded orbit: n = -1 mod p is not invertible under SCI");
    auto sci = [&](const Residue& x) { return -(x + one(mod)).inverse(); };
    Residue a = n;
    Residue b = sci(a);  // b = -(a+1)^{-1}, so a + b^{-1} = -1
    Residue c = sci(b);  // b is never = -1 mod p here: that would need a = 0
    validate_triplet(a, b, c);
    return {a, b, c, classify(a, b, c)};
}

std::vector<Residue> find_cubic_roots(const Modulus& mod) {
    std::vector<Residue> out;
    const std::uint64_t p = mod.p();
    if (p % 6 != 1) return out;
    // Roots mod p are the two primitive cube roots of unity g^{(p-1)/3}.
    const std::uint64_t g = num::smallest_primitive_root(p);
    std::uint64_t r1 = num::pow_mod(g, (p - 1) / 3, p);
    for (std::uint64_t r0 : {r1, num::mul_mod(r1, r1, p)}) {
        // Lift x^2 + x + 1 = 0 digit by digit; f'(x) = 2x + 1 is a unit here.
        BigInt x = r0;
        BigInt pm = p;
        for (unsigned m = 1; m < mod.k(); ++m) {
            BigInt f = x * x + x + 1;
            BigInt fprime = 2 * x + 1;
            BigInt t = mod_floor(-(f / pm) * inv_mod(fprime, BigInt(p)), BigInt(p));
            x += t * pm;
            pm *= p;
        }
        out.emplace_back(x, mod);
    }
    std::sort(out.begin(), out.end(),
              [](const Residue& a, const Residue& b) { return a.value() < b.value(); });
    for (const Residue& r : out) {
        if ((r * r + r + one(mod)) != Residue(0, mod) || r.pow(3) != one(mod) || r.value() == 1)
            fail(errc::precondition, "cubic root lift failed");
    }
    return out;
}

namespace {

// u64 lane for the mod-p^2 searches: p^2 must fit in 63 bits.
struct SmallUnits {
    std::uint64_t p, pk;

    std::uint64_t inv(std::uint64_t a) const { return num::inv_mod(a, pk); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return num::mul_mod(a, b, pk); }
};

std::array<std::uint64_t, 3> rotate_min(std::array<std::uint64_t, 3> t) {
    std::array<std::uint64_t, 3> best = t;
    for (int i = 0; i < 2; ++i) {
        t = {t[1], t[2], t[0]};
        best = std::min(best, t);
    }
    return best;
}

// Canonical form over the 6 equivalent sequences: 3 rotations of (a,b,c)
// and 3 rotations of the inverse triplet (a^{-1}, c^{-1}, b^{-1}). The two
// orientations carry the same three inverse-pairs, which is what Table 2
// counts.
std::array<std::uint64_t, 3> canonical_triplet(const SmallUnits& R, std::array<std::uint64_t, 3> t) {
    std::array<std::uint64_t, 3> inv = {R.inv(t[0]), R.inv(t[2]), R.inv(t[1])};
    return std::min(rotate_min(t), rotate_min(inv));
}

} // namespace

TripletReport find_pth_triplets(std::uint64_t p) {
    if (p < 3 || !num::is_prime(p)) fail(errc::out_of_range, "p must be an odd prime");
    TripletReport rep;
    rep.p = p;
    rep.generator = num::smallest_generator_mod_pk(p, 2);
    const SmallUnits R{p, p * p};
    const std::uint64_t pk = R.pk;

    // Core A_2 = F_2: indexable by residue mod p since A(n) = n mod p.
    std::vector<std::uint64_t> core_by_index(p, 0);  // [n] -> A(n), n in [1, p-1]
    for (std::uint64_t n = 1; n < p; ++n) core_by_index[n] = num::pow_mod(n, p, pk);
    auto in_core = [&](std::uint64_t x) { return core_by_index[x % p] == x; };

    std::vector<std::array<std::uint64_t, 3>> seen;
    for (std::uint64_t n = 1; n < p; ++n) {
        const std::uint64_t a = core_by_index[n];
        if (a == 1) continue;
        const std::uint64_t t = (pk - 1 - a) % pk;  // -1 - a
        if (t % p == 0) continue;                   // a = -1 mod p: excluded orbit
        const std::uint64_t b = R.inv(t);           // a + b^{-1} = -1
        if (!in_core(b)) continue;
        const std::uint64_t c = R.inv(R.mul(a, b)); // abc = 1
        if (!in_core(c)) continue;
        // the remaining two equivalences
        if ((b + R.inv(c)) % pk != pk - 1) continue;
        if ((c + R.inv(a)) % pk != pk - 1) continue;

        auto canon = canonical_triplet(R, {a, b, c});
        if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
        seen.push_back(canon);

        if (a == b && b == c) {
            rep.cubic_roots.push_back({std::min(a, R.inv(a)), std::max(a, R.inv(a))});
            continue;
        }
        TripletTriple out;
        out.r = canon;
        out.kind = (canon[0] == 1 || canon[1] == 1 || canon[2] == 1) ? TripletKind::degenerate
                                                                     : TripletKind::pth_power;
        rep.pth_triplets.push_back(out);
    }
    std::sort(rep.pth_triplets.begin(), rep.pth_triplets.end(),
              [](const TripletTriple& x, const TripletTriple& y) { return x.r < y.r; });
    std::sort(rep.cubic_roots.begin(), rep.cubic_roots.end());
    return rep;
}

std::vector<TripletReport> scan_primes(std::uint64_t limit, unsigned threads) {
    if (limit < 3) fail(errc::out_of_range, "scan limit must be >= 3");
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p : num::primes_below(limit))
        if (p >= 3) ps.push_back(p);

    std::vector<TripletReport> out(ps.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (ps.size() < threads) threads = static_cast<unsigned>(std::max<std::size_t>(ps.size(), 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < ps.size(); ++i) out[i] = find_pth_triplets(ps[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < ps.size(); i = next.fetch_add(1))
                    out[i] = find_pth_triplets(ps[i]);
            });
        }
        for (auto& th : pool) th.join();
    }
    return out;  // ps ascending, so reports are ascending by p
}

std::pair<Residue, Residue> normalize_powersum(const Residue& x, const Residue& y, const Residue& z) {
    const Modulus& mod = x.modulus();
    if (!x.is_unit() || !y.is_unit() || !z.is_unit())
        fail(errc::not_a_unit, "normation needs unit operands");
    const BigInt p(mod.p());
    if (x.pow(p) + y.pow(p) != z.pow(p))
        fail(errc::precondition, "x^p + y^p = z^p does not hold");
    Residue scale = (-z).inverse();
    return {x * scale, y * scale};
}

} // namespace zpk
