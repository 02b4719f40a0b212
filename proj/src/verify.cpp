#include "zpk/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "zpk/digits.hpp"
#include "zpk/error.hpp"
#include "zpk/fermat.hpp"
#include "zpk/numutil.hpp"
#include "zpk/triplets.hpp"
#include "zpk/units.hpp"

namespace zpk {

namespace {

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : num::primes_below(x + 1))
        if (p >= 3) out.push_back(p);
    return out;
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// (p, k) pairs of the exhaustive tier with p^k bounded
std::vector<std::pair<std::uint64_t, unsigned>> small_moduli(std::uint64_t p_max, unsigned k_max,
                                                             std::uint64_t pk_cap) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p : odd_primes_upto(p_max))
        for (unsigned k = 1; k <= k_max; ++k)
            if (int_pow(p, k) <= pk_cap) out.emplace_back(p, k);
    return out;
}

std::string fmt_pk(std::uint64_t p, unsigned k) {
    std::ostringstream os;
    os << p << "^" << k;
    return os.str();
}

struct Failure {
    bool any = false;
    std::string first;
    std::size_t count = 0;

    void add(const std::string& what) {
        if (!any) first = what;
        any = true;
        ++count;
    }
};

CheckResult result(const std::string& name, const Failure& f, const std::string& scope) {
    if (!f.any) return {name, true, scope};
    std::ostringstream os;
    os << f.count << " failure(s), first: " << f.first << "; " << scope;
    return {name, false, os.str()};
}

// ---------------------------------------------------------------- suites --

CheckResult check_unit_counts(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    for (auto [p, k] : small_moduli(o.p_max, o.k_max, 100000)) {
        Modulus mod = make_modulus(p, k);
        const std::uint64_t pk = upow(p, k);
        std::uint64_t units = 0, fixed = 0;
        bool fixed_ok = true;
        CoreTable core(mod);
        for (std::uint64_t v = 0; v < pk; ++v) {
            if (v % p != 0) ++units;
            Residue r(v, mod);
            if (r.pow(p) == r) {
                ++fixed;
                if (v != 0 && !core.contains(r)) fixed_ok = false;
            }
        }
        ++cases;
        if (units != upow(p, k) - upow(p, k - 1))
            f.add("unit count off at " + fmt_pk(p, k));
        if (fixed != p || !fixed_ok)
            f.add("x^p fixed points are not core+0 at " + fmt_pk(p, k));
    }
    return result("unit count (p-1)p^(k-1); x->x^p fixed points = core and 0", f,
                  std::to_string(cases) + " moduli, p^k <= 1e5");
}

CheckResult check_subgroup_sums(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    auto run = [&](std::uint64_t p, unsigned k) {
        Modulus mod = make_modulus(p, k);
        const BigInt order = mod.unit_group_order();
        // core-divisor subgroups sum to zero (d > 1), B-subgroups sum to |S|
        for (std::uint64_t d = 1; d <= p - 1; ++d) {
            if ((p - 1) % d != 0) continue;
            auto s = subgroup_of_order(BigInt(d), mod);
            BigInt got = subgroup_sum(s).value();
            BigInt want = d == 1 ? BigInt(1) : BigInt(0);
            if (got != want) f.add("core subgroup d=" + std::to_string(d) + " at " + fmt_pk(p, k));
            ++cases;
        }
        for (unsigned s = 0; s < k; ++s) {
            BigInt d = int_pow(p, s);
            auto sub = subgroup_of_order(d, mod);
            if (subgroup_sum(sub).value() != d)
                f.add("B subgroup p^" + std::to_string(s) + " at " + fmt_pk(p, k));
            ++cases;
        }
        // mixed subgroups d_A * p^s with d_A > 1 also sum to zero
        for (std::uint64_t dA = 2; dA <= p - 1; ++dA) {
            if ((p - 1) % dA != 0) continue;
            for (unsigned s = 1; s < k; ++s) {
                BigInt d = BigInt(dA) * int_pow(p, s);
                if (order % d != 0) continue;
                if (int_pow(p, k) > 100000 && d > 4000) continue;  // keep the scan desk-sized
                auto sub = subgroup_of_order(d, mod);
                if (subgroup_sum(sub).value() != 0)
                    f.add("mixed subgroup d=" + d.str() + " at " + fmt_pk(p, k));
                ++cases;
            }
        }
    };
    for (auto [p, k] : small_moduli(o.p_max, o.k_max, 1000000)) run(p, k);
    for (std::uint64_t p : odd_primes_upto(o.sampled_p_max))
        if (p > o.p_max) run(p, 2);
    return result("subgroup sums: core d>1 -> 0, B -> |S|, mixed -> 0", f,
                  std::to_string(cases) + " subgroups");
}

CheckResult check_order_p_plus_1(const VerifyOptions&) {
    Failure f;
    std::size_t cases = 0;
    for (std::uint64_t p : odd_primes_upto(50)) {
        for (unsigned k = 1; k <= 5; ++k) {
            Modulus mod = make_modulus(p, k);
            if (order_of(Residue(p + 1, mod)) != mod.extension_group_order())
                f.add("order(p+1) at " + fmt_pk(p, k));
            ++cases;
        }
    }
    return result("order of p+1 is p^(k-1)", f, std::to_string(cases) + " cases, p <= 50, k <= 5");
}

CheckResult check_lemma_pm1(const VerifyOptions&) {
    Failure f;
    std::size_t cases = 0;
    for (std::uint64_t p : odd_primes_upto(50)) {
        for (unsigned m = 0; m <= 4; ++m) {
            const BigInt mod = int_pow(p, m + 2);
            const BigInt e = int_pow(p, m);
            if (pow_mod(BigInt(p) + 1, e, mod) != mod_floor(int_pow(p, m + 1) + 1, mod))
                f.add("(p+1)^(p^m) at p=" + std::to_string(p) + " m=" + std::to_string(m));
            if (pow_mod(BigInt(p) - 1, e, mod) != mod_floor(int_pow(p, m + 1) - 1, mod))
                f.add("(p-1)^(p^m) at p=" + std::to_string(p) + " m=" + std::to_string(m));
            cases += 2;
        }
    }
    return result("(p+-1)^(p^m) = p^(m+1) +- 1 mod p^(m+2)", f,
                  std::to_string(cases) + " cases, p <= 50, m <= 4");
}

CheckResult check_dfs_and_duplets(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    for (auto [p, k] : small_moduli(o.p_max, o.k_max, 10000)) {
        Modulus mod = make_modulus(p, k);
        const std::uint64_t pk = upow(p, k);
        for (std::uint64_t v = 2; v < pk; ++v) {
            std::uint64_t r = v % p;
            if (r == 0 || r == 1 || r == p - 1) continue;
            Residue n(v, mod);
            for (DfsKind kind : {DfsKind::ICS, DfsKind::SCI, DfsKind::CSI, DfsKind::ISC}) {
                if (dfs_apply(kind, dfs_apply(kind, dfs_apply(kind, n))) != n)
                    f.add("dfs^3 != id at " + fmt_pk(p, k) + " n=" + std::to_string(v));
                ++cases;
            }
        }
        // no duplets: b is forced by a, the second equivalence then collapses a = b
        for (std::uint64_t v = 1; v < pk; ++v) {
            if (v % p == 0 || (v + 1) % p == 0) continue;
            Residue a(v, mod);
            Residue b = (-(a + Residue(1, mod))).inverse();
            if (b == a || !b.is_unit()) continue;
            if (b + a.inverse() == Residue(-1, mod))
                f.add("duplet at " + fmt_pk(p, k) + " a=" + std::to_string(v));
            ++cases;
        }
    }
    return result("dfs compositions have period 3; no duplets", f,
                  std::to_string(cases) + " evaluations, p^k <= 1e4");
}

CheckResult check_triplet_conditions(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    for (auto [p, k] : small_moduli(o.p_max, o.k_max, 10000)) {
        Modulus mod = make_modulus(p, k);
        const std::uint64_t pk = upow(p, k);
        for (std::uint64_t v = 1; v < pk; ++v) {
            if (v % p == 0 || (v + 1) % p == 0) continue;
            // generate_triplet validates (3a)-(3c) and abc = 1 on construction
            Triplet t = generate_triplet(Residue(v, mod));
            ++cases;
            bool has_one = t.a.value() == 1 || t.b.value() == 1 || t.c.value() == 1;
            bool equal = t.a == t.b && t.b == t.c;
            if (has_one != (t.kind == TripletKind::degenerate))
                f.add("degenerate tag at " + fmt_pk(p, k) + " n=" + std::to_string(v));
            else if (!has_one && equal != (t.kind == TripletKind::cubic_root))
                f.add("cubic tag at " + fmt_pk(p, k) + " n=" + std::to_string(v));
            if (equal && !has_one) {
                Residue sq = t.a * t.a + t.a + Residue(1, mod);
                if (!sq.is_zero()) f.add("cubic seed not a root at " + fmt_pk(p, k));
            }
        }
    }
    return result("every unit orbit is a valid triplet (3a-3c, abc=1), tags consistent", f,
                  std::to_string(cases) + " orbits, p^k <= 1e4");
}

CheckResult check_cubic_roots(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    for (std::uint64_t p : odd_primes_upto(o.sampled_p_max)) {
        for (unsigned k = 1; k <= o.k_max; ++k) {
            Modulus mod = make_modulus(p, k);
            auto roots = find_cubic_roots(mod);
            ++cases;
            if (p % 6 != 1) {
                if (!roots.empty()) f.add("unexpected roots at " + fmt_pk(p, k));
                continue;
            }
            if (roots.size() != 2) {
                f.add("root count at " + fmt_pk(p, k));
                continue;
            }
            for (const Residue& x : roots) {
                if (x.pow(3).value() != 1 || x.value() == 1) f.add("x^3 at " + fmt_pk(p, k));
                if (x.pow(p) != x) f.add("root not in core at " + fmt_pk(p, k));
                if (k >= 2 && !is_pth_power(x)) f.add("root not in F_k at " + fmt_pk(p, k));
                if (x + x.inverse() != Residue(-1, mod))
                    f.add("x + 1/x != -1 at " + fmt_pk(p, k));
            }
            // pair structure and the combined power-sum identity
            Residue a = roots[0], b = roots[1];
            if (a.inverse() != b) f.add("roots are not an inverse pair at " + fmt_pk(p, k));
            Residue sum(0, mod);
            for (int i = 1; i <= 3; ++i) sum = sum + a.pow(i) + b.pow(i);
            if (sum != (a * b - Residue(1, mod)) || !sum.is_zero())
                f.add("sum_(i=1..3) a^i + b^i != ab - 1 = 0 at " + fmt_pk(p, k));
            // reduction consistency: roots mod p^k reduce to roots mod p^(k-1)
            if (k >= 2) {
                Modulus lower = make_modulus(p, k - 1);
                auto lower_roots = find_cubic_roots(lower);
                for (const Residue& x : roots) {
                    Residue red(x.value(), lower);
                    if (std::find(lower_roots.begin(), lower_roots.end(), red) == lower_roots.end())
                        f.add("reduction not a root at " + fmt_pk(p, k));
                }
            }
            // brute oracle at desk size
            if (upow(p, k) <= 10000) {
                std::vector<BigInt> brute;
                for (std::uint64_t v = 0; v < upow(p, k); ++v)
                    if ((BigInt(v) * v + v + 1) % int_pow(p, k) == 0) brute.push_back(v);
                std::vector<BigInt> got;
                for (const Residue& x : roots) got.push_back(x.value());
                if (brute != got) f.add("brute mismatch at " + fmt_pk(p, k));
            }
        }
    }
    return result("cubic roots: exist iff p=1 mod 6, in core and F_k, pair sums", f,
                  std::to_string(cases) + " moduli");
}

CheckResult check_fk_structure(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    for (auto [p, k] : small_moduli(o.p_max, o.k_max, 10000)) {
        if (k < 2) continue;
        Modulus mod = make_modulus(p, k);
        const std::uint64_t pk = upow(p, k);
        std::uint64_t members = 0;
        for (std::uint64_t v = 1; v < pk; ++v) {
            if (v % p == 0) continue;
            if (is_pth_power(Residue(v, mod))) ++members;
        }
        ++cases;
        if (BigInt(members) != mod.unit_group_order() / p)
            f.add("|F_k| at " + fmt_pk(p, k));
    }
    // Cor 1.2: every extension of an F_2 member is an F_k member (k = 3)
    for (std::uint64_t p : odd_primes_upto(std::min<std::uint64_t>(o.p_max, 13))) {
        Modulus m2 = make_modulus(p, 2);
        Modulus m3 = make_modulus(p, 3);
        for (std::uint64_t v = 1; v < p * p; ++v) {
            if (v % p == 0) continue;
            if (!is_pth_power(Residue(v, m2))) continue;
            for (std::uint64_t t = 0; t < p; ++t) {
                if (!is_pth_power(Residue(v + BigInt(t) * p * p, m3)))
                    f.add("extension left F_3 at p=" + std::to_string(p));
                ++cases;
            }
        }
    }
    return result("|F_k| = |G_k|/p; every extension of F_2 lies in F_k", f,
                  std::to_string(cases) + " checks");
}

CheckResult check_decompose_roundtrip(const VerifyOptions& o, std::mt19937_64& rng) {
    Failure f;
    std::size_t cases = 0;
    for (auto [p, k] : small_moduli(o.p_max, o.k_max, 10000)) {
        Modulus mod = make_modulus(p, k);
        const std::uint64_t pk = upow(p, k);
        std::set<std::pair<BigInt, BigInt>> seen;
        for (std::uint64_t v = 1; v < pk; ++v) {
            if (v % p == 0) continue;
            Residue n(v, mod);
            UnitExponents e = decompose_unit(n);
            ++cases;
            if (e.i < 0 || e.i >= p - 1 || e.j < 0 || e.j >= mod.extension_group_order())
                f.add("exponent range at " + fmt_pk(p, k));
            if (unit_from_exponents(e, mod) != n)
                f.add("roundtrip at " + fmt_pk(p, k) + " n=" + std::to_string(v));
            seen.emplace(e.i, e.j);
        }
        if (BigInt(seen.size()) != mod.unit_group_order()) f.add("not a bijection at " + fmt_pk(p, k));
    }
    // sampled tier
    for (std::uint64_t p : odd_primes_upto(o.sampled_p_max)) {
        if (p <= o.p_max) continue;
        Modulus mod = make_modulus(p, 2);
        std::uniform_int_distribution<std::uint64_t> dist(1, p * p - 1);
        for (int i = 0; i < 25; ++i) {
            std::uint64_t v = dist(rng);
            if (v % p == 0) continue;
            Residue n(v, mod);
            if (unit_from_exponents(decompose_unit(n), mod) != n)
                f.add("sampled roundtrip at p=" + std::to_string(p));
            ++cases;
        }
    }
    return result("unit = g_A^i (p+1)^j decomposition is a bijection", f,
                  std::to_string(cases) + " units");
}

CheckResult check_hensel_counts(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    for (std::uint64_t p : odd_primes_upto(o.p_max)) {
        if (p % 6 != 1) continue;
        Modulus m2 = make_modulus(p, 2);
        auto roots = find_cubic_roots(m2);
        for (unsigned k = 2; k <= std::max(o.k_max, 4u); ++k) {
            auto ext = hensel_extensions(roots[0], roots[1], k);
            ++cases;
            if (BigInt(ext.size()) != int_pow(p, k - 2)) {
                f.add("count at " + fmt_pk(p, k));
                continue;
            }
            Modulus mk = make_modulus(p, k);
            for (const auto& [a, b] : ext)
                if (a + b != Residue(-1, mk)) f.add("pair sum at " + fmt_pk(p, k));
        }
    }
    // triplet-based roots at the first triplet prime
    if (o.sampled_p_max >= 59) {
        Modulus m2 = make_modulus(59, 2);
        auto rep = find_pth_triplets(59);
        for (const auto& t : rep.pth_triplets) {
            // equivalence a + b^{-1} = -1 with both sides in core: u^p = u
            Residue u(t.r[0], m2);
            Residue v = Residue(t.r[1], m2).inverse();
            auto ext = hensel_extensions(u, v, 3);
            ++cases;
            if (ext.size() != 59) f.add("59-triplet count k=3: got " + std::to_string(ext.size()));
        }
    }
    return result("1-complement Hensel extension count is p^(k-2)", f,
                  std::to_string(cases) + " roots");
}

CheckResult check_eds(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    std::size_t complement_pairs = 0;
    for (auto [p, k] : small_moduli(o.p_max, o.k_max, 1000000)) {
        Modulus mod = make_modulus(p, k);
        CoreTable core(mod);
        for (const Residue& a : core.entries()) {
            for (const Residue& b : core.entries()) {
                Residue s = a + b;
                bool fixed = s.is_zero() || core.contains(s);
                bool eds = eds_check(a, b);
                ++cases;
                if (eds != fixed)
                    f.add("EDS <-> sum-in-core failed at " + fmt_pk(p, k));
                if (s == Residue(-1, mod)) {
                    ++complement_pairs;
                    if (!eds) f.add("1-complement pair without EDS at " + fmt_pk(p, k));
                }
                // strict integer inequality of the 0-extensions
                if (a.value() > 0 && b.value() > 0) {
                    BigInt A = a.value(), B = b.value();
                    if (int_pow(A, p) + int_pow(B, p) >= int_pow(A + B, p))
                        f.add("integer inequality at " + fmt_pk(p, k));
                }
            }
        }
    }
    std::ostringstream scope;
    scope << cases << " core pairs, " << complement_pairs << " of them 1-complement";
    return result("EDS holds exactly on core pairs with core sum; A^p+B^p < (A+B)^p", f, scope.str());
}

CheckResult check_expansion(const VerifyOptions& o, std::mt19937_64& rng) {
    Failure f;
    std::size_t cases = 0;
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        for (unsigned k = 1; k <= o.k_max; ++k) {
            Modulus mod = make_modulus(p, k);
            const std::uint64_t pk = upow(p, k);
            std::uniform_int_distribution<std::uint64_t> dist(0, pk - 1);
            for (int i = 0; i < 1000; ++i) {
                std::uint64_t xv = dist(rng);
                while (xv % p == 0) xv = dist(rng);
                Residue x(xv, mod);
                auto e = triple_precision_expansion(x, BigInt(dist(rng)));
                ++cases;
                if (e.truncated != e.direct) {
                    f.add("expansion mismatch at " + fmt_pk(p, k));
                    break;
                }
            }
        }
    }
    return result("quadratic binomial truncation equals direct power mod p^(3k+1)", f,
                  std::to_string(cases) + " random (x, u), p in {5,7,11,13}");
}

CheckResult check_witnesses(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    for (std::uint64_t p : odd_primes_upto(o.p_max)) {
        if (p % 6 != 1) continue;
        Modulus m2 = make_modulus(p, 2);
        auto roots = find_cubic_roots(m2);
        PowerSumWitness w = powersum_witness(roots[0], roots[1], Residue(-1, m2));
        ++cases;
        if (w.mismatch_index < 2) f.add("cubic witness index at p=" + std::to_string(p));
        if (p == 7 && w.mismatch_index != 5) f.add("p=7 cubic witness index != 5");
    }
    if (o.sampled_p_max >= 59) {
        Modulus m2 = make_modulus(59, 2);
        for (const auto& t : find_pth_triplets(59).pth_triplets) {
            for (int rot = 0; rot < 3; ++rot) {
                Residue u(t.r[rot], m2);
                Residue v = Residue(t.r[(rot + 1) % 3], m2).inverse();
                PowerSumWitness w = powersum_witness(u, v, Residue(-1, m2));
                ++cases;
                if (w.mismatch_index < 2)
                    f.add("59-triplet witness index " + std::to_string(w.mismatch_index));
            }
        }
    }
    return result("powersum witnesses: integer sides differ first at digit >= k", f,
                  std::to_string(cases) + " witnesses");
}

CheckResult check_increment_roots(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    auto run = [&](std::uint64_t p, unsigned k) {
        Modulus mod = make_modulus(p, k);
        const BigInt pk = mod.value();
        for (std::uint64_t n = 1; n <= p - 2; ++n) {
            Residue d = core_element(n + 1, mod) - core_element(n, mod);
            auto r = core_increment_root(n, mod);
            ++cases;
            if (!r) {
                if (d.is_unit() && is_pth_power(d)) f.add("missed root at " + fmt_pk(p, k));
                continue;
            }
            if (r->pow(p) != d) f.add("root power at " + fmt_pk(p, k));
            if (r->value() % p != 1) f.add("root not 1 mod p at " + fmt_pk(p, k));
            BigInt dev = mod_floor(r->value() - r->pow(p).value(), pk);
            if (dev % p != 0) f.add("deviation not 0 mod p at " + fmt_pk(p, k));
            if ((dev == 0) != (d.value() == 1))
                f.add("deviation/cubic-adjacency mismatch at " + fmt_pk(p, k) +
                      " n=" + std::to_string(n));
        }
    };
    for (std::uint64_t p : odd_primes_upto(o.p_max))
        for (unsigned k = 2; k <= o.k_max; ++k) run(p, k);
    if (o.sampled_p_max >= 59) run(59, 3);
    return result("increment roots: r = 1 mod p, r^p = d; dev = 0 mod p^k iff d = 1", f,
                  std::to_string(cases) + " positions");
}

CheckResult check_increment_symmetry_true_level(const VerifyOptions&) {
    Failure f;
    std::size_t cases = 0;
    for (std::uint64_t p : odd_primes_upto(50)) {
        for (unsigned j = 1; j <= 3; ++j) {
            const unsigned prec = j + 2;
            for (std::uint64_t m = 1; 2 * m <= p - 1; ++m) {
                std::uint64_t n = p - 1 - m;
                if (n < 1) continue;
                ++cases;
                if (core_increment(m, j, prec, p) != core_increment(n, j, prec, p))
                    f.add("asymmetry mod p^(j+2) at p=" + std::to_string(p) +
                          " j=" + std::to_string(j) + " m=" + std::to_string(m));
            }
        }
    }
    return result("core increment 1-complement symmetry holds mod p^(j+2)", f,
                  std::to_string(cases) + " pairs, p <= 50, j <= 3");
}

CheckResult check_triplet_scan(const VerifyOptions&) {
    Failure f;
    auto reports = scan_primes(200);
    std::vector<std::uint64_t> trip_primes;
    for (const auto& r : reports) {
        if (!r.pth_triplets.empty()) trip_primes.push_back(r.p);
        if ((r.p % 6 == 1) != !r.cubic_roots.empty())
            f.add("C3 flag at p=" + std::to_string(r.p));
    }
    if (trip_primes != std::vector<std::uint64_t>{59, 79, 83, 179, 193})
        f.add("triplet primes below 200 are off");
    return result("scan p<200: triplet primes {59,79,83,179,193}; C3 iff p=1 mod 6", f,
                  std::to_string(reports.size()) + " primes");
}

CheckResult check_residue_basics(const VerifyOptions& o, std::mt19937_64& rng) {
    Failure f;
    std::size_t cases = 0;
    for (auto [p, k] : small_moduli(o.p_max, o.k_max, 10000)) {
        Modulus mod = make_modulus(p, k);
        const std::uint64_t pk = upow(p, k);
        const BigInt group = mod.unit_group_order();
        std::uniform_int_distribution<std::uint64_t> dist(0, pk - 1);
        for (int i = 0; i < 400; ++i) {
            Residue a(dist(rng), mod), b(dist(rng), mod);
            ++cases;
            if (-(-a) != a) f.add("neg involution at " + fmt_pk(p, k));
            if (a + (-a) != Residue(0, mod)) f.add("a + (-a) at " + fmt_pk(p, k));
            if (a + b != b + a || a * b != b * a) f.add("commutativity at " + fmt_pk(p, k));
            if (a.one_complement() + a != Residue(-1, mod)) f.add("one-complement sum");
            // digitwise complement property (holds for every residue)
            auto da = to_digits(a, k), dc = to_digits(a.one_complement(), k);
            for (unsigned t = 0; t < k; ++t)
                if (da.digits[t] + dc.digits[t] != p - 1) f.add("complement digits");
            if (a.is_unit()) {
                if (a.inverse().inverse() != a) f.add("inv involution at " + fmt_pk(p, k));
                if (a.pow(group).value() != 1) f.add("Euler order at " + fmt_pk(p, k));
            }
            // digit round trip at random width
            std::uint64_t width = k + dist(rng) % 3;
            BigInt v = a.value();
            if (from_digits(to_digits(v, p, width)) != v % int_pow(p, width))
                f.add("digit roundtrip at " + fmt_pk(p, k));
        }
    }
    return result("ring symmetries, Euler order, digit round trips", f,
                  std::to_string(cases) + " sampled values");
}

CheckResult check_core_symmetries(const VerifyOptions& o) {
    Failure f;
    std::size_t cases = 0;
    for (auto [p, k] : small_moduli(o.sampled_p_max, o.k_max, 1000000)) {
        Modulus mod = make_modulus(p, k);
        for (std::uint64_t n = 1; n < p; ++n) {
            // odd symmetry A(p-n) = -A(n)
            if (core_element(p - n, mod) != -core_element(n, mod))
                f.add("odd symmetry at " + fmt_pk(p, k));
            ++cases;
        }
        // period p at precision p^{j+1}
        for (unsigned j = 1; j <= 2; ++j) {
            for (std::uint64_t n = 0; n < p; ++n) {
                if (core_function_at_precision(n, j, j + 1, p) !=
                    core_function_at_precision(n + p, j, j + 1, p))
                    f.add("core period at p=" + std::to_string(p) + " j=" + std::to_string(j));
                if (core_increment(n, j, j + 1, p) != core_increment(n + p, j, j + 1, p))
                    f.add("increment period at p=" + std::to_string(p));
                cases += 2;
            }
        }
    }
    return result("core odd symmetry A(p-n) = -A(n); period p at precision j+1", f,
                  std::to_string(cases) + " checks");
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed ? opts.seed : 0x5eed5eedULL);
    std::vector<CheckResult> out;
    out.push_back(check_unit_counts(opts));
    out.push_back(check_subgroup_sums(opts));
    out.push_back(check_order_p_plus_1(opts));
    out.push_back(check_lemma_pm1(opts));
    out.push_back(check_dfs_and_duplets(opts));
    out.push_back(check_triplet_conditions(opts));
    out.push_back(check_cubic_roots(opts));
    out.push_back(check_fk_structure(opts));
    out.push_back(check_decompose_roundtrip(opts, rng));
    out.push_back(check_hensel_counts(opts));
    out.push_back(check_eds(opts));
    out.push_back(check_expansion(opts, rng));
    out.push_back(check_witnesses(opts));
    out.push_back(check_increment_roots(opts));
    out.push_back(check_increment_symmetry_true_level(opts));
    out.push_back(check_triplet_scan(opts));
    out.push_back(check_residue_basics(opts, rng));
    out.push_back(check_core_symmetries(opts));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace zpk
