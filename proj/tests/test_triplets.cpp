#include <doctest.h>

#include <functional>
#include <set>

#include "zpk/error.hpp"
#include "zpk/triplets.hpp"
#include "zpk/units.hpp"

using namespace zpk;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected a zpk::error");
    return errc::precondition;
}

} // namespace

TEST_CASE("dfs formulas and the mod-9 chain") {
    Modulus m9 = make_modulus(3, 2);
    CHECK(dfs_apply(DfsKind::SCI, Residue(1, m9)).value() == 4);
    CHECK(dfs_apply(DfsKind::SCI, Residue(4, m9)).value() == 7);
    CHECK(dfs_apply(DfsKind::SCI, Residue(7, m9)).value() == 1);

    Modulus m25 = make_modulus(5, 2);
    // prose composition order: ICS(n) = 1 - n^{-1}
    Residue n(18, m25);
    CHECK(dfs_apply(DfsKind::ICS, n) == Residue(1, m25) - n.inverse());
    CHECK(dfs_apply(DfsKind::ISC, n) == -(Residue(1, m25) + n.inverse()));
    CHECK(dfs_apply(DfsKind::CSI, n) == (Residue(1, m25) - n).inverse());

    // period 3 for every kind, exhaustively mod 25
    for (std::uint64_t v = 2; v < 25; ++v) {
        std::uint64_t r = v % 5;
        if (r == 0 || r == 1 || r == 4) continue;
        for (DfsKind kind : {DfsKind::ICS, DfsKind::SCI, DfsKind::CSI, DfsKind::ISC}) {
            Residue x(v, m25);
            CHECK(dfs_apply(kind, dfs_apply(kind, dfs_apply(kind, x))) == x);
        }
    }

    // division-by-zero guards are per composition
    CHECK(code_of([&] { dfs_apply(DfsKind::ICS, Residue(5, m25)); }) == errc::precondition);
    CHECK(code_of([&] { dfs_apply(DfsKind::SCI, Residue(24, m25)); }) == errc::precondition);
    CHECK(code_of([&] { dfs_apply(DfsKind::CSI, Residue(6, m25)); }) == errc::precondition);
    CHECK(dfs_apply(DfsKind::SCI, Residue(6, m25)).value() == 7);  // -(7)^{-1} = -18

    // orbits may pass through 1: SCI three-fold from -2 works
    Residue seed(23, m25);
    CHECK(dfs_apply(DfsKind::SCI, seed).value() == 1);
    CHECK(dfs_apply(DfsKind::SCI,
                    dfs_apply(DfsKind::SCI, dfs_apply(DfsKind::SCI, seed))) == seed);
}

TEST_CASE("triplet generation") {
    Modulus m25 = make_modulus(5, 2);
    Triplet t = generate_triplet(Residue(18, m25));
    CHECK(t.a.value() == 18);
    CHECK(t.b.value() == 21);
    CHECK(t.c.value() == 17);
    CHECK((t.a * t.b * t.c).value() == 1);
    CHECK(t.kind == TripletKind::generic);

    Modulus m49 = make_modulus(7, 2);
    Triplet cu = generate_triplet(Residue(30, m49));
    CHECK(cu.kind == TripletKind::cubic_root);
    CHECK(cu.a == cu.b);
    CHECK(cu.b == cu.c);
    CHECK(cu.a.value() == 30);

    Triplet deg = generate_triplet(Residue(1, m25));
    CHECK(deg.kind == TripletKind::degenerate);
    std::set<BigInt> members{deg.a.value(), deg.b.value(), deg.c.value()};
    // members are {1, -2, -2^{-1}} = {1, 23, 12} mod 25
    CHECK(members == std::set<BigInt>{1, 12, 23});

    CHECK(code_of([&] { generate_triplet(Residue(24, m25)); }) == errc::precondition);
    CHECK(code_of([&] { generate_triplet(Residue(0, m25)); }) == errc::not_a_unit);

    // p-th power triplet at the first triplet prime
    Modulus m59 = make_modulus(59, 2);
    Triplet tp = generate_triplet(Residue(298, m59));
    CHECK(tp.kind == TripletKind::pth_power);
}

TEST_CASE("triplet orbit collapse") {
    // p = 5: some x = -x^{-1} (here 18), so only five residues are involved
    Modulus m25 = make_modulus(5, 2);
    Triplet t = generate_triplet(Residue(18, m25));
    std::set<BigInt> involved;
    for (const Residue& r : {t.a, t.b, t.c}) {
        involved.insert(r.value());
        involved.insert((-r.inverse()).value());
    }
    CHECK(involved == std::set<BigInt>{17, 18, 19, 21, 22});
    CHECK((-Residue(18, m25).inverse()).value() == 18);

    // p = 7: the cubic orbit involves one inverse pair and the C3 subgroup
    Modulus m49 = make_modulus(7, 2);
    Triplet cu = generate_triplet(Residue(30, m49));
    CHECK(cu.a.inverse().value() == 18);
    auto c3 = subgroup_of_order(BigInt(3), m49);
    CHECK(subgroup_sum(c3).is_zero());
    std::set<BigInt> c3v;
    for (const auto& r : c3) c3v.insert(r.value());
    CHECK(c3v == std::set<BigInt>{1, 18, 30});
}

TEST_CASE("cubic roots via Hensel lifting") {
    Modulus m49 = make_modulus(7, 2);
    auto r49 = find_cubic_roots(m49);
    REQUIRE(r49.size() == 2);
    CHECK(r49[0].value() == 18);
    CHECK(r49[1].value() == 30);

    CHECK(find_cubic_roots(make_modulus(5, 2)).empty());
    CHECK(find_cubic_roots(make_modulus(3, 3)).empty());

    Modulus m343 = make_modulus(7, 3);
    auto r343 = find_cubic_roots(m343);
    // brute oracle: x^2 + x + 1 = 0 mod 343
    std::vector<BigInt> brute;
    for (std::uint64_t v = 0; v < 343; ++v)
        if ((v * v + v + 1) % 343 == 0) brute.push_back(v);
    REQUIRE(r343.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(r343[i].value() == brute[i]);
    CHECK(r343[0].value() == 18);
    CHECK(r343[1].value() == 324);
    CHECK(int_pow(BigInt(18), 3) == 17 * 343 + 1);

    // k = 1 works too
    auto r7 = find_cubic_roots(make_modulus(7, 1));
    REQUIRE(r7.size() == 2);
    CHECK(r7[0].value() == 2);
    CHECK(r7[1].value() == 4);
}

TEST_CASE("triplet^p search per prime") {
    auto r59 = find_pth_triplets(59);
    CHECK(r59.generator == 2);
    CHECK(r59.cubic_roots.empty());
    REQUIRE(r59.pth_triplets.size() == 2);
    CHECK(r59.pth_triplets[0].r == std::array<std::uint64_t, 3>{298, 1106, 805});
    CHECK(r59.pth_triplets[1].r == std::array<std::uint64_t, 3>{299, 1404, 1105});
    CHECK(r59.pth_triplets[0].kind == TripletKind::pth_power);

    auto r13 = find_pth_triplets(13);
    CHECK(r13.pth_triplets.empty());
    REQUIRE(r13.cubic_roots.size() == 1);
    CHECK(r13.cubic_roots[0] == std::array<std::uint64_t, 2>{22, 146});
    CHECK(22 * 146 % 169 == 1);

    auto r5 = find_pth_triplets(5);
    CHECK(r5.pth_triplets.empty());
    CHECK(r5.cubic_roots.empty());
    CHECK(r5.generator == 2);

    // p = 79 carries both root forms
    auto r79 = find_pth_triplets(79);
    CHECK(r79.cubic_roots.size() == 1);
    CHECK(r79.pth_triplets.size() == 1);

    // 1093 is Wieferich: the degenerate triplet (1, -2^{-1}, -2) joins two
    // generic ones for a total of three
    auto r1093 = find_pth_triplets(1093);
    REQUIRE(r1093.pth_triplets.size() == 3);
    std::size_t degenerate = 0;
    for (const auto& t : r1093.pth_triplets)
        if (t.kind == TripletKind::degenerate) {
            ++degenerate;
            CHECK(t.r == std::array<std::uint64_t, 3>{1, 597324, 1194647});
        }
    CHECK(degenerate == 1);
}

TEST_CASE("independent membership route reproduces the p=59 triplets") {
    // Oracle: exhaust all units mod 59^2, test F_2 membership by exponent
    // x^(|G|/p) = 1 instead of the core-table route, rotate+invert dedup.
    const std::uint64_t p = 59, pk = p * p;
    Modulus m(make_modulus(p, 2));
    const BigInt member_exp = m.unit_group_order() / p;
    auto in_f2 = [&](std::uint64_t v) { return Residue(v, m).pow(member_exp).value() == 1; };

    std::set<std::array<std::uint64_t, 3>> found;
    for (std::uint64_t a = 2; a < pk; ++a) {
        if (a % p == 0 || !in_f2(a) || (a + 1) % p == 0) continue;
        Residue ra(a, m);
        Residue rb = (-(ra + Residue(1, m))).inverse();
        std::uint64_t b = static_cast<std::uint64_t>(rb.value());
        if (b == 1 || !in_f2(b)) continue;
        Residue rc = (ra * rb).inverse();
        std::uint64_t c = static_cast<std::uint64_t>(rc.value());
        if (!in_f2(c)) continue;
        if (rb + rc.inverse() != Residue(-1, m)) continue;
        if (rc + ra.inverse() != Residue(-1, m)) continue;
        std::array<std::uint64_t, 3> best{a, b, c};
        auto consider = [&](std::array<std::uint64_t, 3> t) {
            for (int i = 0; i < 3; ++i) {
                best = std::min(best, t);
                t = {t[1], t[2], t[0]};
            }
        };
        consider({a, b, c});
        std::uint64_t ai = static_cast<std::uint64_t>(ra.inverse().value());
        std::uint64_t bi = static_cast<std::uint64_t>(rb.inverse().value());
        std::uint64_t ci = static_cast<std::uint64_t>(rc.inverse().value());
        consider({ai, ci, bi});
        found.insert(best);
    }
    auto rep = find_pth_triplets(p);
    REQUIRE(found.size() == rep.pth_triplets.size());
    auto it = found.begin();
    for (const auto& t : rep.pth_triplets) CHECK(t.r == *it++);
}

TEST_CASE("prime scan determinism and thread independence") {
    auto seq = scan_primes(200, 1);
    auto par = scan_primes(200, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].p == par[i].p);
        CHECK(seq[i].generator == par[i].generator);
        CHECK(seq[i].cubic_roots == par[i].cubic_roots);
        REQUIRE(seq[i].pth_triplets.size() == par[i].pth_triplets.size());
        for (std::size_t j = 0; j < seq[i].pth_triplets.size(); ++j)
            CHECK(seq[i].pth_triplets[j].r == par[i].pth_triplets[j].r);
    }

    std::vector<std::uint64_t> trip;
    for (const auto& r : seq)
        if (!r.pth_triplets.empty()) trip.push_back(r.p);
    CHECK(trip == std::vector<std::uint64_t>{59, 79, 83, 179, 193});

    CHECK(code_of([] { scan_primes(2); }) == errc::out_of_range);
}

TEST_CASE("powersum normation") {
    Modulus m49 = make_modulus(7, 2);
    auto [a, b] = normalize_powersum(Residue(30, m49), Residue(18, m49), Residue(48, m49));
    CHECK(a.value() == 30);
    CHECK(b.value() == 18);
    CHECK(a.pow(7) + b.pow(7) == Residue(-1, m49));

    // scaling invariance: any unit factor s cancels
    for (std::uint64_t s : {2ull, 11ull, 46ull}) {
        Residue rs(s, m49);
        auto [a2, b2] = normalize_powersum(Residue(30, m49) * rs, Residue(18, m49) * rs,
                                           Residue(48, m49) * rs);
        CHECK(a2 == a);
        CHECK(b2 == b);
    }

    CHECK(code_of([&] {
              normalize_powersum(Residue(30, m49), Residue(18, m49), Residue(47, m49));
          }) == errc::precondition);
    CHECK(code_of([&] {
              normalize_powersum(Residue(30, m49), Residue(18, m49), Residue(7, m49));
          }) == errc::not_a_unit);

    // (1, 1, z) normalizes exactly when 2 is a p-th power: Wieferich case
    Modulus mw = make_modulus(1093, 2);
    REQUIRE(is_pth_power(Residue(2, mw)));
    Residue z = pth_root(Residue(2, mw));
    CHECK(z.pow(1093).value() == 2);
    auto [aw, bw] = normalize_powersum(Residue(1, mw), Residue(1, mw), z);
    CHECK(aw.pow(1093) + bw.pow(1093) == Residue(-1, mw));
}
