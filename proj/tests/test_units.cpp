#include <doctest.h>

#include <functional>
#include <set>

#include "zpk/digits.hpp"
#include "zpk/error.hpp"
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

std::set<BigInt> values(const std::vector<Residue>& rs) {
    std::set<BigInt> out;
    for (const auto& r : rs) out.insert(r.value());
    return out;
}

} // namespace

TEST_CASE("semigroup decomposition") {
    Modulus m49 = make_modulus(7, 2);

    auto d = semigroup_decompose(Residue(14, m49));
    REQUIRE(d.unit_part.has_value());
    CHECK(d.unit_part->value() == 2);
    CHECK(d.unit_part->modulus().k() == 1);
    CHECK(d.e == 1);

    auto z = semigroup_decompose(Residue(0, m49));
    CHECK(!z.unit_part.has_value());
    CHECK(z.e == 2);

    auto u = semigroup_decompose(Residue(30, m49));
    CHECK(u.e == 0);
    CHECK(u.unit_part->value() == 30);
}

TEST_CASE("core element: direct power agrees with the recursive digit lift") {
    // Independent oracle: n_1 = n_0^p mod p^2, n_2 = n_1^p mod p^3, ...;
    // each step pins one more digit and n_{k-1} is the core element.
    for (std::uint64_t p : {5ull, 7ull, 13ull}) {
        for (unsigned k = 1; k <= 4; ++k) {
            Modulus mod = make_modulus(p, k);
            for (std::uint64_t n = 1; n < p; ++n) {
                BigInt lifted = n;
                for (unsigned m = 2; m <= k; ++m)
                    lifted = pow_mod(lifted, BigInt(p), int_pow(p, m));
                CHECK(core_element(n, mod).value() == lifted);
                // the lift never disturbs digits already fixed
                if (k >= 2)
                    CHECK(lifted % int_pow(p, k - 1) ==
                          core_element(n, make_modulus(p, k - 1)).value());
            }
        }
    }
}

TEST_CASE("core elements match the published figures") {
    Modulus m49 = make_modulus(7, 2);
    CHECK(core_element(2, m49).value() == 30);
    CHECK(render(to_digits(core_element(2, m49), 2)) == "42");
    CHECK(core_element(1, m49).value() == 1);

    Modulus m25 = make_modulus(5, 2);
    CHECK(core_element(3, m25).value() == 18);
    CHECK(render(to_digits(core_element(3, m25), 2)) == "33");

    CHECK(code_of([&] { core_element(0, m49); }) == errc::out_of_range);
    CHECK(code_of([&] { core_element(7, m49); }) == errc::out_of_range);
}

TEST_CASE("core table") {
    Modulus m49 = make_modulus(7, 2);
    CoreTable t49(m49);
    CHECK(values(t49.entries()) == std::set<BigInt>{1, 30, 31, 18, 19, 48});

    Modulus m25 = make_modulus(5, 2);
    CHECK(values(CoreTable(m25).entries()) == std::set<BigInt>{1, 7, 18, 24});

    // brute oracle: unit fixed points of x -> x^p mod 9
    Modulus m9 = make_modulus(3, 2);
    std::set<BigInt> brute;
    for (std::uint64_t v = 1; v < 9; ++v) {
        if (v % 3 == 0) continue;
        if (Residue(v, m9).pow(3).value() == v) brute.insert(v);
    }
    CHECK(brute == std::set<BigInt>{1, 8});
    CHECK(values(CoreTable(m9).entries()) == brute);

    // every entry is a fixed point congruent to its index; the table sums to 0
    Residue sum(0, m49);
    std::uint64_t n = 1;
    for (const Residue& e : t49.entries()) {
        CHECK(e.pow(7) == e);
        CHECK(e.value() % 7 == n++);
        CHECK(t49.contains(e));
        sum = sum + e;
    }
    CHECK(sum.is_zero());
    CHECK(!t49.contains(Residue(2, m49)));
}

TEST_CASE("order computation") {
    Modulus m25 = make_modulus(5, 2);
    CHECK(order_of(Residue(6, m25)) == 5);
    CHECK(order_of(Residue(1, m25)) == 1);

    // brute oracle for 18 mod 25
    std::uint64_t t = 1, x = 18;
    while (x != 1) {
        x = x * 18 % 25;
        ++t;
    }
    CHECK(t == 4);
    CHECK(order_of(Residue(18, m25)) == 4);

    // brute oracle across every unit mod 7^2
    Modulus m49 = make_modulus(7, 2);
    for (std::uint64_t v = 1; v < 49; ++v) {
        if (v % 7 == 0) continue;
        std::uint64_t ord = 1, y = v;
        while (y != 1) {
            y = y * v % 49;
            ++ord;
        }
        CHECK(order_of(Residue(v, m49)) == ord);
    }

    CHECK(code_of([&] { order_of(Residue(35, m49)); }) == errc::not_a_unit);
}

TEST_CASE("smallest full-order generator") {
    CHECK(find_generator(make_modulus(5, 2)).value() == 2);
    CHECK(find_generator(make_modulus(7, 2)).value() == 3);
    CHECK(find_generator(make_modulus(59, 2)).value() == 2);
    CHECK(find_generator(make_modulus(3, 2)).value() == 2);
}

TEST_CASE("unit decomposition in core/extension coordinates") {
    Modulus m25 = make_modulus(5, 2);

    auto e6 = decompose_unit(Residue(6, m25));
    CHECK(e6.i == 0);
    CHECK(e6.j == 1);

    auto e1 = decompose_unit(Residue(1, m25));
    CHECK(e1.i == 0);
    CHECK(e1.j == 0);

    // brute-force oracle over all (i, j) pairs: g_A = 7 = core lift of 2
    CHECK(core_generator(m25).value() == 7);
    BigInt bi = -1, bj = -1;
    for (BigInt i = 0; i < 4; ++i)
        for (BigInt j = 0; j < 5; ++j)
            if (Residue(7, m25).pow(i) * Residue(6, m25).pow(j) == Residue(2, m25)) {
                bi = i;
                bj = j;
            }
    auto e2 = decompose_unit(Residue(2, m25));
    CHECK(e2.i == bi);
    CHECK(e2.j == bj);
    CHECK(bi == 1);
    CHECK(bj == 2);

    // exhaustive round trip mod 7^3, with exponent uniqueness
    Modulus m343 = make_modulus(7, 3);
    std::set<std::pair<BigInt, BigInt>> seen;
    for (std::uint64_t v = 1; v < 343; ++v) {
        if (v % 7 == 0) continue;
        auto e = decompose_unit(Residue(v, m343));
        CHECK(unit_from_exponents(e, m343) == Residue(v, m343));
        seen.emplace(e.i, e.j);
    }
    CHECK(seen.size() == 294);

    CHECK(code_of([&] { decompose_unit(Residue(10, m25)); }) == errc::not_a_unit);
}

TEST_CASE("discrete log BSGS lane") {
    // 3^13 = 1594323 > 2^20 forces the baby-step giant-step path
    Modulus m = make_modulus(3, 14);
    Residue base(4, m);  // p + 1 generates B_k
    BigInt order = m.extension_group_order();
    for (BigInt j : {BigInt(0), BigInt(1), BigInt(123456), BigInt(order - 1)}) {
        CHECK(discrete_log(base, base.pow(j), order) == j);
    }
}

TEST_CASE("subgroup enumeration and sums") {
    Modulus m49 = make_modulus(7, 2);
    auto s3 = subgroup_of_order(BigInt(3), m49);
    CHECK(values(s3) == std::set<BigInt>{1, 18, 30});
    CHECK(subgroup_sum(s3).is_zero());

    Modulus m125 = make_modulus(5, 3);
    auto s5 = subgroup_of_order(BigInt(5), m125);
    // brute oracle: solutions of x^5 = 1 mod 125
    std::set<BigInt> brute;
    for (std::uint64_t v = 1; v < 125; ++v)
        if (Residue(v, m125).pow(5).value() == 1) brute.insert(v);
    CHECK(values(s5) == brute);
    CHECK(values(s5) == std::set<BigInt>{1, 26, 51, 76, 101});
    CHECK(subgroup_sum(s5).value() == 5);

    auto s1 = subgroup_of_order(BigInt(1), m49);
    CHECK(values(s1) == std::set<BigInt>{1});
    CHECK(subgroup_sum(s1).value() == 1);

    CHECK(code_of([&] { subgroup_of_order(BigInt(4), m49); }) == errc::out_of_range);
}

TEST_CASE("p-th power residues") {
    Modulus m25 = make_modulus(5, 2);
    CHECK(is_pth_power(Residue(7, m25)));
    CHECK(Residue(2, m25).pow(4).value() == 16);  // 2^4 != 1, so 2 is no 5th power
    CHECK(!is_pth_power(Residue(2, m25)));

    Modulus m125 = make_modulus(5, 3);
    std::uint64_t count = 0;
    for (std::uint64_t v = 1; v < 125; ++v) {
        if (v % 5 == 0) continue;
        if (is_pth_power(Residue(v, m125))) ++count;
    }
    CHECK(count == 20);

    // every member has a working root, non-members reject
    for (std::uint64_t v = 1; v < 125; ++v) {
        if (v % 5 == 0) continue;
        Residue r(v, m125);
        if (is_pth_power(r)) {
            CHECK(pth_root(r).pow(5) == r);
        } else {
            CHECK(code_of([&] { pth_root(r); }) == errc::no_root);
        }
    }

    Modulus m5 = make_modulus(5, 1);
    CHECK(code_of([&] { is_pth_power(Residue(2, m5)); }) == errc::precondition);
}

TEST_CASE("core function at extended precision") {
    CHECK(core_increment(BigInt(1), 1, 9, 7) == 127);
    CHECK(render(to_digits(core_increment(BigInt(1), 1, 9, 7), 7, 9)) == "000000241");
    CHECK(core_increment(BigInt(5), 1, 9, 7) == 201811);
    CHECK(render(to_digits(core_increment(BigInt(5), 1, 9, 7), 7, 9)) == "001500241");
    CHECK(core_increment(BigInt(0), 3, 9, 7) == 1);

    // A(0) = 0 is admitted here
    CHECK(core_function_at_precision(BigInt(0), 2, 5, 7) == 0);
}
