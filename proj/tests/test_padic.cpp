#include <doctest.h>

#include <functional>
#include <random>

#include "zpk/digits.hpp"
#include "zpk/error.hpp"
#include "zpk/modulus.hpp"
#include "zpk/residue.hpp"

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

TEST_CASE("modulus validation") {
    Modulus m = make_modulus(7, 2);
    CHECK(m.p() == 7);
    CHECK(m.k() == 2);
    CHECK(m.value() == 49);
    CHECK(m.unit_group_order() == 42);

    CHECK(code_of([] { make_modulus(9, 2); }) == errc::base_composite);
    CHECK(code_of([] { make_modulus(2, 5); }) == errc::base_not_odd);
    CHECK(code_of([] { make_modulus(1, 1); }) == errc::base_too_small);
    CHECK(code_of([] { make_modulus(7, 0); }) == errc::bad_exponent);
    CHECK(code_of([] { make_modulus(5 * 29, 1); }) == errc::base_composite);
}

TEST_CASE("digit conversion matches the published renderings") {
    CHECK(render(to_digits(BigInt(128), 7, 9)) == "000000242");
    CHECK(render(to_digits(BigInt(0), 7, 9)) == "000000000");
    CHECK(render(to_digits(BigInt(48), 7, 2)) == "66");

    Modulus m49 = make_modulus(7, 2);
    CHECK(render(to_digits(Residue(30, m49), 2)) == "42");
    CHECK(code_of([&] { to_digits(Residue(30, m49), 1); }) == errc::out_of_range);

    DigitString bad{{7, 0}, 7};
    CHECK(code_of([&] { from_digits(bad); }) == errc::bad_digit);

    // parse is the inverse of render
    DigitString d = to_digits(BigInt(2059), 7, 9);
    CHECK(from_digits(parse_digits(render(d), 7)) == 2059);
}

TEST_CASE("digit round trip, 10^4 samples per base and width") {
    std::mt19937_64 rng(42);
    for (std::uint64_t p : {3ull, 7ull, 37ull}) {
        for (std::size_t width : {1, 6, 12}) {
            BigInt cap = int_pow(p, width);
            bool ok = true;
            for (int i = 0; i < 10000; ++i) {
                BigInt v = BigInt(rng()) % cap;
                ok = ok && from_digits(to_digits(v, p, width)) == v;
            }
            CHECK(ok);
        }
    }
    // truncation semantics: values past the width reduce mod p^width
    CHECK(from_digits(to_digits(BigInt(343 + 5), 7, 3)) == 5);
}

TEST_CASE("ring operations") {
    Modulus m49 = make_modulus(7, 2);
    Modulus m25 = make_modulus(5, 2);

    CHECK((-Residue(1, m49)).value() == 48);
    CHECK((Residue(18, m25) * Residue(21, m25) * Residue(17, m25)).value() == 1);
    CHECK((Residue(30, m49) + Residue(18, m49)).value() == 48);
    CHECK((Residue(3, m49) - Residue(5, m49)).value() == 47);

    // negative construction wraps to the canonical complement
    CHECK(Residue(-1, m49).value() == 48);

    CHECK(code_of([&] { Residue(1, m49) + Residue(1, m25); }) == errc::modulus_mismatch);
}

TEST_CASE("inverse") {
    Modulus m25 = make_modulus(5, 2);

    // brute oracle: the unique x with 21 x = 1 mod 25
    std::uint64_t want = 0;
    for (std::uint64_t x = 1; x < 25; ++x)
        if (21 * x % 25 == 1) want = x;
    CHECK(want == 6);
    CHECK(Residue(21, m25).inverse().value() == want);

    CHECK(Residue(1, m25).inverse().value() == 1);

    std::uint64_t want18 = 0;
    for (std::uint64_t x = 1; x < 25; ++x)
        if (18 * x % 25 == 1) want18 = x;
    CHECK(Residue(18, m25).inverse().value() == want18);
    CHECK(want18 == 7);

    CHECK(code_of([&] { Residue(10, m25).inverse(); }) == errc::not_a_unit);
    CHECK(!Residue(10, m25).is_unit());
}

TEST_CASE("powers") {
    Modulus m343 = make_modulus(7, 3);
    CHECK(Residue(8, m343).pow(7).value() == 50);  // p^2 + 1 with p = 7

    Modulus m25 = make_modulus(5, 2);
    CHECK(int_pow(BigInt(6), 5) == 7776);  // = 311*25 + 1
    CHECK(Residue(6, m25).pow(5).value() == 1);

    CHECK(int_pow(BigInt(2), 7) == 128);
    CHECK(int_pow(BigInt(0), 0) == 1);
}

TEST_CASE("one-complement") {
    Modulus m49 = make_modulus(7, 2);
    Residue a(30, m49);
    Residue r = a.one_complement();
    CHECK(r.value() == 18);
    CHECK((a + r).value() == 48);
    auto da = to_digits(a, 2), dr = to_digits(r, 2);
    for (int i = 0; i < 2; ++i) CHECK(da.digits[i] + dr.digits[i] == 6);

    CHECK(Residue(0, m49).one_complement().value() == 48);

    Modulus m25 = make_modulus(5, 2);
    CHECK(Residue(18, m25).one_complement().value() == 6);  // 18 + 6 = 24 = -1
}

TEST_CASE("first mismatch digit") {
    BigInt lhs = int_pow(BigInt(30), 7) + int_pow(BigInt(18), 7);
    BigInt rhs = int_pow(BigInt(48), 7);
    auto idx = first_mismatch_digit(lhs, rhs, 7);
    REQUIRE(idx.has_value());
    CHECK(*idx == 5);

    CHECK(!first_mismatch_digit(BigInt(128), BigInt(128), 7).has_value());
    CHECK(first_mismatch_digit(BigInt(1), BigInt(8), 7) == 1);  // 01 vs 11 base 7
}

TEST_CASE("carry count") {
    CHECK(carry_count_add(BigInt(6), BigInt(1), 7) == 1);
    CHECK(carry_count_add(BigInt(0), BigInt(987654), 7) == 0);
    CHECK(carry_count_add(BigInt(30), BigInt(18), 7) == 0);  // 42 + 24 = 66 base 7
    CHECK(carry_count_add(BigInt(48), BigInt(48), 7) == 2);  // 66 + 66 propagates twice
}

TEST_CASE("residue symmetries sampled") {
    std::mt19937_64 rng(7);
    Modulus m = make_modulus(13, 3);
    std::uniform_int_distribution<std::uint64_t> dist(0, 13 * 13 * 13 - 1);
    for (int i = 0; i < 500; ++i) {
        Residue a(dist(rng), m), b(dist(rng), m), c(dist(rng), m);
        CHECK(-(-a) == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a.is_unit()) {
            CHECK(a.inverse().inverse() == a);
            CHECK((a * a.inverse()).value() == 1);
            CHECK(a.pow(m.unit_group_order()).value() == 1);
        }
    }
}
