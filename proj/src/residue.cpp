#include "zpk/residue.hpp"

#include "zpk/error.hpp"

namespace zpk {

namespace {

const Modulus& require_same(const Modulus& a, const Modulus& b) {
    if (a != b) fail(errc::modulus_mismatch, "operands use different moduli");
    return a;
}

} // namespace

Residue::Residue(BigInt value, Modulus mod)
    : val_(mod_floor(value, mod.value())), mod_(std::move(mod)) {}

Residue Residue::operator-() const { return Residue(mod_.value() - val_, mod_); }

Residue Residue::inverse() const { return Residue(inv_mod(val_, mod_.value()), mod_); }

Residue Residue::pow(const BigInt& e) const { return Residue(pow_mod(val_, e, mod_.value()), mod_); }

Residue Residue::one_complement() const { return Residue(mod_.value() - 1 - val_, mod_); }

Residue operator+(const Residue& a, const Residue& b) {
    return Residue(a.val_ + b.val_, require_same(a.mod_, b.mod_));
}

Residue operator-(const Residue& a, const Residue& b) {
    return Residue(a.val_ - b.val_, require_same(a.mod_, b.mod_));
}

Residue operator*(const Residue& a, const Residue& b) {
    return Residue(a.val_ * b.val_, require_same(a.mod_, b.mod_));
}

bool operator==(const Residue& a, const Residue& b) {
    return a.mod_ == b.mod_ && a.val_ == b.val_;
}

} // namespace zpk
