#include "zpk/modulus.hpp"

#include "zpk/error.hpp"
#include "zpk/numutil.hpp"

namespace zpk {

Modulus::Modulus(std::uint64_t p, unsigned k) : p_(p), k_(k), pk_(int_pow(p, k)) {}

Modulus make_modulus(std::uint64_t p, unsigned k) {
    if (k < 1) fail(errc::bad_exponent, "k must be >= 1");
    if (p % 2 == 0) fail(errc::base_not_odd, "p must be odd");
    if (p < 3) fail(errc::base_too_small, "p must be >= 3");
    if (!num::is_prime(p)) fail(errc::base_composite, "p must be prime");
    return Modulus(p, k);
}

} // namespace zpk
