#pragma once

#include <stdexcept>
#include <string>

namespace zpk {

// Distinct rejection codes for every validation path; the CLI maps
// them onto exit codes, tests assert on them.
enum class errc {
    base_not_odd,      // p is even
    base_too_small,    // p < 3
    base_composite,    // p fails the primality test
    bad_exponent,      // k < 1
    modulus_mismatch,  // operands from different p^k contexts
    not_a_unit,        // value divisible by p where a unit is required
    out_of_range,      // argument outside its documented domain
    bad_digit,         // digit >= base
    precondition,      // stated operation precondition violated
    no_root,           // p-th root requested for a non-member of F_k
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace zpk
