#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zpk/modulus.hpp"
#include "zpk/residue.hpp"

namespace zpk {

/// The four distinct dual-folded-successor compositions of inverse I,
/// complement C and successor S, letters applied left to right:
///   ICS(n) = 1 - n^{-1}     SCI(n) = -(n+1)^{-1}
///   CSI(n) = (1-n)^{-1}     ISC(n) = -(1 + n^{-1})
/// Each has period 3 under iteration.
enum class DfsKind { ICS, SCI, CSI, ISC };

/// Applies one composition. n must be a unit; SCI additionally rejects
/// n = -1 mod p and CSI rejects n = 1 mod p (division by a non-unit).
/// Seeds outside {0, 1, -1 mod p} iterate safely under every kind.
Residue dfs_apply(DfsKind kind, const Residue& n);

enum class TripletKind { generic, pth_power, cubic_root, degenerate };

std::string to_string(TripletKind k);

/// Three inverse-pairs (a,b,c): a + b^{-1} = b + c^{-1} = c + a^{-1} = -1
/// and abc = 1. Validated on construction, never assumed.
struct Triplet {
    Residue a, b, c;
    TripletKind kind;
};

/// SCI orbit of n: (n, SCI n, SCI^2 n). errc::precondition when the orbit
/// hits a non-invertible value (n = -1 mod p).
Triplet generate_triplet(const Residue& n);

/// All x with x^2 + x + 1 = 0 mod p^k, found mod p and lifted digit by
/// digit; empty exactly when p != 1 mod 6. Each root satisfies x^3 = 1,
/// x != 1, x + x^{-1} = -1, lies in the core and in F_k.
std::vector<Residue> find_cubic_roots(const Modulus& mod);

/// One canonical triplet of p-th power residues mod p^2 (all members in
/// core A_2 = F_2). Values are the plain residues.
struct TripletTriple {
    std::array<std::uint64_t, 3> r;
    TripletKind kind = TripletKind::generic;
};

struct TripletReport {
    std::uint64_t p = 0;
    std::uint64_t generator = 0;  // smallest generator of the units mod p^2
    std::vector<std::array<std::uint64_t, 2>> cubic_roots;  // root pairs (x, x^{-1})
    std::vector<TripletTriple> pth_triplets;                // canonical, ascending
};

/// Exhaustive triplet^p search mod p^2. Cubic-root solutions are reported
/// as root pairs, not triplets; the degenerate triplet (1, -2^{-1}, -2)
/// appears exactly when 2 is a p-th power residue mod p^2 (Wieferich p).
TripletReport find_pth_triplets(std::uint64_t p);

/// Reports for every odd prime p < limit, ascending. threads = 0 picks the
/// hardware count; output is deterministic regardless.
std::vector<TripletReport> scan_primes(std::uint64_t limit, unsigned threads = 1);

/// Divide x^p + y^p = z^p through by (-z)^p: (a, b) = (x, y) * (-z)^{-1}
/// satisfies a^p + b^p = -1. Inputs must be units satisfying the powersum
/// equivalence.
std::pair<Residue, Residue> normalize_powersum(const Residue& x, const Residue& y, const Residue& z);

} // namespace zpk
