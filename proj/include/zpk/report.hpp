#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zpk/fermat.hpp"
#include "zpk/triplets.hpp"
#include "zpk/units.hpp"
#include "zpk/verify.hpp"

namespace zpk {

inline constexpr const char* kVersion = "0.1.0";

/// "01 42 43 24 25 66": base-p digit strings of A(1)..A(p-1), k digits wide.
std::string emit_core_text(const CoreTable& table);

/// Fixed-layout digit table, one row per n.
std::string emit_table1_text(const Table1& t);

/// One line per odd prime: "p:± g [C3] [T<n>: (a,b,c) ...]" where ± marks
/// p = ±1 mod 6 and C3 flags a cubic root pair. show_logs appends discrete
/// logs w.r.t. the listed generator.
std::string emit_table2_text(const std::vector<TripletReport>& reports, bool show_logs = false);

std::string emit_triplets_text(const TripletReport& report, bool show_logs = false);
std::string emit_wieferich_text(const std::vector<std::uint64_t>& primes);
std::string emit_witness_text(const PowerSumWitness& w);
std::string emit_verify_text(const std::vector<CheckResult>& results);

// JSON documents: {"command", "params", "results", "version"} with sorted
// keys and deterministic list order. Residues are decimal strings; digit
// strings carry an explicit base.
std::string json_core(const CoreTable& table);
std::string json_table1(const Table1& t);
std::string json_table2(const std::vector<TripletReport>& reports, bool show_logs = false);
std::string json_triplets(const TripletReport& report, bool show_logs = false);
std::string json_wieferich(const std::vector<std::uint64_t>& primes, std::uint64_t limit);
std::string json_witness(const PowerSumWitness& w);
std::string json_verify(const std::vector<CheckResult>& results, const VerifyOptions& opts);

} // namespace zpk
