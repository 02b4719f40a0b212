#include "zpk/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "zpk/digits.hpp"

namespace zpk {

namespace {

using nlohmann::json;

std::string dec(const BigInt& v) { return v.str(); }

json base_doc(const std::string& command, json params, json results) {
    json doc;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["results"] = std::move(results);
    doc["version"] = kVersion;
    return doc;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

char prime_type(std::uint64_t p) { return p % 6 == 1 ? '+' : '-'; }

// Discrete logs of a triplet w.r.t. the report's generator, for --show-logs.
std::array<BigInt, 3> triplet_logs(const TripletReport& rep, const TripletTriple& t) {
    Modulus mod = make_modulus(rep.p, 2);
    Residue g(rep.generator, mod);
    BigInt order = mod.unit_group_order();
    return {discrete_log(g, Residue(t.r[0], mod), order),
            discrete_log(g, Residue(t.r[1], mod), order),
            discrete_log(g, Residue(t.r[2], mod), order)};
}

void append_triplets(std::ostringstream& os, const TripletReport& rep, bool show_logs) {
    if (rep.pth_triplets.empty()) return;
    os << " T" << rep.pth_triplets.size() << ":";
    for (const auto& t : rep.pth_triplets) {
        os << " (" << t.r[0] << "," << t.r[1] << "," << t.r[2] << ")";
        if (t.kind == TripletKind::degenerate) os << "*";
        if (show_logs) {
            auto logs = triplet_logs(rep, t);
            os << " log(" << logs[0] << "," << logs[1] << "," << logs[2] << ")";
        }
    }
}

json triplet_report_json(const TripletReport& rep, bool show_logs) {
    json r;
    r["p"] = rep.p;
    r["type"] = std::string(1, prime_type(rep.p));
    r["generator"] = rep.generator;
    r["c3"] = !rep.cubic_roots.empty();
    json roots = json::array();
    for (const auto& pr : rep.cubic_roots) roots.push_back({pr[0], pr[1]});
    r["cubic_roots"] = std::move(roots);
    json trips = json::array();
    for (const auto& t : rep.pth_triplets) {
        json tj;
        tj["residues"] = {std::to_string(t.r[0]), std::to_string(t.r[1]), std::to_string(t.r[2])};
        tj["kind"] = to_string(t.kind);
        if (show_logs) {
            auto logs = triplet_logs(rep, t);
            tj["logs"] = {dec(logs[0]), dec(logs[1]), dec(logs[2])};
        }
        trips.push_back(std::move(tj));
    }
    r["triplets"] = std::move(trips);
    r["triplet_count"] = rep.pth_triplets.size();
    return r;
}

} // namespace

std::string emit_core_text(const CoreTable& table) {
    std::ostringstream os;
    const unsigned k = table.modulus().k();
    bool first = true;
    for (const Residue& r : table.entries()) {
        if (!first) os << ' ';
        os << render(to_digits(r, k));
        first = false;
    }
    os << '\n';
    return os.str();
}

std::string emit_table1_text(const Table1& t) {
    std::ostringstream os;
    for (const auto& row : t.rows) {
        os.width(3);
        os << row.n << ".  " << row.n_digits << "   " << row.f << "   " << row.pd0 << "   "
           << row.pd1 << "   " << row.pd2 << '\n';
    }
    return os.str();
}

std::string emit_triplets_text(const TripletReport& rep, bool show_logs) {
    std::ostringstream os;
    os << rep.p << ":" << prime_type(rep.p) << " " << rep.generator;
    if (!rep.cubic_roots.empty()) {
        os << " C3";
        for (const auto& pr : rep.cubic_roots) os << " (" << pr[0] << "," << pr[1] << ")";
    }
    append_triplets(os, rep, show_logs);
    os << '\n';
    return os.str();
}

std::string emit_table2_text(const std::vector<TripletReport>& reports, bool show_logs) {
    std::ostringstream os;
    for (const auto& rep : reports) {
        os << rep.p << ":" << prime_type(rep.p) << " " << rep.generator;
        if (!rep.cubic_roots.empty()) os << " C3";
        append_triplets(os, rep, show_logs);
        os << '\n';
    }
    return os.str();
}

std::string emit_wieferich_text(const std::vector<std::uint64_t>& primes) {
    std::ostringstream os;
    for (std::uint64_t p : primes) os << p << '\n';
    return os.str();
}

std::string emit_witness_text(const PowerSumWitness& w) {
    std::ostringstream os;
    const std::size_t digits = static_cast<std::size_t>(w.p) * w.k;
    os << "p = " << w.p << ", k = " << w.k << ", modulus p^k\n";
    os << "x, y, z = " << w.x << ", " << w.y << ", " << w.z << "\n";
    os << "X^p + Y^p = " << w.lhs << " = " << render(to_digits(w.lhs, w.p, digits)) << " (base "
       << w.p << ")\n";
    os << "Z^p       = " << w.rhs << " = " << render(to_digits(w.rhs, w.p, digits)) << " (base "
       << w.p << ")\n";
    os << "first mismatching digit index: " << w.mismatch_index << " (equal mod p^"
       << w.mismatch_index << ")\n";
    return os.str();
}

std::string emit_verify_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) os << " (" << r.detail << ")";
        os << '\n';
        if (r.pass) ++passed;
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

std::string json_core(const CoreTable& table) {
    const Modulus& mod = table.modulus();
    std::vector<BigInt> sorted;
    for (const Residue& r : table.entries()) sorted.push_back(r.value());
    std::sort(sorted.begin(), sorted.end());
    json results = json::array();
    for (const BigInt& v : sorted) results.push_back(dec(v));
    json params;
    params["p"] = mod.p();
    params["k"] = mod.k();
    params["base"] = mod.p();
    return dump(base_doc("core", std::move(params), std::move(results)));
}

std::string json_table1(const Table1& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r;
        r["n"] = row.n;
        r["n_digits"] = row.n_digits;
        r["f"] = row.f;
        r["pd0"] = row.pd0;
        r["pd1"] = row.pd1;
        r["pd2"] = row.pd2;
        rows.push_back(std::move(r));
    }
    json params;
    params["p"] = t.p;
    params["width"] = t.width;
    params["rows"] = t.rows.size();
    params["base"] = t.p;
    return dump(base_doc("table1", std::move(params), std::move(rows)));
}

std::string json_table2(const std::vector<TripletReport>& reports, bool show_logs) {
    json results = json::array();
    for (const auto& rep : reports) results.push_back(triplet_report_json(rep, show_logs));
    json params;
    params["limit"] = reports.empty() ? 0 : reports.back().p + 1;
    params["count"] = reports.size();
    return dump(base_doc("table2", std::move(params), std::move(results)));
}

std::string json_triplets(const TripletReport& rep, bool show_logs) {
    json params;
    params["p"] = rep.p;
    return dump(base_doc("triplets", std::move(params), json::array({triplet_report_json(rep, show_logs)})));
}

std::string json_wieferich(const std::vector<std::uint64_t>& primes, std::uint64_t limit) {
    json params;
    params["limit"] = limit;
    json results = json::array();
    for (std::uint64_t p : primes) results.push_back(p);
    return dump(base_doc("wieferich", std::move(params), std::move(results)));
}

std::string json_witness(const PowerSumWitness& w) {
    json params;
    params["p"] = w.p;
    params["k"] = w.k;
    json r;
    r["x"] = dec(w.x);
    r["y"] = dec(w.y);
    r["z"] = dec(w.z);
    r["lhs"] = dec(w.lhs);
    r["rhs"] = dec(w.rhs);
    const std::size_t digits = static_cast<std::size_t>(w.p) * w.k;
    r["lhs_digits"] = render(to_digits(w.lhs, w.p, digits));
    r["rhs_digits"] = render(to_digits(w.rhs, w.p, digits));
    r["base"] = w.p;
    r["mismatch_index"] = w.mismatch_index;
    return dump(base_doc("witness", std::move(params), json::array({std::move(r)})));
}

std::string json_verify(const std::vector<CheckResult>& results, const VerifyOptions& opts) {
    json params;
    params["p_max"] = opts.p_max;
    params["k_max"] = opts.k_max;
    params["sampled_p_max"] = opts.sampled_p_max;
    params["seed"] = opts.seed;
    json rs = json::array();
    for (const auto& r : results) {
        json cj;
        cj["name"] = r.name;
        cj["pass"] = r.pass;
        cj["detail"] = r.detail;
        rs.push_back(std::move(cj));
    }
    return dump(base_doc("verify", std::move(params), std::move(rs)));
}

} // namespace zpk
