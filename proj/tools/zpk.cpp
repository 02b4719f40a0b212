// zpk: units-group arithmetic mod p^k. Subcommands map onto the library
// operations; --format json switches every report to a stable JSON
// document. Exit codes: 0 ok, 1 suite/invariant failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zpk/digits.hpp"
#include "zpk/error.hpp"
#include "zpk/fermat.hpp"
#include "zpk/report.hpp"
#include "zpk/triplets.hpp"
#include "zpk/units.hpp"
#include "zpk/verify.hpp"

namespace {

struct Options {
    std::uint64_t p = 7;
    unsigned k = 2;
    std::uint64_t limit = 200;
    unsigned width = 9;
    unsigned rows = 21;
    std::string format = "text";
    bool show_logs = false;
    std::uint64_t p_max = 19;
    unsigned k_max = 3;
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

bool json_mode(const Options& o) { return o.format == "json"; }

int run_core(const Options& o) {
    zpk::CoreTable table(zpk::make_modulus(o.p, o.k));
    std::cout << (json_mode(o) ? zpk::json_core(table) : zpk::emit_core_text(table));
    return 0;
}

int run_triplets(const Options& o) {
    auto rep = zpk::find_pth_triplets(o.p);
    std::cout << (json_mode(o) ? zpk::json_triplets(rep, o.show_logs)
                               : zpk::emit_triplets_text(rep, o.show_logs));
    return 0;
}

int run_scan(const Options& o, bool paper_layout) {
    auto reports = zpk::scan_primes(o.limit, o.threads);
    (void)paper_layout;
    std::cout << (json_mode(o) ? zpk::json_table2(reports, o.show_logs)
                               : zpk::emit_table2_text(reports, o.show_logs));
    return 0;
}

int run_table1(const Options& o) {
    auto t = zpk::table1_generate(o.p, o.width, o.rows);
    std::cout << (json_mode(o) ? zpk::json_table1(t) : zpk::emit_table1_text(t));
    return 0;
}

int run_wieferich(const Options& o) {
    auto primes = zpk::wieferich_scan(o.limit);
    std::cout << (json_mode(o) ? zpk::json_wieferich(primes, o.limit)
                               : zpk::emit_wieferich_text(primes));
    return 0;
}

int run_witness(const Options& o) {
    zpk::Modulus mod = zpk::make_modulus(o.p, o.k);
    zpk::PowerSumWitness w;
    if (o.p % 6 == 1) {
        auto roots = zpk::find_cubic_roots(mod);
        w = zpk::powersum_witness(roots[0], roots[1], zpk::Residue(-1, mod));
    } else {
        if (o.k != 2)
            zpk::fail(zpk::errc::precondition, "triplet witnesses are searched at k = 2");
        auto rep = zpk::find_pth_triplets(o.p);
        if (rep.pth_triplets.empty())
            zpk::fail(zpk::errc::precondition, "no powersum equivalence exists for this prime");
        const auto& t = rep.pth_triplets.front().r;
        zpk::Residue u(t[0], mod);
        zpk::Residue v = zpk::Residue(t[1], mod).inverse();
        w = zpk::powersum_witness(u, v, zpk::Residue(-1, mod));
    }
    std::cout << (json_mode(o) ? zpk::json_witness(w) : zpk::emit_witness_text(w));
    return 0;
}

int run_verify(const Options& o) {
    zpk::VerifyOptions vo;
    vo.p_max = o.p_max;
    vo.k_max = o.k_max;
    vo.seed = o.seed;
    auto results = zpk::run_verification(vo);
    std::cout << (json_mode(o) ? zpk::json_verify(results, vo) : zpk::emit_verify_text(results));
    return zpk::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"units-group arithmetic and table reproduction mod p^k"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* core = app.add_subcommand("core", "core subgroup A_k of the units mod p^k");
    core->add_option("--p", o.p, "odd prime")->required();
    core->add_option("--k", o.k, "precision exponent");
    add_format(core);

    auto* triplets = app.add_subcommand("triplets", "triplet^p search mod p^2 for one prime");
    triplets->add_option("--p", o.p, "odd prime")->required();
    triplets->add_flag("--show-logs", o.show_logs, "append discrete logs");
    add_format(triplets);

    auto* scan = app.add_subcommand("scan", "classify every odd prime below --limit");
    scan->add_option("--limit", o.limit, "upper bound (exclusive)");
    scan->add_option("--threads", o.threads, "worker threads, 0 = auto");
    scan->add_flag("--show-logs", o.show_logs, "append discrete logs");
    add_format(scan);

    auto* table2 = app.add_subcommand("table2", "prime classification lines (same data as scan)");
    table2->add_option("--limit", o.limit, "upper bound (exclusive)");
    table2->add_option("--threads", o.threads, "worker threads, 0 = auto");
    table2->add_flag("--show-logs", o.show_logs, "append discrete logs");
    add_format(table2);

    auto* table1 = app.add_subcommand("table1", "digit table of n^p and periodic differences");
    table1->add_option("--p", o.p, "odd prime");
    table1->add_option("--width", o.width, "digits per column");
    table1->add_option("--rows", o.rows, "row count");
    add_format(table1);

    auto* wieferich = app.add_subcommand("wieferich", "primes with 2^p = 2 mod p^2 below --limit");
    wieferich->add_option("--limit", o.limit, "upper bound (exclusive), <= 10^7");
    add_format(wieferich);

    auto* witness = app.add_subcommand("witness", "integer powersum witness for p^k");
    witness->add_option("--p", o.p, "odd prime")->required();
    witness->add_option("--k", o.k, "precision exponent");
    add_format(witness);

    auto* verify = app.add_subcommand("verify", "run the structural property suites");
    verify->add_option("--p-max", o.p_max, "exhaustive tier bound");
    verify->add_option("--k-max", o.k_max, "max precision exponent");
    verify->add_option("--seed", o.seed, "seed for sampled checks");
    verify->add_option("--threads", o.threads, "worker threads (reports are deterministic)");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (core->parsed()) return run_core(o);
        if (triplets->parsed()) return run_triplets(o);
        if (scan->parsed()) return run_scan(o, false);
        if (table2->parsed()) return run_scan(o, true);
        if (table1->parsed()) return run_table1(o);
        if (wieferich->parsed()) return run_wieferich(o);
        if (witness->parsed()) return run_witness(o);
        if (verify->parsed()) return run_verify(o);
    } catch (const zpk::error& e) {
        std::cerr << "zpk: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "zpk: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
