// harmonia: exact-arithmetic verification of harmonic-number congruences
// modulo p^2 for primes p.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmonia/bernoulli.hpp"
#include "harmonia/checks.hpp"
#include "harmonia/exact_oracle.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/report.hpp"
#include "harmonia/scan.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

unsigned default_jobs() {
    if (const char* env = std::getenv("HARMONIA_JOBS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return 1;
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> ids;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) ids.push_back(item);
    return ids;
}

struct VerifyArgs {
    std::uint64_t prime = 0;
    std::string checks;
    std::string format = "table";
};

int cmd_verify(const VerifyArgs& args) {
    using namespace harmonia;
    if (!is_prime(args.prime)) {
        std::cerr << "error: " << args.prime << " is not prime\n";
        return kExitUsage;
    }

    std::vector<std::string> selected;
    if (args.checks.empty()) {
        for (const CheckDescriptor& d : list_checks()) selected.emplace_back(d.id);
    } else {
        selected = split_ids(args.checks);
        for (const std::string& id : selected) {
            try {
                find_check(id);
            } catch (const UnknownCheck&) {
                std::cerr << "error: unknown check id '" << id << "'\n";
                return kExitUsage;
            }
        }
    }

    const bool small_only = [&] {
        for (const std::string& id : selected)
            if (find_check(id).min_prime > 5) return false;
        return true;
    }();
    if (args.prime < 7 && !(args.prime == 5 && small_only)) {
        std::cerr << "error: prime must be >= 7 (5 is allowed for "
                     "wolstenholme_h1/reflection_eq6 only)\n";
        return kExitUsage;
    }

    ReportFormat fmt;
    try {
        fmt = parse_format(args.format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    // p = 5 carries no B_{p-5} data and the streaming engine starts at 7;
    // the exact oracle covers it.
    HarmonicProfile prof;
    Residue b;
    if (args.prime >= 7) {
        prof = compute_profile(args.prime);
        b = b_target(args.prime);
    } else {
        prof = reduce_profile(exact_profile(args.prime - 1), make_ring(args.prime, 2));
        b = Residue(0, make_ring(args.prime, 1));
    }

    std::vector<CheckResult> results;
    for (const CheckDescriptor& d : list_checks()) {
        for (const std::string& id : selected) {
            if (id == d.id) {
                results.push_back(run_check(d.id, prof, b));
                break;
            }
        }
    }

    bool all_pass = true;
    for (const CheckResult& r : results) all_pass &= r.pass;
    if (fmt == ReportFormat::table) {
        std::cout << format_table(results);
    } else {
        if (fmt == ReportFormat::csv) std::cout << kCsvHeader << '\n';
        for (const CheckResult& r : results) write_record(std::cout, r, fmt);
    }
    return all_pass ? kExitPass : kExitCheckFailed;
}

struct ScanArgs {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    unsigned jobs = 1;
    std::string out_path;
    std::string format = "jsonl";
};

int cmd_scan(const ScanArgs& args) {
    using namespace harmonia;
    if (args.from < 7 || args.from > args.to) {
        std::cerr << "error: requires 7 <= from <= to\n";
        return kExitUsage;
    }
    ReportFormat fmt;
    try {
        fmt = parse_format(args.format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (fmt == ReportFormat::table) {
        std::cerr << "error: scan streams jsonl or csv\n";
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) {
            std::cerr << "error: cannot open " << args.out_path << "\n";
            return kExitUsage;
        }
        os = &file;
    }
    if (fmt == ReportFormat::csv) *os << kCsvHeader << '\n';

    bool all_pass = scan_primes(args.from, args.to, args.jobs,
                                [&](const CheckResult& r) { write_record(*os, r, fmt); });
    os->flush();
    return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_oracle(std::uint64_t max_prime) {
    using namespace harmonia;
    if (max_prime < 7 || max_prime > 199) {
        std::cerr << "error: requires 7 <= max-prime <= 199\n";
        return kExitUsage;
    }
    std::size_t mismatches = 0, compared = 0;
    for (u64 p : sieve_primes(7, max_prime)) {
        const HarmonicProfile engine = compute_profile(p);
        const HarmonicProfile oracle = reduce_profile(exact_profile(p - 1), make_ring(p, 2));
        bool ok = true;
        for (const auto& [field, equal] : compare_profiles(engine, oracle)) {
            if (!equal) {
                std::cout << "p=" << p << " MISMATCH " << field << "\n";
                ok = false;
                ++mismatches;
            }
        }
        if (ok) std::cout << "p=" << p << " all fields agree\n";
        ++compared;
    }
    std::cout << compared << " primes compared, " << mismatches << " field mismatches\n";
    return mismatches == 0 ? kExitPass : kExitCheckFailed;
}

long peak_rss_kb() {
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            std::istringstream is(line.substr(6));
            long kb = 0;
            is >> kb;
            return kb;
        }
    }
    return -1;
}

int cmd_bench(std::uint64_t prime) {
    using namespace harmonia;
    using clock = std::chrono::steady_clock;
    if (!is_prime(prime) || prime < 7) {
        std::cerr << "error: requires a prime >= 7\n";
        return kExitUsage;
    }
    const auto t0 = clock::now();
    const HarmonicProfile prof = compute_profile(prime);
    const auto t1 = clock::now();
    const Residue b = b_target(prime);
    const auto t2 = clock::now();
    const std::vector<CheckResult> results = evaluate_all(prof, b);
    const auto t3 = clock::now();

    std::size_t passed = 0;
    for (const CheckResult& r : results) passed += r.pass;
    auto ms = [](auto a, auto b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    const long rss = peak_rss_kb();
    std::cout << "prime=" << prime
              << " profile_ms=" << ms(t0, t1)
              << " bernoulli_ms=" << ms(t1, t2)
              << " checks_ms=" << ms(t2, t3)
              << " total_ms=" << ms(t0, t3)
              << " peak_rss_mb=" << (rss < 0 ? -1.0 : rss / 1024.0)
              << " checks_passed=" << passed << "/" << results.size() << "\n";
    return passed == results.size() ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of harmonic-number congruences mod p^2"};
    app.require_subcommand(1);

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "run checks for a single prime");
    verify->add_option("--prime", vargs.prime, "prime to verify")->required();
    verify->add_option("--checks", vargs.checks, "comma-separated check ids (default: all)");
    verify->add_option("--format", vargs.format, "table|jsonl|csv")->default_val("table");

    ScanArgs sargs;
    sargs.jobs = default_jobs();
    CLI::App* scan = app.add_subcommand("scan", "verify every prime in a range");
    scan->add_option("--from", sargs.from, "lower bound (inclusive, >= 7)")->required();
    scan->add_option("--to", sargs.to, "upper bound (inclusive)")->required();
    scan->add_option("--jobs", sargs.jobs, "worker threads (default: HARMONIA_JOBS or 1)");
    scan->add_option("--out", sargs.out_path, "write records to a file instead of stdout");
    scan->add_option("--format", sargs.format, "jsonl|csv")->default_val("jsonl");

    std::uint64_t max_prime = 0;
    CLI::App* oracle = app.add_subcommand("oracle",
                                          "compare the streaming engine against the exact-rational oracle");
    oracle->add_option("--max-prime", max_prime, "compare primes up to this bound (<= 199)")->required();

    std::uint64_t bench_prime = 0;
    CLI::App* bench = app.add_subcommand("bench", "time the full per-prime pipeline");
    bench->add_option("--prime", bench_prime, "prime to benchmark")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(vargs);
        if (scan->parsed()) return cmd_scan(sargs);
        if (oracle->parsed()) return cmd_oracle(max_prime);
        if (bench->parsed()) return cmd_bench(bench_prime);
    } catch (const harmonia::BadRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const harmonia::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
