#pragma once

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "harmonia/checks.hpp"
#include "harmonia/errors.hpp"

namespace harmonia {

enum class ReportFormat { table, jsonl, csv };

inline ReportFormat parse_format(std::string_view s) {
    if (s == "table") return ReportFormat::table;
    if (s == "jsonl") return ReportFormat::jsonl;
    if (s == "csv") return ReportFormat::csv;
    throw Error("unknown format: " + std::string(s));
}

namespace detail {

// JSON numbers above 2^53 lose precision in double-based readers; emit those
// as decimal strings.
inline void append_json_int(std::string& out, u64 v) {
    constexpr u64 kSafe = 1ull << 53;
    if (v > kSafe) {
        out += '"';
        out += std::to_string(v);
        out += '"';
    } else {
        out += std::to_string(v);
    }
}

} // namespace detail

// One record per check, fixed key order, no whitespace: streamable and
// byte-stable across runs (elapsed_ns aside).
inline std::string to_jsonl(const CheckResult& r) {
    std::string out;
    out.reserve(160);
    out += "{\"prime\":";
    detail::append_json_int(out, r.prime);
    out += ",\"check\":\"";
    out += r.check;
    out += "\",\"modulus\":";
    detail::append_json_int(out, r.modulus);
    out += ",\"lhs\":";
    detail::append_json_int(out, r.lhs);
    out += ",\"rhs\":";
    detail::append_json_int(out, r.rhs);
    out += ",\"residual\":";
    detail::append_json_int(out, r.residual);
    out += ",\"pass\":";
    out += r.pass ? "true" : "false";
    out += ",\"elapsed_ns\":";
    detail::append_json_int(out, r.elapsed_ns);
    out += "}";
    return out;
}

inline constexpr std::string_view kCsvHeader = "prime,check,modulus,lhs,rhs,residual,pass,elapsed_ns";

inline std::string to_csv(const CheckResult& r) {
    std::string out;
    out.reserve(120);
    out += std::to_string(r.prime);
    out += ',';
    out += r.check;
    out += ',';
    out += std::to_string(r.modulus);
    out += ',';
    out += std::to_string(r.lhs);
    out += ',';
    out += std::to_string(r.rhs);
    out += ',';
    out += std::to_string(r.residual);
    out += ',';
    out += r.pass ? "true" : "false";
    out += ',';
    out += std::to_string(r.elapsed_ns);
    return out;
}

inline CheckResult from_csv(std::string_view line) {
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        cols.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (cols.size() != 8) throw Error("from_csv: expected 8 columns");
    auto to_u64 = [](std::string_view s) {
        u64 v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw Error("from_csv: bad integer field");
        return v;
    };
    CheckResult r;
    r.prime = to_u64(cols[0]);
    r.check = std::string(cols[1]);
    r.modulus = to_u64(cols[2]);
    r.lhs = to_u64(cols[3]);
    r.rhs = to_u64(cols[4]);
    r.residual = to_u64(cols[5]);
    r.pass = cols[6] == "true";
    r.elapsed_ns = to_u64(cols[7]);
    return r;
}

inline std::string format_table(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "check" << std::right << std::setw(10) << "prime"
       << std::setw(22) << "modulus" << std::setw(22) << "lhs" << std::setw(22) << "rhs"
       << std::setw(22) << "residual" << "  result\n";
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        os << std::left << std::setw(18) << r.check << std::right << std::setw(10) << r.prime
           << std::setw(22) << r.modulus << std::setw(22) << r.lhs << std::setw(22) << r.rhs
           << std::setw(22) << r.residual << "  " << (r.pass ? "pass" : "FAIL") << "\n";
        if (r.pass) ++passed;
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

inline void write_record(std::ostream& os, const CheckResult& r, ReportFormat fmt) {
    switch (fmt) {
    case ReportFormat::jsonl: os << to_jsonl(r) << '\n'; break;
    case ReportFormat::csv: os << to_csv(r) << '\n'; break;
    case ReportFormat::table: break; // tables are rendered whole, not streamed
    }
}

} // namespace harmonia
