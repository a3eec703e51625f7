// dseqtool: d-sequence bitstream generator and analyzer.
//
// Subcommands: period, gen, analyze, autocorr, dseq, tables.
// Exit codes: 0 success, 1 usage error, 2 domain/config error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dseq/analysis.hpp"
#include "dseq/bit_io.hpp"
#include "dseq/dsequence.hpp"
#include "dseq/modmath.hpp"
#include "dseq/multi_recursive.hpp"
#include "dseq/recursive.hpp"
#include "dseq/reference_tables.hpp"

namespace {

using dseq::u64;
using json = nlohmann::ordered_json;

struct ConfigFlags {
    u64 seed = 2;
    std::vector<u64> level1;
    std::vector<u64> level2;
    u64 level3 = 0;  // 0 = no third level
    std::string format = "text";
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags, bool with_format = true) {
    cmd->add_option("--seed", flags.seed, "seed S (default 2)");
    cmd->add_option("--level1", flags.level1, "first-level primes, comma separated")
        ->required()
        ->delimiter(',');
    cmd->add_option("--level2", flags.level2, "second-level primes, comma separated")
        ->required()
        ->delimiter(',');
    cmd->add_option("--level3", flags.level3, "third-level prime (enables the three-level generator)");
    if (with_format)
        cmd->add_option("--format", flags.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
}

dseq::RecursiveConfig to_config(const ConfigFlags& flags) {
    return dseq::RecursiveConfig{flags.seed, flags.level1, flags.level2};
}

// Config warnings go to stderr and never affect the exit status.
void report_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
}

std::string join(const std::vector<u64>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
}

int run_period(const ConfigFlags& flags) {
    auto config = to_config(flags);
    report_warnings(dseq::validate(config));
    auto bd = dseq::total_period(config);

    std::optional<dseq::ThirdLevelSummary> third;
    if (flags.level3) {
        dseq::MultiConfig multi{config, flags.level3};
        dseq::validate(multi);
        third = dseq::third_level_summary(multi);
    }

    if (flags.format == "json") {
        json report;
        report["seed"] = flags.seed;
        report["level1"] = flags.level1;
        report["level2"] = flags.level2;
        if (flags.level3) report["level3"] = flags.level3;
        report["t"] = bd.t;
        report["seeds"] = bd.seeds;
        report["k"] = bd.k;
        report["L"] = bd.period;
        if (third) {
            report["v_min"] = third->v_min;
            report["v_max"] = third->v_max;
            report["total_length"] = third->total_length;
        }
        std::cout << report.dump() << "\n";
    } else {
        std::cout << "seed: " << flags.seed << "\n";
        std::cout << "level1: " << join(flags.level1) << "\n";
        std::cout << "level2: " << join(flags.level2) << "\n";
        if (flags.level3) std::cout << "level3: " << flags.level3 << "\n";
        std::cout << "t: " << bd.t << "\n";
        std::cout << "seeds: " << join(bd.seeds) << "\n";
        std::cout << "k: " << join(bd.k) << "\n";
        std::cout << "L: " << bd.period << "\n";
        if (third) {
            std::cout << "v_min: " << third->v_min << "\n";
            std::cout << "v_max: " << third->v_max << "\n";
            std::cout << "total_length: " << third->total_length << "\n";
        }
    }
    return 0;
}

dseq::Bits stream_bits(const ConfigFlags& flags, std::optional<u64> count, u64 max_bits) {
    auto config = to_config(flags);
    report_warnings(dseq::validate(config));
    if (flags.level3) {
        dseq::MultiConfig multi{config, flags.level3};
        dseq::validate(multi);
        return count ? dseq::generate_multi(multi, *count)
                     : dseq::generate_multi_full(multi, max_bits);
    }
    return count ? dseq::generate(config, *count) : dseq::generate_full(config, max_bits);
}

void emit_bits(const dseq::Bits& bits, const std::string& encoding, const std::string& out_path) {
    if (encoding == "packed") {
        auto bytes = dseq::to_packed(bits);
        if (out_path.empty()) {
            std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                            static_cast<std::streamsize>(bytes.size()));
        } else {
            std::ofstream out(out_path, std::ios::binary);
            out.write(reinterpret_cast<const char*>(bytes.data()),
                      static_cast<std::streamsize>(bytes.size()));
            if (!out)
                throw std::runtime_error("cannot write file: " + out_path);
        }
        return;
    }
    std::string text = dseq::to_ascii(bits);
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

int run_gen(const ConfigFlags& flags, std::optional<u64> count, u64 max_bits,
            const std::string& encoding, const std::string& out_path) {
    emit_bits(stream_bits(flags, count, max_bits), encoding, out_path);
    return 0;
}

int run_analyze(const ConfigFlags& flags, bool use_stdin, u64 max_bits) {
    dseq::Bits bits;
    if (use_stdin) {
        bits = dseq::from_ascii(std::cin);
    } else {
        bits = stream_bits(flags, std::nullopt, max_bits);
    }
    if (bits.empty())
        throw std::domain_error("no bits to analyze");
    std::size_t ones = 0;
    for (auto b : bits) ones += b;
    double r = dseq::randomness_measure(bits);
    if (flags.format == "json") {
        json report;
        report["n"] = bits.size();
        report["ones"] = ones;
        report["zeros"] = bits.size() - ones;
        report["R"] = r;
        std::cout << report.dump() << "\n";
    } else {
        std::cout << "n=" << bits.size() << " ones=" << ones
                  << " zeros=" << bits.size() - ones << " R=" << fixed(r, 6) << "\n";
    }
    return 0;
}

int run_autocorr(const ConfigFlags& flags, u64 max_bits, const std::string& out_path) {
    auto bits = stream_bits(flags, std::nullopt, max_bits);
    auto profile = dseq::autocorr_profile(bits);
    std::string csv = "k,C\n";
    for (std::size_t k = 1; k <= profile.n; ++k) {
        csv += std::to_string(k);
        csv.push_back(',');
        csv += fixed(profile.c[k - 1], 9);
        csv.push_back('\n');
    }
    if (out_path.empty())
        std::cout << csv;
    else
        write_text_file(out_path, csv);
    return 0;
}

int run_dseq(u64 prime, u64 base, u64 count, const std::string& encoding,
             const std::string& out_path) {
    dseq::DSequenceSpec spec(prime, base);
    emit_bits(dseq::d_sequence(spec, count), encoding, out_path);
    return 0;
}

u64 computed_period(u64 p11, u64 p12, u64 p21, u64 p22) {
    dseq::RecursiveConfig config{2, {p11, p12}, {p21, p22}};
    return dseq::total_period(config).period;
}

int run_tables(int which) {
    char line[256];
    if (which == 1) {
        std::cout << "Table 1 (seed 2)\n";
        std::cout << " p11  p12  p21  p22    period  published         R  published_R  status\n";
        for (const auto& row : dseq::reference::kTable1) {
            u64 period = computed_period(row.p11, row.p12, row.p21, row.p22);
            dseq::RecursiveConfig config{2, {row.p11, row.p12}, {row.p21, row.p22}};
            double r = dseq::randomness_measure(dseq::generate_full(config));
            bool match = period == row.published_period &&
                         std::abs(r - row.published_r) <= 0.02;
            std::snprintf(line, sizeof line,
                          "%4llu %4llu %4llu %4llu  %8llu  %9llu  %s     %s  %s",
                          (unsigned long long)row.p11, (unsigned long long)row.p12,
                          (unsigned long long)row.p21, (unsigned long long)row.p22,
                          (unsigned long long)period,
                          (unsigned long long)row.published_period, fixed(r, 6).c_str(),
                          fixed(row.published_r, 6).c_str(), match ? "MATCH" : "MISMATCH");
            std::cout << line;
            if (!match && row.note) std::cout << "  " << row.note;
            std::cout << "\n";
        }
        return 0;
    }
    const std::span<const dseq::reference::PeriodRow> rows =
        which == 2 ? std::span<const dseq::reference::PeriodRow>(dseq::reference::kTable2)
                   : std::span<const dseq::reference::PeriodRow>(dseq::reference::kTable3);
    std::cout << "Table " << which << " (seed 2)\n";
    std::cout << " p11  p12  p21  p22    computed   published  status\n";
    for (const auto& row : rows) {
        u64 period = computed_period(row.p11, row.p12, row.p21, row.p22);
        bool match = period == row.published_period;
        std::snprintf(line, sizeof line, "%4llu %4llu %4llu %4llu  %10llu  %10llu  %s",
                      (unsigned long long)row.p11, (unsigned long long)row.p12,
                      (unsigned long long)row.p21, (unsigned long long)row.p22,
                      (unsigned long long)period, (unsigned long long)row.published_period,
                      match ? "MATCH" : "MISMATCH");
        std::cout << line;
        if (!match && row.note) std::cout << "  " << row.note;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-sequence bitstream toolkit"};
    app.require_subcommand(1);

    ConfigFlags period_flags;
    auto* period = app.add_subcommand("period", "print the period breakdown of a config");
    add_config_flags(period, period_flags);

    ConfigFlags gen_flags;
    u64 gen_count = 0;
    bool gen_full = false;
    u64 gen_max_bits = dseq::kDefaultBitBudget;
    std::string gen_encoding = "ascii";
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a bitstream");
    add_config_flags(gen, gen_flags, /*with_format=*/false);
    auto* count_group = gen->add_option_group("amount");
    count_group->add_option("--count", gen_count, "number of bits")
        ->check(CLI::PositiveNumber);
    count_group->add_flag("--full", gen_full, "emit exactly one full period");
    count_group->require_option(1);
    gen->add_option("--max-bits", gen_max_bits, "bit budget for --full")
        ->check(CLI::PositiveNumber);
    gen->add_option("--encoding", gen_encoding, "output encoding")
        ->check(CLI::IsMember({"ascii", "packed"}));
    gen->add_option("--out", gen_out, "output file (default stdout)");

    ConfigFlags analyze_flags;
    bool analyze_stdin = false;
    u64 analyze_max_bits = dseq::kDefaultBitBudget;
    auto* analyze = app.add_subcommand("analyze", "randomness measure over one full period");
    analyze->add_option("--seed", analyze_flags.seed, "seed S (default 2)");
    analyze->add_option("--level1", analyze_flags.level1, "first-level primes")->delimiter(',');
    analyze->add_option("--level2", analyze_flags.level2, "second-level primes")->delimiter(',');
    analyze->add_option("--level3", analyze_flags.level3, "third-level prime");
    analyze->add_option("--format", analyze_flags.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--stdin", analyze_stdin, "read an ascii bitstream from stdin instead");
    analyze->add_option("--max-bits", analyze_max_bits, "bit budget for the full period")
        ->check(CLI::PositiveNumber);

    ConfigFlags autocorr_flags;
    u64 autocorr_max_bits = dseq::kDefaultBitBudget;
    std::string autocorr_out;
    auto* autocorr = app.add_subcommand("autocorr", "autocorrelation profile as CSV");
    add_config_flags(autocorr, autocorr_flags, /*with_format=*/false);
    autocorr->add_option("--out", autocorr_out, "CSV output file (default stdout)");
    autocorr->add_option("--max-bits", autocorr_max_bits, "bit budget for the full period")
        ->check(CLI::PositiveNumber);

    u64 dseq_prime = 0, dseq_base = 2, dseq_count = 0;
    std::string dseq_encoding = "ascii", dseq_out;
    auto* dseq_cmd = app.add_subcommand("dseq", "plain d-sequence bits");
    dseq_cmd->add_option("--prime", dseq_prime, "odd prime p")->required();
    dseq_cmd->add_option("--base", dseq_base, "base (default 2)");
    dseq_cmd->add_option("--count", dseq_count, "number of bits")
        ->required()
        ->check(CLI::PositiveNumber);
    dseq_cmd->add_option("--encoding", dseq_encoding, "output encoding")
        ->check(CLI::IsMember({"ascii", "packed"}));
    dseq_cmd->add_option("--out", dseq_out, "output file (default stdout)");

    int which_table = 0;
    auto* tables = app.add_subcommand("tables", "recompute the published reference tables");
    tables->add_option("--which", which_table, "table id")
        ->required()
        ->check(CLI::Range(1, 3));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*period) return run_period(period_flags);
        if (*gen)
            return run_gen(gen_flags,
                           gen_full ? std::nullopt : std::optional<u64>(gen_count),
                           gen_max_bits, gen_encoding, gen_out);
        if (*analyze) {
            if (!analyze_stdin &&
                (analyze_flags.level1.empty() || analyze_flags.level2.empty())) {
                std::cerr << "analyze: --level1 and --level2 are required without --stdin\n";
                return 1;
            }
            return run_analyze(analyze_flags, analyze_stdin, analyze_max_bits);
        }
        if (*autocorr) return run_autocorr(autocorr_flags, autocorr_max_bits, autocorr_out);
        if (*dseq_cmd)
            return run_dseq(dseq_prime, dseq_base, dseq_count, dseq_encoding, dseq_out);
        if (*tables) return run_tables(which_table);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
