// pairsieve: prime-pair sieving by closed-form exclusion families.
//
// Subcommands:
//   derive  - print the exclusion families of a gap class in closed form
//   pairs   - enumerate prime pairs (p, p+2k) up to a limit
//   sieve   - dump excluded (or surviving) candidate indices
//   parity  - parity balance of the twin complement, CSV
//   verify  - sieve complement vs. independent primality, exhaustively
//   bench   - family sieve vs. Eratosthenes baseline timing
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pairsieve/characterization.hpp"
#include "pairsieve/families.hpp"
#include "pairsieve/oracle.hpp"
#include "pairsieve/parity.hpp"
#include "pairsieve/sieve.hpp"

using nlohmann::json;
using namespace pairsieve;

namespace {

// "5n", "11n+1", "17n-4", ...
std::string progression_string(uint64_t d, int64_t off) {
    std::string s = std::to_string(d) + "n";
    if (off > 0) s += "+" + std::to_string(off);
    if (off < 0) s += std::to_string(off);
    return s;
}

// "(6m-1)n + m - 1"
std::string family_form(const FamilySpec& f) {
    std::string s = f.branch == Branch::Minus ? "(6m-1)n" : "(6m+1)n";
    s += f.eps > 0 ? " + m" : " - m";
    s += " - " + std::to_string(f.a);
    return s;
}

std::vector<PairClass> classes_for(uint64_t k, const std::string& case_arg) {
    if (case_arg == "a") return {PairClass::make(k, ResidueCase::A)};
    if (case_arg == "b") return {PairClass::make(k, ResidueCase::B)};
    auto all = PairClass::valid_classes(k);
    if (all.empty()) throw std::invalid_argument("no valid residue case for k");
    return all;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_derive(uint64_t k, const std::string& case_arg, uint64_t max_m,
               const std::string& format) {
    for (const PairClass& pc : classes_for(k, case_arg)) {
        const auto families = derive_families(pc);
        if (format == "json") {
            for (const FamilySpec& f : families) {
                json j{{"k", pc.k},
                       {"case", to_string(pc.residue)},
                       {"branch", to_string(f.branch)},
                       {"epsilon", f.eps},
                       {"a", f.a},
                       {"offset_target", f.offset_target}};
                std::cout << j.dump() << "\n";
            }
            continue;
        }
        std::printf("k=%" PRIu64 " case %s: candidate pair (6x+%" PRIu64 ", 6x+%" PRIu64 ")\n",
                    pc.k, to_string(pc.residue), pc.c1, pc.c2);
        for (const FamilySpec& f : families) {
            std::printf("  x = %-16s  divides 6x+%-3" PRIu64 "  m=1..%" PRIu64 ":",
                        family_form(f).c_str(), f.offset_target, max_m);
            for (uint64_t m = 1; m <= max_m; ++m)
                std::printf(" %s%s", progression_string(f.modulus(m), f.offset(m)).c_str(),
                            m < max_m ? "," : "");
            std::printf("\n");
        }
    }
    return 0;
}

int cmd_pairs(uint64_t k, uint64_t limit, const std::string& format,
              const std::string& method) {
    const std::vector<PairRecord> pairs =
        method == "baseline" ? eratosthenes_pairs(k, limit) : enumerate_pairs(k, limit);
    if (format == "json") {
        for (const PairRecord& r : pairs)
            std::cout << json{{"p", r.p}, {"q", r.q}}.dump() << "\n";
    } else {
        std::cout << "p,q\n";
        for (const PairRecord& r : pairs) std::cout << r.p << ',' << r.q << '\n';
    }
    return 0;
}

int cmd_sieve(uint64_t k, const std::string& case_arg, uint64_t x_limit,
              const SieveOptions& opts, bool complement_mode,
              const std::string& out_path) {
    const PairClass pc = classes_for(k, case_arg).front();
    const ExclusionSet es = build_exclusions(pc, x_limit, opts);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "x\n";
    if (complement_mode) {
        for (uint64_t x : complement(es)) out << x << '\n';
    } else {
        for (uint64_t x = 0; x <= x_limit; ++x)
            if (es.excluded(x)) out << x << '\n';
    }
    return 0;
}

int cmd_parity(std::optional<uint64_t> n, const std::string& sweep_arg,
               bool duplicates, const std::string& out_path,
               const SieveOptions& opts) {
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);

    if (duplicates) {
        if (!n) throw std::invalid_argument("--duplicates needs --n");
        const DuplicateStats s = duplicate_stats(*n);
        out << "n,total_family_hits,distinct,duplicate_odd,duplicate_even\n"
            << *n << ',' << s.total_family_hits << ',' << s.distinct_values << ','
            << s.duplicate_odd << ',' << s.duplicate_even << '\n';
        return 0;
    }

    std::vector<ParityReport> reports;
    if (!sweep_arg.empty()) {
        uint64_t a = 0, b = 0, s = 1;
        const int got = std::sscanf(sweep_arg.c_str(),
                                    "%" SCNu64 ":%" SCNu64 ":%" SCNu64, &a, &b, &s);
        if (got < 2) throw std::invalid_argument("sweep wants A:B or A:B:S");
        reports = parity_sweep(a, b, got == 3 ? s : 1, opts);
    } else {
        reports.push_back(parity_report(n.value_or(150), opts));
    }
    write_parity_csv(out, reports);
    return 0;
}

int cmd_verify(uint64_t k, uint64_t limit) {
    if (k < 1) throw std::invalid_argument("verify needs k >= 1");
    uint64_t total_mismatches = 0;

    for (const PairClass& pc : PairClass::valid_classes(k)) {
        const ExclusionSet es = build_exclusions(pc, limit);
        std::vector<uint64_t> bad;
        for (uint64_t x = 0; x <= limit; ++x) {
            const bool survives = !es.excluded(x);
            const bool both_prime = oracle::is_prime(6 * x + pc.c1) &&
                                    oracle::is_prime(6 * x + pc.c2);
            if (survives != both_prime) bad.push_back(x);
        }
        std::printf("k=%" PRIu64 " case %s: sieve complement vs oracle over x in [0, %" PRIu64
                    "]: %zu mismatches\n",
                    k, to_string(pc.residue), limit, bad.size());
        for (size_t i = 0; i < bad.size() && i < 10; ++i)
            std::printf("  mismatch at x=%" PRIu64 "\n", bad[i]);
        total_mismatches += bad.size();
    }

    uint64_t char_bad = 0;
    uint64_t first_bad[10];
    for (uint64_t z = 1; z <= limit; ++z) {
        const bool rep = is_representable(z);
        const bool composite = !oracle::is_prime(2 * z + 1);
        if (rep != composite) {
            if (char_bad < 10) first_bad[char_bad] = z;
            ++char_bad;
        }
    }
    std::printf("characterization vs trial primality over z in [1, %" PRIu64
                "]: %" PRIu64 " mismatches\n",
                limit, char_bad);
    for (uint64_t i = 0; i < char_bad && i < 10; ++i)
        std::printf("  mismatch at z=%" PRIu64 "\n", first_bad[i]);
    total_mismatches += char_bad;

    return total_mismatches == 0 ? 0 : 1;
}

int cmd_bench(uint64_t k, uint64_t x_limit, const SieveOptions& opts) {
    const PairClass front = classes_for(k, "both").front();
    const uint64_t p_limit = checked_add(checked_mul(6, x_limit), front.c1);

    auto timed = [&](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto pairs = fn();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        return std::pair<double, size_t>{dt.count(), pairs.size()};
    };

    const auto [fam_s, fam_n] = timed([&] { return enumerate_pairs(k, p_limit, opts); });
    const auto [era_s, era_n] = timed([&] { return eratosthenes_pairs(k, p_limit); });

    auto record = [&](const char* method, double s, size_t n) {
        return json{{"method", method},
                    {"limit", x_limit},
                    {"seconds", s},
                    {"pairs_found", n},
                    {"indices_per_second", s > 0 ? static_cast<double>(x_limit) / s : 0.0}};
    };
    json summary{{"k", k},
                 {"p_limit", p_limit},
                 {"segment_size", opts.segment_size},
                 {"threads", opts.threads},
                 {"results", json::array({record("families", fam_s, fam_n),
                                          record("baseline", era_s, era_n)})}};
    std::cout << summary.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime-pair sieve driven by closed-form exclusion families"};
    app.require_subcommand(1);

    uint64_t k = 1;
    uint64_t limit = 100;
    uint64_t x_limit = 1000;
    uint64_t max_m = 4;
    std::string case_arg = "both";
    std::string format = "table";
    std::string method = "families";
    std::string sweep_arg;
    std::string out_path;
    std::optional<uint64_t> parity_n;
    bool complement_mode = false;
    bool duplicates = false;
    SieveOptions opts;

    auto add_sieve_opts = [&](CLI::App* c) {
        c->add_option("--segment-size", opts.segment_size, "indices per segment (>= 64)");
        c->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
    };

    CLI::App* derive = app.add_subcommand("derive", "exclusion families in closed form");
    derive->add_option("--k", k, "half-gap (pair gap is 2k)");
    derive->add_option("--case", case_arg, "residue case: a, b, or both")
        ->check(CLI::IsMember({"a", "b", "both"}));
    derive->add_option("--max-m", max_m, "expand progressions for m = 1..M");
    derive->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    CLI::App* pairs = app.add_subcommand("pairs", "enumerate prime pairs (p, p+2k)");
    pairs->add_option("--k", k, "half-gap");
    pairs->add_option("--limit", limit, "inclusive bound on the smaller member p");
    pairs->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    pairs->add_option("--method", method, "families or baseline")
        ->check(CLI::IsMember({"families", "baseline"}));

    CLI::App* sieve = app.add_subcommand("sieve", "dump excluded candidate indices");
    sieve->add_option("--k", k, "half-gap");
    sieve->add_option("--case", case_arg, "residue case: a, b, or both (= first valid)")
        ->check(CLI::IsMember({"a", "b", "both"}));
    sieve->add_option("--x-limit", x_limit, "inclusive index bound")->required();
    sieve->add_flag("--literal", opts.literal,
                    "enumerate every modulus 6m+-1 up to the quadratic bound");
    sieve->add_flag("--complement", complement_mode, "dump surviving indices instead");
    sieve->add_option("--out", out_path, "output file (default stdout)");
    add_sieve_opts(sieve);

    CLI::App* parity = app.add_subcommand("parity", "twin-complement parity balance, CSV");
    auto* nopt = parity->add_option("--n", parity_n, "single window parameter");
    parity->add_option("--sweep", sweep_arg, "range A:B or A:B:S")->excludes(nopt);
    parity->add_flag("--duplicates", duplicates, "family-value duplicate census for --n");
    parity->add_option("--out", out_path, "output file (default stdout)");
    add_sieve_opts(parity);

    CLI::App* verify = app.add_subcommand("verify", "exhaustive equivalence checks");
    verify->add_option("--k", k, "half-gap");
    verify->add_option("--limit", limit, "index / odd-index bound");

    CLI::App* bench = app.add_subcommand("bench", "family sieve vs baseline timing");
    bench->add_option("--k", k, "half-gap");
    bench->add_option("--limit", x_limit, "candidate-index bound");
    add_sieve_opts(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (derive->parsed()) return cmd_derive(k, case_arg, max_m, format);
        if (pairs->parsed())
            return cmd_pairs(k, limit, format == "table" ? "csv" : format, method);
        if (sieve->parsed())
            return cmd_sieve(k, case_arg, x_limit, opts, complement_mode, out_path);
        if (parity->parsed()) return cmd_parity(parity_n, sweep_arg, duplicates, out_path, opts);
        if (verify->parsed()) return cmd_verify(k, limit);
        if (bench->parsed()) return cmd_bench(k, x_limit, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
