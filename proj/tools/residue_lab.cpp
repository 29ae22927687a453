// residue-lab: batch reports over quadratic-residue analytics.

#include "reslab/census.hpp"
#include "reslab/charsum.hpp"
#include "reslab/expsums.hpp"
#include "reslab/modcore.hpp"
#include "reslab/nonresidue.hpp"
#include "reslab/parallel.hpp"
#include "reslab/report.hpp"
#include "reslab/symbol.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <random>

namespace {

using namespace reslab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct OutputOptions {
    std::string format;  // csv | json | pretty | "" (auto)
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: csv, json or pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    cmd->add_option("--out", opts.out_path, "Write the report to a file instead of stdout");
}

std::string resolve_format(const OutputOptions& opts) {
    if (!opts.format.empty()) return opts.format;
    if (opts.out_path.empty() && isatty(fileno(stdout))) return "pretty";
    return "csv";
}

int emit(const ReportTable& table, const OutputOptions& opts) {
    const std::string format = resolve_format(opts);
    std::string text;
    if (format == "csv")
        text = to_csv(table);
    else if (format == "json")
        text = to_json(table);
    else
        text = to_pretty(table);

    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << opts.out_path << "\n";
            return kExitUsage;
        }
        out << text;
    }
    return kExitOk;
}

struct RangeSpec {
    u64 p = 0;          // single prime, exclusive with range
    std::string range;  // "lo:hi"

    PrimeRange resolve() const {
        if (p != 0) {
            if (p < 3 || !is_prime(p))
                throw std::invalid_argument("--p " + std::to_string(p) + " is not an odd prime");
            return {p, p};
        }
        const auto colon = range.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--range", "expected lo:hi");
        const u64 lo = std::stoull(range.substr(0, colon));
        const u64 hi = std::stoull(range.substr(colon + 1));
        if (lo > hi) throw CLI::ValidationError("--range", "lo must not exceed hi");
        return {lo, hi};
    }
};

void add_range_flags(CLI::App* cmd, RangeSpec& spec, bool required = true) {
    auto* p_opt = cmd->add_option("--p", spec.p, "Single prime modulus");
    auto* r_opt = cmd->add_option("--range", spec.range, "Prime range lo:hi (inclusive)");
    p_opt->excludes(r_opt);
    if (required) {
        cmd->final_callback([&spec] {
            if (spec.p == 0 && spec.range.empty())
                throw CLI::RequiredError("--p or --range");
        });
    }
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

int run_census(const RangeSpec& range_spec, unsigned k_max, unsigned workers,
               const OutputOptions& out_opts) {
    const PrimeRange range = range_spec.resolve();
    workers = resolve_workers(workers);

    auto chunks = map_chunks<std::vector<CensusReport>>(range.lo, range.hi, workers,
        [k_max](u64 lo, u64 hi) { return census_sweep({lo, hi}, k_max); });

    ReportTable table;
    table.header = {"p", "k", "pattern", "exact", "t_term", "p_over_2k", "residual", "peralta_bound"};
    std::size_t violations = 0;
    for (const auto& chunk : chunks) {
        for (const CensusReport& r : chunk) {
            table.rows.push_back({std::to_string(r.p), std::to_string(r.k), r.pattern_string(),
                                  std::to_string(r.exact_count), fmt_sig(static_cast<double>(r.t)),
                                  fmt_sig(r.second_order), fmt_sig(r.residual), fmt_sig(r.peralta)});
            if (std::abs(static_cast<double>(r.exact_count) - r.second_order) > r.peralta) {
                ++violations;
                std::cerr << "peralta violation: p=" << r.p << " k=" << r.k << " pattern="
                          << r.pattern_string() << " exact=" << r.exact_count << "\n";
            }
        }
    }
    const int rc = emit(table, out_opts);
    if (rc != kExitOk) return rc;
    return violations == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// nonresidue
// ---------------------------------------------------------------------------

int run_nonresidue_table(unsigned n_max, u64 search_bound, unsigned workers,
                         const OutputOptions& out_opts) {
    const auto rows = nonresidue_table(n_max, search_bound, workers);
    ReportTable table;
    table.header = {"n", "p_n", "p", "scale", "c_p"};
    for (const TableRow& row : rows) {
        if (row.record) {
            table.rows.push_back({std::to_string(row.n), std::to_string(row.p_n),
                                  std::to_string(row.record->p), fmt_fixed(row.record->scale, 2),
                                  fmt_fixed(row.record->c_p, 2)});
        } else {
            table.rows.push_back({std::to_string(row.n), std::to_string(row.p_n), "", "", ""});
        }
    }
    return emit(table, out_opts);
}

int run_nonresidue_distribution(u64 x, unsigned workers, const OutputOptions& out_opts) {
    const DistributionReport rep = distribution(x, workers);
    ReportTable table;
    table.header = {"x", "pi_x", "n", "p_n", "count", "frequency", "geometric", "mean"};
    for (std::size_t i = 0; i < rep.counts.size(); ++i) {
        const unsigned n = static_cast<unsigned>(i + 1);
        table.rows.push_back({std::to_string(rep.x), std::to_string(rep.pi_x), std::to_string(n),
                              std::to_string(nth_prime(n)), std::to_string(rep.counts[i]),
                              fmt_sig(rep.frequencies[i]), fmt_sig(std::ldexp(1.0, -static_cast<int>(n))),
                              fmt_sig(rep.mean)});
    }
    return emit(table, out_opts);
}

int run_nonresidue_record(u64 p, const OutputOptions& out_opts) {
    const PrimeModulus m(p);
    const NonresidueRecord rec = record_for(m);
    ReportTable table;
    table.header = {"p", "n_p", "scale", "c_p"};
    table.rows.push_back({std::to_string(rec.p), std::to_string(rec.n_p),
                          fmt_fixed(rec.scale, 2), fmt_fixed(rec.c_p, 2)});
    return emit(table, out_opts);
}

// ---------------------------------------------------------------------------
// charsum
// ---------------------------------------------------------------------------

int run_charsum_profile(const RangeSpec& range_spec, const OutputOptions& out_opts) {
    const PrimeRange range = range_spec.resolve();
    ReportTable table;
    table.header = {"p", "max_abs", "pv_bound", "ratio", "longest_inc_run", "longest_dec_run"};
    std::size_t violations = 0;
    for_each_prime(range, [&](u64 p) {
        if (p == 2) return;
        const PrimeModulus m(p);
        const PartialSumProfile prof = partial_sum_profile(m);
        const PvCheck pv = pv_check(m);
        if (!pv.satisfied) ++violations;
        table.rows.push_back({std::to_string(p), std::to_string(prof.max_abs), fmt_sig(pv.bound),
                              fmt_sig(pv.ratio), std::to_string(prof.longest_inc_run),
                              std::to_string(prof.longest_dec_run)});
    });
    const int rc = emit(table, out_opts);
    if (rc != kExitOk) return rc;
    return violations == 0 ? kExitOk : kExitViolation;
}

int run_charsum_burgess(u64 p, u64 m_start, u64 n_len, unsigned r, const OutputOptions& out_opts) {
    const BurgessCheck c = burgess_check(p, m_start, n_len, r);
    ReportTable table;
    table.header = {"p", "m_start", "n_len", "r", "sum", "bound", "satisfied"};
    table.rows.push_back({std::to_string(p), std::to_string(m_start), std::to_string(n_len),
                          std::to_string(r), std::to_string(c.sum), fmt_sig(c.bound),
                          c.satisfied ? "true" : "false"});
    const int rc = emit(table, out_opts);
    if (rc != kExitOk) return rc;
    return c.satisfied ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// gauss
// ---------------------------------------------------------------------------

int run_gauss(const RangeSpec& range_spec, const OutputOptions& out_opts) {
    const PrimeRange range = range_spec.resolve();
    ReportTable table;
    table.header = {"p", "re", "im", "eta", "abs_err"};
    for_each_prime(range, [&](u64 p) {
        if (p == 2) return;
        const PrimeModulus m(p);
        const std::complex<double> g = gauss_sum(m);
        const std::complex<double> expected =
            eta_constant(m) * std::sqrt(static_cast<double>(p));
        table.rows.push_back({std::to_string(p), fmt_sig(g.real()), fmt_sig(g.imag()),
                              p % 4 == 1 ? "1" : "i", fmt_sig(std::abs(g - expected))});
    });
    return emit(table, out_opts);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyContext {
    u64 bound;
    u64 seed;
    bool all_ok = true;

    void report(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
        if (!ok) all_ok = false;
    }
};

void verify_symbol(VerifyContext& ctx) {
    std::size_t mismatches = 0;
    std::size_t checked = 0;
    for_each_prime({3, ctx.bound}, [&](u64 p) {
        if (p == 2) return;
        const PrimeModulus m(p);
        i64 balance = 0;
        for (u64 u = 0; u < p; ++u) {
            const int l = legendre(static_cast<i64>(u), m);
            if (l != euler_criterion(static_cast<i64>(u), m)) ++mismatches;
            balance += l;
            ++checked;
        }
        if (balance != 0) ++mismatches;
        const int expect_m1 = m.half() % 2 == 0 ? 1 : -1;
        if (legendre(-1, m) != expect_m1) ++mismatches;
        const int expect_2 = (p * p - 1) / 8 % 2 == 0 ? 1 : -1;
        if (legendre(2, m) != expect_2) ++mismatches;
    });
    ctx.report("symbol_laws", mismatches == 0,
               std::to_string(checked) + " values, " + std::to_string(mismatches) + " mismatches");

    // Reciprocity over odd prime pairs.
    std::size_t recip_bad = 0;
    const auto primes = primes_in({3, std::min<u64>(ctx.bound, 500)});
    for (u64 p : primes) {
        for (u64 q : primes) {
            if (p == q) continue;
            const PrimeModulus mp(p), mq(q);
            const int lhs = legendre(static_cast<i64>(q), mp) * legendre(static_cast<i64>(p), mq);
            const int rhs = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
            if (lhs != rhs) ++recip_bad;
        }
    }
    ctx.report("reciprocity", recip_bad == 0,
               std::to_string(primes.size() * (primes.size() - 1)) + " pairs");

    // Multiplicativity over random triples.
    std::mt19937_64 rng(ctx.seed);
    const auto pool = primes_in({3, std::max<u64>(ctx.bound, 100)});
    std::size_t mult_bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const u64 p = pool[rng() % pool.size()];
        const PrimeModulus m(p);
        const u64 a = 1 + rng() % (p - 1);
        const u64 b = 1 + rng() % (p - 1);
        if (legendre(static_cast<i64>(m.mul(a, b)), m) !=
            legendre(static_cast<i64>(a), m) * legendre(static_cast<i64>(b), m))
            ++mult_bad;
    }
    ctx.report("multiplicativity", mult_bad == 0, "10000 random triples");
}

void verify_gauss(VerifyContext& ctx) {
    std::size_t bad = 0;
    std::size_t count = 0;
    for_each_prime({3, ctx.bound}, [&](u64 p) {
        if (p == 2) return;
        const PrimeModulus m(p);
        const double sqrt_p = std::sqrt(static_cast<double>(p));
        if (std::abs(gauss_sum(m) - eta_constant(m) * sqrt_p) > 1e-6 * sqrt_p) ++bad;
        ++count;
    });
    ctx.report("gauss_sum", bad == 0, std::to_string(count) + " primes");

    std::mt19937_64 rng(ctx.seed);
    const auto pool = primes_in({3, std::max<u64>(ctx.bound, 100)});
    std::size_t twisted_bad = 0;
    for (int i = 0; i < 100; ++i) {
        const u64 p = pool[rng() % pool.size()];
        const PrimeModulus m(p);
        const u64 s = 1 + rng() % (p - 1);
        const std::complex<double> ratio = twisted_gauss_sum(m, s) / gauss_sum(m);
        const double expected = legendre(static_cast<i64>(m.inv(s)), m);
        if (std::abs(ratio - expected) > 1e-6) ++twisted_bad;
    }
    ctx.report("twisted_gauss_sum", twisted_bad == 0, "100 random (p,s) pairs");
}

void verify_fourier(VerifyContext& ctx) {
    std::size_t bad = 0;
    std::size_t count = 0;
    for_each_prime({3, std::min<u64>(ctx.bound, 500)}, [&](u64 p) {
        if (p == 2) return;
        const PrimeModulus m(p);
        for (u64 s = 0; s < p; ++s) {
            if (fourier_fixed_point_residual(m, s) >= 1e-6) ++bad;
            ++count;
        }
    });
    ctx.report("fourier_fixed_point", bad == 0, std::to_string(count) + " (p,s) cases");
}

void verify_charfun(VerifyContext& ctx) {
    std::size_t bad = 0;
    std::size_t count = 0;
    for_each_prime({3, std::min<u64>(ctx.bound, 200)}, [&](u64 p) {
        if (p == 2) return;
        const PrimeModulus m(p);
        for (u64 u = 1; u < p; ++u) {
            if (char_qr_expsum(u, m) != char_qr(u, m)) ++bad;
            ++count;
        }
    });
    ctx.report("charfun_expsum", bad == 0, std::to_string(count) + " values");
}

void verify_twin(VerifyContext& ctx) {
    std::size_t bad = 0;
    std::size_t count = 0;
    for_each_prime({3, ctx.bound}, [&](u64 p) {
        if (p == 2) return;
        const PrimeModulus m(p);
        for (u64 a = 1; a <= std::min<u64>(p - 1, 20); ++a) {
            for (int e0 : {1, -1}) {
                for (int e1 : {1, -1}) {
                    const SymbolPattern pat({0, a}, {e0, e1});
                    if (twin_count_formula(m, a, e0, e1) != count_pattern_exact(m, pat)) ++bad;
                    ++count;
                }
            }
        }
    });
    ctx.report("twin_formula", bad == 0, std::to_string(count) + " cases, exact equality");
}

void verify_qrsum(VerifyContext& ctx) {
    std::size_t bad = 0;
    std::size_t count = 0;
    for_each_prime({5, ctx.bound}, [&](u64 p) {
        if (p % 4 != 1) return;
        const PrimeModulus m(p);
        if (qr_sum(m) != p * (p - 1) / 4) ++bad;
        ++count;
    });
    ctx.report("qr_sum", bad == 0, std::to_string(count) + " primes = 1 mod 4");
}

int run_verify(u64 bound, const std::string& only, u64 seed) {
    if (bound > 10000) {
        std::cerr << "error: verify bound capped at 10^4\n";
        return kExitUsage;
    }
    VerifyContext ctx{bound, seed};
    const auto want = [&only](const char* name) { return only.empty() || only == name; };
    if (want("symbol")) verify_symbol(ctx);
    if (want("gauss")) verify_gauss(ctx);
    if (want("fourier")) verify_fourier(ctx);
    if (want("charfun")) verify_charfun(ctx);
    if (want("twin")) verify_twin(ctx);
    if (want("qrsum")) verify_qrsum(ctx);
    return ctx.all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"residue-lab: quadratic-residue pattern censuses, exponential sums and "
                 "least-nonresidue statistics over prime fields"};
    app.require_subcommand(1);

    // census
    RangeSpec census_range;
    unsigned census_kmax = 4;
    unsigned workers = 0;
    OutputOptions census_out;
    auto* census_cmd = app.add_subcommand("census", "Exact pattern censuses vs. predictions");
    add_range_flags(census_cmd, census_range);
    census_cmd->add_option("--k-max", census_kmax, "Maximum pattern length")->check(CLI::Range(1u, 12u));
    census_cmd->add_option("--workers", workers, "Worker threads (default: RESIDUE_LAB_WORKERS)");
    add_output_flags(census_cmd, census_out);

    // nonresidue
    auto* nonres_cmd = app.add_subcommand("nonresidue", "Least quadratic nonresidue statistics");
    nonres_cmd->require_subcommand(1);

    unsigned table_nmax = 15;
    u64 table_bound = 4000000;
    OutputOptions table_out;
    auto* table_cmd = nonres_cmd->add_subcommand("table", "Smallest prime attaining each n_p = p_n");
    table_cmd->add_option("--n-max", table_nmax, "Number of rows")->check(CLI::Range(1u, 50u));
    table_cmd->add_option("--search-bound", table_bound, "Upper bound of the prime sweep");
    table_cmd->add_option("--workers", workers, "Worker threads");
    add_output_flags(table_cmd, table_out);

    u64 dist_x = 1000000;
    OutputOptions dist_out;
    auto* dist_cmd = nonres_cmd->add_subcommand("distribution", "Frequencies of n_p = p_n and the mean");
    dist_cmd->add_option("--x", dist_x, "Sweep bound");
    dist_cmd->add_option("--workers", workers, "Worker threads");
    add_output_flags(dist_cmd, dist_out);

    u64 record_p = 0;
    OutputOptions record_out;
    auto* record_cmd = nonres_cmd->add_subcommand("record", "Single-prime nonresidue record");
    record_cmd->add_option("--p", record_p, "Prime modulus")->required();
    add_output_flags(record_cmd, record_out);

    // charsum
    auto* charsum_cmd = app.add_subcommand("charsum", "Partial character sums and bounds");
    charsum_cmd->require_subcommand(1);

    RangeSpec profile_range;
    OutputOptions profile_out;
    auto* profile_cmd = charsum_cmd->add_subcommand("profile", "f-profile and Polya-Vinogradov check");
    add_range_flags(profile_cmd, profile_range);
    add_output_flags(profile_cmd, profile_out);

    u64 burgess_p = 0, burgess_m = 0, burgess_n = 0;
    unsigned burgess_r = 2;
    OutputOptions burgess_out;
    auto* burgess_cmd = charsum_cmd->add_subcommand("burgess", "Explicit Burgess inequality check");
    burgess_cmd->add_option("--p", burgess_p, "Prime >= 10^7")->required();
    burgess_cmd->add_option("--m", burgess_m, "Interval start M");
    burgess_cmd->add_option("--n", burgess_n, "Interval length N")->required();
    burgess_cmd->add_option("--r", burgess_r, "Burgess parameter r")->check(CLI::Range(1u, 6u));
    add_output_flags(burgess_cmd, burgess_out);

    // gauss
    RangeSpec gauss_range;
    OutputOptions gauss_out;
    auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sums vs. the eta_p sqrt(p) closed form");
    add_range_flags(gauss_cmd, gauss_range);
    add_output_flags(gauss_cmd, gauss_out);

    // verify
    u64 verify_bound = 500;
    u64 verify_seed = 12345;
    std::string verify_only;
    auto* verify_cmd = app.add_subcommand("verify", "One-shot exact-identity suite");
    verify_cmd->add_option("--bound", verify_bound, "Prime bound for the suites (<= 10^4)");
    verify_cmd->add_option("--only", verify_only, "Run a single suite")
        ->check(CLI::IsMember({"symbol", "gauss", "fourier", "charfun", "twin", "qrsum"}));
    verify_cmd->add_option("--seed", verify_seed, "Seed for randomized spot checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (census_cmd->parsed())
            return run_census(census_range, census_kmax, workers, census_out);
        if (table_cmd->parsed())
            return run_nonresidue_table(table_nmax, table_bound, workers, table_out);
        if (dist_cmd->parsed())
            return run_nonresidue_distribution(dist_x, workers, dist_out);
        if (record_cmd->parsed())
            return run_nonresidue_record(record_p, record_out);
        if (profile_cmd->parsed())
            return run_charsum_profile(profile_range, profile_out);
        if (burgess_cmd->parsed())
            return run_charsum_burgess(burgess_p, burgess_m, burgess_n, burgess_r, burgess_out);
        if (gauss_cmd->parsed())
            return run_gauss(gauss_range, gauss_out);
        if (verify_cmd->parsed())
            return run_verify(verify_bound, verify_only, verify_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
