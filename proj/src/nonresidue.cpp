#include "reslab/nonresidue.hpp"

#include "reslab/parallel.hpp"
#include "reslab/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reslab {

u64 least_nonresidue_unchecked(u64 p) {
    // The least nonresidue is prime (a product of residues is a residue),
    // so scanning the primes 2, 3, 5, ... suffices.
    for (unsigned n = 1;; ++n) {
        const u64 q = nth_prime(n);
        if (jacobi(static_cast<i64>(q % p), p) == -1) return q;
    }
}

u64 least_nonresidue(const PrimeModulus& m) {
    return least_nonresidue_unchecked(m.p());
}

double nonresidue_scale(u64 p) {
    const double lp = std::log(static_cast<double>(p));
    return lp * std::log(lp);
}

namespace {

double round2(double v) {
    return std::round(v * 100.0) / 100.0;
}

NonresidueRecord make_record(u64 p, u64 n_p) {
    NonresidueRecord r;
    r.p = p;
    r.n_p = n_p;
    r.scale = nonresidue_scale(p);
    // c_p is quoted against the 2-decimal scale column (2/0.10 = 20.00 at p=3).
    r.c_p = static_cast<double>(n_p) / round2(r.scale);
    return r;
}

}  // namespace

NonresidueRecord record_for(const PrimeModulus& m) {
    return make_record(m.p(), least_nonresidue(m));
}

std::optional<u64> smallest_prime_attaining(unsigned n, u64 search_bound) {
    const u64 target = nth_prime(n);
    std::optional<u64> found;
    for_each_prime_until({3, search_bound}, [&](u64 p) {
        if (p == 2) return true;
        if (least_nonresidue_unchecked(p) == target) {
            found = p;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<TableRow> nonresidue_table(unsigned n_max, u64 search_bound, unsigned workers) {
    if (n_max < 1) throw std::invalid_argument("nonresidue_table: n_max >= 1");

    struct Partial {
        std::vector<u64> first;  // first[n-1] = least attaining prime in chunk, 0 if none
    };
    workers = resolve_workers(workers);
    auto partials = map_chunks<Partial>(3, std::max<u64>(search_bound, 3), workers,
        [n_max](u64 lo, u64 hi) {
            Partial part;
            part.first.assign(n_max, 0);
            unsigned missing = n_max;
            for_each_prime_until({lo, hi}, [&](u64 p) {
                if (p == 2) return true;
                const unsigned n = prime_index(least_nonresidue_unchecked(p));
                if (n >= 1 && n <= n_max && part.first[n - 1] == 0) {
                    part.first[n - 1] = p;
                    if (--missing == 0) return false;
                }
                return true;
            });
            return part;
        });

    std::vector<TableRow> rows(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        rows[n - 1].n = n;
        rows[n - 1].p_n = nth_prime(n);
        for (const Partial& part : partials) {
            if (part.first[n - 1] != 0) {
                const u64 p = part.first[n - 1];
                rows[n - 1].record = make_record(p, nth_prime(n));
                break;  // chunks are in ascending order, first hit is smallest
            }
        }
    }
    return rows;
}

DistributionReport distribution(u64 x, unsigned workers) {
    if (x > 100000000ull) throw std::out_of_range("distribution: x capped at 10^8");

    struct Partial {
        std::vector<u64> counts;
        u64 pi = 0;
        u64 sum_np = 0;
    };
    workers = resolve_workers(workers);
    auto partials = map_chunks<Partial>(3, std::max<u64>(x, 3), workers,
        [](u64 lo, u64 hi) {
            Partial part;
            for_each_prime({lo, hi}, [&](u64 p) {
                if (p == 2) return;
                const u64 np = least_nonresidue_unchecked(p);
                const unsigned n = prime_index(np);
                if (n == 0) throw std::logic_error("distribution: n_p beyond cached prime list");
                if (part.counts.size() < n) part.counts.resize(n, 0);
                ++part.counts[n - 1];
                ++part.pi;
                part.sum_np += np;
            });
            return part;
        });

    DistributionReport rep;
    rep.x = x;
    rep.pi_x = 0;
    u64 sum_np = 0;
    for (const Partial& part : partials) {
        if (rep.counts.size() < part.counts.size()) rep.counts.resize(part.counts.size(), 0);
        for (std::size_t i = 0; i < part.counts.size(); ++i) rep.counts[i] += part.counts[i];
        rep.pi_x += part.pi;
        sum_np += part.sum_np;
    }
    if (rep.pi_x == 0) throw std::invalid_argument("distribution: no odd primes below x");
    rep.frequencies.resize(rep.counts.size());
    for (std::size_t i = 0; i < rep.counts.size(); ++i)
        rep.frequencies[i] = static_cast<double>(rep.counts[i]) / static_cast<double>(rep.pi_x);
    rep.mean = static_cast<double>(sum_np) / static_cast<double>(rep.pi_x);
    return rep;
}

std::vector<BoundCheck> bound_synopsis(const PrimeModulus& m) {
    const double p = static_cast<double>(m.p());
    const double np = static_cast<double>(least_nonresidue(m));
    const double lp = std::log(p);
    std::vector<BoundCheck> checks;
    auto add = [&](std::string name, double bound) {
        checks.push_back({std::move(name), bound, np <= bound});
    };
    add("sqrt_p_plus_1", std::sqrt(p) + 1.0);
    add("burgess_p_quarter_sqrt_e", std::pow(p, 1.0 / (4.0 * std::sqrt(std::numbers::e)) + 0.01));
    add("grh_2_log_sq", 2.0 * lp * lp);
    add("conjectured_20_loglog", 20.0 * nonresidue_scale(m.p()));
    return checks;
}

}  // namespace reslab
