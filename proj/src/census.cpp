#include "reslab/census.hpp"

#include "reslab/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reslab {

SymbolPattern::SymbolPattern(std::vector<u64> offs, std::vector<int> sgns)
    : offsets(std::move(offs)), signs(std::move(sgns)) {
    if (offsets.empty() || offsets.size() != signs.size())
        throw std::invalid_argument("SymbolPattern: offsets and signs must be nonempty and equal-length");
    if (offsets.size() > kMaxPatternLength)
        throw std::invalid_argument("SymbolPattern: k capped at 24");
    for (std::size_t i = 1; i < offsets.size(); ++i)
        if (offsets[i] <= offsets[i - 1])
            throw std::invalid_argument("SymbolPattern: offsets must be strictly increasing");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("SymbolPattern: signs must be +-1");
}

SymbolPattern SymbolPattern::consecutive(unsigned k, u64 bits) {
    std::vector<u64> offs(k);
    std::vector<int> sgns(k);
    for (unsigned i = 0; i < k; ++i) {
        offs[i] = i;
        sgns[i] = (bits >> (k - 1 - i)) & 1 ? 1 : -1;
    }
    return SymbolPattern(std::move(offs), std::move(sgns));
}

u64 SymbolPattern::sign_bits() const {
    u64 bits = 0;
    for (unsigned i = 0; i < k(); ++i)
        bits = (bits << 1) | (signs[i] == 1 ? 1 : 0);
    return bits;
}

std::string SymbolPattern::to_string() const {
    std::string s;
    for (int e : signs) s += e == 1 ? '+' : '-';
    return s;
}

double peralta_bound(unsigned k, u64 p) {
    return (k + 1) * (3.0 + std::sqrt(static_cast<double>(p)));
}

namespace {

void check_census_guards(const PrimeModulus& m, const SymbolPattern& pat) {
    if (m.p() >= (u64{1} << 31))
        throw std::out_of_range("count_pattern_exact: p capped at 2^31 for the exhaustive scan");
    if (pat.k() > kMaxPatternLength)
        throw std::out_of_range("count_pattern_exact: k capped at 24");
}

}  // namespace

namespace {

std::vector<u64> reduced_offsets(const SymbolPattern& pat, u64 p) {
    std::vector<u64> offs(pat.k());
    for (unsigned i = 0; i < pat.k(); ++i) offs[i] = pat.offsets[i] % p;
    return offs;
}

bool pattern_matches(u64 u, const std::vector<u64>& offs, const std::vector<int>& signs, u64 p) {
    for (std::size_t i = 0; i < offs.size(); ++i) {
        u64 v = u + offs[i];
        if (v >= p) v -= p;
        if (v == 0 || jacobi(static_cast<i64>(v), p) != signs[i]) return false;
    }
    return true;
}

}  // namespace

i64 count_pattern_exact(const PrimeModulus& m, const SymbolPattern& pat) {
    check_census_guards(m, pat);
    const u64 p = m.p();
    const std::vector<u64> offs = reduced_offsets(pat, p);
    i64 count = 0;
    for (u64 u = 0; u < p; ++u)
        if (pattern_matches(u, offs, pat.signs, p)) ++count;
    return count;
}

Rational t_term(unsigned k, const PrimeModulus& m) {
    if (k < 1) throw std::invalid_argument("t_term: k >= 1");
    using boost::multiprecision::cpp_int;
    const cpp_int p = m.p();
    cpp_int num = 1;
    for (unsigned i = 0; i <= k; ++i) num *= p - 1;
    cpp_int den = cpp_int(1) << k;
    for (unsigned i = 0; i < k; ++i) den *= p;
    return Rational(num, den);
}

double t_term_second_form(unsigned k, const PrimeModulus& m) {
    return static_cast<double>(m.p()) / std::ldexp(1.0, static_cast<int>(k));
}

double u_residual(const PrimeModulus& m, const SymbolPattern& pat) {
    const i64 exact = count_pattern_exact(m, pat);
    const Rational diff = Rational(exact) - t_term(pat.k(), m);
    return static_cast<double>(diff);
}

i64 twin_count_formula(const PrimeModulus& m, u64 a, int e0, int e1) {
    const u64 p = m.p();
    a %= p;
    if (a == 0) throw std::invalid_argument("twin_count_formula: a must be nonzero mod p");
    if ((e0 != 1 && e0 != -1) || (e1 != 1 && e1 != -1))
        throw std::invalid_argument("twin_count_formula: signs must be +-1");
    const i64 chi_a = jacobi(static_cast<i64>(a), p);
    const i64 chi_neg_a = jacobi(static_cast<i64>(p - a), p);
    const i64 num = static_cast<i64>(p) - 2 - e0 * chi_neg_a - e1 * chi_a - i64(e0) * e1;
    return num / 4;
}

i64 count_pattern_in_interval(const PrimeModulus& m, u64 start, u64 length,
                              const SymbolPattern& pat) {
    check_census_guards(m, pat);
    const u64 p = m.p();
    if (length < 1 || length > p)
        throw std::invalid_argument("count_pattern_in_interval: length must be in [1, p]");
    start %= p;
    const std::vector<u64> offs = reduced_offsets(pat, p);
    i64 count = 0;
    u64 u = start;
    for (u64 step = 0; step < length; ++step) {
        if (pattern_matches(u, offs, pat.signs, p)) ++count;
        u = u + 1 == p ? 0 : u + 1;
    }
    return count;
}

std::string CensusReport::pattern_string() const {
    std::string s;
    for (unsigned i = 0; i < k; ++i)
        s += (pattern_bits >> (k - 1 - i)) & 1 ? '+' : '-';
    return s;
}

std::vector<CensusReport> census_for_prime(const PrimeModulus& m, unsigned k_max) {
    if (k_max < 1 || k_max > 12)
        throw std::out_of_range("census: k_max must be in [1, 12] for all-pattern sweeps");
    const u64 p = m.p();
    const std::vector<std::int8_t> chi = symbol_table(m);

    std::vector<CensusReport> reports;
    for (unsigned k = 1; k <= k_max; ++k) {
        // Window histogram: one O(p k) pass yields all 2^k pattern counts.
        std::vector<i64> hist(u64{1} << k, 0);
        for (u64 u = 0; u < p; ++u) {
            u64 bits = 0;
            bool valid = true;
            for (unsigned i = 0; i < k; ++i) {
                u64 v = u + i;
                if (v >= p) v -= p;
                if (chi[v] == 0) {
                    valid = false;
                    break;
                }
                bits = (bits << 1) | (chi[v] == 1 ? 1 : 0);
            }
            if (valid) ++hist[bits];
        }
        const Rational t = t_term(k, m);
        const double first = static_cast<double>(p) / std::ldexp(1.0, static_cast<int>(k)) *
                             std::pow(1.0 - 1.0 / static_cast<double>(p), static_cast<double>(k));
        const double second = t_term_second_form(k, m);
        const double bound = peralta_bound(k, p);
        for (u64 bits = 0; bits < (u64{1} << k); ++bits) {
            CensusReport r;
            r.p = p;
            r.k = k;
            r.pattern_bits = bits;
            r.exact_count = hist[bits];
            r.t = t;
            r.first_order = first;
            r.second_order = second;
            r.residual = static_cast<double>(Rational(hist[bits]) - t);
            r.peralta = bound;
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

std::vector<CensusReport> census_sweep(PrimeRange range, unsigned k_max) {
    std::vector<CensusReport> all;
    for_each_prime(range, [&](u64 p) {
        if (p == 2) return;  // the census is defined over odd prime fields
        PrimeModulus m(p);
        auto reports = census_for_prime(m, k_max);
        all.insert(all.end(), std::make_move_iterator(reports.begin()),
                   std::make_move_iterator(reports.end()));
    });
    return all;
}

}  // namespace reslab
