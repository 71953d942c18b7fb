#pragma once

#include <array>
#include <optional>

#include "normff/norm.hpp"
#include "normff/series.hpp"

namespace normff {

struct PiRow {
    unsigned d;
    Bigint plus;  // monic primes of degree d with (P/T) = +1
    Bigint minus; // ... with (P/T) = -1 (T itself is excluded from both)
};

struct PiTable {
    Bigint q;
    std::vector<PiRow> rows; // rows[d-1] holds degree d

    const PiRow& at(unsigned d) const { return rows.at(d - 1); }
};

// Exact prime counts by exhaustive enumeration; requires q^d <= budget.
PiRow pi_enum(const Field& field, unsigned d, std::uint64_t budget = 10000000);

// Exact counts for all d <= d_max from the necklace identity together with
// the vanishing of the quadratic character sums (C_N(chi) = 0), i.e.
//   sum_{d|N} d*(pi_plus(d) + (-1)^{N/d} pi_minus(d)) = 0 for N >= 1.
// Pure integer recursion, no polynomial enumeration.
PiTable pi_exact(const Bigint& q, unsigned d_max);

struct CountReport {
    Bigint q;
    unsigned n;
    std::string method; // brute | series | parts
    Bigint value;
    std::optional<std::array<Bigint, 5>> f_part_sizes;
};

// Shared sieve over all monic polynomials of degree <= n_max: a table of one
// prime divisor per composite, built once, then walked to factor each
// polynomial during exhaustive counts.  Factorization dominates the runtime
// of the brute-force counters, so both counters reuse this structure.
class Enumeration {
public:
    Enumeration(const Field& field, unsigned n_max, std::uint64_t budget = 10000000);

    const Field& field() const { return *f_; }
    unsigned n_max() const { return n_max_; }

    // Workers take disjoint coefficient-prefix blocks; the merge is integer
    // addition, so the result does not depend on the schedule.
    Bigint count_norms(unsigned n, unsigned threads = 1) const;
    std::array<Bigint, 5> count_parts(unsigned n, unsigned threads = 1) const;
    PiRow pi(unsigned d) const;

private:
    struct Factor {
        unsigned deg;
        std::uint64_t index; // lower-coefficient code of the monic prime
        unsigned mult;
        int sign; // chi of the constant term: 0 for T, else +-1
    };
    unsigned factor_walk(std::vector<std::uint32_t>& coeffs, unsigned deg,
                         std::array<Factor, 32>& out) const;
    template <typename Fn>
    void for_each_monic(unsigned n, unsigned threads, Fn&& shard_fn) const;

    const Field* f_;
    unsigned n_max_;
    std::vector<std::uint64_t> qpow_;
    std::vector<std::vector<std::uint32_t>> divisor_; // per degree; packed prime ref + 1
    std::vector<std::vector<std::uint32_t>> primes_;  // per degree; lower-coefficient codes
    std::vector<std::vector<std::int8_t>> sign_;      // chi of constant term per prime
};

CountReport brute_count(const Field& field, unsigned n, std::uint64_t seed = 0,
                        unsigned threads = 1, std::uint64_t budget = 10000000);
CountReport count_parts(const Field& field, unsigned n, std::uint64_t seed = 0,
                        unsigned threads = 1, std::uint64_t budget = 10000000);

// The five-part split of the norm polynomials of degree n (1-based part
// index), or nothing when f is not a norm.
std::optional<int> classify_F(const Poly& f, std::uint64_t seed = 0);

// Partition lambda |- n as a multiplicity vector (lambda_1, ..., lambda_n).
using Partition = std::vector<unsigned>;
// All partitions of n, each exactly once, lexicographic on the vector.
std::vector<Partition> partitions(unsigned n);

// h_n = sum_{lambda |- n} prod_j 1 / (lambda_j! (2j)^{lambda_j}); equals
// binom(2n, n) / 4^n.
Rational ewens_h(unsigned n);

// c_n = (1/2) h_{n-1} + (1/4) h_{n-2}, n >= 2.
Rational coeff_c(unsigned n);

// #F_{1,n} by summation over partitions, no polynomial enumeration.
Bigint f1_partition_count(const PiTable& pi, unsigned n);

// Generating series D*(u) = sum_n B_q(n) u^n out of a PiTable:
//   (1-u)^{-1} prod_d (1-u^d)^{-pi_plus(d)} (1-u^{2d})^{-pi_minus(d)}.
PowerSeries norm_count_series(const PiTable& pi, unsigned n_max);

// B_q(0..n_max) via the generating series, exact integers.
std::vector<CountReport> series_count(const Bigint& q, unsigned n_max);

} // namespace normff
