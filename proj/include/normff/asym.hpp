#pragma once

#include "normff/count.hpp"

namespace normff {

// The Euler-product constant governing the large-degree density of norms,
//   K_q = (1 - q^{-1})^{-1/2} * prod_{(Q/T) = -1} (1 - |Q|^{-2})^{-1/2},
// truncated at prime degree <= depth, with a rigorous bound on the omitted
// log-tail.
struct KqValue {
    Bigint q;
    unsigned depth;
    Real value;      // always >= 1
    Real tail_bound; // upper bound on |log K_q - log value|
};

KqValue kq(const Bigint& q, unsigned depth);

// Smallest depth whose tail bound is below 10^-30.
unsigned kq_default_depth(const Bigint& q);

// Coefficientwise discrepancy (exact integer, must be zero) between
// D*(u)^2 and phi*(u)/(1-qu) up to degree N, where
// phi*(u) = (1-u)^{-1} prod_d (1-u^{2d})^{-pi_minus(d)}.
Bigint check_series_identity(const Bigint& q, unsigned N);

// Large-degree regime: B exact, the rest at working precision.
struct AsymRow {
    unsigned n;
    Bigint B;
    Real main;          // (K_q / sqrt(pi)) * q^n / sqrt(n)
    Real residual;      // |B * sqrt(n) * q^{-n} - K_q / sqrt(pi)|
    Real residual_times_n;
};

std::vector<AsymRow> asym_report(const Bigint& q, unsigned n_max);

// Large-field regime: everything exact rationals.
struct LargeqRow {
    Bigint q;
    Bigint B;
    Rational main2;          // h_n * q^n
    Rational c_term;         // c_n * q^{n-1}
    Rational residual2;      // B - main2 - c_term
    Rational residual2_norm; // residual2 / q^{n-2}
};

std::vector<LargeqRow> largeq_report(unsigned n, const std::vector<Bigint>& q_list);

// Both iterated-limit sequences of the normalized count, with distances to
// 1/sqrt(pi).
struct LimitRow {
    std::string kind; // "n" or "q"
    Bigint index;
    Real value;
    Real distance;
};

std::vector<LimitRow> iterated_limits_report(unsigned n_max, const std::vector<Bigint>& q_list);

} // namespace normff
