#pragma once

#include <map>

#include "normff/asym.hpp"

namespace normff {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::vector<Check> checks;
    // suite report files: filename -> CSV contents
    std::map<std::string, std::string> files;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Exhaustive reciprocity / splitting-dichotomy / witness checks over all
// monic polynomials of degree <= deg_max.
SuiteResult verify_elementary(const Field& field, unsigned deg_max, std::uint64_t seed = 0,
                              unsigned threads = 1);

// D*^2 == phi*/(1-qu) coefficientwise up to degree N.
SuiteResult verify_identity(const Bigint& q, unsigned N);

// Theorem on the q -> infinity regime: normalized residual of
// B_q(n) - h_n q^n - c_n q^{n-1} stays in [-10, 10] and shows no growth
// trend, for each n in [2, n_max] over all odd prime powers q <= q_max.
SuiteResult verify_largeq(unsigned n_max, std::uint64_t q_max);

// Theorem on the n -> infinity regime at fixed q.
SuiteResult verify_largen(const Bigint& q, unsigned n_max);

// The two iterated-limit sequences.
SuiteResult verify_limits(unsigned n_max, std::uint64_t q_max);

// CSV writers shared with the CLI (15 significant digits, C locale).
std::string csv_count(const std::vector<CountReport>& reports);
std::string csv_pi(const PiTable& pi);
std::string csv_constant(const KqValue& k);
std::string csv_asym(const Bigint& q, const std::vector<AsymRow>& rows);
std::string csv_largeq(unsigned n, const std::vector<LargeqRow>& rows);
std::string csv_limits(const std::vector<LimitRow>& rows);

} // namespace normff
