#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace normff {

using Bigint = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// Runtime-precision real; callers set the working precision in decimal
// digits (default 50) via set_working_precision().
using Real = boost::multiprecision::mpfr_float;

inline void set_working_precision(unsigned digits10) {
    if (digits10 < 30)
        throw std::invalid_argument("working precision must be at least 30 digits");
    Real::default_precision(digits10);
}

inline Bigint pow_big(const Bigint& base, unsigned e) {
    Bigint r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), e);
    return r;
}

// binomial(m, k) for arbitrarily large m, small k
inline Bigint binomial(const Bigint& m, unsigned k) {
    Bigint num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= m - i;
        den *= i + 1;
    }
    return num / den;
}

inline Bigint binomial_uu(unsigned n, unsigned k) { return binomial(Bigint(n), k); }

// Raised when an enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Locale-independent formatting with a fixed number of significant digits.
std::string format_real(const Real& x, unsigned digits = 15);
std::string format_rational(const Rational& x, unsigned digits = 15);

// q = p^k for an odd prime p, or nothing. Used to enumerate admissible q.
bool odd_prime_power(std::uint64_t q, std::uint64_t* p_out = nullptr, unsigned* k_out = nullptr);
std::vector<std::uint64_t> odd_prime_powers_upto(std::uint64_t limit);

} // namespace normff
