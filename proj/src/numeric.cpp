#include "normff/numeric.hpp"

#include <cmath>
#include <sstream>

namespace normff {

std::string format_real(const Real& x, unsigned digits) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(digits);
    os << x;
    return os.str();
}

std::string format_rational(const Rational& x, unsigned digits) {
    Real v(x);
    return format_real(v, digits);
}

bool odd_prime_power(std::uint64_t q, std::uint64_t* p_out, unsigned* k_out) {
    if (q < 3 || q % 2 == 0) return false;
    std::uint64_t p = 0;
    for (std::uint64_t d = 3; d * d <= q; d += 2) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q; // q itself prime
    std::uint64_t rest = q;
    unsigned k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

std::vector<std::uint64_t> odd_prime_powers_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 3; q <= limit; q += 2)
        if (odd_prime_power(q)) out.push_back(q);
    return out;
}

} // namespace normff
