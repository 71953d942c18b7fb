#include "normff/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace normff {
namespace {

constexpr std::uint64_t kOrderBound = std::uint64_t(1) << 32;
constexpr std::uint64_t kTableBound = 1024; // q*q table entries beyond this get too large

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- minimal polynomial arithmetic over F_p on digit vectors -------------
// Only used to pick the deterministic modulus of an extension field; the
// full Poly type lives one layer up and cannot be used here.

using Fp = std::vector<std::uint32_t>; // coefficient i at index i, trimmed

void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp mulmod_fp(const Fp& a, const Fp& b, const Fp& m, std::uint64_t p) {
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    // reduce by monic m
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = acc.size(); i-- > dm;) {
        std::uint64_t c = acc[i];
        if (!c) continue;
        acc[i] = 0;
        for (std::size_t j = 0; j < dm; ++j)
            acc[i - dm + j] = (acc[i - dm + j] + (p - m[j]) % p * c) % p;
    }
    Fp r(dm);
    for (std::size_t i = 0; i < dm && i < acc.size(); ++i) r[i] = std::uint32_t(acc[i]);
    trim(r);
    return r;
}

Fp powmod_x_fp(Bigint e, const Fp& m, std::uint64_t p) {
    // x^e mod m
    Fp base = {0, 1};
    if (m.size() <= 2) { // deg m == 1: x reduces to a constant
        base = mulmod_fp({1}, {0, 1}, m, p);
    }
    Fp result = {1};
    while (e > 0) {
        if ((e & 1) != 0) result = mulmod_fp(result, base, m, p);
        base = mulmod_fp(base, base, m, p);
        e >>= 1;
    }
    return result;
}

Fp sub_fp(Fp a, const Fp& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = std::uint32_t((a[i] + p - b[i]) % p);
    trim(a);
    return a;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // p prime
    std::uint64_t r = 1, e = p - 2, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Fp gcd_fp(Fp a, Fp b, std::uint64_t p) {
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = std::uint64_t(a.back()) * inv_mod_p(b.back(), p) % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = std::uint32_t((a[shift + i] + p - b[i] * c % p) % p);
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool irreducible_fp(const Fp& m, std::uint64_t p) {
    // Rabin: m (monic, deg k) irreducible over F_p iff x^{p^k} == x (mod m)
    // and gcd(m, x^{p^{k/r}} - x) == 1 for every prime r | k.
    const unsigned k = unsigned(m.size() - 1);
    if (k == 1) return true;
    const Fp x = {0, 1};
    unsigned rest = k;
    for (unsigned r = 2; r <= rest; ++r) {
        if (rest % r) continue;
        while (rest % r == 0) rest /= r;
        Bigint e = pow_big(Bigint(p), k / r);
        Fp g = gcd_fp(m, sub_fp(powmod_x_fp(e, m, p), x, p), p);
        if (g.size() != 1) return false;
    }
    Fp t = powmod_x_fp(pow_big(Bigint(p), k), m, p);
    return sub_fp(t, x, p).empty();
}

// Lexicographically least monic irreducible of degree k over F_p; tuples
// (c_0, ..., c_{k-1}) are compared with the constant term most significant.
std::vector<std::uint32_t> default_modulus(std::uint64_t p, unsigned k) {
    std::vector<std::uint32_t> c(k, 0);
    for (;;) {
        Fp m(c.begin(), c.end());
        m.push_back(1);
        if (irreducible_fp(m, p)) {
            std::vector<std::uint32_t> out(m.begin(), m.end());
            return out;
        }
        // increment from the last coordinate (least significant in this order)
        int i = int(k) - 1;
        while (i >= 0 && ++c[i] == p) c[i--] = 0;
        if (i < 0) throw std::logic_error("no irreducible polynomial found"); // unreachable
    }
}

struct FieldKey {
    std::uint64_t p;
    unsigned k;
    std::vector<std::uint32_t> modulus;
    bool operator<(const FieldKey& o) const {
        if (p != o.p) return p < o.p;
        if (k != o.k) return k < o.k;
        return modulus < o.modulus;
    }
};

} // namespace

class FieldRegistry {
public:
    static const Field& get(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus) {
        static FieldRegistry reg;
        std::lock_guard<std::mutex> lock(reg.mu_);
        FieldKey key{p, k, modulus};
        auto it = reg.fields_.find(key);
        if (it == reg.fields_.end()) {
            it = reg.fields_.emplace(key, std::unique_ptr<Field>(new Field(p, k, std::move(modulus)))).first;
        }
        return *it->second;
    }

private:
    std::mutex mu_;
    std::map<FieldKey, std::unique_ptr<Field>> fields_;
};

const Field& Field::make(std::uint64_t p, unsigned k) {
    if (p == 2 || !is_prime_u64(p))
        throw std::invalid_argument("p must be an odd prime");
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    Bigint q = pow_big(Bigint(p), k);
    if (q > kOrderBound) throw std::overflow_error("field order exceeds 2^32");
    if (k == 1) return FieldRegistry::get(p, 1, {});
    return FieldRegistry::get(p, k, default_modulus(p, k));
}

const Field& Field::make(std::uint64_t p, unsigned k, const std::vector<std::uint32_t>& modulus) {
    if (p == 2 || !is_prime_u64(p))
        throw std::invalid_argument("p must be an odd prime");
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    if (k == 1) {
        if (!modulus.empty()) throw std::invalid_argument("prime field takes no modulus");
        return FieldRegistry::get(p, 1, {});
    }
    Bigint q = pow_big(Bigint(p), k);
    if (q > kOrderBound) throw std::overflow_error("field order exceeds 2^32");
    if (modulus.size() != k + 1 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree k");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    Fp m(modulus.begin(), modulus.end());
    if (!irreducible_fp(m, p))
        throw std::invalid_argument("modulus is reducible over F_p");
    return FieldRegistry::get(p, k, modulus);
}

const Field& Field::of_order(std::uint64_t q) {
    std::uint64_t p;
    unsigned k;
    if (!odd_prime_power(q, &p, &k))
        throw std::invalid_argument("q must be an odd prime power");
    return make(p, k);
}

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) q_ *= p;
    if (q_ <= kTableBound) {
        neg_table_.resize(q_);
        add_table_.resize(q_ * q_);
        mul_table_.resize(q_ * q_);
        inv_table_.assign(q_, 0);
        chi_table_.assign(q_, -1);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_table_[a] = neg_slow(a);
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[std::size_t(a) * q_ + b] = add_slow(a, b);
                std::uint32_t m = mul_slow(a, b);
                mul_table_[std::size_t(a) * q_ + b] = m;
                if (m == 1) inv_table_[a] = b;
                if (a == b) chi_table_[m] = 1; // m is a square
            }
        }
        chi_table_[0] = 0;
    }
}

std::vector<std::uint32_t> Field::decode(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = std::uint32_t(a % p_);
        a = std::uint32_t(a / p_);
    }
    return d;
}

std::uint32_t Field::encode(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t v = 0;
    for (unsigned i = k_; i-- > 0;) v = v * p_ + (i < digits.size() ? digits[i] : 0);
    return std::uint32_t(v);
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return std::uint32_t((std::uint64_t(a) + b) % p_);
    auto da = decode(a), db = decode(b);
    for (unsigned i = 0; i < k_; ++i) da[i] = std::uint32_t((std::uint64_t(da[i]) + db[i]) % p_);
    return encode(da);
}

std::uint32_t Field::neg_slow(std::uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : std::uint32_t(p_ - a);
    auto da = decode(a);
    for (unsigned i = 0; i < k_; ++i)
        if (da[i]) da[i] = std::uint32_t(p_ - da[i]);
    return encode(da);
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return std::uint32_t(std::uint64_t(a) * b % p_);
    auto da = decode(a), db = decode(b);
    std::vector<std::uint64_t> acc(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
    for (unsigned i = 2 * k_ - 1; i-- > k_;) {
        std::uint64_t c = acc[i];
        if (!c) continue;
        acc[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
            acc[i - k_ + j] = (acc[i - k_ + j] + (p_ - modulus_[j]) * c) % p_;
    }
    std::vector<std::uint32_t> r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = std::uint32_t(acc[i]);
    return encode(r);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

int Field::chi_slow(std::uint32_t a) const {
    if (a == 0) return 0;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

std::optional<std::uint32_t> Field::sqrt(std::uint32_t a) const {
    if (a == 0) return 0u;
    if (chi(a) != 1) return std::nullopt;
    // q - 1 = 2^s * t, t odd
    std::uint64_t t = q_ - 1;
    unsigned s = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    // deterministic non-residue: smallest canonical code
    std::uint32_t z = 2;
    while (chi(z) != -1) ++z;
    std::uint32_t c = pow(z, t);
    std::uint32_t r = pow(a, (t + 1) / 2);
    std::uint32_t u = pow(a, t);
    unsigned m = s;
    while (u != 1) {
        unsigned i = 0;
        std::uint32_t v = u;
        while (v != 1) {
            v = mul(v, v);
            ++i;
        }
        std::uint32_t b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        u = mul(u, c);
        r = mul(r, b);
    }
    return std::min(r, neg(r));
}

std::uint32_t Field::from_int(long long v) const {
    long long m = v % (long long)p_;
    if (m < 0) m += (long long)p_;
    return std::uint32_t(m);
}

} // namespace normff
