#include "normff/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace normff {

Poly::Poly(const Field& f, std::vector<std::uint32_t> coeffs, Ring ring)
    : f_(&f), ring_(ring), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= f.q()) throw std::invalid_argument("coefficient code out of range");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::parse(const Field& f, const std::string& text, Ring ring) {
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient '" + item + "'");
        }
        while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad coefficient '" + item + "'");
        if (v < 0 || std::uint64_t(v) >= f.q())
            throw std::invalid_argument("coefficient out of range for F_q");
        coeffs.push_back(std::uint32_t(v));
    }
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    return Poly(f, std::move(coeffs), ring);
}

std::string Poly::to_coeff_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c_[i]);
    }
    return out;
}

int Poly::degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return int(c_.size()) - 1;
}

std::uint32_t Poly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero");
    return c_.back();
}

void Poly::check_compat(const Poly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("polynomials over different fields");
    if (ring_ != o.ring_) throw std::invalid_argument("polynomials in different rings");
}

Poly Poly::monic_scaled() const {
    if (c_.empty()) throw std::domain_error("cannot normalize the zero polynomial");
    return *this * f_->inv(c_.back());
}

Poly Poly::derivative() const {
    std::vector<std::uint32_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        std::uint32_t m = f_->from_int((long long)(i % f_->p()));
        d.push_back(f_->mul(c_[i], m));
    }
    return Poly(*f_, std::move(d), ring_);
}

std::uint32_t Poly::eval(std::uint32_t x) const {
    std::uint32_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::with_ring(Ring r) const { return Poly(*f_, c_, r); }

Poly operator+(const Poly& a, const Poly& b) {
    a.check_compat(b);
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.f_->add(a.coeff(unsigned(i)), b.coeff(unsigned(i)));
    return Poly(*a.f_, std::move(c), a.ring_);
}

Poly operator-(const Poly& a, const Poly& b) {
    a.check_compat(b);
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.f_->sub(a.coeff(unsigned(i)), b.coeff(unsigned(i)));
    return Poly(*a.f_, std::move(c), a.ring_);
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compat(b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(*a.f_, a.ring_);
    std::vector<std::uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = a.f_->add(c[i + j], a.f_->mul(a.c_[i], b.c_[j]));
    }
    return Poly(*a.f_, std::move(c), a.ring_);
}

Poly operator*(const Poly& a, std::uint32_t scalar) {
    std::vector<std::uint32_t> c(a.c_);
    for (auto& x : c) x = a.f_->mul(x, scalar);
    return Poly(*a.f_, std::move(c), a.ring_);
}

std::pair<Poly, Poly> Poly::divrem(const Poly& f, const Poly& g) {
    f.check_compat(g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& F = *f.f_;
    std::vector<std::uint32_t> r(f.c_);
    const int dg = g.degree();
    if (int(r.size()) - 1 < dg) return {Poly::zero(F, f.ring_), f};
    std::vector<std::uint32_t> quot(r.size() - dg, 0);
    const std::uint32_t glc_inv = F.inv(g.lc());
    for (std::size_t i = r.size(); i-- > std::size_t(dg);) {
        std::uint32_t c = F.mul(r[i], glc_inv);
        if (!c) continue;
        quot[i - dg] = c;
        for (int j = 0; j <= dg; ++j)
            r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, g.c_[j]));
    }
    return {Poly(F, std::move(quot), f.ring_), Poly(F, std::move(r), f.ring_)};
}

bool Poly::divides(const Poly& g, const Poly& f) {
    return divrem(f, g).second.is_zero();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic_scaled();
}

Poly Poly::powmod(const Poly& base, Bigint e, const Poly& mod) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly b = divrem(base, mod).second;
    Poly r = Poly::one(*base.f_, base.ring_);
    while (e > 0) {
        if ((e & 1) != 0) r = divrem(r * b, mod).second;
        b = divrem(b * b, mod).second;
        e >>= 1;
    }
    return r;
}

int Poly::compare(const Poly& o) const {
    check_compat(o);
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    return 0;
}

Poly Factorization::value(const Field& f, Ring ring) const {
    Poly v = Poly::constant(f, unit, ring);
    for (const auto& [prime, mult] : factors)
        for (unsigned i = 0; i < mult; ++i) v = v * prime;
    return v;
}

bool irreducible(const Poly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("irreducibility is defined for degree >= 1");
    const unsigned n = unsigned(f.degree());
    if (n == 1) return true;
    const Field& F = f.field();
    const Poly x = Poly::var(F, f.ring());
    const Bigint q(F.q());
    unsigned rest = n;
    for (unsigned r = 2; r <= rest; ++r) {
        if (rest % r) continue;
        while (rest % r == 0) rest /= r;
        Poly h = Poly::powmod(x, pow_big(q, n / r), f);
        if (Poly::gcd(f, h - x).degree() != 0) return false;
    }
    Poly h = Poly::powmod(x, pow_big(q, n), f);
    return (h - x).is_zero();
}

namespace {

// Counter-mode generator; all randomness in factor() flows through one of
// these, keyed by the input polynomial and the caller's seed.
class CounterRng {
public:
    CounterRng(const Poly& f, std::uint64_t seed) {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ seed;
        h = mix(h ^ f.field().q());
        for (auto c : f.coeffs()) h = mix(h ^ c);
        state_ = h;
    }
    std::uint64_t next() { return state_ = mix(state_ + 0x9e3779b97f4a7c15ull); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t state_;
};

Poly random_poly_below(const Field& F, Ring ring, unsigned deg_bound, CounterRng& rng) {
    std::vector<std::uint32_t> c(deg_bound);
    for (auto& x : c) x = std::uint32_t(rng.next() % F.q());
    return Poly(F, std::move(c), ring);
}

// f = g(T^p) -> g, with coefficient p-th roots (c^{q/p}).
Poly pth_root(const Poly& f) {
    const Field& F = f.field();
    const std::uint64_t p = F.p();
    std::vector<std::uint32_t> g;
    for (unsigned i = 0; std::size_t(i) * p < f.coeffs().size(); ++i) {
        std::uint32_t c = f.coeff(unsigned(i * p));
        g.push_back(F.pow(c, F.q() / p));
    }
    return Poly(F, std::move(g), f.ring());
}

// monic squarefree f -> (squarefree part of degree-d primes, d) pieces
void distinct_degree(const Poly& f, std::vector<std::pair<Poly, unsigned>>& out) {
    const Field& F = f.field();
    Poly rem = f;
    Poly h = Poly::var(F, f.ring());
    unsigned d = 0;
    while (!rem.is_zero() && rem.degree() > 0) {
        ++d;
        if (2 * d > unsigned(rem.degree())) {
            out.emplace_back(rem, unsigned(rem.degree()));
            return;
        }
        h = Poly::powmod(h, Bigint(F.q()), rem);
        Poly g = Poly::gcd(rem, h - Poly::var(F, f.ring()));
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rem = Poly::divrem(rem, g).first;
            h = Poly::divrem(h, rem).second;
        }
    }
}

// Cantor-Zassenhaus equal-degree splitting (q odd).
void equal_degree(const Poly& f, unsigned d, CounterRng& rng, std::vector<Poly>& out) {
    if (unsigned(f.degree()) == d) {
        out.push_back(f);
        return;
    }
    const Field& F = f.field();
    const Bigint e = (pow_big(Bigint(F.q()), d) - 1) / 2;
    for (;;) {
        Poly h = random_poly_below(F, f.ring(), unsigned(f.degree()), rng);
        if (h.is_zero()) continue;
        Poly g = Poly::gcd(f, h);
        if (g.degree() == 0) {
            Poly t = Poly::powmod(h, e, f) - Poly::one(F, f.ring());
            g = Poly::gcd(f, t);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(Poly::divrem(f, g).first, d, rng, out);
            return;
        }
    }
}

// Yun-style squarefree decomposition in characteristic p.
void squarefree(const Poly& f, unsigned outer_mult,
                std::vector<std::pair<Poly, unsigned>>& out) {
    const Field& F = f.field();
    Poly df = f.derivative();
    if (df.is_zero()) {
        squarefree(pth_root(f), outer_mult * unsigned(F.p()), out);
        return;
    }
    Poly c = Poly::gcd(f, df);
    Poly w = Poly::divrem(f, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = Poly::gcd(w, c);
        Poly z = Poly::divrem(w, y).first;
        if (z.degree() > 0) out.emplace_back(z, i * outer_mult);
        w = std::move(y);
        c = Poly::divrem(c, w).first;
        ++i;
    }
    if (c.degree() > 0) squarefree(pth_root(c), outer_mult * unsigned(F.p()), out);
}

} // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    Factorization result;
    result.unit = f.lc();
    if (f.degree() == 0) return result;

    CounterRng rng(f, seed);
    Poly monic = f.monic_scaled();

    std::vector<std::pair<Poly, unsigned>> sf;
    squarefree(monic, 1, sf);

    std::map<std::vector<std::uint32_t>, std::pair<Poly, unsigned>> acc;
    for (const auto& [part, mult] : sf) {
        std::vector<std::pair<Poly, unsigned>> byDeg;
        distinct_degree(part, byDeg);
        for (const auto& [g, d] : byDeg) {
            std::vector<Poly> primes;
            equal_degree(g, d, rng, primes);
            for (const auto& prime : primes) {
                auto it = acc.find(prime.coeffs());
                if (it == acc.end())
                    acc.emplace(prime.coeffs(), std::make_pair(prime, mult));
                else
                    it->second.second += mult;
            }
        }
    }
    for (auto& [key, pm] : acc) result.factors.push_back(pm);
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

int legendre(const Poly& f, const Poly& P) {
    if (!P.is_monic() || P.degree() < 1 || !irreducible(P))
        throw std::invalid_argument("legendre modulus must be monic irreducible");
    const Field& F = f.field();
    Poly r = Poly::divrem(f, P).second;
    if (r.is_zero()) return 0;
    const Bigint e = (pow_big(Bigint(F.q()), unsigned(P.degree())) - 1) / 2;
    Poly s = Poly::powmod(r, e, P);
    if (s == Poly::one(F, f.ring())) return 1;
    if (s == Poly::constant(F, F.neg(1), f.ring())) return -1;
    throw std::logic_error("legendre symbol did not evaluate to +-1");
}

} // namespace normff
