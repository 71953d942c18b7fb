#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "normff/field.hpp"

namespace normff {

// F_q[T] and F_q[S] carry the same arithmetic; the tag only matters to the
// norm layer (S^2 = -T).  Mixing tags in an operation is an error.
enum class Ring { T, S };

// Dense univariate polynomial over a Field.  Coefficients are canonical
// element codes, index i = coefficient of degree i, always trimmed.  The zero
// polynomial has an empty coefficient vector and no degree.
class Poly {
public:
    Poly(const Field& f, std::vector<std::uint32_t> coeffs, Ring ring = Ring::T);

    static Poly zero(const Field& f, Ring ring = Ring::T) { return Poly(f, {}, ring); }
    static Poly one(const Field& f, Ring ring = Ring::T) { return Poly(f, {1}, ring); }
    static Poly constant(const Field& f, std::uint32_t c, Ring ring = Ring::T) {
        return Poly(f, {c}, ring);
    }
    static Poly var(const Field& f, Ring ring = Ring::T) { return Poly(f, {0, 1}, ring); }

    // "c0,c1,...,cd" with canonical integer codes, degree 0 first.
    static Poly parse(const Field& f, const std::string& text, Ring ring = Ring::T);
    std::string to_coeff_string() const;

    const Field& field() const { return *f_; }
    Ring ring() const { return ring_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int degree() const; // throws on the zero polynomial
    std::uint32_t coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t lc() const; // leading coefficient, throws on zero
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly monic_scaled() const; // f / lc(f)
    Poly derivative() const;
    std::uint32_t eval(std::uint32_t x) const;
    Poly with_ring(Ring r) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, std::uint32_t scalar);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.f_ == b.f_ && a.ring_ == b.ring_ && a.c_ == b.c_;
    }

    // f = s*g + r with deg r < deg g
    static std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
    static bool divides(const Poly& g, const Poly& f);
    static Poly gcd(Poly a, Poly b); // monic
    static Poly powmod(const Poly& base, Bigint e, const Poly& mod);

    // Ordering used everywhere a deterministic choice is needed: by degree,
    // then by canonical coefficient encoding (most significant coefficient
    // first); zero sorts before everything.
    int compare(const Poly& o) const;
    bool operator<(const Poly& o) const { return compare(o) < 0; }

private:
    void check_compat(const Poly& o) const;
    const Field* f_;
    Ring ring_;
    std::vector<std::uint32_t> c_;
};

// unit * prod prime^mult == original input; primes monic irreducible,
// pairwise distinct, sorted by (degree, canonical encoding).
struct Factorization {
    std::uint32_t unit;
    std::vector<std::pair<Poly, unsigned>> factors;

    Poly value(const Field& f, Ring ring) const;
};

// Rabin's irreducibility test; requires deg f >= 1.
bool irreducible(const Poly& f);

// Squarefree decomposition (p-th powers handled via coefficient p-th roots),
// distinct-degree splitting, then seeded Cantor-Zassenhaus.  Deterministic
// for fixed (f, seed).
Factorization factor(const Poly& f, std::uint64_t seed = 0);

// Legendre symbol (f/P) = f^{(|P|-1)/2} mod P, in {-1, 0, +1}.
// P must be monic irreducible.
int legendre(const Poly& f, const Poly& P);

} // namespace normff
