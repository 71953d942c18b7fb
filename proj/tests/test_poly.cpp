#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "normff/poly.hpp"

using namespace normff;

namespace {
const Field& F3 = Field::make(3, 1);

Poly P(const Field& f, std::initializer_list<std::uint32_t> cs) {
    return Poly(f, std::vector<std::uint32_t>(cs));
}
} // namespace

TEST_CASE("construction, parsing, degree") {
    Poly f = Poly::parse(F3, "1,0,2");
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0) == 1);
    CHECK(f.lc() == 2);
    CHECK_FALSE(f.is_monic());
    CHECK(f.monic_scaled() == P(F3, {2, 0, 1}));
    CHECK(f.to_coeff_string() == "1,0,2");
    CHECK_THROWS(Poly::zero(F3).degree());
    CHECK_THROWS(Poly::parse(F3, "1,4"));
}

TEST_CASE("ring and product arithmetic") {
    Poly t = Poly::var(F3);
    Poly f = (t + Poly::one(F3)) * (t + P(F3, {2})); // (T+1)(T+2) = T^2 + 2
    CHECK(f == P(F3, {2, 0, 1}));
    CHECK(f.eval(1) == 0);
    CHECK(f.eval(0) == 2);
    CHECK((f - f).is_zero());
    CHECK(f.derivative() == P(F3, {0, 2}));
    CHECK_THROWS(t + Poly::var(F3, Ring::S));
}

TEST_CASE("divrem and gcd") {
    Poly f = P(F3, {1, 0, 0, 0, 1});  // T^4 + 1
    Poly g = P(F3, {1, 1});           // T + 1
    auto [s, r] = Poly::divrem(f, g);
    CHECK(s * g + r == f);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == 2); // f(-1) = 1 + 1 = 2

    Poly a = P(F3, {1, 0, 1}) * P(F3, {2, 1});
    Poly b = P(F3, {1, 0, 1}) * P(F3, {1, 1});
    CHECK(Poly::gcd(a, b) == P(F3, {1, 0, 1}));
    CHECK(Poly::divides(P(F3, {1, 0, 1}), a));
    CHECK_FALSE(Poly::divides(P(F3, {1, 1}), a));
}

TEST_CASE("irreducibility over F_3") {
    CHECK(irreducible(P(F3, {1, 0, 1})));       // T^2 + 1
    CHECK_FALSE(irreducible(P(F3, {2, 0, 1}))); // (T+1)(T+2)
    CHECK(irreducible(P(F3, {1, 2, 0, 1})));    // T^3 + 2T + 1
    CHECK(irreducible(P(F3, {0, 1})));
    CHECK_FALSE(irreducible(P(F3, {0, 0, 1})));
    // monic irreducible quadratics over F_3 are exactly three
    unsigned count = 0;
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b)
            if (irreducible(P(F3, {b, a, 1}))) ++count;
    CHECK(count == 3);
}

TEST_CASE("factor recovers squared and p-th power shapes") {
    Poly q = P(F3, {1, 0, 1});
    Poly f = q * q; // T^4 + 2T^2 + 1
    auto fac = factor(f);
    CHECK(fac.unit == 1);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == q);
    CHECK(fac.factors[0].second == 2);

    Poly cube = q * q * q; // exercises the p-th root branch of squarefree splitting
    auto fc = factor(cube);
    REQUIRE(fc.factors.size() == 1);
    CHECK(fc.factors[0].second == 3);
    CHECK(fc.value(F3, Ring::T) == cube);
}

TEST_CASE("factor round-trips over several fields and degrees") {
    for (std::uint64_t q : {3ull, 5ull, 9ull}) {
        const Field& F = Field::of_order(q);
        // all monic polynomials of degree 3
        std::vector<std::uint32_t> c(4);
        c[3] = 1;
        for (std::uint64_t idx = 0; idx < q * q * q; ++idx) {
            std::uint64_t v = idx;
            for (int i = 0; i < 3; ++i, v /= q) c[i] = std::uint32_t(v % q);
            Poly f(F, c);
            auto fac = factor(f, 7);
            CHECK(fac.value(F, Ring::T) == f);
            for (const auto& [prime, mult] : fac.factors) {
                CHECK(prime.is_monic());
                CHECK(irreducible(prime));
                CHECK(mult >= 1);
            }
            CHECK(std::is_sorted(fac.factors.begin(), fac.factors.end(),
                                 [](const auto& x, const auto& y) {
                                     return x.first < y.first;
                                 }));
            // determinism across seeds
            auto fac2 = factor(f, 12345);
            CHECK(fac.factors == fac2.factors);
        }
    }
}

TEST_CASE("Legendre symbol values and multiplicativity") {
    Poly t = Poly::var(F3);
    CHECK(legendre(P(F3, {1, 1}), t) == 1);  // f(0) = 1, a square
    CHECK(legendre(P(F3, {2, 1}), t) == -1); // f(0) = 2, a non-square
    CHECK(legendre(t, t) == 0);
    CHECK_THROWS(legendre(t, P(F3, {2, 0, 1}))); // modulus must be prime

    Poly p2 = P(F3, {1, 0, 1});
    for (std::uint64_t i = 1; i < 81; ++i) {
        std::uint64_t v = i;
        std::vector<std::uint32_t> c(4);
        for (int j = 0; j < 4; ++j, v /= 3) c[j] = std::uint32_t(v % 3);
        Poly f(F3, c);
        for (std::uint64_t i2 = 1; i2 < 27; ++i2) {
            std::uint64_t w = i2;
            std::vector<std::uint32_t> c2(3);
            for (int j = 0; j < 3; ++j, w /= 3) c2[j] = std::uint32_t(w % 3);
            Poly g(F3, c2);
            CHECK(legendre(f * g, p2) == legendre(f, p2) * legendre(g, p2));
        }
    }
}

TEST_CASE("deterministic polynomial ordering") {
    CHECK(P(F3, {1, 1}) < P(F3, {2, 1}));
    CHECK(P(F3, {2, 1}) < P(F3, {0, 2, 1}));
    CHECK(Poly::zero(F3) < Poly::one(F3));
}

TEST_CASE("powmod agrees with iterated multiplication") {
    Poly t = Poly::var(F3);
    Poly mod = P(F3, {1, 2, 0, 1});
    Poly direct = Poly::one(F3);
    for (int i = 0; i < 11; ++i) direct = Poly::divrem(direct * t, mod).second;
    CHECK(Poly::powmod(t, Bigint(11), mod) == direct);
}
