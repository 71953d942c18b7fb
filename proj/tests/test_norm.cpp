#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normff/norm.hpp"

using namespace normff;

namespace {
const Field& F3 = Field::make(3, 1);

Poly P(const Field& f, std::initializer_list<std::uint32_t> cs, Ring r = Ring::T) {
    return Poly(f, std::vector<std::uint32_t>(cs), r);
}
} // namespace

TEST_CASE("substitute_S sends T to -S^2") {
    Poly t = Poly::var(F3);
    Poly img = substitute_S(t);
    CHECK(img.ring() == Ring::S);
    CHECK(img == P(F3, {0, 0, 2}, Ring::S)); // -S^2 = 2S^2 over F_3
    // T^2 + 1 -> S^4 + 1
    CHECK(substitute_S(P(F3, {1, 0, 1})) == P(F3, {1, 0, 0, 0, 1}, Ring::S));
}

TEST_CASE("conjugation negates odd coefficients") {
    Poly h = P(F3, {1, 1}, Ring::S); // S + 1
    CHECK(conj(h) == P(F3, {1, 2}, Ring::S));
    CHECK(conj(conj(h)) == h);
}

TEST_CASE("norm_map worked examples") {
    CHECK(norm_map(Poly::one(F3, Ring::S)) == Poly::one(F3));
    // N(S+1) = (S+1)(-S+1) = 1 - S^2 = 1 + T
    CHECK(norm_map(P(F3, {1, 1}, Ring::S)) == P(F3, {1, 1}));
    // N(S) = -S^2 = T
    CHECK(norm_map(Poly::var(F3, Ring::S)) == Poly::var(F3));
}

TEST_CASE("norm_map is multiplicative") {
    for (std::uint64_t i = 0; i < 81; ++i)
        for (std::uint64_t j = 0; j < 27; ++j) {
            std::vector<std::uint32_t> a(4), b(3);
            std::uint64_t v = i;
            for (int d = 0; d < 4; ++d, v /= 3) a[d] = std::uint32_t(v % 3);
            v = j;
            for (int d = 0; d < 3; ++d, v /= 3) b[d] = std::uint32_t(v % 3);
            Poly ha(F3, a, Ring::S), hb(F3, b, Ring::S);
            CHECK(norm_map(ha * hb) == norm_map(ha) * norm_map(hb));
        }
}

TEST_CASE("is_norm on the base examples") {
    CHECK(is_norm(Poly::var(F3)));             // T = 0^2 + T*1^2
    CHECK(is_norm(P(F3, {1, 1})));             // T + 1 = 1 - S^2... = N(S+1)
    CHECK_FALSE(is_norm(P(F3, {2, 1})));       // T + 2 has (Q/T) = -1, multiplicity 1
    CHECK(is_norm(P(F3, {1, 1, 1})));          // (T+2)^2 = T^2 + T + 1
}

TEST_CASE("is_norm respects even multiplicity of inert primes") {
    Poly q = P(F3, {2, 1}); // (Q/T) = -1
    CHECK(is_norm(q * q));
    CHECK_FALSE(is_norm(q * q * q));
    CHECK(is_norm(q * q * P(F3, {1, 1})));
    CHECK_THROWS(is_norm(P(F3, {1, 2}))); // non-monic input
}

TEST_CASE("represent produces valid witnesses") {
    auto wt = represent(Poly::var(F3));
    REQUIRE(wt);
    CHECK(wt->A.is_zero());
    CHECK(wt->B == Poly::one(F3));

    auto w1 = represent(P(F3, {1, 1}));
    REQUIRE(w1);
    CHECK(w1->A * w1->A + Poly::var(F3) * (w1->B * w1->B) == P(F3, {1, 1}));

    CHECK_FALSE(represent(P(F3, {2, 1})));
}

TEST_CASE("represent round-trips norms of S-polynomials up to degree 6") {
    for (std::uint64_t q : {3ull, 5ull}) {
        const Field& F = Field::of_order(q);
        Poly t = Poly::var(F);
        std::uint64_t total = 1;
        for (int i = 0; i < 6; ++i) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<std::uint32_t> c(7);
            c[6] = 1;
            std::uint64_t v = idx;
            for (int d = 0; d < 6; ++d, v /= q) c[d] = std::uint32_t(v % q);
            Poly h(F, c, Ring::S);
            Poly f = norm_map(h).monic_scaled();
            CHECK(is_norm(f));
            auto w = represent(f);
            REQUIRE(w);
            CHECK(w->A * w->A + t * (w->B * w->B) == f);
            // degree law: deg f = max(2 deg A, 2 deg B + 1)
            int da = w->A.is_zero() ? -1 : 2 * w->A.degree();
            int db = w->B.is_zero() ? -1 : 2 * w->B.degree() + 1;
            CHECK(std::max(da, db) == f.degree());
        }
    }
}

TEST_CASE("witnesses are deterministic in the seed") {
    Poly f = P(F3, {1, 0, 1}) * P(F3, {1, 1}) * Poly::var(F3);
    auto w1 = represent(f, 3);
    auto w2 = represent(f, 3);
    REQUIRE(w1);
    REQUIRE(w2);
    CHECK(w1->A == w2->A);
    CHECK(w1->B == w2->B);
}
