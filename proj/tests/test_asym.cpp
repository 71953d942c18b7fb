#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "normff/asym.hpp"

using namespace normff;

namespace {
struct PrecisionInit {
    PrecisionInit() { set_working_precision(50); }
} init_precision;
} // namespace

TEST_CASE("depth-0 truncation is the bare zeta factor") {
    KqValue k = kq(Bigint(3), 0);
    Real expect = 1 / sqrt(Real(1) - Real(1) / 3);
    CHECK(abs(k.value - expect) < 1e-40);
}

TEST_CASE("deeper truncations agree within the shallower tail bound") {
    KqValue a = kq(Bigint(3), 20);
    KqValue b = kq(Bigint(3), 40);
    CHECK(abs(log(a.value) - log(b.value)) <= a.tail_bound);
    CHECK(b.tail_bound < a.tail_bound);
}

TEST_CASE("K_q approaches 1 for large q") {
    KqValue k = kq(Bigint(101), 10);
    CHECK(k.value > 1);
    CHECK(k.value < Real("1.1"));
}

TEST_CASE("default depth drives the tail below 1e-30") {
    for (std::uint64_t q : {3ull, 9ull, 101ull}) {
        unsigned d = kq_default_depth(Bigint(q));
        CHECK(kq(Bigint(q), d).tail_bound < Real("1e-30"));
        CHECK((d == 1 || kq(Bigint(q), d - 1).tail_bound >= Real("1e-30")));
    }
}

TEST_CASE("series identity holds coefficientwise") {
    CHECK(check_series_identity(Bigint(3), 0) == 0);
    CHECK(check_series_identity(Bigint(3), 50) == 0);
    CHECK(check_series_identity(Bigint(9), 30) == 0);
}

TEST_CASE("large-n report shrinks and matches brute counts") {
    auto rows = asym_report(Bigint(3), 200);
    REQUIRE(rows.size() == 200);
    CHECK(rows[199].residual < rows[1].residual);
    const Field& F = Field::of_order(3);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(rows[n - 1].B == brute_count(F, n, 0, 2).value);
}

TEST_CASE("large-q report exact residual at n = 2") {
    auto rows = largeq_report(2, {Bigint(3)});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].B == 5);
    CHECK(rows[0].main2 == Rational(27, 8));
    CHECK(rows[0].c_term == Rational(3, 2));
    CHECK(rows[0].residual2 == Rational(1, 8));
    CHECK(rows[0].residual2_norm == Rational(1, 8));
    CHECK_THROWS(largeq_report(2, {Bigint(4)}));
}

TEST_CASE("large-q residual normalized by q^{n-2} stays bounded at n = 2") {
    std::vector<Bigint> qs;
    for (auto q : odd_prime_powers_upto(101)) qs.emplace_back(q);
    for (const auto& row : largeq_report(2, qs)) {
        CHECK(abs(row.residual2_norm) <= 10);
    }
}

TEST_CASE("iterated limit sequences") {
    std::vector<Bigint> qs;
    for (auto q : odd_prime_powers_upto(101)) qs.emplace_back(q);
    auto rows = iterated_limits_report(30, qs);
    Real inv_sqrt_pi = 1 / sqrt(boost::math::constants::pi<Real>());

    REQUIRE(rows.size() == 30 + qs.size());
    CHECK(rows[0].kind == "n");
    CHECK(abs(rows[0].value - Real("0.5")) < 1e-40); // sqrt(1) * h_1
    CHECK(abs(rows[0].distance - Real("0.0642")) < Real("1e-3"));

    Real prev;
    bool first = true;
    for (const auto& r : rows) {
        CHECK(abs(abs(r.value - inv_sqrt_pi) - r.distance) < 1e-35);
        if (r.kind == "n") {
            if (!first) CHECK(r.distance < prev);
            prev = r.distance;
            first = false;
        }
    }
    // q-row values are K_q / sqrt(pi); K_q = 1 + O(1/q)
    for (const auto& r : rows)
        if (r.kind == "q") {
            Real kq_val = r.value * sqrt(boost::math::constants::pi<Real>());
            CHECK(abs(kq_val - 1) * Real(r.index.str()) <= 2);
        }
}
