#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normff/count.hpp"

using namespace normff;

namespace {
const Field& F3 = Field::make(3, 1);

Poly P(const Field& f, std::initializer_list<std::uint32_t> cs) {
    return Poly(f, std::vector<std::uint32_t>(cs));
}
} // namespace

TEST_CASE("prime counts by enumeration, small degrees") {
    PiRow r1 = pi_enum(F3, 1);
    CHECK(r1.plus == 1);  // T + 1
    CHECK(r1.minus == 1); // T + 2
    PiRow r2 = pi_enum(F3, 2);
    CHECK(r2.plus == 1);  // T^2 + 1
    CHECK(r2.minus == 2); // T^2 + T + 2, T^2 + 2T + 2
    for (std::uint64_t q : {5ull, 7ull, 9ull}) {
        PiRow r = pi_enum(Field::of_order(q), 1);
        CHECK(r.plus == (q - 1) / 2);
        CHECK(r.minus == (q - 1) / 2);
    }
}

TEST_CASE("pi_exact matches enumeration and the degree-2 closed form") {
    for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull}) {
        PiTable t = pi_exact(Bigint(q), 5);
        const Field& F = Field::of_order(q);
        for (unsigned d = 1; d <= 5; ++d) {
            PiRow e = pi_enum(F, d, 1u << 30);
            CHECK(t.at(d).plus == e.plus);
            CHECK(t.at(d).minus == e.minus);
        }
        Bigint Q(q);
        CHECK(4 * t.at(2).plus == Q * Q - 2 * Q + 1);
        CHECK(4 * t.at(2).minus == Q * Q - 1);
    }
    // the defining character relation at N = 4, q = 5: the minus count picks
    // up the sign (-1)^{N/d}
    PiTable t = pi_exact(Bigint(5), 4);
    Bigint lhs = 1 * (t.at(1).plus + t.at(1).minus) + 2 * (t.at(2).plus + t.at(2).minus) +
                 4 * (t.at(4).plus - t.at(4).minus);
    CHECK(lhs == 0);
}

TEST_CASE("brute counts for q = 3") {
    CHECK(brute_count(F3, 0).value == 1);
    CHECK(brute_count(F3, 1).value == 2); // T and T + 1
    CHECK(brute_count(F3, 2).value == 5); // T^2, T(T+1), (T+1)^2, T^2+1, (T+2)^2
}

TEST_CASE("series counts agree with brute force for q = 3, n <= 8") {
    auto rows = series_count(Bigint(3), 8);
    REQUIRE(rows.size() == 9);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(rows[n].n == n);
        CHECK(rows[n].value == brute_count(F3, n, 0, 2).value);
    }
}

TEST_CASE("five-part classification examples") {
    CHECK(classify_F(P(F3, {1, 1})) == 1);       // squarefree split prime
    CHECK(classify_F(Poly::var(F3)) == 2);       // T itself
    CHECK(classify_F(P(F3, {1, 1, 1})) == 3);    // (T+2)^2, inert linear square
    CHECK(classify_F(P(F3, {1, 2, 1})) == 4);    // (T+1)^2, split linear square
    CHECK(!classify_F(P(F3, {2, 1})));           // not a norm
    Poly q2 = P(F3, {1, 0, 1});
    CHECK(classify_F(q2 * q2) == 5);
}

TEST_CASE("part sizes and their structural relations") {
    auto r1 = count_parts(F3, 1);
    REQUIRE(r1.f_part_sizes);
    CHECK(*r1.f_part_sizes == std::array<Bigint, 5>{1, 1, 0, 0, 0});

    for (std::uint64_t q : {3ull, 5ull}) {
        const Field& F = Field::of_order(q);
        std::vector<std::array<Bigint, 5>> parts(8);
        std::vector<Bigint> totals(8);
        for (unsigned n = 0; n <= 7; ++n) {
            auto r = count_parts(F, n, 0, 2, 1u << 30);
            parts[n] = *r.f_part_sizes;
            totals[n] = r.value;
            Bigint sum = 0;
            for (const auto& s : parts[n]) sum += s;
            CHECK(sum == r.value);
        }
        for (unsigned n = 2; n <= 7; ++n) {
            CHECK(parts[n][1] == parts[n - 1][0]);                        // F2 vs F1
            CHECK(2 * parts[n][2] == (Bigint(q) - 1) * parts[n - 2][0]);  // F3 vs F1
        }
    }
}

TEST_CASE("partition enumeration") {
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(1).size() == 1);
    CHECK(partitions(5).size() == 7);
    for (const auto& lam : partitions(6)) {
        unsigned total = 0;
        for (unsigned j = 0; j < lam.size(); ++j) total += lam[j] * (j + 1);
        CHECK(total == 6);
    }
}

TEST_CASE("h_n closed form") {
    CHECK(ewens_h(0) == Rational(1));
    CHECK(ewens_h(1) == Rational(1, 2));
    CHECK(ewens_h(2) == Rational(3, 8));
    for (unsigned n = 0; n <= 30; ++n) {
        Rational lhs = ewens_h(n) * Rational(pow_big(Bigint(4), n));
        CHECK(lhs == Rational(binomial(Bigint(2 * n), n)));
    }
}

TEST_CASE("c_n values") {
    CHECK(coeff_c(2) == Rational(1, 2));
    CHECK(coeff_c(3) == Rational(5, 16)); // 3/16 + 1/8
    CHECK_THROWS(coeff_c(1));
    for (unsigned n = 2; n <= 30; ++n)
        CHECK(coeff_c(n) == ewens_h(n - 1) / 2 + ewens_h(n - 2) / 4);
}

TEST_CASE("first-part count from partitions matches enumeration") {
    for (std::uint64_t q : {3ull, 5ull}) {
        PiTable t = pi_exact(Bigint(q), 7);
        const Field& F = Field::of_order(q);
        for (unsigned n = 1; n <= 7; ++n) {
            auto r = count_parts(F, n, 0, 2, 1u << 30);
            CHECK(f1_partition_count(t, n) == (*r.f_part_sizes)[0]);
        }
    }
}

TEST_CASE("f1 worked values for q = 3") {
    PiTable t = pi_exact(Bigint(3), 4);
    CHECK(f1_partition_count(t, 1) == 1);
    CHECK(f1_partition_count(t, 2) == 1); // binom(1,2) + binom(1,1)
}

TEST_CASE("budget enforcement") {
    CHECK_THROWS_AS(brute_count(F3, 20, 0, 1, 1000), BudgetExceeded);
    CHECK_THROWS_AS(pi_enum(F3, 20, 1000), BudgetExceeded);
}

TEST_CASE("thread count does not change results") {
    Enumeration e(F3, 7, 1u << 30);
    for (unsigned n = 0; n <= 7; ++n) {
        CHECK(e.count_norms(n, 1) == e.count_norms(n, 4));
        CHECK(e.count_parts(n, 1) == e.count_parts(n, 4));
    }
}
