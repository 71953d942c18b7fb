#include "normff/asym.hpp"

#include <boost/math/constants/constants.hpp>

namespace normff {

namespace {
Real sqrt_pi() { return sqrt(boost::math::constants::pi<Real>()); }
} // namespace

KqValue kq(const Bigint& q, unsigned depth) {
    KqValue out{q, depth, Real(0), Real(0)};
    const Real qr(q);
    PiTable pi = depth ? pi_exact(q, depth) : PiTable{q, {}};
    Real log_k = -log(1 - 1 / qr) / 2;
    for (unsigned d = 1; d <= depth; ++d) {
        // group the Euler factors of degree d: pi_minus(d) copies of
        // (1 - q^{-2d})^{-1/2}
        Real factor_log = -log(1 - pow(qr, -2 * int(d))) / 2;
        log_k += Real(pi.at(d).minus) * factor_log;
    }
    out.value = exp(log_k);
    out.tail_bound = pow(qr, -int(depth)) / ((depth + 1) * (1 - 1 / qr));
    return out;
}

unsigned kq_default_depth(const Bigint& q) {
    const Real qr(q);
    const Real target("1e-30");
    for (unsigned d = 1;; ++d) {
        Real tail = pow(qr, -int(d)) / ((d + 1) * (1 - 1 / qr));
        if (tail < target) return d;
    }
}

Bigint check_series_identity(const Bigint& q, unsigned N) {
    PiTable pi = pi_exact(q, std::max(N, 1u));
    PowerSeries dstar = norm_count_series(pi, N);
    PowerSeries lhs = dstar * dstar;

    PowerSeries phi = PowerSeries::geometric(N, 1);
    for (unsigned d = 1; 2 * d <= N; ++d)
        if (pi.at(d).minus != 0)
            phi = phi * PowerSeries::binomial_inverse(N, 2 * d, pi.at(d).minus);
    PowerSeries rhs = PowerSeries::geometric(N, q) * phi;

    Bigint worst = 0;
    for (unsigned i = 0; i <= N; ++i) {
        Bigint diff = abs(lhs.coeff(i) - rhs.coeff(i));
        if (diff > worst) worst = diff;
    }
    return worst;
}

std::vector<AsymRow> asym_report(const Bigint& q, unsigned n_max) {
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    KqValue k = kq(q, kq_default_depth(q));
    const Real limit = k.value / sqrt_pi();
    const Real qr(q);

    std::vector<CountReport> counts = series_count(q, n_max);
    std::vector<AsymRow> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        const Bigint& B = counts[n].value;
        Real qn = pow(qr, int(n));
        Real sn = sqrt(Real(n));
        AsymRow row{n, B, limit * qn / sn, Real(0), Real(0)};
        row.residual = abs(Real(B) * sn / qn - limit);
        row.residual_times_n = row.residual * n;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<LargeqRow> largeq_report(unsigned n, const std::vector<Bigint>& q_list) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    const Rational hn = ewens_h(n);
    const Rational cn = coeff_c(n);
    std::vector<LargeqRow> rows;
    for (const Bigint& q : q_list) {
        if (q % 2 == 0) throw std::invalid_argument("q must be odd");
        Bigint B = series_count(q, n).back().value;
        LargeqRow row{q, B, hn * pow_big(q, n), cn * pow_big(q, n - 1), 0, 0};
        row.residual2 = Rational(B) - row.main2 - row.c_term;
        row.residual2_norm = row.residual2 / pow_big(q, n - 2);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<LimitRow> iterated_limits_report(unsigned n_max,
                                             const std::vector<Bigint>& q_list) {
    const Real target = 1 / sqrt_pi();
    std::vector<LimitRow> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        Real v = sqrt(Real(n)) * Real(ewens_h(n));
        rows.push_back(LimitRow{"n", Bigint(n), v, abs(v - target)});
    }
    for (const Bigint& q : q_list) {
        KqValue k = kq(q, kq_default_depth(q));
        Real v = k.value / sqrt_pi();
        rows.push_back(LimitRow{"q", q, v, abs(v - target)});
    }
    return rows;
}

} // namespace normff
