#include "normff/verify.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace normff {

namespace {

std::string big_str(const Bigint& v) { return v.str(); }

// iterate all monic polynomials of degree deg in canonical index order
template <typename Fn>
void each_monic(const Field& F, unsigned deg, Fn&& fn) {
    std::vector<std::uint32_t> c(deg + 1, 0);
    c[deg] = 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < deg; ++i) total *= F.q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        fn(Poly(F, c));
        for (unsigned i = 0; i < deg; ++i) {
            if (++c[i] < F.q()) break;
            c[i] = 0;
        }
    }
}

} // namespace

SuiteResult verify_elementary(const Field& field, unsigned deg_max, std::uint64_t seed,
                              unsigned threads) {
    const Poly T = Poly::var(field);
    const Poly minus_T = T * field.neg(1);

    struct Shard {
        std::uint64_t reciprocity_bad = 0;
        std::uint64_t dichotomy_bad = 0;
        std::uint64_t witness_bad = 0;
        std::uint64_t primes_seen = 0;
        std::uint64_t norms_seen = 0;
    };

    // flatten (degree, index) across degrees 1..deg_max for sharding
    std::vector<std::pair<unsigned, std::uint64_t>> tasks;
    {
        std::uint64_t qd = 1;
        for (unsigned d = 1; d <= deg_max; ++d) {
            qd *= field.q();
            for (std::uint64_t i = 0; i < qd; ++i) tasks.emplace_back(d, i);
        }
    }
    if (threads < 1) threads = 1;
    std::vector<Shard> shards(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = tasks.size() / threads * t + std::min<std::uint64_t>(t, tasks.size() % threads);
        std::uint64_t hi = lo + tasks.size() / threads + (t < tasks.size() % threads ? 1 : 0);
        pool.emplace_back([&, t, lo, hi]() {
            Shard& s = shards[t];
            for (std::uint64_t k = lo; k < hi; ++k) {
                auto [d, idx] = tasks[k];
                std::vector<std::uint32_t> c(d + 1, 0);
                std::uint64_t v = idx;
                for (unsigned i = 0; i < d; ++i) {
                    c[i] = std::uint32_t(v % field.q());
                    v /= field.q();
                }
                c[d] = 1;
                Poly f(field, c);
                if (irreducible(f) && !(f == T)) {
                    ++s.primes_seen;
                    if (legendre(f, T) * legendre(minus_T, f) != 1) ++s.reciprocity_bad;
                    bool split = !irreducible(substitute_S(f));
                    if ((legendre(f, T) == 1) != split) ++s.dichotomy_bad;
                }
                auto w = represent(f, seed);
                if (w.has_value() != is_norm(f, seed)) {
                    ++s.witness_bad;
                } else if (w) {
                    ++s.norms_seen;
                    Poly recon = w->A * w->A + T * (w->B * w->B);
                    bool ok = recon == f;
                    // degree law of the witness
                    int da = w->A.is_zero() ? -1 : 2 * w->A.degree();
                    int db = w->B.is_zero() ? -1 : 2 * w->B.degree() + 1;
                    ok = ok && std::max(da, db) == f.degree();
                    if (!ok) ++s.witness_bad;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    Shard total;
    for (const auto& s : shards) {
        total.reciprocity_bad += s.reciprocity_bad;
        total.dichotomy_bad += s.dichotomy_bad;
        total.witness_bad += s.witness_bad;
        total.primes_seen += s.primes_seen;
        total.norms_seen += s.norms_seen;
    }

    SuiteResult out;
    const std::string scope =
        "q=" + std::to_string(field.q()) + " degmax=" + std::to_string(deg_max);
    out.checks.push_back({"reciprocity " + scope, total.reciprocity_bad == 0,
                          std::to_string(total.primes_seen) + " primes, " +
                              std::to_string(total.reciprocity_bad) + " violations"});
    out.checks.push_back({"splitting-dichotomy " + scope, total.dichotomy_bad == 0,
                          std::to_string(total.dichotomy_bad) + " violations"});
    out.checks.push_back({"witness " + scope, total.witness_bad == 0,
                          std::to_string(total.norms_seen) + " norms witnessed, " +
                              std::to_string(total.witness_bad) + " violations"});
    return out;
}

SuiteResult verify_identity(const Bigint& q, unsigned N) {
    Bigint disc = check_series_identity(q, N);
    SuiteResult out;
    out.checks.push_back({"series-identity q=" + big_str(q) + " N=" + std::to_string(N),
                          disc == 0, "max coefficient discrepancy " + big_str(disc)});
    return out;
}

SuiteResult verify_largeq(unsigned n_max, std::uint64_t q_max) {
    SuiteResult out;
    std::vector<Bigint> qs;
    for (auto q : odd_prime_powers_upto(q_max)) qs.emplace_back(q);
    for (unsigned n = 2; n <= n_max; ++n) {
        auto rows = largeq_report(n, qs);
        Rational worst = 0;
        std::size_t argmax = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rational a = abs(rows[i].residual2_norm);
            if (a > worst) {
                worst = a;
                argmax = i;
            }
        }
        bool window = worst <= 10;
        bool no_growth = rows.size() < 2 || argmax + 1 != rows.size();
        out.checks.push_back({"largeq-window n=" + std::to_string(n), window,
                              "max |residual2/q^(n-2)| = " + format_rational(worst)});
        out.checks.push_back({"largeq-no-growth n=" + std::to_string(n), no_growth,
                              "max attained at q=" + big_str(rows[argmax].q)});
        out.files["largeq_n" + std::to_string(n) + ".csv"] = csv_largeq(n, rows);
    }
    return out;
}

SuiteResult verify_largen(const Bigint& q, unsigned n_max) {
    if (n_max < 20) throw std::invalid_argument("largen suite needs n_max >= 20");
    SuiteResult out;
    auto rows = asym_report(q, n_max);
    const Real r10 = rows[9].residual;   // rows are 1-based in n
    const Real rend = rows[n_max - 1].residual;
    Real worst_rn = 0;
    for (unsigned n = 10; n <= n_max; ++n)
        worst_rn = std::max(worst_rn, rows[n - 1].residual_times_n);
    out.checks.push_back({"largen-decay q=" + big_str(q), rend < r10 / 5,
                          "residual(" + std::to_string(n_max) + ") = " + format_real(rend) +
                              ", residual(10) = " + format_real(r10)});
    out.checks.push_back({"largen-bounded q=" + big_str(q), worst_rn <= 100 * r10,
                          "max residual*n = " + format_real(worst_rn)});
    out.files["asym_q" + big_str(q) + ".csv"] = csv_asym(q, rows);
    return out;
}

SuiteResult verify_limits(unsigned n_max, std::uint64_t q_max) {
    SuiteResult out;
    std::vector<Bigint> qs;
    for (auto q : odd_prime_powers_upto(q_max)) qs.emplace_back(q);
    auto rows = iterated_limits_report(n_max, qs);

    bool decreasing = true;
    Real prev;
    bool have_prev = false;
    for (const auto& r : rows) {
        if (r.kind != "n") continue;
        if (have_prev && !(r.distance < prev)) decreasing = false;
        prev = r.distance;
        have_prev = true;
    }
    out.checks.push_back({"limits-n-decreasing nmax=" + std::to_string(n_max), decreasing,
                          "distances |sqrt(n) h_n - 1/sqrt(pi)| strictly decreasing"});

    // K_q = 1 + O(1/q): the scaled deviation stays inside a fixed window
    Real worst = 0;
    Bigint worst_q = 0, last_q = 0;
    Real last_scaled = 0;
    for (const Bigint& q : qs) {
        KqValue k = kq(q, kq_default_depth(q));
        Real scaled = abs(k.value - 1) * Real(q);
        if (scaled > worst) {
            worst = scaled;
            worst_q = q;
        }
        last_q = q;
        last_scaled = scaled;
    }
    bool bounded = worst <= 2;
    bool no_growth = qs.size() < 2 || worst_q != last_q;
    out.checks.push_back({"limits-q-bounded qmax=" + std::to_string(q_max), bounded,
                          "max |K_q - 1| * q = " + format_real(worst)});
    out.checks.push_back({"limits-q-no-growth qmax=" + std::to_string(q_max), no_growth,
                          "last |K_q - 1| * q = " + format_real(last_scaled)});
    out.files["limits.csv"] = csv_limits(rows);
    return out;
}

// ---------------------------------------------------------------------------
// CSV emission

std::string csv_count(const std::vector<CountReport>& reports) {
    std::ostringstream os;
    os << "q,n,method,B,f1,f2,f3,f4,f5\n";
    for (const auto& r : reports) {
        os << r.q.str() << ',' << r.n << ',' << r.method << ',' << r.value.str();
        if (r.f_part_sizes) {
            for (const auto& p : *r.f_part_sizes) os << ',' << p.str();
        } else {
            os << ",,,,,";
        }
        os << '\n';
    }
    return os.str();
}

std::string csv_pi(const PiTable& pi) {
    std::ostringstream os;
    os << "q,d,pi_plus,pi_minus\n";
    for (const auto& row : pi.rows)
        os << pi.q.str() << ',' << row.d << ',' << row.plus.str() << ',' << row.minus.str()
           << '\n';
    return os.str();
}

std::string csv_constant(const KqValue& k) {
    std::ostringstream os;
    os << "q,depth,value,tail_bound\n";
    os << k.q.str() << ',' << k.depth << ',' << format_real(k.value) << ','
       << format_real(k.tail_bound) << '\n';
    return os.str();
}

std::string csv_asym(const Bigint& q, const std::vector<AsymRow>& rows) {
    std::ostringstream os;
    os << "q,n,B,main,residual,residual_times_n\n";
    for (const auto& r : rows)
        os << q.str() << ',' << r.n << ',' << r.B.str() << ',' << format_real(r.main) << ','
           << format_real(r.residual) << ',' << format_real(r.residual_times_n) << '\n';
    return os.str();
}

std::string csv_largeq(unsigned n, const std::vector<LargeqRow>& rows) {
    std::ostringstream os;
    os << "n,q,B,main2,c_term,residual2,residual2_norm\n";
    for (const auto& r : rows)
        os << n << ',' << r.q.str() << ',' << r.B.str() << ',' << format_rational(r.main2)
           << ',' << format_rational(r.c_term) << ',' << format_rational(r.residual2) << ','
           << format_rational(r.residual2_norm) << '\n';
    return os.str();
}

std::string csv_limits(const std::vector<LimitRow>& rows) {
    std::ostringstream os;
    os << "kind,index,value,distance\n";
    for (const auto& r : rows)
        os << r.kind << ',' << r.index.str() << ',' << format_real(r.value) << ','
           << format_real(r.distance) << '\n';
    return os.str();
}

} // namespace normff
