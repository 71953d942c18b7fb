#include "normff/count.hpp"

#include <algorithm>
#include <thread>

namespace normff {

namespace {

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

// number of monic primes of degree n over F_q (T included)
Bigint necklace_count(const Bigint& q, unsigned n) {
    Bigint acc = 0;
    for (unsigned e = 1; e <= n; ++e) {
        if (n % e) continue;
        acc += moebius(n / e) * pow_big(q, e);
    }
    return acc / n;
}

} // namespace

PiTable pi_exact(const Bigint& q, unsigned d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    PiTable table;
    table.q = q;
    std::vector<Bigint> a(d_max + 1), b(d_max + 1);
    for (unsigned N = 1; N <= d_max; ++N) {
        Bigint s = necklace_count(q, N);
        if (N == 1) s -= 1; // T has (T/T) = 0 and belongs to neither class
        Bigint t;
        if (N == 1) {
            t = 0;
        } else {
            // sum over proper divisors of the character relation
            Bigint acc = 0;
            for (unsigned d = 1; d < N; ++d) {
                if (N % d) continue;
                Bigint term = a[d] + (((N / d) % 2 == 0) ? b[d] : -b[d]);
                acc += d * term;
            }
            t = -acc / N;
        }
        a[N] = (s + t) / 2;
        b[N] = (s - t) / 2;
        table.rows.push_back(PiRow{N, a[N], b[N]});
    }
    return table;
}

// ---------------------------------------------------------------------------
// Enumeration sieve

namespace {
constexpr unsigned kMaxDeg = 31;

inline std::uint32_t pack_ref(unsigned deg, std::size_t pos) {
    return std::uint32_t((deg << 27) | pos) + 1;
}
inline void unpack_ref(std::uint32_t ref, unsigned& deg, std::size_t& pos) {
    ref -= 1;
    deg = ref >> 27;
    pos = ref & ((1u << 27) - 1);
}
} // namespace

Enumeration::Enumeration(const Field& field, unsigned n_max, std::uint64_t budget)
    : f_(&field), n_max_(n_max) {
    if (n_max < 1 || n_max > kMaxDeg)
        throw std::invalid_argument("enumeration degree out of range");
    qpow_.assign(n_max + 1, 1);
    for (unsigned i = 1; i <= n_max; ++i) {
        if (qpow_[i - 1] > (std::uint64_t(1) << 33) / field.q())
            throw BudgetExceeded("enumeration size exceeds implementation bound");
        qpow_[i] = qpow_[i - 1] * field.q();
    }
    if (qpow_[n_max] > budget)
        throw BudgetExceeded("q^n = " + std::to_string(qpow_[n_max]) +
                             " exceeds the enumeration budget " + std::to_string(budget));

    const Field& F = *f_;
    const std::uint64_t q = F.q();
    divisor_.resize(n_max + 1);
    primes_.resize(n_max + 1);
    sign_.resize(n_max + 1);
    for (unsigned d = 1; d <= n_max; ++d) divisor_[d].assign(qpow_[d], 0);

    std::vector<std::uint32_t> pc(n_max + 1), gc(n_max + 1), prod(2 * n_max + 1);
    for (unsigned d = 1; d <= n_max; ++d) {
        // unmarked entries are exactly the primes of degree d
        for (std::uint64_t idx = 0; idx < qpow_[d]; ++idx) {
            if (divisor_[d][idx]) continue;
            primes_[d].push_back(std::uint32_t(idx));
            sign_[d].push_back(std::int8_t(F.chi(std::uint32_t(idx % q))));
        }
        if (d == n_max) break;
        // mark every multiple P*g, deg g >= 1, within range
        for (std::size_t pos = 0; pos < primes_[d].size(); ++pos) {
            std::uint64_t pidx = primes_[d][pos];
            for (unsigned i = 0; i < d; ++i) {
                pc[i] = std::uint32_t(pidx % q);
                pidx /= q;
            }
            pc[d] = 1;
            const std::uint32_t ref = pack_ref(d, pos);
            for (unsigned b = 1; b + d <= n_max; ++b) {
                std::fill(gc.begin(), gc.begin() + b, 0);
                gc[b] = 1;
                auto& level = divisor_[d + b];
                for (std::uint64_t g = 0; g < qpow_[b]; ++g) {
                    // prod = P * g
                    std::fill(prod.begin(), prod.begin() + d + b + 1, 0);
                    for (unsigned i = 0; i <= d; ++i) {
                        if (!pc[i]) continue;
                        for (unsigned j = 0; j <= b; ++j)
                            if (gc[j]) prod[i + j] = F.add(prod[i + j], F.mul(pc[i], gc[j]));
                    }
                    std::uint64_t idx = 0;
                    for (unsigned i = d + b; i-- > 0;) idx = idx * q + prod[i];
                    if (!level[idx]) level[idx] = ref;
                    // advance g
                    for (unsigned i = 0; i < b; ++i) {
                        if (++gc[i] < q) break;
                        gc[i] = 0;
                    }
                }
            }
        }
    }
}

unsigned Enumeration::factor_walk(std::vector<std::uint32_t>& coeffs, unsigned deg,
                                  std::array<Factor, 32>& out) const {
    const Field& F = *f_;
    const std::uint64_t q = F.q();
    unsigned count = 0;
    unsigned m = deg;
    std::vector<std::uint32_t> pc(n_max_ + 1), quot(n_max_ + 1), work(n_max_ + 1);
    while (m > 0) {
        std::uint64_t idx = 0;
        for (unsigned i = m; i-- > 0;) idx = idx * q + coeffs[i];
        std::uint32_t ref = divisor_[m][idx];
        if (!ref) {
            out[count++] = Factor{m, idx, 1, F.chi(coeffs[0])};
            return count;
        }
        unsigned a;
        std::size_t pos;
        unpack_ref(ref, a, pos);
        std::uint64_t pidx = primes_[a][pos];
        const int sign = sign_[a][pos];
        for (unsigned i = 0; i < a; ++i) {
            pc[i] = std::uint32_t(pidx % q);
            pidx /= q;
        }
        pc[a] = 1;
        // divide out P as many times as it goes
        unsigned mult = 0;
        while (m >= a) {
            // synthetic division of coeffs (monic, deg m) by pc (monic, deg a)
            std::copy(coeffs.begin(), coeffs.begin() + m, work.begin());
            work[m] = coeffs[m];
            bool exact = true;
            for (unsigned i = m + 1; i-- > a;) {
                std::uint32_t c = work[i];
                quot[i - a] = c;
                if (!c) continue;
                for (unsigned j = 0; j < a; ++j)
                    work[i - a + j] = F.sub(work[i - a + j], F.mul(c, pc[j]));
                work[i] = 0;
            }
            for (unsigned j = 0; j < a; ++j)
                if (work[j]) {
                    exact = false;
                    break;
                }
            if (!exact) break;
            m -= a;
            std::copy(quot.begin(), quot.begin() + m + 1, coeffs.begin());
            ++mult;
        }
        out[count++] = Factor{a, primes_[a][pos], mult, sign};
    }
    return count;
}

namespace {

// part index 1..5 for a norm polynomial of degree >= 0, given its factors
template <typename FactorRange>
int classify_parts(const FactorRange& factors) {
    unsigned t_mult = 0;
    unsigned minus_cnt = 0, minus_deg = 0, minus_mult = 0;
    unsigned plus_nonsimple = 0, plus_sq_deg = 0, plus_sq_mult = 0;
    for (const auto& fac : factors) {
        if (fac.sign == 0) {
            t_mult = fac.mult;
        } else if (fac.sign == -1) {
            ++minus_cnt;
            minus_deg = fac.deg;
            minus_mult = fac.mult;
        } else if (fac.mult != 1) {
            ++plus_nonsimple;
            plus_sq_deg = fac.deg;
            plus_sq_mult = fac.mult;
        }
    }
    if (minus_cnt == 0 && plus_nonsimple == 0) {
        if (t_mult == 0) return 1;
        if (t_mult == 1) return 2;
        return 5;
    }
    if (t_mult == 0 && minus_cnt == 1 && plus_nonsimple == 0 && minus_deg == 1 &&
        minus_mult == 2)
        return 3;
    if (t_mult == 0 && minus_cnt == 0 && plus_nonsimple == 1 && plus_sq_deg == 1 &&
        plus_sq_mult == 2)
        return 4;
    return 5;
}

struct SimpleFactor {
    unsigned deg;
    unsigned mult;
    int sign;
};

} // namespace

template <typename Fn>
void Enumeration::for_each_monic(unsigned n, unsigned threads, Fn&& shard_fn) const {
    const std::uint64_t total = qpow_[n];
    if (threads < 1) threads = 1;
    if (threads > total) threads = unsigned(total);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = total / threads * t + std::min<std::uint64_t>(t, total % threads);
        std::uint64_t hi = lo + total / threads + (t < total % threads ? 1 : 0);
        pool.emplace_back([this, n, t, lo, hi, &shard_fn]() { shard_fn(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

Bigint Enumeration::count_norms(unsigned n, unsigned threads) const {
    if (n == 0) return 1;
    if (n > n_max_) throw std::invalid_argument("degree beyond the sieve range");
    const std::uint64_t q = f_->q();
    std::vector<std::uint64_t> partial(std::max(threads, 1u), 0);
    for_each_monic(n, threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint32_t> coeffs(n_max_ + 1), cur(n_max_ + 1);
        std::uint64_t v = lo;
        for (unsigned i = 0; i < n; ++i) {
            cur[i] = std::uint32_t(v % q);
            v /= q;
        }
        cur[n] = 1;
        std::array<Factor, 32> fs;
        std::uint64_t local = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::copy(cur.begin(), cur.begin() + n + 1, coeffs.begin());
            unsigned cnt = factor_walk(coeffs, n, fs);
            bool norm = true;
            for (unsigned i = 0; i < cnt; ++i)
                if (fs[i].sign == -1 && fs[i].mult % 2) {
                    norm = false;
                    break;
                }
            if (norm) ++local;
            for (unsigned i = 0; i < n; ++i) {
                if (++cur[i] < q) break;
                cur[i] = 0;
            }
        }
        partial[t] = local;
    });
    Bigint total = 0;
    for (auto v : partial) total += v;
    return total;
}

std::array<Bigint, 5> Enumeration::count_parts(unsigned n, unsigned threads) const {
    if (n == 0) return {Bigint(1), Bigint(0), Bigint(0), Bigint(0), Bigint(0)};
    if (n > n_max_) throw std::invalid_argument("degree beyond the sieve range");
    const std::uint64_t q = f_->q();
    std::vector<std::array<std::uint64_t, 5>> partial(std::max(threads, 1u));
    for (auto& arr : partial) arr.fill(0);
    for_each_monic(n, threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint32_t> coeffs(n_max_ + 1), cur(n_max_ + 1);
        std::uint64_t v = lo;
        for (unsigned i = 0; i < n; ++i) {
            cur[i] = std::uint32_t(v % q);
            v /= q;
        }
        cur[n] = 1;
        std::array<Factor, 32> fs;
        std::array<std::uint64_t, 5> local{};
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::copy(cur.begin(), cur.begin() + n + 1, coeffs.begin());
            unsigned cnt = factor_walk(coeffs, n, fs);
            bool norm = true;
            for (unsigned i = 0; i < cnt; ++i)
                if (fs[i].sign == -1 && fs[i].mult % 2) {
                    norm = false;
                    break;
                }
            if (norm) {
                std::vector<Factor> view(fs.begin(), fs.begin() + cnt);
                ++local[classify_parts(view) - 1];
            }
            for (unsigned i = 0; i < n; ++i) {
                if (++cur[i] < q) break;
                cur[i] = 0;
            }
        }
        partial[t] = local;
    });
    std::array<Bigint, 5> total{};
    for (const auto& arr : partial)
        for (int i = 0; i < 5; ++i) total[i] += arr[i];
    return total;
}

PiRow Enumeration::pi(unsigned d) const {
    if (d < 1 || d > n_max_) throw std::invalid_argument("degree beyond the sieve range");
    PiRow row{d, 0, 0};
    for (auto s : sign_[d]) {
        if (s == 1)
            row.plus += 1;
        else if (s == -1)
            row.minus += 1;
    }
    return row;
}

PiRow pi_enum(const Field& field, unsigned d, std::uint64_t budget) {
    Enumeration e(field, d, budget);
    return e.pi(d);
}

CountReport brute_count(const Field& field, unsigned n, std::uint64_t seed, unsigned threads,
                        std::uint64_t budget) {
    (void)seed; // the sieve path is deterministic on its own
    CountReport rep{Bigint(field.q()), n, "brute", 0, std::nullopt};
    if (n == 0) {
        rep.value = 1;
        return rep;
    }
    Enumeration e(field, n, budget);
    rep.value = e.count_norms(n, threads);
    return rep;
}

CountReport count_parts(const Field& field, unsigned n, std::uint64_t seed, unsigned threads,
                        std::uint64_t budget) {
    (void)seed;
    CountReport rep{Bigint(field.q()), n, "parts", 0, std::nullopt};
    std::array<Bigint, 5> parts;
    if (n == 0) {
        parts = {Bigint(1), Bigint(0), Bigint(0), Bigint(0), Bigint(0)};
    } else {
        Enumeration e(field, n, budget);
        parts = e.count_parts(n, threads);
    }
    rep.value = parts[0] + parts[1] + parts[2] + parts[3] + parts[4];
    rep.f_part_sizes = parts;
    return rep;
}

std::optional<int> classify_F(const Poly& f, std::uint64_t seed) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("classify_F expects a monic polynomial");
    Factorization fac = factor(f, seed);
    if (!is_norm(fac)) return std::nullopt;
    std::vector<SimpleFactor> fs;
    for (const auto& [prime, mult] : fac.factors)
        fs.push_back(SimpleFactor{unsigned(prime.degree()), mult,
                                  f.field().chi(prime.coeff(0))});
    return classify_parts(fs);
}

// ---------------------------------------------------------------------------
// Partitions and Ewens constants

namespace {
void partition_rec(unsigned j, unsigned rem, Partition& cur, std::vector<Partition>& out) {
    const unsigned n = unsigned(cur.size());
    if (j > n) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    for (unsigned v = 0; v * j <= rem; ++v) {
        cur[j - 1] = v;
        partition_rec(j + 1, rem - v * j, cur, out);
    }
    cur[j - 1] = 0;
}
} // namespace

std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    Partition cur(n, 0);
    if (n == 0) {
        out.push_back(cur);
        return out;
    }
    partition_rec(1, n, cur, out);
    return out;
}

Rational ewens_h(unsigned n) {
    Rational h = 0;
    for (const auto& lam : partitions(n)) {
        Rational term = 1;
        for (unsigned j = 1; j <= n; ++j) {
            unsigned lj = lam[j - 1];
            if (!lj) continue;
            Bigint fact = 1;
            for (unsigned i = 2; i <= lj; ++i) fact *= i;
            term /= Rational(fact * pow_big(Bigint(2 * j), lj));
        }
        h += term;
    }
    return h;
}

Rational coeff_c(unsigned n) {
    if (n < 2) throw std::invalid_argument("c_n is defined for n >= 2");
    return Rational(1, 2) * ewens_h(n - 1) + Rational(1, 4) * ewens_h(n - 2);
}

Bigint f1_partition_count(const PiTable& pi, unsigned n) {
    if (n == 0) return 1;
    Bigint total = 0;
    for (const auto& lam : partitions(n)) {
        Bigint term = 1;
        for (unsigned j = 1; j <= n && term != 0; ++j) {
            unsigned lj = lam[j - 1];
            if (!lj) continue;
            term *= binomial(pi.at(j).plus, lj);
        }
        total += term;
    }
    return total;
}

PowerSeries norm_count_series(const PiTable& pi, unsigned n_max) {
    PowerSeries s = PowerSeries::geometric(n_max, 1); // the factor for T
    for (unsigned d = 1; d <= n_max; ++d) {
        const PiRow& row = pi.at(d);
        if (row.plus != 0) s = s * PowerSeries::binomial_inverse(n_max, d, row.plus);
        if (2 * d <= n_max && row.minus != 0)
            s = s * PowerSeries::binomial_inverse(n_max, 2 * d, row.minus);
    }
    return s;
}

std::vector<CountReport> series_count(const Bigint& q, unsigned n_max) {
    std::vector<CountReport> out;
    PowerSeries s =
        n_max == 0 ? PowerSeries::one(0) : norm_count_series(pi_exact(q, n_max), n_max);
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back(CountReport{q, n, "series", s.coeff(n), std::nullopt});
    return out;
}

} // namespace normff
