#include "normff/series.hpp"

namespace normff {

PowerSeries PowerSeries::geometric(unsigned trunc, const Bigint& ratio) {
    PowerSeries s(trunc);
    s.c_[0] = 1;
    for (unsigned i = 1; i <= trunc; ++i) s.c_[i] = s.c_[i - 1] * ratio;
    return s;
}

PowerSeries PowerSeries::binomial_inverse(unsigned trunc, unsigned d, const Bigint& m) {
    // sum_k binom(m-1+k, k) u^{dk}
    PowerSeries s(trunc);
    Bigint b = 1;
    s.c_[0] = 1;
    for (unsigned k = 1; std::uint64_t(k) * d <= trunc; ++k) {
        b = b * (m - 1 + k) / k; // exact division
        s.c_[k * d] = b;
    }
    return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    if (a.trunc_ != b.trunc_) throw std::invalid_argument("truncation mismatch");
    PowerSeries r(a.trunc_);
    for (unsigned i = 0; i <= a.trunc_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    if (a.trunc_ != b.trunc_) throw std::invalid_argument("truncation mismatch");
    PowerSeries r(a.trunc_);
    for (unsigned i = 0; i <= a.trunc_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    if (a.trunc_ != b.trunc_) throw std::invalid_argument("truncation mismatch");
    PowerSeries r(a.trunc_);
    for (unsigned i = 0; i <= a.trunc_; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; i + j <= a.trunc_; ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::inverse() const {
    if (c_[0] != 1 && c_[0] != -1)
        throw std::domain_error("series inversion needs constant term +-1");
    PowerSeries r(trunc_);
    r.c_[0] = c_[0]; // 1/c0 == c0 for +-1
    for (unsigned n = 1; n <= trunc_; ++n) {
        Bigint acc = 0;
        for (unsigned i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
        r.c_[n] = -acc * c_[0];
    }
    return r;
}

} // namespace normff
