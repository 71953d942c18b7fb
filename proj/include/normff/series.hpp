#pragma once

#include <vector>

#include "normff/numeric.hpp"

namespace normff {

// Degree-truncated power series with exact integer coefficients.
class PowerSeries {
public:
    explicit PowerSeries(unsigned trunc) : trunc_(trunc), c_(trunc + 1) {}
    PowerSeries(unsigned trunc, std::vector<Bigint> coeffs) : trunc_(trunc), c_(std::move(coeffs)) {
        c_.resize(trunc + 1);
    }

    static PowerSeries one(unsigned trunc) {
        PowerSeries s(trunc);
        s.c_[0] = 1;
        return s;
    }
    // (1 - ratio*u)^{-1}
    static PowerSeries geometric(unsigned trunc, const Bigint& ratio);
    // (1 - u^d)^{-m}, m >= 0 arbitrarily large
    static PowerSeries binomial_inverse(unsigned trunc, unsigned d, const Bigint& m);

    unsigned trunc() const { return trunc_; }
    const Bigint& coeff(unsigned i) const { return c_.at(i); }
    Bigint& coeff(unsigned i) { return c_.at(i); }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }

    // requires c_0 invertible over Z, i.e. c_0 = +-1
    PowerSeries inverse() const;

private:
    unsigned trunc_;
    std::vector<Bigint> c_;
};

} // namespace normff
