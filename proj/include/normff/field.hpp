#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "normff/numeric.hpp"

namespace normff {

// The coefficient field F_q, q = p^k an odd prime power, q <= 2^32.
//
// Elements are handled as canonical integer codes: for a = sum a_i x^i with
// digits a_i in [0,p), the code is sum a_i p^i.  For prime fields the code is
// simply the residue.  Extension fields are F_p[x]/(m(x)) with m the
// lexicographically least monic irreducible of degree k over F_p, coefficients
// compared from the constant term upward, so a given (p,k) always yields the
// same field.
//
// Fields are interned: make() returns a reference with program lifetime, so
// polynomials may hold plain pointers.  All state is immutable after
// construction.
class Field {
public:
    static const Field& make(std::uint64_t p, unsigned k);
    static const Field& make(std::uint64_t p, unsigned k, const std::vector<std::uint32_t>& modulus);
    // q must be an odd prime power; the deterministic modulus is used.
    static const Field& of_order(std::uint64_t q);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }
    // Monic modulus of degree k over F_p, coefficient i at index i; empty for k == 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return add_table_.empty() ? add_slow(a, b) : add_table_[std::size_t(a) * q_ + b];
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return mul_table_.empty() ? mul_slow(a, b) : mul_table_[std::size_t(a) * q_ + b];
    }
    std::uint32_t neg(std::uint32_t a) const {
        return neg_table_.empty() ? neg_slow(a) : neg_table_[a];
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t inv(std::uint32_t a) const; // throws on a == 0
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Quadratic character: 0 for a == 0, +1 for nonzero squares, -1 otherwise.
    int chi(std::uint32_t a) const {
        return chi_table_.empty() ? chi_slow(a) : chi_table_[a];
    }

    // Square root when it exists (Tonelli-Shanks on the group of order q-1);
    // of the two roots, the one with the smaller canonical code is returned.
    std::optional<std::uint32_t> sqrt(std::uint32_t a) const;

    // Maps a (possibly negative) integer into the prime subfield.
    std::uint32_t from_int(long long v) const;

    bool same(const Field& o) const { return this == &o; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_slow(std::uint32_t a) const;
    int chi_slow(std::uint32_t a) const;

    std::vector<std::uint32_t> decode(std::uint32_t a) const; // digits base p, length k
    std::uint32_t encode(const std::vector<std::uint32_t>& digits) const;

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;

    // Lookup tables, built when q is small; empty otherwise.
    std::vector<std::uint32_t> add_table_, mul_table_, neg_table_, inv_table_;
    std::vector<std::int8_t> chi_table_;

    friend class FieldRegistry;
};

// Checked element wrapper; arithmetic between different fields throws.
class FieldElement {
public:
    FieldElement(const Field& f, std::uint32_t code) : f_(&f), code_(code) {
        if (code >= f.q()) throw std::invalid_argument("element code out of range");
    }
    const Field& field() const { return *f_; }
    std::uint32_t code() const { return code_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return FieldElement(a.owner_check(b), a.f_->add(a.code_, b.code_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return FieldElement(a.owner_check(b), a.f_->sub(a.code_, b.code_));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        return FieldElement(a.owner_check(b), a.f_->mul(a.code_, b.code_));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return FieldElement(a.owner_check(b), a.f_->div(a.code_, b.code_));
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.f_ == b.f_ && a.code_ == b.code_;
    }
    std::optional<FieldElement> sqrt() const {
        auto r = f_->sqrt(code_);
        if (!r) return std::nullopt;
        return FieldElement(*f_, *r);
    }

private:
    const Field& owner_check(const FieldElement& o) const {
        if (f_ != o.f_) throw std::invalid_argument("elements of different fields");
        return *f_;
    }
    const Field* f_;
    std::uint32_t code_;
};

} // namespace normff
