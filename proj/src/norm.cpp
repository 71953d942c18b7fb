#include "normff/norm.hpp"

#include <stdexcept>

namespace normff {

Poly substitute_S(const Poly& f) {
    if (f.ring() != Ring::T) throw std::invalid_argument("substitute_S expects a T-ring polynomial");
    const Field& F = f.field();
    if (f.is_zero()) return Poly::zero(F, Ring::S);
    std::vector<std::uint32_t> c(2 * f.degree() + 1, 0);
    for (unsigned i = 0; i <= unsigned(f.degree()); ++i) {
        std::uint32_t v = f.coeff(i);
        // (-S^2)^i = (-1)^i S^{2i}
        c[2 * i] = (i % 2 == 0) ? v : F.neg(v);
    }
    return Poly(F, std::move(c), Ring::S);
}

Poly conj(const Poly& h) {
    if (h.ring() != Ring::S) throw std::invalid_argument("conj expects an S-ring polynomial");
    const Field& F = h.field();
    std::vector<std::uint32_t> c(h.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = F.neg(c[i]);
    return Poly(F, std::move(c), Ring::S);
}

Poly norm_map(const Poly& h) {
    if (h.ring() != Ring::S) throw std::invalid_argument("norm_map expects an S-ring polynomial");
    const Field& F = h.field();
    Poly prod = h * conj(h);
    if (prod.is_zero()) return Poly::zero(F, Ring::T);
    std::vector<std::uint32_t> c(prod.degree() / 2 + 1, 0);
    for (unsigned i = 0; i <= unsigned(prod.degree()); ++i) {
        std::uint32_t v = prod.coeff(i);
        if (i % 2 == 1) {
            if (v != 0) throw std::logic_error("norm has an odd S-coefficient");
            continue;
        }
        // S^{2j} = (-T)^j
        unsigned j = i / 2;
        c[j] = (j % 2 == 0) ? v : F.neg(v);
    }
    return Poly(F, std::move(c), Ring::T);
}

bool is_norm(const Factorization& fac) {
    for (const auto& [prime, mult] : fac.factors) {
        // (Q/T) = chi(Q(0))
        if (prime.field().chi(prime.coeff(0)) == -1 && mult % 2 != 0) return false;
    }
    return true;
}

bool is_norm(const Poly& f, std::uint64_t seed) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("is_norm expects a monic polynomial");
    if (f.ring() != Ring::T) throw std::invalid_argument("is_norm expects a T-ring polynomial");
    return is_norm(factor(f, seed));
}

std::optional<NormWitness> represent(const Poly& f, std::uint64_t seed) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("represent expects a monic polynomial");
    if (f.ring() != Ring::T) throw std::invalid_argument("represent expects a T-ring polynomial");
    const Field& F = f.field();

    Factorization fac = factor(f, seed);
    Poly h = Poly::one(F, Ring::S);
    for (const auto& [prime, mult] : fac.factors) {
        const int sign = F.chi(prime.coeff(0));
        if (sign == 0) {
            // prime == T contributes S per multiplicity
            for (unsigned i = 0; i < mult; ++i) h = h * Poly::var(F, Ring::S);
        } else if (sign == 1) {
            // split prime: pick the conjugate S-factor with the smaller
            // canonical encoding
            Factorization sf = factor(substitute_S(prime), seed);
            if (sf.factors.size() != 2 || sf.factors[0].second != 1 || sf.factors[1].second != 1)
                throw std::logic_error("split prime did not yield two S-factors");
            const Poly& pick = sf.factors[0].first < sf.factors[1].first ? sf.factors[0].first
                                                                         : sf.factors[1].first;
            for (unsigned i = 0; i < mult; ++i) h = h * pick;
        } else {
            if (mult % 2 != 0) return std::nullopt;
            Poly qs = substitute_S(prime);
            for (unsigned i = 0; i < mult / 2; ++i) h = h * qs;
        }
    }

    // one scalar correction at the end: N(c*h) = c^2 N(h)
    Poly n = norm_map(h);
    std::uint32_t c0 = n.lc();
    auto root = F.sqrt(F.inv(c0));
    if (!root) throw std::logic_error("norm normalization scalar is not a square");
    h = h * *root;

    std::vector<std::uint32_t> ac, bc;
    for (unsigned i = 0; std::size_t(i) < h.coeffs().size(); ++i) {
        std::uint32_t v = h.coeff(i);
        unsigned j = i / 2;
        std::uint32_t signed_v = (j % 2 == 0) ? v : F.neg(v);
        if (i % 2 == 0) {
            ac.resize(std::max<std::size_t>(ac.size(), j + 1), 0);
            ac[j] = signed_v;
        } else {
            bc.resize(std::max<std::size_t>(bc.size(), j + 1), 0);
            bc[j] = signed_v;
        }
    }
    NormWitness w{Poly(F, std::move(ac), Ring::T), Poly(F, std::move(bc), Ring::T)};
    return w;
}

} // namespace normff
