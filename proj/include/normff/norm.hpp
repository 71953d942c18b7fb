#pragma once

#include <optional>

#include "normff/poly.hpp"

namespace normff {

// A constructive representation f = A^2 + T*B^2 (both in the T-ring).
// Not unique; the library only promises a valid, deterministic witness
// for a fixed (f, seed).
struct NormWitness {
    Poly A, B;
};

// f(T) -> f(-S^2); the image of the embedding F_q[T] in F_q[S].
Poly substitute_S(const Poly& f);

// The nontrivial automorphism S -> -S (odd coefficients negated).
Poly conj(const Poly& h);

// N(h) = h(S) * h(-S), re-expressed in T via S^2 = -T.
Poly norm_map(const Poly& h);

// b_q(f) for monic f: true iff every prime Q with (Q/T) = -1 divides f with
// even multiplicity.
bool is_norm(const Poly& f, std::uint64_t seed = 0);

// Same predicate from a precomputed factorization of a monic polynomial.
bool is_norm(const Factorization& fac);

// Witness construction; absent exactly when is_norm(f) is false.
std::optional<NormWitness> represent(const Poly& f, std::uint64_t seed = 0);

} // namespace normff
