#pragma once

#include <cstdint>
#include <random>

#include "telescope/euler.hpp"
#include "telescope/sequences.hpp"

namespace telescope {

/// Scheme with u_k a random 1-3 term polynomial (never zero) and v_k a
/// random nonzero monomial, for k = 1..n_max + 1. Small integer and
/// half-integer coefficients, exponents in [-2, 2].
TelescopingScheme random_unit_scheme(std::mt19937_64& rng, std::int64_t n_max);

/// Three-term recurrence whose a(n), b(n) are random nonzero monomials and
/// whose x_0, x_1 are random small polynomials with x_1 != 0. Redrawn until
/// x_1..x_{n_max+2} are all nonzero.
RecurrenceSpec random_unit_recurrence(std::mt19937_64& rng, std::int64_t n_max);

/// `count` random unit schemes: the divided and cleared engines both pass up
/// to n_max, and a perturbation of w at one random index is reported by
/// both at exactly that index.
VerificationReport property_scheme_modes(std::uint64_t seed, int count = 200, std::int64_t n_max = 12);

/// `count` random unit recurrences: both recurrence schemes and both
/// recurrence identities pass up to n_max.
VerificationReport property_recurrence_schemes(std::uint64_t seed, int count = 100, std::int64_t n_max = 20);

}  // namespace telescope
