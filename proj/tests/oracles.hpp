#pragma once

// Test-only reference implementations. Deliberately naive and independent
// of the library's product kernels and telescoping engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "telescope/laurent_poly.hpp"

namespace oracle {

using telescope::BigRational;
using telescope::Exponents;
using telescope::LaurentPoly;
using telescope::Term;

/// Schoolbook product through an ordered map.
inline LaurentPoly naive_multiply(const LaurentPoly& p, const LaurentPoly& r) {
    std::map<Exponents, BigRational> acc;
    for (const auto& a : p.terms())
        for (const auto& b : r.terms()) {
            Exponents e{};
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents[i] + b.exponents[i];
            acc[e] += a.coefficient * b.coefficient;
        }
    std::vector<Term> terms;
    for (auto& [e, c] : acc) terms.push_back(Term{e, c});
    return LaurentPoly::from_terms(std::move(terms));
}

/// Random polynomial: 0..max_terms terms, exponents in [lo, hi], coefficients
/// n/d with |n| <= max_num, 1 <= d <= max_den.
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms, int lo, int hi, std::int64_t max_num,
                               std::int64_t max_den) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> expo(lo, hi);
    std::uniform_int_distribution<std::int64_t> num(-max_num, max_num);
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    std::vector<Term> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e{expo(rng), expo(rng), expo(rng)};
        terms.push_back(Term{e, BigRational(num(rng), den(rng))});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

inline telescope::Assignment random_assignment(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-9, 9);
    std::uniform_int_distribution<std::int64_t> den(1, 7);
    telescope::Assignment a;
    for (auto v : telescope::kVariables) {
        BigRational value(0);
        while (value.is_zero()) value = BigRational(num(rng), den(rng));
        a[v] = value;
    }
    return a;
}

/// Derangements of n letters by enumerating permutations.
inline std::int64_t derangements_by_enumeration(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::int64_t count = 0;
    do {
        bool fixed = false;
        for (int i = 0; i < n; ++i) fixed = fixed || perm[static_cast<std::size_t>(i)] == i;
        if (!fixed) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Integer sequence by direct iteration of x_{n+2} = a x_{n+1} + b x_n.
inline std::vector<std::int64_t> iterate(std::int64_t a, std::int64_t b, std::int64_t x0, std::int64_t x1,
                                         int count) {
    std::vector<std::int64_t> xs{x0, x1};
    while (static_cast<int>(xs.size()) < count) xs.push_back(a * xs[xs.size() - 1] + b * xs[xs.size() - 2]);
    return xs;
}

}  // namespace oracle
