#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "telescope/laurent_poly.hpp"

namespace telescope {

/**
 * A rational function kept as numerator / (product of denominator factors).
 *
 * Nothing is ever reduced to lowest terms; equality is decided by cross
 * multiplication. Every denominator factor is nonzero.
 */
class FactoredFraction {
public:
    FactoredFraction() = default;
    FactoredFraction(LaurentPoly numerator);  // NOLINT(google-explicit-constructor)
    FactoredFraction(std::int64_t c) : FactoredFraction(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
    /// Throws ZeroDenominatorFactor if any factor is zero.
    FactoredFraction(LaurentPoly numerator, std::vector<LaurentPoly> denominator_factors);

    const LaurentPoly& numerator() const noexcept { return numerator_; }
    std::span<const LaurentPoly> denominator_factors() const noexcept { return factors_; }
    /// Expanded product of the denominator factors.
    LaurentPoly denominator() const;

    /// Same value with every unit factor divided into the numerator and every
    /// remaining factor scaled so that its first canonical term is 1.
    FactoredFraction normalized() const;
    /// Every factor is a non-unit whose first canonical term is 1.
    bool is_normalized() const noexcept;

    FactoredFraction& operator+=(const FactoredFraction& o);

    friend FactoredFraction operator+(const FactoredFraction& a, const FactoredFraction& b);
    friend FactoredFraction operator-(const FactoredFraction& a, const FactoredFraction& b);
    friend FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b);
    friend FactoredFraction operator-(FactoredFraction a);

private:
    LaurentPoly numerator_;
    std::vector<LaurentPoly> factors_;
};

/// f.num * prod(g.den) == g.num * prod(f.den). Structurally equal factors
/// are cancelled first, which does not change the outcome.
bool frac_equal(const FactoredFraction& f, const FactoredFraction& g);

/// Exact value at a full assignment. Throws EvalDivisionByZero on a pole.
BigRational evaluate(const FactoredFraction& f, const Assignment& assignment);
/// Partial specialization of numerator and factors. Throws
/// EvalDivisionByZero if a factor specializes to zero.
FactoredFraction substitute(const FactoredFraction& f, const Assignment& assignment);
FactoredFraction rescale(const FactoredFraction& f, Variable v, const BigRational& factor);

/// `num` when there are no factors, otherwise `(num)/((f1)*(f2)...)`.
std::string to_string(const FactoredFraction& f);
std::ostream& operator<<(std::ostream& os, const FactoredFraction& f);

}  // namespace telescope
