#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "telescope/rational.hpp"

namespace telescope {

/// The closed alphabet of indeterminates. `A` stands for the monomial q^a
/// and is independent of `Q`.
enum class Variable : std::uint8_t { T = 0, Q = 1, A = 2 };

inline constexpr std::size_t kVariableCount = 3;
inline constexpr std::array<Variable, kVariableCount> kVariables{Variable::T, Variable::Q,
                                                                 Variable::A};

/// Text name used in the canonical serialization: `t`, `q`, `A`.
char variable_symbol(Variable v) noexcept;

using Exponents = std::array<std::int32_t, kVariableCount>;

/// Canonical term order: total degree ascending, ties broken
/// lexicographically on (T, Q, A) ascending.
bool term_order_less(const Exponents& a, const Exponents& b) noexcept;

struct Term {
    Exponents exponents{};
    BigRational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

using Assignment = std::map<Variable, BigRational>;

/**
 * Sparse Laurent polynomial in T, Q, A with exact rational coefficients.
 *
 * Terms are stored sorted by `term_order_less` with no zero coefficients,
 * so structural equality is mathematical equality.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t c) : LaurentPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigRational& c);                              // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const BigRational& c, const Exponents& e);
    static LaurentPoly variable(Variable v, std::int32_t exponent = 1);
    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Coefficient of the monomial `e` (zero if absent).
    BigRational coefficient(const Exponents& e) const;

    /// Lowest and highest exponent of `v` over all terms (0, 0 for zero).
    std::int32_t min_degree(Variable v) const noexcept;
    std::int32_t max_degree(Variable v) const noexcept;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(LaurentPoly a);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Non-negative powers for any polynomial; negative powers for units.
    LaurentPoly pow(std::int64_t e) const;

private:
    std::vector<Term> terms_;
};

/// True iff p is a single nonzero term: exactly the invertible elements.
bool is_unit(const LaurentPoly& p) noexcept;
/// Inverse of a unit. Throws NotAUnit otherwise.
LaurentPoly unit_inverse(const LaurentPoly& unit);
/// Exact division by a unit. Throws NotAUnit if `unit` is not a single term.
LaurentPoly div_unit(const LaurentPoly& p, const LaurentPoly& unit);

/// Full evaluation. Throws MissingAssignment for an occurring variable
/// without a value, EvalDivisionByZero for a negative power of zero.
BigRational evaluate(const LaurentPoly& p, const Assignment& assignment);
/// Partial evaluation: assigned variables are replaced by their values,
/// the rest stay symbolic.
LaurentPoly substitute(const LaurentPoly& p, const Assignment& assignment);
/// The substitution v -> factor * v.
LaurentPoly rescale(const LaurentPoly& p, Variable v, const BigRational& factor);

/// q-rising factorial (a; q)_m = (1 - a)(1 - a q)...(1 - a q^{m-1}); 1 for m = 0.
LaurentPoly qrfac(const LaurentPoly& a, std::int64_t m);

/// Canonical text: terms in canonical order joined by " + ", each written
/// `c*t^i*A^k*q^j` with unit exponents, zero exponents and unit
/// coefficients omitted (a -1 coefficient is written as a leading '-').
std::string to_string(const LaurentPoly& p);
/// Inverse of `to_string`. Throws ParseError.
LaurentPoly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

namespace literals {
/// Shorthand for building polynomials in code: t(), q(), A().
inline LaurentPoly t(std::int32_t e = 1) { return LaurentPoly::variable(Variable::T, e); }
inline LaurentPoly q(std::int32_t e = 1) { return LaurentPoly::variable(Variable::Q, e); }
inline LaurentPoly A(std::int32_t e = 1) { return LaurentPoly::variable(Variable::A, e); }
}  // namespace literals

}  // namespace telescope
