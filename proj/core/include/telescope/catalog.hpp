#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "telescope/euler.hpp"
#include "telescope/factored_fraction.hpp"
#include "telescope/sequences.hpp"

namespace telescope {

using FractionFn = std::function<FactoredFraction(std::int64_t)>;

/**
 * A named identity
 *
 *   lead_constant + sum_{k=k_start}^{n} summand(k) = rhs(n),   n = 0, 1, 2, ...
 *
 * The summand and right side capture their own sequence engines, so an
 * instance is single-owner state; fetch a fresh one per task.
 */
struct IdentityInstance {
    std::string name;
    int equation = 0;
    std::int64_t k_start = 0;
    FactoredFraction lead_constant;
    FractionFn summand;
    FractionFn rhs;
    std::string constraints;

    /// Left side at n, summed directly.
    FactoredFraction lhs(std::int64_t n) const;
    /// Left sides for n = 0..n_max, summed incrementally.
    std::vector<FactoredFraction> lhs_sweep(std::int64_t n_max) const;
};

/// Stable identity names in catalog order.
std::span<const std::string_view> catalog_names() noexcept;
/// All 21 instances in catalog order, each with fresh engines.
std::vector<IdentityInstance> catalog_list();
/// Throws UnknownIdentity.
IdentityInstance catalog_get(std::string_view name);

/// Sweeps n = 0..n_max. Report name is the identity name, equation "(N)".
VerificationReport verify_identity(const IdentityInstance& identity, std::int64_t n_max);
VerificationReport verify_identity(std::string_view name, std::int64_t n_max);

/// Lucas numbers with the catalog's convention L_{-1} = 0.
LaurentPoly catalog_lucas(std::int64_t k);

/// The recurrence behind the two generic catalog entries:
/// a(n) = 1 + (n+1) q, b(n) = (n+2) A, x0 = 1, x1 = 1 + A.
RecurrenceSpec generic_recurrence();

/// sum_{k=1}^n t^{k-1}/(a_0...a_{k-1}) (b_{k-1}x_{k-1} + (t-1)x_{k+1})/x_1
///   = t^n/(a_0...a_{n-1}) x_{n+1}/x_1 - 1
IdentityInstance power_weighted_identity(const RecurrenceSpec& spec, std::string name, int equation);
/// sum_{k=1}^n (-1)^k/t^k (a_1...a_{k-1})/(b_1...b_k) (x_{k+2} + (t-1)b_k x_k)/x_1
///   = (-1)^n/t^n (a_1...a_n)/(b_1...b_n) x_{n+1}/x_1 - 1
IdentityInstance alternating_identity(const RecurrenceSpec& spec, std::string name, int equation);

/// Shifted derangement identities over an arbitrary accessor D(n), so the
/// same layout can be fed either the recurrence or d_{n+1}.
using DerangementFn = std::function<LaurentPoly(std::int64_t)>;
IdentityInstance derangement_power_identity(DerangementFn shifted);
IdentityInstance derangement_alternating_identity(DerangementFn shifted);

/// (-1)^k t^{-k} A^{-k} q^{-k(k+1)/2}: the weight of the alternating
/// q-Fibonacci identity.
LaurentPoly qfib_alternating_weight(std::int64_t k);

/// u_k = (1 - t A q^{k-1}) F_{k+1}, v_k = F_k over q-Fibonacci numbers.
TelescopingScheme q_pochhammer_scheme();
/// u_k = F_{k+1}, v_k = -A q^k (1 - t A^{-1} q^{-k}) F_k.
TelescopingScheme q_pochhammer_alternating_scheme();

enum class SpecializationMode { Termwise, Value };

/// `base` specialized at `assignment` equals `scale` times `target`:
/// term by term (Termwise) or only in partial sums (Value).
struct SpecializationCase {
    std::string base;
    Assignment assignment;
    std::string target;
    SpecializationMode mode = SpecializationMode::Termwise;
    BigRational scale{1};
};

std::vector<SpecializationCase> specialization_cases();
/// Throws UnknownIdentity, EvalDivisionByZero on a pole.
VerificationReport verify_specialization(const SpecializationCase& c, std::int64_t n_max);

/// Both t-generalizations evaluated at each sampled t hold for n <= n_max.
/// Throws EvalDivisionByZero if a sample is 0.
VerificationReport verify_generalization_equivalence(std::int64_t n_max,
                                                     std::span<const BigRational> sample_ts);

/// The generic identities with a = b = 1, normalized, equal the two
/// t-generalizations side by side; with the Pell recurrence and t -> 2t
/// they equal the Pell analogues. One report per generic identity.
std::vector<VerificationReport> reduction_checks(std::int64_t n_max);

/// JSON array describing every identity with summands rendered at
/// k = k_start..3 and the right side at n = 3.
std::string catalog_json();

}  // namespace telescope
