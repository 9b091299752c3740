#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "telescope/factored_fraction.hpp"
#include "telescope/sequences.hpp"

namespace telescope {

/// A product of Laurent polynomials, kept unexpanded.
using Factors = std::vector<LaurentPoly>;
using FactorsFn = std::function<Factors(std::int64_t)>;
using TermFn = std::function<LaurentPoly(std::int64_t)>;

/**
 * The pair (u_k, v_k), k >= 1, of the telescoping lemma
 *
 *   sum_{k=1}^n w_k (u_1...u_{k-1}) / (v_1...v_k) = (u_1...u_n)/(v_1...v_n) - 1,
 *   w_k = u_k - v_k.
 *
 * u and v may be given in factored form so that the engine can cancel
 * common factors between numerator and denominator products. w is never
 * stored; it is recomputed from u and v.
 */
class TelescopingScheme {
public:
    TelescopingScheme(std::string name, TermFn u, TermFn v);
    static TelescopingScheme factored(std::string name, FactorsFn u, FactorsFn v);

    const std::string& name() const noexcept { return name_; }

    LaurentPoly u(std::int64_t k) const;
    LaurentPoly v(std::int64_t k) const;
    LaurentPoly w(std::int64_t k) const { return u(k) - v(k); }
    Factors u_factors(std::int64_t k) const { return u_(k); }
    Factors v_factors(std::int64_t k) const { return v_(k); }

private:
    TelescopingScheme(std::string name, FactorsFn u, FactorsFn v, int);

    std::string name_;
    FactorsFn u_;
    FactorsFn v_;
};

enum class Status { Pass, Fail };

struct Failure {
    std::int64_t n = 0;
    FactoredFraction lhs;
    FactoredFraction rhs;
};

/// Outcome of a sweep over n_min..n_max. `first_failure` is present
/// exactly when status is Fail.
struct VerificationReport {
    std::string name;
    std::string equation;  // equation label, or empty
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    Status status = Status::Pass;
    std::optional<Failure> first_failure;
    std::chrono::duration<double, std::milli> elapsed{0};

    bool passed() const noexcept { return status == Status::Pass; }
};

std::string_view to_string(Status s) noexcept;

/// Left side at n over the common denominator {v(1), ..., v(n)}:
/// numerator sum_k w_k (u_1...u_{k-1}) (v_{k+1}...v_n). Computed directly
/// from the definition. Throws ZeroDenominatorFactor(k) if v(k) = 0.
FactoredFraction euler_lhs(const TelescopingScheme& s, std::int64_t n);
/// (u_1...u_n - v_1...v_n) / {v(1), ..., v(n)}.
FactoredFraction euler_rhs(const TelescopingScheme& s, std::int64_t n);

/**
 * Sweeps n = 0..n_max comparing both sides of the lemma.
 *
 * When every v(k) is a unit the summands are plain Laurent polynomials
 * obtained by exact division; otherwise they are factored fractions whose
 * numerator and denominator products cancel factor by factor. Throws
 * ZeroDenominatorFactor tagged with k if some v(k) is zero.
 *
 * The overload taking `declared_w` uses it in place of u - v on the left.
 */
VerificationReport euler_verify(const TelescopingScheme& s, std::int64_t n_max);
VerificationReport euler_verify(const TelescopingScheme& s, std::int64_t n_max, const TermFn& declared_w);

/// The lemma with denominators cleared:
///   sum_k w_k (u_1...u_{k-1})(v_{k+1}...v_n) == u_1...u_n - v_1...v_n.
/// Pure polynomial arithmetic; zero v(k) are allowed.
VerificationReport euler_verify_cleared(const TelescopingScheme& s, std::int64_t n_max);
VerificationReport euler_verify_cleared(const TelescopingScheme& s, std::int64_t n_max,
                                        const TermFn& declared_w);

/// u(k) - v(k) == declared_w(k) for 1 <= k <= k_max.
bool scheme_w_consistency(const TelescopingScheme& s, const TermFn& declared_w, std::int64_t k_max);

/// Scheme for an arbitrary three-term recurrence giving the sum weighted
/// by t^{k-1} / (a_0...a_{k-1}): u_k = t x_{k+1}, v_k = a_{k-1} x_k.
TelescopingScheme power_weighted_scheme(const RecurrenceSpec& spec);
/// Scheme giving the alternating sum weighted by
/// (-1)^k t^{-k} (a_1...a_{k-1}) / (b_1...b_k): u_k = a_k x_{k+1}, v_k = -t b_k x_k.
TelescopingScheme alternating_scheme(const RecurrenceSpec& spec);

}  // namespace telescope
