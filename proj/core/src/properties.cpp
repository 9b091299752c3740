#include "telescope/properties.hpp"

#include <chrono>
#include <memory>
#include <vector>

#include "telescope/catalog.hpp"

namespace telescope {

namespace {

using Clock = std::chrono::steady_clock;

BigRational small_coefficient(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-3, 3);
    std::uniform_int_distribution<std::int64_t> den(1, 2);
    BigRational c(0);
    while (c.is_zero()) c = BigRational(num(rng), den(rng));
    return c;
}

Exponents small_exponents(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int32_t> e(-2, 2);
    return Exponents{e(rng), e(rng), e(rng)};
}

LaurentPoly random_monomial(std::mt19937_64& rng) {
    return LaurentPoly::monomial(small_coefficient(rng), small_exponents(rng));
}

LaurentPoly random_small_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 3);
    LaurentPoly p;
    while (p.is_zero()) {
        const int n = count(rng);
        for (int i = 0; i < n; ++i) p += random_monomial(rng);
    }
    return p;
}

TermFn table_fn(std::vector<LaurentPoly> values) {
    auto shared = std::make_shared<const std::vector<LaurentPoly>>(std::move(values));
    return [shared](std::int64_t k) { return shared->at(static_cast<std::size_t>(k)); };
}

void fail_with(VerificationReport& summary, const VerificationReport& r) {
    summary.status = Status::Fail;
    summary.first_failure = r.first_failure;
    if (!summary.first_failure) summary.first_failure = Failure{};
}

}  // namespace

TelescopingScheme random_unit_scheme(std::mt19937_64& rng, std::int64_t n_max) {
    std::vector<LaurentPoly> u(static_cast<std::size_t>(n_max) + 2);
    std::vector<LaurentPoly> v(u.size());
    for (std::size_t k = 1; k < u.size(); ++k) {
        u[k] = random_small_poly(rng);
        v[k] = random_monomial(rng);
    }
    return TelescopingScheme("random_unit_scheme", table_fn(std::move(u)), table_fn(std::move(v)));
}

RecurrenceSpec random_unit_recurrence(std::mt19937_64& rng, std::int64_t n_max) {
    const auto size = static_cast<std::size_t>(n_max) + 4;
    while (true) {
        std::vector<LaurentPoly> a(size);
        std::vector<LaurentPoly> b(size);
        for (std::size_t n = 0; n < size; ++n) {
            a[n] = random_monomial(rng);
            b[n] = random_monomial(rng);
        }
        std::bernoulli_distribution zero_start(0.25);
        RecurrenceSpec spec{"random_unit_recurrence", table_fn(std::move(a)), table_fn(std::move(b)),
                            zero_start(rng) ? LaurentPoly() : random_small_poly(rng), random_small_poly(rng)};
        SequenceEngine x(spec);
        bool nonzero = true;
        for (std::int64_t k = 1; k <= n_max + 2 && nonzero; ++k) nonzero = !x.term(k).is_zero();
        if (nonzero) return spec;
    }
}

VerificationReport property_scheme_modes(std::uint64_t seed, int count, std::int64_t n_max) {
    const auto started = Clock::now();
    VerificationReport summary;
    summary.name = "property:scheme_modes(seed=" + std::to_string(seed) + ")";
    summary.n_max = n_max;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> index(1, n_max);
    for (int i = 0; i < count && summary.passed(); ++i) {
        const auto s = random_unit_scheme(rng, n_max);
        const auto divided = euler_verify(s, n_max);
        const auto cleared = euler_verify_cleared(s, n_max);
        if (!divided.passed()) fail_with(summary, divided);
        else if (!cleared.passed()) fail_with(summary, cleared);
        if (!summary.passed()) break;

        const std::int64_t j = index(rng);
        const LaurentPoly delta = random_monomial(rng);
        const TermFn mutated = [&s, j, delta](std::int64_t k) { return k == j ? s.w(k) + delta : s.w(k); };
        for (const auto& r : {euler_verify(s, n_max, mutated), euler_verify_cleared(s, n_max, mutated)}) {
            if (r.passed() || r.first_failure->n != j) {
                VerificationReport wrong = r;
                if (wrong.passed()) wrong.first_failure = Failure{j, FactoredFraction(), FactoredFraction()};
                fail_with(summary, wrong);
                break;
            }
        }
    }
    summary.elapsed = Clock::now() - started;
    return summary;
}

VerificationReport property_recurrence_schemes(std::uint64_t seed, int count, std::int64_t n_max) {
    const auto started = Clock::now();
    VerificationReport summary;
    summary.name = "property:recurrence_schemes(seed=" + std::to_string(seed) + ")";
    summary.n_max = n_max;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count && summary.passed(); ++i) {
        const auto spec = random_unit_recurrence(rng, n_max);
        for (const auto& r : {euler_verify(power_weighted_scheme(spec), n_max),
                              euler_verify(alternating_scheme(spec), n_max),
                              verify_identity(power_weighted_identity(spec, spec.name, 8), n_max),
                              verify_identity(alternating_identity(spec, spec.name, 9), n_max)}) {
            if (!r.passed()) {
                fail_with(summary, r);
                break;
            }
        }
    }
    summary.elapsed = Clock::now() - started;
    return summary;
}

}  // namespace telescope
