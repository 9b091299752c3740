#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "telescope/catalog.hpp"
#include "telescope/errors.hpp"
#include "telescope/euler.hpp"
#include "telescope/properties.hpp"

using namespace telescope;
using namespace telescope::literals;

namespace {

// u_k = k + 1, v_k = k: every summand is 1.
TelescopingScheme harmonic() {
    return TelescopingScheme("harmonic", [](std::int64_t k) { return LaurentPoly(k + 1); },
                             [](std::int64_t k) { return LaurentPoly(k); });
}

}  // namespace

TEST_CASE("both sides for a hand-checked scheme") {
    const auto s = harmonic();
    // lhs(3) = 1 + 1 + 1 = 4/1 - 1.
    CHECK(evaluate(euler_lhs(s, 3), {}) == BigRational(3));
    CHECK(evaluate(euler_rhs(s, 3), {}) == BigRational(3));
    CHECK(evaluate(euler_lhs(s, 0), {}) == BigRational(0));
    CHECK(euler_verify(s, 30).passed());
    CHECK(euler_verify_cleared(s, 30).passed());
}

TEST_CASE("symbolic scheme sides") {
    // u_k = t, v_k = 1: sum_k (t - 1) t^{k-1} = t^n - 1.
    const TelescopingScheme s("geometric", [](std::int64_t) { return t(); }, [](std::int64_t) { return LaurentPoly(1); });
    CHECK(frac_equal(euler_lhs(s, 4), FactoredFraction(t(4) - 1)));
    CHECK(frac_equal(euler_rhs(s, 4), FactoredFraction(t(4) - 1)));
    const auto r = euler_verify(s, 25);
    CHECK(r.passed());
    CHECK(r.n_max == 25);
    CHECK_FALSE(r.first_failure);
}

TEST_CASE("zero denominator factors are reported with their index") {
    const TelescopingScheme s("hole", [](std::int64_t) { return t(); },
                              [](std::int64_t k) { return k == 4 ? LaurentPoly() : LaurentPoly(1); });
    try {
        euler_verify(s, 10);
        FAIL("expected ZeroDenominatorFactor");
    } catch (const ZeroDenominatorFactor& e) {
        REQUIRE(e.index());
        CHECK(*e.index() == 4);
    }
    CHECK_THROWS_AS(euler_lhs(s, 5), ZeroDenominatorFactor);
    CHECK_THROWS_AS(euler_rhs(s, 5), ZeroDenominatorFactor);
    CHECK_NOTHROW(euler_verify(s, 3));
    // The cleared form has no denominators.
    CHECK(euler_verify_cleared(s, 10).passed());
}

TEST_CASE("direct sides agree with the incremental engines on random unit schemes") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 40; ++i) {
        const auto s = random_unit_scheme(rng, 8);
        for (std::int64_t n = 0; n <= 8; ++n) CHECK(frac_equal(euler_lhs(s, n), euler_rhs(s, n)));
        CHECK(euler_verify(s, 8).passed());
        CHECK(euler_verify_cleared(s, 8).passed());
    }
}

TEST_CASE("telescoping certificate on non-unit schemes") {
    // Summand k equals P_k - P_{k-1} with P_k = u_1...u_k / v_1...v_k.
    std::mt19937_64 rng(321);
    for (int i = 0; i < 30; ++i) {
        std::vector<LaurentPoly> u{1}, v{1};
        for (int k = 1; k <= 6; ++k) {
            LaurentPoly a, b;
            while (a.is_zero()) a = oracle::random_poly(rng, 3, -2, 2, 4, 2);
            while (b.is_zero()) b = oracle::random_poly(rng, 3, -2, 2, 4, 2);
            u.push_back(a);
            v.push_back(b);
        }
        const TelescopingScheme s("random", [u](std::int64_t k) { return u.at(static_cast<std::size_t>(k)); },
                                  [v](std::int64_t k) { return v.at(static_cast<std::size_t>(k)); });
        std::vector<LaurentPoly> den;
        LaurentPoly pu(1);
        FactoredFraction previous(1);
        for (std::size_t k = 1; k <= 6; ++k) {
            std::vector<LaurentPoly> den_k = den;
            den_k.push_back(v[k]);
            CHECK(s.w(static_cast<std::int64_t>(k)) == u[k] - v[k]);
            const FactoredFraction summand(s.w(static_cast<std::int64_t>(k)) * pu, den_k);
            pu *= u[k];
            const FactoredFraction current(pu, den_k);
            CHECK(frac_equal(summand, current - previous));
            previous = current;
            den = den_k;
        }
        CHECK(euler_verify(s, 6).passed());
        CHECK(euler_verify_cleared(s, 6).passed());
    }
}

TEST_CASE("divided and cleared engines agree, and mutations are caught where they happen") {
    const auto r = property_scheme_modes(20240601, 200, 12);
    CHECK(r.passed());
    CHECK(r.n_max == 12);
}

TEST_CASE("mutating w at one index fails exactly there") {
    const auto s = harmonic();
    for (std::int64_t j = 1; j <= 10; ++j) {
        CAPTURE(j);
        const TermFn mutated = [&s, j](std::int64_t k) { return k == j ? s.w(k) + t() : s.w(k); };
        const auto divided = euler_verify(s, 10, mutated);
        const auto cleared = euler_verify_cleared(s, 10, mutated);
        REQUIRE_FALSE(divided.passed());
        REQUIRE_FALSE(cleared.passed());
        CHECK(divided.first_failure->n == j);
        CHECK(cleared.first_failure->n == j);
        CHECK_FALSE(scheme_w_consistency(s, mutated, 10));
    }
    CHECK(scheme_w_consistency(s, [](std::int64_t) { return LaurentPoly(1); }, 50));
}

TEST_CASE("recurrence schemes on random unit recurrences") {
    const auto r = property_recurrence_schemes(77, 100, 20);
    CHECK(r.passed());
}

TEST_CASE("recurrence schemes on the builtin sequences") {
    for (auto name : {"fibonacci", "lucas", "pell", "pell_lucas", "derangement_shifted", "qfib"}) {
        CAPTURE(name);
        const auto spec = builtin_sequence(name);
        CHECK(euler_verify(power_weighted_scheme(spec), 20).passed());
        CHECK(euler_verify(alternating_scheme(spec), 20).passed());
        CHECK(euler_verify_cleared(power_weighted_scheme(spec), 15).passed());
    }
}

TEST_CASE("w of the recurrence schemes is the recurrence weight") {
    // Power-weighted: w_k = t x_{k+1} - a_{k-1} x_k = b_{k-1} x_{k-1} + (t - 1) x_{k+1}.
    const auto spec = generic_recurrence();
    SequenceEngine x(spec);
    CHECK(scheme_w_consistency(power_weighted_scheme(spec),
                               [&](std::int64_t k) { return spec.b(k - 1) * x.term(k - 1) + (t() - 1) * x.term(k + 1); },
                               20));
    // Alternating: w_k = a_k x_{k+1} + t b_k x_k = x_{k+2} + (t - 1) b_k x_k.
    CHECK(scheme_w_consistency(alternating_scheme(spec),
                               [&](std::int64_t k) { return x.term(k + 2) + (t() - 1) * spec.b(k) * x.term(k); }, 20));
}

TEST_CASE("q-Pochhammer schemes") {
    SequenceEngine F(builtin_sequence("qfib"));
    // w_k = (1 - tAq^{k-1}) F_{k+1} - F_k = A q^{k-1} (F_{k-1} - t F_{k+1}).
    CHECK(scheme_w_consistency(
        q_pochhammer_scheme(),
        [&](std::int64_t k) { return A() * q(static_cast<std::int32_t>(k - 1)) * (F.term(k - 1) - t() * F.term(k + 1)); },
        20));
    // w_k = F_{k+1} + A q^k (1 - t A^{-1} q^{-k}) F_k = F_{k+2} - t F_k.
    CHECK(scheme_w_consistency(q_pochhammer_alternating_scheme(),
                               [&](std::int64_t k) { return F.term(k + 2) - t() * F.term(k); }, 20));
    CHECK(euler_verify(q_pochhammer_scheme(), 25).passed());
    CHECK(euler_verify(q_pochhammer_alternating_scheme(), 25).passed());
    CHECK(euler_verify_cleared(q_pochhammer_scheme(), 10).passed());
}
