#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "telescope/catalog.hpp"
#include "telescope/errors.hpp"

using namespace telescope;
using namespace telescope::literals;

namespace {

BigRational value(const FactoredFraction& f) { return evaluate(f, {}); }

}  // namespace

TEST_CASE("catalog has 21 named instances in order") {
    const auto names = catalog_names();
    REQUIRE(names.size() == 21);
    CHECK(names.front() == "id_lucas_1876");
    CHECK(names.back() == "id_q_martinjak");
    const auto list = catalog_list();
    REQUIRE(list.size() == 21);
    for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(list[i].name == names[i]);
        CHECK(list[i].equation == static_cast<int>(i) + 1);
    }
    CHECK_THROWS_AS(catalog_get("id_unknown"), UnknownIdentity);
    CHECK_THROWS_AS(verify_identity("id_unknown", 3), UnknownIdentity);
}

TEST_CASE("every identity holds up to n = 40") {
    for (auto name : catalog_names()) {
        CAPTURE(name);
        const auto r = verify_identity(name, 40);
        CHECK(r.passed());
        CHECK(r.name == name);
        CHECK(r.n_min == 0);
        CHECK(r.n_max == 40);
    }
    CHECK(verify_identity("id_sury_236", 5).equation == "(2)");
}

TEST_CASE("direct and incremental left sides agree") {
    for (const auto& id : catalog_list()) {
        CAPTURE(id.name);
        const auto sweep = id.lhs_sweep(8);
        for (std::int64_t n = 0; n <= 8; ++n) CHECK(frac_equal(sweep[static_cast<std::size_t>(n)], id.lhs(n)));
    }
}

TEST_CASE("spot values") {
    const auto sury = catalog_get("id_sury_236");
    CHECK(value(sury.lhs(2)) == BigRational(16));
    CHECK(value(sury.rhs(2)) == BigRational(16));
    CHECK(to_string(sury.summand(3)) == "32");

    const auto pell = catalog_get("id_pell_sum");
    CHECK(value(pell.lhs(2)) == BigRational(10));
    CHECK(value(pell.rhs(2)) == BigRational(10));

    const auto gb = catalog_get("id_gb_sury");
    CHECK(frac_equal(gb.lhs(0), FactoredFraction(t())));
    CHECK(frac_equal(gb.rhs(0), FactoredFraction(t())));

    // Summands are F_{k-1}: 1 + 0 + 1 + 1 + 2 = 5 = F_5.
    const auto lucas = catalog_get("id_lucas_1876");
    CHECK(value(lucas.lhs(4)) == value(lucas.rhs(4)));
    CHECK(value(lucas.rhs(4)) == BigRational(5));
}

TEST_CASE("specializations of the t-generalizations") {
    const auto cases = specialization_cases();
    CHECK(cases.size() >= 5);
    for (const auto& c : cases) {
        const auto r = verify_specialization(c, 30);
        CAPTURE(r.name);
        CHECK(r.passed());
    }
    // A wrong target is caught.
    SpecializationCase wrong{"id_gb_sury", {{Variable::T, 2}}, "id_marques", SpecializationMode::Termwise, 1};
    const auto r = verify_specialization(wrong, 10);
    CHECK_FALSE(r.passed());
    REQUIRE(r.first_failure);
    CHECK(r.first_failure->n == 0);
    // So is a wrong scale.
    SpecializationCase unscaled{"id_gb_sury", {{Variable::T, -1}}, "id_alt_fib", SpecializationMode::Value, 1};
    CHECK_FALSE(verify_specialization(unscaled, 10).passed());
}

TEST_CASE("specialization names") {
    const auto r = verify_specialization(specialization_cases()[1], 3);
    CHECK(r.name == "id_gb_sury@t=2->id_sury_236");
    CHECK(r.equation == "(6)->(2)");
}

TEST_CASE("the two t-generalizations are both true at sampled t") {
    const std::vector<BigRational> ts{1, 2, 3, -1, BigRational(1, 2), BigRational(-1, 2), BigRational(5, 3),
                                      BigRational(-7, 4)};
    CHECK(verify_generalization_equivalence(30, ts).passed());
    const std::vector<BigRational> with_zero{1, 0};
    CHECK_THROWS_AS(verify_generalization_equivalence(5, with_zero), EvalDivisionByZero);
}

TEST_CASE("generic identities reduce to the Fibonacci and Pell identities") {
    const auto reports = reduction_checks(20);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK(r.passed());
    }
}

TEST_CASE("generic identities at the builtin recurrences") {
    for (auto name : builtin_sequence_names()) {
        CAPTURE(name);
        const auto spec = builtin_sequence(name);
        CHECK(verify_identity(power_weighted_identity(spec, std::string(name), 8), 20).passed());
        CHECK(verify_identity(alternating_identity(spec, std::string(name), 9), 20).passed());
    }
}

TEST_CASE("derangement identities restated through the subfactorial") {
    auto d_shifted = [](std::int64_t n) { return LaurentPoly(derangement_count(n + 1)); };
    CHECK(verify_identity(derangement_power_identity(d_shifted), 40).passed());
    CHECK(verify_identity(derangement_alternating_identity(d_shifted), 40).passed());
    auto enumerated = [](std::int64_t n) { return LaurentPoly(oracle::derangements_by_enumeration(static_cast<int>(n + 1))); };
    CHECK(verify_identity(derangement_power_identity(enumerated), 6).passed());
}

TEST_CASE("alternating q-Fibonacci weight equals its product form") {
    // prod_{i=1}^k (-1 / (t A q^i))
    LaurentPoly product(1);
    for (std::int64_t k = 0; k <= 25; ++k) {
        if (k > 0) product = div_unit(product, -(t() * A() * q(static_cast<std::int32_t>(k))));
        CHECK(qfib_alternating_weight(k) == product);
    }
}

TEST_CASE("q-Pochhammer identities agree with the lemma and the rising factorial") {
    const auto id = catalog_get("id_q_sury");
    SequenceEngine F(builtin_sequence("qfib"));
    for (std::int64_t n = 0; n <= 12; ++n) {
        LaurentPoly poch(1);
        for (std::int64_t i = 0; i < n; ++i) poch = oracle::naive_multiply(poch, 1 - t() * A() * q(static_cast<std::int32_t>(i)));
        CHECK(poch == qrfac(t() * A(), n));
        CHECK(frac_equal(id.rhs(n), FactoredFraction(oracle::naive_multiply(poch, F.term(n + 1)))));
    }
    const auto scheme = q_pochhammer_scheme();
    for (std::int64_t k = 1; k <= 10; ++k)
        CHECK(frac_equal(id.summand(k), euler_lhs(scheme, k) - euler_lhs(scheme, k - 1)));

    const auto alt = catalog_get("id_q_martinjak");
    const auto alt_scheme = q_pochhammer_alternating_scheme();
    for (std::int64_t n = 0; n <= 10; ++n)
        CHECK(frac_equal(alt.lhs(n) - alt.summand(0), euler_lhs(alt_scheme, n)));
}

TEST_CASE("sign flips and index shifts are detected") {
    for (auto name : catalog_names()) {
        CAPTURE(name);
        auto flipped = catalog_get(name);
        flipped.summand = [inner = flipped.summand](std::int64_t k) { return -inner(k); };
        const auto a = verify_identity(flipped, 5);
        CHECK_FALSE(a.passed());

        auto shifted = catalog_get(name);
        shifted.summand = [inner = shifted.summand](std::int64_t k) { return inner(k + 1); };
        const auto b = verify_identity(shifted, 5);
        CHECK_FALSE(b.passed());
    }
}

TEST_CASE("catalog JSON export") {
    const auto j = nlohmann::json::parse(catalog_json());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 21);
    CHECK(j[1]["name"] == "id_sury_236");
    CHECK(j[1]["eq"] == 2);
    CHECK(j[1]["rhs_n3"] == "48");
    CHECK(j[1]["summands"][0]["k"] == 0);
    CHECK(j[1]["summands"][0]["value"] == "2");
    CHECK(j[6]["constraints"] == "t != 0");
    for (const auto& record : j) {
        CHECK(record.contains("summands"));
        CHECK(record.contains("constraints"));
    }
}
