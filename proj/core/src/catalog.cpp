#include "telescope/catalog.hpp"

#include <array>
#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "telescope/errors.hpp"

namespace telescope {

namespace {

using Clock = std::chrono::steady_clock;
using literals::A;
using literals::q;
using literals::t;

constexpr std::array<std::string_view, 21> kNames{
    "id_lucas_1876",      "id_sury_236",      "id_marques",         "id_martinjak_alt",
    "id_alt_fib",         "id_gb_sury",       "id_gb_martinjak",    "id_thm1_eq8",
    "id_thm1_eq9",        "id_pell_sury",     "id_pell_martinjak",  "id_pell_sum",
    "id_pell_alt_sum",    "id_lucas_sury",    "id_lucas_martinjak", "id_derange_sury",
    "id_derange_martinjak", "id_qfib_sury",   "id_qfib_martinjak",  "id_q_sury",
    "id_q_martinjak"};

std::int32_t i32(std::int64_t v) { return static_cast<std::int32_t>(v); }

LaurentPoly sign(std::int64_t k) { return LaurentPoly(k % 2 == 0 ? 1 : -1); }

LaurentPoly power(std::int64_t base, std::int64_t e) { return LaurentPoly(BigRational(base).pow(e)); }

LaurentPoly power(const BigRational& base, std::int64_t e) { return LaurentPoly(base.pow(e)); }

// Sequence accessor over a private engine.
struct Seq {
    SequenceHandle engine;
    explicit Seq(std::string_view name) : engine(make_engine(builtin_sequence(name))) {}
    explicit Seq(const RecurrenceSpec& spec) : engine(make_engine(spec)) {}
    LaurentPoly operator()(std::int64_t n) const { return engine->term(n); }
};

IdentityInstance make(std::string name, int equation, std::int64_t k_start, FractionFn summand,
                      FractionFn rhs, std::string constraints = {}, FactoredFraction lead = {}) {
    IdentityInstance id;
    id.name = std::move(name);
    id.equation = equation;
    id.k_start = k_start;
    id.lead_constant = std::move(lead);
    id.summand = std::move(summand);
    id.rhs = std::move(rhs);
    id.constraints = std::move(constraints);
    return id;
}

// --- the classical Fibonacci/Lucas family ----------------------------------

IdentityInstance lucas_1876() {
    Seq F("fibonacci");
    Seq L("lucas");
    return make(
        "id_lucas_1876", 1, 0, [=](std::int64_t k) { return FactoredFraction(L(k) - F(k + 1)); },
        [=](std::int64_t n) { return FactoredFraction(F(n + 1)); });
}

IdentityInstance sury_236() {
    Seq F("fibonacci");
    Seq L("lucas");
    return make(
        "id_sury_236", 2, 0, [=](std::int64_t k) { return FactoredFraction(power(2, k) * L(k)); },
        [=](std::int64_t n) { return FactoredFraction(power(2, n + 1) * F(n + 1)); });
}

IdentityInstance marques() {
    Seq F("fibonacci");
    Seq L("lucas");
    return make(
        "id_marques", 3, 0,
        [=](std::int64_t k) { return FactoredFraction(power(3, k) * (L(k) + F(k + 1))); },
        [=](std::int64_t n) { return FactoredFraction(power(3, n + 1) * F(n + 1)); });
}

IdentityInstance martinjak_alt() {
    Seq F("fibonacci");
    Seq L("lucas");
    const BigRational minus_half(-1, 2);
    return make(
        "id_martinjak_alt", 4, 0,
        [=](std::int64_t k) { return FactoredFraction(power(minus_half, k) * L(k + 1)); },
        [=](std::int64_t n) { return FactoredFraction(power(minus_half, n) * F(n + 1)); });
}

IdentityInstance alt_fib() {
    Seq F("fibonacci");
    Seq L("lucas");
    return make(
        "id_alt_fib", 5, 0, [=](std::int64_t k) { return FactoredFraction(sign(k) * (L(k + 1) - F(k))); },
        [=](std::int64_t n) { return FactoredFraction(sign(n) * F(n + 1)); });
}

IdentityInstance gb_sury() {
    Seq F("fibonacci");
    Seq L("lucas");
    return make(
        "id_gb_sury", 6, 0,
        [=](std::int64_t k) { return FactoredFraction(t(i32(k)) * (L(k) + (t() - 2) * F(k + 1))); },
        [=](std::int64_t n) { return FactoredFraction(t(i32(n + 1)) * F(n + 1)); });
}

IdentityInstance gb_martinjak() {
    Seq F("fibonacci");
    Seq L("lucas");
    return make(
        "id_gb_martinjak", 7, 0,
        [=](std::int64_t k) {
            return FactoredFraction(sign(k) * t(i32(-k)) * (L(k + 1) + (t() - 2) * F(k)));
        },
        [=](std::int64_t n) { return FactoredFraction(sign(n) * t(i32(-n)) * F(n + 1)); }, "t != 0");
}

// --- Pell / Pell-Lucas -----------------------------------------------------

IdentityInstance pell_sury() {
    Seq P("pell");
    Seq Q("pell_lucas");
    return make(
        "id_pell_sury", 10, 0,
        [=](std::int64_t k) { return FactoredFraction(t(i32(k)) * (Q(k) + 2 * (t() - 1) * P(k + 1))); },
        [=](std::int64_t n) { return FactoredFraction(2 * t(i32(n + 1)) * P(n + 1)); });
}

IdentityInstance pell_martinjak() {
    Seq P("pell");
    Seq Q("pell_lucas");
    return make(
        "id_pell_martinjak", 11, 0,
        [=](std::int64_t k) {
            return FactoredFraction(sign(k) * (Q(k + 1) + 2 * (t() - 1) * P(k)), {2 * t(i32(k))});
        },
        [=](std::int64_t n) { return FactoredFraction(sign(n) * t(i32(-n)) * P(n + 1)); }, "t != 0");
}

IdentityInstance pell_sum() {
    Seq P("pell");
    Seq Q("pell_lucas");
    return make(
        "id_pell_sum", 12, 0, [=](std::int64_t k) { return FactoredFraction(Q(k)); },
        [=](std::int64_t n) { return FactoredFraction(2 * P(n + 1)); });
}

IdentityInstance pell_alt_sum() {
    Seq P("pell");
    Seq Q("pell_lucas");
    return make(
        "id_pell_alt_sum", 13, 0, [=](std::int64_t k) { return FactoredFraction(sign(k) * Q(k + 1)); },
        [=](std::int64_t n) { return FactoredFraction(sign(n) * 2 * P(n + 1)); });
}

// --- Lucas analogues -------------------------------------------------------

IdentityInstance lucas_sury() {
    return make(
        "id_lucas_sury", 14, 0,
        [](std::int64_t k) {
            return FactoredFraction(t(i32(k)) * (catalog_lucas(k - 1) + (t() - 1) * catalog_lucas(k + 1)));
        },
        [](std::int64_t n) { return FactoredFraction(t(i32(n + 1)) * catalog_lucas(n + 1)); },
        "L_{-1} = 0", FactoredFraction(1));
}

IdentityInstance lucas_martinjak() {
    Seq L("lucas");
    return make(
        "id_lucas_martinjak", 15, 1,
        [=](std::int64_t k) {
            return FactoredFraction(sign(k) * t(i32(-k)) * (L(k + 2) + (t() - 1) * L(k)));
        },
        [=](std::int64_t n) { return FactoredFraction(sign(n) * t(i32(-n)) * L(n + 1)); }, "t != 0",
        FactoredFraction(1));
}

// --- q-Fibonacci -----------------------------------------------------------

IdentityInstance qfib_sury() {
    Seq F("qfib");
    return make(
        "id_qfib_sury", 18, 1,
        [=](std::int64_t k) {
            return FactoredFraction(t(i32(k - 1)) *
                                    (A() * q(i32(k - 1)) * F(k - 1) + (t() - 1) * F(k + 1)));
        },
        [=](std::int64_t n) { return FactoredFraction(t(i32(n)) * F(n + 1)); }, {},
        FactoredFraction(1));
}

IdentityInstance qfib_martinjak() {
    Seq F("qfib");
    return make(
        "id_qfib_martinjak", 19, 0,
        [=](std::int64_t k) {
            return FactoredFraction(qfib_alternating_weight(k) *
                                    (F(k + 2) + (t() - 1) * A() * q(i32(k)) * F(k)));
        },
        [=](std::int64_t n) { return FactoredFraction(qfib_alternating_weight(n) * F(n + 1)); },
        "t != 0");
}

// (t q^a; q)_m, memoized across calls of one instance.
struct PochhammerCache {
    std::shared_ptr<std::vector<LaurentPoly>> values = std::make_shared<std::vector<LaurentPoly>>(1, 1);
    const LaurentPoly& operator()(std::int64_t m) const {
        auto& v = *values;
        while (v.size() <= static_cast<std::size_t>(m)) {
            const auto i = static_cast<std::int32_t>(v.size() - 1);
            v.push_back(v.back() * (1 - t() * A() * q(i)));
        }
        return v[static_cast<std::size_t>(m)];
    }
};

IdentityInstance q_sury() {
    Seq F("qfib");
    PochhammerCache poch;
    return make(
        "id_q_sury", 20, 1,
        [=](std::int64_t k) {
            return FactoredFraction(A() * q(i32(k - 1)) * poch(k - 1) * (F(k - 1) - t() * F(k + 1)));
        },
        [=](std::int64_t n) { return FactoredFraction(poch(n) * F(n + 1)); }, {}, FactoredFraction(1));
}

// Factors of (t^{-1} q^{a+1}; q)_m, kept separate.
std::vector<LaurentPoly> inverse_pochhammer_factors(std::int64_t m) {
    std::vector<LaurentPoly> fs;
    for (std::int64_t i = 0; i < m; ++i) fs.push_back(1 - t(-1) * A() * q(i32(i + 1)));
    return fs;
}

IdentityInstance q_martinjak() {
    Seq F("qfib");
    return make(
        "id_q_martinjak", 21, 0,
        [=](std::int64_t k) {
            return FactoredFraction(t(i32(-k)) * (F(k + 2) - t() * F(k)), inverse_pochhammer_factors(k));
        },
        [=](std::int64_t n) { return FactoredFraction(t(i32(-n)) * F(n + 1), inverse_pochhammer_factors(n)); },
        "t != 0");
}

// --- derangements ----------------------------------------------------------

LaurentPoly factorial(std::int64_t n) {
    mpz_class f = 1;
    for (std::int64_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
    return LaurentPoly(BigRational(f));
}

DerangementFn shifted_derangements() {
    Seq D("derangement_shifted");
    return [D](std::int64_t n) { return D(n); };
}

IdentityInstance build(std::string_view name) {
    if (name == "id_lucas_1876") return lucas_1876();
    if (name == "id_sury_236") return sury_236();
    if (name == "id_marques") return marques();
    if (name == "id_martinjak_alt") return martinjak_alt();
    if (name == "id_alt_fib") return alt_fib();
    if (name == "id_gb_sury") return gb_sury();
    if (name == "id_gb_martinjak") return gb_martinjak();
    if (name == "id_thm1_eq8") return power_weighted_identity(generic_recurrence(), "id_thm1_eq8", 8);
    if (name == "id_thm1_eq9") return alternating_identity(generic_recurrence(), "id_thm1_eq9", 9);
    if (name == "id_pell_sury") return pell_sury();
    if (name == "id_pell_martinjak") return pell_martinjak();
    if (name == "id_pell_sum") return pell_sum();
    if (name == "id_pell_alt_sum") return pell_alt_sum();
    if (name == "id_lucas_sury") return lucas_sury();
    if (name == "id_lucas_martinjak") return lucas_martinjak();
    if (name == "id_derange_sury") return derangement_power_identity(shifted_derangements());
    if (name == "id_derange_martinjak") return derangement_alternating_identity(shifted_derangements());
    if (name == "id_qfib_sury") return qfib_sury();
    if (name == "id_qfib_martinjak") return qfib_martinjak();
    if (name == "id_q_sury") return q_sury();
    if (name == "id_q_martinjak") return q_martinjak();
    throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
}

std::string equation_label(int equation) { return "(" + std::to_string(equation) + ")"; }

}  // namespace

FactoredFraction IdentityInstance::lhs(std::int64_t n) const {
    FactoredFraction sum = lead_constant;
    for (std::int64_t k = k_start; k <= n; ++k) sum += summand(k);
    return sum;
}

std::vector<FactoredFraction> IdentityInstance::lhs_sweep(std::int64_t n_max) const {
    std::vector<FactoredFraction> out;
    FactoredFraction sum = lead_constant;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (n >= k_start) sum += summand(n);
        out.push_back(sum);
    }
    return out;
}

std::span<const std::string_view> catalog_names() noexcept { return kNames; }

std::vector<IdentityInstance> catalog_list() {
    std::vector<IdentityInstance> out;
    out.reserve(kNames.size());
    for (auto name : kNames) out.push_back(build(name));
    return out;
}

IdentityInstance catalog_get(std::string_view name) { return build(name); }

VerificationReport verify_identity(const IdentityInstance& identity, std::int64_t n_max) {
    const auto started = Clock::now();
    VerificationReport report;
    report.name = identity.name;
    report.equation = equation_label(identity.equation);
    report.n_min = 0;
    report.n_max = n_max;
    FactoredFraction sum = identity.lead_constant;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (n >= identity.k_start) sum += identity.summand(n);
        FactoredFraction rhs = identity.rhs(n);
        if (!frac_equal(sum, rhs)) {
            report.status = Status::Fail;
            report.first_failure = Failure{n, sum, std::move(rhs)};
            break;
        }
    }
    report.elapsed = Clock::now() - started;
    return report;
}

VerificationReport verify_identity(std::string_view name, std::int64_t n_max) {
    return verify_identity(catalog_get(name), n_max);
}

LaurentPoly catalog_lucas(std::int64_t k) {
    if (k == -1) return {};
    // Closed over a fresh engine: this accessor is shared by instances that
    // may run on different threads.
    SequenceEngine L(builtin_sequence("lucas"));
    return L.term(k);
}

RecurrenceSpec generic_recurrence() {
    return {"generic", [](std::int64_t n) { return 1 + (n + 1) * q(); },
            [](std::int64_t n) { return (n + 2) * A(); }, 1, 1 + A()};
}

IdentityInstance power_weighted_identity(const RecurrenceSpec& spec, std::string name, int equation) {
    Seq x(spec);
    auto a_factors = [x](std::int64_t count) {
        std::vector<LaurentPoly> fs;
        for (std::int64_t i = 0; i < count; ++i) fs.push_back(x.engine->spec().a(i));
        return fs;
    };
    return make(
        std::move(name), equation, 1,
        [=](std::int64_t k) {
            auto den = a_factors(k);
            den.push_back(x(1));
            const auto& b = x.engine->spec().b;
            return FactoredFraction(t(i32(k - 1)) * (b(k - 1) * x(k - 1) + (t() - 1) * x(k + 1)),
                                    std::move(den));
        },
        [=](std::int64_t n) {
            auto den = a_factors(n);
            den.push_back(x(1));
            LaurentPoly pa(1);
            for (const auto& f : den) pa *= f;
            return FactoredFraction(t(i32(n)) * x(n + 1) - pa, std::move(den));
        },
        "a_n != 0, x_1 != 0");
}

IdentityInstance alternating_identity(const RecurrenceSpec& spec, std::string name, int equation) {
    Seq x(spec);
    auto prod_a = [x](std::int64_t last) {
        LaurentPoly p(1);
        for (std::int64_t i = 1; i <= last; ++i) p *= x.engine->spec().a(i);
        return p;
    };
    auto b_factors = [x](std::int64_t last) {
        std::vector<LaurentPoly> fs;
        for (std::int64_t i = 1; i <= last; ++i) fs.push_back(x.engine->spec().b(i));
        fs.push_back(x(1));
        return fs;
    };
    return make(
        std::move(name), equation, 1,
        [=](std::int64_t k) {
            const auto& b = x.engine->spec().b;
            return FactoredFraction(sign(k) * t(i32(-k)) * prod_a(k - 1) *
                                        (x(k + 2) + (t() - 1) * b(k) * x(k)),
                                    b_factors(k));
        },
        [=](std::int64_t n) {
            auto den = b_factors(n);
            LaurentPoly pb(1);
            for (const auto& f : den) pb *= f;
            return FactoredFraction(sign(n) * t(i32(-n)) * prod_a(n) * x(n + 1) - pb, std::move(den));
        },
        "a_n != 0, b_n != 0, x_1 != 0, t != 0");
}

IdentityInstance derangement_power_identity(DerangementFn D) {
    return make(
        "id_derange_sury", 16, 1,
        [D](std::int64_t k) {
            return FactoredFraction(t(i32(k - 1)) * ((k + 1) * D(k - 1) + (t() - 1) * D(k + 1)),
                                    {factorial(k + 1)});
        },
        [D](std::int64_t n) { return FactoredFraction(t(i32(n)) * D(n + 1), {factorial(n + 1)}); }, {},
        FactoredFraction(1));
}

IdentityInstance derangement_alternating_identity(DerangementFn D) {
    return make(
        "id_derange_martinjak", 17, 0,
        [D](std::int64_t k) {
            return FactoredFraction(sign(k) * t(i32(-k)) * (D(k + 2) + (t() - 1) * (k + 2) * D(k)),
                                    {LaurentPoly(k + 2)});
        },
        [D](std::int64_t n) { return FactoredFraction(sign(n) * t(i32(-n)) * D(n + 1)); }, "t != 0");
}

LaurentPoly qfib_alternating_weight(std::int64_t k) {
    return LaurentPoly::monomial(BigRational(k % 2 == 0 ? 1 : -1),
                                 {i32(-k), i32(-(k * (k + 1) / 2)), i32(-k)});
}

TelescopingScheme q_pochhammer_scheme() {
    Seq F("qfib");
    return TelescopingScheme::factored(
        "qfib:pochhammer",
        [F](std::int64_t k) { return Factors{1 - t() * A() * q(i32(k - 1)), F(k + 1)}; },
        [F](std::int64_t k) { return Factors{F(k)}; });
}

TelescopingScheme q_pochhammer_alternating_scheme() {
    Seq F("qfib");
    return TelescopingScheme::factored(
        "qfib:pochhammer_alternating", [F](std::int64_t k) { return Factors{F(k + 1)}; },
        [F](std::int64_t k) {
            return Factors{-(A() * q(i32(k))), 1 - t() * A(-1) * q(i32(-k)), F(k)};
        });
}

// --- specializations -------------------------------------------------------

std::vector<SpecializationCase> specialization_cases() {
    using M = SpecializationMode;
    auto at = [](BigRational v) { return Assignment{{Variable::T, std::move(v)}}; };
    return {
        {"id_gb_sury", at(1), "id_lucas_1876", M::Termwise, 1},
        {"id_gb_sury", at(2), "id_sury_236", M::Termwise, 1},
        {"id_gb_sury", at(3), "id_marques", M::Termwise, 1},
        // Value mode: the base sides carry an extra factor t.
        {"id_gb_sury", at(-1), "id_alt_fib", M::Value, -1},
        {"id_gb_sury", at(BigRational(-1, 2)), "id_martinjak_alt", M::Value, BigRational(-1, 2)},
        {"id_gb_martinjak", at(1), "id_alt_fib", M::Termwise, 1},
        {"id_gb_martinjak", at(2), "id_martinjak_alt", M::Termwise, 1},
        {"id_pell_sury", at(1), "id_pell_sum", M::Termwise, 1},
        {"id_pell_martinjak", at(1), "id_pell_alt_sum", M::Termwise, BigRational(1, 2)},
    };
}

namespace {

std::string assignment_text(const Assignment& a) {
    std::string out;
    for (const auto& [v, value] : a) {
        if (!out.empty()) out += ',';
        out += variable_symbol(v);
        out += '=';
        out += value.to_string();
    }
    return out;
}

}  // namespace

VerificationReport verify_specialization(const SpecializationCase& c, std::int64_t n_max) {
    const auto started = Clock::now();
    const IdentityInstance base = catalog_get(c.base);
    const IdentityInstance target = catalog_get(c.target);

    VerificationReport report;
    report.name = c.base + "@" + assignment_text(c.assignment) + "->" + c.target;
    report.equation = equation_label(base.equation) + "->" + equation_label(target.equation);
    report.n_min = 0;
    report.n_max = n_max;

    const FactoredFraction scale{LaurentPoly(c.scale)};
    auto fail = [&](std::int64_t n, FactoredFraction lhs, FactoredFraction rhs) {
        report.status = Status::Fail;
        report.first_failure = Failure{n, std::move(lhs), std::move(rhs)};
    };
    auto check = [&](std::int64_t n, const FactoredFraction& b, const FactoredFraction& tg) {
        FactoredFraction lhs = substitute(b, c.assignment);
        FactoredFraction rhs = scale * substitute(tg, c.assignment);
        if (frac_equal(lhs, rhs)) return true;
        fail(n, std::move(lhs), std::move(rhs));
        return false;
    };

    if (c.mode == SpecializationMode::Termwise) {
        if (base.k_start != target.k_start)
            throw std::invalid_argument("termwise specialization needs matching start indices");
        bool ok = check(0, base.lead_constant, target.lead_constant);
        for (std::int64_t n = 0; ok && n <= n_max; ++n) {
            if (n >= base.k_start) ok = check(n, base.summand(n), target.summand(n));
            ok = ok && check(n, base.rhs(n), target.rhs(n));
        }
    } else {
        const auto base_lhs = base.lhs_sweep(n_max);
        const auto target_lhs = target.lhs_sweep(n_max);
        bool ok = true;
        for (std::int64_t n = 0; ok && n <= n_max; ++n) {
            const auto i = static_cast<std::size_t>(n);
            ok = check(n, base_lhs[i], target_lhs[i]) && check(n, base.rhs(n), target.rhs(n));
        }
    }
    report.elapsed = Clock::now() - started;
    return report;
}

VerificationReport verify_generalization_equivalence(std::int64_t n_max,
                                                     std::span<const BigRational> sample_ts) {
    for (const auto& value : sample_ts)
        if (value.is_zero()) throw EvalDivisionByZero("sample t = 0 is excluded (t != 0 required)");
    const auto started = Clock::now();
    VerificationReport report;
    report.name = "equivalence:id_gb_sury<->id_gb_martinjak";
    report.equation = "(6)<->(7)";
    report.n_min = 0;
    report.n_max = n_max;

    for (const auto& value : sample_ts) {
        const Assignment at{{Variable::T, value}};
        for (const auto& identity : {catalog_get("id_gb_sury"), catalog_get("id_gb_martinjak")}) {
            const auto sums = identity.lhs_sweep(n_max);
            for (std::int64_t n = 0; n <= n_max; ++n) {
                const BigRational lhs = evaluate(sums[static_cast<std::size_t>(n)], at);
                const BigRational rhs = evaluate(identity.rhs(n), at);
                if (lhs != rhs) {
                    report.status = Status::Fail;
                    report.first_failure = Failure{n, LaurentPoly(lhs), LaurentPoly(rhs)};
                    report.elapsed = Clock::now() - started;
                    return report;
                }
            }
        }
    }
    report.elapsed = Clock::now() - started;
    return report;
}

namespace {

// dst side == rescale_T(c * (src side + 1)) for every n, on both sides.
bool normalized_sides_match(const IdentityInstance& src, const IdentityInstance& dst, const LaurentPoly& c,
                            const BigRational& t_scale, std::int64_t n_max, VerificationReport& report) {
    const auto src_lhs = src.lhs_sweep(n_max);
    const auto dst_lhs = dst.lhs_sweep(n_max);
    auto normalize = [&](const FactoredFraction& f) {
        return rescale(FactoredFraction(c) * (f + FactoredFraction(1)), Variable::T, t_scale);
    };
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const std::array<std::pair<FactoredFraction, FactoredFraction>, 2> sides{
            std::pair{normalize(src_lhs[i]), dst_lhs[i]}, std::pair{normalize(src.rhs(n)), dst.rhs(n)}};
        for (const auto& [mine, theirs] : sides) {
            if (!frac_equal(mine, theirs)) {
                report.status = Status::Fail;
                report.first_failure = Failure{n, mine, theirs};
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<VerificationReport> reduction_checks(std::int64_t n_max) {
    std::vector<VerificationReport> out;
    {
        const auto started = Clock::now();
        VerificationReport r;
        r.name = "reduction:id_thm1_eq8->id_gb_sury,id_pell_sury";
        r.equation = "(8)->(6),(10)";
        r.n_max = n_max;
        const auto fib = builtin_sequence("fibonacci");
        const auto pell = builtin_sequence("pell");
        // Normalizing factor t * x_1; x_1 = 1 for both.
        if (normalized_sides_match(power_weighted_identity(fib, "fibonacci", 8), catalog_get("id_gb_sury"),
                                   t(), 1, n_max, r))
            normalized_sides_match(power_weighted_identity(pell, "pell", 8), catalog_get("id_pell_sury"), t(),
                                   2, n_max, r);
        r.elapsed = Clock::now() - started;
        out.push_back(std::move(r));
    }
    {
        const auto started = Clock::now();
        VerificationReport r;
        r.name = "reduction:id_thm1_eq9->id_gb_martinjak,id_pell_martinjak";
        r.equation = "(9)->(7),(11)";
        r.n_max = n_max;
        const auto fib = builtin_sequence("fibonacci");
        const auto pell = builtin_sequence("pell");
        // Normalizing factor x_1 = 1.
        if (normalized_sides_match(alternating_identity(fib, "fibonacci", 9),
                                   catalog_get("id_gb_martinjak"), 1, 1, n_max, r))
            normalized_sides_match(alternating_identity(pell, "pell", 9), catalog_get("id_pell_martinjak"), 1,
                                   2, n_max, r);
        r.elapsed = Clock::now() - started;
        out.push_back(std::move(r));
    }
    return out;
}

std::string catalog_json() {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& id : catalog_list()) {
        nlohmann::ordered_json summands = nlohmann::ordered_json::array();
        for (std::int64_t k = id.k_start; k <= 3; ++k)
            summands.push_back({{"k", k}, {"value", to_string(id.summand(k))}});
        out.push_back({{"name", id.name},
                       {"eq", id.equation},
                       {"k_start", id.k_start},
                       {"lead_constant", to_string(id.lead_constant)},
                       {"summands", std::move(summands)},
                       {"rhs_n3", to_string(id.rhs(3))},
                       {"constraints", id.constraints}});
    }
    return out.dump(2);
}

}  // namespace telescope
