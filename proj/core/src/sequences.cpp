#include "telescope/sequences.hpp"

#include <array>
#include <stdexcept>

#include "telescope/errors.hpp"

namespace telescope {

namespace {

constexpr std::array<std::string_view, 6> kBuiltinNames{
    "fibonacci", "lucas", "pell", "pell_lucas", "derangement_shifted", "qfib"};

IndexFn constant(std::int64_t c) {
    return [c](std::int64_t) { return LaurentPoly(c); };
}

}  // namespace

SequenceEngine::SequenceEngine(RecurrenceSpec spec) : spec_(std::move(spec)) {
    cache_.push_back(spec_.x0);
    cache_.push_back(spec_.x1);
}

const LaurentPoly& SequenceEngine::term(std::int64_t n) {
    if (n < 0) throw std::out_of_range("sequence index must be non-negative");
    while (cache_.size() <= static_cast<std::size_t>(n)) {
        const auto m = static_cast<std::int64_t>(cache_.size()) - 2;
        const auto& x1 = cache_[cache_.size() - 1];
        const auto& x0 = cache_[cache_.size() - 2];
        cache_.push_back(spec_.a(m) * x1 + spec_.b(m) * x0);
    }
    return cache_[static_cast<std::size_t>(n)];
}

std::span<const std::string_view> builtin_sequence_names() noexcept { return kBuiltinNames; }

RecurrenceSpec builtin_sequence(std::string_view name) {
    if (name == "fibonacci") return {"fibonacci", constant(1), constant(1), 0, 1};
    if (name == "lucas") return {"lucas", constant(1), constant(1), 2, 1};
    if (name == "pell") return {"pell", constant(2), constant(1), 0, 1};
    if (name == "pell_lucas") return {"pell_lucas", constant(2), constant(1), 2, 2};
    if (name == "derangement_shifted") {
        auto n_plus_2 = [](std::int64_t n) { return LaurentPoly(n + 2); };
        return {"derangement_shifted", n_plus_2, n_plus_2, 0, 1};
    }
    if (name == "qfib") {
        // b(n) = q^{a+n}
        return {"qfib", constant(1),
                [](std::int64_t n) {
                    return LaurentPoly::monomial(BigRational(1), {0, static_cast<std::int32_t>(n), 1});
                },
                0, 1};
    }
    throw UnknownSequence("unknown sequence '" + std::string(name) + "'");
}

BigRational derangement_count(std::int64_t n) {
    if (n < 0) throw std::out_of_range("derangement index must be non-negative");
    mpz_class d = 1;
    for (std::int64_t i = 1; i <= n; ++i) {
        d *= static_cast<long>(i);
        d += (i % 2 == 0) ? 1 : -1;
    }
    return BigRational(d);
}

namespace {

bool relation_check(std::string_view base, std::string_view companion, std::int64_t k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    SequenceEngine x(builtin_sequence(base));
    SequenceEngine y(builtin_sequence(companion));
    for (std::int64_t k = 1; k <= k_max; ++k)
        if (x.term(k + 1) + x.term(k - 1) != y.term(k)) return false;
    return true;
}

}  // namespace

bool fibonacci_lucas_relation_check(std::int64_t k_max) {
    return relation_check("fibonacci", "lucas", k_max);
}

bool pell_relation_check(std::int64_t k_max) { return relation_check("pell", "pell_lucas", k_max); }

}  // namespace telescope
