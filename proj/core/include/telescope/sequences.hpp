#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "telescope/laurent_poly.hpp"

namespace telescope {

using IndexFn = std::function<LaurentPoly(std::int64_t)>;

/// x_{n+2} = a(n) x_{n+1} + b(n) x_n with initial values x0, x1.
/// `a` and `b` must be deterministic.
struct RecurrenceSpec {
    std::string name;
    IndexFn a;
    IndexFn b;
    LaurentPoly x0;
    LaurentPoly x1;
};

/// Memoized evaluation of a recurrence. The cache only grows; references
/// returned by `term` stay valid for the engine's lifetime.
///
/// Not thread-safe: one engine per task.
class SequenceEngine {
public:
    explicit SequenceEngine(RecurrenceSpec spec);

    const LaurentPoly& term(std::int64_t n);
    const RecurrenceSpec& spec() const noexcept { return spec_; }
    std::size_t materialized() const noexcept { return cache_.size(); }

private:
    RecurrenceSpec spec_;
    std::deque<LaurentPoly> cache_;
};

using SequenceHandle = std::shared_ptr<SequenceEngine>;

inline SequenceHandle make_engine(RecurrenceSpec spec) {
    return std::make_shared<SequenceEngine>(std::move(spec));
}

/// fibonacci, lucas, pell, pell_lucas, derangement_shifted, qfib.
std::span<const std::string_view> builtin_sequence_names() noexcept;
/// Throws UnknownSequence for names outside `builtin_sequence_names()`.
RecurrenceSpec builtin_sequence(std::string_view name);

/// Number of derangements of n letters, from d_n = n d_{n-1} + (-1)^n,
/// d_0 = 1. Independent of the three-term engine.
BigRational derangement_count(std::int64_t n);

/// F_{k+1} + F_{k-1} == L_k for 1 <= k <= k_max.
bool fibonacci_lucas_relation_check(std::int64_t k_max);
/// P_{k+1} + P_{k-1} == Q_k for 1 <= k <= k_max.
bool pell_relation_check(std::int64_t k_max);

}  // namespace telescope
