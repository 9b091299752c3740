#include "telescope/laurent_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>

#include "telescope/errors.hpp"

namespace telescope {

namespace {

std::int64_t total_degree(const Exponents& e) noexcept {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) noexcept {
    Exponents r{};
    for (std::size_t i = 0; i < kVariableCount; ++i) r[i] = a[i] + b[i];
    return r;
}

struct TermLess {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept {
        return term_order_less(a, b);
    }
};

// --- product kernels -------------------------------------------------------
//
// All kernels compute the same sum of pairwise term products. Small integer
// inputs go through fixed-width accumulators when a worst-case bound proves
// that no partial sum can overflow; everything else falls back to GMP.

constexpr std::uint64_t kDenseCellLimit = std::uint64_t{1} << 22;

struct ExponentBox {
    Exponents lo{};
    std::array<std::uint64_t, kVariableCount> extent{};
    std::array<std::uint64_t, kVariableCount> stride{};
    unsigned __int128 cells = 0;
};

ExponentBox product_box(std::span<const Term> p, std::span<const Term> r) {
    ExponentBox box;
    box.cells = 1;
    for (std::size_t v = 0; v < kVariableCount; ++v) {
        auto [plo, phi] = std::minmax_element(p.begin(), p.end(), [v](const Term& a, const Term& b) {
            return a.exponents[v] < b.exponents[v];
        });
        auto [rlo, rhi] = std::minmax_element(r.begin(), r.end(), [v](const Term& a, const Term& b) {
            return a.exponents[v] < b.exponents[v];
        });
        const std::int64_t lo = std::int64_t{plo->exponents[v]} + rlo->exponents[v];
        const std::int64_t hi = std::int64_t{phi->exponents[v]} + rhi->exponents[v];
        box.lo[v] = static_cast<std::int32_t>(lo);
        box.extent[v] = static_cast<std::uint64_t>(hi - lo + 1);
        box.cells *= box.extent[v];
    }
    box.stride[kVariableCount - 1] = 1;
    for (std::size_t v = kVariableCount - 1; v-- > 0;)
        box.stride[v] = box.stride[v + 1] * box.extent[v + 1];
    return box;
}

// Offset of a factor's term inside the product box, relative to the
// factor's own minimum corner. Offsets of the two factors add.
std::vector<std::uint64_t> box_offsets(std::span<const Term> p, const ExponentBox& box) {
    Exponents lo = p.front().exponents;
    for (const auto& term : p)
        for (std::size_t v = 0; v < kVariableCount; ++v) lo[v] = std::min(lo[v], term.exponents[v]);
    std::vector<std::uint64_t> out;
    out.reserve(p.size());
    for (const auto& term : p) {
        std::uint64_t idx = 0;
        for (std::size_t v = 0; v < kVariableCount; ++v)
            idx += static_cast<std::uint64_t>(term.exponents[v] - lo[v]) * box.stride[v];
        out.push_back(idx);
    }
    return out;
}

Exponents decode(std::uint64_t idx, const ExponentBox& box) {
    Exponents e{};
    for (std::size_t v = 0; v < kVariableCount; ++v) {
        e[v] = box.lo[v] + static_cast<std::int32_t>(idx / box.stride[v]);
        idx %= box.stride[v];
    }
    return e;
}

template <typename Acc>
BigRational to_rational(Acc v) {
    if constexpr (std::is_same_v<Acc, std::int64_t>)
        return BigRational(v);
    else
        return BigRational::from_int128(v);
}

template <typename Acc>
std::vector<Term> collect_sorted(std::vector<std::pair<Exponents, Acc>> cells) {
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return term_order_less(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(cells.size());
    for (auto& [e, c] : cells) out.push_back(Term{e, to_rational(c)});
    return out;
}

template <typename Acc>
std::vector<Term> multiply_fixed(std::span<const Term> p, const std::vector<std::int64_t>& pc,
                                 std::span<const Term> r, const std::vector<std::int64_t>& rc,
                                 const ExponentBox& box) {
    const auto po = box_offsets(p, box);
    const auto ro = box_offsets(r, box);
    const auto pairs = static_cast<unsigned __int128>(p.size()) * r.size();
    std::vector<std::pair<Exponents, Acc>> cells;

    if (box.cells <= kDenseCellLimit && box.cells <= pairs * 16) {
        std::vector<Acc> dense(static_cast<std::size_t>(box.cells), Acc{0});
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Acc a = pc[i];
            Acc* row = dense.data() + po[i];
            for (std::size_t j = 0; j < r.size(); ++j) row[ro[j]] += a * static_cast<Acc>(rc[j]);
        }
        // Index order is lexicographic on (T, Q, A); a stable bucketing by
        // total degree then yields the canonical order without sorting.
        std::int64_t lo_degree = 0;
        std::size_t degrees = 1;
        for (std::size_t v = 0; v < kVariableCount; ++v) {
            lo_degree += box.lo[v];
            degrees += box.extent[v] - 1;
        }
        std::vector<std::size_t> bucket_start(degrees + 1, 0);
        for (std::size_t idx = 0; idx < dense.size(); ++idx)
            if (dense[idx] != 0) ++bucket_start[total_degree(decode(idx, box)) - lo_degree + 1];
        for (std::size_t d = 1; d <= degrees; ++d) bucket_start[d] += bucket_start[d - 1];
        std::vector<Term> out(bucket_start[degrees]);
        for (std::size_t idx = 0; idx < dense.size(); ++idx) {
            if (dense[idx] == 0) continue;
            const Exponents e = decode(idx, box);
            out[bucket_start[total_degree(e) - lo_degree]++] = Term{e, to_rational(dense[idx])};
        }
        return out;
    } else {
        std::unordered_map<std::uint64_t, Acc> sparse;
        sparse.reserve(static_cast<std::size_t>(std::min<unsigned __int128>(pairs, 1u << 20)));
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Acc a = pc[i];
            for (std::size_t j = 0; j < r.size(); ++j)
                sparse[po[i] + ro[j]] += a * static_cast<Acc>(rc[j]);
        }
        cells.reserve(sparse.size());
        for (const auto& [idx, c] : sparse)
            if (c != 0) cells.emplace_back(decode(idx, box), c);
    }
    return collect_sorted(std::move(cells));
}

std::vector<Term> multiply_generic(std::span<const Term> p, std::span<const Term> r) {
    std::map<Exponents, BigRational, TermLess> acc;
    for (const auto& a : p)
        for (const auto& b : r) acc[add_exponents(a.exponents, b.exponents)] += a.coefficient * b.coefficient;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back(Term{e, std::move(c)});
    return out;
}

// Coefficients as int64 when every coefficient is an integer that fits.
std::optional<std::vector<std::int64_t>> small_integer_coefficients(std::span<const Term> p,
                                                                    std::uint64_t& max_abs) {
    std::vector<std::int64_t> out;
    out.reserve(p.size());
    max_abs = 0;
    for (const auto& term : p) {
        const auto v = term.coefficient.to_int64();
        if (!v) return std::nullopt;
        out.push_back(*v);
        max_abs = std::max<std::uint64_t>(max_abs, static_cast<std::uint64_t>(std::llabs(*v)));
    }
    return out;
}

std::vector<Term> multiply_terms(std::span<const Term> p, std::span<const Term> r) {
    std::uint64_t pmax = 0;
    std::uint64_t rmax = 0;
    auto pc = small_integer_coefficients(p, pmax);
    auto rc = pc ? small_integer_coefficients(r, rmax) : std::nullopt;
    if (pc && rc) {
        const ExponentBox box = product_box(p, r);
        if (box.cells <= (static_cast<unsigned __int128>(1) << 64)) {
            // No cell receives more than min(|p|, |r|) products.
            const unsigned __int128 bound = static_cast<unsigned __int128>(pmax) * rmax;
            const unsigned __int128 overlap = std::min(p.size(), r.size());
            constexpr unsigned __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
            constexpr unsigned __int128 kInt128Safe = static_cast<unsigned __int128>(1) << 125;
            if (bound <= kInt64Max / overlap)
                return multiply_fixed<std::int64_t>(p, *pc, r, *rc, box);
            if (bound <= kInt128Safe / overlap)
                return multiply_fixed<__int128>(p, *pc, r, *rc, box);
        }
    }
    return multiply_generic(p, r);
}

// Merge of two canonical term lists; `sign` = -1 subtracts `b`.
std::vector<Term> merge_terms(std::vector<Term>&& a, std::span<const Term> b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (term_order_less(a[i].exponents, b[j].exponents)) {
            out.push_back(std::move(a[i++]));
        } else if (a[i].exponents != b[j].exponents) {
            out.push_back(sign > 0 ? b[j] : Term{b[j].exponents, -b[j].coefficient});
            ++j;
        } else {
            Term& t = a[i];
            if (sign > 0) t.coefficient += b[j].coefficient;
            else t.coefficient -= b[j].coefficient;
            if (!t.coefficient.is_zero()) out.push_back(std::move(t));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(sign > 0 ? b[j] : Term{b[j].exponents, -b[j].coefficient});
    return out;
}

}  // namespace

char variable_symbol(Variable v) noexcept {
    switch (v) {
        case Variable::T: return 't';
        case Variable::Q: return 'q';
        case Variable::A: return 'A';
    }
    return '?';
}

bool term_order_less(const Exponents& a, const Exponents& b) noexcept {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

LaurentPoly::LaurentPoly(const BigRational& c) {
    if (!c.is_zero()) terms_.push_back(Term{Exponents{}, c});
}

LaurentPoly LaurentPoly::monomial(const BigRational& c, const Exponents& e) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.push_back(Term{e, c});
    return p;
}

LaurentPoly LaurentPoly::variable(Variable v, std::int32_t exponent) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = exponent;
    return monomial(BigRational(1), e);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return term_order_less(a.exponents, b.exponents); });
    LaurentPoly p;
    for (auto& term : terms) {
        if (!p.terms_.empty() && p.terms_.back().exponents == term.exponents) {
            p.terms_.back().coefficient += term.coefficient;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(term));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    return p;
}

bool LaurentPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponents == Exponents{});
}

BigRational LaurentPoly::coefficient(const Exponents& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponents& x) {
        return term_order_less(t.exponents, x);
    });
    if (it != terms_.end() && it->exponents == e) return it->coefficient;
    return BigRational(0);
}

std::int32_t LaurentPoly::min_degree(Variable v) const noexcept {
    if (terms_.empty()) return 0;
    const auto i = static_cast<std::size_t>(v);
    std::int32_t d = terms_.front().exponents[i];
    for (const auto& term : terms_) d = std::min(d, term.exponents[i]);
    return d;
}

std::int32_t LaurentPoly::max_degree(Variable v) const noexcept {
    if (terms_.empty()) return 0;
    const auto i = static_cast<std::size_t>(v);
    std::int32_t d = terms_.front().exponents[i];
    for (const auto& term : terms_) d = std::max(d, term.exponents[i]);
    return d;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge_terms(std::move(terms_), o.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge_terms(std::move(terms_), o.terms_, -1);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
}

LaurentPoly operator-(LaurentPoly a) {
    for (auto& term : a.terms_) term.coefficient.negate();
    return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1 || b.size() == 1) {
        // Shifting every exponent by the same vector preserves term order.
        const bool a_single = a.size() == 1;
        const Term& m = a_single ? a.terms_.front() : b.terms_.front();
        const LaurentPoly& other = a_single ? b : a;
        r.terms_.reserve(other.size());
        for (const auto& term : other.terms_)
            r.terms_.push_back(
                Term{add_exponents(term.exponents, m.exponents), term.coefficient * m.coefficient});
        return r;
    }
    r.terms_ = multiply_terms(a.terms_, b.terms_);
    return r;
}

LaurentPoly LaurentPoly::pow(std::int64_t e) const {
    if (e < 0) return unit_inverse(*this).pow(-e);
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool is_unit(const LaurentPoly& p) noexcept { return p.size() == 1; }

LaurentPoly unit_inverse(const LaurentPoly& unit) {
    if (!is_unit(unit)) throw NotAUnit("not a unit of the Laurent ring: " + to_string(unit));
    const Term& m = unit.terms().front();
    Exponents e{};
    for (std::size_t i = 0; i < kVariableCount; ++i) e[i] = -m.exponents[i];
    return LaurentPoly::monomial(m.coefficient.inverse(), e);
}

LaurentPoly div_unit(const LaurentPoly& p, const LaurentPoly& unit) {
    return p * unit_inverse(unit);
}

BigRational evaluate(const LaurentPoly& p, const Assignment& assignment) {
    BigRational sum;
    for (const auto& term : p.terms()) {
        BigRational value = term.coefficient;
        for (Variable v : kVariables) {
            const auto e = term.exponents[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw MissingAssignment(std::string("no value assigned to ") + variable_symbol(v));
            if (e < 0 && it->second.is_zero())
                throw EvalDivisionByZero(std::string("negative power of ") + variable_symbol(v) +
                                         " evaluated at 0");
            value *= it->second.pow(e);
        }
        sum += value;
    }
    return sum;
}

LaurentPoly substitute(const LaurentPoly& p, const Assignment& assignment) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& term : p.terms()) {
        Term r = term;
        for (const auto& [v, value] : assignment) {
            auto& e = r.exponents[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            if (e < 0 && value.is_zero())
                throw EvalDivisionByZero(std::string("negative power of ") + variable_symbol(v) +
                                         " specialized to 0");
            r.coefficient *= value.pow(e);
            e = 0;
        }
        out.push_back(std::move(r));
    }
    return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly rescale(const LaurentPoly& p, Variable v, const BigRational& factor) {
    if (factor.is_zero()) throw EvalDivisionByZero("rescaling a variable by 0");
    std::vector<Term> out(p.terms().begin(), p.terms().end());
    for (auto& term : out) {
        const auto e = term.exponents[static_cast<std::size_t>(v)];
        if (e != 0) term.coefficient *= factor.pow(e);
    }
    // Exponents are unchanged, so the order is too.
    return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly qrfac(const LaurentPoly& a, std::int64_t m) {
    LaurentPoly result(1);
    for (std::int64_t i = 0; i < m; ++i)
        result *= LaurentPoly(1) - a * LaurentPoly::variable(Variable::Q, static_cast<std::int32_t>(i));
    return result;
}

}  // namespace telescope
