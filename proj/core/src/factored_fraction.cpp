#include "telescope/factored_fraction.hpp"

#include <algorithm>
#include <ostream>

#include "telescope/errors.hpp"

namespace telescope {

namespace {

// Multiset difference `from \ remove`, by structural equality.
std::vector<LaurentPoly> multiset_minus(std::vector<LaurentPoly> from,
                                        std::span<const LaurentPoly> remove) {
    for (const auto& r : remove) {
        auto it = std::find(from.begin(), from.end(), r);
        if (it != from.end()) from.erase(it);
    }
    return from;
}

LaurentPoly product(std::span<const LaurentPoly> factors) {
    LaurentPoly p(1);
    for (const auto& f : factors) p *= f;
    return p;
}

}  // namespace

FactoredFraction::FactoredFraction(LaurentPoly numerator) : numerator_(std::move(numerator)) {}

FactoredFraction::FactoredFraction(LaurentPoly numerator, std::vector<LaurentPoly> denominator_factors)
    : numerator_(std::move(numerator)), factors_(std::move(denominator_factors)) {
    for (const auto& f : factors_)
        if (f.is_zero()) throw ZeroDenominatorFactor("zero denominator factor");
}

LaurentPoly FactoredFraction::denominator() const { return product(factors_); }

bool FactoredFraction::is_normalized() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(), [&](const LaurentPoly& f) {
        return f.size() > 1 && f.terms().front().exponents == Exponents{} && f.terms().front().coefficient.is_one();
    });
}

FactoredFraction FactoredFraction::normalized() const {
    if (is_normalized()) return *this;
    FactoredFraction out;
    LaurentPoly units(1);
    for (const auto& f : factors_) {
        const LaurentPoly lead = LaurentPoly::monomial(f.terms().front().coefficient,
                                                       f.terms().front().exponents);
        units *= lead;
        if (!is_unit(f)) out.factors_.push_back(div_unit(f, lead));
    }
    out.numerator_ = div_unit(numerator_, units);
    return out;
}

FactoredFraction& FactoredFraction::operator+=(const FactoredFraction& o) {
    if (!is_normalized()) *this = normalized();
    const FactoredFraction* y = &o;
    FactoredFraction scratch;
    if (!o.is_normalized()) {
        scratch = o.normalized();
        y = &scratch;
    }
    auto extra = multiset_minus(std::vector<LaurentPoly>(y->factors_.begin(), y->factors_.end()), factors_);
    if (!extra.empty()) numerator_ = numerator_ * product(extra);
    factors_.insert(factors_.end(), extra.begin(), extra.end());
    const auto missing = multiset_minus(factors_, y->factors_);
    if (missing.empty()) numerator_ += y->numerator_;
    else numerator_ += y->numerator_ * product(missing);
    return *this;
}

FactoredFraction operator+(const FactoredFraction& a, const FactoredFraction& b) {
    FactoredFraction out = a;
    out += b;
    return out;
}

FactoredFraction operator-(FactoredFraction a) {
    a.numerator_ = -std::move(a.numerator_);
    return a;
}

FactoredFraction operator-(const FactoredFraction& a, const FactoredFraction& b) { return a + (-b); }

FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b) {
    FactoredFraction out;
    out.numerator_ = a.numerator_ * b.numerator_;
    out.factors_ = a.factors_;
    out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
    return out;
}

bool frac_equal(const FactoredFraction& f, const FactoredFraction& g) {
    FactoredFraction fx;
    FactoredFraction gx;
    const FactoredFraction& x = f.is_normalized() ? f : (fx = f.normalized());
    const FactoredFraction& y = g.is_normalized() ? g : (gx = g.normalized());
    const std::vector<LaurentPoly> xf(x.denominator_factors().begin(), x.denominator_factors().end());
    const std::vector<LaurentPoly> yf(y.denominator_factors().begin(), y.denominator_factors().end());
    const auto x_only = multiset_minus(xf, yf);
    const auto y_only = multiset_minus(yf, xf);
    if (x_only.empty() && y_only.empty()) return x.numerator() == y.numerator();
    return x.numerator() * product(y_only) == y.numerator() * product(x_only);
}

BigRational evaluate(const FactoredFraction& f, const Assignment& assignment) {
    BigRational value = evaluate(f.numerator(), assignment);
    for (const auto& factor : f.denominator_factors()) {
        const BigRational d = evaluate(factor, assignment);
        if (d.is_zero()) throw EvalDivisionByZero("denominator factor " + to_string(factor) + " vanishes");
        value /= d;
    }
    return value;
}

FactoredFraction substitute(const FactoredFraction& f, const Assignment& assignment) {
    std::vector<LaurentPoly> factors;
    factors.reserve(f.denominator_factors().size());
    for (const auto& factor : f.denominator_factors()) {
        factors.push_back(substitute(factor, assignment));
        if (factors.back().is_zero())
            throw EvalDivisionByZero("denominator factor " + to_string(factor) + " vanishes");
    }
    return FactoredFraction(substitute(f.numerator(), assignment), std::move(factors));
}

FactoredFraction rescale(const FactoredFraction& f, Variable v, const BigRational& factor) {
    std::vector<LaurentPoly> factors;
    for (const auto& d : f.denominator_factors()) factors.push_back(rescale(d, v, factor));
    return FactoredFraction(rescale(f.numerator(), v, factor), std::move(factors));
}

std::string to_string(const FactoredFraction& f) {
    if (f.denominator_factors().empty()) return to_string(f.numerator());
    std::string out = "(" + to_string(f.numerator()) + ")/(";
    bool first = true;
    for (const auto& d : f.denominator_factors()) {
        if (!first) out += '*';
        out += "(" + to_string(d) + ")";
        first = false;
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const FactoredFraction& f) { return os << to_string(f); }

}  // namespace telescope
