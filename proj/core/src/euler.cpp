#include "telescope/euler.hpp"

#include <algorithm>
#include <iterator>

#include "telescope/errors.hpp"

namespace telescope {

namespace {

using Clock = std::chrono::steady_clock;

LaurentPoly expand(const Factors& fs) {
    LaurentPoly p(1);
    for (const auto& f : fs) p *= f;
    return p;
}

void require_nonzero(const Factors& fs, std::int64_t k) {
    for (const auto& f : fs)
        if (f.is_zero())
            throw ZeroDenominatorFactor("v(" + std::to_string(k) + ") is zero", k);
}

bool all_units(const Factors& fs) {
    return std::all_of(fs.begin(), fs.end(), [](const LaurentPoly& f) { return is_unit(f); });
}

// u_1...u_m / v_1...v_m with structurally equal factors cancelled.
// Non-unit factors are scaled so their first canonical term is 1; the
// scalings collect in a single monomial. Cancellations mostly hit recent
// factors, so running prefix products of the numerator are kept.
class FactorRatio {
public:
    void multiply(const Factors& fs) {
        for (const auto& f : fs) {
            if (f.is_zero()) {
                zero_ = true;
                continue;
            }
            if (is_unit(f)) {
                unit_ *= f;
                continue;
            }
            const LaurentPoly lead = leading(f);
            unit_ *= lead;
            LaurentPoly g = div_unit(f, lead);
            if (auto it = std::find(den_.begin(), den_.end(), g); it != den_.end()) {
                den_.erase(it);
            } else {
                prefix_.push_back(prefix_.empty() ? g : prefix_.back() * g);
                num_.push_back(std::move(g));
            }
        }
    }

    void divide(const Factors& fs) {
        for (const auto& f : fs) {
            if (is_unit(f)) {
                unit_ = div_unit(unit_, f);
                continue;
            }
            const LaurentPoly lead = leading(f);
            unit_ = div_unit(unit_, lead);
            LaurentPoly g = div_unit(f, lead);
            if (auto it = std::find(num_.rbegin(), num_.rend(), g); it != num_.rend()) {
                const auto i = static_cast<std::size_t>(std::distance(it, num_.rend())) - 1;
                num_.erase(num_.begin() + static_cast<std::ptrdiff_t>(i));
                prefix_.resize(i);
                for (std::size_t j = i; j < num_.size(); ++j)
                    prefix_.push_back(prefix_.empty() ? num_[j] : prefix_.back() * num_[j]);
            } else {
                den_.push_back(std::move(g));
            }
        }
    }

    FactoredFraction to_fraction() {
        if (zero_) return FactoredFraction(LaurentPoly{}, den_);
        if (prefix_.empty()) return FactoredFraction(unit_, den_);
        return FactoredFraction(unit_ * prefix_.back(), den_);
    }

private:
    static LaurentPoly leading(const LaurentPoly& f) {
        return LaurentPoly::monomial(f.terms().front().coefficient, f.terms().front().exponents);
    }

    bool zero_ = false;
    LaurentPoly unit_{1};
    Factors num_;
    Factors den_;
    // prefix_[i] is the product of num_[0..i].
    Factors prefix_;
};

VerificationReport start_report(const TelescopingScheme& s, std::int64_t n_max) {
    VerificationReport r;
    r.name = s.name();
    r.n_min = 0;
    r.n_max = n_max;
    return r;
}

void record_failure(VerificationReport& r, std::int64_t n, FactoredFraction lhs, FactoredFraction rhs) {
    r.status = Status::Fail;
    r.first_failure = Failure{n, std::move(lhs), std::move(rhs)};
}

}  // namespace

TelescopingScheme::TelescopingScheme(std::string name, FactorsFn u, FactorsFn v, int)
    : name_(std::move(name)), u_(std::move(u)), v_(std::move(v)) {}

TelescopingScheme::TelescopingScheme(std::string name, TermFn u, TermFn v)
    : TelescopingScheme(
          std::move(name), [u = std::move(u)](std::int64_t k) { return Factors{u(k)}; },
          [v = std::move(v)](std::int64_t k) { return Factors{v(k)}; }, 0) {}

TelescopingScheme TelescopingScheme::factored(std::string name, FactorsFn u, FactorsFn v) {
    return TelescopingScheme(std::move(name), std::move(u), std::move(v), 0);
}

LaurentPoly TelescopingScheme::u(std::int64_t k) const { return expand(u_(k)); }
LaurentPoly TelescopingScheme::v(std::int64_t k) const { return expand(v_(k)); }

std::string_view to_string(Status s) noexcept { return s == Status::Pass ? "pass" : "fail"; }

FactoredFraction euler_lhs(const TelescopingScheme& s, std::int64_t n) {
    std::vector<LaurentPoly> u;
    std::vector<LaurentPoly> v;
    for (std::int64_t k = 1; k <= n; ++k) {
        v.push_back(s.v(k));
        if (v.back().is_zero()) throw ZeroDenominatorFactor("v(" + std::to_string(k) + ") is zero", k);
        u.push_back(s.u(k));
    }
    LaurentPoly numerator;
    for (std::int64_t k = 1; k <= n; ++k) {
        const auto ki = static_cast<std::size_t>(k - 1);
        LaurentPoly term = u[ki] - v[ki];
        for (std::size_t i = 0; i < ki; ++i) term *= u[i];
        for (std::size_t j = ki + 1; j < v.size(); ++j) term *= v[j];
        numerator += term;
    }
    return FactoredFraction(std::move(numerator), std::move(v));
}

FactoredFraction euler_rhs(const TelescopingScheme& s, std::int64_t n) {
    std::vector<LaurentPoly> v;
    LaurentPoly pu(1);
    LaurentPoly pv(1);
    for (std::int64_t k = 1; k <= n; ++k) {
        v.push_back(s.v(k));
        if (v.back().is_zero()) throw ZeroDenominatorFactor("v(" + std::to_string(k) + ") is zero", k);
        pu *= s.u(k);
        pv *= v.back();
    }
    return FactoredFraction(pu - pv, std::move(v));
}

VerificationReport euler_verify(const TelescopingScheme& s, std::int64_t n_max) {
    return euler_verify(s, n_max, [&s](std::int64_t k) { return s.w(k); });
}

VerificationReport euler_verify(const TelescopingScheme& s, std::int64_t n_max, const TermFn& declared_w) {
    const auto started = Clock::now();
    VerificationReport report = start_report(s, n_max);

    std::vector<Factors> vf(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)) + 1);
    bool unit_mode = true;
    for (std::int64_t k = 1; k <= n_max; ++k) {
        auto& fs = vf[static_cast<std::size_t>(k)];
        fs = s.v_factors(k);
        require_nonzero(fs, k);
        unit_mode = unit_mode && all_units(fs);
    }

    if (unit_mode) {
        // Every partial product of v is a monomial; divide exactly.
        LaurentPoly pu(1);
        LaurentPoly inv_pv(1);
        LaurentPoly sum;
        for (std::int64_t n = 1; n <= n_max; ++n) {
            inv_pv *= unit_inverse(expand(vf[static_cast<std::size_t>(n)]));
            sum += declared_w(n) * pu * inv_pv;
            pu *= s.u(n);
            const LaurentPoly rhs = pu * inv_pv - LaurentPoly(1);
            if (sum != rhs) {
                record_failure(report, n, FactoredFraction(sum), FactoredFraction(rhs));
                break;
            }
        }
    } else {
        FactorRatio ratio;
        FactoredFraction sum;
        for (std::int64_t n = 1; n <= n_max; ++n) {
            ratio.divide(vf[static_cast<std::size_t>(n)]);
            sum += FactoredFraction(declared_w(n)) * ratio.to_fraction();
            ratio.multiply(s.u_factors(n));
            const FactoredFraction rhs = ratio.to_fraction() - FactoredFraction(1);
            if (!frac_equal(sum, rhs)) {
                record_failure(report, n, sum, rhs);
                break;
            }
        }
    }
    report.elapsed = Clock::now() - started;
    return report;
}

VerificationReport euler_verify_cleared(const TelescopingScheme& s, std::int64_t n_max) {
    return euler_verify_cleared(s, n_max, [&s](std::int64_t k) { return s.w(k); });
}

VerificationReport euler_verify_cleared(const TelescopingScheme& s, std::int64_t n_max,
                                        const TermFn& declared_w) {
    const auto started = Clock::now();
    VerificationReport report = start_report(s, n_max);
    // C_n = C_{n-1} v_n + w_n (u_1...u_{n-1})
    LaurentPoly cleared;
    LaurentPoly pu(1);
    LaurentPoly pv(1);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const LaurentPoly vn = s.v(n);
        cleared = cleared * vn + declared_w(n) * pu;
        pu *= s.u(n);
        pv *= vn;
        const LaurentPoly rhs = pu - pv;
        if (cleared != rhs) {
            record_failure(report, n, FactoredFraction(cleared), FactoredFraction(rhs));
            break;
        }
    }
    report.elapsed = Clock::now() - started;
    return report;
}

bool scheme_w_consistency(const TelescopingScheme& s, const TermFn& declared_w, std::int64_t k_max) {
    for (std::int64_t k = 1; k <= k_max; ++k)
        if (s.w(k) != declared_w(k)) return false;
    return true;
}

TelescopingScheme power_weighted_scheme(const RecurrenceSpec& spec) {
    auto x = make_engine(spec);
    const auto t = LaurentPoly::variable(Variable::T);
    return TelescopingScheme::factored(
        spec.name + ":power_weighted",
        [x, t](std::int64_t k) { return Factors{t, x->term(k + 1)}; },
        [x](std::int64_t k) { return Factors{x->spec().a(k - 1), x->term(k)}; });
}

TelescopingScheme alternating_scheme(const RecurrenceSpec& spec) {
    auto x = make_engine(spec);
    const auto minus_t = -LaurentPoly::variable(Variable::T);
    return TelescopingScheme::factored(
        spec.name + ":alternating",
        [x](std::int64_t k) { return Factors{x->spec().a(k), x->term(k + 1)}; },
        [x, minus_t](std::int64_t k) { return Factors{minus_t, x->spec().b(k), x->term(k)}; });
}

}  // namespace telescope
