#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace telescope {

/**
 * Exact rational number.
 *
 * Always canonical: the denominator is positive, numerator and
 * denominator are coprime, and zero is 0/1. Values whose numerator and
 * denominator fit in 63 bits are held inline; larger ones in a GMP mpq.
 */
class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    BigRational(std::int64_t num, std::int64_t den);
    explicit BigRational(const mpz_class& n);
    explicit BigRational(mpq_class q);

    BigRational(const BigRational& o);
    BigRational(BigRational&&) noexcept = default;
    BigRational& operator=(const BigRational& o);
    BigRational& operator=(BigRational&&) noexcept = default;
    ~BigRational() = default;

    /// Parses `n` or `n/d` (optional leading '-').
    static BigRational parse(std::string_view text);
    static BigRational from_int128(__int128 v);

    mpq_class value() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    /// The value as an int64 when it is an integer that fits.
    std::optional<std::int64_t> to_int64() const noexcept;

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept;
    int sign() const noexcept;

    BigRational abs() const { return sign() < 0 ? -*this : *this; }
    BigRational inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    BigRational pow(std::int64_t e) const;

    std::string to_string() const;

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);
    void negate() noexcept;

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(BigRational a) {
        a.negate();
        return a;
    }

    friend bool operator==(const BigRational& a, const BigRational& b);
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

private:
    static BigRational from_parts(__int128 num, __int128 den);
    static BigRational from_mpq(mpq_class q);

    // Inline form, used iff big_ is null; num_ is never INT64_MIN.
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}  // namespace telescope
