#include "telescope/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "telescope/errors.hpp"

namespace telescope {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v >= -static_cast<__int128>(kMax) && v <= kMax; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        const unsigned __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t magnitude(std::int64_t v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : v; }

mpz_class mpz_from(__int128 v) {
    const bool negative = v < 0;
    const unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class z(static_cast<unsigned long>(mag >> 64));
    z <<= 64;
    z += mpz_class(static_cast<unsigned long>(mag));
    if (negative) z = -z;
    return z;
}

}  // namespace

BigRational BigRational::from_parts(__int128 num, __int128 den) {
    if (den == 0) throw EvalDivisionByZero("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const unsigned __int128 mag = num < 0 ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
    const unsigned __int128 g = gcd128(mag, static_cast<unsigned __int128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    BigRational r;
    if (fits(num) && fits(den)) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
    } else {
        r.big_ = std::make_unique<mpq_class>(mpz_from(num), mpz_from(den));
    }
    return r;
}

BigRational BigRational::from_mpq(mpq_class q) {
    BigRational r;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        r.num_ = n.get_si();
        r.den_ = d.get_si();
    } else {
        r.big_ = std::make_unique<mpq_class>(std::move(q));
    }
    return r;
}

BigRational::BigRational(std::int64_t n) : num_(n) {
    if (n == std::numeric_limits<std::int64_t>::min()) {
        num_ = 0;
        big_ = std::make_unique<mpq_class>(mpz_from(n));
    }
}

BigRational::BigRational(std::int64_t num, std::int64_t den) { *this = from_parts(num, den); }

BigRational::BigRational(const mpz_class& n) { *this = from_mpq(mpq_class(n)); }

BigRational::BigRational(mpq_class q) {
    if (q.get_den() == 0) throw EvalDivisionByZero("rational with zero denominator");
    q.canonicalize();
    *this = from_mpq(std::move(q));
}

BigRational::BigRational(const BigRational& o)
    : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}

BigRational& BigRational::operator=(const BigRational& o) {
    if (this != &o) {
        num_ = o.num_;
        den_ = o.den_;
        big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
}

BigRational BigRational::parse(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                  : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    return BigRational(mpq_class(n, d));
}

BigRational BigRational::from_int128(__int128 v) { return from_parts(v, 1); }

mpq_class BigRational::value() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class BigRational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class BigRational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::optional<std::int64_t> BigRational::to_int64() const noexcept {
    if (big_ || den_ != 1) return std::nullopt;
    return num_;
}

bool BigRational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

int BigRational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw EvalDivisionByZero("inverse of zero");
    if (big_) return from_mpq(mpq_class(1 / *big_));
    BigRational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

BigRational BigRational::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    const mpq_class q = value();
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return from_mpq(mpq_class(num, den));
}

std::string BigRational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

BigRational& BigRational::operator+=(const BigRational& o) {
    if (big_ || o.big_) return *this = from_mpq(value() + o.value());
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t s = 0;
        if (!__builtin_add_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
            num_ = s;
            return *this;
        }
    }
    const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    return *this = from_parts(n, static_cast<__int128>(den_) * o.den_);
}

BigRational& BigRational::operator-=(const BigRational& o) {
    if (big_ || o.big_) return *this = from_mpq(value() - o.value());
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t s = 0;
        if (!__builtin_sub_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
            num_ = s;
            return *this;
        }
    }
    const __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    return *this = from_parts(n, static_cast<__int128>(den_) * o.den_);
}

BigRational& BigRational::operator*=(const BigRational& o) {
    if (big_ || o.big_) return *this = from_mpq(value() * o.value());
    if (num_ == 0 || o.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t p = 0;
        if (!__builtin_mul_overflow(num_, o.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
            num_ = p;
            return *this;
        }
    }
    // Cross-cancel, then multiply.
    const auto g1 = static_cast<std::int64_t>(gcd64(magnitude(num_), static_cast<std::uint64_t>(o.den_)));
    const auto g2 = static_cast<std::int64_t>(gcd64(magnitude(o.num_), static_cast<std::uint64_t>(den_)));
    const __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    const __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        return *this;
    }
    big_ = std::make_unique<mpq_class>(mpz_from(n), mpz_from(d));
    num_ = 0;
    den_ = 1;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw EvalDivisionByZero("rational division by zero");
    return *this *= o.inverse();
}

void BigRational::negate() noexcept {
    if (big_) mpq_neg(big_->get_mpq_t(), big_->get_mpq_t());
    else num_ = -num_;
}

bool operator==(const BigRational& a, const BigRational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = 0;
    if (!a.big_ && !b.big_) {
        const __int128 l = static_cast<__int128>(a.num_) * b.den_;
        const __int128 r = static_cast<__int128>(b.num_) * a.den_;
        c = (l > r) - (l < r);
    } else {
        c = cmp(a.value(), b.value());
    }
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

}  // namespace telescope
