#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "exsq/errors.hpp"

namespace exsq {

/// Signed arbitrary-precision integer.
///
/// Thin value type over GMP. Division follows C++ integer semantics
/// (truncation toward zero); use floor_divmod() or divexact() when the
/// rounding mode matters.
class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : v_(static_cast<long>(v)) {}
    BigInt(long v) : v_(v) {}
    BigInt(long long v);
    BigInt(unsigned long v) : v_(v) {}
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal integer. Throws ParseError.
    static BigInt from_string(std::string_view text);

    std::string to_string() const { return v_.get_str(10); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    std::size_t bit_length() const;
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }

    const mpz_class& raw() const { return v_; }

    BigInt operator-() const { return BigInt(mpz_class(-v_)); }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    mpz_class v_;
};

BigInt abs(const BigInt& v);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);

/// a / b when b is known to divide a. Throws NotExact otherwise.
BigInt divexact(const BigInt& a, const BigInt& b);

/// Floor division: a = q*b + r with 0 <= r < |b|.
std::pair<BigInt, BigInt> floor_divmod(const BigInt& a, const BigInt& b);

/// floor(sqrt(v)) by Newton iteration. Throws DomainError for v < 0.
BigInt isqrt(const BigInt& v);

bool is_perfect_square(const BigInt& v);

/// Positive gcd of |values|. Throws DomainError when every value is zero.
BigInt vec_gcd(std::span<const BigInt> values);

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);

    /// Accepts "a" or "a/b".
    static Rational from_string(std::string_view text);
    std::string to_string() const;

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    void canonicalize();

    BigInt num_;
    BigInt den_;
};

/// Square root of a rational that is the square of a rational, else nullopt.
std::optional<Rational> exact_sqrt(const Rational& v);
std::optional<BigInt> exact_sqrt(const BigInt& v);

}  // namespace exsq
