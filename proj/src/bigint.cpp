#include "exsq/bigint.hpp"

#include <cctype>
#include <climits>
#include <ostream>

namespace exsq {

BigInt::BigInt(long long v) {
    if (v >= LONG_MIN && v <= LONG_MAX) {
        v_ = static_cast<long>(v);
    } else {
        v_ = mpz_class(std::to_string(v), 10);
    }
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = text.size();
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    std::string s(text.substr(i, j - i));
    std::size_t k = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) k = 1;
    if (k == s.size()) throw ParseError("not an integer: '" + std::string(text) + "'");
    for (std::size_t m = k; m < s.size(); ++m) {
        if (!std::isdigit(static_cast<unsigned char>(s[m]))) {
            throw ParseError("not an integer: '" + std::string(text) + "'");
        }
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(mpz_class(s, 10));
}

std::size_t BigInt::bit_length() const {
    if (is_zero()) return 0;
    return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

BigInt& BigInt::operator/=(const BigInt& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt abs(const BigInt& v) { return v.sign() < 0 ? -v : v; }

BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(g));
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
    return BigInt(std::move(r));
}

BigInt divexact(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t()) == 0) {
        throw NotExact(a.to_string() + " is not divisible by " + b.to_string());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(q));
}

std::pair<BigInt, BigInt> floor_divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    BigInt qq(std::move(q)), rr(std::move(r));
    // mpz_fdiv gives r with the sign of b; normalize to 0 <= r < |b|.
    if (rr.sign() < 0) {
        rr += abs(b);
        qq -= BigInt(b.sign());
    }
    return {qq, rr};
}

BigInt isqrt(const BigInt& v) {
    if (v.sign() < 0) throw DomainError("isqrt of negative value " + v.to_string());
    if (v.is_zero()) return BigInt(0);
    // Start above the root: 2^ceil(bits/2) > sqrt(v). The Newton sequence then
    // decreases monotonically until it reaches floor(sqrt(v)).
    const std::size_t bits = v.bit_length();
    BigInt x = pow(BigInt(2), static_cast<unsigned long>((bits + 1) / 2));
    for (;;) {
        BigInt y = (x + v / x) / BigInt(2);
        if (y >= x) break;
        x = std::move(y);
    }
    // Correction step; a no-op unless the loop stopped one off.
    while (x * x > v) x -= BigInt(1);
    while ((x + BigInt(1)) * (x + BigInt(1)) <= v) x += BigInt(1);
    return x;
}

bool is_perfect_square(const BigInt& v) {
    if (v.sign() < 0) return false;
    // Squares mod 16 are {0,1,4,9}; cheap rejection before the exact test.
    const unsigned long low = mpz_fdiv_ui(v.raw().get_mpz_t(), 16);
    if (low != 0 && low != 1 && low != 4 && low != 9) return false;
    const BigInt r = isqrt(v);
    return r * r == v;
}

BigInt vec_gcd(std::span<const BigInt> values) {
    BigInt g(0);
    for (const auto& v : values) {
        g = gcd(g, v);
        if (g == BigInt(1)) break;
    }
    if (g.is_zero()) throw DomainError("gcd of an all-zero list");
    return g;
}

std::optional<BigInt> exact_sqrt(const BigInt& v) {
    if (!is_perfect_square(v)) return std::nullopt;
    return isqrt(v);
}

// ---------------------------------------------------------------------------

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational with zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    const BigInt g = gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(text));
    BigInt den = BigInt::from_string(text.substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(BigInt::from_string(text.substr(0, slash)), std::move(den));
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    canonicalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    // Cross-cancel first to keep the operands small.
    const BigInt g1 = gcd(num_, o.den_);
    const BigInt g2 = gcd(o.num_, den_);
    if (num_.is_zero() || o.num_.is_zero()) {
        num_ = BigInt(0);
        den_ = BigInt(1);
        return *this;
    }
    num_ = divexact(num_, g1) * divexact(o.num_, g2);
    den_ = divexact(den_, g2) * divexact(o.den_, g1);
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

std::optional<Rational> exact_sqrt(const Rational& v) {
    auto n = exact_sqrt(v.num());
    if (!n) return std::nullopt;
    auto d = exact_sqrt(v.den());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace exsq
