#pragma once

#include <optional>
#include <string>

#include "exsq/polynomial.hpp"

namespace exsq {

/// Element of Q(x): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(int v) : num_(Rational(v)), den_(Rational(1)) {}
    RatFunc(const BigInt& v) : num_(Rational(v)), den_(Rational(1)) {}
    RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Sign of the leading coefficient of the numerator.
    int sign() const { return num_.is_zero() ? 0 : num_.lead().sign(); }

    /// Value at a rational point. Throws DomainError at a pole.
    Rational operator()(const Rational& at) const;

    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void canonicalize();

    Poly num_;
    Poly den_;
};

/// Square root in Q(x) when the argument is a square there.
std::optional<RatFunc> exact_sqrt(const RatFunc& f);

}  // namespace exsq
