#include "exsq/ratfunc.hpp"

namespace exsq {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    const Rational lead = den_.lead();
    if (lead != Rational(1)) {
        const Rational inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFunc::operator()(const Rational& at) const {
    const Rational d = den_(at);
    if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
    return num_(at) / d;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.degree() == 0) {
            if (num_.is_zero()) den_ = Poly(Rational(1));
            return *this;
        }
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        num_ = Poly{};
        den_ = Poly(Rational(1));
        return *this;
    }
    if (is_polynomial() && o.is_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Both operands are reduced, so only the cross pairs can share factors.
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.degree() > 0 ? divmod(num_, g1).first : num_;
    Poly d2 = g1.degree() > 0 ? divmod(o.den_, g1).first : o.den_;
    Poly n2 = g2.degree() > 0 ? divmod(o.num_, g2).first : o.num_;
    Poly d1 = g2.degree() > 0 ? divmod(den_, g2).first : den_;
    num_ = n1 * n2;
    den_ = d1 * d2;
    const Rational lead = den_.lead();
    if (lead != Rational(1)) {
        const Rational inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return exsq::to_string(num_, var);
    return "(" + exsq::to_string(num_, var) + ")/(" + exsq::to_string(den_, var) + ")";
}

std::optional<RatFunc> exact_sqrt(const RatFunc& f) {
    if (f.is_zero()) return RatFunc{};
    auto n = poly_sqrt(f.num());
    if (!n) return std::nullopt;
    auto d = poly_sqrt(f.den());
    if (!d) return std::nullopt;
    return RatFunc(*n, *d);
}

}  // namespace exsq
