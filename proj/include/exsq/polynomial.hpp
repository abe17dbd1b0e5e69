#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exsq/bigint.hpp"

namespace exsq {

/// Dense univariate polynomial, coefficients stored low degree first.
///
/// The coefficient vector never carries trailing zeros, so degree() is exact
/// and the zero polynomial is the empty vector. C must be default
/// constructible to its additive zero and support the ring operators.
template <class C>
class Polynomial {
public:
    using coefficient_type = C;

    Polynomial() = default;
    explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(C constant) {
        if (!(constant == C{})) c_.push_back(std::move(constant));
    }

    /// The polynomial x.
    static Polynomial x() { return monomial(C(1), 1); }
    static Polynomial monomial(C coeff, std::size_t k) {
        std::vector<C> v(k + 1);
        v[k] = std::move(coeff);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }
    const C& lead() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    /// Coefficient of x^k; zero past the degree.
    C operator[](std::size_t k) const { return k < c_.size() ? c_[k] : C{}; }

    /// Horner evaluation; T must be constructible from C.
    template <class T>
    T operator()(const T& at) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at + T(*it);
        }
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const C& s) {
        if (s == C{}) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == C{}) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
    friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == C{}) c_.pop_back();
    }

    std::vector<C> c_;
};

/// Polynomials over the rationals; the carrier for derivations.
using Poly = Polynomial<Rational>;
/// Polynomials over the integers; the carrier for parametric chain solutions.
using IntPoly = Polynomial<BigInt>;

template <class C>
Polynomial<C> pow(const Polynomial<C>& base, unsigned exponent) {
    Polynomial<C> result(C(1));
    Polynomial<C> b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

/// Quotient and remainder over a field: a = q*b + r with deg r < deg b.
template <class C>
std::pair<Polynomial<C>, Polynomial<C>> divmod(const Polynomial<C>& a, const Polynomial<C>& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<C> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial<C>{}, a};
    std::vector<C> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const C lead_inv = C(1) / b.lead();
    for (int k = a.degree(); k >= db; --k) {
        const C factor = rem[static_cast<std::size_t>(k)] * lead_inv;
        if (factor == C{}) continue;
        quo[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial<C>(std::move(quo)), Polynomial<C>(std::move(rem))};
}

// --- integer polynomials -----------------------------------------------------

/// gcd of the coefficients (0 for the zero polynomial).
BigInt content(const IntPoly& p);
/// p / content(p) with positive leading coefficient; zero stays zero.
IntPoly primitive_part(const IntPoly& p);
IntPoly divexact(const IntPoly& p, const BigInt& d);
/// Exact polynomial quotient; throws NotExact when b does not divide a over Z.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

Poly to_rational(const IntPoly& p);
/// Splits p = scale * q with q a primitive integer polynomial, lc(q) > 0.
std::pair<IntPoly, Rational> clear_denominators(const Poly& p);
/// Converts when every coefficient is an integer, else nullopt.
std::optional<IntPoly> to_integer(const Poly& p);

// --- rational polynomials ----------------------------------------------------

/// Monic gcd (zero only when both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);
Poly make_monic(const Poly& p);
/// g with g*g == p and lc(g) > 0, if p is a square in Q[x].
std::optional<Poly> poly_sqrt(const Poly& p);
std::optional<IntPoly> poly_sqrt(const IntPoly& p);

std::string to_string(const Poly& p, const std::string& var = "x");
std::string to_string(const IntPoly& p, const std::string& var = "x");

}  // namespace exsq
