#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exsq/bigint.hpp"
#include "exsq/polynomial.hpp"

namespace exsq {

/// Homogeneous bivariate form c_0 u^n + c_1 u^(n-1) v + ... + c_n v^n, stored
/// as the coefficient tuple (c_0, ..., c_n). Leading zeros are kept, since the
/// tuple length fixes the degree.
class HomogPoly {
public:
    HomogPoly() = default;
    explicit HomogPoly(std::vector<BigInt> coeffs);

    /// Parses "(c_0, c_1, ..., c_n)". Throws ParseError.
    static HomogPoly parse(std::string_view text);
    std::string to_string() const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    template <class T>
    T operator()(const T& u, const T& v) const {
        // Horner in u with the v powers carried alongside.
        T acc{};
        T vpow(1);
        std::vector<T> vp;
        vp.reserve(c_.size());
        for (std::size_t j = 0; j < c_.size(); ++j) {
            vp.push_back(vpow);
            vpow = vpow * v;
        }
        for (std::size_t j = 0; j < c_.size(); ++j) {
            acc = acc * u + T(c_[j]) * vp[j];
        }
        return acc;
    }

    friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

private:
    std::vector<BigInt> c_;
};

/// The polynomial f(x) = p(x, 1); coefficient of x^(n-j) is c_j.
IntPoly dehomogenize(const HomogPoly& p);
/// Inverse of dehomogenize for a target degree n >= deg p. Throws DomainError
/// on a degree mismatch or a non-integral coefficient.
HomogPoly homogenize(const IntPoly& p, int n);
HomogPoly homogenize(const Poly& p, int n);

}  // namespace exsq
