#pragma once

#include <vector>

#include "exsq/bigint.hpp"
#include "exsq/polynomial.hpp"

namespace exsq {

template <class T>
struct ChainPair {
    T x;
    T y;
    friend bool operator==(const ChainPair&, const ChainPair&) = default;
};

/// Pairs (x_i, y_i) with x_i^2 + y_i^2 = s for every i and sum of x_i^2 = s.
/// Signs are meaningful here: they enter the transform through P.
template <class T>
struct ChainSolution {
    std::vector<ChainPair<T>> pairs;
    T s{};

    std::size_t n() const { return pairs.size(); }
    friend bool operator==(const ChainSolution&, const ChainSolution&) = default;
};

/// n squares x_i^2 such that dropping any one leaves the square certificates[i]^2.
/// Roots and certificates are reported nonnegative.
struct SquareSystem {
    std::vector<BigInt> roots;
    std::vector<BigInt> certificates;
    BigInt s;
    bool reduced = false;

    std::size_t n() const { return roots.size(); }
    friend bool operator==(const SquareSystem&, const SquareSystem&) = default;
};

// Scalar hooks so chain algorithms run over numbers and over polynomials in t.

inline BigInt content(const BigInt& v) { return abs(v); }
inline int lead_sign(const BigInt& v) { return v.sign(); }
inline int lead_sign(const IntPoly& p) { return p.is_zero() ? 0 : p.lead().sign(); }

template <class T>
T recompute_s(const std::vector<ChainPair<T>>& pairs) {
    T s{};
    for (const auto& p : pairs) s += p.x * p.x;
    return s;
}

/// Evaluates a parametric chain at t.
ChainSolution<BigInt> evaluate(const ChainSolution<IntPoly>& sol, const BigInt& t);

}  // namespace exsq
