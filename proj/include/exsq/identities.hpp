#pragma once

#include <array>
#include <utility>
#include <vector>

#include "exsq/errors.hpp"

namespace exsq {

/// One two-square representation (a, b) of a product norm.
template <class T>
struct RepresentationPair {
    T a;
    T b;
    friend bool operator==(const RepresentationPair&, const RepresentationPair&) = default;
};

/// A parameter pair (u1, u2) with norm u1^2 + u2^2.
template <class T>
struct ParamPair {
    T u1;
    T u2;
    friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

/// Three or four parameter pairs feeding chain4 or chain8.
template <class T>
struct ParameterVector {
    std::vector<ParamPair<T>> pairs;
};

template <class T>
T norm(const RepresentationPair<T>& r) {
    return r.a * r.a + r.b * r.b;
}
template <class T>
T norm(const ParamPair<T>& p) {
    return p.u1 * p.u1 + p.u2 * p.u2;
}

/// Both representations of (u1^2+u2^2)(v1^2+v2^2) as a sum of two squares.
template <class T>
std::pair<RepresentationPair<T>, RepresentationPair<T>> compose(const T& u1, const T& u2, const T& v1,
                                                                 const T& v2) {
    return {{u1 * v1 - u2 * v2, u1 * v2 + u2 * v1}, {u1 * v1 + u2 * v2, u1 * v2 - u2 * v1}};
}

/// Pair whose norm is the product of the three parameter norms.
template <class T>
RepresentationPair<T> phi(const T& f1, const T& f2, const T& g1, const T& g2, const T& h1, const T& h2) {
    const T c = f1 * g1 + f2 * g2;
    const T d = f1 * g2 - f2 * g1;
    return {c * h1 + d * h2, -d * h1 + c * h2};
}

/// Pair whose norm is the product of the four parameter norms.
template <class T>
RepresentationPair<T> psi(const T& e1, const T& e2, const T& f1, const T& f2, const T& g1, const T& g2,
                          const T& h1, const T& h2) {
    const T f1g1 = f1 * g1, f2g2 = f2 * g2, f1g2 = f1 * g2, f2g1 = f2 * g1;
    const T k1 = -e1 * f1g2 + e1 * f2g1 - e2 * f1g1 - e2 * f2g2;
    const T k2 = e1 * f1g1 + e1 * f2g2 - e2 * f1g2 + e2 * f2g1;
    const T k3 = e1 * f1g2 - e1 * f2g1 + e2 * f1g1 + e2 * f2g2;
    return {k1 * h1 + k2 * h2, k2 * h1 + k3 * h2};
}

/// Sign applied to the second component of each parameter pair, per output slot.
inline constexpr std::array<std::array<int, 3>, 4> kChain4Flips{{
    {1, 1, 1},
    {-1, 1, 1},
    {1, -1, 1},
    {1, 1, -1},
}};

inline constexpr std::array<std::array<int, 4>, 8> kChain8Flips{{
    {1, 1, 1, 1},
    {-1, 1, 1, 1},
    {1, -1, 1, 1},
    {1, 1, -1, 1},
    {1, 1, 1, -1},
    {-1, -1, 1, 1},
    {-1, 1, -1, 1},
    {-1, 1, 1, -1},
}};

namespace detail {
template <class T>
T signed_copy(const T& v, int s) {
    return s < 0 ? -v : v;
}
}  // namespace detail

/// Four pairs (a_i, b_i) sharing the norm N(p) N(q) N(r).
template <class T>
std::array<RepresentationPair<T>, 4> chain4(const ParamPair<T>& p, const ParamPair<T>& q, const ParamPair<T>& r) {
    std::array<RepresentationPair<T>, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& f = kChain4Flips[i];
        out[i] = phi(p.u1, detail::signed_copy(p.u2, f[0]), q.u1, detail::signed_copy(q.u2, f[1]), r.u1,
                     detail::signed_copy(r.u2, f[2]));
    }
    return out;
}

/// Eight pairs (a_i, b_i) sharing the norm N(p) N(q) N(r) N(s).
template <class T>
std::array<RepresentationPair<T>, 8> chain8(const ParamPair<T>& p, const ParamPair<T>& q, const ParamPair<T>& r,
                                            const ParamPair<T>& s) {
    std::array<RepresentationPair<T>, 8> out;
    for (std::size_t i = 0; i < 8; ++i) {
        const auto& f = kChain8Flips[i];
        out[i] = psi(p.u1, detail::signed_copy(p.u2, f[0]), q.u1, detail::signed_copy(q.u2, f[1]), r.u1,
                     detail::signed_copy(r.u2, f[2]), s.u1, detail::signed_copy(s.u2, f[3]));
    }
    return out;
}

template <class T>
std::array<RepresentationPair<T>, 4> chain4(const ParameterVector<T>& params) {
    if (params.pairs.size() != 3) throw ContractViolation("chain4 takes exactly three parameter pairs");
    return chain4(params.pairs[0], params.pairs[1], params.pairs[2]);
}

template <class T>
std::array<RepresentationPair<T>, 8> chain8(const ParameterVector<T>& params) {
    if (params.pairs.size() != 4) throw ContractViolation("chain8 takes exactly four parameter pairs");
    return chain8(params.pairs[0], params.pairs[1], params.pairs[2], params.pairs[3]);
}

}  // namespace exsq
