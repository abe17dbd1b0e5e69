#pragma once

#include <string>

#include "exsq/chain.hpp"
#include "exsq/errors.hpp"

namespace exsq {

namespace detail {

template <class T>
T lit(long v) {
    return T(BigInt(v));
}

template <class T>
void require_nonzero(const T& v, const std::string& quantity) {
    if (v.is_zero()) throw DegenerateParameter(quantity, "vanishes at this parameter");
}

template <class T>
ChainSolution<T> finish(std::vector<ChainPair<T>> pairs) {
    ChainSolution<T> sol;
    sol.s = pairs[0].x * pairs[0].x + pairs[0].y * pairs[0].y;
    sol.pairs = std::move(pairs);
    return sol;
}

}  // namespace detail

/// Chain with n-2 identical pairs plus two more, for any n >= 3.
/// T is BigInt for a numeric t or IntPoly with t = x for the parametric family.
template <class T>
ChainSolution<T> lemma3_general(int n, const T& t) {
    using detail::lit;
    if (n < 3) throw DomainError("lemma3_general needs n >= 3, got " + std::to_string(n));
    const T t2 = t * t;
    const T t4 = t2 * t2;
    const T one = lit<T>(1);
    detail::require_nonzero(t * (t2 - one), "t(t^2-1)");
    const T quart_a = lit<T>(n - 2) * t4 + lit<T>(2 * n - 20) * t2 + lit<T>(n - 2);
    const T quart_b = lit<T>(n - 6) * t4 + lit<T>(2 * n + 4) * t2 + lit<T>(n - 6);
    detail::require_nonzero(quart_a, "(n-2)t^4+(2n-20)t^2+n-2");
    detail::require_nonzero(quart_b, "(n-6)t^4+(2n+4)t^2+n-6");

    const T tp1 = t2 + one;
    const T tm1 = t2 - one;
    const T x_rep = lit<T>(8) * t * tp1 * tm1;
    const T y_rep = lit<T>(n - 2) * tp1 * tp1 * tp1;
    std::vector<ChainPair<T>> pairs(static_cast<std::size_t>(n - 2), ChainPair<T>{x_rep, y_rep});
    pairs.push_back({tm1 * quart_a,
                     lit<T>(2) * t * (lit<T>(n + 2) * t4 + lit<T>(2 * n - 12) * t2 + lit<T>(n + 2))});
    pairs.push_back({lit<T>(2) * t * quart_b,
                     tm1 * (lit<T>(n - 2) * t4 + lit<T>(2 * n + 12) * t2 + lit<T>(n - 2))});
    return detail::finish(std::move(pairs));
}

/// Chain with m^2 identical pairs and one more; n = m^2 + 1.
template <class T>
ChainSolution<T> lemma3_special(int m, const T& t) {
    using detail::lit;
    if (m < 2) throw DomainError("lemma3_special needs m >= 2, got " + std::to_string(m));
    const long n = static_cast<long>(m) * m + 1;
    const T t2 = t * t;
    detail::require_nonzero(t, "t");
    const T last_x = lit<T>(n - 2) * t2 - lit<T>(1);
    detail::require_nonzero(last_x, "(n-2)t^2-1");
    std::vector<ChainPair<T>> pairs(static_cast<std::size_t>(n - 1),
                                    ChainPair<T>{lit<T>(2) * t, lit<T>(n - 2) * t2 + lit<T>(1)});
    pairs.push_back({last_x, lit<T>(2L * m) * t});
    return detail::finish(std::move(pairs));
}

/// Five-term start: lemma3_special(2, t) with x_3 and x_4 negated.
template <class T>
ChainSolution<T> seed_n5_simple(const T& t) {
    auto sol = lemma3_special(2, t);
    sol.pairs[2].x = -sol.pairs[2].x;
    sol.pairs[3].x = -sol.pairs[3].x;
    return sol;
}

/// Six-term start: lemma3_general(6, t) with x_3 and x_4 negated.
template <class T>
ChainSolution<T> seed_n6(const T& t) {
    auto sol = lemma3_general(6, t);
    sol.pairs[2].x = -sol.pairs[2].x;
    sol.pairs[3].x = -sol.pairs[3].x;
    return sol;
}

}  // namespace exsq
