#include <doctest.h>

#include <random>

#include "exsq/bigint.hpp"
#include "exsq/identities.hpp"

using exsq::BigInt;
using Pair = exsq::ParamPair<BigInt>;
using Rep = exsq::RepresentationPair<BigInt>;

namespace {

BigInt B(long v) { return BigInt(v); }
Pair pp(long a, long b) { return {B(a), B(b)}; }

Pair random_pair(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    Pair p{B(d(rng)), B(d(rng))};
    if (p.u1.is_zero() && p.u2.is_zero()) p.u1 = B(1);
    return p;
}

}  // namespace

TEST_CASE("compose examples") {
    const BigInt v1 = B(7), v2 = B(-3);
    const auto [a, b] = exsq::compose(B(1), B(0), v1, v2);
    CHECK(a == Rep{v1, v2});
    CHECK(b == Rep{v1, v2});
    const auto [c, d] = exsq::compose(B(1), B(2), B(2), B(1));
    CHECK(c == Rep{B(0), B(5)});
    CHECK(d == Rep{B(4), B(-3)});
    CHECK(exsq::norm(d) == B(25));
    const auto [e, f] = exsq::compose(B(2), B(3), B(1), B(5));
    CHECK(e == Rep{B(-13), B(13)});
    CHECK(f == Rep{B(17), B(7)});
    CHECK(exsq::norm(e) == B(338));
    CHECK(exsq::norm(f) == B(338));
}

TEST_CASE("compose preserves the product norm") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const Pair u = random_pair(rng), v = random_pair(rng);
        const auto [a, b] = exsq::compose(u.u1, u.u2, v.u1, v.u2);
        CHECK(exsq::norm(a) == exsq::norm(u) * exsq::norm(v));
        CHECK(exsq::norm(b) == exsq::norm(u) * exsq::norm(v));
    }
}

TEST_CASE("phi examples") {
    CHECK(exsq::phi(B(1), B(0), B(1), B(0), B(1), B(0)) == Rep{B(1), B(0)});
    CHECK(exsq::norm(exsq::phi(B(1), B(2), B(3), B(4), B(5), B(6))) == B(7625));
    const auto r = exsq::phi(B(1), B(-1), B(1), B(1), B(1), B(1));
    CHECK(r == Rep{B(2), B(-2)});
    CHECK(exsq::norm(r) == B(8));
}

TEST_CASE("psi examples") {
    const BigInt one = B(1), zero = B(0);
    CHECK(exsq::norm(exsq::psi(one, zero, one, zero, one, zero, one, zero)) == one);
    CHECK(exsq::norm(exsq::psi(one, one, one, one, one, one, one, one)) == B(16));
    CHECK(exsq::norm(exsq::psi(one, B(2), one, B(2), one, B(2), one, B(2))) == B(625));
}

TEST_CASE("chain4 examples") {
    for (const auto& r : exsq::chain4(pp(1, 0), pp(1, 0), pp(1, 0))) CHECK(r == Rep{B(1), B(0)});
    for (const auto& r : exsq::chain4(pp(1, 2), pp(1, 2), pp(1, 2))) CHECK(exsq::norm(r) == B(125));
    for (const auto& r : exsq::chain4(pp(2, 1), pp(3, 2), pp(4, 1))) CHECK(exsq::norm(r) == B(1105));
    CHECK_THROWS_AS(exsq::chain4(exsq::ParameterVector<BigInt>{{pp(1, 2)}}), exsq::ContractViolation);
}

TEST_CASE("chain8 examples") {
    // psi maps four unit pairs to (0, 1): the first component has no e1 f1 g1 h1 term.
    for (const auto& r : exsq::chain8(pp(1, 0), pp(1, 0), pp(1, 0), pp(1, 0))) CHECK(r == Rep{B(0), B(1)});
    for (const auto& r : exsq::chain8(pp(1, 2), pp(1, 2), pp(1, 2), pp(1, 2))) CHECK(exsq::norm(r) == B(625));
    for (const auto& r : exsq::chain8(pp(1, 1), pp(2, 1), pp(3, 1), pp(4, 1))) CHECK(exsq::norm(r) == B(1700));
}

TEST_CASE("chain outputs share the product norm for random parameters") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 300; ++i) {
        const Pair p = random_pair(rng), q = random_pair(rng), r = random_pair(rng), s = random_pair(rng);
        const BigInt n3 = exsq::norm(p) * exsq::norm(q) * exsq::norm(r);
        for (const auto& rep : exsq::chain4(p, q, r)) CHECK(exsq::norm(rep) == n3);
        const BigInt n4 = n3 * exsq::norm(s);
        for (const auto& rep : exsq::chain8(p, q, r, s)) CHECK(exsq::norm(rep) == n4);
    }
}

TEST_CASE("chain slots equal phi and psi at the sign-flipped arguments") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 50; ++i) {
        const Pair p = random_pair(rng), q = random_pair(rng), r = random_pair(rng), s = random_pair(rng);
        const auto c4 = exsq::chain4(p, q, r);
        CHECK(c4[0] == exsq::phi(p.u1, p.u2, q.u1, q.u2, r.u1, r.u2));
        CHECK(c4[1] == exsq::phi(p.u1, -p.u2, q.u1, q.u2, r.u1, r.u2));
        CHECK(c4[2] == exsq::phi(p.u1, p.u2, q.u1, -q.u2, r.u1, r.u2));
        CHECK(c4[3] == exsq::phi(p.u1, p.u2, q.u1, q.u2, r.u1, -r.u2));
        const auto c8 = exsq::chain8(p, q, r, s);
        CHECK(c8[0] == exsq::psi(p.u1, p.u2, q.u1, q.u2, r.u1, r.u2, s.u1, s.u2));
        CHECK(c8[4] == exsq::psi(p.u1, p.u2, q.u1, q.u2, r.u1, r.u2, s.u1, -s.u2));
        CHECK(c8[5] == exsq::psi(p.u1, -p.u2, q.u1, -q.u2, r.u1, r.u2, s.u1, s.u2));
        CHECK(c8[7] == exsq::psi(p.u1, -p.u2, q.u1, q.u2, r.u1, r.u2, s.u1, -s.u2));
    }
}
