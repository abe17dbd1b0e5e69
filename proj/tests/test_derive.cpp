#include <doctest.h>

#include <random>

#include "exsq/derive.hpp"
#include "exsq/verify.hpp"
#include "goldens.hpp"

using exsq::BigInt;
using exsq::Poly;
using exsq::RatFunc;
using exsq::Rational;
using R = Rational;

namespace {

R random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 9);
    R v(BigInt(num(rng)), BigInt(den(rng)));
    return v.is_zero() ? R(BigInt(1), BigInt(3)) : v;
}

exsq::ParameterVector<R> random_params(std::mt19937_64& rng, std::size_t k) {
    exsq::ParameterVector<R> v;
    for (std::size_t i = 0; i < k; ++i) v.pairs.push_back({random_rational(rng), random_rational(rng)});
    return v;
}

R sq(const R& v) { return v * v; }

struct Reference {
    R A, B, C;
};

/// The reference five-term condition, quadratic in (r1, r2).
Reference reference_n5(const R& p1, const R& p2, const R& q1, const R& q2) {
    return {(R(4) * p1 * p1 - p2 * p2) * q1 * q1 - R(2) * p1 * p2 * q1 * q2 - (p1 * p1 - R(4) * p2 * p2) * q2 * q2,
            -(R(2) * p1 * p2 * q1 * q1 - (R(6) * p1 * p1 - R(6) * p2 * p2) * q1 * q2 - R(2) * p1 * p2 * q2 * q2),
            -((p1 * p1 - R(4) * p2 * p2) * q1 * q1 - R(2) * p1 * p2 * q1 * q2 - (R(4) * p1 * p1 - p2 * p2) * q2 * q2)};
}

/// The reference six-term condition, quadratic in (s1, s2).
Reference reference_n6(const R& p1, const R& p2, const R& q1, const R& q2, const R& r1, const R& r2) {
    const R u = p1 * q2 - p2 * q1, w = p1 * q1 + p2 * q2;
    const R m = (p1 * q2 + p2 * q1) * (p1 * q1 - p2 * q2);
    return {R(4) * sq(u) * r1 * r1 + R(4) * sq(w) * r2 * r2,
            R(4) * m * r1 * r1 +
                R(4) * (p1 * q1 + p1 * q2 + p2 * q1 - p2 * q2) * (p1 * q1 - p1 * q2 - p2 * q1 - p2 * q2) * r1 * r2 -
                R(4) * m * r2 * r2,
            R(4) * sq(w) * r1 * r1 + R(4) * sq(u) * r2 * r2};
}

/// The reference seven-term condition, quadratic in (s1, s2).
Reference reference_n7(const R& p1, const R& p2, const R& q1, const R& q2, const R& r1, const R& r2) {
    const R u = p1 * q2 - p2 * q1, w = p1 * q1 + p2 * q2;
    const R k = R(-6) * p1 * p1 * q1 * q2 - R(2) * p1 * p2 * q1 * q1 + R(2) * p1 * p2 * q2 * q2 + R(6) * p2 * p2 * q1 * q2;
    const R mid = R(-2) * p1 * p1 * q1 * q1 + R(2) * p1 * p1 * q2 * q2 + R(24) * p1 * p2 * q1 * q2 +
                  R(2) * p2 * p2 * q1 * q1 - R(2) * p2 * p2 * q2 * q2;
    return {R(5) * sq(u) * r1 * r1 + k * r1 * r2 + R(5) * sq(w) * r2 * r2,
            R(-2) * w * u * r1 * r1 + mid * r1 * r2 + R(2) * w * u * r2 * r2,
            R(5) * sq(w) * r1 * r1 - k * r1 * r2 + R(5) * sq(u) * r2 * r2};
}

/// The reference eight-term condition, quadratic in (s1, s2).
Reference reference_n8(const R& p1, const R& p2, const R& q1, const R& q2, const R& r1, const R& r2) {
    const R u = p1 * q2 - p2 * q1, w = p1 * q1 + p2 * q2;
    const R k = R(8) * q1 * q2 * (p1 - p2) * (p1 + p2);
    return {R(6) * sq(u) * r1 * r1 - k * r1 * r2 + R(6) * sq(w) * r2 * r2,
            R(-4) * (p1 * q1 + p1 * q2 + p2 * q1 - p2 * q2) * (p1 * q1 - p1 * q2 - p2 * q1 - p2 * q2) * r1 * r2,
            R(6) * sq(w) * r1 * r1 + k * r1 * r2 + R(6) * sq(u) * r2 * r2};
}

void check_negated(const exsq::QuadraticForm<R>& f, const Reference& p) {
    CHECK(f.A == -p.A);
    CHECK(f.B == -p.B);
    CHECK(f.C == -p.C);
}

/// Reference discriminant of the five-term condition in r1, for r2 = 1.
R reference_n5_discriminant(const R& p1, const R& p2, const R& q1, const R& q2) {
    const R e = q1 * q1 - q2 * q2;
    const R p1_2 = p1 * p1, p2_2 = p2 * p2;
    return R(16) * (sq(e) * p1_2 * p1_2 - R(4) * q1 * q2 * e * p1_2 * p1 * p2 -
                    (R(4) * q1 * q1 * q1 * q1 + R(4) * q2 * q2 * q2 * q2) * p1_2 * p2_2 +
                    R(4) * q1 * q2 * e * p1 * p2_2 * p2 + sq(e) * p2_2 * p2_2);
}

}  // namespace

TEST_CASE("assignments have the expected shapes") {
    CHECK(exsq::assignment_n5().n() == 5);
    CHECK(exsq::assignment_n5().chain_size == 4);
    CHECK(exsq::assignment_n6().n() == 6);
    CHECK(exsq::assignment_n7().n() == 7);
    CHECK(exsq::assignment_n8().n() == 8);
    CHECK(exsq::assignment_n8().chain_size == 8);
}

TEST_CASE("residuals equal the reference quadratic conditions at random points") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 30; ++i) {
        const auto v3 = random_params(rng, 3);
        const auto& p = v3.pairs[0];
        const auto& q = v3.pairs[1];
        check_negated(exsq::residual(exsq::assignment_n5(), 2, v3), reference_n5(p.u1, p.u2, q.u1, q.u2));

        const auto v4 = random_params(rng, 4);
        const auto& a = v4.pairs[0];
        const auto& b = v4.pairs[1];
        const auto& c = v4.pairs[2];
        check_negated(exsq::residual(exsq::assignment_n6(), 3, v4), reference_n6(a.u1, a.u2, b.u1, b.u2, c.u1, c.u2));
        check_negated(exsq::residual(exsq::assignment_n7(), 3, v4), reference_n7(a.u1, a.u2, b.u1, b.u2, c.u1, c.u2));
        check_negated(exsq::residual(exsq::assignment_n8(), 3, v4), reference_n8(a.u1, a.u2, b.u1, b.u2, c.u1, c.u2));
    }
}

TEST_CASE("discriminant examples") {
    const exsq::QuadraticForm<R> f{R(1), R(0), R(-1)};
    CHECK(exsq::discriminant(f) == R(4));
    CHECK_THROWS_AS(exsq::discriminant(exsq::QuadraticForm<R>{R(0), R(1), R(1)}), exsq::DomainError);
    std::mt19937_64 rng(62);
    for (int i = 0; i < 20; ++i) {
        auto v = random_params(rng, 3);
        v.pairs[1] = {random_rational(rng), R(1)};
        const auto& p = v.pairs[0];
        const auto& q = v.pairs[1];
        CHECK(exsq::discriminant(exsq::residual(exsq::assignment_n5(), 2, v)) ==
              reference_n5_discriminant(p.u1, p.u2, q.u1, q.u2));
    }
}

TEST_CASE("fermat_square examples") {
    using Kind = exsq::FermatOutcome<R>::Kind;
    const Poly sqr(std::vector<R>{R(1), R(0), R(2), R(0), R(1)});
    CHECK(exsq::fermat_square(sqr).kind == Kind::IdenticallySquare);
    CHECK(exsq::fermat_square(Poly(std::vector<R>{R(1), R(0), R(0), R(0), R(2)})).kind == Kind::Unsupported);

    const Poly planted(std::vector<R>{R(1), R(2), R(1), R(2), R(1)});
    const auto o = exsq::fermat_square(planted);
    REQUIRE(o.kind == Kind::Point);
    CHECK(planted(o.w) == o.root * o.root);
    CHECK(exsq::exact_sqrt(planted(o.w)).has_value());

    // The discriminant quartic in w = p2/p1 gives the reference p at each sample q.
    for (R q1 : {R(2), R(BigInt(3), BigInt(5)), R(-7), R(BigInt(11), BigInt(4))}) {
        const R e = q1 * q1 - R(1);
        const Poly quartic(std::vector<R>{R(16) * e * e, R(-64) * q1 * e, R(-64) * (q1 * q1 * q1 * q1 + R(1)),
                                          R(64) * q1 * e, R(16) * e * e});
        const auto f = exsq::fermat_square(quartic);
        REQUIRE(f.kind == Kind::Point);
        const R p1 = R(4) * q1 * e;
        const R p2 = R(3) * (q1 * q1 * q1 * q1 + R(1));
        CHECK(f.w == p2 / p1);
        CHECK(exsq::exact_sqrt(quartic(f.w)).has_value());
    }
}

TEST_CASE("solve_quadratic and vieta_second_root examples") {
    const exsq::QuadraticForm<R> f{R(1), R(0), R(-1)};
    const auto roots = exsq::solve_quadratic(f);
    CHECK(roots[0].u1 / roots[0].u2 == R(1));
    CHECK(roots[1].u1 / roots[1].u2 == R(-1));
    const auto other = exsq::vieta_second_root(f, {R(1), R(1)});
    CHECK(other.u1 / other.u2 == R(-1));
    CHECK_THROWS_AS(exsq::vieta_second_root(f, {R(2), R(1)}), exsq::ContractViolation);
    CHECK_THROWS_AS(exsq::solve_quadratic(exsq::QuadraticForm<R>{R(1), R(0), R(-2)}), exsq::DomainError);
    const auto lin = exsq::solve_quadratic(exsq::QuadraticForm<R>{R(0), R(2), R(3)});
    CHECK(lin[0].u2.is_zero());
    CHECK(f(lin[0].u1, lin[0].u2) != R(0));
    CHECK(exsq::QuadraticForm<R>{R(0), R(2), R(3)}(lin[1].u1, lin[1].u2) == R(0));
}

TEST_CASE("quadratic roots make the residual vanish") {
    // Closed forms for r and s with q = p leave q = p as a root in q; Vieta gives the other.
    const auto& pub = exsq::published_forms();
    std::mt19937_64 rng(63);
    for (int n = 6; n <= 8; ++n) {
        const auto a = n == 6 ? exsq::assignment_n6() : n == 7 ? exsq::assignment_n7() : exsq::assignment_n8();
        const std::string pre = "n" + std::to_string(n) + ".";
        for (int i = 0; i < 20; ++i) {
            const exsq::ParamPair<R> p{random_rational(rng), R(1)};
            auto at = [&](const std::string& name) {
                const auto& f = pub.at(pre + name);
                return exsq::ParamPair<R>{f.first(p.u1, p.u2), f.second(p.u1, p.u2)};
            };
            exsq::ParameterVector<R> v{{p, p, at("r"), at("s")}};
            CHECK(exsq::residual_value(a, v) == R(0));
            const auto fq = exsq::residual(a, 1, v);
            const auto second = exsq::vieta_second_root(fq, p);
            v.pairs[1] = second;
            CHECK(exsq::residual_value(a, v) == R(0));
            const auto reference_q = at("q");
            CHECK(second.u1 * reference_q.u2 == second.u2 * reference_q.u1);
        }
    }
    // Both roots from solve_quadratic on the five-term condition vanish the residual.
    for (int i = 0; i < 20; ++i) {
        const exsq::ParamPair<R> q{random_rational(rng), R(1)};
        const auto& pf = pub.at("n5.p");
        exsq::ParameterVector<R> v{{{pf.first(q.u1, q.u2), pf.second(q.u1, q.u2)}, q, {R(1), R(0)}}};
        for (const auto& root : exsq::solve_quadratic(exsq::residual(exsq::assignment_n5(), 2, v))) {
            v.pairs[2] = root;
            CHECK(exsq::residual_value(exsq::assignment_n5(), v) == R(0));
        }
    }
}

TEST_CASE("derivations find the reference closed forms") {
    const auto& pub = exsq::published_forms();
    const std::vector<std::pair<int, std::vector<std::string>>> wanted{
        {5, {"p", "r"}}, {6, {"r", "s", "q"}}, {7, {"r", "s", "q"}}, {8, {"r", "s", "q"}}};
    for (const auto& [n, names] : wanted) {
        const auto d = exsq::derive(n);
        CHECK(d.n == n);
        CHECK_FALSE(d.branches.empty());
        for (const auto& name : names) {
            const std::string key = "n" + std::to_string(n) + "." + name;
            REQUIRE(pub.count(key) == 1);
            bool found = false;
            for (const auto& cand : d.candidates(name)) found = found || exsq::projectively_equal(cand, pub.at(key), 30);
            CHECK_MESSAGE(found, key);
        }
    }
}

TEST_CASE("normalize_projective on numbers") {
    const auto p = exsq::normalize_projective(exsq::ProjPoint<BigInt>{BigInt(-6), BigInt(4)});
    CHECK(p.u1 == BigInt(3));
    CHECK(p.u2 == BigInt(-2));
    const auto z = exsq::normalize_projective(exsq::ProjPoint<BigInt>{BigInt(0), BigInt(-5)});
    CHECK(z.u2 == BigInt(1));
}

TEST_CASE("pipeline goldens") {
    CHECK(goldens::sorted_abs(exsq::pipeline_n5(BigInt(1), BigInt(2)).roots) ==
          goldens::sorted_values(goldens::kN5Method2));
    CHECK(goldens::sorted_abs(exsq::pipeline_n6(BigInt(1), BigInt(2)).roots) ==
          goldens::sorted_values(goldens::kN6Method2));
    CHECK(goldens::sorted_abs(exsq::pipeline_n7(BigInt(2), BigInt(1)).roots) == goldens::sorted_values(goldens::kN7));
    CHECK(goldens::sorted_abs(exsq::pipeline_n8(BigInt(2), BigInt(1)).roots) == goldens::sorted_values(goldens::kN8));
}

TEST_CASE("pipeline chains satisfy both conditions before any transform") {
    for (int n = 5; n <= 8; ++n) {
        for (long a = 1; a <= 5; ++a) {
            for (long b = 1; b <= 5; ++b) {
                if (exsq::gcd(BigInt(a), BigInt(b)) != BigInt(1) || (n >= 6 && a == b)) continue;
                CHECK(exsq::validate_chain(exsq::method2_chain(n, BigInt(a), BigInt(b))).ok);
            }
        }
    }
}

TEST_CASE("pipelines reject bad parameters") {
    CHECK_THROWS_AS(exsq::pipeline_n5(BigInt(2), BigInt(4)), exsq::DomainError);
    CHECK_THROWS_AS(exsq::pipeline_n6(BigInt(0), BigInt(0)), exsq::DomainError);
    CHECK_THROWS_AS(exsq::method2(9, BigInt(1), BigInt(2)), exsq::DomainError);
    CHECK_THROWS_AS(exsq::pipeline_n6(BigInt(1), BigInt(1)), exsq::DegenerateParameter);
}

TEST_CASE("pipelines produce distinct valid systems across parameters") {
    for (int n = 5; n <= 8; ++n) {
        for (long a = 1; a <= 6; ++a) {
            for (long b = 1; b <= 6; ++b) {
                if (exsq::gcd(BigInt(a), BigInt(b)) != BigInt(1)) continue;
                try {
                    const auto s = exsq::method2(n, BigInt(a), BigInt(b));
                    CHECK(exsq::validate_system(s, true).ok);
                } catch (const exsq::DegenerateParameter&) {
                }
            }
        }
    }
}
