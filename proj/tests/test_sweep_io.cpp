#include <doctest.h>

#include <stdexcept>

#include "exsq/derive.hpp"
#include "exsq/evolve.hpp"
#include "exsq/io.hpp"
#include "exsq/seeds.hpp"
#include "exsq/sweep.hpp"
#include "exsq/verify.hpp"

using exsq::BigInt;

namespace {

std::vector<std::string> run(int n, int method, const std::vector<exsq::SweepPoint>& pts, unsigned threads,
                             int* verified = nullptr, int* skipped = nullptr, int* failed = nullptr) {
    std::vector<std::string> lines;
    exsq::sweep(n, method, pts, threads, [&](const exsq::SweepItem& item) {
        if (item.system) {
            lines.push_back(exsq::to_json(*item.system));
            if (verified && item.verified) ++*verified;
        } else if (item.failed) {
            if (failed) ++*failed;
        } else if (skipped) {
            ++*skipped;
        }
    });
    return lines;
}

}  // namespace

TEST_CASE("json round trip") {
    const auto sys = exsq::method2(6, BigInt(1), BigInt(2));
    const std::string text = exsq::to_json(sys);
    CHECK(text.rfind("{\"n\":6,\"roots\":[\"", 0) == 0);
    CHECK(text.find('\n') == std::string::npos);
    CHECK(exsq::system_from_json(text) == sys);
}

TEST_CASE("json input variants and errors") {
    const auto s = exsq::system_from_json(R"({"n":3,"roots":[1,"2",3]})");
    CHECK(s.roots == std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(3)});
    CHECK(s.certificates.empty());
    CHECK_THROWS_AS(exsq::system_from_json("{"), exsq::ParseError);
    CHECK_THROWS_AS(exsq::system_from_json(R"({"n":2,"roots":["1","2","3"]})"), exsq::ParseError);
    CHECK_THROWS_AS(exsq::system_from_json(R"({"n":1,"roots":["x"]})"), exsq::ParseError);
    CHECK_THROWS_AS(exsq::system_from_json(R"([1,2])"), exsq::ParseError);
}

TEST_CASE("sweep points") {
    CHECK(exsq::method1_points(BigInt(2), BigInt(20)).size() == 19);
    CHECK(exsq::method1_points(BigInt(5), BigInt(4)).empty());
    const auto pts = exsq::method2_points(10);
    for (const auto& p : pts) {
        CHECK(exsq::gcd(p.first, p.second) == BigInt(1));
        CHECK(p.first + p.second <= BigInt(10));
    }
    CHECK(pts.front().first == BigInt(1));
    CHECK(pts.front().second == BigInt(1));
}

TEST_CASE("sweep examples") {
    int verified = 0, skipped = 0, failed = 0;
    const auto m1 = run(5, 1, exsq::method1_points(BigInt(2), BigInt(20)), 4, &verified, &skipped, &failed);
    CHECK(m1.size() == 19);
    CHECK(verified == 19);
    CHECK(failed == 0);

    verified = skipped = failed = 0;
    const auto m2 = run(6, 2, exsq::method2_points(10), 4, &verified, &skipped, &failed);
    CHECK(failed == 0);
    CHECK(verified == static_cast<int>(m2.size()));
    CHECK(verified + skipped == static_cast<int>(exsq::method2_points(10).size()));

    CHECK(run(5, 1, {}, 4).empty());
}

TEST_CASE("sweep output does not depend on the thread count") {
    const auto pts = exsq::method2_points(12);
    const auto one = run(7, 2, pts, 1);
    CHECK(run(7, 2, pts, 3) == one);
    CHECK(run(7, 2, pts, 8) == one);
}

TEST_CASE("degenerate points are skipped with a reason") {
    std::vector<std::string> reasons;
    exsq::sweep(5, 1, exsq::method1_points(BigInt(-1), BigInt(2)), 2, [&](const exsq::SweepItem& item) {
        if (!item.system) {
            CHECK_FALSE(item.failed);
            reasons.push_back(item.skip_reason);
        }
    });
    CHECK(reasons.size() == 3);
    for (const auto& r : reasons) CHECK(r.find("degenerate") != std::string::npos);
}

TEST_CASE("a throwing sink stops the sweep cleanly") {
    int calls = 0;
    CHECK_THROWS_AS(exsq::sweep(5, 1, exsq::method1_points(BigInt(2), BigInt(40)), 4,
                                [&](const exsq::SweepItem&) {
                                    if (++calls == 3) throw std::runtime_error("stop");
                                }),
                    std::runtime_error);
    CHECK(calls == 3);
}
