#include <doctest.h>

#include <random>

#include "exsq/evolve.hpp"
#include "exsq/seeds.hpp"
#include "exsq/verify.hpp"
#include "goldens.hpp"

using exsq::BigInt;
using exsq::SquareSystem;

namespace {

BigInt B(long v) { return BigInt(v); }

SquareSystem roots_only(const std::vector<BigInt>& roots) {
    SquareSystem s;
    s.roots = roots;
    return s;
}

}  // namespace

TEST_CASE("validate_chain examples") {
    CHECK(exsq::validate_chain(exsq::seed_n5_simple(B(1))).ok);
    auto bad = exsq::seed_n5_simple(B(1));
    bad.pairs[4].y += B(1);
    const auto r = exsq::validate_chain(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.bad_pairs == std::vector<std::size_t>{4});
    CHECK(r.summary().find("5") != std::string::npos);
    CHECK(exsq::validate_chain(exsq::lemma3_special(2, B(3))).ok);
}

TEST_CASE("validate_system on reference roots") {
    CHECK(exsq::validate_system(roots_only(goldens::sorted_values(goldens::kN5Method1)), true).ok);
    CHECK(exsq::validate_system(roots_only(goldens::sorted_values(goldens::kN8)), true).ok);
    CHECK(exsq::validate_system(roots_only(goldens::sorted_values(goldens::kN7)), true).ok);
    const auto all_two = exsq::system_from_chain(exsq::lemma3_special(2, B(1)));
    CHECK(exsq::validate_system(all_two, false).ok);
    const auto strict = exsq::validate_system(all_two, true);
    CHECK_FALSE(strict.ok);
    CHECK_FALSE(strict.distinct);
    CHECK(strict.all_squares);
}

TEST_CASE("validate_system pinpoints a planted fault") {
    auto roots = goldens::sorted_values(goldens::kN5Method2);
    roots[2] += B(1);
    const auto r = exsq::validate_system(roots_only(roots), true);
    CHECK_FALSE(r.ok);
    CHECK(r.entries[2].is_square);
    for (std::size_t i : {0, 1, 3, 4}) CHECK_FALSE(r.entries[i].is_square);
    CHECK(exsq::validate_system(roots_only({B(0), B(0)}), false).nonzero == false);
}

TEST_CASE("validate_system checks supplied certificates and s") {
    SquareSystem s = exsq::system_from_chain(exsq::seed_n6(B(2)));
    CHECK(exsq::validate_system(s, false).ok);
    s.certificates[0] += B(1);
    CHECK_FALSE(exsq::validate_system(s, false).certificates_ok);
    s = exsq::system_from_chain(exsq::seed_n6(B(2)));
    s.s += B(1);
    CHECK_FALSE(exsq::validate_system(s, false).s_ok);
}

TEST_CASE("system_from_chain and chain_from_system") {
    const auto chain = exsq::seed_n6(B(2));
    const auto sys = exsq::system_from_chain(chain);
    for (const auto& r : sys.roots) CHECK(r.sign() > 0);
    const auto back = exsq::chain_from_system(sys);
    CHECK(exsq::system_from_chain(back) == sys);

    const auto lemma = exsq::chain_from_system(roots_only({B(240), B(240), B(240), B(33), B(156)}));
    CHECK(lemma.s == B(198225));
    CHECK(lemma.s - B(240 * 240) == B(140625));
    CHECK(lemma.pairs[0].y == B(375));
    CHECK(exsq::validate_chain(lemma).ok);

    try {
        (void)exsq::chain_from_system(roots_only({B(1), B(2), B(3)}));
        FAIL("expected DomainError");
    } catch (const exsq::DomainError& e) {
        const std::string what = e.what();
        CHECK(what.find("13") != std::string::npos);
        CHECK(what.find("10") != std::string::npos);
        CHECK(what.find("5") != std::string::npos);
    }
}

TEST_CASE("chain and system round trip on random valid systems") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        const long t = 2 + static_cast<long>(rng() % 50);
        const int n = 3 + static_cast<int>(rng() % 8);
        const auto sys = exsq::system_from_chain(exsq::lemma3_general(n, B(t)));
        CHECK(exsq::system_from_chain(exsq::chain_from_system(sys)) == sys);
    }
}

TEST_CASE("reduce_system removes the common factor") {
    SquareSystem s = exsq::system_from_chain(exsq::lemma3_general(5, B(2)));
    SquareSystem scaled = s;
    for (auto& r : scaled.roots) r *= B(6);
    for (auto& c : scaled.certificates) c *= B(6);
    scaled.s *= B(36);
    const auto red = exsq::reduce_system(scaled);
    CHECK(red.reduced);
    CHECK(red.roots == exsq::reduce_system(s).roots);
    CHECK(exsq::validate_system(red, false).ok);
}
