#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "exsq/catalog.hpp"
#include "exsq/derive.hpp"
#include "exsq/evolve.hpp"
#include "exsq/verify.hpp"
#include "goldens.hpp"

using exsq::BigInt;
using exsq::Catalog;

TEST_CASE("list_families") {
    const auto ids = Catalog::builtin().list_families();
    CHECK(ids.size() >= 3);
    CHECK(std::find(ids.begin(), ids.end(), "n5-method1-deg17") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "n6-method2-deg38") != ids.end());
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(Catalog::builtin().list_families() == ids);
}

TEST_CASE("eval_family reproduces the reference systems") {
    const auto& cat = Catalog::builtin();
    CHECK(goldens::sorted_abs(cat.eval_family("n5-method1-deg17", BigInt(2)).roots) ==
          goldens::sorted_values(goldens::kN5Method1));
    CHECK(goldens::sorted_abs(cat.eval_family("n5-method2-deg30", BigInt(1), BigInt(2)).roots) ==
          goldens::sorted_values(goldens::kN5Method2));
    CHECK(goldens::sorted_abs(cat.eval_family("n6-method2-deg38", BigInt(1), BigInt(2)).roots) ==
          goldens::sorted_values(goldens::kN6Method2));
    CHECK_THROWS_AS(cat.eval_family("no-such-family", BigInt(1)), exsq::DomainError);
    CHECK_THROWS_AS(cat.eval_family("n5-method1-deg17", BigInt(0)), exsq::DegenerateParameter);
}

TEST_CASE("records carry the stated shapes") {
    const auto& cat = Catalog::builtin();
    const auto& d17 = cat.get("n5-method1-deg17");
    CHECK(d17.n == 5);
    CHECK(d17.kind == exsq::FamilyKind::Univariate);
    CHECK(d17.certificates_derived);
    CHECK(d17.certificates.size() == 5);
    const auto& d38 = cat.get("n6-method2-deg38");
    CHECK(d38.roots.size() == 6);
    for (const auto& t : d38.roots) CHECK(t.degree() == 38);
    CHECK(cat.get("n5-method2-deg10").kind == exsq::FamilyKind::HomogeneousRepeated);
}

TEST_CASE("cross_check agrees with the generating pipelines") {
    const auto& cat = Catalog::builtin();
    for (const auto& id : cat.list_families()) {
        const auto r = cat.cross_check(id, 10);
        CHECK_MESSAGE(r.ok, id << ": " << r.summary());
        CHECK(r.summary() == "OK (10 points)");
    }
}

TEST_CASE("families evaluate to valid systems at random parameters") {
    const auto& cat = Catalog::builtin();
    std::mt19937_64 rng(71);
    for (const auto& id : cat.list_families()) {
        const auto& rec = cat.get(id);
        int evaluated = 0;
        for (int attempt = 0; attempt < 200 && evaluated < 50; ++attempt) {
            const BigInt a(static_cast<long>(1 + rng() % 60));
            const BigInt b(static_cast<long>(1 + rng() % 60));
            try {
                const auto sys = rec.kind == exsq::FamilyKind::Univariate ? cat.eval_family(id, a + BigInt(1))
                                                                          : cat.eval_family(id, a, b);
                CHECK(exsq::validate_system(sys, rec.kind != exsq::FamilyKind::HomogeneousRepeated).ok);
                ++evaluated;
            } catch (const exsq::DegenerateParameter&) {
            }
        }
        CHECK(evaluated == 50);
    }
}

TEST_CASE("catalog parsing") {
    const auto& text = exsq::builtin_catalog_text();
    CHECK(Catalog::parse(text).list_families() == Catalog::builtin().list_families());
    CHECK_THROWS_AS(Catalog::parse("bad-record 3 2 homogeneous\n(1, 2)\n"), exsq::ParseError);
    CHECK_THROWS_AS(Catalog::parse("r 1 2 unknownkind\n(1, 0, 1)\n"), exsq::ParseError);
    CHECK_THROWS_AS(Catalog::load_file("/nonexistent/catalog.txt"), exsq::ParseError);

    // A transcription slip in one coefficient is caught at load time.
    std::string corrupted(text);
    const auto pos = corrupted.find("(0, 2, 0, 128");
    REQUIRE(pos != std::string::npos);
    corrupted.replace(pos, 13, "(0, 2, 0, 129");
    CHECK_THROWS(Catalog::parse(corrupted));
}

TEST_CASE("load_file reads a catalog from disk") {
    const std::string path = "test_catalog_roundtrip.txt";
    {
        std::ofstream out(path);
        out << exsq::builtin_catalog_text();
    }
    const auto cat = Catalog::load_file(path);
    CHECK(cat.list_families() == Catalog::builtin().list_families());
    std::remove(path.c_str());
}
