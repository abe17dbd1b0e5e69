#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exsq/chain.hpp"
#include "exsq/homog.hpp"

namespace exsq {

enum class FamilyKind {
    Univariate,           ///< forms read at (t, 1)
    Homogeneous,          ///< binary forms in a parameter pair
    HomogeneousRepeated,  ///< binary forms whose roots repeat up to sign
};

struct FamilyRecord {
    std::string id;
    int n = 0;
    int degree = 0;
    FamilyKind kind = FamilyKind::Homogeneous;
    std::vector<HomogPoly> roots;
    std::vector<HomogPoly> certificates;
    /// Certificates were computed at load as square roots of the exclusion sums.
    bool certificates_derived = false;
};

struct CrossCheckReport {
    std::string id;
    bool ok = false;
    int points = 0;
    std::vector<std::string> skipped;
    std::vector<std::string> mismatches;

    /// "OK (10 points)" or a listing of the mismatches.
    std::string summary() const;
};

/// Read-only collection of published parametric families.
class Catalog {
public:
    /// The families shipped with the library.
    static const Catalog& builtin();
    /// Parses catalog text. Throws ParseError with the offending line number.
    static Catalog parse(std::string_view text, const std::string& source = "catalog");
    static Catalog load_file(const std::string& path);

    /// Family ids in sorted order.
    std::vector<std::string> list_families() const;
    /// Throws DomainError for an unknown id.
    const FamilyRecord& get(const std::string& id) const;

    /// Evaluates every entry at (a, b), or at t = a for univariate families, then
    /// gcd-reduces and validates. Throws DegenerateParameter when a root vanishes or,
    /// for families that promise distinct roots, two roots coincide.
    SquareSystem eval_family(const std::string& id, const BigInt& a, const BigInt& b = BigInt(1)) const;

    /// Compares the family with the pipeline that generates it at `points`
    /// nondegenerate parameter values, up to gcd, sign and order.
    CrossCheckReport cross_check(const std::string& id, int points = 10) const;

private:
    std::vector<FamilyRecord> records_;
};

/// The catalog text compiled into the library.
std::string_view builtin_catalog_text();

}  // namespace exsq
