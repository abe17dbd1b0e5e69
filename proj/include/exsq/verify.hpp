#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exsq/chain.hpp"

namespace exsq {

struct ChainReport {
    bool ok = false;
    /// x_i^2 + y_i^2 per index, recomputed.
    std::vector<BigInt> pair_norms;
    /// Indices (0-based) whose pair norm differs from s.
    std::vector<std::size_t> bad_pairs;
    BigInt s;
    BigInt sum_of_squares;
    bool sum_ok = false;

    std::string summary() const;
};

/// Checks x_i^2 + y_i^2 = s for every i and sum of x_i^2 = s.
ChainReport validate_chain(const ChainSolution<BigInt>& sol);

/// The same identities for any ring carrier (used on parametric chains).
template <class T>
bool is_valid_chain(const ChainSolution<T>& sol) {
    if (sol.pairs.empty()) return false;
    T sum{};
    for (const auto& p : sol.pairs) {
        if (!(p.x * p.x + p.y * p.y == sol.s)) return false;
        sum += p.x * p.x;
    }
    return sum == sol.s;
}

struct SystemEntry {
    BigInt root;
    /// Sum of the other n-1 squares, recomputed from the roots alone.
    BigInt exclusion_sum;
    /// floor(sqrt(exclusion_sum)).
    BigInt isqrt_value;
    bool is_square = false;
    /// Supplied certificate squares to exclusion_sum (true when none supplied).
    bool certificate_ok = true;
};

struct SystemReport {
    bool ok = false;
    bool all_squares = false;
    bool nonzero = false;
    bool distinct = false;
    bool certificates_ok = false;
    bool s_ok = false;
    BigInt total;
    std::vector<SystemEntry> entries;
    /// Index pairs (i, j), i < j, with |root_i| = |root_j|.
    std::vector<std::pair<std::size_t, std::size_t>> repeats;

    /// One line per problem; empty when ok.
    std::vector<std::string> problems() const;
    std::string summary() const;
};

/// Independent oracle: recomputes every exclusion sum from the roots and tests it
/// with isqrt. Certificates and s, when present, are checked against those sums.
SystemReport validate_system(const SquareSystem& sys, bool require_distinct);

/// Roots x_i and certificates y_i of a valid chain, made nonnegative.
SquareSystem system_from_chain(const ChainSolution<BigInt>& sol);
/// Chain with y_i = sqrt(total - x_i^2). Throws DomainError if some sum is not a square.
ChainSolution<BigInt> chain_from_system(const SquareSystem& sys);

/// Divides roots, certificates and s by the common factor (s by its square).
SquareSystem reduce_system(SquareSystem sys);

}  // namespace exsq
