#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exsq/chain.hpp"
#include "exsq/errors.hpp"
#include "exsq/verify.hpp"

namespace exsq {

template <class T>
struct TransformCoefficients {
    T P;  ///< sum of x_i y_i
    T S;  ///< sum of x_i^2
};

template <class T>
TransformCoefficients<T> coefficients(const ChainSolution<T>& sol) {
    TransformCoefficients<T> c{};
    for (const auto& p : sol.pairs) {
        c.P += p.x * p.y;
        c.S += p.x * p.x;
    }
    return c;
}

/// X_i = (n-2)S x_i - 2P y_i, Y_i = 2P x_i + (n-2)S y_i; no common factor removed.
/// Throws ContractViolation when the input is not a chain solution.
template <class T>
ChainSolution<T> transform(const ChainSolution<T>& sol) {
    if (!is_valid_chain(sol)) throw ContractViolation("transform input is not a chain solution");
    const auto c = coefficients(sol);
    const T a = T(BigInt(static_cast<long>(sol.n()) - 2)) * c.S;
    const T b = T(BigInt(2)) * c.P;
    ChainSolution<T> out;
    out.pairs.reserve(sol.n());
    for (const auto& p : sol.pairs) out.pairs.push_back({a * p.x - b * p.y, b * p.x + a * p.y});
    out.s = (a * a + b * b) * sol.s;
    return out;
}

/// Recovers the preimage of transform(sol) given the coefficients of sol.
/// Throws NotExact when the input is not such an image.
template <class T>
ChainSolution<T> inverse_transform(const ChainSolution<T>& image, const TransformCoefficients<T>& c) {
    const T a = T(BigInt(static_cast<long>(image.n()) - 2)) * c.S;
    const T b = T(BigInt(2)) * c.P;
    const T d = a * a + b * b;
    if (d.is_zero()) throw DomainError("4P^2 + (n-2)^2 S^2 vanishes");
    ChainSolution<T> out;
    try {
        for (const auto& p : image.pairs) {
            out.pairs.push_back({divexact(a * p.x + b * p.y, d), divexact(a * p.y - b * p.x, d)});
        }
        out.s = divexact(image.s, d);
    } catch (const NotExact& e) {
        throw NotExact(std::string("not a transform image: ") + e.what());
    }
    return out;
}

template <class T>
ChainSolution<T> flip(ChainSolution<T> sol, const std::vector<std::size_t>& indices) {
    for (auto i : indices) {
        if (i >= sol.n()) throw ContractViolation("flip index " + std::to_string(i) + " out of range");
        sol.pairs[i].x = -sol.pairs[i].x;
    }
    return sol;
}

/// Divides every x_i, y_i by their joint content and s by its square.
template <class T>
ChainSolution<T> reduce(ChainSolution<T> sol) {
    BigInt g(0);
    for (const auto& p : sol.pairs) {
        g = gcd(g, content(p.x));
        g = gcd(g, content(p.y));
    }
    if (g.is_zero() || g == BigInt(1)) return sol;
    for (auto& p : sol.pairs) {
        p.x = divexact(p.x, g);
        p.y = divexact(p.y, g);
    }
    sol.s = divexact(sol.s, g * g);
    return sol;
}

/// Makes the leading coefficient (the sign, for numbers) of every x_i positive.
template <class T>
ChainSolution<T> normalize_signs(ChainSolution<T> sol) {
    for (auto& p : sol.pairs) {
        if (lead_sign(p.x) < 0) p.x = -p.x;
    }
    return sol;
}

/// Index sets negated before successive transforms.
struct FlipSchedule {
    std::vector<std::vector<std::size_t>> rounds;
};

template <class T>
struct DistinctifyResult {
    ChainSolution<T> chain;
    /// Flips applied before each transform, one entry per round.
    std::vector<std::vector<std::size_t>> rounds;
};

/// Roots nonzero and pairwise distinct up to sign.
template <class T>
bool has_distinct_roots(const ChainSolution<T>& sol) {
    for (std::size_t i = 0; i < sol.n(); ++i) {
        if (sol.pairs[i].x.is_zero()) return false;
        for (std::size_t j = i + 1; j < sol.n(); ++j) {
            if (sol.pairs[i].x == sol.pairs[j].x || sol.pairs[i].x == -sol.pairs[j].x) return false;
        }
    }
    return true;
}

/// Text such as "{1,2,3} {4,5}" listing classes of roots equal up to sign (1-based),
/// and zero roots as "zero{6}".
template <class T>
std::string multiplicity_structure(const ChainSolution<T>& sol) {
    std::string out;
    std::vector<bool> seen(sol.n(), false);
    for (std::size_t i = 0; i < sol.n(); ++i) {
        if (seen[i]) continue;
        if (sol.pairs[i].x.is_zero()) {
            out += (out.empty() ? "" : " ") + std::string("zero{") + std::to_string(i + 1) + "}";
            continue;
        }
        std::string cls = std::to_string(i + 1);
        std::size_t count = 1;
        for (std::size_t j = i + 1; j < sol.n(); ++j) {
            if (sol.pairs[i].x == sol.pairs[j].x || sol.pairs[i].x == -sol.pairs[j].x) {
                seen[j] = true;
                cls += "," + std::to_string(j + 1);
                ++count;
            }
        }
        if (count > 1) out += (out.empty() ? "" : " ") + ("{" + cls + "}");
    }
    return out.empty() ? "all distinct" : out;
}

namespace detail {

/// Flips for one round of the binary schedule.
template <class T>
std::vector<std::size_t> binary_round(const ChainSolution<T>& sol) {
    const std::size_t n = sol.n();
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> placed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (placed[i]) continue;
        blocks.push_back({i});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!placed[j] && sol.pairs[j] == sol.pairs[i]) {
                placed[j] = true;
                blocks.back().push_back(j);
            }
        }
    }
    std::set<std::size_t> flips;
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        const auto& rep = sol.pairs[block.front()];
        bool mirrored = false;
        for (std::size_t j = 0; j < n && !mirrored; ++j) {
            mirrored = sol.pairs[j].x == -rep.x && sol.pairs[j].y == rep.y && !rep.x.is_zero();
        }
        // A mirror block already differs in sign; the next transform separates it.
        if (mirrored) continue;
        for (std::size_t k = block.size() - block.size() / 2; k < block.size(); ++k) flips.insert(block[k]);
    }
    // (x, y) and (-x, -y) stay opposite under every transform; break the tie.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = sol.pairs[i];
            const auto& b = sol.pairs[j];
            if (a.x.is_zero() || !(a.x == -b.x) || !(a.y == -b.y)) continue;
            if (flips.count(i) == 0 && flips.count(j) == 0) flips.insert(j);
        }
    }
    return {flips.begin(), flips.end()};
}

/// Last member of the first class of roots equal up to sign.
template <class T>
std::optional<std::size_t> first_repeat(const ChainSolution<T>& sol) {
    for (std::size_t i = 0; i < sol.n(); ++i) {
        for (std::size_t j = sol.n(); j-- > i + 1;) {
            if (sol.pairs[i].x == sol.pairs[j].x || sol.pairs[i].x == -sol.pairs[j].x) return j;
        }
    }
    return std::nullopt;
}

template <class T>
ChainSolution<T> step(const ChainSolution<T>& sol, const std::vector<std::size_t>& flips, bool normalize) {
    auto next = reduce(transform(flip(sol, flips)));
    return normalize ? normalize_signs(std::move(next)) : next;
}

}  // namespace detail

/// Runs sign flips plus transforms until every root is distinct up to sign.
/// Without a schedule, the binary schedule halves each block of identical pairs
/// per round (normalizing signs after each transform) and falls back to one flip
/// per round. With a schedule, its rounds are applied verbatim.
/// Throws DistinctifyFailure when the rounds run out.
template <class T>
DistinctifyResult<T> distinctify_chain(const ChainSolution<T>& sol, const std::optional<FlipSchedule>& schedule) {
    if (!is_valid_chain(sol)) throw ContractViolation("distinctify input is not a chain solution");
    DistinctifyResult<T> r{sol, {}};
    if (schedule) {
        for (const auto& round : schedule->rounds) {
            if (round.empty()) throw ContractViolation("flip schedule rounds must be nonempty");
            r.chain = detail::step(r.chain, round, false);
            r.rounds.push_back(round);
        }
        if (!has_distinct_roots(r.chain)) {
            throw DistinctifyFailure("flip schedule exhausted", multiplicity_structure(r.chain));
        }
        return r;
    }
    const std::size_t binary_cap = 2 * sol.n() + 2;
    while (!has_distinct_roots(r.chain) && r.rounds.size() < binary_cap) {
        auto flips = detail::binary_round(r.chain);
        r.chain = detail::step(r.chain, flips, true);
        r.rounds.push_back(std::move(flips));
    }
    const std::size_t fallback_cap = r.rounds.size() + sol.n();
    while (!has_distinct_roots(r.chain) && r.rounds.size() < fallback_cap) {
        std::vector<std::size_t> flips;
        if (auto j = detail::first_repeat(r.chain)) flips.push_back(*j);
        r.chain = detail::step(r.chain, flips, true);
        r.rounds.push_back(std::move(flips));
    }
    if (!has_distinct_roots(r.chain)) {
        throw DistinctifyFailure("no distinct system after " + std::to_string(r.rounds.size()) + " rounds",
                                 multiplicity_structure(r.chain));
    }
    return r;
}

/// Numeric distinctify: runs the schedule and returns the gcd-reduced system.
SquareSystem distinctify(const ChainSolution<BigInt>& sol, const std::optional<FlipSchedule>& schedule);

/// x_i(t), y_i(t) and s(t).
ChainSolution<BigInt> evaluate(const ChainSolution<IntPoly>& sol, const BigInt& t);

/// The starting chain used for n terms: the simple five-term seed for n = 5,
/// the six-term seed for n = 6, and lemma3_general otherwise.
ChainSolution<IntPoly> method1_seed(int n);

/// Parametric distinct family in t for n terms. Cached per n; thread-safe.
const DistinctifyResult<IntPoly>& method1_family(int n);

/// The family evaluated at t, gcd-reduced and validated.
/// Throws DegenerateParameter when a root vanishes or two roots coincide at t.
SquareSystem method1(int n, const BigInt& t);

}  // namespace exsq
