#include "exsq/evolve.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "exsq/seeds.hpp"

namespace exsq {

SquareSystem distinctify(const ChainSolution<BigInt>& sol, const std::optional<FlipSchedule>& schedule) {
    auto result = distinctify_chain(sol, schedule);
    return reduce_system(system_from_chain(result.chain));
}

ChainSolution<BigInt> evaluate(const ChainSolution<IntPoly>& sol, const BigInt& t) {
    ChainSolution<BigInt> out;
    out.pairs.reserve(sol.n());
    for (const auto& p : sol.pairs) out.pairs.push_back({p.x(t), p.y(t)});
    out.s = sol.s(t);
    return out;
}

namespace {

template <class T>
ChainSolution<T> seed_for(int n, const T& t) {
    if (n == 5) return seed_n5_simple(t);
    if (n == 6) return seed_n6(t);
    return lemma3_general(n, t);
}

struct FamilyEntry {
    std::once_flag once;
    DistinctifyResult<IntPoly> value;
};

}  // namespace

ChainSolution<IntPoly> method1_seed(int n) {
    if (n < 3) throw DomainError("method 1 needs n >= 3, got " + std::to_string(n));
    return seed_for(n, IntPoly::x());
}

const DistinctifyResult<IntPoly>& method1_family(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FamilyEntry>> cache;
    FamilyEntry* entry = nullptr;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<FamilyEntry>();
        entry = slot.get();
    }
    std::call_once(entry->once, [&] { entry->value = distinctify_chain(method1_seed(n), std::nullopt); });
    return entry->value;
}

SquareSystem method1(int n, const BigInt& t) {
    if (n < 3) throw DomainError("method 1 needs n >= 3, got " + std::to_string(n));
    // Rejects the seed's own degenerate values of t with a named quantity.
    (void)seed_for(n, t);
    const auto& family = method1_family(n);
    auto chain = evaluate(family.chain, t);
    for (std::size_t i = 0; i < chain.n(); ++i) {
        if (chain.pairs[i].x.is_zero()) {
            throw DegenerateParameter("x_" + std::to_string(i + 1), "root vanishes at t = " + t.to_string());
        }
    }
    auto sys = reduce_system(system_from_chain(chain));
    auto report = validate_system(sys, true);
    if (!report.distinct) {
        const auto [i, j] = report.repeats.front();
        throw DegenerateParameter("x_" + std::to_string(i + 1) + " = x_" + std::to_string(j + 1),
                                  "roots coincide at t = " + t.to_string());
    }
    if (!report.ok) throw ContractViolation("method 1 produced an invalid system: " + report.summary());
    return sys;
}

}  // namespace exsq
