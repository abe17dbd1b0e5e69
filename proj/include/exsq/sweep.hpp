#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exsq/chain.hpp"

namespace exsq {

/// One parameter point: t for method 1 (second = 1), (p1, p2) or (q1, q2) for method 2.
struct SweepPoint {
    BigInt first;
    BigInt second;
};

struct SweepItem {
    SweepPoint point;
    std::optional<SquareSystem> system;
    /// Why the point produced no system.
    std::string skip_reason;
    /// The system passed the independent validator with distinct nonzero roots.
    bool verified = false;
    /// Something other than a degenerate parameter went wrong at this point.
    bool failed = false;
};

/// t = from..to inclusive.
std::vector<SweepPoint> method1_points(const BigInt& from, const BigInt& to);
/// Coprime (a, b) with a, b >= 1 and a + b <= max_sum, ordered by a + b then a.
std::vector<SweepPoint> method2_points(long max_sum);

/// Generates and re-validates a system per point on `threads` workers. Items reach
/// `sink` in point order whatever the thread count.
void sweep(int n, int method, const std::vector<SweepPoint>& points, unsigned threads,
           const std::function<void(const SweepItem&)>& sink);

}  // namespace exsq
