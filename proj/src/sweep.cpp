#include "exsq/sweep.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "exsq/derive.hpp"
#include "exsq/evolve.hpp"
#include "exsq/verify.hpp"

namespace exsq {

std::vector<SweepPoint> method1_points(const BigInt& from, const BigInt& to) {
    std::vector<SweepPoint> out;
    for (BigInt t = from; t <= to; t += BigInt(1)) out.push_back({t, BigInt(1)});
    return out;
}

std::vector<SweepPoint> method2_points(long max_sum) {
    std::vector<SweepPoint> out;
    for (long sum = 2; sum <= max_sum; ++sum) {
        for (long a = 1; a < sum; ++a) {
            if (gcd(BigInt(a), BigInt(sum - a)) == BigInt(1)) out.push_back({BigInt(a), BigInt(sum - a)});
        }
    }
    return out;
}

namespace {

SweepItem run_point(int n, int method, const SweepPoint& pt) {
    SweepItem item{pt, std::nullopt, {}, false, false};
    try {
        SquareSystem sys = method == 1 ? method1(n, pt.first) : method2(n, pt.first, pt.second);
        auto report = validate_system(sys, true);
        if (!report.ok) {
            item.failed = true;
            item.skip_reason = "validator rejected the system: " + report.summary();
            return item;
        }
        item.verified = true;
        item.system = std::move(sys);
    } catch (const DegenerateParameter& e) {
        item.skip_reason = e.what();
    } catch (const std::exception& e) {
        item.failed = true;
        item.skip_reason = e.what();
    }
    return item;
}

}  // namespace

void sweep(int n, int method, const std::vector<SweepPoint>& points, unsigned threads,
           const std::function<void(const SweepItem&)>& sink) {
    if (method != 1 && method != 2) throw DomainError("method must be 1 or 2");
    if (method == 1) (void)method1_family(n);  // build the shared family once, up front
    if (points.empty()) return;
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));

    std::vector<std::optional<SweepItem>> slots(points.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable ready;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= points.size()) return;
            SweepItem item = run_point(n, method, points[k]);
            {
                std::lock_guard<std::mutex> lock(mu);
                slots[k] = std::move(item);
            }
            ready.notify_one();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);

    // Emit in order as each prefix completes.
    try {
        for (std::size_t k = 0; k < points.size(); ++k) {
            std::unique_lock<std::mutex> lock(mu);
            ready.wait(lock, [&] { return slots[k].has_value(); });
            SweepItem item = std::move(*slots[k]);
            slots[k].reset();
            lock.unlock();
            sink(item);
        }
    } catch (...) {
        next.store(points.size());
        for (auto& t : pool) t.join();
        throw;
    }
    for (auto& t : pool) t.join();
}

}  // namespace exsq
