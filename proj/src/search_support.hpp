#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "burn/solvers.hpp"

namespace burn::detail {

/// Counts expanded nodes and throws BudgetExceeded past the node or time limit.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        if (++nodes_ > budget_.node_limit) throw BudgetExceeded("node limit exceeded");
        if (budget_.time_limit.count() > 0 && (nodes_ & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() - start_ > budget_.time_limit)
            throw BudgetExceeded("time limit exceeded");
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

/// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads.
/// Callers write results into pre-sized slots, so output order never
/// depends on completion order.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace burn::detail
