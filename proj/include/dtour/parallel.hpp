#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace dtour {

/// Resolves a requested worker count: 0 means "all hardware threads".
inline int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Splits [0, total) into `threads` contiguous chunks, evaluates
/// `work(begin, end)` on each chunk and returns the partial results in chunk
/// order. Merging them in that order makes the outcome independent of the
/// thread count as long as the merge is associative.
template <typename Result, typename Work>
std::vector<Result> parallel_chunks(std::uint64_t total, int threads, Work work)
{
    threads = resolve_threads(threads);
    const auto chunks = static_cast<std::uint64_t>(std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads))));
    std::vector<Result> results(chunks);
    auto bounds = [&](std::uint64_t i) { return total * i / chunks; };
    if (chunks == 1) {
        results[0] = work(std::uint64_t{0}, total);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::uint64_t i = 0; i < chunks; ++i)
        pool.emplace_back([&, i] { results[i] = work(bounds(i), bounds(i + 1)); });
    for (auto& t : pool)
        t.join();
    return results;
}

}  // namespace dtour
