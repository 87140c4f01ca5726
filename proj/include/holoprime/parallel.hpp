#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace holoprime {

/// Evaluate fn(0..count-1) across hardware threads and collect results in
/// index order. fn must be safe to run concurrently (the library's values are
/// immutable, so passing prebuilt tables/chains is fine). Storage is one byte
/// per slot; vector<bool> would race on packed bits.
inline std::vector<char> parallel_map_bool(int count, const std::function<bool(int)>& fn) {
    std::vector<char> out(count, 0);
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i) ? 1 : 0;
        return out;
    }
    unsigned workers = hw < unsigned(count) ? hw : unsigned(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = int(w); i < count; i += int(workers)) out[i] = fn(i) ? 1 : 0;
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

inline bool all_true(const std::vector<char>& v) {
    for (char c : v)
        if (!c) return false;
    return true;
}

}  // namespace holoprime
