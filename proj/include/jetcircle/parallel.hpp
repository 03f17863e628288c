/*
   Copyright 2026 The jetcircle Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JETCIRCLE_PARALLEL_HPP
#define JETCIRCLE_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jetcircle {

// Worker count from JETCIRCLE_WORKERS, else 1.
inline unsigned default_workers() {
    if (const char* s = std::getenv("JETCIRCLE_WORKERS")) {
        const long v = std::strtol(s, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

// Runs fn(shard) for shard in [0, shards). Results must be written to per-shard slots
// and reduced by the caller in shard order, so the outcome is independent of workers.
template <class Fn>
void run_shards(std::size_t shards, unsigned workers, Fn&& fn) {
    if (workers <= 1 || shards <= 1) {
        for (std::size_t s = 0; s < shards; ++s) fn(s);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers && w < shards; ++w)
        pool.emplace_back([&] {
            for (std::size_t s; (s = next.fetch_add(1)) < shards;) {
                try {
                    fn(s);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace jetcircle

#endif
