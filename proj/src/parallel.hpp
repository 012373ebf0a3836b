/*
   Copyright 2026 The ntag Authors

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

#ifndef NTAG_SRC_PARALLEL_HPP
#define NTAG_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace ntag::detail {

inline unsigned worker_count(unsigned requested) {
    unsigned t = requested ? requested : std::thread::hardware_concurrency();
    return std::max(1u, std::min(t, 64u));
}

/// Calls job(c) for every c < chunks, spread over up to `threads` workers.
template <class Job>
void run_chunks(std::uint64_t chunks, unsigned threads, Job&& job) {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            job(c);
        }
    };
    std::vector<std::thread> pool;
    const unsigned t = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    for (unsigned i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace ntag::detail

#endif
