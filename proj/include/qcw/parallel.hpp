// Copyright 2026 The qcw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCW_PARALLEL_HPP
#define QCW_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qcw {

/// Worker count: explicit value if nonzero, else QCW_WORKERS, else 1.
inline size_t resolve_workers(size_t requested) {
    if (requested > 0) return requested;
    if (const char *env = std::getenv("QCW_WORKERS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<size_t>(v);
        } catch (...) {
        }
    }
    return 1;
}

/// Runs fn(i) for i in [0, count). Results must be written to per-index slots
/// so the outcome does not depend on scheduling. The first exception is rethrown.
template <typename Fn>
void parallel_for(size_t count, size_t workers, Fn &&fn) {
    workers = std::min(resolve_workers(workers), count == 0 ? size_t{1} : count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < workers; t++) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto &th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qcw

#endif
