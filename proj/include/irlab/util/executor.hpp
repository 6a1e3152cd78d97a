#ifndef IRLAB_UTIL_EXECUTOR_HPP
#define IRLAB_UTIL_EXECUTOR_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "irlab/util/errors.hpp"

namespace irlab::util {

// Outcome slot for one scan task. Either a value or an error message;
// a throwing task never takes down the scan.
template <class T>
struct TaskResult {
    bool ok = false;
    T value{};
    std::string error;
};

// Runs pure tasks over a worker pool and returns results ordered by task
// index, independent of completion order and of the thread count.
template <class T>
std::vector<TaskResult<T>> run_indexed(const std::vector<std::function<T()>>& tasks,
                                       int threads) {
    if (threads < 1) throw ArgumentError("run_indexed: threads must be >= 1");
    std::vector<TaskResult<T>> results(tasks.size());
    if (tasks.empty()) return results;

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                results[i].value = tasks[i]();
                results[i].ok = true;
            } catch (const std::exception& e) {
                results[i].ok = false;
                results[i].error = e.what();
            } catch (...) {
                results[i].ok = false;
                results[i].error = "unknown error";
            }
        }
    };

    const int nw = static_cast<int>(std::min<std::size_t>(threads, tasks.size()));
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

} // namespace irlab::util

#endif
