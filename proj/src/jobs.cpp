#include "gmstab/jobs.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace gms {

void run_parallel(int workers, const std::vector<std::function<void()>>& tasks) {
    if (tasks.empty()) return;
    if (workers > static_cast<int>(tasks.size())) workers = static_cast<int>(tasks.size());
    if (workers <= 1) {
        for (const auto& t : tasks) t();
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                tasks[i]();
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("GMSTAB_WORKERS")) {
        try {
            int v = std::stoi(std::string(env));
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace gms
