#pragma once

#include <functional>
#include <vector>

namespace gms {

// Runs the tasks on up to `workers` threads (serially when workers <= 1).
// The first exception thrown by any task is rethrown after all threads join.
void run_parallel(int workers, const std::vector<std::function<void()>>& tasks);

// Worker-count resolution: an explicit positive flag wins, then the
// GMSTAB_WORKERS environment variable, then 1.
int resolve_workers(int flag_value);

}  // namespace gms
