#pragma once

#include <optional>

namespace fcube {

// Selects between the OpenMP kernels and their single-threaded reference
// path. Both produce identical results.
enum class Execution { serial, parallel };

// Reads FRACTAL_CUBE_THREADS. Returns nullopt when unset; throws InputError
// when set to anything but an integer >= 1.
std::optional<int> thread_limit_from_env();

// Caps the OpenMP team size for subsequent parallel regions.
void set_thread_limit(int threads);

int max_threads();

}  // namespace fcube
