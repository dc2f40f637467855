#include "fcube/parallel.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "fcube/errors.hpp"

namespace fcube {

std::optional<int> thread_limit_from_env() {
  const char* raw = std::getenv("FRACTAL_CUBE_THREADS");
  if (raw == nullptr) return std::nullopt;
  std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw InputError("FRACTAL_CUBE_THREADS must be an integer >= 1, got '" + std::string(text) + "'");
  }
  return value;
}

void set_thread_limit(int threads) {
  if (threads < 1) throw InputError("thread limit must be at least 1");
  omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace fcube
