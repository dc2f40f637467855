// Times the OpenMP kernels against their serial paths on a few fixed
// problems. Usage: fcube_bench [repeats]
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "fcube/digit_set.hpp"
#include "fcube/intersection_graph.hpp"
#include "fcube/oracle.hpp"
#include "fcube/parallel.hpp"

using namespace fcube;

namespace {

DigitSet carpet() {
  std::vector<Digit> d;
  for (Coord x = 0; x < 3; ++x)
    for (Coord y = 0; y < 3; ++y)
      if (x != 1 || y != 1) d.push_back({x, y});
  return DigitSet::make(2, 3, d);
}

DigitSet menger() {
  std::vector<Digit> d;
  for (Coord x = 0; x < 3; ++x)
    for (Coord y = 0; y < 3; ++y)
      for (Coord z = 0; z < 3; ++z)
        if ((x == 1) + (y == 1) + (z == 1) < 2) d.push_back({x, y, z});
  return DigitSet::make(3, 3, d);
}

// Runs fn `repeats` times and prints the mean time with the last result.
template <typename Fn>
void bench(const std::string& name, int repeats, Fn fn) {
  std::uint64_t result = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) result = fn();
  const auto stop = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
  std::cout << std::left << std::setw(44) << name << std::right << std::setw(12) << std::fixed
            << std::setprecision(3) << ms << " ms   result " << result << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  if (auto threads = thread_limit_from_env()) set_thread_limit(*threads);
  std::cout << "threads: " << max_threads() << ", repeats: " << repeats << "\n";

  const IntersectionProblem carpet_self(carpet(), carpet());
  const FaceVector right({1, 0});
  const oracle::OracleOptions serial{kDefaultMaxCells, Execution::serial};
  const oracle::OracleOptions parallel{kDefaultMaxCells, Execution::parallel};
  for (int p : {5, 7}) {
    const std::string tag = "carpet (1,0) p=" + std::to_string(p);
    bench("cells reference  " + tag, repeats, [&] { return oracle::adjacent_cell_count_reference(carpet_self, right, p); });
    bench("cells serial     " + tag, repeats, [&] { return oracle::adjacent_cell_count(carpet_self, right, p, serial); });
    bench("cells parallel   " + tag, repeats, [&] { return oracle::adjacent_cell_count(carpet_self, right, p, parallel); });
  }

  const IntersectionProblem full(DigitSet::full(2, 4), DigitSet::full(2, 4));
  const FaceVector zero = FaceVector::zero(2);
  bench("cells serial     full 4x4 p=5", repeats, [&] { return oracle::adjacent_cell_count(full, zero, 5, serial); });
  bench("cells parallel   full 4x4 p=5", repeats, [&] { return oracle::adjacent_cell_count(full, zero, 5, parallel); });

  auto edges = [](const IntersectionProblem& P, Execution exec) {
    return static_cast<std::uint64_t>(StructureGraph::build(P, exec).summary().edges);
  };
  const IntersectionProblem big(DigitSet::full(6, 4), DigitSet::full(6, 4));
  bench("graph serial     full k=6 n=4", repeats, [&] { return edges(big, Execution::serial); });
  bench("graph parallel   full k=6 n=4", repeats, [&] { return edges(big, Execution::parallel); });

  const IntersectionProblem menger_self(menger(), menger());
  bench("graph serial     menger self", repeats, [&] { return edges(menger_self, Execution::serial); });
  bench("graph parallel   menger self", repeats, [&] { return edges(menger_self, Execution::parallel); });
  return 0;
}
