// Serial reference versus OpenMP sweep kernels. Checks that both paths give
// identical rows and reports wall time for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "sgsta/analysis.hpp"

using namespace sgsta;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_rows(const Sweep& a, const Sweep& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].abscissa != b.rows[i].abscissa || a.rows[i].diverged != b.rows[i].diverged) return false;
    for (std::size_t k = 0; k < a.rows[i].values.size(); ++k) {
      const double x = a.rows[i].values[k];
      const double y = b.rows[i].values[k];
      if (!(x == y || (x != x && y != y))) return false;
    }
  }
  return true;
}

void compare(const std::string& name, const std::function<Sweep(Execution)>& kernel) {
  Sweep serial, parallel;
  const double ts = seconds([&] { serial = kernel(Execution::serial); });
  const double tp = seconds([&] { parallel = kernel(Execution::parallel); });
  std::printf("%-16s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n", name.c_str(), ts, tp, ts / tp,
              same_rows(serial, parallel) ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  const DesignParams params;
  compare("sweep-standard", [](Execution e) { return sweep_standard(log_grid(0.01, 10.0, 200), 1e6, 4000, e); });
  compare("resources", [&](Execution e) { return resource_curve(default_time_grid(), params, e); });
  compare("resilience", [&](Execution e) { return resilience_sweep(params, linear_grid(-0.1, 0.1, 21), 10000, e); });
  return 0;
}
