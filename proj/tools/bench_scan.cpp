// Times the dimension scan with the parallel kernel against the serial
// reference path and checks that both produce identical reports.

#include "qord/angular.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double best_of(int repeat, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto start = Clock::now();
    fn();
    const std::chrono::duration<double, std::milli> took = Clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

bool reports_equal(const std::vector<qord::ShiftReport>& a,
                   const std::vector<qord::ShiftReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].dimension != b[k].dimension || !(a[k].shift == b[k].shift)) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint32_t min_dim = 2;
  std::uint32_t max_dim = 24;
  int repeat = 3;
  std::string scheme_text = "bj";

  for (int k = 1; k + 1 < argc; k += 2) {
    const std::string flag = argv[k];
    const std::string value = argv[k + 1];
    if (flag == "--min-dim") min_dim = static_cast<std::uint32_t>(std::stoul(value));
    else if (flag == "--max-dim") max_dim = static_cast<std::uint32_t>(std::stoul(value));
    else if (flag == "--repeat") repeat = std::stoi(value);
    else if (flag == "--scheme") scheme_text = value;
    else {
      std::cerr << "unknown flag " << flag << "\n";
      return 1;
    }
  }

  const auto scheme = qord::QuantizationScheme::parse(scheme_text);
  if (!scheme) {
    std::cerr << "unknown scheme " << scheme_text << "\n";
    return 1;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "scan scheme=" << scheme_text << " dims=[" << min_dim << "," << max_dim
            << "] repeat=" << repeat << " threads=" << threads << "\n";

  std::vector<qord::ShiftReport> serial_rows, parallel_rows;
  const double serial_ms = best_of(repeat, [&] {
    serial_rows = qord::conjecture_scan(*scheme, min_dim, max_dim, /*parallel=*/false);
  });
  const double parallel_ms = best_of(repeat, [&] {
    parallel_rows = qord::conjecture_scan(*scheme, min_dim, max_dim, /*parallel=*/true);
  });

  if (!reports_equal(serial_rows, parallel_rows)) {
    std::cerr << "serial and parallel scans disagree\n";
    return 1;
  }

  std::cout << "serial    best " << serial_ms << " ms\n";
  std::cout << "parallel  best " << parallel_ms << " ms\n";
  std::cout << "speedup   " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
  return 0;
}
