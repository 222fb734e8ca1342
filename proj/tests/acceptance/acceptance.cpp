#include <chrono>
#include <cstdio>
#include <string>

#include "iwafitt/selftest.hpp"

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  const auto start = std::chrono::steady_clock::now();
  const auto results = iwafitt::selftest::run(filter);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  for (const auto& r : results) {
    std::printf("criterion %2d %s  %s (%.2fs): %s\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.detail.c_str());
    all = all && r.pass;
  }
  if (filter.empty()) {
    const bool fast = total < 120.0;
    std::printf("criterion 11 %s  full suite under 120 s (%.2fs)\n", fast ? "PASS" : "FAIL", total);
    all = all && fast;
  }
  return all ? 0 : 1;
}
