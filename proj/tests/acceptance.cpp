// Runs every acceptance criterion on the canned corpus; one line per criterion.

#include <chrono>
#include <cstdio>

#include "kanforge/verify.hpp"

using namespace kanforge;

namespace {

// Literal expected values; the checks themselves compare against computed oracles.
constexpr std::size_t kCoskeletonLevel3 = 8;

bool literal_constants(const std::string& name, const Check& c, std::string& why) {
  if (name == "coskeleton") {
    auto n = c.report.at(0).at("level3").get<std::size_t>();
    if (n != kCoskeletonLevel3) {
      why = "level 3 has " + std::to_string(n) + " elements, expected " + std::to_string(kCoskeletonLevel3);
      return false;
    }
  }
  if (name == "simplex-counts") {
    auto cases = verify::expected_count_cases();
    if (cases.size() != 2 || cases[0].second.second != std::vector<std::size_t>{1, 3, 2} ||
        cases[1].second.second != std::vector<std::size_t>{1, 6, 8, 3}) {
      why = "expected counts differ from (1,3,2) and (1,6,8,3)";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0, index = 0;
  for (auto& k : verify::acceptance()) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    Check c(k.name);
    try {
      c = k.run();
      ok = c.passed && literal_constants(k.name, c, why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d] %-4s %-20s %s (%lld ms)%s%s\n", index, ok ? "PASS" : "FAIL", k.name.c_str(), k.summary.c_str(),
                static_cast<long long>(ms), why.empty() ? "" : ": ", why.c_str());
    if (verbose || !ok)
      for (auto& l : c.lines) std::printf("       %s\n", l.c_str());
    failed += !ok;
  }
  std::printf("%d of %d acceptance criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
